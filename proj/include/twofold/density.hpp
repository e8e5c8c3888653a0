#pragma once

#include <vector>

#include "twofold/observables.hpp"
#include "twofold/states.hpp"

namespace twofold {

/// Sector density; `intrinsic` holds ρ_μ^ν, whose trace is +1 in both
/// sectors. Covariant entries carry the sector sign.
struct DensityOperator {
  Sector sector = Sector::Plus;
  CMat2 intrinsic = CMat2::Zero();
  bool pure = false;

  CMat2 covariant() const { return intrinsic * sector_metric(sector); }
  Restriction restriction() const { return Restriction{sector, intrinsic, "density"}; }
};

/// Validated constructor: Hermitian, unit trace, no eigenvalue below -tol.
/// Throws InvalidDensity.
DensityOperator make_density(Sector s, const CMat2& intrinsic, double tol = default_tolerance);

/// ρ = g±|Φ><Φ|. Throws NotNormalized.
DensityOperator density_from_state(const SectorVector& v, double tol = default_tolerance);
DensityOperator density_from_state(const PairState& st, Sector s, double tol = default_tolerance);

/// ½ Σ |e_μ> g*^μν <e_ν|.
DensityOperator maximally_mixed(Sector s);

/// Entropy in bits from the intrinsic spectrum. Throws InvalidDensity.
double entropy(const DensityOperator& d, double tol = default_tolerance);
double entropy(const CMatX& intrinsic, double tol = default_tolerance);

/// ρ(τ) = U† ρ(τ0) U per sector. Throws NotUnitary.
DensityOperator evolve_density(const DensityOperator& d, const EvolutionOperator& u);

/// Tr(g ρ A) for a density and observable restriction in the same sector.
double density_expectation(const DensityOperator& d, const Restriction& a);

/// Product state ordered particles first; amplitude has factor 0 as the
/// most significant index.
struct CompositeState {
  int nPlus = 0;
  int nMinus = 0;
  std::vector<SectorVector> factors;
  CVecX amplitude;

  int size() const { return static_cast<int>(factors.size()); }
  /// Entry C^{i0 i1 ...} for binary indices.
  cplx component(const std::vector<int>& indices) const;
};

/// Throws OrderingViolation, NotNormalized.
CompositeState compose(const std::vector<SectorVector>& factors, double tol = default_tolerance);

/// Product of per-factor expectations. Throws ArityMismatch.
cplx composite_expectation(const CompositeState& cs, const std::vector<Observable>& obs);

/// Expectation of A at slot j with identities elsewhere. Throws IndexOutOfRange.
cplx embed_single(const CompositeState& cs, int j, const Observable& a);

/// Sign (-1)^{N-} or (-1)^{N- - 1} predicted for a single-slot embedding.
int embed_sign(const CompositeState& cs, int j);

/// Kronecker product of covariant g± blocks over the factors.
CMatX composite_metric(const CompositeState& cs);

struct CompositeDensity {
  std::vector<DensityOperator> factors;
  double scale = 1.0;  // accumulated partial-trace factors

  int size() const { return static_cast<int>(factors.size()); }
  CMatX intrinsic_matrix() const;
  CMatX covariant_matrix() const;
};

CompositeDensity composite_density(const CompositeState& cs);
/// scale × Π Tr ρ_k.
double composite_trace(const CompositeDensity& cd);
/// <Ψ|ρ||Ψ>_g = (-1)^{N-}.
double composite_signed_value(const CompositeState& cs);

struct PartialTrace {
  CompositeDensity reduced;
  double factor = 1.0;            // <Ψ|g||Ψ>_g of the removed slot
  double raw_trace = 1.0;         // trace including the factor
  double normalized_trace = 1.0;  // trace of the remaining factors alone
};

/// Drops a slot. Throws LastFactor, IndexOutOfRange.
PartialTrace partial_trace(const CompositeDensity& cd, int slot);

/// Standard partial trace of a dense bipartite matrix on dims (dA, dB).
CMatX partial_trace_dense(const CMatX& rho, int dA, int dB, bool keepFirst);

struct EntropyReport {
  double entropy_a = 0.0;
  double entropy_b = 0.0;
  double relative_ab = 0.0;       // S(a||b), +inf when supp a ⊄ supp b
  double mutual_a = 0.0;          // I(first : rest) for a
  double conditional_a = 0.0;     // S(first | rest) for a
  bool subadditive = true;        // S(a) <= S(first) + S(rest)
  bool concave = true;            // S(½a + ½b) >= ½S(a) + ½S(b)
};

/// Throws ShapeMismatch when factor structures differ.
EntropyReport relative_mutual_entropies(const CompositeDensity& a, const CompositeDensity& b,
                                        double tol = default_tolerance);

/// S(a||b) for dense intrinsic density matrices.
double relative_entropy(const CMatX& a, const CMatX& b, double tol = default_tolerance);

}  // namespace twofold
