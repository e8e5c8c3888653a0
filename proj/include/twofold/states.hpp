#pragma once

#include <array>

#include "twofold/cartan.hpp"

namespace twofold {

/// Normalized particle-antiparticle pair (Φ+, Φ-).
struct PairState {
  SectorVector plus{Sector::Plus, CVec2::Zero()};
  SectorVector minus{Sector::Minus, CVec2::Zero()};

  const SectorVector& piece(Sector s) const { return s == Sector::Plus ? plus : minus; }
  CVec4 full() const;
};

/// Scales each piece to unit Hilbert norm. Throws ZeroVector.
PairState make_pair_state(const CVec2& plusRaw, const CVec2& minusRaw);

enum class Kernel { Delta, Metric };

/// w_(μ) = |Φ^λ K_λμ|² with K = Δ± or g±; both kernels agree.
std::array<double, 2> born_probabilities(const PairState& st, Sector s, Kernel kernel = Kernel::Delta);
std::array<double, 2> born_probabilities(const SectorVector& v, Kernel kernel = Kernel::Delta);

/// Block-diagonal unitary evolution, proper times carried as labels only.
struct EvolutionOperator {
  CMat2 uPlus = CMat2::Identity();
  CMat2 uMinus = CMat2::Identity();
  double tau0 = 0.0;
  double tau = 0.0;

  const CMat2& block(Sector s) const { return s == Sector::Plus ? uPlus : uMinus; }
  CMat4 matrix() const { return block_diag(uPlus, uMinus); }
};

/// Throws NotUnitary if either block fails u u† = I.
EvolutionOperator make_evolution(const CMat2& uPlus, const CMat2& uMinus, double tau0 = 0.0,
                                 double tau = 0.0, double tol = default_tolerance);

/// Whether the 4×4 matrix sits in SU(2,2) ∩ U(4). Reported, never enforced.
CheckResult intersection_membership(const EvolutionOperator& u, double tol = default_tolerance);

/// Φ^μ(τ) = Φ^λ(τ0) u_λ^μ; the basis stays fixed.
PairState evolve(const PairState& st, const EvolutionOperator& u);

/// Block-wise product: applying `first` then `second`.
EvolutionOperator then(const EvolutionOperator& first, const EvolutionOperator& second);

}  // namespace twofold
