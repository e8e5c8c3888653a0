#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "twofold/cartan.hpp"
#include "twofold/states.hpp"

namespace twofold {

enum class ObservableKind { Charge, Spin, Polarization, EnergyI, EnergyII, EnergyTotal, Helicity, Custom };
enum class EnergyBranch { I, II };

const char* to_string(ObservableKind kind) noexcept;

/// Pair of sector restrictions. Pseudo-Hermitian means each intrinsic block
/// is Hermitian, since g± = ±I commutes with everything.
struct Observable {
  Restriction plus{Sector::Plus, CMat2::Zero(), {}};
  Restriction minus{Sector::Minus, CMat2::Zero(), {}};
  ObservableKind kind = ObservableKind::Custom;
  double param = 0.0;

  const Restriction& restriction(Sector s) const { return s == Sector::Plus ? plus : minus; }
  CMat4 covariant4() const { return block_diag(plus.covariant(), minus.covariant()); }
  CMat4 intrinsic4() const { return block_diag(plus.intrinsic, minus.intrinsic); }
};

/// Throws NotPseudoHermitian unless both blocks are Hermitian to `tol`.
Observable make_observable(const CMat2& plusIntrinsic, const CMat2& minusIntrinsic,
                           ObservableKind kind = ObservableKind::Custom, double param = 0.0,
                           double tol = default_tolerance);
/// Same, from covariant entries A_μν.
Observable observable_from_covariant(const CMat2& plusCov, const CMat2& minusCov,
                                     ObservableKind kind = ObservableKind::Custom, double param = 0.0,
                                     double tol = default_tolerance);

Observable make_charge(double q);
Observable make_spin();
Observable make_polarization();
/// Throws NonpositiveEnergy for E <= 0.
Observable make_energy(double E, EnergyBranch branch);
/// H = H_I - H_II.
Observable make_energy_total(double E);

double pseudo_hermiticity_residual(const Restriction& r);

/// Φ^μ A_μν conj(Φ^ν). Throws NotPseudoHermitian.
double expectation(const Restriction& a, const SectorVector& v, double tol = default_tolerance);
double expectation(const Observable& a, const PairState& st, Sector s, double tol = default_tolerance);

struct SpectralDecomposition {
  Sector sector = Sector::Plus;
  std::array<double, 2> eigenvalues{};      // descending
  std::array<SectorVector, 2> eigenrows{};  // <e_μ| A = a_μ <e_μ|
  std::array<Restriction, 2> dyads{};       // |e_μ><e_μ|

  /// ± Σ |e_μ> a_μ <e_μ| as an intrinsic matrix.
  CMat2 reconstruct() const;
};

SpectralDecomposition spectral_decomposition(const Observable& a, Sector s, double tol = default_tolerance);
SpectralDecomposition spectral_decomposition(const Restriction& a, double tol = default_tolerance);

/// Charge conjugation as intrinsic cross-sector maps. Templated on the
/// scalar so the identity ledger can run in exact rational arithmetic.
template <class Scalar>
struct BasicChargeConjugation {
  Mat<Scalar, 2> qPlus;   // C+ -> C-
  Mat<Scalar, 2> qMinus;  // C- -> C+

  const Mat<Scalar, 2>& map(Sector from) const { return from == Sector::Plus ? qPlus : qMinus; }

  /// Q_μν = Q_μ^λ g∓_λν.
  Mat<Scalar, 2> covariant(Sector from) const { return map(from) * sector_metric<Scalar>(other(from)); }

  Mat<Scalar, 4> covariant4() const {
    Mat<Scalar, 4> m = Mat<Scalar, 4>::Zero();
    m.template topRightCorner<2, 2>() = covariant(Sector::Plus);
    m.template bottomLeftCorner<2, 2>() = covariant(Sector::Minus);
    return m;
  }

  /// ★ of the map out of `from`: g∓ Q† g±, a map back into `from`.
  Mat<Scalar, 2> star(Sector from) const {
    return sector_metric<Scalar>(other(from)) * map(from).adjoint() * sector_metric<Scalar>(from);
  }
};

using ChargeConjugation = BasicChargeConjugation<cplx>;

template <class Scalar = cplx>
BasicChargeConjugation<Scalar> make_charge_conjugation() {
  Mat<Scalar, 2> x = Mat<Scalar, 2>::Zero();
  x(0, 1) = Scalar(1);
  x(1, 0) = Scalar(1);
  return {x, x};
}

namespace detail {
using std::abs;
template <class Scalar>
using abs_t = decltype(abs(std::declval<Scalar>()));
}  // namespace detail

template <class Real>
struct LedgerEntry {
  std::string id;
  std::string statement;
  Real residual{};
  bool pass = false;
};

/// Charge-conjugation identity ledger for a charge q, evaluated on the
/// given particle rows (antiparticle rows follow by Φ- = Φ+ Q+).
template <class Scalar, class Real = detail::abs_t<Scalar>>
std::vector<LedgerEntry<Real>> conjugation_ledger(const BasicChargeConjugation<Scalar>& c, const Scalar& q,
                                                  const std::vector<RowVec<Scalar, 2>>& plusRows,
                                                  const Real& tol) {
  using M2 = Mat<Scalar, 2>;
  using M4 = Mat<Scalar, 4>;
  const M2 I = M2::Identity();
  std::vector<LedgerEntry<Real>> out;
  auto add = [&](std::string id, std::string statement, Real r) {
    const bool pass = !(tol < r);
    out.push_back({std::move(id), std::move(statement), r, pass});
  };
  auto worse = [](Real a, Real b) { return a < b ? b : a; };

  for (Sector s : {Sector::Plus, Sector::Minus}) {
    const Sector t = other(s);
    const std::string tag = std::string(".") + to_string(s);
    const M2 gs = sector_metric<Scalar>(s);
    const M2 gt = sector_metric<Scalar>(t);

    // Mutual inverses, intrinsic and via covariant entries with g* contractions.
    const M2 prod = c.map(s) * c.map(t);
    const M2 viaCov = c.covariant(s) * gt * c.covariant(t) * gs;
    add("conjugation.inverse" + tag, "C(s) C(-s) = I", worse(max_abs_diff(prod, I), max_abs_diff(viaCov, I)));

    // Covariant entries of the round trip are the sector metric.
    add("conjugation.roundtrip_entries" + tag, "<e|C(s) C(-s)||e>_g(s) = g(s)", max_abs_diff(prod * gs, gs));

    // Charge sandwich Q(s) 𝔔(s) Q(-s) 𝔔(-s) has covariant entries -q² g(s).
    const M2 Qs = I * (Scalar(sign(s)) * q);
    const M2 Qt = I * (Scalar(sign(t)) * q);
    const M2 sandwich = Qs * c.map(s) * Qt * c.map(t);
    add("conjugation.charge_sandwich" + tag, "<e|Q(s) C(s) Q(-s) C(-s)||e>_g(s) = -q^2 g(s)", max_abs_diff(sandwich * gs, gs * (-q * q)));

    // Pseudo-antiHermiticity: 𝔔(s)★ = -𝔔(-s) = -𝔔(s)^-1.
    const M2 st = c.star(s);
    add("conjugation.pseudo_anti_hermitian" + tag, "C(s)* = -C(-s), C(s) C(s)* = -I",
        worse(max_abs_diff(st, -c.map(t)), max_abs_diff(c.map(s) * st, -I)));

    // Entries <e|𝔔 𝔔★||e>_g(s) = -g(s) = g(-s).
    const M2 e48 = c.map(s) * st * gs;
    add("conjugation.star_product_entries" + tag, "<e|C(s) C(s)*||e>_g(s) = -g(s) = g(-s)",
        worse(max_abs_diff(e48, -gs), max_abs_diff(e48, gt)));
  }

  // Covariant blocks are opposite, and the transported pair keeps its g-norm.
  add("conjugation.opposite_blocks", "C(+)_mn = -C(-)_mn",
      max_abs_diff(c.covariant(Sector::Plus), -c.covariant(Sector::Minus)));
  Real transport{0};
  const M4 Q4 = c.covariant4();
  const M4 g = metric_g<Scalar>();
  for (const auto& phi : plusRows) {
    RowVec<Scalar, 4> full;
    full << phi, phi * c.qPlus;
    const Scalar lhs = (full * Q4 * full.adjoint())(0, 0);
    const Scalar rhs = (full * g * full.adjoint())(0, 0);
    using std::abs;
    const Real d = abs(lhs - rhs);
    transport = worse(transport, d);
  }
  add("conjugation.transport_norm", "<Phi|C||Phi>_g = <Phi|Phi>_g", transport);
  return out;
}

/// Double-precision ledger on a fixed set of rows, as CheckResults.
std::vector<CheckResult> conjugation_identities(const ChargeConjugation& c, double q = 1.0,
                                                double tol = default_tolerance);

/// Sector-local involution that swaps the two basis rows.
struct VirtualParticleOp {
  Sector sector = Sector::Plus;
  CMat2 intrinsic = CMat2::Zero();

  Restriction restriction() const { return Restriction{sector, intrinsic, "virtual"}; }
  CMat2 covariant() const { return intrinsic * sector_metric(sector); }
  /// Zero-padded 4×4 covariant matrix.
  CMat4 covariant4() const;
};

VirtualParticleOp make_virtual(Sector s);

/// <e_0|v Ω v||e_0> = <e_1|Ω||e_1> and the reverse, for a restriction Ω.
double virtual_swap_residual(const VirtualParticleOp& v, const Restriction& omega);

/// Row-level checks of the conjugation and virtual-particle energy/spin
/// reversal schemes for energy E.
std::vector<CheckResult> energy_sign_schemes(double E, double tol = default_tolerance);

/// Local change of basis <𝔢_μ| = <e_μ| u± with Gram 𝔊 = u† g u.
struct BasisChange {
  CMat2 uPlus = CMat2::Identity();
  CMat2 uMinus = CMat2::Identity();
  CMat2 gramPlus = CMat2::Identity();
  CMat2 gramMinus = -CMat2::Identity();

  const CMat2& u(Sector s) const { return s == Sector::Plus ? uPlus : uMinus; }
  const CMat2& gram(Sector s) const { return s == Sector::Plus ? gramPlus : gramMinus; }
};

/// Throws NotUnitary.
BasisChange make_basis_change(const CMat2& uPlus, const CMat2& uMinus, double tol = default_tolerance);

struct BasisChangeResult {
  Observable transformed;  // a = u† A u
  CMat2 gramPlus;
  CMat2 gramMinus;
};

BasisChangeResult apply_basis_change(const Observable& a, const BasisChange& bc);

/// <𝔢_μ|a||𝔢_ν>_𝔊 = (u a 𝔊 u†)_μν for an operator a given in the new basis.
CMat2 new_basis_entries(const CMat2& aIntrinsic, const CMat2& u, const CMat2& gram);

enum class HelicityBase { Spin, Polarization };

/// h = H† Σ H or H† Π H per sector; rows 0/1 of the h-basis are left/right.
Observable make_helicity(const BasisChange& bc, HelicityBase base);

enum class Interchange { FermionGetsPi, BosonGetsSigma };

/// Π for fermions in the 𝔭-basis (P = bc) or Σ for bosons in the 𝔷-basis.
Observable interchange_spin_polarization(const BasisChange& bc, Interchange direction);

struct SectorPair {
  CMat2 plus;
  CMat2 minus;
  const CMat2& at(Sector s) const { return s == Sector::Plus ? plus : minus; }
};

/// Per-sector intrinsic commutators [A±, B±].
SectorPair commutator(const Observable& a, const Observable& b);
CMat2 commutator(const Restriction& a, const Restriction& b);

}  // namespace twofold
