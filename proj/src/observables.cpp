#include "twofold/observables.hpp"

#include <numbers>

namespace twofold {

const char* to_string(ObservableKind kind) noexcept {
  switch (kind) {
    case ObservableKind::Charge: return "charge";
    case ObservableKind::Spin: return "spin";
    case ObservableKind::Polarization: return "polarization";
    case ObservableKind::EnergyI: return "energy_I";
    case ObservableKind::EnergyII: return "energy_II";
    case ObservableKind::EnergyTotal: return "energy";
    case ObservableKind::Helicity: return "helicity";
    case ObservableKind::Custom: return "custom";
  }
  return "custom";
}

namespace {

CMat2 diag2(double a, double b) {
  CMat2 m = CMat2::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

CMat2 pauli_x() {
  CMat2 x = CMat2::Zero();
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return x;
}

CVec2 basis_row(int mu) {
  CVec2 e = CVec2::Zero();
  e(mu) = 1.0;
  return e;
}

void require_unitary(const CMat2& u, const char* name, double tol) {
  const double r = unitarity_residual(u);
  if (r > tol) throw Error(ErrorKind::NotUnitary, std::string(name) + " residual " + std::to_string(r));
}

}  // namespace

double pseudo_hermiticity_residual(const Restriction& r) {
  return max_abs_diff(star(r).intrinsic, r.intrinsic);
}

Observable make_observable(const CMat2& plusIntrinsic, const CMat2& minusIntrinsic, ObservableKind kind,
                           double param, double tol) {
  require_finite(plusIntrinsic, "observable plus block");
  require_finite(minusIntrinsic, "observable minus block");
  Observable o{Restriction{Sector::Plus, plusIntrinsic, to_string(kind)},
               Restriction{Sector::Minus, minusIntrinsic, to_string(kind)}, kind, param};
  for (Sector s : {Sector::Plus, Sector::Minus}) {
    const double r = pseudo_hermiticity_residual(o.restriction(s));
    if (r > tol)
      throw Error(ErrorKind::NotPseudoHermitian,
                  std::string("observable ") + to_string(s) + " block residual " + std::to_string(r));
  }
  return o;
}

Observable observable_from_covariant(const CMat2& plusCov, const CMat2& minusCov, ObservableKind kind,
                                     double param, double tol) {
  return make_observable(plusCov * sector_metric(Sector::Plus), minusCov * sector_metric(Sector::Minus), kind,
                         param, tol);
}

Observable make_charge(double q) {
  return observable_from_covariant(diag2(q, q), diag2(q, q), ObservableKind::Charge, q);
}

Observable make_spin() {
  return observable_from_covariant(diag2(0.5, -0.5), diag2(-0.5, 0.5), ObservableKind::Spin);
}

Observable make_polarization() {
  return observable_from_covariant(diag2(1.0, -1.0), diag2(-1.0, 1.0), ObservableKind::Polarization);
}

Observable make_energy(double E, EnergyBranch branch) {
  if (!(E > 0.0)) throw Error(ErrorKind::NonpositiveEnergy, "make_energy: E = " + std::to_string(E));
  const double s = branch == EnergyBranch::I ? 1.0 : -1.0;
  const CMat2 cov = diag2(s * E, -s * E);
  return observable_from_covariant(cov, cov, branch == EnergyBranch::I ? ObservableKind::EnergyI
                                                                       : ObservableKind::EnergyII,
                                   E);
}

Observable make_energy_total(double E) {
  const Observable hI = make_energy(E, EnergyBranch::I);
  const Observable hII = make_energy(E, EnergyBranch::II);
  return make_observable(hI.plus.intrinsic - hII.plus.intrinsic, hI.minus.intrinsic - hII.minus.intrinsic,
                         ObservableKind::EnergyTotal, E);
}

double expectation(const Restriction& a, const SectorVector& v, double tol) {
  if (a.sector != v.sector) throw Error(ErrorKind::SectorMismatch, "expectation");
  const double r = pseudo_hermiticity_residual(a);
  if (r > tol) throw Error(ErrorKind::NotPseudoHermitian, "expectation: residual " + std::to_string(r));
  return (v.components * a.covariant() * v.components.adjoint())(0, 0).real();
}

double expectation(const Observable& a, const PairState& st, Sector s, double tol) {
  return expectation(a.restriction(s), st.piece(s), tol);
}

CMat2 SpectralDecomposition::reconstruct() const {
  CMat2 m = CMat2::Zero();
  for (int k = 0; k < 2; ++k) m += eigenvalues[k] * dyads[k].intrinsic;
  return m * double(sign(sector));
}

SpectralDecomposition spectral_decomposition(const Restriction& a, double tol) {
  const double r = pseudo_hermiticity_residual(a);
  if (r > tol)
    throw Error(ErrorKind::NotPseudoHermitian, "spectral_decomposition: residual " + std::to_string(r));
  const auto eig = eig_hermitian(a.intrinsic, tol);
  SpectralDecomposition out;
  out.sector = a.sector;
  for (int k = 0; k < 2; ++k) {
    out.eigenvalues[k] = eig.values(k);
    // Column eigenvector c of A gives the row c† with c† A = a c†.
    out.eigenrows[k] = SectorVector{a.sector, eig.vectors.col(k).adjoint()};
    out.dyads[k] = outer_projector(out.eigenrows[k]);
  }
  return out;
}

SpectralDecomposition spectral_decomposition(const Observable& a, Sector s, double tol) {
  return spectral_decomposition(a.restriction(s), tol);
}

std::vector<CheckResult> conjugation_identities(const ChargeConjugation& c, double q, double tol) {
  const double h = std::numbers::sqrt2 / 2.0;
  const std::vector<CVec2> rows = {CVec2(1.0, 0.0), CVec2(0.0, 1.0), CVec2(h, cplx(0.0, h)),
                                   CVec2(0.6, cplx(0.0, 0.8))};
  std::vector<CheckResult> out;
  for (const auto& e : conjugation_ledger(c, cplx(q, 0.0), rows, tol))
    out.push_back(CheckResult{e.id, e.statement, e.residual, e.pass});
  return out;
}

CMat4 VirtualParticleOp::covariant4() const {
  CMat4 m = CMat4::Zero();
  if (sector == Sector::Plus)
    m.topLeftCorner<2, 2>() = covariant();
  else
    m.bottomRightCorner<2, 2>() = covariant();
  return m;
}

VirtualParticleOp make_virtual(Sector s) { return VirtualParticleOp{s, pauli_x()}; }

double virtual_swap_residual(const VirtualParticleOp& v, const Restriction& omega) {
  if (v.sector != omega.sector) throw Error(ErrorKind::SectorMismatch, "virtual_swap_residual");
  const CMat2 swapped = Restriction{v.sector, v.intrinsic * omega.intrinsic * v.intrinsic, {}}.covariant();
  const CMat2 cov = omega.covariant();
  return std::max(std::abs(swapped(0, 0) - cov(1, 1)), std::abs(swapped(1, 1) - cov(0, 0)));
}

std::vector<CheckResult> energy_sign_schemes(double E, double tol) {
  const Observable hI = make_energy(E, EnergyBranch::I);
  const Observable hII = make_energy(E, EnergyBranch::II);
  const ChargeConjugation c = make_charge_conjugation();
  std::vector<CheckResult> out;

  // <e_μ(s)| C(s) H_II(-s) = ∓E <e_(1-μ)(-s)| with the upper sign for μ = 0.
  double conj = 0.0;
  for (Sector s : {Sector::Plus, Sector::Minus})
    for (int mu = 0; mu < 2; ++mu) {
      const double value = (mu == 0 ? -1.0 : 1.0) * sign(s) * E;
      const CVec2 lhs = basis_row(mu) * c.map(s) * hII.restriction(other(s)).intrinsic;
      conj = std::max(conj, max_abs_diff(lhs, value * basis_row(1 - mu)));
    }
  out.push_back(make_check("schemes.conjugation_energy", "<e0(s)|C(s) H_II(-s) = -s E <e1(-s)|", conj, tol));

  // Virtual maps: positive-energy rows of H_I and H_II go to -E on the swapped row.
  const VirtualParticleOp vp = make_virtual(Sector::Plus);
  const VirtualParticleOp vm = make_virtual(Sector::Minus);
  double virt = 0.0;
  virt = std::max(virt, max_abs_diff(basis_row(0) * vp.intrinsic * hI.plus.intrinsic, -E * basis_row(1)));
  virt = std::max(virt, max_abs_diff(basis_row(1) * vm.intrinsic * hI.minus.intrinsic, -E * basis_row(0)));
  virt = std::max(virt, max_abs_diff(basis_row(1) * vp.intrinsic * hII.plus.intrinsic, -E * basis_row(0)));
  virt = std::max(virt, max_abs_diff(basis_row(0) * vm.intrinsic * hII.minus.intrinsic, -E * basis_row(1)));
  // The +E eigenrows those maps start from.
  virt = std::max(virt, max_abs_diff(basis_row(0) * hI.plus.intrinsic, E * basis_row(0)));
  virt = std::max(virt, max_abs_diff(basis_row(1) * hI.minus.intrinsic, E * basis_row(1)));
  virt = std::max(virt, max_abs_diff(basis_row(1) * hII.plus.intrinsic, E * basis_row(1)));
  virt = std::max(virt, max_abs_diff(basis_row(0) * hII.minus.intrinsic, E * basis_row(0)));
  out.push_back(make_check("schemes.virtual_energy", "<e(s)|v H = -E <e'(s)| on +E rows", virt, tol));

  // Both maps reverse spin and polarization values.
  double flip = 0.0;
  for (const Observable& o : {make_spin(), make_polarization()})
    for (Sector s : {Sector::Plus, Sector::Minus}) {
      const CMat2& a = o.restriction(s).intrinsic;
      flip = std::max(flip, max_abs_diff(pauli_x() * a * pauli_x(), -a));
      flip = std::max(flip, max_abs_diff(c.map(s) * o.restriction(other(s)).intrinsic * c.map(other(s)), -a));
    }
  out.push_back(make_check("schemes.spin_reversal", "v A v = -A, C(s) A(-s) C(-s) = -A(s)", flip, tol));
  return out;
}

BasisChange make_basis_change(const CMat2& uPlus, const CMat2& uMinus, double tol) {
  require_finite(uPlus, "basis change plus");
  require_finite(uMinus, "basis change minus");
  require_unitary(uPlus, "basis change plus", tol);
  require_unitary(uMinus, "basis change minus", tol);
  return BasisChange{uPlus, uMinus, uPlus.adjoint() * sector_metric(Sector::Plus) * uPlus,
                     uMinus.adjoint() * sector_metric(Sector::Minus) * uMinus};
}

CMat2 new_basis_entries(const CMat2& aIntrinsic, const CMat2& u, const CMat2& gram) {
  return u * aIntrinsic * gram * u.adjoint();
}

BasisChangeResult apply_basis_change(const Observable& a, const BasisChange& bc) {
  require_unitary(bc.uPlus, "basis change plus", default_tolerance);
  require_unitary(bc.uMinus, "basis change minus", default_tolerance);
  const CMat2 ap = bc.uPlus.adjoint() * a.plus.intrinsic * bc.uPlus;
  const CMat2 am = bc.uMinus.adjoint() * a.minus.intrinsic * bc.uMinus;
  return BasisChangeResult{make_observable(ap, am, a.kind, a.param), bc.gramPlus, bc.gramMinus};
}

Observable make_helicity(const BasisChange& bc, HelicityBase base) {
  const Observable b = base == HelicityBase::Spin ? make_spin() : make_polarization();
  Observable h = apply_basis_change(b, bc).transformed;
  h.kind = ObservableKind::Helicity;
  h.plus.label = h.minus.label = "helicity";
  return h;
}

Observable interchange_spin_polarization(const BasisChange& bc, Interchange direction) {
  const Observable b = direction == Interchange::FermionGetsPi ? make_polarization() : make_spin();
  return apply_basis_change(b, bc).transformed;
}

CMat2 commutator(const Restriction& a, const Restriction& b) {
  if (a.sector != b.sector) throw Error(ErrorKind::SectorMismatch, "commutator");
  return a.intrinsic * b.intrinsic - b.intrinsic * a.intrinsic;
}

SectorPair commutator(const Observable& a, const Observable& b) {
  return SectorPair{commutator(a.plus, b.plus), commutator(a.minus, b.minus)};
}

}  // namespace twofold
