#include "twofold/states.hpp"

namespace twofold {

CVec4 PairState::full() const { return embed(plus) + embed(minus); }

namespace {

SectorVector normalized(const CVec2& raw, Sector s) {
  require_finite(raw, "pair state piece");
  const double n = raw.norm();
  if (n == 0.0) throw Error(ErrorKind::ZeroVector, std::string("make_pair_state: ") + to_string(s) + " piece");
  return SectorVector{s, raw / n};
}

void require_unitary(const CMat2& u, const char* name, double tol) {
  require_finite(u, name);
  const double r = unitarity_residual(u);
  if (r > tol) throw Error(ErrorKind::NotUnitary, std::string(name) + " residual " + std::to_string(r));
}

}  // namespace

PairState make_pair_state(const CVec2& plusRaw, const CVec2& minusRaw) {
  return PairState{normalized(plusRaw, Sector::Plus), normalized(minusRaw, Sector::Minus)};
}

std::array<double, 2> born_probabilities(const SectorVector& v, Kernel kernel) {
  const CMat2 k = kernel == Kernel::Delta ? sector_delta(v.sector) : sector_metric(v.sector);
  const CVec2 amp = v.components * k;
  return {std::norm(amp(0)), std::norm(amp(1))};
}

std::array<double, 2> born_probabilities(const PairState& st, Sector s, Kernel kernel) {
  return born_probabilities(st.piece(s), kernel);
}

EvolutionOperator make_evolution(const CMat2& uPlus, const CMat2& uMinus, double tau0, double tau,
                                 double tol) {
  require_unitary(uPlus, "evolution block plus", tol);
  require_unitary(uMinus, "evolution block minus", tol);
  return EvolutionOperator{uPlus, uMinus, tau0, tau};
}

CheckResult intersection_membership(const EvolutionOperator& u, double tol) {
  const CMat4 m = u.matrix();
  const CMat4 g = metric_g();
  const double pseudo = max_abs_diff(m * g * m.adjoint(), g);
  const double uni = unitarity_residual(m);
  const double unimod = std::abs(m.determinant() - 1.0);
  return make_check("evolution.intersection", "U g U^dagger = g, U U^dagger = I, det U = 1", std::max({pseudo, uni, unimod}), tol);
}

PairState evolve(const PairState& st, const EvolutionOperator& u) {
  require_unitary(u.uPlus, "evolution block plus", default_tolerance);
  require_unitary(u.uMinus, "evolution block minus", default_tolerance);
  return PairState{SectorVector{Sector::Plus, st.plus.components * u.uPlus},
                   SectorVector{Sector::Minus, st.minus.components * u.uMinus}};
}

EvolutionOperator then(const EvolutionOperator& first, const EvolutionOperator& second) {
  return EvolutionOperator{first.uPlus * second.uPlus, first.uMinus * second.uMinus, first.tau0, second.tau};
}

}  // namespace twofold
