#include "twofold/measurement.hpp"

namespace twofold {

namespace {

void require_outcome(int outcome) {
  if (outcome != 0 && outcome != 1)
    throw Error(ErrorKind::IndexOutOfRange, "measurement outcome " + std::to_string(outcome));
}

}  // namespace

ProjectiveMeasurement make_projector(Sector s, int outcome) {
  require_outcome(outcome);
  ProjectiveMeasurement p{s, outcome, CMat2::Zero()};
  p.matrix(outcome, outcome) = double(sign(s));
  return p;
}

double signed_outcome_value(const SectorVector& v, int outcome) {
  const ProjectiveMeasurement p = make_projector(v.sector, outcome);
  return (v.components * p.matrix * v.components.adjoint())(0, 0).real();
}

std::array<double, 2> measure_probabilities(const SectorVector& v, double tol) {
  const double n = hilbert_norm2(v);
  if (std::abs(n - 1.0) > tol)
    throw Error(ErrorKind::NotNormalized, "measure_probabilities: |v|^2 = " + std::to_string(n));
  // Dividing by the total makes a reduced state report exactly 1.
  const double w0 = std::abs(signed_outcome_value(v, 0));
  const double w1 = std::abs(signed_outcome_value(v, 1));
  return {w0 / (w0 + w1), w1 / (w0 + w1)};
}

std::array<double, 2> measure_probabilities(const PairState& st, Sector s, double tol) {
  return measure_probabilities(st.piece(s), tol);
}

SectorVector reduce_state(const SectorVector& v, int outcome, double tol) {
  require_outcome(outcome);
  const ProjectiveMeasurement p = make_projector(v.sector, outcome);
  const CVec2 projected = v.components * p.intrinsic();
  const double w = projected.squaredNorm();
  if (w <= tol)
    throw Error(ErrorKind::ZeroProbabilityOutcome, "outcome " + std::to_string(outcome) + " has weight " +
                                                       std::to_string(w));
  return SectorVector{v.sector, projected / std::sqrt(w)};
}

SectorVector reduce_state(const PairState& st, Sector s, int outcome, double tol) {
  return reduce_state(st.piece(s), outcome, tol);
}

double completeness_check(const DensityOperator& d) {
  return (d.intrinsic * completeness(d.sector)).trace().real();
}

CompositeState composite_measure(const CompositeState& cs, int slot, int outcome, double tol) {
  if (slot < 0 || slot >= cs.size())
    throw Error(ErrorKind::IndexOutOfRange, "composite_measure slot " + std::to_string(slot));
  std::vector<SectorVector> factors = cs.factors;
  factors[slot] = reduce_state(factors[slot], outcome, tol);
  return compose(factors, tol);
}

std::vector<EigenProjector> observable_projectors(const Restriction& a, double tol) {
  const auto eig = eig_hermitian(a.intrinsic, tol);
  std::vector<EigenProjector> out;
  for (int k = 0; k < 2; ++k) {
    // Row eigenvector e = c† contributes the projector e† e.
    const CMat2 proj = eig.vectors.col(k) * eig.vectors.col(k).adjoint();
    if (!out.empty() && std::abs(out.back().eigenvalue - eig.values(k)) <= tol)
      out.back().intrinsic += proj;
    else
      out.push_back(EigenProjector{eig.values(k), proj});
  }
  return out;
}

SectorVector reduce_by_projector(const SectorVector& v, const EigenProjector& p, double tol) {
  const CVec2 projected = v.components * p.intrinsic;
  const double w = projected.squaredNorm();
  if (w <= tol) throw Error(ErrorKind::ZeroProbabilityOutcome, "eigenspace weight " + std::to_string(w));
  return SectorVector{v.sector, projected / std::sqrt(w)};
}

}  // namespace twofold
