#pragma once

#include <array>
#include <vector>

#include "twofold/density.hpp"

namespace twofold {

/// π_(μ) in covariant form: diag(±1, 0) or diag(0, ±1).
struct ProjectiveMeasurement {
  Sector sector = Sector::Plus;
  int outcome = 0;
  CMat2 matrix = CMat2::Zero();

  /// π_μ^ν, a coordinate projector with trace +1.
  CMat2 intrinsic() const { return matrix * sector_metric(sector); }
};

/// Throws IndexOutOfRange for outcomes other than 0 and 1.
ProjectiveMeasurement make_projector(Sector s, int outcome);

/// Born weights <Φ|π_(μ)||Φ>_g± = ±w_μ with the sector sign stripped.
/// Throws NotNormalized.
std::array<double, 2> measure_probabilities(const PairState& st, Sector s, double tol = default_tolerance);
std::array<double, 2> measure_probabilities(const SectorVector& v, double tol = default_tolerance);

/// The signed value <Φ|π_(μ)||Φ>_g±.
double signed_outcome_value(const SectorVector& v, int outcome);

/// Projected component rescaled by 1/√w; phase kept. Throws ZeroProbabilityOutcome.
SectorVector reduce_state(const SectorVector& v, int outcome, double tol = default_tolerance);
SectorVector reduce_state(const PairState& st, Sector s, int outcome, double tol = default_tolerance);

/// Tr(ρ Σ |e_μ> g*^μν <e_ν|) = w_0 + w_1.
double completeness_check(const DensityOperator& d);

/// Replaces the slot factor by its reduced state. Throws
/// ZeroProbabilityOutcome, IndexOutOfRange.
CompositeState composite_measure(const CompositeState& cs, int slot, int outcome, double tol = default_tolerance);

/// One eigenspace of an observable restriction.
struct EigenProjector {
  double eigenvalue = 0.0;
  CMat2 intrinsic = CMat2::Zero();  // orthogonal projector onto the eigenrows
};

/// Spectral projectors grouped by eigenvalue; a degenerate restriction
/// yields a single identity projector.
std::vector<EigenProjector> observable_projectors(const Restriction& a, double tol = default_tolerance);

/// Reduction by one spectral projector. Throws ZeroProbabilityOutcome.
SectorVector reduce_by_projector(const SectorVector& v, const EigenProjector& p, double tol = default_tolerance);

}  // namespace twofold
