#pragma once

#include <array>
#include <vector>

#include "twofold/density.hpp"
#include "twofold/group.hpp"
#include "twofold/observables.hpp"

namespace twofold {

/// OperatorInvariant keeps the operator and moves its entries;
/// MatrixInvariant keeps the entries and conjugates the operator.
enum class FrameMode { OperatorInvariant, MatrixInvariant, Both };

const char* to_string(FrameMode m) noexcept;

struct FrameTransform {
  DynElement element;
  FrameMode mode = FrameMode::OperatorInvariant;

  const CMat2& u(Sector s) const { return element.block(s); }
};

/// Primed basis rows <e'_μ| = <e_μ| u± with their Gram and Δ matrices.
struct PrimedBasis {
  CMat2 rowsPlus;
  CMat2 rowsMinus;
  CMat2 gramPlus;
  CMat2 gramMinus;
  CMat2 deltaPlus;
  CMat2 deltaMinus;

  const CMat2& rows(Sector s) const { return s == Sector::Plus ? rowsPlus : rowsMinus; }
  const CMat2& gram(Sector s) const { return s == Sector::Plus ? gramPlus : gramMinus; }
  const CMat2& delta(Sector s) const { return s == Sector::Plus ? deltaPlus : deltaMinus; }
};

PrimedBasis transform_basis(const FrameTransform& ft);

/// The state itself is frame independent; its components against the
/// primed rows are Φ u★ and carry their own Born weights.
struct TransformedState {
  PairState state;
  PairState primedComponents;
  std::array<double, 2> weightsPlus{};
  std::array<double, 2> weightsMinus{};
};

TransformedState transform_state(const PairState& st, const FrameTransform& ft);

/// Amplitude contracted with u★ on every slot, Plus slots with u+★ and
/// Minus slots with u-★.
CVecX transform_amplitude_tensor(const CompositeState& cs, const FrameTransform& ft);

struct TransformedObservable {
  Observable op;        // the operator in the primed frame
  SectorPair entries;   // its covariant entries against the primed basis
};

/// Throws ModeConflict in Both mode when u A ≠ A u in some sector.
TransformedObservable transform_observable(const Observable& a, const FrameTransform& ft,
                                           double tol = default_tolerance);

struct Diagonalization {
  Sector sector = Sector::Plus;
  std::array<double, 2> eigenvalues{};  // descending
  CMat2 s = CMat2::Identity();          // local unitary, rows are eigenrows
  CMat2 diag = CMat2::Zero();           // covariant, a_μ g_μν
  double detResidual = 0.0;
};

/// Diagonalizes primed covariant entries. Throws NotDiagonalizable when the
/// entries are not pseudo-Hermitian.
Diagonalization diagonalize_primed(const CMat2& primedCovariant, Sector s, double tol = default_tolerance);

/// C'(s) = u(s)★ C(s) u(-s).
ChargeConjugation transform_conjugation(const ChargeConjugation& c, const FrameTransform& ft);

/// Covariant entries of C' against the primed bases.
CMat2 primed_conjugation_entries(const ChargeConjugation& primed, const FrameTransform& ft, Sector from);

/// Invariance checks for one frame change. Uses u† wherever the element's
/// ★ appears, so a non-unitary block shows up as failures.
std::vector<CheckResult> invariance_report(const FrameTransform& ft, double tol = default_tolerance);

/// Largest component difference between reducing a state in the unprimed
/// frame and reducing its primed components. Generally nonzero.
double reduction_difference(const SectorVector& v, const FrameTransform& ft, int outcome,
                            double tol = default_tolerance);

}  // namespace twofold
