#pragma once

#include <array>
#include <optional>
#include <vector>

#include "twofold/cartan.hpp"

namespace twofold {

enum class Realization { gReal, GReal };

const char* to_string(Realization r) noexcept;

struct GroupElement {
  Realization realization = Realization::gReal;
  CMat4 matrix = CMat4::Identity();
};

struct MembershipReport {
  std::vector<CheckResult> checks;

  bool pass() const;
  double worst() const;
};

/// Metric preservation, unimodularity and the block constraints of the
/// element's realization.
MembershipReport verify_membership(const GroupElement& e, double tol = default_tolerance);

/// M = (1/√2)[[I, -I], [I, I]], with M⁻¹ G M = g.
CMat4 conversion_matrix();

/// U = M u M⁻¹ or u = M⁻¹ U M. Throws InvalidMember.
GroupElement convert(const GroupElement& e, double tol = default_tolerance);

/// a ∈ SL(2,C).
struct LorentzParam {
  CMat2 a = CMat2::Identity();
};

/// Throws SingularA when |det a - 1| exceeds 1e-10 or cond(a) > 1e8.
LorentzParam make_lorentz_param(const CMat2& a);

/// W = (1/√2)(T⁰ I + T^k σ_k), so T^b T_b = 2 det W.
CMat2 translation_to_w(const std::array<double, 4>& T);
/// Throws NotHermitian.
std::array<double, 4> w_to_translation(const CMat2& w, double tol = default_tolerance);

struct Translation {
  std::array<double, 4> components{};
  CMat2 w = CMat2::Zero();
};

/// Throws NullTranslation when det W vanishes.
Translation make_translation(const std::array<double, 4>& T, double tol = default_tolerance);
/// Throws NotHermitian, NullTranslation.
Translation translation_from_w(const CMat2& w, double tol = default_tolerance);

/// GReal [[iW a⁻¹†, a], [a⁻¹†, 0]] or its g-realization counterpart.
GroupElement poincare(const LorentzParam& a, const Translation& t, Realization r);
/// GReal [[0, a], [a⁻¹†, 0]] or the g-realization half-sum form.
GroupElement lorentz(const LorentzParam& a, Realization r);

/// blockdiag((I + iW)β, β†(I - iW))/√2 in the g-realization. Throws
/// NotUnitary, BadNormalization.
GroupElement unitary_poincare(const CMat2& beta, const CMat2& w, double tol = default_tolerance);

struct BlockDeterminants {
  cplx plus;   // det[(I + iW)/√2]
  cplx minus;  // det[(I - iW)/√2]
  double T0;
};

BlockDeterminants translation_block_determinants(const CMat2& w);

/// Block-diagonal element of the dynamical subgroup.
struct DynElement {
  CMat2 uPlus = CMat2::Identity();
  CMat2 uMinus = CMat2::Identity();

  const CMat2& block(Sector s) const { return s == Sector::Plus ? uPlus : uMinus; }
  CMat4 matrix() const { return block_diag(uPlus, uMinus); }

  /// Throws NotUnitary.
  static DynElement from_blocks(const CMat2& uPlus, const CMat2& uMinus, double tol = default_tolerance);
  /// No validation; for negative controls.
  static DynElement unchecked(const CMat2& uPlus, const CMat2& uMinus) { return DynElement{uPlus, uMinus}; }
};

/// β ∈ SU(2); with W, blocks (I + iW)β/√2 and β†(I - iW)/√2, else β and β†.
/// Throws NotSpecialUnitary, BadNormalization.
DynElement dyn_element(const CMat2& beta, const std::optional<CMat2>& w = std::nullopt,
                       double tol = default_tolerance);

/// Applying `first` then `second` (rows act from the right).
DynElement compose(const DynElement& first, const DynElement& second);

/// Zero-padded 4×4 with only the chosen sector block.
CMat4 single_particle_blocks(const DynElement& e, Sector s);

/// max over sectors of |g u† g - u†|.
double dyn_star_residual(const DynElement& e);

}  // namespace twofold
