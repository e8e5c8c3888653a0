#include "twofold/group.hpp"

#include <numbers>

namespace twofold {

namespace {

const cplx I_unit{0.0, 1.0};

CMat2 sigma(int k) {
  CMat2 s = CMat2::Zero();
  switch (k) {
    case 1:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 2:
      s(0, 1) = -I_unit;
      s(1, 0) = I_unit;
      break;
    default:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
  }
  return s;
}

CMat2 inverse_dagger(const CMat2& a) { return a.inverse().adjoint(); }

void require_w_normalized(const CMat2& w, double tol) {
  require_finite(w, "W");
  if (!is_hermitian(w, tol)) throw Error(ErrorKind::BadNormalization, "W is not Hermitian");
  const double r = max_abs_diff(w * w, CMat2::Identity());
  if (r > tol) throw Error(ErrorKind::BadNormalization, "W^2 != I, residual " + std::to_string(r));
}

}  // namespace

const char* to_string(Realization r) noexcept { return r == Realization::gReal ? "g" : "G"; }

bool MembershipReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

double MembershipReport::worst() const {
  double w = 0.0;
  for (const auto& c : checks) w = std::max(w, c.residual);
  return w;
}

MembershipReport verify_membership(const GroupElement& e, double tol) {
  MembershipReport rep;
  const CMat4& u = e.matrix;
  const Blocks b = block_decompose(u);
  const CMat2 I = CMat2::Identity();
  if (!all_finite(u)) {
    rep.checks.push_back(CheckResult{"membership.finite", "finite entries", INFINITY, false});
    return rep;
  }
  rep.checks.push_back(make_check("membership.unimodular", "det u = 1", std::abs(u.determinant() - 1.0), tol));
  if (e.realization == Realization::gReal) {
    const CMat4 g = metric_g();
    rep.checks.push_back(make_check("membership.metric", "u g u^dagger = g", max_abs_diff(u * g * u.adjoint(), g), tol));
    rep.checks.push_back(make_check("membership.block_pp", "u++ u++^dagger - u+- u+-^dagger = I",
                                    max_abs_diff(b.pp * b.pp.adjoint() - b.pm * b.pm.adjoint(), I), tol));
    rep.checks.push_back(make_check("membership.block_mm", "u-- u--^dagger - u-+ u-+^dagger = I",
                                    max_abs_diff(b.mm * b.mm.adjoint() - b.mp * b.mp.adjoint(), I), tol));
    rep.checks.push_back(make_check("membership.block_cross", "u++ u-+^dagger - u+- u--^dagger = 0",
                                    max_abs(b.pp * b.mp.adjoint() - b.pm * b.mm.adjoint()), tol));
  } else {
    const CMat4 G = metric_G();
    rep.checks.push_back(make_check("membership.metric", "U G U^dagger = G", max_abs_diff(u * G * u.adjoint(), G), tol));
    // U = [[a, A], [B, b]]: a A† and B b† skew-Hermitian, a b† + A B† = I.
    const CMat2 aA = b.pp * b.pm.adjoint();
    const CMat2 Bb = b.mp * b.mm.adjoint();
    rep.checks.push_back(make_check("membership.skew_upper", "a A^dagger skew-Hermitian", max_abs(aA + aA.adjoint()), tol));
    rep.checks.push_back(make_check("membership.skew_lower", "B b^dagger skew-Hermitian", max_abs(Bb + Bb.adjoint()), tol));
    rep.checks.push_back(make_check("membership.block_cross", "a b^dagger + A B^dagger = I",
                                    max_abs_diff(b.pp * b.mm.adjoint() + b.pm * b.mp.adjoint(), I), tol));
  }
  return rep;
}

CMat4 conversion_matrix() {
  const double h = std::numbers::sqrt2 / 2.0;
  CMat4 m;
  m << h, 0, -h, 0,  //
      0, h, 0, -h,   //
      h, 0, h, 0,    //
      0, h, 0, h;
  return m;
}

GroupElement convert(const GroupElement& e, double tol) {
  const MembershipReport rep = verify_membership(e, tol);
  if (!rep.pass())
    throw Error(ErrorKind::InvalidMember, "convert: membership residual " + std::to_string(rep.worst()));
  const CMat4 M = conversion_matrix();
  const CMat4 Minv = M.adjoint();
  if (e.realization == Realization::gReal) return GroupElement{Realization::GReal, M * e.matrix * Minv};
  return GroupElement{Realization::gReal, Minv * e.matrix * M};
}

LorentzParam make_lorentz_param(const CMat2& a) {
  require_finite(a, "Lorentz parameter");
  const cplx d = a.determinant();
  if (std::abs(d - 1.0) > 1e-10)
    throw Error(ErrorKind::SingularA, "det a = (" + std::to_string(d.real()) + ", " + std::to_string(d.imag()) + ")");
  const Eigen::JacobiSVD<CMat2> svd(a);
  const double cond = svd.singularValues()(0) / svd.singularValues()(1);
  if (!(cond <= 1e8)) throw Error(ErrorKind::SingularA, "condition estimate " + std::to_string(cond));
  return LorentzParam{a};
}

CMat2 translation_to_w(const std::array<double, 4>& T) {
  CMat2 w = T[0] * CMat2::Identity();
  for (int k = 1; k <= 3; ++k) w += T[k] * sigma(k);
  return w / std::numbers::sqrt2;
}

std::array<double, 4> w_to_translation(const CMat2& w, double tol) {
  if (!is_hermitian(w, tol)) throw Error(ErrorKind::NotHermitian, "w_to_translation");
  std::array<double, 4> T{};
  T[0] = w.trace().real() / std::numbers::sqrt2;
  for (int k = 1; k <= 3; ++k) T[k] = (w * sigma(k)).trace().real() / std::numbers::sqrt2;
  return T;
}

Translation make_translation(const std::array<double, 4>& T, double tol) {
  for (double c : T)
    if (!std::isfinite(c)) throw Error(ErrorKind::NonFinite, "translation component");
  const CMat2 w = translation_to_w(T);
  if (std::abs(w.determinant()) <= tol) throw Error(ErrorKind::NullTranslation, "det W = 0");
  return Translation{T, w};
}

Translation translation_from_w(const CMat2& w, double tol) {
  return make_translation(w_to_translation(w, tol), tol);
}

GroupElement poincare(const LorentzParam& p, const Translation& t, Realization r) {
  if (std::abs(t.w.determinant()) <= default_tolerance) throw Error(ErrorKind::NullTranslation, "det W = 0");
  const CMat2& a = p.a;
  const CMat2 aid = inverse_dagger(a);
  const CMat2 I = CMat2::Identity();
  CMat4 m;
  if (r == Realization::GReal) {
    m << I_unit * t.w * aid, a, aid, CMat2::Zero();
  } else {
    const CMat2 plus = (I + I_unit * t.w) * aid;
    const CMat2 minus = (I - I_unit * t.w) * aid;
    m << a + plus, a - plus, -a + minus, -a - minus;
    m /= 2.0;
  }
  return GroupElement{r, m};
}

GroupElement lorentz(const LorentzParam& p, Realization r) {
  const CMat2& a = p.a;
  const CMat2 aid = inverse_dagger(a);
  CMat4 m;
  if (r == Realization::GReal) {
    m << CMat2::Zero(), a, aid, CMat2::Zero();
  } else {
    m << a + aid, a - aid, -a + aid, -a - aid;
    m /= 2.0;
  }
  return GroupElement{r, m};
}

GroupElement unitary_poincare(const CMat2& beta, const CMat2& w, double tol) {
  require_finite(beta, "beta");
  const double ur = unitarity_residual(beta);
  if (ur > tol) throw Error(ErrorKind::NotUnitary, "beta residual " + std::to_string(ur));
  require_w_normalized(w, tol);
  const CMat2 I = CMat2::Identity();
  const CMat2 plus = (I + I_unit * w) * beta / std::numbers::sqrt2;
  const CMat2 minus = beta.adjoint() * (I - I_unit * w) / std::numbers::sqrt2;
  return GroupElement{Realization::gReal, block_diag(plus, minus)};
}

BlockDeterminants translation_block_determinants(const CMat2& w) {
  const CMat2 I = CMat2::Identity();
  const CMat2 p = (I + I_unit * w) / std::numbers::sqrt2;
  const CMat2 m = (I - I_unit * w) / std::numbers::sqrt2;
  return BlockDeterminants{p.determinant(), m.determinant(), w.trace().real() / std::numbers::sqrt2};
}

DynElement DynElement::from_blocks(const CMat2& uPlus, const CMat2& uMinus, double tol) {
  require_finite(uPlus, "dyn block plus");
  require_finite(uMinus, "dyn block minus");
  const double r = std::max(unitarity_residual(uPlus), unitarity_residual(uMinus));
  if (r > tol) throw Error(ErrorKind::NotUnitary, "dyn block residual " + std::to_string(r));
  return DynElement{uPlus, uMinus};
}

DynElement dyn_element(const CMat2& beta, const std::optional<CMat2>& w, double tol) {
  require_finite(beta, "beta");
  const double ur = unitarity_residual(beta);
  const double dr = std::abs(beta.determinant() - 1.0);
  if (ur > tol || dr > tol)
    throw Error(ErrorKind::NotSpecialUnitary,
                "beta unitarity residual " + std::to_string(ur) + ", det residual " + std::to_string(dr));
  if (!w) return DynElement{beta, beta.adjoint()};
  require_w_normalized(*w, tol);
  const CMat2 I = CMat2::Identity();
  return DynElement{(I + I_unit * *w) * beta / std::numbers::sqrt2,
                    beta.adjoint() * (I - I_unit * *w) / std::numbers::sqrt2};
}

DynElement compose(const DynElement& first, const DynElement& second) {
  return DynElement{first.uPlus * second.uPlus, first.uMinus * second.uMinus};
}

CMat4 single_particle_blocks(const DynElement& e, Sector s) {
  CMat4 m = CMat4::Zero();
  if (s == Sector::Plus)
    m.topLeftCorner<2, 2>() = e.uPlus;
  else
    m.bottomRightCorner<2, 2>() = e.uMinus;
  return m;
}

double dyn_star_residual(const DynElement& e) {
  double r = 0.0;
  for (Sector s : {Sector::Plus, Sector::Minus}) {
    const CMat2 g = sector_metric(s);
    const CMat2& u = e.block(s);
    r = std::max(r, max_abs_diff(g * u.adjoint() * g, u.adjoint()));
  }
  return r;
}

}  // namespace twofold
