#include "twofold/cartan.hpp"

namespace twofold {

const char* to_string(Sector s) noexcept { return s == Sector::Plus ? "plus" : "minus"; }

CMat4 gram4(GramKind kind) {
  switch (kind) {
    case GramKind::g: return metric_g();
    case GramKind::G: return metric_G();
    case GramKind::DeltaI: return CMat4::Identity();
    default: break;
  }
  throw Error(ErrorKind::ShapeMismatch, "gram4: reduced Gram kinds are 2x2");
}

CMat2 gram2(GramKind kind) {
  switch (kind) {
    case GramKind::gPlus:
    case GramKind::gStarPlus: return sector_metric(Sector::Plus);
    case GramKind::gMinus:
    case GramKind::gStarMinus: return sector_metric(Sector::Minus);
    default: break;
  }
  throw Error(ErrorKind::ShapeMismatch, "gram2: full Gram kinds are 4x4");
}

CMat4 projector(Sector s) {
  CMat4 p = CMat4::Zero();
  const int off = s == Sector::Plus ? 0 : 2;
  p(off, off) = 1.0;
  p(off + 1, off + 1) = 1.0;
  return p;
}

cplx hilbert_inner(const CVec4& a, const CVec4& b) { return (a * b.adjoint())(0, 0); }

cplx indefinite_inner(const CVec4& a, const CVec4& b) {
  return (a * metric_g() * b.adjoint())(0, 0);
}

SectorVector project(const CVec4& v, Sector s) {
  const int off = s == Sector::Plus ? 0 : 2;
  return SectorVector{s, CVec2(v(off), v(off + 1))};
}

CVec4 embed(const SectorVector& v) {
  CVec4 out = CVec4::Zero();
  const int off = v.sector == Sector::Plus ? 0 : 2;
  out(off) = v.components(0);
  out(off + 1) = v.components(1);
  return out;
}

cplx sector_inner(const SectorVector& a, const SectorVector& b) {
  if (a.sector != b.sector) throw Error(ErrorKind::SectorMismatch, "sector_inner");
  return (a.components * sector_metric(a.sector) * b.components.adjoint())(0, 0);
}

double hilbert_norm2(const SectorVector& v) { return v.components.squaredNorm(); }

CVec2 lower_index(const SectorVector& v) { return v.components * sector_metric(v.sector); }

SectorVector raise_index(const CVec2& lowered, Sector s) {
  // g*± has the same entries as g±.
  return SectorVector{s, lowered * sector_metric(s)};
}

Blocks block_decompose(const CMat4& m) {
  return Blocks{m.topLeftCorner<2, 2>(), m.topRightCorner<2, 2>(), m.bottomLeftCorner<2, 2>(),
                m.bottomRightCorner<2, 2>()};
}

CMat4 block_reassemble(const Blocks& b) {
  CMat4 m;
  m << b.pp, b.pm, b.mp, b.mm;
  return m;
}

CMat2 Restriction::covariant() const { return intrinsic * sector_metric(sector); }

CMat2 Restriction::contravariant() const { return sector_metric(sector) * intrinsic; }

Restriction Restriction::from_covariant(Sector s, const CMat2& cov, std::string label) {
  return Restriction{s, cov * sector_metric(s), std::move(label)};
}

Restriction restrict(const CMat4& m, Sector s, double tol) {
  const Blocks b = block_decompose(m);
  const double off = std::max(max_abs(b.pm), max_abs(b.mp));
  if (off > tol)
    throw Error(ErrorKind::NotBlockDiagonal, "restrict: off-diagonal block size " + std::to_string(off));
  return Restriction{s, s == Sector::Plus ? b.pp : b.mm, "restriction"};
}

CMat2 completeness(Sector s) {
  // Σ_μν |e_μ> g*^μν <e_ν| acting on a row: Λ^λ g_λμ g*^μν = Λ^ν.
  const CMat2 g = sector_metric(s);
  const CMat2 gstar = g.inverse();
  CMat2 intrinsic = CMat2::Zero();
  for (int mu = 0; mu < 2; ++mu)
    for (int nu = 0; nu < 2; ++nu)
      for (int lam = 0; lam < 2; ++lam) intrinsic(lam, nu) += g(lam, mu) * gstar(mu, nu);
  return intrinsic;
}

Restriction outer_projector(const SectorVector& v) {
  const CVec2 low = lower_index(v);
  CMat2 cov;
  for (int mu = 0; mu < 2; ++mu)
    for (int nu = 0; nu < 2; ++nu) cov(mu, nu) = std::conj(low(mu)) * low(nu);
  return Restriction::from_covariant(v.sector, cov, "outer_projector");
}

cplx restriction_trace(const Restriction& r) { return r.intrinsic.trace(); }

Restriction star(const Restriction& r) {
  const CMat2 g = sector_metric(r.sector);
  return Restriction{r.sector, g * r.intrinsic.adjoint() * g, r.label};
}

}  // namespace twofold
