#pragma once

#include <string>

#include "twofold/numerics.hpp"

namespace twofold {

/// Particle (Plus) or antiparticle (Minus) half of the orthogonal split.
enum class Sector { Plus, Minus };

constexpr int sign(Sector s) noexcept { return s == Sector::Plus ? 1 : -1; }
constexpr Sector other(Sector s) noexcept { return s == Sector::Plus ? Sector::Minus : Sector::Plus; }
const char* to_string(Sector s) noexcept;

enum class GramKind { g, G, gPlus, gMinus, gStarPlus, gStarMinus, DeltaI };

/// g = diag(I, -I). Templated so exact scalar types can use it.
template <class Scalar = cplx>
Mat<Scalar, 4> metric_g() {
  Mat<Scalar, 4> g = Mat<Scalar, 4>::Zero();
  g(0, 0) = Scalar(1);
  g(1, 1) = Scalar(1);
  g(2, 2) = Scalar(-1);
  g(3, 3) = Scalar(-1);
  return g;
}

/// G = [[0, I], [I, 0]].
template <class Scalar = cplx>
Mat<Scalar, 4> metric_G() {
  Mat<Scalar, 4> G = Mat<Scalar, 4>::Zero();
  G.template topRightCorner<2, 2>() = Mat<Scalar, 2>::Identity();
  G.template bottomLeftCorner<2, 2>() = Mat<Scalar, 2>::Identity();
  return G;
}

/// Reduced metric g± = ±I. The starred metric has the same entries.
template <class Scalar = cplx>
Mat<Scalar, 2> sector_metric(Sector s) {
  return Mat<Scalar, 2>::Identity() * Scalar(sign(s));
}

/// Positive-definite kernel Δ± (identity in the canonical basis).
template <class Scalar = cplx>
Mat<Scalar, 2> sector_delta(Sector) {
  return Mat<Scalar, 2>::Identity();
}

CMat4 gram4(GramKind kind);
CMat2 gram2(GramKind kind);

/// Coordinate projector P± onto one sector.
CMat4 projector(Sector s);

struct SectorVector {
  Sector sector = Sector::Plus;
  CVec2 components = CVec2::Zero();
};

cplx hilbert_inner(const CVec4& a, const CVec4& b);
cplx indefinite_inner(const CVec4& a, const CVec4& b);

SectorVector project(const CVec4& v, Sector s);
CVec4 embed(const SectorVector& v);

/// Definite reduced product, positive on Plus and negative on Minus.
cplx sector_inner(const SectorVector& a, const SectorVector& b);
double hilbert_norm2(const SectorVector& v);

/// Adjoint components Λ_μ = Λ^λ g±_λμ and the inverse map.
CVec2 lower_index(const SectorVector& v);
SectorVector raise_index(const CVec2& lowered, Sector s);

struct Blocks {
  CMat2 pp, pm, mp, mm;
};

Blocks block_decompose(const CMat4& m);
CMat4 block_reassemble(const Blocks& b);

/// Sector restriction of an operator. `intrinsic` holds mixed-index entries
/// A_μ^ν; covariant and contravariant entries are metric contractions.
struct Restriction {
  Sector sector = Sector::Plus;
  CMat2 intrinsic = CMat2::Zero();
  std::string label;

  CMat2 covariant() const;      // A_μν = A_μ^λ g_λν
  CMat2 contravariant() const;  // A*^μν = g*^μλ A_λ^ν

  static Restriction from_covariant(Sector s, const CMat2& cov, std::string label = {});
};

/// Slice the diagonal block for `s`; off-diagonal blocks must vanish.
Restriction restrict(const CMat4& m, Sector s, double tol = default_tolerance);

/// Σ |e_μ> g*^μν <e_ν| as an intrinsic matrix.
CMat2 completeness(Sector s);

/// |Λ><Λ| for a sector vector, covariant entries conj(Λ_μ) Λ_ν.
Restriction outer_projector(const SectorVector& v);

/// Trace contracted with g*, i.e. the intrinsic trace.
cplx restriction_trace(const Restriction& r);

/// g A† g for a 4×4 covariant matrix; within a sector the metric is ±I so
/// the ★ of a restriction is its adjoint.
template <class Derived>
typename Derived::PlainObject star4(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto g = metric_g<Scalar>();
  return g * m.adjoint() * g;
}

Restriction star(const Restriction& r);

}  // namespace twofold
