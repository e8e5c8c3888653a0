#include "twofold/random.hpp"

#include <numbers>

namespace twofold {

double Sampler::uniform() { return uniform_(rng_); }

double Sampler::normal() { return normal_(rng_); }

cplx Sampler::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

CVec2 Sampler::vector2() {
  CVec2 v;
  for (int i = 0; i < 2; ++i) v(i) = complex_normal();
  return v;
}

CVec4 Sampler::vector4() {
  CVec4 v;
  for (int i = 0; i < 4; ++i) v(i) = complex_normal();
  return v;
}

CVec2 Sampler::unit_vector2() {
  CVec2 v = vector2();
  while (v.norm() < 1e-6) v = vector2();
  return v / v.norm();
}

CMat2 Sampler::matrix2() {
  CMat2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = complex_normal();
  return m;
}

CMat4 Sampler::matrix4() {
  CMat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = complex_normal();
  return m;
}

CMat2 Sampler::unitary2() {
  const CMat2 z = matrix2();
  Eigen::HouseholderQR<CMat2> qr(z);
  CMat2 q = qr.householderQ();
  const CMat2 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 2; ++k) {
    const cplx d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

CMat2 Sampler::special_unitary2() {
  const CMat2 u = unitary2();
  return u / std::sqrt(u.determinant());
}

CMat2 Sampler::hermitian2() {
  const CMat2 m = matrix2();
  return (m + m.adjoint()) / 2.0;
}

CMat2 Sampler::sl2c() {
  const double r = std::exp((2.0 * uniform() - 1.0) * std::numbers::ln2);
  CMat2 d = CMat2::Zero();
  d(0, 0) = r;
  d(1, 1) = 1.0 / r;
  return special_unitary2() * d * special_unitary2();
}

CMat2 Sampler::admissible_w() {
  const double pick = uniform();
  if (pick < 0.25) return CMat2::Identity();
  if (pick < 0.5) return -CMat2::Identity();
  double n[3];
  double len = 0.0;
  do {
    for (double& c : n) c = normal();
    len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  } while (len < 1e-6);
  for (double& c : n) c /= len;
  CMat2 w;
  w << cplx(n[2], 0), cplx(n[0], -n[1]), cplx(n[0], n[1]), cplx(-n[2], 0);
  return w;
}

std::array<double, 4> Sampler::translation() {
  std::array<double, 4> t{};
  double q = 0.0;
  do {
    for (double& c : t) c = normal();
    q = t[0] * t[0] - t[1] * t[1] - t[2] * t[2] - t[3] * t[3];
  } while (std::abs(q) < 1e-2);
  return t;
}

}  // namespace twofold
