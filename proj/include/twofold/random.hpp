#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "twofold/numerics.hpp"

namespace twofold {

/// Seeded source of the random matrices used by property sweeps.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform();  // [0, 1)
  double normal();
  cplx complex_normal();

  CVec2 vector2();
  CVec4 vector4();
  CVec2 unit_vector2();
  CMat2 matrix2();
  CMat4 matrix4();

  /// Haar-like unitary from QR with the R diagonal made positive.
  CMat2 unitary2();
  CMat2 special_unitary2();
  CMat2 hermitian2();
  /// det 1 with singular values in [1/2, 2].
  CMat2 sl2c();
  /// Hermitian W with W² = I: ±I or n·σ.
  CMat2 admissible_w();
  /// Random 4-vector with |T^b T_b| bounded away from zero.
  std::array<double, 4> translation();

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace twofold
