#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace twofold {

using cplx = std::complex<double>;

template <class Scalar, int N>
using Mat = Eigen::Matrix<Scalar, N, N>;

// Bras are rows: operators act from the right, <x|A.
template <class Scalar, int N>
using RowVec = Eigen::Matrix<Scalar, 1, N>;

using CMat2 = Mat<cplx, 2>;
using CMat4 = Mat<cplx, 4>;
using CMatX = Eigen::MatrixXcd;
using CVec2 = RowVec<cplx, 2>;
using CVec4 = RowVec<cplx, 4>;
using CVecX = Eigen::RowVectorXcd;

inline constexpr double default_tolerance = 1e-10;

enum class ErrorKind {
  NonFinite,
  NotHermitian,
  SectorMismatch,
  NotBlockDiagonal,
  ZeroVector,
  NotUnitary,
  NotPseudoHermitian,
  NonpositiveEnergy,
  NotNormalized,
  InvalidDensity,
  OrderingViolation,
  ArityMismatch,
  IndexOutOfRange,
  LastFactor,
  ShapeMismatch,
  ZeroProbabilityOutcome,
  InvalidMember,
  SingularA,
  NullTranslation,
  BadNormalization,
  NotSpecialUnitary,
  ModeConflict,
  NotDiagonalizable,
  UnknownKind,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {
constexpr int product_dim(int a, int b) {
  return (a == Eigen::Dynamic || b == Eigen::Dynamic) ? Eigen::Dynamic : a * b;
}
}  // namespace detail

template <class Derived>
typename Derived::PlainObject dagger(const Eigen::MatrixBase<Derived>& m) {
  return m.adjoint();
}

/// Kronecker product; fixed-size operands give a fixed-size result.
template <class A, class B>
Eigen::Matrix<typename A::Scalar,
              detail::product_dim(A::RowsAtCompileTime, B::RowsAtCompileTime),
              detail::product_dim(A::ColsAtCompileTime, B::ColsAtCompileTime)>
kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return Eigen::kroneckerProduct(a.derived(), b.derived());
}

template <class Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  return m.determinant();
}

template <class Derived>
typename Derived::Scalar trace(const Eigen::MatrixBase<Derived>& m) {
  return m.trace();
}

/// Largest entrywise |a - b|. Works for any scalar with an ADL-visible abs,
/// including exact rational types.
template <class A, class B>
auto max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  using std::abs;
  using Result = decltype(abs(typename A::Scalar{}));
  Result worst{0};
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Result d = abs(a(i, j) - b(i, j));
      if (worst < d) worst = d;
    }
  return worst;
}

template <class Derived>
auto max_abs(const Eigen::MatrixBase<Derived>& m) {
  return max_abs_diff(m, Derived::PlainObject::Zero(m.rows(), m.cols()));
}

template <class A, class B>
bool approx_eq(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b,
               double tol = default_tolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= tol;
}

inline bool approx_eq(cplx a, cplx b, double tol = default_tolerance) {
  return std::abs(a - b) <= tol;
}

template <class Derived>
double hermiticity_residual(const Eigen::MatrixBase<Derived>& m) {
  return max_abs_diff(m, m.adjoint());
}

template <class Derived>
double unitarity_residual(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  return max_abs_diff(m * m.adjoint(), Plain::Identity(m.rows(), m.cols()));
}

template <class Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = default_tolerance) {
  return hermiticity_residual(m) <= tol;
}

template <class Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol = default_tolerance) {
  return unitarity_residual(m) <= tol;
}

template <class Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!std::isfinite(std::real(m(i, j))) || !std::isfinite(std::imag(m(i, j)))) return false;
  return true;
}

template <class Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (!all_finite(m)) throw Error(ErrorKind::NonFinite, std::string(what) + " has non-finite entries");
}

/// Multiply each column by a phase so its first entry with modulus above
/// `floor` is real and positive.
template <class Derived>
void normalize_column_phases(Eigen::MatrixBase<Derived>& v, double floor = 1e-12) {
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    for (Eigen::Index r = 0; r < v.rows(); ++r) {
      const auto z = v(r, c);
      if (std::abs(z) > floor) {
        v.col(c) *= std::conj(z) / std::abs(z);
        break;
      }
    }
  }
}

template <int N>
struct HermitianEigen {
  Eigen::Matrix<double, N, 1> values;  // descending
  Mat<cplx, N> vectors;                // columns, m = V diag(values) V^dagger
};

/// Spectrum of a Hermitian matrix, eigenvalues in descending order and
/// eigenvector phases fixed so the output is reproducible.
template <class Derived>
HermitianEigen<Derived::RowsAtCompileTime> eig_hermitian(const Eigen::MatrixBase<Derived>& m,
                                                         double tol = default_tolerance) {
  constexpr int N = Derived::RowsAtCompileTime;
  using Matrix = Mat<cplx, N>;
  const double residual = hermiticity_residual(m);
  if (residual > tol)
    throw Error(ErrorKind::NotHermitian,
                "eig_hermitian: |m - m^dagger| = " + std::to_string(residual));
  const Matrix sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  const Eigen::Index n = sym.rows();

  HermitianEigen<N> out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  // Solver order is ascending; reverse for descending.
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  normalize_column_phases(out.vectors);
  return out;
}

/// Standard von Neumann entropy of a spectrum in bits, 0 log 0 = 0.
template <class Derived>
double entropy_bits(const Eigen::MatrixBase<Derived>& spectrum) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    const double p = spectrum(i);
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

template <class Derived>
CMatX block_diag(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Derived>& b) {
  CMatX out = CMatX::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

inline CMat4 block_diag(const CMat2& a, const CMat2& b) {
  CMat4 out = CMat4::Zero();
  out.topLeftCorner<2, 2>() = a;
  out.bottomRightCorner<2, 2>() = b;
  return out;
}

/// Named residual produced by every identity check in the library.
struct CheckResult {
  std::string id;
  std::string equation;
  double residual = 0.0;
  bool pass = false;
};

inline CheckResult make_check(std::string id, std::string equation, double residual, double tol) {
  return CheckResult{std::move(id), std::move(equation), residual, std::isfinite(residual) && residual <= tol};
}

}  // namespace twofold
