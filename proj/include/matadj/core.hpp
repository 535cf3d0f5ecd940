#ifndef MATADJ_CORE_HPP
#define MATADJ_CORE_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace matadj {

// Row-major throughout; accumulation order is fixed so results are
// reproducible run to run.
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using RealMatrix    = Matrix<double>;
using ComplexMatrix = Matrix<std::complex<double>>;
using Vector        = Eigen::VectorXd;

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularityError : std::runtime_error {
  double pivot;
  SingularityError(const std::string& what, double pivot_magnitude)
      : std::runtime_error(what), pivot(pivot_magnitude) {}
};

struct ConvergenceError : std::runtime_error {
  double residual;
  ConvergenceError(const std::string& what, double final_residual)
      : std::runtime_error(what), residual(final_residual) {}
};

struct ParseError : std::runtime_error {
  std::string file;
  int line;
  ParseError(const std::string& file_, int line_, const std::string& what)
      : std::runtime_error(file_ + ":" + std::to_string(line_) + ": " + what),
        file(file_), line(line_) {}
};

struct UnsupportedFunctionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContourError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Scalar>
bool all_finite(const Matrix<Scalar>& x) {
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      if (!std::isfinite(std::abs(x(i, j)))) return false;
  return true;
}

template <class Scalar>
void require_finite(const Matrix<Scalar>& x, const char* what) {
  if (!all_finite(x))
    throw DomainError(std::string(what) + ": non-finite entry");
}

/// Product with a fixed row-major accumulation order (k ascending per entry).
template <class Scalar>
Matrix<Scalar> matmul(const Matrix<Scalar>& x, const Matrix<Scalar>& y) {
  if (x.cols() != y.rows())
    throw ShapeError("matmul: inner dimensions " + std::to_string(x.cols()) +
                     " and " + std::to_string(y.rows()) + " differ");
  Matrix<Scalar> out(x.rows(), y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < y.cols(); ++j) {
      Scalar acc{};
      for (Eigen::Index k = 0; k < x.cols(); ++k) acc += x(i, k) * y(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

template <class Scalar>
Matrix<Scalar> hadamard(const Matrix<Scalar>& x, const Matrix<Scalar>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw ShapeError("hadamard: shape mismatch");
  return x.cwiseProduct(y);
}

template <class Scalar>
Matrix<Scalar> transpose(const Matrix<Scalar>& x) {
  return x.transpose();
}

inline Vector diag_of(const RealMatrix& x) {
  if (x.rows() != x.cols())
    throw ShapeError("diag_of: matrix is not square");
  return x.diagonal();
}

inline RealMatrix ddiag(const Vector& v) {
  RealMatrix out = RealMatrix::Zero(v.size(), v.size());
  out.diagonal() = v;
  return out;
}

inline double frobenius_norm(const RealMatrix& x) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) acc += x(i, j) * x(i, j);
  return std::sqrt(acc);
}

inline RealMatrix identity(Eigen::Index n) { return RealMatrix::Identity(n, n); }

/// Solve X S = RHS by LU with partial pivoting. Works for real and complex
/// scalars; throws SingularityError carrying the offending pivot magnitude.
template <class Scalar>
Matrix<Scalar> lu_solve(const Matrix<Scalar>& x, const Matrix<Scalar>& rhs) {
  const Eigen::Index n = x.rows();
  if (x.cols() != n) throw ShapeError("lu_solve: matrix is not square");
  if (rhs.rows() != n) throw ShapeError("lu_solve: rhs row count mismatch");

  Matrix<Scalar> a = x;
  Matrix<Scalar> s = rhs;

  double scale = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
  const double tol =
      static_cast<double>(n) * std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);

  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = k;
    double best = std::abs(a(k, k));
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const double m = std::abs(a(i, k));
      if (m > best) { best = m; piv = i; }
    }
    if (best <= tol)
      throw SingularityError("lu_solve: singular to working precision (pivot " +
                                 std::to_string(best) + ")",
                             best);
    if (piv != k) {
      a.row(k).swap(a.row(piv));
      s.row(k).swap(s.row(piv));
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const Scalar m = a(i, k) / a(k, k);
      a(i, k) = m;
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
      for (Eigen::Index j = 0; j < s.cols(); ++j) s(i, j) -= m * s(k, j);
    }
  }
  // back substitution
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    for (Eigen::Index j = 0; j < s.cols(); ++j) {
      Scalar acc = s(k, j);
      for (Eigen::Index i = k + 1; i < n; ++i) acc -= a(k, i) * s(i, j);
      s(k, j) = acc / a(k, k);
    }
  }
  return s;
}

}  // namespace matadj

#endif
