#include "matadj/eig.hpp"

#include <algorithm>
#include <numeric>

namespace matadj {

namespace {

double off_diagonal_norm(const RealMatrix& a) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) acc += a(i, j) * a(i, j);
  return std::sqrt(acc);
}

}  // namespace

SymEig sym_eig(const RealMatrix& input) {
  const Eigen::Index n = input.rows();
  if (input.cols() != n) throw ShapeError("sym_eig: matrix is not square");
  require_finite(input, "sym_eig");

  const double norm = frobenius_norm(input);
  {
    const RealMatrix skew = input - RealMatrix(input.transpose());
    if (frobenius_norm(skew) > 1e-12 * std::max(1.0, norm))
      throw DomainError("sym_eig: input is not symmetric within tolerance");
  }

  RealMatrix a = 0.5 * (input + RealMatrix(input.transpose()));
  RealMatrix u = RealMatrix::Identity(n, n);

  const double thresh = 1e-14 * norm;
  const int max_sweeps = 30;
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= thresh) { converged = true; break; }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double ukp = u(k, p), ukq = u(k, q);
          u(k, p) = c * ukp - s * ukq;
          u(k, q) = s * ukp + c * ukq;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a) > thresh)
    throw ConvergenceError("sym_eig: Jacobi did not converge in 30 sweeps, off-diagonal mass " +
                               std::to_string(off_diagonal_norm(a)),
                           off_diagonal_norm(a));

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

  SymEig out;
  out.u.resize(n, n);
  out.lambda.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index src = order[j];
    out.lambda(j) = a(src, src);
    out.u.col(j) = u.col(src);
    // sign convention: largest-magnitude entry positive, ties -> lowest index
    Eigen::Index imax = 0;
    double best = std::abs(out.u(0, j));
    for (Eigen::Index i = 1; i < n; ++i) {
      const double m = std::abs(out.u(i, j));
      if (m > best) { best = m; imax = i; }
    }
    if (out.u(imax, j) < 0.0) out.u.col(j) = -out.u.col(j);
  }
  return out;
}

GeneralEig general_decomposition(const RealMatrix& u, const Vector& lambda) {
  if (u.rows() != u.cols()) throw ShapeError("general_decomposition: U is not square");
  if (lambda.size() != u.rows())
    throw ShapeError("general_decomposition: eigenvalue count mismatch");
  require_finite(u, "general_decomposition");
  GeneralEig out;
  out.u = u;
  out.u_inv = lu_solve(u, RealMatrix(RealMatrix::Identity(u.rows(), u.rows())));
  out.lambda = lambda;
  return out;
}

}  // namespace matadj
