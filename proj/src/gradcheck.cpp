#include "matadj/gradcheck.hpp"

namespace matadj {

double default_step(const RealMatrix& a) {
  return 1e-6 * std::max(1.0, a.cwiseAbs().maxCoeff());
}

namespace {

double inner(const RealMatrix& x, const RealMatrix& y) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) acc += x(i, j) * y(i, j);
  return acc;
}

double probe(const MatrixMap& primal_map, const RealMatrix& a, const RealMatrix& seed,
             const RealMatrix& dir, double h, Eigen::Index i, Eigen::Index j) {
  RealMatrix plus, minus;
  try {
    plus = primal_map(RealMatrix(a + h * dir));
    minus = primal_map(RealMatrix(a - h * dir));
  } catch (const std::exception& e) {
    throw DomainError("fd_adjoint: primal failed at perturbation (" + std::to_string(i) + "," +
                      std::to_string(j) + "): " + e.what());
  }
  return inner(seed, RealMatrix(plus - minus)) / (2.0 * h);
}

}  // namespace

RealMatrix fd_adjoint(const MatrixMap& primal_map, const RealMatrix& a, const RealMatrix& seed,
                      double h, bool symmetrize) {
  if (!(h > 0.0)) throw DomainError("fd_adjoint: h must be positive");
  const Eigen::Index rows = a.rows(), cols = a.cols();
  RealMatrix out(rows, cols);
  RealMatrix dir = RealMatrix::Zero(rows, cols);
  if (symmetrize) {
    if (rows != cols) throw ShapeError("fd_adjoint: symmetrize requires a square matrix");
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = i; j < cols; ++j) {
        dir.setZero();
        if (i == j) {
          dir(i, i) = 1.0;
        } else {
          dir(i, j) = 0.5;
          dir(j, i) = 0.5;
        }
        const double g = probe(primal_map, a, seed, dir, h, i, j);
        out(i, j) = g;
        out(j, i) = g;
      }
    }
  } else {
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) {
        dir.setZero();
        dir(i, j) = 1.0;
        out(i, j) = probe(primal_map, a, seed, dir, h, i, j);
      }
    }
  }
  return out;
}

double fd_directional(const MatrixMap& primal_map, const RealMatrix& a, const RealMatrix& seed,
                      const RealMatrix& dir, double h) {
  if (!(h > 0.0)) throw DomainError("fd_directional: h must be positive");
  return probe(primal_map, a, seed, dir, h, -1, -1);
}

RealMatrix symmetric_convention(const RealMatrix& a_bar) {
  return 0.5 * (a_bar + RealMatrix(a_bar.transpose()));
}

FdReport compare(const RealMatrix& analytic, const RealMatrix& fd, double atol, double rtol) {
  if (analytic.rows() != fd.rows() || analytic.cols() != fd.cols())
    throw ShapeError("compare: shape mismatch");
  FdReport rep;
  rep.n_checks = static_cast<int>(analytic.size());
  for (Eigen::Index i = 0; i < analytic.rows(); ++i) {
    for (Eigen::Index j = 0; j < analytic.cols(); ++j) {
      const double abs_err = std::abs(analytic(i, j) - fd(i, j));
      const double rel_err = abs_err / std::max(std::abs(fd(i, j)), 1e-300);
      if (abs_err > rep.max_abs_err) {
        rep.max_abs_err = abs_err;
        rep.worst_row = i;
        rep.worst_col = j;
      }
      if (std::abs(fd(i, j)) > atol) rep.max_rel_err = std::max(rep.max_rel_err, rel_err);
      if (abs_err > atol + rtol * std::abs(fd(i, j))) rep.passed = false;
    }
  }
  return rep;
}

}  // namespace matadj
