#ifndef MATADJ_GRADCHECK_HPP
#define MATADJ_GRADCHECK_HPP

#include <functional>

#include "matadj/core.hpp"

namespace matadj {

// Central-difference oracles arbitrating the analytic adjoints.

using MatrixMap = std::function<RealMatrix(const RealMatrix&)>;

struct FdReport {
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  Eigen::Index worst_row = 0;
  Eigen::Index worst_col = 0;
  double h = 0.0;
  int n_checks = 0;
  bool passed = true;
};

double default_step(const RealMatrix& a);

/// Entry (i,j) = <seed, map(A + h E_ij) - map(A - h E_ij)> / 2h.
/// With symmetrize set, perturbations use (E_ij + E_ji)/2 for i < j and the
/// symmetric value is stored at both (i,j) and (j,i); compare such output
/// against symmetric_convention() of a full-matrix analytic adjoint.
RealMatrix fd_adjoint(const MatrixMap& primal_map, const RealMatrix& a, const RealMatrix& seed,
                      double h, bool symmetrize);

/// <seed, map(A + h dir) - map(A - h dir)> / 2h.
double fd_directional(const MatrixMap& primal_map, const RealMatrix& a, const RealMatrix& seed,
                      const RealMatrix& dir, double h);

/// (Abar + Abar^T)/2 — the symmetric-perturbation convention of fd_adjoint.
RealMatrix symmetric_convention(const RealMatrix& a_bar);

/// Elementwise |analytic - fd| <= atol + rtol |fd| classification.
FdReport compare(const RealMatrix& analytic, const RealMatrix& fd, double atol, double rtol);

}  // namespace matadj

#endif
