#ifndef MATADJ_NCM_HPP
#define MATADJ_NCM_HPP

#include "matadj/core.hpp"
#include "matadj/eig.hpp"

namespace matadj {

// Nearest Correlation Matrix: dual Newton solve for y* with
// C = (A + ddiag(y*))_+, and the implicit-function adjoint through it.

struct NcmSolution {
  RealMatrix c;       // the nearest correlation matrix
  Vector y_star;      // dual solution
  RealMatrix v;       // eigenvectors of A + ddiag(y*)
  Vector lambda;      // its spectrum, ascending
  RealMatrix f;       // cut-off divided differences at lambda
  RealMatrix j;       // Jacobian of the dual residual at y*
  int iterations = 0;
  double residual = 0.0;  // |M(y*) - e|_inf
};

/// M(y) - e = diag((A + ddiag(y))_+) - e.
Vector dual_residual(const RealMatrix& a, const Vector& y);

/// Jacobian of y -> dual_residual(A, y):
/// J_ij = V.row(j) T^{ij} V.row(j)^T with [T^{ij}]_kl = V_ik V_il F_kl.
RealMatrix ncm_jacobian(const RealMatrix& v, const RealMatrix& f);

/// Damped dense Newton from y = 0 on |M(y) - e|_inf.
NcmSolution solve_dual(const RealMatrix& a, double tol = 1e-10, int max_iter = 50);

/// Abar = Abar1 + Abar2 with Abar2 = V(F o (V^T seed V))V^T,
/// Mbar = -J^{-T} diag(Abar2), Abar1 = V(F o (V^T ddiag(Mbar) V))V^T.
RealMatrix ncm_adjoint(const NcmSolution& sol, const RealMatrix& seed);

}  // namespace matadj

#endif
