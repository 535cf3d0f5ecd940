#include "matadj/ncm.hpp"

#include "matadj/matfun.hpp"
#include "matadj/scalar_function.hpp"

namespace matadj {

namespace {

struct DualState {
  SymEig eig;
  RealMatrix f;
  Vector residual;  // M(y) - e
};

DualState evaluate_dual(const RealMatrix& a, const Vector& y, const ScalarFunction& cut) {
  DualState st;
  st.eig = sym_eig(RealMatrix(a + ddiag(y)));
  st.f = loewner(st.eig.lambda, cut);
  const Eigen::Index n = a.rows();
  st.residual.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double acc = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      const double lk = st.eig.lambda(k);
      if (lk > 0.0) acc += st.eig.u(i, k) * st.eig.u(i, k) * lk;
    }
    st.residual(i) = acc - 1.0;
  }
  return st;
}

}  // namespace

Vector dual_residual(const RealMatrix& a, const Vector& y) {
  if (y.size() != a.rows()) throw ShapeError("dual_residual: y length mismatch");
  return evaluate_dual(a, y, cutoff_fn()).residual;
}

RealMatrix ncm_jacobian(const RealMatrix& v, const RealMatrix& f) {
  const Eigen::Index n = v.rows();
  if (v.cols() != n || f.rows() != n || f.cols() != n)
    throw ShapeError("ncm_jacobian: shape mismatch");
  RealMatrix j(n, n);
  RealMatrix w(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index l = 0; l < n; ++l) w(k, l) = v(i, k) * v(i, l) * f(k, l);
    for (Eigen::Index jj = 0; jj < n; ++jj) {
      double acc = 0.0;
      for (Eigen::Index k = 0; k < n; ++k) {
        double row = 0.0;
        for (Eigen::Index l = 0; l < n; ++l) row += w(k, l) * v(jj, l);
        acc += v(jj, k) * row;
      }
      j(i, jj) = acc;
    }
  }
  return j;
}

NcmSolution solve_dual(const RealMatrix& a, double tol, int max_iter) {
  const Eigen::Index n = a.rows();
  const ScalarFunction cut = cutoff_fn();
  Vector y = Vector::Zero(n);
  DualState st = evaluate_dual(a, y, cut);

  NcmSolution sol;
  sol.iterations = 0;
  bool converged = st.residual.cwiseAbs().maxCoeff() <= tol;

  for (int it = 0; it < max_iter && !converged; ++it) {
    const double rnorm = st.residual.cwiseAbs().maxCoeff();
    RealMatrix j = ncm_jacobian(st.eig.u, st.f);
    RealMatrix rhs(n, 1);
    rhs.col(0) = st.residual;
    RealMatrix dy;
    try {
      dy = lu_solve(j, rhs);
    } catch (const SingularityError&) {
      // kink: an eigenvalue of A + ddiag(y) sits at 0; damp the step only
      j += 1e-12 * RealMatrix::Identity(n, n);
      dy = lu_solve(j, rhs);
    }
    double t = 1.0;
    Vector y_new;
    DualState st_new;
    for (int halving = 0; halving <= 20; ++halving) {
      y_new = y - t * dy.col(0);
      st_new = evaluate_dual(a, y_new, cut);
      if (st_new.residual.cwiseAbs().maxCoeff() < rnorm) break;
      t *= 0.5;
    }
    y = y_new;
    st = std::move(st_new);
    sol.iterations = it + 1;
    converged = st.residual.cwiseAbs().maxCoeff() <= tol;
  }

  sol.residual = st.residual.cwiseAbs().maxCoeff();
  if (!converged)
    throw ConvergenceError("solve_dual: no convergence in " + std::to_string(max_iter) +
                               " iterations, residual " + std::to_string(sol.residual),
                           sol.residual);

  // the cached decomposition already corresponds to the accepted y*
  sol.y_star = y;
  sol.v = st.eig.u;
  sol.lambda = st.eig.lambda;
  sol.f = st.f;
  sol.j = ncm_jacobian(sol.v, sol.f);
  Vector lp = sol.lambda.cwiseMax(0.0);
  const RealMatrix c = matmul(matmul(sol.v, ddiag(lp)), RealMatrix(sol.v.transpose()));
  sol.c = 0.5 * (c + RealMatrix(c.transpose()));
  return sol;
}

RealMatrix ncm_adjoint(const NcmSolution& sol, const RealMatrix& seed) {
  const Eigen::Index n = sol.v.rows();
  if (seed.rows() != n || seed.cols() != n)
    throw ShapeError("ncm_adjoint: seed shape mismatch");
  const RealMatrix vt = sol.v.transpose();
  const RealMatrix a2 =
      matmul(matmul(sol.v, RealMatrix(hadamard(sol.f, RealMatrix(matmul(matmul(vt, seed), sol.v))))), vt);

  RealMatrix rhs(n, 1);
  rhs.col(0) = diag_of(a2);
  const RealMatrix jt = sol.j.transpose();
  const RealMatrix m_bar = -lu_solve(jt, rhs);

  const RealMatrix inner = matmul(matmul(vt, ddiag(m_bar.col(0))), sol.v);
  const RealMatrix a1 = matmul(matmul(sol.v, RealMatrix(hadamard(sol.f, inner))), vt);
  return a1 + a2;
}

}  // namespace matadj
