#include "matadj/regreg.hpp"

#include "matadj/matfun.hpp"

namespace matadj {

namespace {

void check_denominators(const SymEig& eig_m, const RegParams& params) {
  for (Eigen::Index i = 0; i < eig_m.lambda.size(); ++i) {
    const double d = eig_m.lambda(i) + params.lam;
    if (std::abs(d) <= 1e-14)
      throw SingularityError("reg_inverse: eigenvalue denominator " + std::to_string(d) +
                                 " below guard",
                             std::abs(d));
  }
}

}  // namespace

RealMatrix reg_inverse(const SymEig& eig_m, const RegParams& params) {
  check_denominators(eig_m, params);
  const ScalarFunction g = reg_inverse_fn(params.eps, params.lam, params.mode);
  Vector gl(eig_m.lambda.size());
  for (Eigen::Index i = 0; i < gl.size(); ++i) gl(i) = g.eval(eig_m.lambda(i));
  const RealMatrix out = matmul(matmul(eig_m.u, ddiag(gl)), RealMatrix(eig_m.u.transpose()));
  return 0.5 * (out + RealMatrix(out.transpose()));
}

RealMatrix reg_inverse_adjoint(const SymEig& eig_m, const RegParams& params,
                               const RealMatrix& seed) {
  check_denominators(eig_m, params);
  const ScalarFunction g = reg_inverse_fn(params.eps, params.lam, params.mode);
  return adjoint_sym(eig_m, g, seed);
}

RegSolution reg_beta(const RealMatrix& a, const RealMatrix& b, const RegParams& params) {
  if (a.cols() != b.rows())
    throw ShapeError("reg_beta: A is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " but B has " + std::to_string(b.rows()) + " rows");
  RegSolution sol;
  sol.m = matmul(a, RealMatrix(a.transpose()));
  sol.eig_m = sym_eig(sol.m);
  sol.m_inv = reg_inverse(sol.eig_m, params);
  sol.beta = matmul(sol.m_inv, RealMatrix(matmul(a, b)));
  return sol;
}

std::pair<RealMatrix, RealMatrix> reg_beta_adjoint(const RegSolution& sol, const RealMatrix& a,
                                                   const RealMatrix& b, const RegParams& params,
                                                   const RealMatrix& seed_beta) {
  if (seed_beta.rows() != sol.beta.rows() || seed_beta.cols() != sol.beta.cols())
    throw ShapeError("reg_beta_adjoint: seed shape mismatch");
  const RealMatrix ab = matmul(a, b);
  const RealMatrix minv_t = sol.m_inv.transpose();

  // beta = Minv (A B): chain the matmul adjoints with the spectral one for Minv
  const RealMatrix seed_minv = matmul(seed_beta, RealMatrix(ab.transpose()));
  const RealMatrix m_bar = reg_inverse_adjoint(sol.eig_m, params, seed_minv);

  const RealMatrix m_bar_sym = m_bar + RealMatrix(m_bar.transpose());
  RealMatrix a_bar = matmul(m_bar_sym, a);  // from M = A A^T
  a_bar += matmul(matmul(minv_t, seed_beta), RealMatrix(b.transpose()));
  const RealMatrix b_bar = matmul(RealMatrix(a.transpose()), RealMatrix(matmul(minv_t, seed_beta)));
  return {a_bar, b_bar};
}

}  // namespace matadj
