#include "matadj/matfun.hpp"

namespace matadj {

RealMatrix loewner(const Vector& lambda, const ScalarFunction& f) {
  const Eigen::Index n = lambda.size();
  RealMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double li = lambda(i), lj = lambda(j);
      const double tie = 1e-12 * std::max({1.0, std::abs(li), std::abs(lj)});
      out(i, j) = std::abs(li - lj) <= tie ? f.deriv(li)
                                           : (f.eval(li) - f.eval(lj)) / (li - lj);
    }
  }
  return out;
}

RealMatrix primal(const SymEig& eig, const ScalarFunction& f) {
  Vector fl(eig.lambda.size());
  for (Eigen::Index i = 0; i < fl.size(); ++i) fl(i) = f.eval(eig.lambda(i));
  const RealMatrix c = matmul(matmul(eig.u, ddiag(fl)), RealMatrix(eig.u.transpose()));
  return 0.5 * (c + RealMatrix(c.transpose()));
}

RealMatrix adjoint_sym(const SymEig& eig, const ScalarFunction& f, const RealMatrix& seed) {
  const Eigen::Index n = eig.u.rows();
  if (seed.rows() != n || seed.cols() != n)
    throw ShapeError("adjoint_sym: seed shape mismatch");
  const RealMatrix fm = loewner(eig.lambda, f);
  const RealMatrix ut = eig.u.transpose();
  const RealMatrix inner = matmul(matmul(ut, seed), eig.u);
  return matmul(matmul(eig.u, hadamard(fm, inner)), ut);
}

RealMatrix adjoint_general(const GeneralEig& ge, const ScalarFunction& f, const RealMatrix& seed) {
  const Eigen::Index n = ge.u.rows();
  if (seed.rows() != n || seed.cols() != n)
    throw ShapeError("adjoint_general: seed shape mismatch");
  const RealMatrix fm = loewner(ge.lambda, f);
  const RealMatrix seed_t = seed.transpose();
  const RealMatrix inner = matmul(matmul(ge.u_inv, seed_t), ge.u);
  const RealMatrix abar_t = matmul(matmul(ge.u, hadamard(fm, inner)), ge.u_inv);
  return abar_t.transpose();
}

}  // namespace matadj
