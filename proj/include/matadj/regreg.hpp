#ifndef MATADJ_REGREG_HPP
#define MATADJ_REGREG_HPP

#include <utility>

#include "matadj/core.hpp"
#include "matadj/eig.hpp"
#include "matadj/scalar_function.hpp"

namespace matadj {

// Regularized regression beta = (A A^T)^{-1}_{eps,lam} A B and its adjoints.

struct RegParams {
  double eps = 0.0;  // spectrum threshold
  double lam = 0.0;  // Tikhonov parameter
  ThresholdMode mode = ThresholdMode::truncate;
};

struct RegSolution {
  RealMatrix beta;   // m x k
  RealMatrix m;      // Gram matrix A A^T
  SymEig eig_m;
  RealMatrix m_inv;  // regularized inverse of m
};

/// U ddiag(s(l_i - eps) / (l_i + lam)) U^T; s is sgn or the Heaviside
/// indicator depending on the mode.
RealMatrix reg_inverse(const SymEig& eig_m, const RegParams& params);

/// Mbar = U (F o (U^T seed U)) U^T with F the divided differences of the
/// same scalar map as the primal mode.
RealMatrix reg_inverse_adjoint(const SymEig& eig_m, const RegParams& params,
                               const RealMatrix& seed);

RegSolution reg_beta(const RealMatrix& a, const RealMatrix& b, const RegParams& params);

/// Returns (Abar, Bbar) for the seed on beta.
std::pair<RealMatrix, RealMatrix> reg_beta_adjoint(const RegSolution& sol, const RealMatrix& a,
                                                   const RealMatrix& b, const RegParams& params,
                                                   const RealMatrix& seed_beta);

}  // namespace matadj

#endif
