#ifndef MATADJ_MATFUN_HPP
#define MATADJ_MATFUN_HPP

#include "matadj/core.hpp"
#include "matadj/eig.hpp"
#include "matadj/scalar_function.hpp"

namespace matadj {

/// Divided-difference matrix: F_ij = (f(l_i) - f(l_j)) / (l_i - l_j) for
/// well-separated pairs, f'(l_i) when |l_i - l_j| <= 1e-12 max(1,|l_i|,|l_j|).
RealMatrix loewner(const Vector& lambda, const ScalarFunction& f);

/// f(A) = U diag(f(lambda)) U^T, symmetrized.
RealMatrix primal(const SymEig& eig, const ScalarFunction& f);

/// Abar = U (F o (U^T seed U)) U^T.
RealMatrix adjoint_sym(const SymEig& eig, const ScalarFunction& f, const RealMatrix& seed);

/// Abar^T = U (F o (U^{-1} seed^T U)) U^{-1}, returned transposed back.
RealMatrix adjoint_general(const GeneralEig& ge, const ScalarFunction& f, const RealMatrix& seed);

}  // namespace matadj

#endif
