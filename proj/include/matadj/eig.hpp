#ifndef MATADJ_EIG_HPP
#define MATADJ_EIG_HPP

#include "matadj/core.hpp"

namespace matadj {

/// Spectral decomposition A = U diag(lambda) U^T of a symmetric matrix,
/// eigenvalues ascending, columns of U orthonormal.
struct SymEig {
  RealMatrix u;
  Vector lambda;
};

/// User-supplied decomposition A = U diag(lambda) U^{-1} for diagonalizable
/// matrices with real spectrum; U^{-1} is computed once on construction.
struct GeneralEig {
  RealMatrix u;
  RealMatrix u_inv;
  Vector lambda;
};

/// Cyclic-by-rows Jacobi. Deterministic: eigenpairs sorted ascending, each
/// eigenvector's largest-magnitude entry made positive (ties -> lowest index).
SymEig sym_eig(const RealMatrix& a);

GeneralEig general_decomposition(const RealMatrix& u, const Vector& lambda);

}  // namespace matadj

#endif
