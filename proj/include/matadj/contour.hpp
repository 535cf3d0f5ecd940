#ifndef MATADJ_CONTOUR_HPP
#define MATADJ_CONTOUR_HPP

#include <vector>

#include "matadj/core.hpp"
#include "matadj/scalar_function.hpp"

namespace matadj {

// Contour quadrature over circles around eigenvalue clusters. This path is
// the implementation-independent oracle for the spectral closed forms.

struct Circle {
  double center;
  double radius;
};

struct Contour {
  std::vector<Circle> circles;
  int points_per_circle = 64;
};

/// (A - zI)^{-1} by complex LU.
ComplexMatrix resolvent(const RealMatrix& a, std::complex<double> z);

/// One circle per eigenvalue cluster (gap tolerance 1e-8 max(1, |lambda|_inf)),
/// radius a quarter of the smallest gap to any outside eigenvalue, clamped to
/// [1e-3, 1.0]. positive_only keeps clusters with center > 0.
Contour build_contour(const Vector& lambda, bool positive_only, int points_per_circle = 64);

/// Trapezoid discretization of f(A) = -(2 pi i)^{-1} integral of f(z) res(z).
RealMatrix primal_quadrature(const RealMatrix& a, const ScalarFunction& f, const Contour& contour);

/// Trapezoid discretization of
/// Abar = (2 pi i)^{-1} integral of f(z) res(z)^T seed res(z)^T.
RealMatrix adjoint_quadrature(const RealMatrix& a, const ScalarFunction& f,
                              const Contour& contour, const RealMatrix& seed);

}  // namespace matadj

#endif
