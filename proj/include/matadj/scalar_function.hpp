#ifndef MATADJ_SCALAR_FUNCTION_HPP
#define MATADJ_SCALAR_FUNCTION_HPP

#include <functional>
#include <string>
#include <vector>

#include "matadj/core.hpp"

namespace matadj {

enum class ThresholdMode { sgn, truncate };

/// The scalar map behind f(A). `complex_eval` is the extension used by the
/// contour oracle; it receives the disc center so piecewise functions can
/// pick a branch per eigenvalue cluster. `kinks` lists non-smooth points so
/// finite-difference harnesses can stay away from them.
struct ScalarFunction {
  std::string name;
  std::function<double(double)> eval;
  std::function<double(double)> deriv;
  std::function<std::complex<double>(std::complex<double>, double)> complex_eval;  // may be empty
  std::vector<double> kinks;

  bool has_complex() const { return static_cast<bool>(complex_eval); }
};

ScalarFunction identity_fn();
ScalarFunction square_fn();
ScalarFunction exp_fn();

/// Spectrum cut-off max(x, 0). Derivative at 0 is the subgradient choice 0.
ScalarFunction cutoff_fn();

/// Smooth cut-off x * (1 + tanh(x/delta)) / 2; tends to max(x, 0) as delta -> 0.
ScalarFunction smooth_cutoff_fn(double delta);

/// Regularized reciprocal s(x - eps) / (x + lam) with s = sgn (sgn)
/// or the Heaviside indicator (truncate); s(0) = 0 in both modes.
ScalarFunction reg_inverse_fn(double eps, double lam, ThresholdMode mode);

/// Registry lookup: identity, square, exp, cutoff, cutoff-smooth:DELTA,
/// reginv:EPS:LAM:MODE (MODE in {truncate, sgn}).
ScalarFunction make_function(const std::string& name);

}  // namespace matadj

#endif
