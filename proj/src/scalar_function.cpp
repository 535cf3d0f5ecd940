#include "matadj/scalar_function.hpp"

#include <sstream>

namespace matadj {

namespace {

using Cplx = std::complex<double>;

double step(double t, ThresholdMode mode) {
  if (t > 0.0) return 1.0;
  if (t < 0.0) return mode == ThresholdMode::sgn ? -1.0 : 0.0;
  return 0.0;
}

}  // namespace

ScalarFunction identity_fn() {
  ScalarFunction f;
  f.name = "identity";
  f.eval = [](double x) { return x; };
  f.deriv = [](double) { return 1.0; };
  f.complex_eval = [](Cplx z, double) { return z; };
  return f;
}

ScalarFunction square_fn() {
  ScalarFunction f;
  f.name = "square";
  f.eval = [](double x) { return x * x; };
  f.deriv = [](double x) { return 2.0 * x; };
  f.complex_eval = [](Cplx z, double) { return z * z; };
  return f;
}

ScalarFunction exp_fn() {
  ScalarFunction f;
  f.name = "exp";
  f.eval = [](double x) { return std::exp(x); };
  f.deriv = [](double x) { return std::exp(x); };
  f.complex_eval = [](Cplx z, double) { return std::exp(z); };
  return f;
}

ScalarFunction cutoff_fn() {
  ScalarFunction f;
  f.name = "cutoff";
  f.eval = [](double x) { return x > 0.0 ? x : 0.0; };
  f.deriv = [](double x) { return x > 0.0 ? 1.0 : 0.0; };
  // holomorphic per disc: identity on positive clusters, zero elsewhere
  f.complex_eval = [](Cplx z, double center) { return center > 0.0 ? z : Cplx{0.0, 0.0}; };
  f.kinks = {0.0};
  return f;
}

ScalarFunction smooth_cutoff_fn(double delta) {
  if (!(delta > 0.0)) throw DomainError("smooth_cutoff_fn: delta must be positive");
  ScalarFunction f;
  f.name = "cutoff-smooth:" + std::to_string(delta);
  f.eval = [delta](double x) { return x * 0.5 * (1.0 + std::tanh(x / delta)); };
  f.deriv = [delta](double x) {
    const double t = std::tanh(x / delta);
    return 0.5 * (1.0 + t) + x * 0.5 * (1.0 - t * t) / delta;
  };
  f.complex_eval = [delta](Cplx z, double) { return z * 0.5 * (1.0 + std::tanh(z / delta)); };
  return f;
}

ScalarFunction reg_inverse_fn(double eps, double lam, ThresholdMode mode) {
  if (eps < 0.0 || lam < 0.0)
    throw DomainError("reg_inverse_fn: eps and lam must be nonnegative");
  ScalarFunction f;
  f.name = std::string("reginv:") + std::to_string(eps) + ":" + std::to_string(lam) + ":" +
           (mode == ThresholdMode::sgn ? "sgn" : "truncate");
  f.eval = [eps, lam, mode](double x) { return step(x - eps, mode) / (x + lam); };
  f.deriv = [eps, lam, mode](double x) {
    const double d = x + lam;
    return -step(x - eps, mode) / (d * d);
  };
  f.complex_eval = [eps, lam, mode](Cplx z, double center) {
    return step(center - eps, mode) / (z + lam);
  };
  f.kinks = {eps, -lam};
  return f;
}

ScalarFunction make_function(const std::string& name) {
  if (name == "identity") return identity_fn();
  if (name == "square") return square_fn();
  if (name == "exp") return exp_fn();
  if (name == "cutoff") return cutoff_fn();

  std::vector<std::string> parts;
  {
    std::istringstream in(name);
    std::string tok;
    while (std::getline(in, tok, ':')) parts.push_back(tok);
  }
  try {
    if (parts.size() == 2 && parts[0] == "cutoff-smooth")
      return smooth_cutoff_fn(std::stod(parts[1]));
    if (parts.size() == 4 && parts[0] == "reginv") {
      ThresholdMode mode;
      if (parts[3] == "sgn") mode = ThresholdMode::sgn;
      else if (parts[3] == "truncate") mode = ThresholdMode::truncate;
      else throw UnsupportedFunctionError("unknown reginv mode '" + parts[3] + "'");
      return reg_inverse_fn(std::stod(parts[1]), std::stod(parts[2]), mode);
    }
  } catch (const std::invalid_argument&) {
    throw UnsupportedFunctionError("bad numeric parameter in function '" + name + "'");
  }
  throw UnsupportedFunctionError("unknown function '" + name + "'");
}

}  // namespace matadj
