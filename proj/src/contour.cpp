#include "matadj/contour.hpp"

#include <algorithm>
#include <numbers>

namespace matadj {

namespace {

using Cplx = std::complex<double>;

ComplexMatrix to_complex(const RealMatrix& a) {
  return a.cast<Cplx>();
}

void check_imag_residue(const ComplexMatrix& acc, const char* what) {
  double re = 0.0, im = 0.0;
  for (Eigen::Index i = 0; i < acc.rows(); ++i)
    for (Eigen::Index j = 0; j < acc.cols(); ++j) {
      re += acc(i, j).real() * acc(i, j).real();
      im += acc(i, j).imag() * acc(i, j).imag();
    }
  re = std::sqrt(re);
  im = std::sqrt(im);
  if (im > 1e-8 * re + 1e-12)
    throw DomainError(std::string(what) + ": imaginary residue " + std::to_string(im) +
                      " exceeds bound, quadrature inaccurate or branch invalid");
}

RealMatrix real_part(const ComplexMatrix& acc) {
  RealMatrix out(acc.rows(), acc.cols());
  for (Eigen::Index i = 0; i < acc.rows(); ++i)
    for (Eigen::Index j = 0; j < acc.cols(); ++j) out(i, j) = acc(i, j).real();
  return out;
}

}  // namespace

ComplexMatrix resolvent(const RealMatrix& a, Cplx z) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw ShapeError("resolvent: matrix is not square");
  ComplexMatrix shifted = to_complex(a);
  for (Eigen::Index i = 0; i < n; ++i) shifted(i, i) -= z;
  ComplexMatrix rhs = ComplexMatrix::Identity(n, n);
  return lu_solve(shifted, rhs);
}

Contour build_contour(const Vector& lambda, bool positive_only, int points_per_circle) {
  if (lambda.size() == 0) throw ContourError("build_contour: empty spectrum");
  if (points_per_circle <= 0) throw ContourError("build_contour: points_per_circle must be positive");
  require_finite(RealMatrix(lambda), "build_contour");

  std::vector<double> sorted(lambda.data(), lambda.data() + lambda.size());
  std::sort(sorted.begin(), sorted.end());
  const double gap_tol = 1e-8 * std::max(1.0, std::abs(sorted.back()) > std::abs(sorted.front())
                                                  ? std::abs(sorted.back())
                                                  : std::abs(sorted.front()));

  struct Cluster { double lo, hi, center; int count; };
  std::vector<Cluster> clusters;
  for (double v : sorted) {
    if (!clusters.empty() && v - clusters.back().hi <= gap_tol) {
      Cluster& c = clusters.back();
      c.center = (c.center * c.count + v) / (c.count + 1);
      c.hi = v;
      ++c.count;
    } else {
      clusters.push_back({v, v, v, 1});
    }
  }

  Contour out;
  out.points_per_circle = points_per_circle;
  for (size_t k = 0; k < clusters.size(); ++k) {
    if (positive_only && clusters[k].center <= 0.0) continue;
    double gap = std::numeric_limits<double>::infinity();
    for (size_t m = 0; m < clusters.size(); ++m) {
      if (m == k) continue;
      gap = std::min(gap, std::min(std::abs(clusters[m].lo - clusters[k].center),
                                   std::abs(clusters[m].hi - clusters[k].center)));
    }
    const double radius = std::isfinite(gap) ? std::clamp(gap / 4.0, 1e-3, 1.0) : 1.0;
    out.circles.push_back({clusters[k].center, radius});
  }
  if (out.circles.empty())
    throw ContourError("build_contour: no clusters enclosed (positive_only on a nonpositive spectrum)");

  // disjointness: circles must not touch, and no circle may pass within
  // half its radius of an eigenvalue outside its own cluster
  for (size_t i = 0; i < out.circles.size(); ++i) {
    for (size_t j = i + 1; j < out.circles.size(); ++j) {
      const double d = std::abs(out.circles[i].center - out.circles[j].center);
      if (d <= out.circles[i].radius + out.circles[j].radius)
        throw ContourError("build_contour: circles overlap, spectrum too clustered");
    }
    for (double v : sorted) {
      const double d = std::abs(v - out.circles[i].center);
      if (d <= out.circles[i].radius) {
        if (d > out.circles[i].radius / 2.0)
          throw ContourError("build_contour: eigenvalue too close to a contour circle");
      } else if (d < 1.5 * out.circles[i].radius) {
        throw ContourError("build_contour: outside eigenvalue too close to a contour circle");
      }
    }
  }
  return out;
}

namespace {

// Shared trapezoid loop: accumulates term(f(z) weight, res(z)) over all
// nodes in circle order then node order.
template <class Term>
void quadrature_sum(const RealMatrix& a, const ScalarFunction& f, const Contour& contour,
                    Term&& term) {
  if (!f.has_complex())
    throw UnsupportedFunctionError("quadrature: function '" + f.name +
                                   "' has no complex extension");
  const int npts = contour.points_per_circle;
  for (const Circle& circle : contour.circles) {
    for (int k = 0; k < npts; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / npts;
      const Cplx dir{std::cos(theta), std::sin(theta)};
      const Cplx z = circle.center + circle.radius * dir;
      const Cplx weight = circle.radius * dir / static_cast<double>(npts);
      term(weight * f.complex_eval(z, circle.center), resolvent(a, z));
    }
  }
}

}  // namespace

RealMatrix primal_quadrature(const RealMatrix& a, const ScalarFunction& f, const Contour& contour) {
  ComplexMatrix acc = ComplexMatrix::Zero(a.rows(), a.cols());
  quadrature_sum(a, f, contour, [&](Cplx fw, const ComplexMatrix& res) {
    acc -= fw * res;
  });
  check_imag_residue(acc, "primal_quadrature");
  return real_part(acc);
}

RealMatrix adjoint_quadrature(const RealMatrix& a, const ScalarFunction& f,
                              const Contour& contour, const RealMatrix& seed) {
  if (seed.rows() != a.rows() || seed.cols() != a.cols())
    throw ShapeError("adjoint_quadrature: seed shape mismatch");
  const ComplexMatrix seed_c = seed.cast<Cplx>();
  ComplexMatrix acc = ComplexMatrix::Zero(a.rows(), a.cols());
  quadrature_sum(a, f, contour, [&](Cplx fw, const ComplexMatrix& res) {
    const ComplexMatrix rt = res.transpose();
    acc += fw * ComplexMatrix(matmul(ComplexMatrix(matmul(rt, seed_c)), rt));
  });
  check_imag_residue(acc, "adjoint_quadrature");
  return real_part(acc);
}

}  // namespace matadj
