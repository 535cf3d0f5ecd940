#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matadj/gradcheck.hpp"
#include "matadj/matfun.hpp"
#include "test_util.hpp"

using namespace matadj;
using testutil::inner;
using testutil::mixed_spectrum;
using testutil::random_symmetric;
using testutil::rel_fro;
using testutil::with_spectrum;

TEST_CASE("loewner hand fixtures") {
  SUBCASE("cut-off at lambda = (2, -1)") {
    const RealMatrix f = loewner((Vector(2) << 2, -1).finished(), cutoff_fn());
    CHECK(f(0, 0) == 1.0);
    CHECK(f(1, 1) == 0.0);
    CHECK(f(0, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(f(1, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  }
  SUBCASE("repeated eigenvalue uses the derivative branch") {
    const RealMatrix f = loewner((Vector(2) << 1.5, 1.5).finished(), exp_fn());
    const double d = std::exp(1.5);
    CHECK(f(0, 0) == d);
    CHECK(f(0, 1) == d);
    CHECK(f(1, 0) == d);
    CHECK(f(1, 1) == d);
  }
  SUBCASE("square gives lambda_i + lambda_j") {
    const RealMatrix f = loewner((Vector(2) << 3, 1).finished(), square_fn());
    CHECK(f(0, 0) == 6.0);
    CHECK(f(0, 1) == 4.0);
    CHECK(f(1, 0) == 4.0);
    CHECK(f(1, 1) == 2.0);
  }
}

TEST_CASE("loewner symmetry and diagonal invariants") {
  std::mt19937 rng(41);
  const Vector lambda = mixed_spectrum(rng);
  for (const ScalarFunction& f : {exp_fn(), cutoff_fn(), smooth_cutoff_fn(0.3)}) {
    const RealMatrix fm = loewner(lambda, f);
    CHECK(rel_fro(fm, RealMatrix(fm.transpose())) < 1e-14);
    for (int i = 0; i < 5; ++i) CHECK(fm(i, i) == f.deriv(lambda(i)));
  }
}

TEST_CASE("primal fixtures") {
  const SymEig e = sym_eig(ddiag((Vector(2) << 2, -1).finished()));
  const RealMatrix c = primal(e, cutoff_fn());
  CHECK(c(0, 0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(c(1, 1) == doctest::Approx(0.0).epsilon(1e-15));

  std::mt19937 rng(42);
  const RealMatrix a = random_symmetric(rng, 5);
  const SymEig ea = sym_eig(a);
  CHECK(rel_fro(primal(ea, identity_fn()), a) < 1e-12);
  CHECK(rel_fro(primal(ea, square_fn()), matmul(a, a)) < 1e-11);
}

TEST_CASE("adjoint_sym: diagonal matrix collapses to F o seed") {
  std::mt19937 rng(43);
  const SymEig e = sym_eig(ddiag((Vector(3) << -1, 0.5, 2).finished()));
  const RealMatrix seed = testutil::random_matrix(rng, 3, 3);
  const RealMatrix fm = loewner(e.lambda, exp_fn());
  CHECK(rel_fro(adjoint_sym(e, exp_fn(), seed), hadamard(fm, seed)) < 1e-13);
}

TEST_CASE("adjoint_sym: square matches the product rule") {
  std::mt19937 rng(44);
  for (int rep = 0; rep < 5; ++rep) {
    const RealMatrix a = random_symmetric(rng, 5);
    const RealMatrix seed = testutil::random_matrix(rng, 5, 5);
    const RealMatrix abar = adjoint_sym(sym_eig(a), square_fn(), seed);
    const RealMatrix at = a.transpose();
    const RealMatrix expect = matmul(at, seed) + matmul(seed, at);
    CHECK(rel_fro(abar, expect) < 1e-11);
  }
}

TEST_CASE("adjoint_sym: finite-difference directional oracle, cut-off") {
  std::mt19937 rng(45);
  const RealMatrix a = with_spectrum(rng, mixed_spectrum(rng));
  const RealMatrix seed = testutil::random_matrix(rng, 5, 5);
  RealMatrix dir = random_symmetric(rng, 5);
  const RealMatrix abar = adjoint_sym(sym_eig(a), cutoff_fn(), seed);
  const double fd = fd_directional(
      [](const RealMatrix& x) { return primal(sym_eig(x), cutoff_fn()); }, a, seed, dir, 1e-6);
  CHECK(inner(abar, dir) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("adjoint_general") {
  std::mt19937 rng(46);
  SUBCASE("U = I reduces to the diagonal case") {
    const Vector lambda = (Vector(3) << -0.5, 1, 2.5).finished();
    const GeneralEig ge = general_decomposition(RealMatrix(RealMatrix::Identity(3, 3)), lambda);
    const RealMatrix seed = testutil::random_matrix(rng, 3, 3);
    const RealMatrix fm = loewner(lambda, exp_fn());
    CHECK(rel_fro(adjoint_general(ge, exp_fn(), seed), hadamard(fm, seed)) < 1e-13);
  }
  SUBCASE("symmetric input agrees with adjoint_sym") {
    const RealMatrix a = random_symmetric(rng, 4);
    const SymEig e = sym_eig(a);
    const GeneralEig ge = general_decomposition(e.u, e.lambda);
    const RealMatrix seed = testutil::random_matrix(rng, 4, 4);
    CHECK(rel_fro(adjoint_general(ge, exp_fn(), seed), adjoint_sym(e, exp_fn(), seed)) < 1e-11);
  }
  SUBCASE("non-symmetric diagonalizable matrix matches the product rule for square") {
    const RealMatrix u = testutil::random_matrix(rng, 3, 3) + 3.0 * RealMatrix::Identity(3, 3);
    const Vector lambda = (Vector(3) << -1, 0.5, 2).finished();
    const GeneralEig ge = general_decomposition(u, lambda);
    const RealMatrix a = matmul(matmul(ge.u, ddiag(lambda)), ge.u_inv);
    const RealMatrix seed = testutil::random_matrix(rng, 3, 3);
    const RealMatrix abar = adjoint_general(ge, square_fn(), seed);
    const RealMatrix at = a.transpose();
    const RealMatrix expect = matmul(at, seed) + matmul(seed, at);
    CHECK(rel_fro(abar, expect) < 1e-10);
  }
}

TEST_CASE("linearity in the seed") {
  std::mt19937 rng(47);
  const RealMatrix a = random_symmetric(rng, 5);
  const SymEig e = sym_eig(a);
  const RealMatrix s1 = testutil::random_matrix(rng, 5, 5);
  const RealMatrix s2 = testutil::random_matrix(rng, 5, 5);
  const double alpha = 0.7, beta = -1.3;
  const RealMatrix lhs = adjoint_sym(e, exp_fn(), RealMatrix(alpha * s1 + beta * s2));
  const RealMatrix rhs =
      alpha * adjoint_sym(e, exp_fn(), s1) + beta * adjoint_sym(e, exp_fn(), s2);
  CHECK(rel_fro(lhs, rhs) < 1e-13);
}

TEST_CASE("symmetric seed gives symmetric adjoint") {
  std::mt19937 rng(48);
  const RealMatrix a = random_symmetric(rng, 6);
  const RealMatrix seed = random_symmetric(rng, 6);
  const RealMatrix abar = adjoint_sym(sym_eig(a), exp_fn(), seed);
  CHECK(frobenius_norm(RealMatrix(abar - RealMatrix(abar.transpose()))) < 1e-12);
}

TEST_CASE("identity function passes the seed through") {
  std::mt19937 rng(49);
  const RealMatrix a = random_symmetric(rng, 5);
  const RealMatrix seed = testutil::random_matrix(rng, 5, 5);
  CHECK(rel_fro(adjoint_sym(sym_eig(a), identity_fn(), seed), seed) < 1e-12);
}

TEST_CASE("smooth cut-off approaches the hard cut-off as delta shrinks") {
  std::mt19937 rng(50);
  const RealMatrix a = with_spectrum(rng, mixed_spectrum(rng));
  const SymEig e = sym_eig(a);
  const RealMatrix hard = primal(e, cutoff_fn());
  double prev = std::numeric_limits<double>::infinity();
  for (double delta : {1e-1, 1e-2, 1e-3}) {
    const double gap = frobenius_norm(RealMatrix(primal(e, smooth_cutoff_fn(delta)) - hard));
    CHECK(gap <= prev);
    prev = gap;
  }
  CHECK(prev < 1e-8);
}

TEST_CASE("master FD property over every built-in function") {
  std::mt19937 rng(51);
  const std::vector<ScalarFunction> fns = {
      identity_fn(), square_fn(), exp_fn(), cutoff_fn(), smooth_cutoff_fn(0.25),
      reg_inverse_fn(0.1, 0.2, ThresholdMode::truncate)};
  for (const ScalarFunction& f : fns) {
    const RealMatrix a = with_spectrum(rng, mixed_spectrum(rng));
    const SymEig e = sym_eig(a);
    const RealMatrix seed = testutil::random_matrix(rng, 5, 5);
    const RealMatrix dir = random_symmetric(rng, 5);
    const RealMatrix abar = adjoint_sym(e, f, seed);
    const double fd = fd_directional(
        [&f](const RealMatrix& x) { return primal(sym_eig(x), f); }, a, seed, dir, 1e-6);
    const double an = inner(abar, dir);
    CHECK(std::abs(an - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
  }
}
