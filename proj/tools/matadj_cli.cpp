#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "matadj/contour.hpp"
#include "matadj/gradcheck.hpp"
#include "matadj/io.hpp"
#include "matadj/matfun.hpp"
#include "matadj/ncm.hpp"
#include "matadj/regreg.hpp"

namespace {

using namespace matadj;

// exit codes: 0 ok, 1 gradcheck tolerance failure, 2 input/config error,
// 3 convergence or singularity error

RealMatrix load_seed(const std::string& spec, Eigen::Index rows, Eigen::Index cols) {
  if (spec == "identity") {
    if (rows != cols) throw ShapeError("identity seed needs a square output");
    return RealMatrix::Identity(rows, cols);
  }
  RealMatrix s = read_matrix(spec);
  if (s.rows() != rows || s.cols() != cols)
    throw ShapeError("seed " + spec + " has shape " + std::to_string(s.rows()) + "x" +
                     std::to_string(s.cols()) + ", expected " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  return s;
}

void emit(const RealMatrix& m, const std::string& path) {
  if (path.empty()) {
    write_matrix(std::cout, m);
  } else {
    std::ofstream out(path);
    if (!out) throw ParseError(path, 0, "cannot open output file");
    write_matrix(out, m);
  }
}

double rel_delta(const RealMatrix& x, const RealMatrix& ref) {
  return frobenius_norm(RealMatrix(x - ref)) / std::max(1.0, frobenius_norm(ref));
}

ThresholdMode parse_mode(const std::string& mode) {
  if (mode == "truncate") return ThresholdMode::truncate;
  if (mode == "sgn") return ThresholdMode::sgn;
  throw DomainError("mode must be 'truncate' or 'sgn'");
}

bool near_kink(const Vector& lambda, const std::vector<double>& kinks, double band) {
  for (double k : kinks)
    for (Eigen::Index i = 0; i < lambda.size(); ++i)
      if (std::abs(lambda(i) - k) < band) return true;
  return false;
}

int run(int argc, char** argv) {
  CLI::App app{"matadj: matrix functions, their reverse-mode adjoints, and oracles"};
  app.require_subcommand(1);

  std::string input, fn_name, seed_spec, output, adjoint_out;
  std::string a_path, b_path, mode_name = "truncate", target;
  double tol = 1e-10, eps = 0.0, lam = 0.0, step = 0.0, atol = 1e-7, rtol = 1e-5;
  int max_iter = 50, points = 64;
  bool json_report = false, positive_only = false;

  auto* cmd_matfun = app.add_subcommand("matfun", "f(A) and optionally its adjoint");
  cmd_matfun->add_option("-i,--input", input)->required();
  cmd_matfun->add_option("--fn", fn_name)->required();
  cmd_matfun->add_option("--seed", seed_spec);
  cmd_matfun->add_option("-o,--output", output);
  cmd_matfun->add_option("--adjoint-out", adjoint_out);

  auto* cmd_ncm = app.add_subcommand("ncm", "nearest correlation matrix and its adjoint");
  cmd_ncm->add_option("-i,--input", input)->required();
  cmd_ncm->add_option("--tol", tol);
  cmd_ncm->add_option("--max-iter", max_iter);
  cmd_ncm->add_option("--seed", seed_spec);
  cmd_ncm->add_option("-o,--output", output);
  cmd_ncm->add_option("--adjoint-out", adjoint_out);

  auto* cmd_regress = app.add_subcommand("regress", "regularized regression coefficients");
  cmd_regress->add_option("--a", a_path)->required();
  cmd_regress->add_option("--b", b_path)->required();
  cmd_regress->add_option("--eps", eps);
  cmd_regress->add_option("--lam", lam);
  cmd_regress->add_option("--mode", mode_name);
  cmd_regress->add_option("--seed", seed_spec);
  cmd_regress->add_option("-o,--output", output);

  auto* cmd_gradcheck = app.add_subcommand("gradcheck", "finite-difference check of an adjoint");
  cmd_gradcheck->add_option("target", target)->check(CLI::IsMember({"matfun", "ncm"}))->required();
  cmd_gradcheck->add_option("-i,--input", input)->required();
  cmd_gradcheck->add_option("--fn", fn_name);
  cmd_gradcheck->add_option("--seed", seed_spec);
  cmd_gradcheck->set_help_flag("--help", "print help and exit");
  cmd_gradcheck->add_option("--h", step);
  cmd_gradcheck->add_option("--atol", atol);
  cmd_gradcheck->add_option("--rtol", rtol);
  cmd_gradcheck->add_flag("--json-report", json_report);

  auto* cmd_oracle = app.add_subcommand("oracle", "contour-quadrature results and spectral deltas");
  cmd_oracle->add_option("-i,--input", input)->required();
  cmd_oracle->add_option("--fn", fn_name)->required();
  cmd_oracle->add_option("--seed", seed_spec);
  cmd_oracle->add_option("--points", points);
  cmd_oracle->add_flag("--positive-only", positive_only);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_matfun->parsed()) {
      const RealMatrix a = read_matrix(input);
      const ScalarFunction f = make_function(fn_name);
      const SymEig eig = sym_eig(a);
      emit(primal(eig, f), output);
      if (!seed_spec.empty()) {
        const RealMatrix seed = load_seed(seed_spec, a.rows(), a.cols());
        emit(adjoint_sym(eig, f, seed), adjoint_out);
      }
    } else if (cmd_ncm->parsed()) {
      const RealMatrix a = read_matrix(input);
      const NcmSolution sol = solve_dual(a, tol, max_iter);
      std::cout << "iterations " << sol.iterations << "\n";
      std::cout << "residual " << format_value(sol.residual) << "\n";
      if (output.empty()) std::cout << "C\n";
      emit(sol.c, output);
      RealMatrix ymat(sol.y_star.size(), 1);
      ymat.col(0) = sol.y_star;
      std::cout << "y_star\n";
      write_matrix(std::cout, ymat);
      if (!seed_spec.empty()) {
        const RealMatrix seed = load_seed(seed_spec, a.rows(), a.cols());
        if (adjoint_out.empty()) std::cout << "A_bar\n";
        emit(ncm_adjoint(sol, seed), adjoint_out);
      }
    } else if (cmd_regress->parsed()) {
      const RealMatrix a = read_matrix(a_path);
      const RealMatrix b = read_matrix(b_path);
      const RegParams params{eps, lam, parse_mode(mode_name)};
      const RegSolution sol = reg_beta(a, b, params);
      if (output.empty()) std::cout << "beta\n";
      emit(sol.beta, output);
      if (!seed_spec.empty()) {
        const RealMatrix seed = load_seed(seed_spec, sol.beta.rows(), sol.beta.cols());
        const auto [a_bar, b_bar] = reg_beta_adjoint(sol, a, b, params, seed);
        std::cout << "A_bar\n";
        write_matrix(std::cout, a_bar);
        std::cout << "B_bar\n";
        write_matrix(std::cout, b_bar);
      }
    } else if (cmd_gradcheck->parsed()) {
      const RealMatrix a = read_matrix(input);
      if (step <= 0.0) step = default_step(a);
      RealMatrix analytic, fd;
      std::string label;
      if (target == "matfun") {
        if (fn_name.empty()) throw DomainError("gradcheck matfun requires --fn");
        const ScalarFunction f = make_function(fn_name);
        const SymEig eig = sym_eig(a);
        if (near_kink(eig.lambda, f.kinks, 1e-2)) {
          std::cout << "skipped: near-kink\n";
          return 0;
        }
        const RealMatrix seed =
            load_seed(seed_spec.empty() ? "identity" : seed_spec, a.rows(), a.cols());
        analytic = symmetric_convention(adjoint_sym(eig, f, seed));
        fd = fd_adjoint([&f](const RealMatrix& x) { return primal(sym_eig(x), f); }, a, seed,
                        step, /*symmetrize=*/true);
        label = "matfun fn=" + fn_name;
      } else {
        const NcmSolution sol = solve_dual(a, tol, max_iter);
        if (near_kink(sol.lambda, {0.0}, 1e-2)) {
          std::cout << "skipped: near-kink\n";
          return 0;
        }
        const RealMatrix seed =
            load_seed(seed_spec.empty() ? "identity" : seed_spec, a.rows(), a.cols());
        analytic = symmetric_convention(ncm_adjoint(sol, seed));
        fd = fd_adjoint([tol, max_iter](const RealMatrix& x) { return solve_dual(x, tol, max_iter).c; },
                        a, seed, step, /*symmetrize=*/true);
        label = "ncm";
      }
      const FdReport rep = compare(analytic, fd, atol, rtol);
      if (json_report) {
        std::cout << "{\"max_abs_err\": " << format_value(rep.max_abs_err)
                  << ", \"max_rel_err\": " << format_value(rep.max_rel_err) << ", \"worst_index\": ["
                  << rep.worst_row << ", " << rep.worst_col << "], \"h\": " << format_value(rep.h ? rep.h : step)
                  << "}\n";
      } else {
        std::cout << "gradcheck " << label << "\n";
        std::cout << "h           " << format_value(step) << "\n";
        std::cout << "n_checks    " << rep.n_checks << "\n";
        std::cout << "max_abs_err " << format_value(rep.max_abs_err) << "\n";
        std::cout << "max_rel_err " << format_value(rep.max_rel_err) << "\n";
        std::cout << "worst_index " << rep.worst_row << " " << rep.worst_col << "\n";
        std::cout << "status      " << (rep.passed ? "pass" : "fail") << "\n";
      }
      return rep.passed ? 0 : 1;
    } else if (cmd_oracle->parsed()) {
      const RealMatrix a = read_matrix(input);
      const ScalarFunction f = make_function(fn_name);
      const SymEig eig = sym_eig(a);
      const Contour contour = build_contour(eig.lambda, positive_only, points);
      const RealMatrix qp = primal_quadrature(a, f, contour);
      std::cout << "contour_primal\n";
      write_matrix(std::cout, qp);
      std::cout << "primal_delta " << format_value(rel_delta(qp, primal(eig, f))) << "\n";
      if (!seed_spec.empty()) {
        const RealMatrix seed = load_seed(seed_spec, a.rows(), a.cols());
        const RealMatrix qa = adjoint_quadrature(a, f, contour, seed);
        std::cout << "contour_adjoint\n";
        write_matrix(std::cout, qa);
        std::cout << "adjoint_delta " << format_value(rel_delta(qa, adjoint_sym(eig, f, seed)))
                  << "\n";
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (residual " << format_value(e.residual) << ")\n";
    return 3;
  } catch (const SingularityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
