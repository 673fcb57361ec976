#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "paravec/engine.hpp"
#include "paravec/gen.hpp"
#include "paravec/io.hpp"
#include "paravec/oracle.hpp"
#include "paravec/scalarlp.hpp"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitNoSolution = 2;
constexpr int kExitUsage = 3;
constexpr int kExitNumerical = 4;

std::vector<double> parse_weight(const std::string& spec) {
  std::vector<double> w;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      w.push_back(std::stod(item));
    } catch (...) {
      throw paravec::ParseError("cannot parse weight entry '" + item + "'");
    }
  }
  return w;
}

paravec::Tolerances tolerances_from_env(double tol_flag) {
  paravec::Tolerances tol;
  if (const char* env = std::getenv("PARAVEC_TOL")) {
    try {
      tol.membership = std::stod(env);
    } catch (...) {
      throw paravec::ParseError("PARAVEC_TOL is not a number");
    }
  }
  if (tol_flag > 0) tol.membership = tol_flag;
  return tol;
}

int run_solve(const std::string& input, const std::string& output, const std::string& init,
              const std::string& weight_spec, bool dedupe, bool filter, double tol_flag,
              const std::string& csv_path, const std::string& svg_path, long max_dicts) {
  paravec::EngineOptions opts;
  opts.tol = tolerances_from_env(tol_flag);
  opts.dedupe_images = dedupe;
  opts.apply_generator_filter = filter;
  if (max_dicts > 0) opts.max_dictionaries = max_dicts;
  if (init == "p0") {
    opts.init = paravec::InitMethod::P0;
  } else if (init == "perturb") {
    opts.init = paravec::InitMethod::Perturbation;
  } else if (init == "weight") {
    opts.init = paravec::InitMethod::Weight;
    opts.init_weight = parse_weight(weight_spec);
    if (opts.init_weight.empty())
      throw paravec::ParseError("--init weight requires --weight w1,...,wq");
  } else {
    throw paravec::ParseError("unknown init method '" + init + "'");
  }

  const paravec::Problem p = paravec::parse_problem(paravec::read_file(input));
  const paravec::Solution sol = paravec::solve_problem(p, opts);
  paravec::write_file(output, paravec::serialize_solution(sol));

  if (sol.status == paravec::SolveStatus::Infeasible) {
    std::cout << "infeasible\n";
    return kExitInfeasible;
  }
  if (sol.status == paravec::SolveStatus::NoSolution) {
    std::cout << "no solution (lower image has no maximal points)\n";
    return kExitNoSolution;
  }
  if (!csv_path.empty()) paravec::write_file(csv_path, paravec::export_partition_csv(sol));
  if (!svg_path.empty()) paravec::write_file(svg_path, paravec::export_partition_svg(sol));
  std::cout << "solved: " << sol.points.size() << " point maximizer(s), "
            << sol.directions.size() << " direction maximizer(s), " << sol.cells.size()
            << " cell(s), " << sol.pivots_performed << " pivot(s)\n";
  return kExitSolved;
}

int run_verify(const std::string& input, const std::string& solution_path, int grid) {
  const paravec::Problem p = paravec::parse_problem(paravec::read_file(input));
  const paravec::Solution sol = paravec::parse_solution(paravec::read_file(solution_path));

  if (sol.status == paravec::SolveStatus::Infeasible) {
    paravec::ScalarLp lp;
    lp.a = p.constraint_matrix;
    lp.rhs = p.rhs;
    lp.objective.assign(p.num_vars(), 0.0);
    const bool infeasible = feasible_basis(lp).status == paravec::LpStatus::Infeasible;
    std::cout << (infeasible ? "verified: problem is infeasible\n"
                             : "MISMATCH: problem is feasible\n");
    return infeasible ? kExitSolved : kExitNumerical;
  }
  if (sol.status == paravec::SolveStatus::NoSolution) {
    const bool ok = paravec::check_no_solution(p, 200, 20240001ULL);
    std::cout << (ok ? "verified: sampled weights all yield unbounded scalarizations\n"
                     : "MISMATCH: found a solvable scalarization\n");
    return ok ? kExitSolved : kExitNumerical;
  }

  const paravec::OracleReport rep = paravec::grid_scalarization_check(p, sol, grid);
  std::cout << "checked " << rep.grid_points_checked << " parameter points, max gap "
            << rep.max_abs_gap << ", " << rep.mismatches.size() << " mismatch(es)\n";
  for (size_t k = 0; k < rep.mismatches.size() && k < 10; ++k) {
    const auto& mm = rep.mismatches[k];
    std::cout << "  lambda (";
    for (size_t i = 0; i < mm.lambda.size(); ++i) std::cout << (i ? "," : "") << mm.lambda[i];
    std::cout << "): expected " << mm.expected << ", got " << mm.got << "\n";
  }
  return rep.ok() ? kExitSolved : kExitNumerical;
}

int run_gen(const std::string& kind, int q, int n, int m, std::uint64_t seed,
            const std::string& output) {
  paravec::Problem p;
  if (kind == "nondegenerate") {
    p = paravec::gen_nondegenerate(q, n, m, seed);
  } else if (kind == "degenerate") {
    p = paravec::gen_degenerate(q, n, m, seed);
  } else {
    throw paravec::ParseError("unknown kind '" + kind + "'");
  }
  const std::string doc = paravec::serialize_problem(p);
  if (output.empty())
    std::cout << doc;
  else
    paravec::write_file(output, doc);
  return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paravec: parametric simplex solver for linear vector optimization"};
  app.require_subcommand(1);

  std::string input, output, solution_path, csv_path, svg_path;
  std::string init = "p0", weight_spec, kind = "nondegenerate";
  bool dedupe = false, filter = false;
  double tol_flag = -1.0;
  int grid = 30, q = 3, n = 5, m = 5;
  long max_dicts = -1;
  std::uint64_t seed = 1;

  auto* solve = app.add_subcommand("solve", "solve a problem file");
  solve->add_option("--input", input, "problem document")->required();
  solve->add_option("--output", output, "solution document")->required();
  solve->add_option("--init", init, "initialization: p0, perturb, or weight");
  solve->add_option("--weight", weight_spec, "comma-separated w1,...,wq for --init weight");
  solve->add_flag("--dedupe-images", dedupe, "drop maximizers with already-seen images");
  solve->add_flag("--filter-generators", filter, "greedy generator elimination at the end");
  solve->add_option("--tol", tol_flag, "geometric membership tolerance");
  solve->add_option("--partition-csv", csv_path, "export the lambda partition as CSV");
  solve->add_option("--partition-svg", svg_path, "export the lambda partition as SVG");
  solve->add_option("--max-dictionaries", max_dicts, "hard cap on materialized dictionaries");

  auto* verify = app.add_subcommand("verify", "check a solution with the sampling oracle");
  verify->add_option("--input", input, "problem document")->required();
  verify->add_option("--solution", solution_path, "solution document")->required();
  verify->add_option("--grid", grid, "grid density per lambda axis");

  auto* gen = app.add_subcommand("gen", "emit a random problem document");
  gen->add_option("--kind", kind, "nondegenerate or degenerate")->required();
  gen->add_option("--q", q, "number of objectives");
  gen->add_option("--n", n, "number of variables");
  gen->add_option("--m", m, "number of constraints");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--output", output, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed())
      return run_solve(input, output, init, weight_spec, dedupe, filter, tol_flag, csv_path,
                       svg_path, max_dicts);
    if (verify->parsed()) return run_verify(input, solution_path, grid);
    if (gen->parsed()) return run_gen(kind, q, n, m, seed, output);
  } catch (const paravec::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const paravec::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const paravec::InvalidProblem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const paravec::UnsupportedDimension& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
