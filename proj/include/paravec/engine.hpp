#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "paravec/dictionary.hpp"
#include "paravec/model.hpp"
#include "paravec/regions.hpp"

namespace paravec {

enum class InitMethod { P0, Weight, Perturbation };

struct EngineOptions {
  Tolerances tol;
  InitMethod init = InitMethod::P0;
  std::vector<double> init_weight;     // used when init == Weight
  bool dedupe_images = false;          // Remark-style image dedup, opt in
  bool apply_generator_filter = false; // greedy generator elimination, opt in
  long max_dictionaries = 100000;      // hard cap with diagnostic
};

enum class SolveStatus { Solved, Infeasible, NoSolution };

struct PointEntry {
  std::vector<double> x;      // structural coordinates
  std::vector<double> image;  // P^T x
  std::vector<int> basis;     // first basis that produced it
};

struct DirectionEntry {
  std::vector<double> x;      // structural coordinates
  std::vector<double> image;
  std::vector<int> basis;     // dictionary that generated it
  int entering = -1;
};

struct SolutionCell {
  std::vector<int> basis;
  std::vector<int> defining;                 // J^D
  std::vector<HalfspaceLambda> halfspaces;   // defining I^D_j rows
  std::optional<std::vector<double>> witness;  // point of (cell) inside Int Lambda
};

struct UnboundedCut {
  std::vector<int> basis;
  int entering = -1;
  HalfspaceLambda halfspace;  // I^D_j beyond which (P_lambda) is unbounded
};

/// A finite solution plus the lambda-partition bookkeeping. Points and
/// images are reported in the orientation of the input problem; cells
/// live in the normalized parameter space.
struct Solution {
  SolveStatus status = SolveStatus::Solved;
  bool bounded = true;
  std::vector<PointEntry> points;
  std::vector<DirectionEntry> directions;
  std::vector<SolutionCell> cells;
  std::vector<UnboundedCut> unbounded_cuts;
  std::vector<HalfspaceLambda> lambda_halfspaces;
  std::vector<std::vector<double>> lower_image_rays;  // direction images and -Y columns
  bool orientation_flipped = false;
  long dictionaries_materialized = 0;
  long pivots_performed = 0;
  bool pivot_repeat_detected = false;  // explored-pivot audit
};

struct EngineLimitExceeded : std::runtime_error {
  explicit EngineLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct NumericalFailure : std::runtime_error {
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};
struct InvalidProblem : std::runtime_error {
  explicit InvalidProblem(const std::string& what) : std::runtime_error(what) {}
};

/// Outcome of an initialization attempt.
struct InitResult {
  enum class Kind { Dictionary, Infeasible, NoSolution, ScalarUnbounded, NoWitness };
  Kind kind = Kind::NoSolution;
  std::optional<Dictionary> dictionary;
  std::vector<double> weight;  // the w^0 that produced the dictionary
};

/// Solve (P_0) for a weight with solvable scalarization, then build the
/// initial dictionary from the optimal basis of (P_1(w^0)).
InitResult init_via_p0(const Problem& normalized, const ParamMap& pm,
                       const Tolerances& tol = {});

/// Build the initial dictionary from a user weight w^0 in C+ \ {0}.
/// Boundary weights additionally require an interior witness.
InitResult init_via_weight(const Problem& normalized, const ParamMap& pm,
                           const std::vector<double>& w0, const Tolerances& tol = {});

/// Trace of the perturbation method for inspection.
struct PerturbationTrace {
  std::vector<HalfspaceLambda> initial_region;  // optimality region of the slack basis
  long dictionaries_explored = 0;
};

/// Phase-1 style initialization over the (lambda, mu) parameter space;
/// requires b >= 0.
InitResult init_perturbation(const Problem& normalized, const ParamMap& pm,
                             const EngineOptions& opts = {},
                             PerturbationTrace* trace = nullptr);

/// Image-level deduplication (the opt-in redundancy filter): returns
/// true when `image` is new and was appended to `images`. Directions are
/// compared after normalizing to unit sum of absolute values.
bool dedupe_image_insert(std::vector<std::vector<double>>& images,
                         const std::vector<double>& image, bool is_direction,
                         double tol_img);

/// Algorithm 1 on a prepared initial dictionary. The result is in the
/// normalized orientation; solve_problem handles reporting orientation.
Solution run_algorithm1(const Problem& normalized, const ParamMap& pm, const Dictionary& d0,
                        const EngineOptions& opts = {});

/// Greedy removal of generators whose image is reproducible from the
/// remaining ones (plus the cone rays); preserves the lower image.
void filter_generators(Solution& sol, const Cone& cone, const Tolerances& tol = {});

/// Full pipeline: validate, normalize, initialize, run, post-process.
Solution solve_problem(const Problem& input, const EngineOptions& opts = {});

}  // namespace paravec
