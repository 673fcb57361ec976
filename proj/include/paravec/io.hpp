#pragma once

#include <string>

#include "paravec/engine.hpp"
#include "paravec/model.hpp"

namespace paravec {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};
struct UnsupportedDimension : std::runtime_error {
  explicit UnsupportedDimension(const std::string& what) : std::runtime_error(what) {}
};

/// Problem document: num_vars, num_constraints, num_objectives,
/// objective (q rows of n coefficients), A, b, optional cone_generators
/// (one row per generator; default positive orthant), optional
/// interior_point (default mean of generators).
Problem parse_problem(const std::string& text);
std::string serialize_problem(const Problem& p);

Solution parse_solution(const std::string& text);
std::string serialize_solution(const Solution& s);

/// Partition export. Two-dimensional lambda spaces (q = 3) polygonize
/// each cell; one-dimensional ones (q = 2) list intervals; higher
/// dimensions fall back to halfspace lists in the CSV and are rejected
/// for SVG.
std::string export_partition_csv(const Solution& s);
std::string export_partition_svg(const Solution& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace paravec
