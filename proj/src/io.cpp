#include "paravec/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace paravec {

namespace {

using nlohmann::json;

json matrix_to_json(const RealMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

RealMatrix matrix_from_json(const json& j, const std::string& name) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ParseError("field '" + name + "' must be a nonempty array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& row : j) {
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) throw ParseError("field '" + name + "' has a non-numeric entry");
      r.push_back(v.get<double>());
    }
    rows.push_back(std::move(r));
    if (rows.back().size() != rows.front().size())
      throw ParseError("field '" + name + "' has ragged rows");
  }
  return RealMatrix::from_rows(rows);
}

std::vector<double> vector_from_json(const json& j, const std::string& name) {
  if (!j.is_array()) throw ParseError("field '" + name + "' must be an array");
  std::vector<double> v;
  for (const auto& x : j) {
    if (!x.is_number()) throw ParseError("field '" + name + "' has a non-numeric entry");
    v.push_back(x.get<double>());
  }
  return v;
}

const json& require(const json& j, const std::string& key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing required field '" + key + "'");
  return *it;
}

json halfspace_to_json(const HalfspaceLambda& h) {
  return json{{"normal", h.normal}, {"offset", h.offset}};
}

HalfspaceLambda halfspace_from_json(const json& j) {
  HalfspaceLambda h;
  h.normal = vector_from_json(require(j, "normal"), "normal");
  h.offset = require(j, "offset").get<double>();
  return h;
}

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out(v.size());
  for (size_t k = 0; k < v.size(); ++k) out[k] = v[k] + 1;
  return out;
}

std::vector<int> zero_based(const std::vector<int>& v) {
  std::vector<int> out(v.size());
  for (size_t k = 0; k < v.size(); ++k) out[k] = v[k] - 1;
  return out;
}

std::string status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved: return "solved";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::NoSolution: return "no_solution";
  }
  return "solved";
}

SolveStatus status_from_name(const std::string& s) {
  if (s == "solved") return SolveStatus::Solved;
  if (s == "infeasible") return SolveStatus::Infeasible;
  if (s == "no_solution") return SolveStatus::NoSolution;
  throw ParseError("unknown status '" + s + "'");
}

// Vertices of the polytope given by the halfspaces, for 1- or 2-d
// lambda spaces.
std::vector<std::vector<double>> polytope_vertices(const std::vector<HalfspaceLambda>& hs,
                                                   int dim) {
  std::vector<std::vector<double>> verts;
  const double tol = 1e-7;
  auto feasible = [&](const std::vector<double>& x) {
    for (const auto& h : hs) {
      double scale = std::fabs(h.offset);
      for (double v : h.normal) scale = std::max(scale, std::fabs(v));
      if (h.value(x) < -tol * (1.0 + scale)) return false;
    }
    return true;
  };
  auto push = [&](const std::vector<double>& x) {
    for (const auto& v : verts) {
      double d = 0.0;
      for (int k = 0; k < dim; ++k) d = std::max(d, std::fabs(v[k] - x[k]));
      if (d <= 1e-7) return;
    }
    verts.push_back(x);
  };

  if (dim == 1) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (const auto& h : hs) {
      const double a = h.normal[0];
      if (std::fabs(a) < 1e-12) {
        if (h.offset < -1e-12) return {};
        continue;
      }
      const double bound = -h.offset / a;
      if (a > 0)
        lo = std::max(lo, bound);
      else
        hi = std::min(hi, bound);
    }
    if (lo > hi + 1e-9 || !std::isfinite(lo) || !std::isfinite(hi)) return {};
    push({lo});
    push({hi});
    return verts;
  }

  for (size_t i = 0; i < hs.size(); ++i)
    for (size_t j = i + 1; j < hs.size(); ++j) {
      const double a1 = hs[i].normal[0], b1 = hs[i].normal[1], c1 = -hs[i].offset;
      const double a2 = hs[j].normal[0], b2 = hs[j].normal[1], c2 = -hs[j].offset;
      const double det = a1 * b2 - a2 * b1;
      double scale = std::max({std::fabs(a1), std::fabs(b1), std::fabs(a2), std::fabs(b2)});
      if (std::fabs(det) <= 1e-10 * std::max(scale * scale, 1.0)) continue;
      const std::vector<double> x = {(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
      if (feasible(x)) push(x);
    }

  if (verts.size() > 2) {
    double cx = 0.0, cy = 0.0;
    for (const auto& v : verts) {
      cx += v[0] / verts.size();
      cy += v[1] / verts.size();
    }
    std::sort(verts.begin(), verts.end(), [&](const auto& p, const auto& q) {
      return std::atan2(p[1] - cy, p[0] - cx) < std::atan2(q[1] - cy, q[0] - cx);
    });
  }
  return verts;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

int lambda_dim_of(const Solution& s) {
  if (!s.lambda_halfspaces.empty())
    return static_cast<int>(s.lambda_halfspaces.front().normal.size());
  for (const auto& c : s.cells)
    if (!c.halfspaces.empty()) return static_cast<int>(c.halfspaces.front().normal.size());
  return 0;
}

std::vector<HalfspaceLambda> cell_region(const Solution& s, const SolutionCell& c) {
  std::vector<HalfspaceLambda> hs = c.halfspaces;
  hs.insert(hs.end(), s.lambda_halfspaces.begin(), s.lambda_halfspaces.end());
  return hs;
}

}  // namespace

Problem parse_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("problem document: ") + e.what());
  }
  const int n = require(j, "num_vars").get<int>();
  const int m = require(j, "num_constraints").get<int>();
  const int q = require(j, "num_objectives").get<int>();
  if (n < 1 || m < 1 || q < 2)
    throw DimensionMismatch("problem document: need n >= 1, m >= 1, q >= 2");

  Problem p;
  const RealMatrix obj_rows = matrix_from_json(require(j, "objective"), "objective");
  if (obj_rows.rows() != q || obj_rows.cols() != n)
    throw DimensionMismatch("objective must have num_objectives rows of num_vars entries");
  p.objective = obj_rows.transposed();

  p.constraint_matrix = matrix_from_json(require(j, "A"), "A");
  if (p.constraint_matrix.rows() != m || p.constraint_matrix.cols() != n)
    throw DimensionMismatch("A must be num_constraints x num_vars");
  p.rhs = vector_from_json(require(j, "b"), "b");
  if (static_cast<int>(p.rhs.size()) != m)
    throw DimensionMismatch("b must have num_constraints entries");

  if (j.contains("cone_generators")) {
    const RealMatrix gen_rows = matrix_from_json(j["cone_generators"], "cone_generators");
    if (gen_rows.cols() != q)
      throw DimensionMismatch("cone_generators rows must have num_objectives entries");
    p.cone.generators = gen_rows.transposed();
  } else {
    p.cone.generators = RealMatrix::identity(q);
  }
  if (j.contains("interior_point")) {
    p.interior_point = vector_from_json(j["interior_point"], "interior_point");
    if (static_cast<int>(p.interior_point.size()) != q)
      throw DimensionMismatch("interior_point must have num_objectives entries");
  } else {
    p.interior_point = default_interior_point(p.cone);
  }
  for (double v : p.rhs)
    if (!std::isfinite(v)) throw ParseError("b has a non-finite entry");
  return p;
}

std::string serialize_problem(const Problem& p) {
  json j;
  j["num_vars"] = p.num_vars();
  j["num_constraints"] = p.num_constraints();
  j["num_objectives"] = p.num_objectives();
  j["objective"] = matrix_to_json(p.objective.transposed());
  j["A"] = matrix_to_json(p.constraint_matrix);
  j["b"] = p.rhs;
  j["cone_generators"] = matrix_to_json(p.cone.generators.transposed());
  j["interior_point"] = p.interior_point;
  return j.dump(2) + "\n";
}

Solution parse_solution(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("solution document: ") + e.what());
  }
  Solution s;
  s.status = status_from_name(require(j, "status").get<std::string>());
  s.bounded = require(j, "bounded").get<bool>();
  s.orientation_flipped = j.value("orientation_flipped", false);

  auto points = require(j, "points");
  auto images = require(j, "point_images");
  if (points.size() != images.size())
    throw DimensionMismatch("points and point_images must have equal lengths");
  for (size_t k = 0; k < points.size(); ++k) {
    PointEntry pe;
    pe.x = vector_from_json(points[k], "points");
    pe.image = vector_from_json(images[k], "point_images");
    s.points.push_back(std::move(pe));
  }
  auto dirs = require(j, "directions");
  auto dimgs = require(j, "direction_images");
  if (dirs.size() != dimgs.size())
    throw DimensionMismatch("directions and direction_images must have equal lengths");
  for (size_t k = 0; k < dirs.size(); ++k) {
    DirectionEntry de;
    de.x = vector_from_json(dirs[k], "directions");
    de.image = vector_from_json(dimgs[k], "direction_images");
    s.directions.push_back(std::move(de));
  }
  for (const auto& r : require(j, "lower_image_rays"))
    s.lower_image_rays.push_back(vector_from_json(r, "lower_image_rays"));
  for (const auto& h : require(j, "lambda_halfspaces"))
    s.lambda_halfspaces.push_back(halfspace_from_json(h));
  for (const auto& c : require(j, "cells")) {
    SolutionCell cell;
    cell.basis = zero_based(c.at("basis").get<std::vector<int>>());
    if (c.contains("defining")) cell.defining = zero_based(c["defining"].get<std::vector<int>>());
    for (const auto& h : c.at("halfspaces")) cell.halfspaces.push_back(halfspace_from_json(h));
    if (c.contains("witness") && !c["witness"].is_null())
      cell.witness = vector_from_json(c["witness"], "witness");
    s.cells.push_back(std::move(cell));
  }
  for (const auto& u : require(j, "unbounded_cuts")) {
    UnboundedCut cut;
    cut.basis = zero_based(u.at("basis").get<std::vector<int>>());
    cut.entering = u.at("entering").get<int>() - 1;
    cut.halfspace = halfspace_from_json(u.at("halfspace"));
    s.unbounded_cuts.push_back(std::move(cut));
  }
  return s;
}

std::string serialize_solution(const Solution& s) {
  json j;
  j["status"] = status_name(s.status);
  j["bounded"] = s.bounded;
  j["orientation_flipped"] = s.orientation_flipped;
  j["points"] = json::array();
  j["point_images"] = json::array();
  for (const auto& pe : s.points) {
    j["points"].push_back(pe.x);
    j["point_images"].push_back(pe.image);
  }
  j["directions"] = json::array();
  j["direction_images"] = json::array();
  for (const auto& de : s.directions) {
    j["directions"].push_back(de.x);
    j["direction_images"].push_back(de.image);
  }
  j["lower_image_rays"] = s.lower_image_rays;
  j["lambda_halfspaces"] = json::array();
  for (const auto& h : s.lambda_halfspaces) j["lambda_halfspaces"].push_back(halfspace_to_json(h));
  j["cells"] = json::array();
  for (const auto& c : s.cells) {
    json cell;
    cell["basis"] = one_based(c.basis);
    cell["defining"] = one_based(c.defining);
    cell["halfspaces"] = json::array();
    for (const auto& h : c.halfspaces) cell["halfspaces"].push_back(halfspace_to_json(h));
    if (c.witness)
      cell["witness"] = *c.witness;
    else
      cell["witness"] = nullptr;
    j["cells"].push_back(std::move(cell));
  }
  j["unbounded_cuts"] = json::array();
  for (const auto& u : s.unbounded_cuts) {
    json cut;
    cut["basis"] = one_based(u.basis);
    cut["entering"] = u.entering + 1;
    cut["halfspace"] = halfspace_to_json(u.halfspace);
    j["unbounded_cuts"].push_back(std::move(cut));
  }
  return j.dump(2) + "\n";
}

std::string export_partition_csv(const Solution& s) {
  const int dim = lambda_dim_of(s);
  std::ostringstream os;
  if (dim >= 1 && dim <= 2) {
    os << "cell,basis,vertices\n";
    for (size_t k = 0; k < s.cells.size(); ++k) {
      const auto verts = polytope_vertices(cell_region(s, s.cells[k]), dim);
      os << k << ",";
      const auto basis = one_based(s.cells[k].basis);
      for (size_t b = 0; b < basis.size(); ++b) os << (b ? ";" : "") << basis[b];
      os << ",";
      for (size_t v = 0; v < verts.size(); ++v) {
        if (v) os << "|";
        for (int c = 0; c < dim; ++c) os << (c ? ":" : "") << fmt(verts[v][c]);
      }
      os << "\n";
    }
    return os.str();
  }
  os << "cell,basis,halfspaces\n";
  for (size_t k = 0; k < s.cells.size(); ++k) {
    os << k << ",";
    const auto basis = one_based(s.cells[k].basis);
    for (size_t b = 0; b < basis.size(); ++b) os << (b ? ";" : "") << basis[b];
    os << ",";
    const auto region = cell_region(s, s.cells[k]);
    for (size_t h = 0; h < region.size(); ++h) {
      if (h) os << "|";
      for (size_t c = 0; c < region[h].normal.size(); ++c) os << fmt(region[h].normal[c]) << ":";
      os << fmt(region[h].offset);
    }
    os << "\n";
  }
  return os.str();
}

std::string export_partition_svg(const Solution& s) {
  const int dim = lambda_dim_of(s);
  if (dim < 1 || dim > 2)
    throw UnsupportedDimension("export_partition_svg: only q = 2 or q = 3 problems");

  const auto lambda_verts = polytope_vertices(s.lambda_halfspaces, dim);
  double lo0 = 0, hi0 = 1, lo1 = 0, hi1 = 1;
  if (!lambda_verts.empty()) {
    lo0 = hi0 = lambda_verts[0][0];
    lo1 = hi1 = dim == 2 ? lambda_verts[0][1] : 0.0;
    for (const auto& v : lambda_verts) {
      lo0 = std::min(lo0, v[0]);
      hi0 = std::max(hi0, v[0]);
      if (dim == 2) {
        lo1 = std::min(lo1, v[1]);
        hi1 = std::max(hi1, v[1]);
      }
    }
  }
  if (dim == 1) {
    lo1 = -0.15;
    hi1 = 0.15;
  }
  const double w = std::max(hi0 - lo0, 1e-6), h = std::max(hi1 - lo1, 1e-6);
  const double pad = 0.06 * std::max(w, h);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(lo0 - pad) << " "
     << fmt(-(hi1 + pad)) << " " << fmt(w + 2 * pad) << " " << fmt(h + 2 * pad) << "\">\n";
  const double stroke = 0.004 * std::max(w, h);

  auto polygon = [&](const std::vector<std::vector<double>>& verts, const std::string& fill) {
    if (verts.empty()) return;
    if (verts.size() == 1) {
      os << "  <circle cx=\"" << fmt(verts[0][0]) << "\" cy=\"" << fmt(-verts[0][1])
         << "\" r=\"" << fmt(2 * stroke) << "\" fill=\"" << fill << "\"/>\n";
      return;
    }
    if (verts.size() == 2) {
      os << "  <line x1=\"" << fmt(verts[0][0]) << "\" y1=\"" << fmt(-verts[0][1]) << "\" x2=\""
         << fmt(verts[1][0]) << "\" y2=\"" << fmt(-verts[1][1]) << "\" stroke=\"" << fill
         << "\" stroke-width=\"" << fmt(2 * stroke) << "\"/>\n";
      return;
    }
    os << "  <polygon points=\"";
    for (size_t k = 0; k < verts.size(); ++k)
      os << (k ? " " : "") << fmt(verts[k][0]) << "," << fmt(-verts[k][1]);
    os << "\" fill=\"" << fill << "\" stroke=\"#ffffff\" stroke-width=\"" << fmt(stroke)
       << "\"/>\n";
  };

  auto to2d = [&](std::vector<std::vector<double>> verts, double y0, double y1) {
    // 1-d cells become horizontal bars
    std::vector<std::vector<double>> out;
    if (verts.size() >= 2) {
      out = {{verts[0][0], y0}, {verts[1][0], y0}, {verts[1][0], y1}, {verts[0][0], y1}};
    } else if (verts.size() == 1) {
      out = {{verts[0][0], 0.5 * (y0 + y1)}};
    }
    return out;
  };

  if (dim == 2) {
    polygon(lambda_verts, "#c9c9c9");
    for (const auto& cell : s.cells)
      polygon(polytope_vertices(cell_region(s, cell), 2), "#7fa8d0");
  } else {
    polygon(to2d(lambda_verts, -0.05, 0.05), "#c9c9c9");
    for (const auto& cell : s.cells)
      polygon(to2d(polytope_vertices(cell_region(s, cell), 1), -0.1, 0.1), "#7fa8d0");
  }
  os << "</svg>\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file '" + path + "'");
  out << content;
}

}  // namespace paravec
