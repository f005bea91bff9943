// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#include "elcp/problem_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "elcp/example_problem.hpp"

namespace elcp {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::runtime_error(where + ": " + what);
}

const Json& field(const Json& j, const char* name, const std::string& where) {
  auto it = j.find(name);
  if (it == j.end()) fail(where, std::string("missing field '") + name + "'");
  return *it;
}

std::string get_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

double get_double(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

bool get_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean()) fail(where, "expected a boolean");
  return j.get<bool>();
}

int get_positive_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected a positive integer");
  const auto v = j.get<long long>();
  if (v < 1 || v > 1000000) fail(where, "value " + std::to_string(v) + " is not a positive integer in range");
  return static_cast<int>(v);
}

Vector get_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of numbers");
  Vector v(static_cast<int>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<int>(i)) = get_double(j[i], where + "[" + std::to_string(i) + "]");
  }
  return v;
}

std::vector<double> get_double_list(const Json& j, const std::string& where) {
  Vector v = get_vector(j, where);
  return std::vector<double>(v.data(), v.data() + v.size());
}

// Rows of the JSON array become rows of the matrix.
Matrix get_matrix(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of rows");
  Vector first = get_vector(j[0], where + "[0]");
  Matrix m(static_cast<int>(j.size()), first.size());
  m.row(0) = first;
  for (std::size_t i = 1; i < j.size(); ++i) {
    Vector row = get_vector(j[i], where + "[" + std::to_string(i) + "]");
    if (row.size() != first.size()) {
      fail(where, "row " + std::to_string(i) + " has length " + std::to_string(row.size()) +
                      ", expected " + std::to_string(first.size()));
    }
    m.row(static_cast<int>(i)) = row;
  }
  return m;
}

void check_length(const Vector& v, int expected, const std::string& where, const char* dim_name) {
  if (v.size() != expected) {
    fail(where, "length " + std::to_string(v.size()) + " does not match " + dim_name + " = " +
                    std::to_string(expected));
  }
}

ConeSpec parse_cone(const Json& j, int expect_dim, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const std::string type = get_string(field(j, "type", where), where + ".type");
  try {
    if (type == "orthant" || type == "second_order") {
      const int dim = get_positive_int(field(j, "dim", where), where + ".dim");
      if (dim != expect_dim) {
        fail(where, "cone dimension " + std::to_string(dim) + " does not match the declared dimension " +
                        std::to_string(expect_dim));
      }
      return type == "orthant" ? ConeSpec::orthant(dim) : ConeSpec::second_order(dim);
    }
    if (type == "polyhedral") {
      const bool has_hs = j.contains("halfspaces");
      const bool has_gen = j.contains("generators");
      if (has_hs == has_gen) fail(where, "polyhedral cone needs exactly one of 'halfspaces' or 'generators'");
      Matrix rows = get_matrix(field(j, has_hs ? "halfspaces" : "generators", where),
                               where + (has_hs ? ".halfspaces" : ".generators"));
      if (rows.cols() != expect_dim) {
        fail(where, std::string(has_hs ? "halfspace normals" : "generators") + " have length " +
                        std::to_string(rows.cols()) + ", expected dimension " + std::to_string(expect_dim));
      }
      return has_hs ? ConeSpec::polyhedral_halfspaces(rows) : ConeSpec::polyhedral_generators(rows.transpose());
    }
    if (type == "hyperplane") {
      Vector a = get_vector(field(j, "normal", where), where + ".normal");
      check_length(a, expect_dim, where + ".normal", "the declared dimension");
      return ConeSpec::hyperplane(a);
    }
    if (type == "product") {
      const int head = get_positive_int(field(j, "head_dim", where), where + ".head_dim");
      if (head >= expect_dim) {
        fail(where, "head_dim " + std::to_string(head) + " leaves no room in dimension " +
                        std::to_string(expect_dim));
      }
      return ConeSpec::product(head, parse_cone(field(j, "inner", where), expect_dim - head, where + ".inner"));
    }
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception& e) {  // factory validation
    fail(where, e.what());
  }
  fail(where + ".type", "unknown cone type '" + type + "'");
}

ScalarFn1D parse_fn1d(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const std::string type = get_string(field(j, "type", where), where + ".type");
  try {
    if (type == "affine") {
      return ScalarFn1D::affine(get_double(field(j, "slope", where), where + ".slope"),
                                get_double(field(j, "intercept", where), where + ".intercept"));
    }
    if (type == "exp") return ScalarFn1D::exponential();
    if (type == "arctan") return ScalarFn1D::arctangent();
    if (type == "piecewise_linear") {
      return ScalarFn1D::piecewise_linear(get_double_list(field(j, "t", where), where + ".t"),
                                          get_double_list(field(j, "y", where), where + ".y"));
    }
    if (type == "compose") {
      return ScalarFn1D::compose(parse_fn1d(field(j, "outer", where), where + ".outer"),
                                 parse_fn1d(field(j, "inner", where), where + ".inner"));
    }
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
  fail(where + ".type", "unknown 1-d function type '" + type + "'");
}

MonotoneScalarFn parse_scalar_fn(const Json& j, int p, int q, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const std::string type = get_string(field(j, "type", where), where + ".type");
  try {
    if (type == "lorentz_affine") {
      Vector d = get_vector(field(j, "d", where), where + ".d");
      check_length(d, p, where + ".d", "p");
      return MonotoneScalarFn::lorentz_affine(d, get_double(field(j, "beta", where), where + ".beta"),
                                              get_double(field(j, "gamma", where), where + ".gamma"));
    }
    if (type == "separable_simplicial") {
      // Rows of "basis" are the generator columns of the simplicial cone.
      Matrix rows = get_matrix(field(j, "basis", where), where + ".basis");
      const Json& comps = field(j, "components", where);
      if (!comps.is_array()) fail(where + ".components", "expected an array");
      std::vector<ScalarFn1D> g;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        g.push_back(parse_fn1d(comps[i], where + ".components[" + std::to_string(i) + "]"));
      }
      return MonotoneScalarFn::separable_simplicial(rows.transpose(), std::move(g), p, q);
    }
    if (type == "composed") {
      MonotoneScalarFn inner = parse_scalar_fn(field(j, "inner", where), p, q, where + ".inner");
      return MonotoneScalarFn::composed(std::move(inner), parse_fn1d(field(j, "psi", where), where + ".psi"));
    }
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
  fail(where + ".type", "unknown scalar function type '" + type + "'");
}

MapSpec parse_map(const Json& j, int p, int q, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const std::string type = get_string(field(j, "type", where), where + ".type");
  const int n = p + q;
  MapSpec spec;
  if (type == "affine") {
    spec.kind = MapSpec::Kind::Affine;
    spec.matrix = get_matrix(field(j, "matrix", where), where + ".matrix");
    if (spec.matrix.rows() != n || spec.matrix.cols() != n) {
      fail(where + ".matrix", "shape " + std::to_string(spec.matrix.rows()) + "x" +
                                  std::to_string(spec.matrix.cols()) + " does not match p + q = " +
                                  std::to_string(n));
    }
    spec.offset = get_vector(field(j, "offset", where), where + ".offset");
    check_length(spec.offset, n, where + ".offset", "p + q");
    return spec;
  }
  if (type == "combination") {
    const Json& terms = field(j, "terms", where);
    if (!terms.is_array() || terms.empty()) fail(where + ".terms", "expected a nonempty array");
    std::vector<CombinationTerm> list;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string twhere = where + ".terms[" + std::to_string(i) + "]";
      const Json& t = terms[i];
      if (!t.is_object()) fail(twhere, "expected an object");
      MonotoneScalarFn fn = parse_scalar_fn(field(t, "fn", twhere), p, q, twhere + ".fn");
      const Json& w = field(t, "weight", twhere);
      Vector wx = get_vector(field(w, "x", twhere + ".weight"), twhere + ".weight.x");
      Vector wu = get_vector(field(w, "u", twhere + ".weight"), twhere + ".weight.u");
      check_length(wx, p, twhere + ".weight.x", "p");
      check_length(wu, q, twhere + ".weight.u", "q");
      list.push_back({std::move(fn), Point(wx, wu)});
    }
    try {
      spec.combination = IsotoneCombination(p, q, std::move(list));
    } catch (const std::exception& e) {  // weight membership
      fail(where + ".terms", e.what());
    }
    spec.kind = MapSpec::Kind::Combination;
    return spec;
  }
  if (type == "builtin") {
    spec.kind = MapSpec::Kind::Builtin;
    spec.builtin_id = get_string(field(j, "id", where), where + ".id");
    return spec;
  }
  fail(where + ".type", "unknown map type '" + type + "'");
}

void apply_start(const Json& root, Problem& prob) {
  if (!root.contains("start")) return;
  const Json& s = root["start"];
  if (!s.is_object()) fail("problem.start", "expected an object with fields 'x' and 'u'");
  Vector x = get_vector(field(s, "x", "problem.start"), "problem.start.x");
  Vector u = get_vector(field(s, "u", "problem.start"), "problem.start.u");
  check_length(x, prob.p, "problem.start.x", "p");
  check_length(u, prob.q, "problem.start.u", "q");
  prob.start = Point(std::move(x), std::move(u));
}

void apply_options(const Json& root, Problem& prob) {
  if (!root.contains("options")) return;
  const Json& o = root["options"];
  if (!o.is_object()) fail("problem.options", "expected an object");
  for (auto it = o.begin(); it != o.end(); ++it) {
    const std::string& key = it.key();
    const std::string where = "problem.options." + key;
    if (key == "max_iter") {
      prob.options.max_iter = get_positive_int(it.value(), where);
    } else if (key == "tol_step" || key == "tol_residual") {
      const double v = get_double(it.value(), where);
      if (!(v > 0.0)) fail(where, "tolerance must be positive");
      (key == "tol_step" ? prob.options.tol_step : prob.options.tol_residual) = v;
    } else if (key == "monotone_check") {
      prob.options.monotone_check = get_bool(it.value(), where);
    } else if (key == "trace") {
      prob.options.trace = get_bool(it.value(), where);
    } else {
      fail("problem.options", "unknown option '" + key + "'");
    }
  }
}

Problem parse_problem_json(const Json& root) {
  if (!root.is_object()) fail("problem", "expected a JSON object");
  for (auto it = root.begin(); it != root.end(); ++it) {
    const std::string& key = it.key();
    if (key != "name" && key != "p" && key != "q" && key != "cone" && key != "map" &&
        key != "start" && key != "options") {
      fail("problem", "unknown field '" + key + "'");
    }
  }
  const Json& mapj = field(root, "map", "problem");
  if (!mapj.is_object()) fail("problem.map", "expected an object");
  const std::string map_type = get_string(field(mapj, "type", "problem.map"), "problem.map.type");

  if (map_type == "builtin") {
    const std::string id = get_string(field(mapj, "id", "problem.map"), "problem.map.id");
    if (id != kBuiltinExampleId) fail("problem.map.id", "unknown builtin problem id '" + id + "'");
    Problem prob = example_problem();
    if (root.contains("p")) {
      const int p = get_positive_int(root["p"], "problem.p");
      if (p != prob.p) {
        fail("problem.p", "builtin problem has p = " + std::to_string(prob.p) + ", file declares p = " +
                              std::to_string(p));
      }
    }
    if (root.contains("q")) {
      const int q = get_positive_int(root["q"], "problem.q");
      if (q != prob.q) {
        fail("problem.q", "builtin problem has q = " + std::to_string(prob.q) + ", file declares q = " +
                              std::to_string(q));
      }
    }
    if (root.contains("cone")) fail("problem.cone", "a builtin map carries its own cone; remove this field");
    if (root.contains("name")) prob.name = get_string(root["name"], "problem.name");
    apply_start(root, prob);
    apply_options(root, prob);
    return prob;
  }

  Problem prob;
  prob.p = get_positive_int(field(root, "p", "problem"), "problem.p");
  prob.q = get_positive_int(field(root, "q", "problem"), "problem.q");
  if (root.contains("name")) prob.name = get_string(root["name"], "problem.name");
  prob.C = parse_cone(field(root, "cone", "problem"), prob.q, "problem.cone");
  prob.map = parse_map(mapj, prob.p, prob.q, "problem.map");
  prob.F = compile_map(prob.map, prob.p, prob.q);
  prob.start = Point::zero(prob.p, prob.q);
  apply_start(root, prob);
  apply_options(root, prob);
  return prob;
}

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json matrix_rows_json(const Matrix& m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i)));
  return a;
}

Json cone_json(const ConeSpec& c) {
  Json j;
  switch (c.kind()) {
    case ConeSpec::Kind::Orthant:
      j["type"] = "orthant";
      j["dim"] = c.dim();
      break;
    case ConeSpec::Kind::SecondOrder:
      j["type"] = "second_order";
      j["dim"] = c.dim();
      break;
    case ConeSpec::Kind::Polyhedral:
      j["type"] = "polyhedral";
      if (c.by_halfspaces()) {
        j["halfspaces"] = matrix_rows_json(c.halfspaces());
      } else {
        j["generators"] = matrix_rows_json(c.generators().transpose());
      }
      break;
    case ConeSpec::Kind::Hyperplane:
      j["type"] = "hyperplane";
      j["normal"] = vector_json(c.normal());
      break;
    case ConeSpec::Kind::Product:
      j["type"] = "product";
      j["head_dim"] = c.head_dim();
      j["inner"] = cone_json(c.inner());
      break;
  }
  return j;
}

Json fn1d_json(const ScalarFn1D& f) {
  Json j;
  switch (f.kind()) {
    case ScalarFn1D::Kind::Affine:
      j["type"] = "affine";
      j["slope"] = f.slope();
      j["intercept"] = f.intercept();
      break;
    case ScalarFn1D::Kind::Exp:
      j["type"] = "exp";
      break;
    case ScalarFn1D::Kind::Arctan:
      j["type"] = "arctan";
      break;
    case ScalarFn1D::Kind::PiecewiseLinear:
      j["type"] = "piecewise_linear";
      j["t"] = Json(f.knots_t());
      j["y"] = Json(f.knots_y());
      break;
    case ScalarFn1D::Kind::Compose:
      j["type"] = "compose";
      j["outer"] = fn1d_json(f.outer());
      j["inner"] = fn1d_json(f.inner());
      break;
  }
  return j;
}

Json scalar_fn_json(const MonotoneScalarFn& f) {
  Json j;
  switch (f.kind()) {
    case MonotoneScalarFn::Kind::LorentzAffine:
      j["type"] = "lorentz_affine";
      j["d"] = vector_json(f.d());
      j["beta"] = f.beta();
      j["gamma"] = f.gamma();
      break;
    case MonotoneScalarFn::Kind::SeparableSimplicial: {
      j["type"] = "separable_simplicial";
      j["basis"] = matrix_rows_json(f.basis().transpose());
      Json comps = Json::array();
      for (const ScalarFn1D& g : f.components()) comps.push_back(fn1d_json(g));
      j["components"] = comps;
      break;
    }
    case MonotoneScalarFn::Kind::Composed:
      j["type"] = "composed";
      j["inner"] = scalar_fn_json(f.inner());
      j["psi"] = fn1d_json(f.psi());
      break;
  }
  return j;
}

Json map_json(const MapSpec& m) {
  Json j;
  switch (m.kind) {
    case MapSpec::Kind::Affine:
      j["type"] = "affine";
      j["matrix"] = matrix_rows_json(m.matrix);
      j["offset"] = vector_json(m.offset);
      break;
    case MapSpec::Kind::Combination: {
      if (!m.combination) throw std::runtime_error("combination map has no terms to serialize");
      j["type"] = "combination";
      Json terms = Json::array();
      for (const CombinationTerm& t : m.combination->terms()) {
        Json tj;
        tj["fn"] = scalar_fn_json(t.fn);
        Json w;
        w["x"] = vector_json(t.weight.x);
        w["u"] = vector_json(t.weight.u);
        tj["weight"] = w;
        terms.push_back(tj);
      }
      j["terms"] = terms;
      break;
    }
    case MapSpec::Kind::Builtin:
      j["type"] = "builtin";
      j["id"] = m.builtin_id;
      break;
  }
  return j;
}

bool scalars_only(const Json& a) {
  for (const auto& e : a) {
    if (e.is_structured()) return false;
  }
  return true;
}

void dump_rec(const Json& j, std::string& out, int depth) {
  const auto child_pad = [&](int d) { return std::string(static_cast<std::size_t>(d) * 2, ' '); };
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += child_pad(depth + 1);
      out += Json(it.key()).dump();
      out += ": ";
      dump_rec(it.value(), out, depth + 1);
      if (i + 1 < j.size()) out += ",";
      out += "\n";
    }
    out += child_pad(depth) + "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    if (scalars_only(j)) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        dump_rec(j[i], out, depth);
      }
      out += "]";
    } else {
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += child_pad(depth + 1);
        dump_rec(j[i], out, depth + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
      }
      out += child_pad(depth) + "]";
    }
  } else if (j.is_string()) {
    out += j.dump();
  } else if (j.is_boolean()) {
    out += j.get<bool>() ? "true" : "false";
  } else if (j.is_null()) {
    out += "null";
  } else if (j.is_number_float()) {
    out += format_double(j.get<double>());
  } else if (j.is_number_unsigned()) {
    out += std::to_string(j.get<std::uint64_t>());
  } else {
    out += std::to_string(j.get<std::int64_t>());
  }
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Problem parse_problem_text(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(std::string("problem file: ") + e.what());
  }
  return parse_problem_json(root);
}

Problem load_problem(const std::string& path) { return parse_problem_text(read_file(path)); }

std::string serialize_problem(const Problem& problem) {
  Json j;
  if (!problem.name.empty()) j["name"] = problem.name;
  j["p"] = problem.p;
  j["q"] = problem.q;
  j["cone"] = cone_json(problem.C);
  j["map"] = map_json(problem.map);
  Json s;
  s["x"] = vector_json(problem.start.x);
  s["u"] = vector_json(problem.start.u);
  j["start"] = s;
  Json o;
  o["max_iter"] = problem.options.max_iter;
  o["tol_step"] = problem.options.tol_step;
  o["tol_residual"] = problem.options.tol_residual;
  o["monotone_check"] = problem.options.monotone_check;
  o["trace"] = problem.options.trace;
  j["options"] = o;
  return dump_json(j) + "\n";
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string dump_json(const Json& j) {
  std::string out;
  dump_rec(j, out, 0);
  return out;
}

std::string trace_to_csv(const std::vector<TraceRow>& trace, int p, int q) {
  std::string out = "n";
  for (int i = 1; i <= p; ++i) out += ",x_" + std::to_string(i);
  for (int i = 1; i <= q; ++i) out += ",u_" + std::to_string(i);
  out += ",residual,step_norm\n";
  for (const TraceRow& r : trace) {
    out += std::to_string(r.n);
    for (int i = 0; i < p; ++i) out += "," + csv_number(r.z.x(i));
    for (int i = 0; i < q; ++i) out += "," + csv_number(r.z.u(i));
    out += "," + csv_number(r.residual) + "," + csv_number(r.step_norm) + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace elcp
