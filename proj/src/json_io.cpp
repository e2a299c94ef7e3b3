#include "rsyt/json_io.hpp"

#include <fstream>
#include <sstream>

#include "rsyt/error.hpp"

namespace rsyt {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::BadInput, path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

long long get_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<long long>();
}

int get_small_int(const Json& j, const std::string& path) {
  const long long v = get_int(j, path);
  if (v < -1000000 || v > 1000000) bad(path, "integer out of range");
  return static_cast<int>(v);
}

Rational get_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) bad(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

std::vector<Rational> rational_list(const Json& j, const std::string& path) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i)
    out.push_back(get_rational(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<int> int_list(const Json& j, const std::string& path) {
  std::vector<int> out;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i)
    out.push_back(get_small_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Json rational_array(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::vector<Cell> cell_list(const Json& j, const std::string& path) {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i)
    out.push_back(cell_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Json cell_array(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (Cell c : cells) out.push_back(cell_to_json(c));
  return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::BadInput, source + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

Json to_json(const Shape& shape) {
  if (shape.is_rectangular()) return Json{{"kind", "rect"}, {"m", shape.m()}, {"n", shape.n()}};
  return Json{{"kind", "staircase"}, {"n", shape.n()}};
}

Shape shape_from_json(const Json& j) {
  const Json& kind = field(j, "kind", "shape");
  if (kind == "rect") {
    const int m = get_small_int(field(j, "m", "shape"), "shape.m"), n = get_small_int(field(j, "n", "shape"), "shape.n");
    if (m < 1 || n < 1) bad("shape", "m and n must be positive");
    return Shape::rectangular(m, n);
  }
  if (kind == "staircase") {
    const int n = get_small_int(field(j, "n", "shape"), "shape.n");
    if (n < 1) bad("shape", "n must be positive");
    return Shape::staircase(n);
  }
  bad("shape.kind", "expected \"rect\" or \"staircase\"");
}

Json to_json(const Tableau& t) { return Json{{"shape", to_json(t.shape())}, {"rows", t.rows()}}; }

Tableau tableau_from_json(const Json& j) {
  const Shape shape = shape_from_json(field(j, "shape", "tableau"));
  const Json& rows = array_at(field(j, "rows", "tableau"), "rows");
  std::vector<std::vector<int>> values;
  for (std::size_t r = 0; r < rows.size(); ++r) values.push_back(int_list(rows[r], "rows[" + std::to_string(r) + "]"));
  return validate_tableau(shape, std::move(values));
}

Json cell_to_json(Cell c) { return Json::array({c.row + 1, c.col + 1}); }

Cell cell_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) bad(path, "expected a cell [row, col]");
  const int r = get_small_int(j[0], path + "[0]"), c = get_small_int(j[1], path + "[1]");
  if (r < 1 || c < 1) bad(path, "cells are 1-based");
  return Cell{r - 1, c - 1};
}

Json to_json(const OuterSumWitness& w) { return Json{{"x", rational_array(w.x)}, {"y", rational_array(w.y)}}; }

OuterSumWitness witness_from_json(const Json& j) {
  OuterSumWitness w{rational_list(field(j, "x", "witness"), "x"), rational_list(field(j, "y", "witness"), "y")};
  if (w.x.empty() || w.y.empty()) bad("witness", "x and y must be nonempty");
  return w;
}

Json to_json(const TabooCertificate& c) { return Json{{"A", cell_array(c.a)}, {"B", cell_array(c.b)}}; }

TabooCertificate taboo_from_json(const Json& j) {
  TabooCertificate c{cell_list(field(j, "A", "certificate"), "A"), cell_list(field(j, "B", "certificate"), "B")};
  if (c.a.size() != c.b.size()) bad("certificate", "A and B must have equal size");
  return c;
}

Json to_json(const FeasibilityResult& r) {
  if (r.realizable()) {
    const auto& ok = r.as_realizable();
    return Json{{"outcome", "realizable"}, {"witness", to_json(ok.witness)}, {"margin", to_string(ok.margin)}};
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.system.rows.size(); ++i)
    rows.push_back(Json{{"lower", cell_to_json(r.system.comparisons[i].first)},
                        {"upper", cell_to_json(r.system.comparisons[i].second)},
                        {"coefficients", r.system.rows[i]}});
  return Json{{"outcome", "not_realizable"},
              {"farkas", Json{{"multipliers", rational_array(r.as_not_realizable().farkas.multipliers)}, {"rows", rows}}}};
}

Json to_json(const SortingNetwork& net) { return Json{{"wires", net.wires}, {"swaps", net.swaps}}; }

SortingNetwork network_from_json(const Json& j) {
  SortingNetwork net{get_small_int(field(j, "wires", "network"), "wires"), int_list(field(j, "swaps", "network"), "swaps")};
  validate_network(net);
  return net;
}

Json to_json(const PointConfiguration& c) {
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(Json::array({to_string(p.x), to_string(p.y)}));
  return Json{{"points", pts}};
}

PointConfiguration configuration_from_json(const Json& j) {
  const Json& pts = array_at(field(j, "points", "configuration"), "points");
  PointConfiguration c;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string path = "points[" + std::to_string(i) + "]";
    if (!pts[i].is_array() || pts[i].size() != 2) bad(path, "expected a point [x, y]");
    c.points.push_back(Point2{get_rational(pts[i][0], path + "[0]"), get_rational(pts[i][1], path + "[1]")});
  }
  return c;
}

Json to_json(const RealizabilityVerdict& v) {
  if (v.found()) return Json{{"outcome", "witness"}, {"trials", v.trials}, {"configuration", to_json(*v.witness)}};
  return Json{{"outcome", "unknown"}, {"trials", v.trials}};
}

Json to_json(const SliceVertex& v) { return Json{{"perm", v.perm}, {"m", v.m}, {"n", v.n}, {"k", v.k}}; }

SliceVertex vertex_from_json(const Json& j) {
  SliceVertex v{int_list(field(j, "perm", "vertex"), "perm"), get_small_int(field(j, "m", "vertex"), "m"),
                get_small_int(field(j, "n", "vertex"), "n"), get_small_int(field(j, "k", "vertex"), "k")};
  validate_vertex(v);
  return v;
}

Json to_json(const LabeledLatticePath& p) {
  Json steps = Json::array();
  for (const auto& s : p.steps) steps.push_back(Json{{"dir", s.up ? "up" : "right"}, {"label", s.label}});
  return Json{{"m", p.m}, {"n", p.n}, {"area", p.area()}, {"steps", steps}};
}

Json to_json(const NormalConeDescription& c) {
  auto roots = [](const std::vector<Root>& rs) {
    Json out = Json::array();
    for (const auto& r : rs) out.push_back(Json::array({r.plus, r.minus}));
    return out;
  };
  return Json{{"m", c.m}, {"n", c.n}, {"delta_plain", roots(c.delta_plain)}, {"delta_m", roots(c.delta_m)}};
}

Json to_json(const Flag& f) { return Json(f.subsets); }

Flag flag_from_json(const Json& j) {
  const Json& subsets = array_at(j.is_object() ? field(j, "flag", "flag") : j, "flag");
  Flag f;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::vector<int> s = int_list(subsets[i], "flag[" + std::to_string(i) + "]");
    if (i == 0 && s.empty()) continue;
    f.subsets.push_back(std::move(s));
  }
  validate_flag(f);
  return f;
}

Json to_json(const EnumerationReport& r, bool with_timing) {
  Json out{{"m", r.m},
           {"n", r.n},
           {"realizable_count", to_string(r.realizable_count)},
           {"total_count", to_string(r.total_count)},
           {"lp_calls", r.lp_calls}};
  if (with_timing) out["elapsed_seconds"] = r.elapsed.count();
  Json examples = Json::array();
  for (const auto& t : r.nonrealizable_examples) examples.push_back(to_json(t));
  out["nonrealizable_examples"] = examples;
  return out;
}

Json to_json(const BoundsReport& r) {
  return Json{{"m", r.m},
              {"n", r.n},
              {"hyperplanes", to_string(r.hyperplanes)},
              {"upper", to_string(r.upper)},
              {"lower", to_string(r.lower)},
              {"syt_total", to_string(r.syt_total)},
              {"ratio_upper", to_string(r.ratio_upper)}};
}

Json to_json(const TabooScanReport& r) {
  Json lacking = Json::array();
  for (const auto& t : r.lacking_certificate) lacking.push_back(to_json(t));
  return Json{{"m", r.m},
              {"n", r.n},
              {"total", r.total},
              {"not_realizable", r.not_realizable},
              {"with_certificate", r.with_certificate},
              {"lacking_certificate", lacking}};
}

}  // namespace rsyt
