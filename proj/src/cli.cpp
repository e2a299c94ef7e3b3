#include "rsyt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "rsyt/diagrams.hpp"
#include "rsyt/error.hpp"
#include "rsyt/json_io.hpp"

namespace rsyt {

namespace {

struct Document {
  std::optional<Json> json;
  std::string svg;
};

// ---------------------------------------------------------------------------
// Output formats

bool is_leaf(const Json& j) {
  if (j.is_object()) return false;
  if (!j.is_array()) return true;
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return !e.is_object(); });
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (is_leaf(j)) {
    rows.emplace_back(prefix, scalar_text(j));
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// Two-space indentation, with arrays that hold no objects kept on one line.
void pretty(const Json& j, int indent, std::ostringstream& out) {
  if (is_leaf(j)) {
    out << j.dump();
    return;
  }
  const std::string pad(indent + 2, ' ');
  const bool object = j.is_object();
  out << (object ? "{\n" : "[\n");
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    out << pad;
    if (object) out << Json(it.key()).dump() << ": ";
    pretty(it.value(), indent + 2, out);
    out << (i + 1 < j.size() ? ",\n" : "\n");
  }
  out << std::string(indent, ' ') << (object ? '}' : ']');
}

std::string render(const Json& j, const std::string& format) {
  if (format == "json") {
    std::ostringstream out;
    pretty(j, 0, out);
    out << '\n';
    return out.str();
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::ostringstream out;
  if (format == "csv") {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_field(k) << ',' << csv_field(v) << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.first.size());
    for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Input helpers

int cap_or(int fallback) {
  const char* env = std::getenv("RSYT_CAP");
  if (!env || !*env) return fallback;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 1) throw std::invalid_argument("cap");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadInput, std::string("RSYT_CAP must be a positive integer, got \"") + env + "\"");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  for (const auto& tok : split(s, ',')) {
    const BigInt v = [&] {
      try {
        return parse_bigint(tok);
      } catch (const Error&) {
        throw Error(ErrorKind::BadInput, what + ": \"" + tok + "\" is not an integer");
      }
    }();
    if (v < -1000000 || v > 1000000) throw Error(ErrorKind::BadInput, what + ": integer out of range");
    out.push_back(v.convert_to<int>());
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_rational(tok));
  return out;
}

struct TableauInput {
  std::string path;
  std::string rows;

  void add(CLI::App* app) {
    app->add_option("--tableau", path, "Tableau JSON file");
    app->add_option("--rows", rows, "Inline rectangular tableau, e.g. 1,2,6|3,5,7|4,8,9");
  }
  bool given() const { return !path.empty() || !rows.empty(); }
  Tableau load() const {
    if (!path.empty()) return tableau_from_json(read_json_file(path));
    if (rows.empty()) throw Error(ErrorKind::BadInput, "a tableau is required (--tableau or --rows)");
    std::vector<std::vector<int>> values;
    for (const auto& r : split(rows, '|')) values.push_back(parse_int_list(r, "--rows"));
    const int m = static_cast<int>(values.size()), n = static_cast<int>(values.front().size());
    if (n == 0) throw Error(ErrorKind::BadInput, "--rows: empty row");
    return validate_tableau(Shape::rectangular(m, n), std::move(values));
  }
};

struct WitnessInput {
  std::string path;
  std::string x;
  std::string y;

  void add(CLI::App* app) {
    app->add_option("--witness", path, "Witness JSON file {\"x\":[...],\"y\":[...]}");
    app->add_option("--x", x, "Inline x, comma separated rationals");
    app->add_option("--y", y, "Inline y, comma separated rationals");
  }
  bool given() const { return !path.empty() || !x.empty() || !y.empty(); }
  OuterSumWitness load() const {
    if (!path.empty()) return witness_from_json(read_json_file(path));
    if (x.empty() || y.empty()) throw Error(ErrorKind::BadInput, "a witness is required (--witness or --x with --y)");
    return OuterSumWitness{parse_rational_list(x), parse_rational_list(y)};
  }
};

struct NetworkInput {
  std::string path;
  std::string swaps;
  int wires = 0;

  void add(CLI::App* app) {
    app->add_option("--network", path, "Network JSON file {\"wires\":k,\"swaps\":[...]}");
    app->add_option("--swaps", swaps, "Inline swap positions, comma separated");
    app->add_option("--wires", wires, "Number of wires for --swaps");
  }
  bool given() const { return !path.empty() || !swaps.empty(); }
  SortingNetwork load() const {
    if (!path.empty()) return network_from_json(read_json_file(path));
    if (swaps.empty()) throw Error(ErrorKind::BadInput, "a network is required (--network or --swaps with --wires)");
    SortingNetwork net{wires, parse_int_list(swaps, "--swaps")};
    validate_network(net);
    return net;
  }
};

struct VertexInput {
  std::string path;
  std::string perm;
  int m = 0;

  void add(CLI::App* app, bool with_m) {
    app->add_option("--vertex", path, "Vertex JSON file {\"perm\":[...],\"m\":..,\"n\":..,\"k\":..}");
    app->add_option("--perm", perm, "Inline permutation, comma separated");
    if (with_m) app->add_option("--m", m, "Size of the first block for --perm");
  }
  SliceVertex load() const {
    if (!path.empty()) return vertex_from_json(read_json_file(path));
    if (perm.empty()) throw Error(ErrorKind::BadInput, "a vertex is required (--vertex or --perm with --m)");
    SliceVertex v;
    v.perm = parse_int_list(perm, "--perm");
    v.m = m;
    v.n = static_cast<int>(v.perm.size()) - m;
    if (m < 1 || v.n < 1) throw Error(ErrorKind::BadInput, "--m must lie strictly between 0 and the permutation length");
    v.k = 0;
    for (int i = 0; i < m; ++i) v.k += v.perm[i];
    validate_vertex(v);
    return v;
  }
};

Json tableau_list(const std::vector<Tableau>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back(to_json(t));
  return out;
}

Json network_list(const std::vector<SortingNetwork>& nets) {
  Json out = Json::array();
  for (const auto& n : nets) out.push_back(n.swaps);
  return out;
}

// ---------------------------------------------------------------------------

class Cli {
 public:
  Cli() : app_("Realizable standard Young tableaux toolkit", "rsyt") {
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_option("--format", format_, "Output format")->check(CLI::IsMember({"json", "table", "csv"}));
    app_.add_option("--out", out_path_, "Write the document to this file");
    app_.add_option("--seed", seed_, "Random seed");
    app_.add_option("--budget", budget_, "Trial budget for randomized searches");
    app_.add_option("--grid", grid_, "Initial sampling grid side");
    app_.add_option("--jobs", jobs_, "Worker threads for enumeration")->check(CLI::PositiveNumber);
    app_.add_option("--max-size", max_size_, "Largest taboo certificate searched")->check(CLI::PositiveNumber);
    app_.add_flag("--prune,!--no-prune", prune_, "Prefix-feasibility pruning in enumeration");

    add_check();
    add_witness();
    add_taboo();
    add_enumerate();
    add_extensions();
    add_bounds();
    add_regions();
    add_staircase();
    add_slice();
    add_viz();
  }

  CLI::App& app() { return app_; }
  const std::string& format() const { return format_; }
  const std::string& out_path() const { return out_path_; }
  Document execute() { return action_(); }

 private:
  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help,
                 std::function<Document()> body) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([this, body] { action_ = body; });
    return sub;
  }

  static Document json(Json j) { return Document{std::move(j), {}}; }

  void add_check() {
    auto* in = &check_tableau_;
    auto* sub = leaf(&app_, "check", "Decide outer-sum realizability of a rectangular tableau", [this, in] {
      const Tableau t = in->load();
      const FeasibilityResult r = decide_realizable(t, check_all_pairs_);
      Json j = to_json(r);
      j["tableau"] = to_json(t);
      if (r.realizable()) j["verified"] = verify_witness(t, r.as_realizable().witness);
      else j["verified"] = verify_farkas(r.system, r.as_not_realizable().farkas);
      return json(std::move(j));
    });
    in->add(sub);
    sub->add_flag("--all-pairs", check_all_pairs_, "Use every pairwise comparison instead of consecutive values");
  }

  void add_witness() {
    auto* sub = leaf(&app_, "witness", "Tableau of an outer sum, optionally verified against a tableau", [this] {
      const OuterSumWitness w = witness_in_.load();
      Json j{{"witness", to_json(w)}};
      if (witness_tableau_.given()) {
        const Tableau t = witness_tableau_.load();
        j["tableau"] = to_json(t);
        j["verified"] = verify_witness(t, w);
      } else {
        j["tableau"] = to_json(tableau_of_outer_sum(w));
      }
      return json(std::move(j));
    });
    witness_in_.add(sub);
    witness_tableau_.add(sub);
  }

  void add_taboo() {
    auto* sub = leaf(&app_, "taboo", "Search for a taboo certificate, or scan a shape with --harness", [this] {
      if (taboo_harness_) {
        if (dims_.first < 1 || dims_.second < 1) throw Error(ErrorKind::BadInput, "--harness needs --m and --n");
        return json(to_json(taboo_conjecture_scan(dims_.first, dims_.second, cap_or(16))));
      }
      const Tableau t = taboo_tableau_.load();
      const int size = max_size_.value_or(kDefaultTabooSize);
      const auto cert = find_taboo_certificate(t, size);
      Json j{{"tableau", to_json(t)}, {"max_size", size}, {"found", cert.has_value()}};
      if (cert) {
        j["certificate"] = to_json(*cert);
        j["verified"] = verify_taboo(t, *cert);
      }
      return json(std::move(j));
    });
    taboo_tableau_.add(sub);
    sub->add_flag("--harness", taboo_harness_, "Report non-realizable tableaux of an m x n shape lacking certificates");
    sub->add_option("--m", dims_.first, "Rows for --harness");
    sub->add_option("--n", dims_.second, "Columns for --harness");
  }

  void add_enumerate() {
    auto* sub = leaf(&app_, "enumerate", "Count realizable m x n tableaux", [this] {
      EnumerationOptions o;
      o.prune = prune_;
      o.jobs = jobs_;
      o.cap = cap_or(kDefaultEnumerationCap);
      o.collect_nonrealizable = examples_ > 0;
      o.max_examples = examples_;
      return json(to_json(enumerate_realizable(dims_.first, dims_.second, o), timing_));
    });
    add_dims(sub);
    sub->add_option("--examples", examples_, "Keep this many non-realizable examples");
    sub->add_flag("--timing", timing_, "Include elapsed time (output is then not reproducible)");
  }

  void add_extensions() {
    auto* sub = leaf(&app_, "extensions", "Single-row extensions of a tableau or of a fixed witness", [this] {
      if (ext_witness_.given()) {
        const OuterSumWitness w = ext_witness_.load();
        const Tableau base = tableau_of_outer_sum(w);
        const auto list = fixed_witness_extensions(w);
        return json(Json{{"mode", "fixed_witness"},
                         {"base", to_json(base)},
                         {"count", list.size()},
                         {"formula", to_string(extension_count_formula(base))},
                         {"extensions", tableau_list(list)}});
      }
      const Tableau t = ext_tableau_.load();
      const auto list = enumerate_single_row_extensions(t, cap_or(kDefaultEnumerationCap));
      return json(Json{{"mode", "all_witnesses"},
                       {"base", to_json(t)},
                       {"count", list.size()},
                       {"formula", to_string(extension_count_formula(t))},
                       {"extensions", tableau_list(list)}});
    });
    ext_tableau_.add(sub);
    ext_witness_.add(sub);
  }

  void add_bounds() {
    auto* sub = leaf(&app_, "bounds", "Upper and lower bounds on the number of realizable m x n tableaux", [this] {
      return json(to_json(bounds(dims_.first, dims_.second, no_cache_ ? CountTable{} : enumerated_counts())));
    });
    add_dims(sub);
    sub->add_flag("--no-cache", no_cache_, "Ignore cached exact counts when seeding the lower bound");
  }

  void add_regions() {
    auto* sub = leaf(&app_, "regions", "Regions of the outer-sum arrangement by sign-vector enumeration", [this] {
      const int m = dims_.first, n = dims_.second;
      const BigInt regions = region_count_crosscheck(m, n, cap_or(6));
      return json(Json{{"m", m}, {"n", n}, {"regions", to_string(regions)},
                       {"per_cone", to_string(regions / (factorial(m) * factorial(n)))}});
    });
    add_dims(sub);
  }

  void add_staircase() {
    CLI::App* group = app_.add_subcommand("staircase", "Sorting networks and staircase tableaux");
    group->require_subcommand(1);
    group->fallthrough();

    auto* nets = leaf(group, "networks", "Enumerate sorting networks on k wires", [this] {
      const int cap = cap_or(kDefaultNetworkCap);
      Json j{{"k", k_}};
      if (list_) {
        const auto all = enumerate_networks(k_, cap);
        j["count"] = std::to_string(all.size());
        j["networks"] = network_list(all);
      } else {
        j["count"] = to_string(count_networks(k_, cap));
      }
      return json(std::move(j));
    });
    nets->add_option("--k", k_, "Wires")->required();
    nets->add_flag("--list", list_, "List every network");

    auto* check = leaf(group, "check", "Network of a point configuration, or a witness search for a network", [this] {
      if (!points_path_.empty()) {
        const PointConfiguration c = configuration_from_json(read_json_file(points_path_));
        const SortingNetwork net = network_of_points(c);
        Json pairs = Json::array();
        for (auto [a, b] : swap_pairs(net)) pairs.push_back(Json::array({a, b}));
        return json(Json{{"configuration", to_json(c)},
                         {"network", to_json(net)},
                         {"pairs", pairs},
                         {"rank_sequences", rank_sequences(net)}});
      }
      const SortingNetwork net = network_in_.load();
      const RealizabilityVerdict v = witness_search(net, search_options());
      Json j{{"network", to_json(net)}, {"verdict", to_json(v)}};
      return json(std::move(j));
    });
    network_in_.add(check);
    check->add_option("--points", points_path_, "Point configuration JSON file");

    auto* sat = leaf(group, "saturate", "Networks swept out by random point configurations", [this] {
      const int cap = cap_or(kDefaultNetworkCap);
      const auto found = saturation_enumerate(k_, search_options(), cap);
      Json j{{"k", k_}, {"budget", search_options().budget}, {"seed", seed_},
             {"reached", found.size()}, {"total_networks", to_string(count_networks(k_, cap))}};
      if (list_) j["networks"] = network_list(found);
      return json(std::move(j));
    });
    sat->add_option("--k", k_, "Points")->required();
    sat->add_flag("--list", list_, "List the networks reached");

    auto* bnd = leaf(group, "bounds", "Bound formulas for realizable staircase tableaux", [this] {
      Rational base;
      std::string base_source;
      if (base_value_.empty()) {
        base = Rational(static_cast<long>(saturation_enumerate(base_n_ + 1, search_options(), cap_or(kDefaultNetworkCap)).size()));
        base_source = "saturation";
      } else {
        base = parse_rational(base_value_);
        base_source = "given";
      }
      return json(Json{{"n", staircase_n_},
                       {"upper", to_string(staircase_upper_bound(staircase_n_))},
                       {"lower_factor", to_string(staircase_lower_factor(staircase_n_))},
                       {"base_n", base_n_},
                       {"base", to_string(base)},
                       {"base_source", base_source},
                       {"lower", to_string(staircase_lower_recurrence(staircase_n_, base_n_, base))}});
    });
    bnd->add_option("--n", staircase_n_, "Staircase size (networks on n+1 wires)")->required();
    bnd->add_option("--base-n", base_n_, "Size of the seed value");
    bnd->add_option("--base", base_value_, "Seed value; default: saturation count on base-n + 1 wires");
  }

  void add_slice() {
    CLI::App* group = app_.add_subcommand("slice", "The slice of the permutahedron by x_1 + ... + x_m = k");
    group->require_subcommand(1);
    group->fallthrough();

    auto* verts = leaf(group, "vertices", "Vertices of the slice", [this] {
      const auto vs = slice_vertices(dims_.first, dims_.second, k_, cap_or(kDefaultSliceCap));
      Json perms = Json::array();
      for (const auto& v : vs) perms.push_back(v.perm);
      return json(Json{{"m", dims_.first}, {"n", dims_.second}, {"k", k_}, {"count", vs.size()},
                       {"formula", to_string(slice_vertex_count(dims_.first, dims_.second, k_))}, {"vertices", perms}});
    });
    add_dims(verts);
    verts->add_option("--k", k_, "Prefix sum")->required();

    auto* edges = leaf(group, "edges", "Edges of the slice", [this] {
      const SliceGraph g = slice_edges(dims_.first, dims_.second, k_, cap_or(kDefaultSliceCap));
      Json list = Json::array();
      for (auto [a, b] : g.edges) list.push_back(Json::array({g.vertices[a].perm, g.vertices[b].perm}));
      Json j{{"m", dims_.first}, {"n", dims_.second}, {"k", k_}, {"vertex_count", g.vertices.size()},
             {"edge_count", g.edges.size()}, {"edges", list}};
      if (oracle_) {
        std::size_t accepted = 0;
        bool agree = true;
        for (std::size_t a = 0; a < g.vertices.size(); ++a)
          for (std::size_t b = a + 1; b < g.vertices.size(); ++b) {
            const bool o = edge_oracle(g.vertices[a], g.vertices[b], g.vertices);
            accepted += o;
            agree = agree && o == std::binary_search(g.edges.begin(), g.edges.end(), std::make_pair(a, b));
          }
        j["oracle"] = Json{{"accepted", accepted}, {"agrees", agree}};
      }
      return json(std::move(j));
    });
    add_dims(edges);
    edges->add_option("--k", k_, "Prefix sum")->required();
    edges->add_flag("--oracle", oracle_, "Cross-check every pair with the LP edge oracle");

    auto* cone = leaf(group, "cone", "Lattice path and normal cone of a vertex", [this] {
      const SliceVertex v = vertex_in_.load();
      const NormalConeDescription c = normal_cone(v);
      Json j{{"vertex", to_json(v)}, {"path", to_json(lattice_path_of_vertex(v))}, {"cone", to_json(c)}};
      Json nb = Json::array();
      for (const auto& w : slice_neighbors(v)) nb.push_back(w.perm);
      j["neighbors"] = nb;
      if (!functional_.empty()) j["contains"] = cone_contains(c, parse_rational_list(functional_));
      return json(std::move(j));
    });
    vertex_in_.add(cone, true);
    cone->add_option("--u", functional_, "Functional to test, comma separated rationals");

    auto* dim = leaf(group, "dim", "Dimension of a permutahedron face cut by the slice hyperplane", [this] {
      Flag f;
      if (!flag_path_.empty()) {
        f = flag_from_json(read_json_file(flag_path_));
      } else if (!flag_sets_.empty()) {
        for (const auto& s : split(flag_sets_, '|')) f.subsets.push_back(s.empty() ? std::vector<int>{} : parse_int_list(s, "--sets"));
        if (!f.subsets.empty() && f.subsets.front().empty()) f.subsets.erase(f.subsets.begin());
        validate_flag(f);
      } else {
        throw Error(ErrorKind::BadInput, "a flag is required (--flag or --sets)");
      }
      const auto [lo, hi] = min_max_prefix(f, dims_.first);
      return json(Json{{"flag", to_json(f)}, {"m", dims_.first}, {"k", k_}, {"min", lo}, {"max", hi},
                       {"dimension", face_dimension(f, dims_.first, k_)}});
    });
    dim->add_option("--flag", flag_path_, "Flag JSON file (list of subsets)");
    dim->add_option("--sets", flag_sets_, "Inline flag, e.g. 1,2|1,2,3,4");
    dim->add_option("--m", dims_.first, "Size of the first block")->required();
    dim->add_option("--k", k_, "Prefix sum")->required();
  }

  void add_viz() {
    CLI::App* group = app_.add_subcommand("viz", "SVG renderings");
    group->require_subcommand(1);
    group->fallthrough();
    auto svg = [](std::string s) { return Document{std::nullopt, std::move(s)}; };

    witness_in_.add(leaf(group, "projection", "Grid points projected onto y = x",
                         [this, svg] { return svg(render_projection_diagram(witness_in_.load())); }));
    witness_in_.add(leaf(group, "line", "Points x_i + y_j on a line",
                         [this, svg] { return svg(render_line_diagram(witness_in_.load())); }));
    network_in_.add(leaf(group, "wiring", "Wiring diagram of a sorting network",
                         [this, svg] { return svg(render_wiring_diagram(network_in_.load())); }));
    vertex_in_.add(leaf(group, "path", "Labeled lattice path of a slice vertex",
                        [this, svg] { return svg(render_lattice_path(vertex_in_.load())); }),
                   true);
  }

  void add_dims(CLI::App* sub) {
    sub->add_option("--m", dims_.first, "Rows")->required();
    sub->add_option("--n", dims_.second, "Columns")->required();
  }

  SearchOptions search_options() const {
    SearchOptions o;
    o.budget = budget_.value_or(10000);
    o.seed = seed_;
    o.grid = grid_;
    return o;
  }

  CLI::App app_;
  std::function<Document()> action_;

  std::string format_ = "json";
  std::string out_path_;
  std::uint64_t seed_ = 1;
  std::optional<long long> budget_;
  int grid_ = 4;
  int jobs_ = 1;
  std::optional<int> max_size_;
  bool prune_ = true;

  std::pair<int, int> dims_{0, 0};
  int k_ = 0;
  bool list_ = false;
  bool timing_ = false;
  bool no_cache_ = false;
  bool oracle_ = false;
  bool check_all_pairs_ = false;
  bool taboo_harness_ = false;
  std::size_t examples_ = 0;
  int staircase_n_ = 0;
  int base_n_ = 2;
  std::string base_value_;
  std::string points_path_;
  std::string functional_;
  std::string flag_path_;
  std::string flag_sets_;

  TableauInput check_tableau_, witness_tableau_, taboo_tableau_, ext_tableau_;
  WitnessInput witness_in_, ext_witness_;
  NetworkInput network_in_;
  VertexInput vertex_in_;
};

Json error_json(ErrorKind kind, const std::string& detail) {
  return Json{{"error", Json{{"kind", error_kind_name(kind)}, {"detail", detail}}}};
}

std::vector<CLI::App*> children(CLI::App* app) {
  return app->get_subcommands([](const CLI::App*) { return true; });
}

// Classifies a parse failure: walks the subcommand names present in `args`;
// if the walk stops at a command that still needs a subcommand, the failure
// is an unknown (or missing) subcommand.
Error classify_parse_error(CLI::App& app, const std::vector<std::string>& args, const std::string& detail) {
  static const std::vector<std::string> flags = {"--prune", "--no-prune", "--list", "--timing", "--no-cache",
                                                 "--oracle", "--all-pairs", "--harness"};
  CLI::App* node = &app;
  std::string stray;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok.rfind("-", 0) == 0) continue;
    const bool is_value = i > 0 && args[i - 1].rfind("--", 0) == 0 && args[i - 1].find('=') == std::string::npos &&
                          std::find(flags.begin(), flags.end(), args[i - 1]) == flags.end();
    if (is_value) continue;
    const auto subs = children(node);
    const auto it = std::find_if(subs.begin(), subs.end(), [&](CLI::App* s) { return s->get_name() == tok; });
    if (it != subs.end()) {
      node = *it;
    } else if (stray.empty()) {
      stray = tok;
    }
  }
  if (!children(node).empty())
    return Error(ErrorKind::UnknownSubcommand,
                 stray.empty() ? "no subcommand given" : "unknown subcommand \"" + stray + "\"");
  return Error(ErrorKind::BadInput, detail);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli;
  std::string format = "json";
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      cli.app().parse(reversed);
    } catch (const CLI::Success& e) {
      return cli.app().exit(e, out, err);
    } catch (const CLI::ParseError& e) {
      throw classify_parse_error(cli.app(), args, e.what());
    }
    format = cli.format();
    const Document doc = cli.execute();
    const std::string text = doc.json ? render(*doc.json, format) : doc.svg;
    if (cli.out_path().empty()) {
      out << text;
    } else {
      std::ofstream file(cli.out_path(), std::ios::binary);
      if (!file) throw Error(ErrorKind::BadInput, cli.out_path() + ": cannot open for writing");
      file << text;
      if (!file) throw Error(ErrorKind::BadInput, cli.out_path() + ": write failed");
      out << render(Json{{"written", cli.out_path()}, {"bytes", text.size()}}, format);
    }
    return 0;
  } catch (const Error& e) {
    out << render(error_json(e.kind(), e.what()), format);
    err << "rsyt: " << error_kind_name(e.kind()) << ": " << e.what() << '\n';
    return 2;
  }
}

}  // namespace rsyt
