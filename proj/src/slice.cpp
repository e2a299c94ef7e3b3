#include "rsyt/slice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rsyt/error.hpp"

namespace rsyt {

namespace {

std::vector<int> positions(const SliceVertex& v) {
  std::vector<int> pos(v.perm.size() + 1);
  for (std::size_t i = 0; i < v.perm.size(); ++i) pos[v.perm[i]] = static_cast<int>(i) + 1;
  return pos;
}

void swap_values(SliceVertex& v, const std::vector<int>& pos, int a, int b) {
  std::swap(v.perm[pos[a] - 1], v.perm[pos[b] - 1]);
}

BigInt box_partitions(int area, int parts, int max_part, std::map<std::tuple<int, int, int>, BigInt>& memo) {
  if (area == 0) return 1;
  if (parts == 0 || max_part == 0) return 0;
  const auto key = std::make_tuple(area, parts, max_part);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt total = 0;
  for (int p = std::min(area, max_part); p >= 1; --p) total += box_partitions(area - p, parts - 1, p, memo);
  memo.emplace(key, total);
  return total;
}

void check_range(int m, int n, int k) {
  if (m < 1 || n < 1) throw Error(ErrorKind::BadInput, "slice needs m, n >= 1");
  const auto [lo, hi] = slice_k_range(m, n);
  if (k < lo || k > hi)
    throw Error(ErrorKind::EmptySlice,
                "k = " + std::to_string(k) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace

void validate_vertex(const SliceVertex& v) {
  const int big_n = v.m + v.n;
  if (v.m < 1 || v.n < 1) throw Error(ErrorKind::BadInput, "vertex needs m, n >= 1");
  if (static_cast<int>(v.perm.size()) != big_n)
    throw Error(ErrorKind::DimensionMismatch, "perm has length " + std::to_string(v.perm.size()) + ", expected " +
                                                  std::to_string(big_n));
  std::vector<bool> seen(big_n + 1, false);
  for (int x : v.perm) {
    if (x < 1 || x > big_n || seen[x]) throw Error(ErrorKind::BadInput, "perm is not a permutation of 1..m+n");
    seen[x] = true;
  }
  const int prefix = std::accumulate(v.perm.begin(), v.perm.begin() + v.m, 0);
  if (prefix != v.k)
    throw Error(ErrorKind::BadInput, "first m entries sum to " + std::to_string(prefix) + ", not k = " +
                                         std::to_string(v.k));
}

std::pair<int, int> slice_k_range(int m, int n) { return {m * (m + 1) / 2, m * n + m * (m + 1) / 2}; }

std::vector<SliceVertex> slice_vertices(int m, int n, int k, int cap) {
  check_range(m, n, k);
  if (m + n > cap)
    throw Error(ErrorKind::CapExceeded, "m + n = " + std::to_string(m + n) + " exceeds cap " + std::to_string(cap));
  const int big_n = m + n;
  std::vector<SliceVertex> out;
  std::vector<int> chosen;

  auto emit = [&]() {
    std::vector<int> first = chosen, second;
    for (int t = 1; t <= big_n; ++t)
      if (!std::binary_search(first.begin(), first.end(), t)) second.push_back(t);
    do {
      std::vector<int> rest = second;
      do {
        SliceVertex v{first, m, n, k};
        v.perm.insert(v.perm.end(), rest.begin(), rest.end());
        out.push_back(std::move(v));
      } while (std::next_permutation(rest.begin(), rest.end()));
    } while (std::next_permutation(first.begin(), first.end()));
  };
  // m-subsets of [N] with sum k, in increasing order.
  auto rec = [&](auto&& self, int next, int sum) -> void {
    if (static_cast<int>(chosen.size()) == m) {
      if (sum == k) emit();
      return;
    }
    for (int t = next; t <= big_n; ++t) {
      if (sum + t > k) break;
      chosen.push_back(t);
      self(self, t + 1, sum + t);
      chosen.pop_back();
    }
  };
  rec(rec, 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt slice_vertex_count(int m, int n, int k) {
  check_range(m, n, k);
  std::map<std::tuple<int, int, int>, BigInt> memo;
  return box_partitions(k - m * (m + 1) / 2, m, n, memo) * factorial(m) * factorial(n);
}

int LabeledLatticePath::area() const {
  int rights = 0, total = 0;
  for (const auto& s : steps) {
    if (s.up)
      total += rights;
    else
      ++rights;
  }
  return total;
}

LabeledLatticePath lattice_path_of_vertex(const SliceVertex& v) {
  validate_vertex(v);
  const std::vector<int> pos = positions(v);
  LabeledLatticePath path{v.m, v.n, {}};
  for (int t = 1; t <= v.m + v.n; ++t) path.steps.push_back(PathStep{pos[t] <= v.m, pos[t]});
  return path;
}

std::vector<SliceVertex> slice_neighbors(const SliceVertex& v) {
  validate_vertex(v);
  const int big_n = v.m + v.n;
  const std::vector<int> pos = positions(v);
  auto up = [&](int t) { return pos[t] <= v.m; };
  std::set<SliceVertex> out;

  for (int t = 1; t < big_n; ++t)
    if (up(t) == up(t + 1)) {
      SliceVertex w = v;
      swap_values(w, pos, t, t + 1);
      out.insert(std::move(w));
    }

  // Outer corner: right then up at (a, a+1).  Inner corner: up then right.
  std::vector<int> outer, inner;
  for (int t = 1; t < big_n; ++t) {
    if (!up(t) && up(t + 1)) outer.push_back(t);
    if (up(t) && !up(t + 1)) inner.push_back(t);
  }
  for (int a : outer)
    for (int b : inner)
      if (std::abs(a - b) >= 2) {
        SliceVertex w = v;
        swap_values(w, pos, a, a + 1);
        swap_values(w, pos, b, b + 1);
        out.insert(std::move(w));
      }

  for (int t = 1; t + 2 <= big_n; ++t)
    if (up(t) == up(t + 2) && up(t) != up(t + 1)) {
      SliceVertex w = v;
      swap_values(w, pos, t, t + 2);
      out.insert(std::move(w));
    }

  return {out.begin(), out.end()};
}

SliceGraph slice_edges(int m, int n, int k, int cap) {
  SliceGraph g;
  g.vertices = slice_vertices(m, n, k, cap);
  for (std::size_t a = 0; a < g.vertices.size(); ++a)
    for (const auto& w : slice_neighbors(g.vertices[a])) {
      const auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), w);
      if (it == g.vertices.end() || *it != w) throw std::logic_error("neighbor left the slice");
      const auto b = static_cast<std::size_t>(it - g.vertices.begin());
      if (a < b) g.edges.emplace_back(a, b);
    }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

bool edge_oracle(const SliceVertex& u, const SliceVertex& v, const std::vector<SliceVertex>& vertices) {
  validate_vertex(u);
  validate_vertex(v);
  if (u.m != v.m || u.n != v.n || u.k != v.k) throw Error(ErrorKind::DimensionMismatch, "vertices from different slices");
  if (u == v) return false;
  const std::size_t big_n = u.perm.size();
  auto diff = [&](const SliceVertex& a, const SliceVertex& b) {
    lp::Row r(big_n);
    for (std::size_t i = 0; i < big_n; ++i) r[i] = a.perm[i] - b.perm[i];
    return r;
  };
  std::vector<lp::Row> rows;
  for (const auto& w : vertices)
    if (w != u && w != v) rows.push_back(diff(u, w));
  if (rows.empty()) return true;

  // Cutting planes: solve on a working set, add the rows the candidate
  // violates, repeat.  Infeasibility of a subset is already conclusive.
  lp::StrictSystem sys;
  sys.num_vars = big_n;
  sys.equalities.push_back(diff(u, v));
  std::vector<bool> used(rows.size(), false);
  std::vector<Rational> z(big_n, Rational(0));
  constexpr std::size_t kBatch = 16;
  while (true) {
    std::vector<std::pair<Rational, std::size_t>> violated;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!used[r]) {
        Rational val = lp::dot(rows[r], z);
        if (val <= 0) violated.emplace_back(std::move(val), r);
      }
    if (violated.empty()) return true;
    const std::size_t take = std::min(kBatch, violated.size());
    std::partial_sort(violated.begin(), violated.begin() + static_cast<std::ptrdiff_t>(take), violated.end());
    for (std::size_t i = 0; i < take; ++i) {
      used[violated[i].second] = true;
      sys.strict.push_back(rows[violated[i].second]);
    }
    const lp::StrictResult res = lp::solve_strict(sys);
    if (!res.feasible) return false;
    z = res.point;
  }
}

bool edge_oracle(const SliceVertex& u, const SliceVertex& v) {
  validate_vertex(u);
  return edge_oracle(u, v, slice_vertices(u.m, u.n, u.k));
}

NormalConeDescription normal_cone(const SliceVertex& v) {
  validate_vertex(v);
  const std::vector<int> pos = positions(v);
  NormalConeDescription cone{v.m, v.n, {}, {}};
  for (int t = 1; t < v.m + v.n; ++t) {
    const Root r{pos[t + 1], pos[t]};
    if ((r.plus <= v.m) != (r.minus <= v.m))
      cone.delta_m.push_back(r);
    else
      cone.delta_plain.push_back(r);
  }
  return cone;
}

int omega_sign(const Root& r, int m) {
  if (r.plus <= m && r.minus > m) return 1;
  if (r.minus <= m && r.plus > m) return -1;
  return 0;
}

bool cone_contains(const NormalConeDescription& cone, const std::vector<Rational>& u) {
  if (static_cast<int>(u.size()) != cone.m + cone.n)
    throw Error(ErrorKind::DimensionMismatch, "functional has length " + std::to_string(u.size()) + ", expected " +
                                                  std::to_string(cone.m + cone.n));
  auto value = [&](const Root& r) { return u[r.plus - 1] - u[r.minus - 1]; };
  for (const auto& r : cone.delta_plain)
    if (value(r) <= 0) return false;
  for (const auto& r1 : cone.delta_m)
    for (const auto& r2 : cone.delta_m)
      if (omega_sign(r1, cone.m) > 0 && omega_sign(r2, cone.m) < 0 && value(r1) + value(r2) <= 0) return false;
  return true;
}

std::optional<std::size_t> unique_argmax(const std::vector<SliceVertex>& vertices, const std::vector<Rational>& u) {
  std::optional<std::size_t> best;
  Rational best_value;
  bool tied = false;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Rational val = 0;
    for (std::size_t j = 0; j < u.size(); ++j) val += u[j] * vertices[i].perm[j];
    if (!best || val > best_value) {
      best = i;
      best_value = std::move(val);
      tied = false;
    } else if (val == best_value) {
      tied = true;
    }
  }
  if (tied) return std::nullopt;
  return best;
}

int validate_flag(const Flag& f) {
  if (f.subsets.empty()) throw Error(ErrorKind::BadInput, "flag has no subsets");
  const int big_n = static_cast<int>(f.subsets.back().size());
  std::set<int> prev;
  for (std::size_t i = 0; i < f.subsets.size(); ++i) {
    const std::set<int> cur(f.subsets[i].begin(), f.subsets[i].end());
    if (cur.size() != f.subsets[i].size()) throw Error(ErrorKind::BadInput, "flag subset repeats an element");
    for (int x : cur)
      if (x < 1 || x > big_n) throw Error(ErrorKind::BadInput, "flag element out of range 1..N");
    if (cur.size() <= prev.size() || !std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()))
      throw Error(ErrorKind::BadInput, "flag subsets must form a strictly increasing chain");
    prev = cur;
  }
  return big_n;
}

std::vector<Flag> all_flags(int n) {
  if (n < 1 || n > 12) throw Error(ErrorKind::BadInput, "all_flags needs 1 <= N <= 12");
  std::vector<Flag> out;
  Flag cur;
  const unsigned full = (1u << n) - 1;
  auto rec = [&](auto&& self, unsigned used) -> void {
    if (used == full) {
      out.push_back(cur);
      return;
    }
    const unsigned rest = full & ~used;
    // Nonempty subsets of `rest`, in increasing mask order.
    for (unsigned s = 1; s <= rest; ++s) {
      if ((s & rest) != s) continue;
      std::vector<int> next = cur.subsets.empty() ? std::vector<int>{} : cur.subsets.back();
      for (int b = 0; b < n; ++b)
        if (s & (1u << b)) next.push_back(b + 1);
      std::sort(next.begin(), next.end());
      cur.subsets.push_back(std::move(next));
      self(self, used | s);
      cur.subsets.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

// Blocks F_i \ F_{i-1} with their value ranges [lo, hi].
struct Block {
  std::vector<int> members;
  int lo = 0;
  int hi = 0;
};

std::vector<Block> blocks_of(const Flag& f) {
  const int big_n = validate_flag(f);
  std::vector<Block> out;
  std::set<int> prev;
  int hi = big_n;
  for (const auto& s : f.subsets) {
    Block b;
    for (int x : s)
      if (!prev.count(x)) b.members.push_back(x);
    std::sort(b.members.begin(), b.members.end());
    b.hi = hi;
    b.lo = hi - static_cast<int>(b.members.size()) + 1;
    hi = b.lo - 1;
    prev.insert(s.begin(), s.end());
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::pair<int, int> min_max_prefix(const Flag& f, int m) {
  int lo_sum = 0, hi_sum = 0;
  for (const auto& b : blocks_of(f)) {
    const int a = static_cast<int>(std::count_if(b.members.begin(), b.members.end(), [&](int x) { return x <= m; }));
    for (int i = 0; i < a; ++i) {
      lo_sum += b.lo + i;
      hi_sum += b.hi - i;
    }
  }
  return {lo_sum, hi_sum};
}

int face_dimension(const Flag& f, int m, int k) {
  const std::vector<Block> blocks = blocks_of(f);
  const int big_n = static_cast<int>(f.subsets.back().size());
  if (m < 0 || m > big_n) throw Error(ErrorKind::BadInput, "m must lie in 0..N");
  const auto [lo, hi] = min_max_prefix(f, m);
  if (k < lo || k > hi)
    throw Error(ErrorKind::FaceMissesHyperplane,
                "k = " + std::to_string(k) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  const int d = static_cast<int>(blocks.size());
  if (lo < k && k < hi) return big_n - d - 1;
  int nonempty = 0;
  for (const auto& b : blocks) {
    const auto inside = std::count_if(b.members.begin(), b.members.end(), [&](int x) { return x <= m; });
    nonempty += (inside > 0) + (inside < static_cast<long>(b.members.size()));
  }
  return big_n - nonempty;
}

std::vector<std::vector<int>> face_vertices(const Flag& f) {
  const std::vector<Block> blocks = blocks_of(f);
  const int big_n = static_cast<int>(f.subsets.back().size());
  if (big_n > 8) throw Error(ErrorKind::CapExceeded, "face_vertices is limited to N <= 8");
  std::vector<std::vector<int>> out;
  std::vector<int> perm(big_n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (const auto& b : blocks)
      for (int i : b.members)
        if (perm[i - 1] < b.lo || perm[i - 1] > b.hi) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int affine_rank(const std::vector<std::vector<int>>& points) {
  if (points.empty()) return -1;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t p = 1; p < points.size(); ++p) {
    std::vector<Rational> r(points[0].size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = points[p][j] - points[0][j];
    rows.push_back(std::move(r));
  }
  int rank = 0;
  const std::size_t cols = points[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace rsyt
