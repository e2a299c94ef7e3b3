#include "rsyt/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <set>
#include <thread>

#include "rsyt/error.hpp"

namespace rsyt {

namespace {

bool strictly_satisfies(const std::vector<lp::Row>& rows, const std::vector<Rational>& z) {
  for (const auto& r : rows)
    if (lp::dot(r, z) <= 0) return false;
  return true;
}

struct TaskResult {
  BigInt realizable = 0;
  std::vector<Tableau> examples;
  long long lp_calls = 0;
};

class PrunedSearch {
 public:
  PrunedSearch(int m, int n, const std::vector<int>& prefix, const EnumerationOptions& options)
      : m_(m), n_(n), prefix_(prefix), options_(options), filled_(m, 0) {}

  TaskResult run() {
    visit(std::vector<Rational>(m_ + n_, Rational(0)));
    return std::move(result_);
  }

 private:
  bool can_place(int r) const { return filled_[r] < n_ && (r == 0 || filled_[r - 1] > filled_[r]); }

  void visit(const std::vector<Rational>& parent_point) {
    const std::vector<lp::Row> rows = prefix_system(m_, n_, placed_);
    std::vector<Rational> point;
    if (strictly_satisfies(rows, parent_point)) {
      point = parent_point;
    } else {
      ++result_.lp_calls;
      auto p = strictly_feasible_point(m_, n_, rows);
      if (!p) {
        collect_pruned();
        return;
      }
      point = std::move(*p);
    }

    const std::size_t depth = placed_.size();
    if (depth == static_cast<std::size_t>(m_ * n_)) {
      ++result_.realizable;
      return;
    }
    for (int r = 0; r < m_; ++r) {
      if (depth < prefix_.size() && r != prefix_[depth]) continue;
      if (!can_place(r)) continue;
      placed_.push_back(Cell{r, filled_[r]});
      seq_.push_back(r);
      ++filled_[r];
      visit(point);
      --filled_[r];
      seq_.pop_back();
      placed_.pop_back();
    }
  }

  // Every completion of an infeasible prefix is non-realizable, and they come
  // next in canonical order.
  void collect_pruned() {
    if (!options_.collect_nonrealizable) return;
    if (result_.examples.size() >= options_.max_examples) return;
    SytStream stream(Shape::rectangular(m_, n_), m_ * n_, seq_);
    while (result_.examples.size() < options_.max_examples) {
      auto t = stream.next();
      if (!t) break;
      result_.examples.push_back(std::move(*t));
    }
  }

  int m_, n_;
  const std::vector<int>& prefix_;
  const EnumerationOptions& options_;
  std::vector<int> filled_;
  std::vector<Cell> placed_;
  std::vector<int> seq_;
  TaskResult result_;
};

TaskResult run_unpruned(int m, int n, const std::vector<int>& prefix, const EnumerationOptions& options) {
  TaskResult result;
  SytStream stream(Shape::rectangular(m, n), m * n, prefix);
  while (auto t = stream.next()) {
    ++result.lp_calls;
    if (decide_realizable(*t).realizable()) {
      ++result.realizable;
    } else if (options.collect_nonrealizable && result.examples.size() < options.max_examples) {
      result.examples.push_back(std::move(*t));
    }
  }
  return result;
}

}  // namespace

std::vector<lp::Row> prefix_system(int m, int n, const std::vector<Cell>& placed) {
  std::vector<lp::Row> rows;
  if (placed.empty()) return rows;
  for (std::size_t v = 0; v + 1 < placed.size(); ++v) rows.push_back(comparison_row(m, n, placed[v], placed[v + 1]));
  std::vector<int> filled(m, 0);
  for (const Cell& c : placed) ++filled[c.row];
  for (int r = 0; r < m; ++r) {
    const int c = filled[r];
    if (c < n && (r == 0 || filled[r - 1] > c)) rows.push_back(comparison_row(m, n, placed.back(), Cell{r, c}));
  }
  return rows;
}

EnumerationReport enumerate_realizable(int m, int n, const EnumerationOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Shape shape = Shape::rectangular(m, n);
  if (shape.cell_count() > options.cap)
    throw Error(ErrorKind::CapExceeded, describe(shape) + " has " + std::to_string(shape.cell_count()) +
                                            " cells, cap is " + std::to_string(options.cap));

  const int jobs = std::max(1, options.jobs);
  std::vector<std::vector<int>> tasks =
      jobs == 1 ? std::vector<std::vector<int>>{{}} : syt_prefixes(shape, std::min(4, shape.cell_count()));

  std::vector<TaskResult> results(tasks.size());
  auto run_task = [&](std::size_t i) {
    results[i] = options.prune ? PrunedSearch(m, n, tasks[i], options).run() : run_unpruned(m, n, tasks[i], options);
  };
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) run_task(i);
      });
    for (auto& w : workers) w.join();
  }

  EnumerationReport report;
  report.m = m;
  report.n = n;
  report.total_count = hook_length_count(shape);
  report.realizable_count = 0;
  for (auto& r : results) {
    report.realizable_count += r.realizable;
    report.lp_calls += r.lp_calls;
    for (auto& t : r.examples)
      if (report.nonrealizable_examples.size() < options.max_examples)
        report.nonrealizable_examples.push_back(std::move(t));
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

// ---------------------------------------------------------------------------
// Single-row extensions

BigInt extension_count_formula(const Tableau& t) {
  if (!t.shape().is_rectangular()) throw Error(ErrorKind::InvalidTableau, "expected a rectangular tableau");
  const int rows = t.shape().m(), n = t.shape().n();
  BigInt bottom = 0;
  for (int v : t.rows().back()) bottom += v;
  return BigInt(n) * n * rows + 1 - bottom;
}

namespace {

std::vector<Rational> critical_values(const OuterSumWitness& w, bool& generic) {
  generic = true;
  const Rational& last = w.x.back();
  std::vector<Rational> crit;
  for (const auto& xk : w.x)
    for (std::size_t l = 0; l < w.y.size(); ++l)
      for (std::size_t j = 0; j < w.y.size(); ++j) {
        if (l == j) continue;
        Rational v = xk + w.y[l] - w.y[j];
        if (v == last) generic = false;
        if (v > last) crit.push_back(std::move(v));
      }
  std::sort(crit.begin(), crit.end());
  if (std::adjacent_find(crit.begin(), crit.end()) != crit.end()) generic = false;
  return crit;
}

}  // namespace

bool extension_generic(const OuterSumWitness& w) {
  if (w.x.empty() || w.y.empty() || find_collision(w)) return false;
  bool generic = true;
  critical_values(w, generic);
  return generic;
}

std::vector<Tableau> fixed_witness_extensions(const OuterSumWitness& w) {
  tableau_of_outer_sum(w);  // validates monotonicity and genericity of w itself
  bool generic = true;
  const std::vector<Rational> crit = critical_values(w, generic);
  if (!generic) throw Error(ErrorKind::NotGeneric, "critical values x_k + y_l - y_j are not distinct");

  std::vector<Rational> reps;
  Rational lo = w.x.back();
  for (const auto& c : crit) {
    reps.push_back((lo + c) / 2);
    lo = c;
  }
  reps.push_back(lo + 1);

  std::vector<Tableau> out;
  out.reserve(reps.size());
  for (const auto& r : reps) {
    OuterSumWitness ext = w;
    ext.x.push_back(r);
    out.push_back(tableau_of_outer_sum(ext));
  }
  return out;
}

std::vector<Tableau> enumerate_single_row_extensions(const Tableau& t, int cap) {
  if (!t.shape().is_rectangular()) throw Error(ErrorKind::InvalidTableau, "expected a rectangular tableau");
  const int old_rows = t.shape().m(), n = t.shape().n(), m = old_rows + 1;
  if (m * n > cap)
    throw Error(ErrorKind::CapExceeded, std::to_string(m) + "x" + std::to_string(n) + " exceeds cap " +
                                            std::to_string(cap));
  if (!decide_realizable(t).realizable()) throw Error(ErrorKind::NotRealizable, "base tableau is not realizable");

  const std::vector<Cell> old_order = t.cells_by_value();
  const std::vector<int>& bottom = t.rows().back();
  std::vector<Tableau> out;
  std::vector<Cell> placed;

  // Interleave the new bottom row into T's value order: old cells keep their
  // relative order, the new cell in column j must follow the old cell above.
  auto rec = [&](auto&& self, int old_done, int new_done) -> void {
    if (old_done == old_rows * n && new_done == n) {
      std::vector<std::vector<int>> rows(m, std::vector<int>(n));
      for (std::size_t v = 0; v < placed.size(); ++v) rows[placed[v].row][placed[v].col] = static_cast<int>(v) + 1;
      Tableau cand(Shape::rectangular(m, n), std::move(rows));
      if (decide_realizable(cand).realizable()) out.push_back(std::move(cand));
      return;
    }
    if (old_done < old_rows * n) {
      placed.push_back(old_order[old_done]);
      self(self, old_done + 1, new_done);
      placed.pop_back();
    }
    if (new_done < n && bottom[new_done] <= old_done) {
      placed.push_back(Cell{old_rows, new_done});
      self(self, old_done, new_done + 1);
      placed.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Bounds

const CountTable& enumerated_counts() {
  static const CountTable table = {
      {{3, 3}, BigInt(36)}, {{3, 4}, BigInt(295)}, {{3, 5}, BigInt(2583)}, {{4, 4}, BigInt(6660)}};
  return table;
}

BigInt outer_sum_hyperplane_count(int m, int n) {
  const BigInt cm = binomial(static_cast<unsigned long>(m), 2), cn = binomial(static_cast<unsigned long>(n), 2);
  return 2 * cm * cn + cm + cn;
}

Rational rect_upper_bound(int m, int n) {
  const BigInt h = outer_sum_hyperplane_count(m, n);
  BigInt sum = 0;
  for (int i = 0; i <= m + n; ++i) sum += binomial(h, static_cast<unsigned>(i));
  return Rational(sum, factorial(m) * factorial(n));
}

namespace {

BigInt lower_rec(int m, int n, const CountTable& known, std::map<std::pair<int, int>, BigInt>& memo) {
  if (m == 1 || n == 1) return 1;
  if (m == 2) return catalan(n);
  if (n == 2) return catalan(m);
  if (auto it = memo.find({m, n}); it != memo.end()) return it->second;

  auto seed = [&](int a, int b) -> BigInt {
    if (auto it = known.find({a, b}); it != known.end()) return it->second;
    if (auto it = known.find({b, a}); it != known.end()) return it->second;
    return lower_rec(a, b, known, memo);
  };
  const BigInt from_rows = seed(m - 1, n) * (binomial(static_cast<unsigned long>(n), 2) + 1);
  const BigInt from_cols = seed(m, n - 1) * (binomial(static_cast<unsigned long>(m), 2) + 1);
  BigInt best = from_rows > from_cols ? from_rows : from_cols;
  memo.emplace(std::make_pair(m, n), best);
  return best;
}

}  // namespace

BigInt rect_lower_bound(int m, int n, const CountTable& known) {
  if (m < 1 || n < 1) throw Error(ErrorKind::BadInput, "bounds need m, n >= 1");
  std::map<std::pair<int, int>, BigInt> memo;
  return lower_rec(m, n, known, memo);
}

BoundsReport bounds(int m, int n, const CountTable& known) {
  if (m < 1 || n < 1) throw Error(ErrorKind::BadInput, "bounds need m, n >= 1");
  BoundsReport r;
  r.m = m;
  r.n = n;
  r.hyperplanes = outer_sum_hyperplane_count(m, n);
  r.upper = rect_upper_bound(m, n);
  r.lower = rect_lower_bound(m, n, known);
  r.syt_total = hook_length_count(Shape::rectangular(m, n));
  r.ratio_upper = r.upper / Rational(r.syt_total);
  return r;
}

// ---------------------------------------------------------------------------
// Region count

BigInt region_count_crosscheck(int m, int n, int cap) {
  if (m < 1 || n < 1) throw Error(ErrorKind::BadInput, "regions need m, n >= 1");
  if (m + n > cap)
    throw Error(ErrorKind::CapExceeded, "m + n = " + std::to_string(m + n) + " exceeds cap " + std::to_string(cap));

  // Distinct hyperplanes x_i + y_j = x_k + y_l, normals up to sign.
  std::set<lp::Row> normals;
  for (int a = 0; a < m * n; ++a)
    for (int b = a + 1; b < m * n; ++b) {
      lp::Row row = comparison_row(m, n, Cell{b / n, b % n}, Cell{a / n, a % n});
      const auto first = std::find_if(row.begin(), row.end(), [](long long v) { return v != 0; });
      if (*first < 0)
        for (auto& v : row) v = -v;
      normals.insert(std::move(row));
    }

  struct Partial {
    std::vector<lp::Row> rows;
    std::vector<Rational> point;
  };
  std::vector<Partial> current{Partial{{}, std::vector<Rational>(m + n, Rational(0))}};
  for (const lp::Row& h : normals) {
    std::vector<Partial> next;
    lp::Row neg = h;
    for (auto& v : neg) v = -v;
    for (const Partial& p : current) {
      const Rational side = lp::dot(h, p.point);
      const std::array<const lp::Row*, 2> sides{&h, &neg};
      for (const lp::Row* oriented : sides) {
        Partial child{p.rows, {}};
        child.rows.push_back(*oriented);
        if ((oriented == &h && side > 0) || (oriented == &neg && side < 0)) {
          child.point = p.point;
        } else {
          auto pt = strictly_feasible_point(m, n, child.rows);
          if (!pt) continue;
          child.point = std::move(*pt);
        }
        next.push_back(std::move(child));
      }
    }
    current = std::move(next);
  }
  return BigInt(current.size());
}

}  // namespace rsyt
