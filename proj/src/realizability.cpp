#include "rsyt/realizability.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>

#include "rsyt/error.hpp"

namespace rsyt {

namespace {

std::string cell_name(Cell c) { return "(" + std::to_string(c.row + 1) + "," + std::to_string(c.col + 1) + ")"; }

void require_increasing(const std::vector<Rational>& v, const char* name) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i - 1] < v[i])) throw Error(ErrorKind::BadInput, std::string(name) + " must be strictly increasing");
}

void require_rectangular(const Tableau& t) {
  if (!t.shape().is_rectangular()) throw Error(ErrorKind::InvalidTableau, "expected a rectangular tableau");
}

// Drops the x_1 and y_1 columns.
lp::Row reduce(const lp::Row& row, int m) {
  lp::Row out;
  out.reserve(row.size() - 2);
  for (std::size_t j = 0; j < row.size(); ++j)
    if (j != 0 && j != static_cast<std::size_t>(m)) out.push_back(row[j]);
  return out;
}

std::vector<Rational> expand(const std::vector<Rational>& reduced, int m, int n) {
  std::vector<Rational> full(m + n, Rational(0));
  std::size_t k = 0;
  for (int j = 0; j < m + n; ++j)
    if (j != 0 && j != m) full[j] = reduced[k++];
  return full;
}

// Smallest positive integer multiple of z (z is a ray, so scaling is free).
std::vector<Rational> primitive_integer_vector(const std::vector<Rational>& z) {
  const BigInt l = common_denominator(z);
  std::vector<BigInt> ints;
  ints.reserve(z.size());
  BigInt g = 0;
  for (const auto& q : z) {
    BigInt v = BigInt(boost::multiprecision::numerator(q)) * (l / BigInt(boost::multiprecision::denominator(q)));
    g = boost::multiprecision::gcd(g, abs(v));
    ints.push_back(std::move(v));
  }
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(g == 0 ? v : BigInt(v / g));
  return out;
}

}  // namespace

std::optional<std::pair<Cell, Cell>> find_collision(const OuterSumWitness& w) {
  std::map<Rational, Cell> seen;
  for (int i = 0; i < static_cast<int>(w.x.size()); ++i)
    for (int j = 0; j < static_cast<int>(w.y.size()); ++j) {
      auto [it, inserted] = seen.emplace(w.x[i] + w.y[j], Cell{i, j});
      if (!inserted) return std::make_pair(it->second, Cell{i, j});
    }
  return std::nullopt;
}

Tableau tableau_of_outer_sum(const OuterSumWitness& w) {
  if (w.x.empty() || w.y.empty()) throw Error(ErrorKind::BadInput, "witness halves must be non-empty");
  require_increasing(w.x, "x");
  require_increasing(w.y, "y");
  if (auto c = find_collision(w))
    throw Error(ErrorKind::NotGeneric, "cells " + cell_name(c->first) + " and " + cell_name(c->second) +
                                           " have equal sums");
  const int m = static_cast<int>(w.x.size()), n = static_cast<int>(w.y.size());
  std::vector<std::pair<Rational, Cell>> sums;
  sums.reserve(m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) sums.emplace_back(w.x[i] + w.y[j], Cell{i, j});
  std::sort(sums.begin(), sums.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<int>> rows(m, std::vector<int>(n));
  for (std::size_t r = 0; r < sums.size(); ++r) rows[sums[r].second.row][sums[r].second.col] = static_cast<int>(r) + 1;
  return Tableau(Shape::rectangular(m, n), std::move(rows));
}

lp::Row comparison_row(int m, int n, Cell lower, Cell upper) {
  lp::Row row(m + n, 0);
  row[upper.row] += 1;
  row[m + upper.col] += 1;
  row[lower.row] -= 1;
  row[m + lower.col] -= 1;
  return row;
}

RectSystem strict_system_of(const Tableau& t, bool all_pairs) {
  require_rectangular(t);
  RectSystem sys;
  sys.m = t.shape().m();
  sys.n = t.shape().n();
  const std::vector<Cell> order = t.cells_by_value();
  auto add = [&](Cell lo, Cell hi) {
    sys.rows.push_back(comparison_row(sys.m, sys.n, lo, hi));
    sys.comparisons.emplace_back(lo, hi);
  };
  if (all_pairs) {
    for (std::size_t a = 0; a < order.size(); ++a)
      for (std::size_t b = a + 1; b < order.size(); ++b) add(order[a], order[b]);
  } else {
    for (std::size_t v = 0; v + 1 < order.size(); ++v) add(order[v], order[v + 1]);
  }
  return sys;
}

bool verify_farkas(const RectSystem& system, const FarkasCertificate& cert) {
  lp::StrictSystem s{static_cast<std::size_t>(system.m + system.n), system.rows, {}};
  return lp::is_infeasibility_certificate(s, cert.multipliers, {});
}

std::optional<std::vector<Rational>> strictly_feasible_point(int m, int n, const std::vector<lp::Row>& rows) {
  lp::StrictSystem reduced;
  reduced.num_vars = static_cast<std::size_t>(m + n - 2);
  reduced.strict.reserve(rows.size());
  for (const auto& r : rows) reduced.strict.push_back(reduce(r, m));
  lp::StrictResult res = lp::solve_strict(reduced);
  if (!res.feasible) return std::nullopt;
  return expand(res.point, m, n);
}

FeasibilityResult decide_realizable(const Tableau& t, bool all_pairs) {
  require_rectangular(t);
  const int m = t.shape().m(), n = t.shape().n();
  RectSystem sys = strict_system_of(t, all_pairs);

  lp::StrictSystem reduced;
  reduced.num_vars = static_cast<std::size_t>(m + n - 2);
  for (const auto& r : sys.rows) reduced.strict.push_back(reduce(r, m));
  lp::StrictResult res = lp::solve_strict(reduced);

  if (res.feasible) {
    const std::vector<Rational> z = primitive_integer_vector(expand(res.point, m, n));
    OuterSumWitness w{{z.begin(), z.begin() + m}, {z.begin() + m, z.end()}};
    if (tableau_of_outer_sum(w) != t) throw std::logic_error("realizability witness does not round-trip");
    Rational margin = 0;
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
      Rational v = lp::dot(sys.rows[r], z);
      if (r == 0 || v < margin) margin = v;
    }
    if (sys.rows.empty()) margin = 1;
    return FeasibilityResult{Realizable{std::move(w), std::move(margin)}, std::move(sys)};
  }

  FarkasCertificate cert{std::move(res.strict_multipliers)};
  if (!verify_farkas(sys, cert)) throw std::logic_error("Farkas certificate fails on the full system");
  return FeasibilityResult{NotRealizable{std::move(cert)}, std::move(sys)};
}

bool verify_witness(const Tableau& t, const OuterSumWitness& w) {
  require_rectangular(t);
  if (static_cast<int>(w.x.size()) != t.shape().m() || static_cast<int>(w.y.size()) != t.shape().n())
    throw Error(ErrorKind::DimensionMismatch, "witness is " + std::to_string(w.x.size()) + "x" +
                                                  std::to_string(w.y.size()) + ", tableau is " + describe(t.shape()));
  for (std::size_t i = 1; i < w.x.size(); ++i)
    if (!(w.x[i - 1] < w.x[i])) return false;
  for (std::size_t j = 1; j < w.y.size(); ++j)
    if (!(w.y[j - 1] < w.y[j])) return false;
  if (find_collision(w)) return false;
  return tableau_of_outer_sum(w) == t;
}

// ---------------------------------------------------------------------------
// Taboo configurations

namespace {

// Kuhn's augmenting paths on {a -> b : T(a) < T(b)}.  Returns match_of_a.
std::optional<std::vector<int>> perfect_matching(const std::vector<int>& a_vals, const std::vector<int>& b_vals) {
  const int k = static_cast<int>(a_vals.size());
  std::vector<int> match_b(k, -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int a) {
    for (int b = 0; b < k; ++b) {
      if (a_vals[a] >= b_vals[b] || visited[b]) continue;
      visited[b] = 1;
      if (match_b[b] < 0 || augment(match_b[b])) {
        match_b[b] = a;
        return true;
      }
    }
    return false;
  };
  for (int a = 0; a < k; ++a) {
    visited.assign(k, 0);
    if (!augment(a)) return std::nullopt;
  }
  std::vector<int> match_a(k, -1);
  for (int b = 0; b < k; ++b) match_a[match_b[b]] = b;
  return match_a;
}

class TabooSearch {
 public:
  TabooSearch(const Tableau& t, int size)
      : t_(t), m_(t.shape().m()), n_(t.shape().n()), size_(size), label_(m_ * n_, 0),
        row_diff_(m_, 0), col_diff_(n_, 0), col_left_(n_, m_) {}

  std::optional<TabooCertificate> run() {
    if (dfs(0, 0, 0)) return found_;
    return std::nullopt;
  }

 private:
  // label_: 0 none, 1 in A, 2 in B.
  bool dfs(int idx, int count_a, int count_b) {
    const int total = m_ * n_;
    if (idx > 0 && idx % n_ == 0 && row_diff_[idx / n_ - 1] != 0) return false;
    for (int c = 0; c < n_; ++c)
      if (std::abs(col_diff_[c]) > col_left_[c]) return false;
    const int need = (size_ - count_a) + (size_ - count_b);
    if (need > total - idx) return false;

    if (count_a == size_ && count_b == size_) {
      for (int r = idx / n_; r < m_; ++r)
        if (row_diff_[r] != 0) return false;
      for (int c = 0; c < n_; ++c)
        if (col_diff_[c] != 0) return false;
      return try_pairing();
    }
    if (idx == total) return false;

    const int r = idx / n_, c = idx % n_;
    --col_left_[c];
    // none, then A, then B: certificates with the earliest support come first.
    for (int choice = 0; choice < 3; ++choice) {
      if (choice == 1 && count_a == size_) continue;
      if (choice == 2 && count_b == size_) continue;
      const int delta = choice == 1 ? 1 : (choice == 2 ? -1 : 0);
      label_[idx] = choice;
      row_diff_[r] += delta;
      col_diff_[c] += delta;
      const bool ok = dfs(idx + 1, count_a + (choice == 1), count_b + (choice == 2));
      row_diff_[r] -= delta;
      col_diff_[c] -= delta;
      label_[idx] = 0;
      if (ok) {
        ++col_left_[c];
        return true;
      }
    }
    ++col_left_[c];
    return false;
  }

  bool try_pairing() {
    std::vector<Cell> a, b;
    std::vector<int> a_vals, b_vals;
    for (int idx = 0; idx < m_ * n_; ++idx) {
      const Cell cell{idx / n_, idx % n_};
      if (label_[idx] == 1) {
        a.push_back(cell);
        a_vals.push_back(t_.at(cell));
      } else if (label_[idx] == 2) {
        b.push_back(cell);
        b_vals.push_back(t_.at(cell));
      }
    }
    auto match = perfect_matching(a_vals, b_vals);
    if (!match) return false;
    TabooCertificate cert;
    cert.a = a;
    for (int k = 0; k < static_cast<int>(a.size()); ++k) cert.b.push_back(b[(*match)[k]]);
    found_ = std::move(cert);
    return true;
  }

  const Tableau& t_;
  int m_, n_, size_;
  std::vector<int> label_;
  std::vector<int> row_diff_;
  std::vector<int> col_diff_;
  std::vector<int> col_left_;
  TabooCertificate found_;
};

}  // namespace

bool verify_taboo(const Tableau& t, const TabooCertificate& cert) {
  require_rectangular(t);
  const int m = t.shape().m(), n = t.shape().n();
  if (cert.a.empty() || cert.a.size() != cert.b.size()) return false;
  std::vector<int> row_diff(m, 0), col_diff(n, 0);
  std::vector<char> used(m * n, 0);
  for (std::size_t k = 0; k < cert.a.size(); ++k) {
    const Cell a = cert.a[k], b = cert.b[k];
    if (!t.shape().contains(a) || !t.shape().contains(b)) return false;
    if (used[a.row * n + a.col] || used[b.row * n + b.col] || a == b) return false;
    used[a.row * n + a.col] = used[b.row * n + b.col] = 1;
    if (!(t.at(a) < t.at(b))) return false;
    ++row_diff[a.row];
    --row_diff[b.row];
    ++col_diff[a.col];
    --col_diff[b.col];
  }
  return std::all_of(row_diff.begin(), row_diff.end(), [](int d) { return d == 0; }) &&
         std::all_of(col_diff.begin(), col_diff.end(), [](int d) { return d == 0; });
}

std::optional<TabooCertificate> find_taboo_certificate(const Tableau& t, int max_size) {
  require_rectangular(t);
  const int limit = std::min(max_size, t.shape().cell_count() / 2);
  for (int size = 1; size <= limit; ++size) {
    if (auto cert = TabooSearch(t, size).run()) {
      if (!verify_taboo(t, *cert)) throw std::logic_error("taboo search returned an invalid certificate");
      return cert;
    }
  }
  return std::nullopt;
}

TabooScanReport taboo_conjecture_scan(int m, int n, int cap) {
  TabooScanReport report;
  report.m = m;
  report.n = n;
  SytStream stream(Shape::rectangular(m, n), cap);
  while (auto t = stream.next()) {
    ++report.total;
    if (decide_realizable(*t).realizable()) continue;
    ++report.not_realizable;
    if (find_taboo_certificate(*t, m * n / 2))
      ++report.with_certificate;
    else
      report.lacking_certificate.push_back(*t);
  }
  return report;
}

}  // namespace rsyt
