#pragma once

// Outer-sum realizability of rectangular tableaux.
//
// A rectangular tableau T is realizable when T = T(x o y) for strictly
// increasing x in Q^m, y in Q^n with all sums x_i + y_j distinct.  Deciding
// this is a strict homogeneous feasibility problem in the m + n unknowns
// (x_1..x_m, y_1..y_n); the answer is either an integral witness or a
// verified Farkas certificate.  Taboo configurations give a second, purely
// combinatorial, kind of non-realizability certificate.

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "rsyt/lp.hpp"
#include "rsyt/numeric.hpp"
#include "rsyt/syt.hpp"

namespace rsyt {

struct OuterSumWitness {
  std::vector<Rational> x;
  std::vector<Rational> y;
  bool operator==(const OuterSumWitness&) const = default;
};

/// Two cells whose sums coincide, if any.
std::optional<std::pair<Cell, Cell>> find_collision(const OuterSumWitness& w);

/// Rank of x_i + y_j among all sums (1 = smallest).  Throws BadInput if x or
/// y is not strictly increasing and NotGeneric (naming one colliding pair)
/// if two sums coincide.
Tableau tableau_of_outer_sum(const OuterSumWitness& w);

/// Rows over the variables (x_1..x_m, y_1..y_n), each asserting row . z > 0.
struct RectSystem {
  int m = 0;
  int n = 0;
  std::vector<lp::Row> rows;
  /// comparisons[r] = (smaller cell, larger cell) that produced rows[r].
  std::vector<std::pair<Cell, Cell>> comparisons;
};

/// Row asserting sum(upper) - sum(lower) > 0.
lp::Row comparison_row(int m, int n, Cell lower, Cell upper);

/// One row per consecutive pair in T's value order (mn - 1 rows), or every
/// ordered pair of cells when `all_pairs` is set.
RectSystem strict_system_of(const Tableau& t, bool all_pairs = false);

struct FarkasCertificate {
  std::vector<Rational> multipliers;
};

/// Multipliers are >= 0, not all zero, and combine the rows to zero exactly.
bool verify_farkas(const RectSystem& system, const FarkasCertificate& cert);

struct Realizable {
  OuterSumWitness witness;
  Rational margin;
};

struct NotRealizable {
  FarkasCertificate farkas;
};

struct FeasibilityResult {
  std::variant<Realizable, NotRealizable> outcome;
  /// The system the certificate refers to.
  RectSystem system;

  bool realizable() const { return std::holds_alternative<Realizable>(outcome); }
  const Realizable& as_realizable() const { return std::get<Realizable>(outcome); }
  const NotRealizable& as_not_realizable() const { return std::get<NotRealizable>(outcome); }
};

/// Solves the margin LP with x_1 = y_1 = 0.  A Realizable result carries the
/// smallest integral witness on the optimal ray (its margin is the smallest
/// constraint value at that witness); NotRealizable carries multipliers for
/// the rows of `system`.  Throws InvalidTableau for non-rectangular input.
FeasibilityResult decide_realizable(const Tableau& t, bool all_pairs = false);

/// Strict feasibility of an arbitrary set of comparison rows over (x, y)
/// after fixing x_1 = y_1 = 0.  Returns the full-length point on success.
std::optional<std::vector<Rational>> strictly_feasible_point(int m, int n, const std::vector<lp::Row>& rows);

/// True iff w is generic, has the dimensions of T and T(w) == T.  Throws
/// DimensionMismatch when the sizes disagree.
bool verify_witness(const Tableau& t, const OuterSumWitness& w);

struct TabooCertificate {
  /// pairing: a[k] -> b[k], with T(a[k]) < T(b[k]).
  std::vector<Cell> a;
  std::vector<Cell> b;
};

bool verify_taboo(const Tableau& t, const TabooCertificate& cert);

inline constexpr int kDefaultTabooSize = 4;

/// Searches |A| = 1, 2, ..., max_size in order.  For each size, disjoint
/// balanced (A, B) are enumerated over cells in row-major order with row and
/// column balance pruned during the enumeration; a pairing is accepted when
/// the graph {a -> b : T(a) < T(b)} has a perfect matching.
std::optional<TabooCertificate> find_taboo_certificate(const Tableau& t, int max_size = kDefaultTabooSize);

struct TabooScanReport {
  int m = 0;
  int n = 0;
  long long total = 0;
  long long not_realizable = 0;
  long long with_certificate = 0;
  /// Non-realizable tableaux for which no certificate of size <= mn/2 exists.
  std::vector<Tableau> lacking_certificate;
};

/// Evidence for the conjecture that taboo configurations characterize
/// non-realizability.  Reports, never asserts.
TabooScanReport taboo_conjecture_scan(int m, int n, int cap = 16);

}  // namespace rsyt
