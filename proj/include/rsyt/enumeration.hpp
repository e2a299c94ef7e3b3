#pragma once

// Counting realizable rectangular tableaux, single-row extensions, the
// closed-form bounds on |rSYT(m,n)|, and the region count of the outer-sum
// arrangement.

#include <chrono>
#include <map>
#include <utility>
#include <vector>

#include "rsyt/numeric.hpp"
#include "rsyt/realizability.hpp"
#include "rsyt/syt.hpp"

namespace rsyt {

inline constexpr int kDefaultEnumerationCap = 20;

struct EnumerationOptions {
  /// Cut subtrees whose prefix system is infeasible.
  bool prune = true;
  bool collect_nonrealizable = false;
  /// Examples kept when collecting: the first ones in canonical order.
  std::size_t max_examples = 10;
  int jobs = 1;
  int cap = kDefaultEnumerationCap;
};

struct EnumerationReport {
  int m = 0;
  int n = 0;
  BigInt realizable_count;
  BigInt total_count;
  std::vector<Tableau> nonrealizable_examples;
  std::chrono::duration<double> elapsed{};
  /// LP solves actually performed (prefix checks answered by an inherited
  /// witness are not counted).
  long long lp_calls = 0;
};

EnumerationReport enumerate_realizable(int m, int n, const EnumerationOptions& options = {});

/// Comparison rows of a partial standard filling: the chain on the placed
/// cells, plus "each addable cell exceeds the last placed value".  `placed`
/// lists the cells carrying values 1..t in order.
std::vector<lp::Row> prefix_system(int m, int n, const std::vector<Cell>& placed);

/// n^2 (m-1) + 1 - (sum of T's bottom row), for an (m-1) x n tableau T.
BigInt extension_count_formula(const Tableau& t);

/// Genericity needed to place one more row on a fixed witness: the critical
/// values x_k + y_l - y_j (l != j) above x_last are pairwise distinct and none
/// equals x_last.
bool extension_generic(const OuterSumWitness& w);

/// Tableaux T((x, x_new) o y) for x_new ranging over every open interval cut
/// out by the critical values above x_last.  Throws NotGeneric.
std::vector<Tableau> fixed_witness_extensions(const OuterSumWitness& w);

/// Every realizable m x n tableau whose top m-1 rows are order-isomorphic to
/// T.  Throws NotRealizable when T itself is not realizable.
std::vector<Tableau> enumerate_single_row_extensions(const Tableau& t, int cap = kDefaultEnumerationCap);

/// |rSYT(m,n)| values known exactly, keyed by (m, n).
using CountTable = std::map<std::pair<int, int>, BigInt>;

/// Exact counts produced by enumerate_realizable and frozen in the golden
/// file; the tests re-derive them.  Used as lower-bound seeds.
const CountTable& enumerated_counts();

struct BoundsReport {
  int m = 0;
  int n = 0;
  BigInt hyperplanes;
  /// (1/(m! n!)) sum_{i=0}^{m+n} C(hyperplanes, i)
  Rational upper;
  /// Best value of the single-row recursion; the shape's own entry in
  /// `known` is never used.
  BigInt lower;
  BigInt syt_total;
  Rational ratio_upper;
};

BigInt outer_sum_hyperplane_count(int m, int n);
Rational rect_upper_bound(int m, int n);

/// Lower bound by the recursion |rSYT(m,n)| >= |rSYT(m-1,n)| (C(n,2)+1),
/// applied in both orientations.  Seeds: exact 1 for a single row or column,
/// C_n for 2 x n, and any smaller shape present in `known`.
BigInt rect_lower_bound(int m, int n, const CountTable& known = {});

BoundsReport bounds(int m, int n, const CountTable& known = {});

/// Number of regions of the full outer-sum arrangement in R^{m+n}, by
/// sign-vector enumeration with x_1 = y_1 = 0.  Requires m + n <= cap.
BigInt region_count_crosscheck(int m, int n, int cap = 6);

}  // namespace rsyt
