#pragma once

// Sorting networks (reduced words of the longest permutation), the networks
// swept out by planar point configurations, and bound formulas for realizable
// staircase tableaux.
//
// Conventions.  A network on k wires is a sequence of C(k,2) adjacent swap
// positions p in 1..k-1.  Wires carry labels 1..k, initially label i sits at
// position i.  The rank vector sigma maps a label to its current position;
// swap p exchanges the labels at positions p and p+1.  For a point
// configuration, labels are the points sorted by first coordinate and the
// pair {i, j} swaps when the sweep direction becomes orthogonal to the
// segment ij, i.e. pairs fire in increasing order of slope.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rsyt/numeric.hpp"

namespace rsyt {

struct SortingNetwork {
  int wires = 0;
  std::vector<int> swaps;
  auto operator<=>(const SortingNetwork&) const = default;
};

/// Throws BadInput unless wires >= 2, there are C(k,2) swaps in range and
/// every swap creates a new inversion.
void validate_network(const SortingNetwork& net);
bool is_sorting_network(const SortingNetwork& net);

/// sigma_0 .. sigma_N as rank vectors (index label-1 holds the 1-based
/// position of that label).
std::vector<std::vector<int>> rank_sequences(const SortingNetwork& net);

/// The labels (i < j) exchanged by each swap.
std::vector<std::pair<int, int>> swap_pairs(const SortingNetwork& net);

struct Point2 {
  Rational x;
  Rational y;
  bool operator==(const Point2&) const = default;
};

struct PointConfiguration {
  std::vector<Point2> points;
  bool operator==(const PointConfiguration&) const = default;
};

/// Two points (0-based, in input order) sharing a first coordinate, or two
/// pairs of points whose segments have equal slopes (reported as the first
/// pair of points of the second segment), if any.
std::optional<std::pair<int, int>> genericity_violation(const PointConfiguration& config);

/// Throws NotGeneric.  Points may be given in any order.
SortingNetwork network_of_points(const PointConfiguration& config);

inline constexpr int kDefaultNetworkCap = 6;

/// Every network on k wires, lexicographically by swap sequence.  Throws
/// CapExceeded when k > cap and BadInput when k < 2.
void for_each_network(int k, const std::function<void(const SortingNetwork&)>& visit, int cap = kDefaultNetworkCap);
std::vector<SortingNetwork> enumerate_networks(int k, int cap = kDefaultNetworkCap);
BigInt count_networks(int k, int cap = kDefaultNetworkCap);

struct SearchOptions {
  long long budget = 1000;
  std::uint64_t seed = 1;
  /// Initial side of the integer sampling grid [0, G]^2; doubles after each
  /// round of kGridRound trials.
  int grid = 4;
};

inline constexpr long long kGridRound = 256;

struct RealizabilityVerdict {
  /// Set on success; network_of_points(*witness) equals the queried network.
  std::optional<PointConfiguration> witness;
  long long trials = 0;
  bool found() const { return witness.has_value(); }
};

/// Random integer configurations plus hill climbing on the number of pairs
/// of swaps that fire in the wrong relative order.  Only ever reports a
/// verified witness or Unknown.
RealizabilityVerdict witness_search(const SortingNetwork& net, const SearchOptions& options);

/// Independent searches, one per network, seeded deterministically from
/// options.seed and the network's index; results in input order.
std::vector<RealizabilityVerdict> witness_search_all(const std::vector<SortingNetwork>& nets,
                                                     const SearchOptions& options, int jobs = 1);

/// Distinct networks swept out by `budget` random generic configurations on
/// k points, sorted.  A lower bound on the realizable count, never a proof
/// that a missing network is non-realizable.
std::vector<SortingNetwork> saturation_enumerate(int k, const SearchOptions& options, int cap = kDefaultNetworkCap);

/// Default rational upper approximation of e.
Rational default_e_upper();

/// (4e * 2 * C(C(n,2),2) / (2n))^(2n) / n!, and 1 for n = 2.
Rational staircase_upper_bound(int n, const Rational& e_upper = default_e_upper());

/// (1/(n+1)) sum_{i=1}^{n} 2(i-1) C(C(i,2),2).
Rational staircase_lower_factor(int n);

/// Iterates value(j) = factor(j) * value(j-1) from value(base_n) = base.
/// Staircase size n corresponds to networks on n+1 wires.
Rational staircase_lower_recurrence(int n, int base_n, const Rational& base);

}  // namespace rsyt
