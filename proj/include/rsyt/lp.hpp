#pragma once

// Exact strict-feasibility kernel.
//
// Decides whether a homogeneous system
//
//     S z > 0   (componentwise),   E z = 0,   z free
//
// has a solution, by maximizing a margin t subject to S z >= t, E z = 0,
// 0 <= t <= 1 with a rational simplex using the least-index (Bland) rule.
// The optimum t* is positive iff the strict system is feasible.  When t* = 0
// the final dictionary yields multipliers lambda >= 0 (sum >= 1) and mu with
// lambda^T S + mu^T E = 0, which is a Motzkin/Farkas certificate that no z
// exists.  Both outcomes are re-verified exactly before being returned.
//
// Every call owns its own tableau; the kernel is reentrant.

#include <cstddef>
#include <vector>

#include "rsyt/numeric.hpp"

namespace rsyt::lp {

using Row = std::vector<long long>;

struct StrictSystem {
  std::size_t num_vars = 0;
  std::vector<Row> strict;
  std::vector<Row> equalities;
};

struct StrictResult {
  bool feasible = false;
  /// Feasible only: a point with S z >= margin and E z = 0.
  std::vector<Rational> point;
  /// Feasible only: the optimal margin t* in (0, 1].
  Rational margin;
  /// Infeasible only: one multiplier per strict row, all >= 0, not all zero.
  std::vector<Rational> strict_multipliers;
  /// Infeasible only: one multiplier per equality row (any sign).
  std::vector<Rational> equality_multipliers;
};

StrictResult solve_strict(const StrictSystem& system);

/// lambda >= 0, lambda != 0 and lambda^T S + mu^T E == 0, exactly.
bool is_infeasibility_certificate(const StrictSystem& system, const std::vector<Rational>& lambda,
                                  const std::vector<Rational>& mu);

/// Row value r . z.
Rational dot(const Row& row, const std::vector<Rational>& z);

}  // namespace rsyt::lp
