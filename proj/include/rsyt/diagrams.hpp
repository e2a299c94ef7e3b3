#pragma once

// Deterministic SVG renderings.  Every mark that carries meaning also carries
// data-* attributes with exact values, so documents can be checked
// programmatically without parsing geometry.

#include <string>

#include "rsyt/realizability.hpp"
#include "rsyt/slice.hpp"
#include "rsyt/staircase.hpp"

namespace rsyt {

/// Grid points (x_i, y_j), their orthogonal projections onto y = x, and the
/// induced ranks.  Circles of class "point" carry data-i, data-j (1-based),
/// data-pos (x_i + y_j as "p/q") and data-rank.  Throws NotGeneric.
std::string render_projection_diagram(const OuterSumWitness& w);

/// Points at x_i + y_j on a line, one marker style per i, arcs joining the
/// points that share j.  Reading the markers left to right lists the row of
/// each successive entry.  Same data attributes as the projection diagram.
std::string render_line_diagram(const OuterSumWitness& w);

/// k horizontal tracks with one crossing per swap, left to right.  Crossing
/// marks carry data-step, data-pos and data-labels="i,j".
std::string render_wiring_diagram(const SortingNetwork& net);

/// The m x n box with the labeled path from (0,0) to (n,m) and the cells
/// above it shaded.  Steps carry data-t, data-dir ("up"/"right") and
/// data-label.
std::string render_lattice_path(const SliceVertex& v);

}  // namespace rsyt
