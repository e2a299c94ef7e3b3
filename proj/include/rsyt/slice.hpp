#pragma once

// The slice S_{m,n,k} of the permutahedron Pi_{m+n} by the hyperplane
// x_1 + ... + x_m = k: vertices, labeled lattice paths, edges, normal cones
// and the dimensions of faces cut by the hyperplane.
//
// Indices and values are 1-based here, as they appear in permutations.

#include <optional>
#include <utility>
#include <vector>

#include "rsyt/lp.hpp"
#include "rsyt/numeric.hpp"

namespace rsyt {

struct SliceVertex {
  /// perm[i-1] = x_i, a permutation of 1..m+n.
  std::vector<int> perm;
  int m = 0;
  int n = 0;
  int k = 0;
  auto operator<=>(const SliceVertex&) const = default;
};

/// Throws BadInput unless perm is a permutation of 1..m+n whose first m
/// entries sum to k.
void validate_vertex(const SliceVertex& v);

inline constexpr int kDefaultSliceCap = 10;

/// Smallest and largest k with a nonempty slice.
std::pair<int, int> slice_k_range(int m, int n);

/// All vertices, sorted lexicographically by perm.  Throws EmptySlice when k
/// is out of range and CapExceeded when m + n > cap.
std::vector<SliceVertex> slice_vertices(int m, int n, int k, int cap = kDefaultSliceCap);

/// (partitions of k - C(m+1,2) inside an m x n box) * m! * n!.
BigInt slice_vertex_count(int m, int n, int k);

struct PathStep {
  bool up = false;
  int label = 0;
  bool operator==(const PathStep&) const = default;
};

struct LabeledLatticePath {
  int m = 0;
  int n = 0;
  /// steps[t-1] is the step for value t.
  std::vector<PathStep> steps;
  /// Cells of the m x n box above the path.
  int area() const;
};

LabeledLatticePath lattice_path_of_vertex(const SliceVertex& v);

/// Vertices adjacent to v by the three local moves on its lattice path:
/// relabel two consecutive steps of equal direction; flip a far-apart pair
/// of an inner and an outer corner; relabel the two equal steps of a three
/// step corner pattern.  Sorted, without duplicates.
std::vector<SliceVertex> slice_neighbors(const SliceVertex& v);

struct SliceGraph {
  std::vector<SliceVertex> vertices;
  /// Index pairs (a < b) into `vertices`, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

SliceGraph slice_edges(int m, int n, int k, int cap = kDefaultSliceCap);

/// Independent check: some linear functional is maximized over the slice
/// exactly on {u, v}, decided by strict feasibility over all slice vertices.
bool edge_oracle(const SliceVertex& u, const SliceVertex& v, const std::vector<SliceVertex>& vertices);
bool edge_oracle(const SliceVertex& u, const SliceVertex& v);

/// e_plus - e_minus (1-based indices).
struct Root {
  int plus = 0;
  int minus = 0;
  auto operator<=>(const Root&) const = default;
};

struct NormalConeDescription {
  int m = 0;
  int n = 0;
  /// Roots e_i - e_j with x_i - x_j = 1 and i, j on the same side of m,
  /// ordered by x_j.
  std::vector<Root> delta_plain;
  /// The remaining roots, ordered by x_j.
  std::vector<Root> delta_m;
};

NormalConeDescription normal_cone(const SliceVertex& v);

/// +1 if the root has its plus index in [m], -1 if its minus index is.
int omega_sign(const Root& r, int m);

/// u lies in the open normal cone: <u, b> > 0 for plain roots and
/// <u, b1 + b2> > 0 for every pair of delta_m roots of opposite omega sign.
/// Same-sign pairs are not constrained: the cone is invariant under
/// u + c * omega_m, which moves <u, b1 + b2> by +-2c for such pairs.
bool cone_contains(const NormalConeDescription& cone, const std::vector<Rational>& u);

/// Index into `vertices` of the unique maximizer of <u, .>, if unique.
std::optional<std::size_t> unique_argmax(const std::vector<SliceVertex>& vertices, const std::vector<Rational>& u);

/// F_1 ⊊ ... ⊊ F_d = [N] (the empty F_0 is implicit).  The face of Pi_N it
/// indexes gives the largest values to F_1, the next largest to F_2 \ F_1,
/// and so on.
struct Flag {
  std::vector<std::vector<int>> subsets;
};

/// Throws BadInput unless the chain is strictly increasing and ends in [N].
/// Returns N.
int validate_flag(const Flag& f);

/// All flags of [N], in depth-first order of the chain of added blocks.
std::vector<Flag> all_flags(int n);

/// Sum of x_1..x_m over the face, minimized and maximized.
std::pair<int, int> min_max_prefix(const Flag& f, int m);

/// Dimension of (face of F) ∩ {x_1 + ... + x_m = k}.  Throws
/// FaceMissesHyperplane when k lies outside [min, max].
int face_dimension(const Flag& f, int m, int k);

/// Permutation vertices of the face of F (N <= 8).
std::vector<std::vector<int>> face_vertices(const Flag& f);

/// Affine rank of a set of integer points (-1 for the empty set).
int affine_rank(const std::vector<std::vector<int>>& points);

}  // namespace rsyt
