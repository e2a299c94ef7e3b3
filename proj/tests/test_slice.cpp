#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rsyt/slice.hpp"
#include "test_util.hpp"

using namespace rsyt;

namespace {

const SliceVertex kNine{{4, 1, 6, 2, 7, 8, 3, 9, 5}, 5, 4, 20};

SliceVertex V(std::vector<int> perm, int m) {
  const int n = static_cast<int>(perm.size()) - m;
  int k = 0;
  for (int i = 0; i < m; ++i) k += perm[i];
  return SliceVertex{std::move(perm), m, n, k};
}

std::vector<std::vector<int>> points_on(const Flag& f, int m, int k) {
  std::vector<std::vector<int>> out;
  for (const auto& p : face_vertices(f)) {
    int s = 0;
    for (int i = 0; i < m; ++i) s += p[i];
    if (s == k) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("vertex validation") {
  CHECK_FALSE(kind_of([] { validate_vertex(kNine); }).has_value());
  CHECK(kind_of([] { validate_vertex(SliceVertex{{1, 1, 3}, 1, 2, 1}); }) == ErrorKind::BadInput);
  CHECK(kind_of([] { validate_vertex(SliceVertex{{1, 2, 3}, 1, 2, 2}); }) == ErrorKind::BadInput);
  CHECK(kind_of([] { validate_vertex(SliceVertex{{1, 2}, 1, 2, 1}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("vertices match the filtering oracle and the count formula") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 4 - (m == 3); ++n) {
      const auto [lo, hi] = slice_k_range(m, n);
      CHECK(lo == m * (m + 1) / 2);
      CHECK(hi == m * (m + 1) / 2 + m * n);
      for (int k = lo; k <= hi; ++k) {
        const auto got = slice_vertices(m, n, k);
        CHECK(got == oracle::filtered_vertices(m, n, k));
        CHECK(BigInt(got.size()) == slice_vertex_count(m, n, k));
      }
    }
  CHECK(slice_vertices(2, 2, 3).size() == 4);
  CHECK(slice_vertices(2, 2, 5).size() == 8);
  CHECK(BigInt(slice_vertices(5, 4, 20).size()) == slice_vertex_count(5, 4, 20));
  CHECK(kind_of([] { slice_vertices(2, 2, 2); }) == ErrorKind::EmptySlice);
  CHECK(kind_of([] { slice_vertices(2, 2, 8); }) == ErrorKind::EmptySlice);
  CHECK(kind_of([] { slice_vertices(6, 6, 40); }) == ErrorKind::CapExceeded);
}

TEST_CASE("lattice paths") {
  const auto p = lattice_path_of_vertex(kNine);
  CHECK(p.area() == 5);
  REQUIRE(p.steps.size() == 9);
  // Value t is an up step labeled i when x_i = t lies in the first block.
  const std::vector<PathStep> want{{true, 2}, {true, 4}, {false, 7}, {true, 1}, {false, 9},
                                   {true, 3}, {true, 5}, {false, 6}, {false, 8}};
  CHECK(p.steps == want);
  CHECK(lattice_path_of_vertex(V({1, 2, 3, 4, 5}, 2)).area() == 0);
  CHECK(lattice_path_of_vertex(V({4, 5, 1, 2, 3}, 2)).area() == 6);
  for (const auto& v : slice_vertices(2, 3, 7)) CHECK(lattice_path_of_vertex(v).area() == 7 - 3);
}

TEST_CASE("neighbors of the nine-element vertex") {
  const auto nb = slice_neighbors(kNine);
  std::set<std::vector<int>> perms;
  for (const auto& v : nb) {
    CHECK_FALSE(kind_of([&] { validate_vertex(v); }).has_value());
    perms.insert(v.perm);
  }
  CHECK(perms.size() == nb.size());
  CHECK(perms.count({4, 2, 6, 1, 7, 8, 3, 9, 5}));
  CHECK(perms.count({4, 1, 5, 3, 7, 8, 2, 9, 6}));
  CHECK(perms.count({4, 1, 6, 2, 7, 8, 5, 9, 3}));
  for (const auto& v : nb) CHECK(edge_oracle(kNine, v));
}

TEST_CASE("edges equal the optimization oracle") {
  for (auto [m, n] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const auto [lo, hi] = slice_k_range(m, n);
    for (int k = lo; k <= hi; ++k) {
      const auto g = slice_edges(m, n, k);
      const std::set<std::pair<std::size_t, std::size_t>> edges(g.edges.begin(), g.edges.end());
      CHECK(edges.size() == g.edges.size());
      for (std::size_t a = 0; a < g.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < g.vertices.size(); ++b)
          CHECK(edge_oracle(g.vertices[a], g.vertices[b], g.vertices) == static_cast<bool>(edges.count({a, b})));
    }
  }
  const auto sq = slice_edges(2, 2, 3);
  CHECK(sq.vertices.size() == 4);
  CHECK(sq.edges.size() == 4);
  CHECK_FALSE(edge_oracle(sq.vertices[0], sq.vertices[0]));
}

TEST_CASE("normal cone of the nine-element vertex") {
  const auto c = normal_cone(kNine);
  const std::vector<Root> plain{{4, 2}, {5, 3}, {8, 6}};
  const std::vector<Root> crossing{{7, 4}, {1, 7}, {9, 1}, {3, 9}, {6, 5}};
  CHECK(c.delta_plain == plain);
  CHECK(c.delta_m == crossing);
  CHECK(omega_sign(Root{7, 4}, 5) == -1);
  CHECK(omega_sign(Root{1, 7}, 5) == 1);
  CHECK_FALSE(cone_contains(c, std::vector<Rational>(9)));
  std::vector<Rational> x;
  for (int v : kNine.perm) x.push_back(Rational(v));
  CHECK(cone_contains(c, x));
  auto y = x;
  std::swap(y[1], y[3]);  // breaks u_4 - u_2 > 0
  CHECK_FALSE(cone_contains(c, y));
}

TEST_CASE("root counts") {
  for (const auto& v : slice_vertices(3, 3, 12)) {
    const auto c = normal_cone(v);
    CHECK(c.delta_plain.size() + c.delta_m.size() == 5);
    for (const auto& r : c.delta_plain) CHECK(omega_sign(r, 3) == 0);
    for (const auto& r : c.delta_m) CHECK(omega_sign(r, 3) != 0);
  }
}

TEST_CASE("cone membership agrees with unique argmax on random functionals") {
  std::mt19937_64 rng(1);
  for (auto [m, n, k] : {std::tuple{2, 2, 5}, std::tuple{2, 3, 6}, std::tuple{3, 2, 9}}) {
    const auto vs = slice_vertices(m, n, k);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto cone = normal_cone(vs[i]);
      for (int s = 0; s < 40; ++s) {
        std::vector<Rational> u(m + n);
        for (auto& q : u) q = Rational(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 5) + 1);
        const auto best = unique_argmax(vs, u);
        CHECK(cone_contains(cone, u) == (best.has_value() && *best == i));
      }
    }
  }
}

TEST_CASE("flags") {
  CHECK(validate_flag(Flag{{{1, 2, 3, 4}}}) == 4);
  CHECK(kind_of([] { validate_flag(Flag{{{2}, {2}, {1, 2}}}); }) == ErrorKind::BadInput);
  CHECK(kind_of([] { validate_flag(Flag{{{1}, {1, 3}}}); }) == ErrorKind::BadInput);
  // Ordered set partitions of [N]: Fubini numbers.
  const int fubini[] = {1, 3, 13, 75};
  for (int n = 1; n <= 4; ++n) CHECK(all_flags(n).size() == static_cast<std::size_t>(fubini[n - 1]));
}

TEST_CASE("face dimensions") {
  const Flag trivial{{{1, 2, 3, 4}}};
  CHECK(min_max_prefix(trivial, 2) == std::pair{3, 7});
  CHECK(face_dimension(trivial, 2, 5) == 2);
  CHECK(face_dimension(trivial, 2, 3) == 2);
  CHECK(kind_of([&] { face_dimension(trivial, 2, 8); }) == ErrorKind::FaceMissesHyperplane);
  const Flag complete{{{3}, {1, 3}, {1, 2, 3}}};
  const auto [lo, hi] = min_max_prefix(complete, 1);
  CHECK(lo == hi);
  CHECK(face_dimension(complete, 1, lo) == 0);
  // F_1 receives the largest values.
  CHECK(face_vertices(Flag{{{2}, {1, 2}}}) == std::vector<std::vector<int>>{{1, 2}});
}

TEST_CASE("face dimension equals the affine rank of the cut face") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& f : all_flags(n))
      for (int m = 0; m <= n; ++m) {
        const auto [lo, hi] = min_max_prefix(f, m);
        for (int k = lo; k <= hi; ++k) CHECK(face_dimension(f, m, k) == affine_rank(points_on(f, m, k)));
      }
}

TEST_CASE("affine rank") {
  CHECK(affine_rank({}) == -1);
  CHECK(affine_rank({{1, 2}}) == 0);
  CHECK(affine_rank({{1, 2}, {2, 1}}) == 1);
  CHECK(affine_rank({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}) == 1);
}
