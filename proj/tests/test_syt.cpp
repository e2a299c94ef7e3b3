#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "test_util.hpp"
#include "rsyt/error.hpp"
#include "rsyt/syt.hpp"

using namespace rsyt;

namespace {

std::vector<Tableau> stream_all(const Shape& s, std::vector<int> prefix = {}) {
  SytStream st(s, kDefaultCellCap, std::move(prefix));
  std::vector<Tableau> out;
  while (auto t = st.next()) out.push_back(*t);
  return out;
}

}  // namespace

TEST_CASE("rationals print and parse losslessly") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-5)) == "-5");
  CHECK(parse_rational(" -10/4 ") == Rational(-5, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::BadInput);
  CHECK(kind_of([] { parse_rational("x"); }) == ErrorKind::BadInput);
  CHECK(parse_bigint("123456789012345678901234567890") * 10 == parse_bigint("1234567890123456789012345678900"));
}

TEST_CASE("counting helpers") {
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10ul, 3) == 120);
  CHECK(binomial(2ul, 3) == 0);
  const int cat[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (unsigned n = 0; n < 8; ++n) CHECK(catalan(n) == cat[n]);
  CHECK(common_denominator({Rational(1, 6), Rational(3, 4), Rational(2)}) == 12);
}

TEST_CASE("shapes") {
  const Shape r = Shape::rectangular(3, 5);
  CHECK(r.cell_count() == 15);
  CHECK(r.partition() == std::vector<int>{5, 5, 5});
  const Shape s = Shape::staircase(4);
  CHECK(s.cell_count() == 10);
  CHECK(s.row_length(0) == 1);
  CHECK(s.row_start(0) == 3);
  CHECK(s.partition() == std::vector<int>{4, 3, 2, 1});
  CHECK(s.contains(Cell{3, 0}));
  CHECK_FALSE(s.contains(Cell{0, 0}));
}

TEST_CASE("validate_tableau reports the right error kind") {
  const Shape s = Shape::rectangular(2, 2);
  CHECK(validate_tableau(s, {{1, 2}, {3, 4}}) == row_order_tableau(2, 2));
  CHECK(kind_of([&] { validate_tableau(s, {{1, 2, 3}, {4}}); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { validate_tableau(s, {{1, 2}, {2, 4}}); }) == ErrorKind::NotABijection);
  CHECK(kind_of([&] { validate_tableau(s, {{2, 1}, {3, 4}}); }) == ErrorKind::NotIncreasing);
  CHECK(kind_of([&] { validate_tableau(s, {{1, 4}, {2, 3}}); }) == ErrorKind::NotIncreasing);
}

TEST_CASE("row/column order tableaux, transpose and serialization") {
  const Tableau c = column_order_tableau(2, 3);
  CHECK(c.rows() == std::vector<std::vector<int>>{{1, 3, 5}, {2, 4, 6}});
  CHECK(c.transpose() == row_order_tableau(3, 2));
  CHECK(c.serialize() == "1,3,5|2,4,6");
  const auto cells = c.cells_by_value();
  CHECK(cells[0] == Cell{0, 0});
  CHECK(cells[5] == Cell{1, 2});
}

TEST_CASE("stream agrees with the brute-force filling oracle") {
  for (const Shape& s : {Shape::rectangular(2, 3), Shape::rectangular(3, 3), Shape::rectangular(2, 4),
                         Shape::staircase(3), Shape::staircase(4)}) {
    const auto got = stream_all(s);
    const auto want = oracle::all_fillings(s);
    CHECK(got.size() == want.size());
    CHECK(BigInt(got.size()) == hook_length_count(s));
    std::set<std::string> a, b;
    for (const auto& t : got) a.insert(t.serialize());
    for (const auto& t : want) b.insert(t.serialize());
    CHECK(a == b);
  }
}

TEST_CASE("stream order is lexicographic in the row-index sequence") {
  SytStream st(Shape::rectangular(3, 3));
  std::vector<int> prev;
  int count = 0;
  while (st.next()) {
    if (count++) CHECK(prev < st.row_sequence());
    prev = st.row_sequence();
  }
  CHECK(count == 42);
}

TEST_CASE("prefix splitting partitions the stream in order") {
  const Shape s = Shape::rectangular(3, 3);
  std::vector<Tableau> joined;
  for (const auto& p : syt_prefixes(s, 4))
    for (auto& t : stream_all(s, p)) joined.push_back(t);
  CHECK(joined == stream_all(s));
}

TEST_CASE("hook length and rectangle closed form") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) CHECK(rectangular_syt_count(m, n) == hook_length_count(Shape::rectangular(m, n)));
  CHECK(hook_length_count(Shape::staircase(2)) == 2);
  CHECK(hook_length_count(Shape::staircase(3)) == 16);
  CHECK(hook_length_count(Shape::staircase(4)) == 768);
  CHECK(rectangular_syt_count(2, 7) == catalan(7));
}

TEST_CASE("cap is enforced") {
  CHECK(kind_of([] { SytStream(Shape::rectangular(5, 6), 25); }) == ErrorKind::CapExceeded);
}
