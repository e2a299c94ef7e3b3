#pragma once

// Shapes, standard Young tableaux and their enumeration.
//
// Cells are 0-based (row, col) pairs throughout the library; the JSON layer
// converts to the 1-based convention used in certificates.
//
// Staircase(n) is stored shortest row first, right-justified: row r has
// length r + 1 and occupies columns n-1-r .. n-1.  Entries increase along
// rows and down columns, so the largest entry sits in the bottom-right corner.
// Rotating such a filling by 180 degrees and replacing t by N+1-t gives an
// ordinary English-notation tableau of shape (n, n-1, ..., 1).

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rsyt/numeric.hpp"

namespace rsyt {

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

class Shape {
 public:
  enum class Kind { Rectangular, Staircase };

  static Shape rectangular(int m, int n);
  static Shape staircase(int n);

  Kind kind() const { return kind_; }
  bool is_rectangular() const { return kind_ == Kind::Rectangular; }
  /// Rectangular: rows. Staircase: n.
  int m() const { return m_; }
  /// Rectangular: columns. Staircase: n.
  int n() const { return n_; }

  int rows() const { return m_; }
  int columns() const { return n_; }
  int row_length(int r) const;
  int row_start(int r) const;
  int cell_count() const;
  bool contains(Cell c) const;

  /// Row lengths sorted into a partition (weakly decreasing).
  std::vector<int> partition() const;

  bool operator==(const Shape&) const = default;

 private:
  Shape(Kind kind, int m, int n) : kind_(kind), m_(m), n_(n) {}
  Kind kind_;
  int m_;
  int n_;
};

std::string describe(const Shape& shape);

class Tableau {
 public:
  /// Unchecked; use validate_tableau for untrusted input.
  Tableau(Shape shape, std::vector<std::vector<int>> rows);

  const Shape& shape() const { return shape_; }
  /// rows()[r][i] is the entry of cell (r, row_start(r) + i).
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  int at(Cell c) const { return rows_[c.row][c.col - shape_.row_start(c.row)]; }
  int at(int r, int c) const { return at(Cell{r, c}); }

  /// Index t-1 holds the cell carrying value t.
  std::vector<Cell> cells_by_value() const;

  /// Canonical row-major serialization, e.g. "1,2,5|3,4,6".
  std::string serialize() const;

  /// Rectangular only: the n x m tableau with entries (j, i) -> T(i, j).
  Tableau transpose() const;

  bool operator==(const Tableau&) const = default;

 private:
  Shape shape_;
  std::vector<std::vector<int>> rows_;
};

/// Checks that `rows` fills `shape` with a standard filling.  Throws
/// Error(DimensionMismatch) if row lengths are wrong, Error(NotABijection) if
/// the entries are not 1..N, and Error(NotIncreasing) naming the first
/// offending cell in row-major scan order.
Tableau validate_tableau(const Shape& shape, std::vector<std::vector<int>> rows);

/// Rectangular convenience: the column-order tableau T(i,j) = j*m + i + 1.
Tableau column_order_tableau(int m, int n);
/// Rectangular convenience: T(i,j) = i*n + j + 1.
Tableau row_order_tableau(int m, int n);

inline constexpr int kDefaultCellCap = 25;

/// Every standard filling of a shape, in lexicographic order of the "row
/// index of value t" sequence.  A non-empty `prefix` (row indices of values
/// 1..p) restricts the stream to completions of that prefix, which is how
/// callers split the work across threads deterministically.
class SytStream {
 public:
  explicit SytStream(const Shape& shape, int cap = kDefaultCellCap, std::vector<int> prefix = {});

  std::optional<Tableau> next();
  /// Row-index sequence of the tableau most recently returned by next().
  const std::vector<int>& row_sequence() const { return seq_; }

 private:
  bool can_place(int r) const;
  void place(int r);
  int unplace();
  bool complete_greedily();
  Tableau current() const;

  Shape shape_;
  std::size_t prefix_len_;
  std::vector<int> seq_;
  std::vector<int> filled_;
  bool started_ = false;
  bool done_ = false;
};

/// All valid row-index prefixes of length `depth`, in canonical order.
std::vector<std::vector<int>> syt_prefixes(const Shape& shape, int depth);

BigInt hook_length_count(const Shape& shape);
/// (mn)! * prod_{j<m} j!/(n+j)!, the closed form for rectangles.
BigInt rectangular_syt_count(int m, int n);

}  // namespace rsyt
