#include "rsyt/syt.hpp"

#include <algorithm>
#include <sstream>

#include "rsyt/error.hpp"

namespace rsyt {

Shape Shape::rectangular(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorKind::BadInput, "rectangular shape needs m, n >= 1");
  return Shape(Kind::Rectangular, m, n);
}

Shape Shape::staircase(int n) {
  if (n < 1) throw Error(ErrorKind::BadInput, "staircase shape needs n >= 1");
  return Shape(Kind::Staircase, n, n);
}

int Shape::row_length(int r) const { return kind_ == Kind::Rectangular ? n_ : r + 1; }

int Shape::row_start(int r) const { return kind_ == Kind::Rectangular ? 0 : n_ - 1 - r; }

int Shape::cell_count() const { return kind_ == Kind::Rectangular ? m_ * n_ : n_ * (n_ + 1) / 2; }

bool Shape::contains(Cell c) const {
  if (c.row < 0 || c.row >= rows()) return false;
  const int start = row_start(c.row);
  return c.col >= start && c.col < start + row_length(c.row);
}

std::vector<int> Shape::partition() const {
  std::vector<int> p;
  for (int r = 0; r < rows(); ++r) p.push_back(row_length(r));
  std::sort(p.rbegin(), p.rend());
  return p;
}

std::string describe(const Shape& shape) {
  if (shape.is_rectangular()) return std::to_string(shape.m()) + "x" + std::to_string(shape.n());
  return "staircase(" + std::to_string(shape.n()) + ")";
}

Tableau::Tableau(Shape shape, std::vector<std::vector<int>> rows) : shape_(shape), rows_(std::move(rows)) {}

std::vector<Cell> Tableau::cells_by_value() const {
  std::vector<Cell> out(shape_.cell_count());
  for (int r = 0; r < shape_.rows(); ++r)
    for (int i = 0; i < shape_.row_length(r); ++i) out[rows_[r][i] - 1] = Cell{r, shape_.row_start(r) + i};
  return out;
}

std::string Tableau::serialize() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) os << '|';
    for (std::size_t i = 0; i < rows_[r].size(); ++i) {
      if (i) os << ',';
      os << rows_[r][i];
    }
  }
  return os.str();
}

Tableau Tableau::transpose() const {
  if (!shape_.is_rectangular()) throw Error(ErrorKind::InvalidTableau, "transpose needs a rectangular tableau");
  const int m = shape_.m(), n = shape_.n();
  std::vector<std::vector<int>> t(n, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) t[j][i] = rows_[i][j];
  return Tableau(Shape::rectangular(n, m), std::move(t));
}

Tableau validate_tableau(const Shape& shape, std::vector<std::vector<int>> rows) {
  if (static_cast<int>(rows.size()) != shape.rows())
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(shape.rows()) + " rows for shape " +
                                                  describe(shape) + ", got " + std::to_string(rows.size()));
  for (int r = 0; r < shape.rows(); ++r)
    if (static_cast<int>(rows[r].size()) != shape.row_length(r))
      throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(r + 1) + " should have " +
                                                    std::to_string(shape.row_length(r)) + " entries");

  const int total = shape.cell_count();
  std::vector<bool> seen(total + 1, false);
  for (const auto& row : rows)
    for (int v : row) {
      if (v < 1 || v > total || seen[v])
        throw Error(ErrorKind::NotABijection,
                    "entries must be exactly 1.." + std::to_string(total) + "; offending value " + std::to_string(v));
      seen[v] = true;
    }

  Tableau t(shape, std::move(rows));
  for (int r = 0; r < shape.rows(); ++r) {
    const int start = shape.row_start(r);
    for (int c = start; c < start + shape.row_length(r); ++c) {
      const Cell here{r, c};
      const auto where = "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
      if (shape.contains(Cell{r, c - 1}) && t.at(Cell{r, c - 1}) > t.at(here))
        throw Error(ErrorKind::NotIncreasing, "row not increasing at cell " + where);
      if (shape.contains(Cell{r - 1, c}) && t.at(Cell{r - 1, c}) > t.at(here))
        throw Error(ErrorKind::NotIncreasing, "col not increasing at cell " + where);
    }
  }
  return t;
}

Tableau column_order_tableau(int m, int n) {
  std::vector<std::vector<int>> rows(m, std::vector<int>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = j * m + i + 1;
  return Tableau(Shape::rectangular(m, n), std::move(rows));
}

Tableau row_order_tableau(int m, int n) {
  std::vector<std::vector<int>> rows(m, std::vector<int>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = i * n + j + 1;
  return Tableau(Shape::rectangular(m, n), std::move(rows));
}

// ---------------------------------------------------------------------------
// SytStream

SytStream::SytStream(const Shape& shape, int cap, std::vector<int> prefix)
    : shape_(shape), prefix_len_(prefix.size()), filled_(shape.rows(), 0) {
  if (shape.cell_count() > cap)
    throw Error(ErrorKind::CapExceeded, describe(shape) + " has " + std::to_string(shape.cell_count()) +
                                            " cells, cap is " + std::to_string(cap));
  if (static_cast<int>(prefix.size()) > shape.cell_count())
    throw Error(ErrorKind::BadInput, "prefix longer than the shape");
  for (int r : prefix) {
    if (r < 0 || r >= shape.rows() || !can_place(r)) {
      done_ = true;
      return;
    }
    place(r);
  }
}

bool SytStream::can_place(int r) const {
  const int len = shape_.row_length(r);
  if (filled_[r] >= len) return false;
  if (r == 0) return true;
  const int col = shape_.row_start(r) + filled_[r];
  if (!shape_.contains(Cell{r - 1, col})) return true;
  return col < shape_.row_start(r - 1) + filled_[r - 1];
}

void SytStream::place(int r) {
  ++filled_[r];
  seq_.push_back(r);
}

int SytStream::unplace() {
  const int r = seq_.back();
  seq_.pop_back();
  --filled_[r];
  return r;
}

bool SytStream::complete_greedily() {
  const auto total = static_cast<std::size_t>(shape_.cell_count());
  while (seq_.size() < total) {
    int r = 0;
    while (r < shape_.rows() && !can_place(r)) ++r;
    if (r == shape_.rows()) return false;
    place(r);
  }
  return true;
}

Tableau SytStream::current() const {
  std::vector<std::vector<int>> rows(shape_.rows());
  for (int r = 0; r < shape_.rows(); ++r) rows[r].reserve(shape_.row_length(r));
  for (std::size_t t = 0; t < seq_.size(); ++t) rows[seq_[t]].push_back(static_cast<int>(t) + 1);
  return Tableau(shape_, std::move(rows));
}

std::optional<Tableau> SytStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!complete_greedily()) {
      done_ = true;
      return std::nullopt;
    }
    return current();
  }
  // Backtrack to the deepest position that admits a larger row, then refill
  // the tail with the lexicographically smallest completion.
  while (seq_.size() > prefix_len_) {
    const int prev = unplace();
    for (int r = prev + 1; r < shape_.rows(); ++r) {
      if (can_place(r)) {
        place(r);
        complete_greedily();
        return current();
      }
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<std::vector<int>> syt_prefixes(const Shape& shape, int depth) {
  depth = std::min(depth, shape.cell_count());
  std::vector<std::vector<int>> out;
  std::vector<int> filled(shape.rows(), 0);
  std::vector<int> seq;
  auto can_place = [&](int r) {
    if (filled[r] >= shape.row_length(r)) return false;
    if (r == 0) return true;
    const int col = shape.row_start(r) + filled[r];
    if (!shape.contains(Cell{r - 1, col})) return true;
    return col < shape.row_start(r - 1) + filled[r - 1];
  };
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == depth) {
      out.push_back(seq);
      return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
      if (!can_place(r)) continue;
      ++filled[r];
      seq.push_back(r);
      self(self);
      seq.pop_back();
      --filled[r];
    }
  };
  rec(rec);
  return out;
}

BigInt hook_length_count(const Shape& shape) {
  const std::vector<int> lambda = shape.partition();
  const int rows = static_cast<int>(lambda.size());
  BigInt hooks = 1;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int below = 0;
      for (int k = i + 1; k < rows && lambda[k] > j; ++k) ++below;
      hooks *= (lambda[i] - j - 1) + below + 1;
    }
  return factorial(shape.cell_count()) / hooks;
}

BigInt rectangular_syt_count(int m, int n) {
  BigInt num = factorial(m * n);
  BigInt den = 1;
  for (int j = 0; j < m; ++j) {
    num *= factorial(j);
    den *= factorial(n + j);
  }
  return num / den;
}

}  // namespace rsyt
