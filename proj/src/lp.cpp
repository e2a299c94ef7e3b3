#include "rsyt/lp.hpp"

#include <stdexcept>

#include "rsyt/error.hpp"

namespace rsyt::lp {

namespace {

// Dense dictionary over the columns
//   [ z_0 .. z_{d-1} | t | s_0 .. s_{S-1} | a_0 .. a_{E-1} | s_t ]
// and the rows
//   strict i   :  -S_i z + t + s_i = 0
//   equality e :   E_e z + a_e     = 0     (a_e is a tracker, never enters)
//   margin     :   t + s_t         = 1
class Dictionary {
 public:
  explicit Dictionary(const StrictSystem& sys)
      : d_(sys.num_vars), s_(sys.strict.size()), e_(sys.equalities.size()) {
    cols_ = d_ + 1 + s_ + e_ + 1;
    rows_ = s_ + e_ + 1;
    a_.assign(rows_, std::vector<Rational>(cols_));
    b_.assign(rows_, Rational(0));
    basis_.resize(rows_);
    free_row_.assign(rows_, false);
    obj_.assign(cols_, Rational(0));

    for (std::size_t i = 0; i < s_; ++i) {
      const Row& r = sys.strict[i];
      for (std::size_t j = 0; j < d_; ++j) a_[i][j] = -r[j];
      a_[i][t_col()] = 1;
      a_[i][slack_col(i)] = 1;
      basis_[i] = slack_col(i);
    }
    for (std::size_t e = 0; e < e_; ++e) {
      const std::size_t i = s_ + e;
      const Row& r = sys.equalities[e];
      for (std::size_t j = 0; j < d_; ++j) a_[i][j] = r[j];
      a_[i][tracker_col(e)] = 1;
      basis_[i] = tracker_col(e);
    }
    const std::size_t last = rows_ - 1;
    a_[last][t_col()] = 1;
    a_[last][cols_ - 1] = 1;
    b_[last] = 1;
    basis_[last] = cols_ - 1;

    obj_[t_col()] = 1;
  }

  void eliminate_free_variables() {
    std::vector<bool> basic(d_, false);
    auto try_row = [&](std::size_t i) {
      for (std::size_t j = 0; j < d_; ++j) {
        if (basic[j] || a_[i][j] == 0) continue;
        pivot(i, j);
        basic[j] = true;
        free_row_[i] = true;
        return;
      }
    };
    // Equality rows first: they carry no slack, so a free variable must
    // absorb each one that is not identically zero.
    for (std::size_t e = 0; e < e_; ++e) try_row(s_ + e);
    for (std::size_t i = 0; i < s_; ++i) try_row(i);
  }

  void maximize() {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = t_col(); j < cols_; ++j) {
        if (is_tracker(j)) continue;
        if (obj_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return;

      std::size_t leave = rows_;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (free_row_[i] || a_[i][enter] <= 0) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (leave == rows_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows_) throw std::logic_error("margin LP reported unbounded");
      pivot(leave, enter);
    }
  }

  Rational value_of(std::size_t col) const {
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] == col) return b_[i];
    return Rational(0);
  }

  std::size_t t_col() const { return d_; }
  std::size_t slack_col(std::size_t i) const { return d_ + 1 + i; }
  std::size_t tracker_col(std::size_t e) const { return d_ + 1 + s_ + e; }
  bool is_tracker(std::size_t j) const { return j >= d_ + 1 + s_ && j < d_ + 1 + s_ + e_; }
  const Rational& reduced_cost(std::size_t j) const { return obj_[j]; }

 private:
  void pivot(std::size_t p, std::size_t q) {
    std::vector<Rational>& prow = a_[p];
    const Rational piv = prow[q];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < cols_; ++j)
      if (prow[j] != 0) {
        prow[j] /= piv;
        nz.push_back(j);
      }
    b_[p] /= piv;

    auto eliminate = [&](std::vector<Rational>& row, Rational& rhs) {
      if (row[q] == 0) return;
      const Rational f = row[q];
      for (std::size_t j : nz) row[j] -= f * prow[j];
      rhs -= f * b_[p];
    };
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != p) eliminate(a_[i], b_[i]);
    eliminate(obj_, objective_);
    basis_[p] = q;
  }

  std::size_t d_, s_, e_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
  std::vector<bool> free_row_;
  std::vector<Rational> obj_;
  Rational objective_ = 0;

 public:
  std::size_t rows() const { return rows_; }
  std::size_t basis(std::size_t i) const { return basis_[i]; }
  const Rational& rhs(std::size_t i) const { return b_[i]; }
};

}  // namespace

Rational dot(const Row& row, const std::vector<Rational>& z) {
  Rational acc = 0;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) acc += row[j] * z[j];
  return acc;
}

bool is_infeasibility_certificate(const StrictSystem& system, const std::vector<Rational>& lambda,
                                  const std::vector<Rational>& mu) {
  if (lambda.size() != system.strict.size() || mu.size() != system.equalities.size()) return false;
  bool any_positive = false;
  for (const auto& l : lambda) {
    if (l < 0) return false;
    if (l > 0) any_positive = true;
  }
  if (!any_positive) return false;
  for (std::size_t j = 0; j < system.num_vars; ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i)
      if (system.strict[i][j] != 0) acc += lambda[i] * system.strict[i][j];
    for (std::size_t e = 0; e < mu.size(); ++e)
      if (system.equalities[e][j] != 0) acc += mu[e] * system.equalities[e][j];
    if (acc != 0) return false;
  }
  return true;
}

StrictResult solve_strict(const StrictSystem& system) {
  for (const auto& r : system.strict)
    if (r.size() != system.num_vars) throw Error(ErrorKind::DimensionMismatch, "strict row has wrong length");
  for (const auto& r : system.equalities)
    if (r.size() != system.num_vars) throw Error(ErrorKind::DimensionMismatch, "equality row has wrong length");

  Dictionary dict(system);
  dict.eliminate_free_variables();
  dict.maximize();

  StrictResult result;
  const Rational t_star = dict.value_of(dict.t_col());
  if (t_star > 0) {
    result.feasible = true;
    result.margin = t_star;
    result.point.assign(system.num_vars, Rational(0));
    for (std::size_t i = 0; i < dict.rows(); ++i)
      if (dict.basis(i) < system.num_vars) result.point[dict.basis(i)] = dict.rhs(i);
    for (const auto& r : system.strict)
      if (dot(r, result.point) < t_star) throw std::logic_error("margin LP point violates a strict row");
    for (const auto& r : system.equalities)
      if (dot(r, result.point) != 0) throw std::logic_error("margin LP point violates an equality row");
    return result;
  }

  // Dual values are the negated reduced costs of the identity columns.
  result.strict_multipliers.resize(system.strict.size());
  for (std::size_t i = 0; i < system.strict.size(); ++i)
    result.strict_multipliers[i] = -dict.reduced_cost(dict.slack_col(i));
  result.equality_multipliers.resize(system.equalities.size());
  for (std::size_t e = 0; e < system.equalities.size(); ++e)
    result.equality_multipliers[e] = dict.reduced_cost(dict.tracker_col(e));
  if (!is_infeasibility_certificate(system, result.strict_multipliers, result.equality_multipliers))
    throw std::logic_error("margin LP produced an invalid infeasibility certificate");
  return result;
}

}  // namespace rsyt::lp
