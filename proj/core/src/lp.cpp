#include "toric/lp.hpp"

#include <optional>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

void LinearProgram::add(RationalVector coefficients, Relation relation,
                        Rational rhs) {
  constraints.push_back({std::move(coefficients), std::move(rhs), relation});
}

void LinearProgram::add(const IntVector& coefficients, Relation relation,
                        std::int64_t rhs) {
  add(to_rational(coefficients), relation, make_rational(rhs));
}

namespace {

// Dense simplex tableau. Column `cols` holds the right-hand side.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), a_(rows, RationalVector(cols + 1)), basis_(rows) {}

  Rational& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  Rational& rhs(std::size_t i) { return a_[i][cols_]; }
  std::size_t rows() const { return a_.size(); }
  std::size_t& basis(std::size_t i) { return basis_[i]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a_[r][c];
    for (auto& x : a_[r]) x /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // Maximizes cost . x over columns with allowed[j]; Bland's rule throughout.
  LpStatus maximize(const RationalVector& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols_ && !entering; ++j) {
        if (!allowed[j]) continue;
        Rational reduced = -cost[j];
        for (std::size_t i = 0; i < a_.size(); ++i)
          if (a_[i][j] != 0) reduced += cost[basis_[i]] * a_[i][j];
        if (reduced < 0) entering = j;
      }
      if (!entering) return LpStatus::Optimal;
      const std::size_t c = *entering;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i][c] <= 0) continue;
        Rational ratio = a_[i][cols_] / a_[i][c];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return LpStatus::Unbounded;
      pivot(*leaving, c);
    }
  }

  Rational value_of(std::size_t column) const {
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (basis_[i] == column) return a_[i][cols_];
    return 0;
  }

 private:
  std::size_t cols_;
  std::vector<RationalVector> a_;
  std::vector<std::size_t> basis_;
};

struct StandardRow {
  RationalVector coefficients;  // over original variables
  Rational rhs;
  bool equality = false;
};

void check_dimensions(const LinearProgram& lp) {
  for (const auto& c : lp.constraints)
    if (c.coefficients.size() != lp.dimension)
      throw DimensionMismatch("lp: constraint of length " + std::to_string(c.coefficients.size()) +
                              " in dimension " + std::to_string(lp.dimension));
  if (!lp.nonnegative.empty() && lp.nonnegative.size() != lp.dimension)
    throw DimensionMismatch("lp: sign restriction vector has wrong length");
}

// Core solver over rows of the form a.x <= b or a.x = b.
LpSolution solve(std::size_t dim, const std::vector<bool>& nonneg,
                 const std::vector<StandardRow>& rows, const RationalVector& objective) {
  // Column layout: original variables (free ones split into +/-), then one
  // slack per inequality, then one artificial per row.
  std::vector<std::size_t> pos_col(dim), neg_col(dim, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < dim; ++j) {
    pos_col[j] = ncols++;
    if (nonneg.empty() || !nonneg[j]) neg_col[j] = ncols++;
  }
  std::vector<std::size_t> slack_col(rows.size(), SIZE_MAX);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].equality) slack_col[i] = ncols++;
  const std::size_t structural = ncols;
  const std::size_t total = structural + rows.size();

  Tableau t(rows.size(), total);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool flip = rows[i].rhs < 0;
    auto put = [&](std::size_t col, const Rational& v) { t.at(i, col) = flip ? Rational(-v) : v; };
    for (std::size_t j = 0; j < dim; ++j) {
      const Rational& v = rows[i].coefficients[j];
      if (v == 0) continue;
      put(pos_col[j], v);
      if (neg_col[j] != SIZE_MAX) put(neg_col[j], -v);
    }
    if (slack_col[i] != SIZE_MAX) put(slack_col[i], 1);
    t.rhs(i) = flip ? Rational(-rows[i].rhs) : rows[i].rhs;
    t.at(i, structural + i) = 1;
    t.basis(i) = structural + i;
  }

  // Phase I: maximize -(sum of artificials).
  RationalVector phase1(total, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) phase1[structural + i] = -1;
  std::vector<bool> all(total, true);
  t.maximize(phase1, all);
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.basis(i) >= structural) infeasibility += t.rhs(i);
  if (infeasibility != 0) return {LpStatus::Infeasible, {}, 0};

  // Drive zero-valued artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows();) {
    if (t.basis(i) < structural) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < structural && !col; ++j)
      if (t.at(i, j) != 0) col = j;
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.drop_row(i);
    }
  }

  RationalVector cost(total, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    cost[pos_col[j]] = objective[j];
    if (neg_col[j] != SIZE_MAX) cost[neg_col[j]] = -objective[j];
  }
  std::vector<bool> allowed(total, false);
  for (std::size_t j = 0; j < structural; ++j) allowed[j] = true;
  LpSolution out;
  out.status = t.maximize(cost, allowed);
  out.point.resize(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    out.point[j] = t.value_of(pos_col[j]);
    if (neg_col[j] != SIZE_MAX) out.point[j] -= t.value_of(neg_col[j]);
  }
  out.value = 0;
  for (std::size_t j = 0; j < dim; ++j) out.value += objective[j] * out.point[j];
  return out;
}

StandardRow to_standard(const LpConstraint& c, bool& strict) {
  StandardRow row{c.coefficients, c.rhs, false};
  strict = false;
  switch (c.relation) {
    case Relation::Less:
      strict = true;
      break;
    case Relation::LessEqual:
      break;
    case Relation::Equal:
      row.equality = true;
      break;
    case Relation::Greater:
      strict = true;
      [[fallthrough]];
    case Relation::GreaterEqual:
      for (auto& v : row.coefficients) v = -v;
      row.rhs = -row.rhs;
      break;
  }
  return row;
}

}  // namespace

Feasibility lp_feasible(const LinearProgram& program) {
  check_dimensions(program);
  const std::size_t dim = program.dimension;
  std::vector<StandardRow> rows;
  std::vector<bool> strict_rows;
  bool any_strict = false;
  for (const auto& c : program.constraints) {
    bool strict = false;
    rows.push_back(to_standard(c, strict));
    strict_rows.push_back(strict);
    any_strict = any_strict || strict;
  }

  if (!any_strict) {
    LpSolution s = solve(dim, program.nonnegative, rows, RationalVector(dim, 0));
    if (s.status == LpStatus::Infeasible) return {};
    return {true, std::move(s.point)};
  }

  // Extra variable t >= 0 absorbs the strict margin; t <= 1 keeps it bounded.
  std::vector<bool> nonneg = program.nonnegative;
  if (nonneg.empty()) nonneg.assign(dim, false);
  nonneg.push_back(true);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].coefficients.push_back(strict_rows[i] ? 1 : 0);
  }
  RationalVector cap(dim + 1, 0);
  cap[dim] = 1;
  rows.push_back({cap, 1, false});
  LpSolution s = solve(dim + 1, nonneg, rows, cap);
  if (s.status != LpStatus::Optimal || s.value <= 0) return {};
  s.point.pop_back();
  return {true, std::move(s.point)};
}

Feasibility lp_feasible(std::size_t dim, std::vector<LpConstraint> constraints) {
  LinearProgram lp(dim);
  lp.constraints = std::move(constraints);
  return lp_feasible(lp);
}

LpSolution lp_maximize(const LinearProgram& program,
                       const RationalVector& objective) {
  check_dimensions(program);
  if (objective.size() != program.dimension)
    throw DimensionMismatch("lp: objective has wrong length");
  std::vector<StandardRow> rows;
  for (const auto& c : program.constraints) {
    bool strict = false;
    rows.push_back(to_standard(c, strict));
    if (strict) throw std::invalid_argument("lp_maximize: strict constraints are not supported");
  }
  return solve(program.dimension, program.nonnegative, rows, objective);
}

}  // namespace toric
