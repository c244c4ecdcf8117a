#include "qsched/lp.hpp"

#include <algorithm>

#include "qsched/errors.hpp"

namespace qsched {

namespace {

// Dense simplex tableau over exact rationals.
//
// Layout: rows 0..m-1 hold the constraints (columns 0..total-1 plus rhs),
// row m holds the reduced-cost row of the active objective. basis[i] is the
// variable basic in row i. Bland's rule everywhere, so no cycling.
class Tableau {
 public:
  Tableau(int m, int total_cols)
      : m_(m), cols_(total_cols), a_(m + 1, std::vector<Rat>(total_cols + 1, Rat(0))),
        basis_(m, -1) {}

  Rat& at(int r, int c) { return a_[r][c]; }
  Rat& rhs(int r) { return a_[r][cols_]; }
  Rat& cost(int c) { return a_[m_][c]; }
  Rat& objective_value() { return a_[m_][cols_]; }
  int basis(int r) const { return basis_[r]; }
  void set_basis(int r, int v) { basis_[r] = v; }

  void pivot(int row, int col) {
    Rat inv = 1 / a_[row][col];
    for (int c = 0; c <= cols_; ++c) a_[row][c] *= inv;
    for (int r = 0; r <= m_; ++r) {
      if (r == row) continue;
      Rat factor = a_[r][col];
      if (factor == 0) continue;
      for (int c = 0; c <= cols_; ++c) a_[r][c] -= factor * a_[row][c];
    }
    basis_[row] = col;
  }

  // Returns false when the LP is unbounded in the entering column's direction.
  // allowed[c] marks columns eligible to enter.
  enum class Step { moved, optimal, unbounded };
  Step bland_step(const std::vector<char>& allowed) {
    int enter = -1;
    for (int c = 0; c < cols_; ++c) {
      if (allowed[c] && a_[m_][c] < 0) {
        enter = c;
        break;
      }
    }
    if (enter == -1) return Step::optimal;
    int leave_row = -1;
    for (int r = 0; r < m_; ++r) {
      if (a_[r][enter] <= 0) continue;
      if (leave_row == -1) {
        leave_row = r;
        continue;
      }
      Rat lhs = a_[r][cols_] * a_[leave_row][enter];
      Rat rhs_v = a_[leave_row][cols_] * a_[r][enter];
      if (lhs < rhs_v || (lhs == rhs_v && basis_[r] < basis_[leave_row])) {
        leave_row = r;
      }
    }
    if (leave_row == -1) return Step::unbounded;
    pivot(leave_row, enter);
    return Step::moved;
  }

  int rows() const { return m_; }
  int cols() const { return cols_; }

 private:
  int m_;
  int cols_;
  std::vector<std::vector<Rat>> a_;
  std::vector<int> basis_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const CancelToken& cancel) {
  const int m = static_cast<int>(lp.rows.size());
  const int n = lp.num_vars;

  // Column layout: [0, n) structural, then one slack/surplus per inequality
  // row, then one artificial per row that needs it.
  std::vector<int> slack_col(m, -1);
  std::vector<int> art_col(m, -1);
  int next = n;
  std::vector<Rat> rhs(m);
  std::vector<int> sign(m, 1);  // multiply row by -1 when rhs < 0
  for (int r = 0; r < m; ++r) {
    rhs[r] = lp.rows[r].rhs;
    sign[r] = (rhs[r] < 0) ? -1 : 1;
  }
  for (int r = 0; r < m; ++r) {
    auto rel = lp.rows[r].rel;
    if (rel != LinearProgram::Rel::eq) slack_col[r] = next++;
  }
  // Effective relation after sign flip decides whether the slack starts basic.
  std::vector<bool> needs_artificial(m, false);
  for (int r = 0; r < m; ++r) {
    auto rel = lp.rows[r].rel;
    bool le_effective;
    if (rel == LinearProgram::Rel::eq) {
      needs_artificial[r] = true;
      continue;
    }
    le_effective = (rel == LinearProgram::Rel::le) == (sign[r] == 1);
    if (!le_effective) needs_artificial[r] = true;
  }
  for (int r = 0; r < m; ++r) {
    if (needs_artificial[r]) art_col[r] = next++;
  }
  const int total = next;
  const bool phase1_needed =
      std::any_of(needs_artificial.begin(), needs_artificial.end(),
                  [](bool b) { return b; });

  Tableau t(m, total);
  for (int r = 0; r < m; ++r) {
    for (const auto& [var, coeff] : lp.rows[r].coeffs) {
      if (var < 0 || var >= n) throw DomainError("LP row references unknown variable");
      t.at(r, var) += Rat(sign[r]) * coeff;
    }
    if (slack_col[r] >= 0) {
      // a.x + s = b for <=, a.x - s = b for >= (after sign normalization).
      bool le_effective =
          (lp.rows[r].rel == LinearProgram::Rel::le) == (sign[r] == 1);
      t.at(r, slack_col[r]) = le_effective ? Rat(1) : Rat(-1);
    }
    if (art_col[r] >= 0) t.at(r, art_col[r]) = 1;
    t.rhs(r) = Rat(sign[r]) * rhs[r];
    t.set_basis(r, art_col[r] >= 0 ? art_col[r] : slack_col[r]);
  }

  std::vector<char> allowed(total, 1);

  std::vector<char> is_art(total, 0);
  for (int r = 0; r < m; ++r) {
    if (art_col[r] >= 0) is_art[art_col[r]] = 1;
  }

  if (phase1_needed) {
    // Phase 1: minimize the sum of artificials. The cost row starts as the
    // reduced costs for the artificial basis.
    for (int r = 0; r < m; ++r) {
      if (art_col[r] < 0) continue;
      for (int c = 0; c < total; ++c) t.cost(c) -= t.at(r, c);
      t.objective_value() -= t.rhs(r);
    }
    for (int c = 0; c < total; ++c) {
      if (is_art[c]) t.cost(c) = 0;
    }

    while (true) {
      cancel.check();
      auto step = t.bland_step(allowed);
      if (step == Tableau::Step::optimal) break;
      if (step == Tableau::Step::unbounded) {
        throw InternalError("phase-1 LP cannot be unbounded");
      }
    }
    if (t.objective_value() != 0) {
      return {LpSolution::Status::infeasible, Rat(0), {}};
    }
    // Drive any artificial still basic (necessarily at zero) out. A row with
    // no nonzero non-artificial coefficient is redundant; its artificial stays
    // basic at zero and is barred from re-entering.
    for (int r = 0; r < m; ++r) {
      if (!is_art[t.basis(r)]) continue;
      for (int c = 0; c < total; ++c) {
        if (!is_art[c] && t.at(r, c) != 0) {
          t.pivot(r, c);
          break;
        }
      }
    }
    for (int c = 0; c < total; ++c) {
      if (is_art[c]) allowed[c] = 0;
    }
  }

  // (Re)install the real objective and price out the current basis.
  for (int c = 0; c < total; ++c) t.cost(c) = 0;
  t.objective_value() = 0;
  for (int c = 0; c < n; ++c) t.cost(c) = lp.objective[c];
  for (int r = 0; r < m; ++r) {
    int b = t.basis(r);
    Rat cb = (b < n) ? lp.objective[b] : Rat(0);
    if (cb == 0) continue;
    for (int c = 0; c < total; ++c) t.cost(c) -= cb * t.at(r, c);
    t.objective_value() -= cb * t.rhs(r);
  }

  while (true) {
    cancel.check();
    auto step = t.bland_step(allowed);
    if (step == Tableau::Step::optimal) break;
    if (step == Tableau::Step::unbounded) {
      return {LpSolution::Status::unbounded, Rat(0), {}};
    }
  }

  LpSolution sol;
  sol.status = LpSolution::Status::optimal;
  sol.x.assign(n, Rat(0));
  for (int r = 0; r < m; ++r) {
    int b = t.basis(r);
    if (b >= 0 && b < n) sol.x[b] = t.rhs(r);
  }
  sol.value = -t.objective_value();
  return sol;
}

}  // namespace qsched
