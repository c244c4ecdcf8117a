#pragma once

#include <utility>
#include <vector>

#include "qsched/cancel.hpp"
#include "qsched/rational.hpp"

namespace qsched {

/// A linear program in the form: minimize c.x subject to the given rows and
/// x >= 0. Solved exactly over the rationals.
struct LinearProgram {
  enum class Rel { le, ge, eq };

  struct Row {
    std::vector<std::pair<int, Rat>> coeffs;  // (variable, coefficient)
    Rel rel = Rel::le;
    Rat rhs = 0;
  };

  int num_vars = 0;
  std::vector<Rat> objective;  // size num_vars
  std::vector<Row> rows;

  int add_var(const Rat& cost) {
    objective.push_back(cost);
    return num_vars++;
  }
  void add_row(Row row) { rows.push_back(std::move(row)); }
};

struct LpSolution {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::optimal;
  Rat value = 0;
  std::vector<Rat> x;
};

/// Two-phase primal simplex with Bland's rule, dense rational tableau.
/// Deterministic: identical inputs produce the identical optimal basis.
LpSolution solve_lp(const LinearProgram& lp, const CancelToken& cancel = {});

}  // namespace qsched
