#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

namespace gridfit {

/// Row-major storage so constraint rows are contiguous.
using RowMatrixXd =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// minimize objective . x  subject to  constraints * x <= rhs
/// with x free unless per-variable bounds are given.
struct LinearProgram {
  Eigen::VectorXd objective;   // length d
  RowMatrixXd constraints;     // N x d
  Eigen::VectorXd rhs;         // length N
  // Either empty (free variables) or length d; +-infinity entries allowed.
  Eigen::VectorXd lower_bounds;
  Eigen::VectorXd upper_bounds;

  [[nodiscard]] Eigen::Index num_variables() const { return objective.size(); }
  [[nodiscard]] Eigen::Index num_constraints() const { return rhs.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded, NumericalFailure };

[[nodiscard]] const char* to_string(LpStatus status);

struct LpTolerances {
  double feasibility = 1e-9;
  double optimality = 1e-9;
  double pivot = 1e-10;
};

struct LpSolution {
  LpStatus status = LpStatus::NumericalFailure;
  Eigen::VectorXd x;           // present iff Optimal
  double objective_value = 0;  // meaningful iff Optimal
  long iterations = 0;
  std::string message;         // diagnostics, mainly for NumericalFailure
};

/// Dense two-phase revised simplex. The problem is solved through its dual
/// (min rhs.y s.t. constraints^T y = -objective, y >= 0), so the working
/// basis has at most d rows; that is the cheap shape when N >> d, which is
/// what discretized minimax instances look like. The primal solution is the
/// vector of simplex multipliers at the optimal dual basis.
///
/// Pivoting is deterministic: Dantzig pricing with ties broken by lowest
/// column index, switching to Bland's rule after 10*(N+d) iterations without
/// objective improvement. The total iteration count is capped at 50*(N+d);
/// hitting the cap yields LpStatus::NumericalFailure, never a wrong verdict.
[[nodiscard]] LpSolution solve(const LinearProgram& lp,
                               const LpTolerances& tolerances = {});

struct LpVerification {
  double max_violation = 0;      // max over rows of a.x - b
  Eigen::Index worst_row = -1;
  double objective_error = 0;    // |objective_value - c.x|
  bool pass = false;
};

/// Recomputes constraint violations and the objective for an Optimal
/// solution; pass is true when both are within the given tolerances.
[[nodiscard]] LpVerification verify_solution(const LinearProgram& lp,
                                             const LpSolution& solution,
                                             const LpTolerances& tolerances = {});

/// Plain-text dump for offline debugging. Format:
///   gridfit-lp 1
///   vars <d>
///   rows <N>
///   objective <c_1> ... <c_d>
///   row <a_1> ... <a_d> <b>     (one line per constraint)
/// Variable bounds, when present, are emitted as extra "row" lines.
void write_lp_text(const LinearProgram& lp, std::ostream& out);

}  // namespace gridfit
