#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>

namespace gridfit {

/// Outcome of a level-set feasibility probe: is there a coefficient pair
/// (A, B) whose weighted residual stays within level z everywhere?
struct FeasibilityVerdict {
  bool feasible = false;
  /// Numerator and denominator coefficients (pinned entry restored) of a
  /// point inside the level set; present for feasible verdicts that carry one.
  std::optional<std::pair<Eigen::VectorXd, Eigen::VectorXd>> witness;
  /// LP backend only: the optimal auxiliary slack; feasible iff <= ~0.
  std::optional<double> u_tilde;
  /// Projection backend only: the final iterate over the joint coefficient
  /// vector, attached as a diagnostic even for infeasible verdicts.
  std::optional<Eigen::VectorXd> iterate;
  /// Set when an iterative backend stalled without a decisive answer; the
  /// caller should re-check with an exact backend.
  bool low_confidence = false;
  std::string detail;
};

}  // namespace gridfit
