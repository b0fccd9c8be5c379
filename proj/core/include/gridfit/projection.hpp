#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "gridfit/feasibility.hpp"
#include "gridfit/sample.hpp"

namespace gridfit {

/// The halfspace { x : normal.x <= offset }.
struct Halfspace {
  Eigen::VectorXd normal;
  double offset = 0;
};

/// Exact Euclidean projection: x itself when inside, otherwise
/// x - ((normal.x - offset) / |normal|^2) * normal.
[[nodiscard]] Eigen::VectorXd project_onto_halfspace(const Eigen::VectorXd& x,
                                                     const Halfspace& h);

struct HalfspaceSystem {
  std::vector<Halfspace> halfspaces;

  [[nodiscard]] std::size_t size() const { return halfspaces.size(); }
  /// Largest Euclidean distance from x to any halfspace (0 when inside all).
  [[nodiscard]] double max_violation(const Eigen::VectorXd& x) const;
};

/// Builds the two level-z constraint systems over the joint coefficient
/// vector (A, B without the pinned entry). For every sample x with value f:
///
///   C+ : f(x) * B.H(x) - A.G(x) <= z * B.H(x)   and   B.H(x) >= delta
///   C- : A.G(x) - f(x) * B.H(x) <= z * B.H(x)   and   B.H(x) >= delta
///
/// Each system therefore has 2N halfspaces. The level set of the weighted
/// residual at z is exactly the intersection of the two systems.
[[nodiscard]] std::pair<HalfspaceSystem, HalfspaceSystem> build_halfspace_systems(
    const SampleSet& samples, const Basis& num_basis, const Basis& den_basis,
    double z, double delta, int pinned_index = 0);

enum class ProjectionScheme {
  cyclic,        // project onto each halfspace in turn
  simultaneous,  // average all projections each sweep
};

struct ProjectionConfig {
  /// Sweeps over the union of halfspaces; 0 means 10 * (number of halfspaces).
  long max_iterations = 0;
  /// Sweep-to-sweep displacement below which the iteration is declared
  /// stalled.
  double stall_tolerance = 1e-12;
  ProjectionScheme scheme = ProjectionScheme::cyclic;
  /// A point violating every halfspace by at most this much is accepted.
  double violation_tolerance = 1e-8;
  /// Undecided exits (stall or sweep cap) with residual violation at or
  /// below this are flagged low-confidence instead of trusted.
  double low_confidence_violation = 1e-3;
};

/// Alternating/averaged projections onto the union of the two systems,
/// started from `start`. Feasible when an iterate violates every halfspace
/// by at most violation_tolerance; otherwise infeasible by stall or by sweep
/// cap, with low_confidence set when the remaining violation is small enough
/// that the verdict should not be trusted on its own.
[[nodiscard]] FeasibilityVerdict solve_feasibility_projection(
    const HalfspaceSystem& c_plus, const HalfspaceSystem& c_minus,
    const Eigen::VectorXd& start, const ProjectionConfig& config = {});

}  // namespace gridfit
