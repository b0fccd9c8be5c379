#include "gridfit/projection.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gridfit {

Eigen::VectorXd project_onto_halfspace(const Eigen::VectorXd& x,
                                       const Halfspace& h) {
  if (h.normal.size() != x.size()) {
    throw std::invalid_argument("projection: dimension mismatch");
  }
  const double norm_sq = h.normal.squaredNorm();
  if (norm_sq == 0.0) {
    throw std::invalid_argument("projection: zero normal");
  }
  const double excess = h.normal.dot(x) - h.offset;
  if (excess <= 0.0) return x;
  return x - (excess / norm_sq) * h.normal;
}

double HalfspaceSystem::max_violation(const Eigen::VectorXd& x) const {
  double worst = 0.0;
  for (const auto& h : halfspaces) {
    const double excess = h.normal.dot(x) - h.offset;
    if (excess > 0.0) worst = std::max(worst, excess / h.normal.norm());
  }
  return worst;
}

std::pair<HalfspaceSystem, HalfspaceSystem> build_halfspace_systems(
    const SampleSet& samples, const Basis& num_basis, const Basis& den_basis,
    double z, double delta, int pinned_index) {
  if (num_basis.dimension != samples.dimension ||
      den_basis.dimension != samples.dimension) {
    throw std::invalid_argument("halfspace systems: basis dimension mismatch");
  }
  if (pinned_index < 0 || pinned_index >= static_cast<int>(den_basis.size())) {
    throw std::invalid_argument("halfspace systems: pinned index out of range");
  }
  if (!(delta > 0.0)) {
    throw std::invalid_argument("halfspace systems: delta must be positive");
  }

  const auto p = static_cast<Eigen::Index>(num_basis.size());
  const auto q = static_cast<Eigen::Index>(den_basis.size()) - 1;  // free den coeffs
  const Eigen::Index dim = p + q;

  HalfspaceSystem plus, minus;
  plus.halfspaces.reserve(2 * samples.size());
  minus.halfspaces.reserve(2 * samples.size());

  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Eigen::VectorXd g = evaluate_basis(num_basis, samples.points[i]);
    const Eigen::VectorXd h = evaluate_basis(den_basis, samples.points[i]);
    const double f = samples.values[i];
    const double h_pin = h[pinned_index];
    Eigen::VectorXd h_free(q);
    for (Eigen::Index j = 0, k = 0; j < h.size(); ++j) {
      if (j != pinned_index) h_free[k++] = h[j];
    }

    // f * B.H - A.G <= z * B.H   (the pinned coefficient contributes to rhs)
    Halfspace upper;
    upper.normal = Eigen::VectorXd(dim);
    upper.normal.head(p) = -g;
    upper.normal.tail(q) = (f - z) * h_free;
    upper.offset = -(f - z) * h_pin;
    plus.halfspaces.push_back(std::move(upper));

    // A.G - f * B.H <= z * B.H
    Halfspace lower;
    lower.normal = Eigen::VectorXd(dim);
    lower.normal.head(p) = g;
    lower.normal.tail(q) = -(f + z) * h_free;
    lower.offset = (f + z) * h_pin;
    minus.halfspaces.push_back(std::move(lower));

    // B.H >= delta, present in both systems.
    Halfspace den_floor;
    den_floor.normal = Eigen::VectorXd::Zero(dim);
    den_floor.normal.tail(q) = -h_free;
    den_floor.offset = h_pin - delta;
    plus.halfspaces.push_back(den_floor);
    minus.halfspaces.push_back(std::move(den_floor));
  }
  return {std::move(plus), std::move(minus)};
}

FeasibilityVerdict solve_feasibility_projection(const HalfspaceSystem& c_plus,
                                                const HalfspaceSystem& c_minus,
                                                const Eigen::VectorXd& start,
                                                const ProjectionConfig& config) {
  const std::size_t total = c_plus.size() + c_minus.size();
  if (total == 0) {
    throw std::invalid_argument("projection: no halfspaces");
  }
  const long max_sweeps = config.max_iterations > 0
                              ? config.max_iterations
                              : 10 * static_cast<long>(total);

  Eigen::VectorXd x = start;
  FeasibilityVerdict verdict;

  auto violation = [&](const Eigen::VectorXd& p) {
    return std::max(c_plus.max_violation(p), c_minus.max_violation(p));
  };

  double current_violation = violation(x);
  long sweep = 0;
  for (; sweep < max_sweeps && current_violation > config.violation_tolerance;
       ++sweep) {
    const Eigen::VectorXd before = x;
    if (config.scheme == ProjectionScheme::cyclic) {
      for (const auto& h : c_plus.halfspaces) x = project_onto_halfspace(x, h);
      for (const auto& h : c_minus.halfspaces) x = project_onto_halfspace(x, h);
    } else {
      Eigen::VectorXd sum = Eigen::VectorXd::Zero(x.size());
      for (const auto& h : c_plus.halfspaces) sum += project_onto_halfspace(x, h);
      for (const auto& h : c_minus.halfspaces) sum += project_onto_halfspace(x, h);
      x = sum / static_cast<double>(total);
    }
    current_violation = violation(x);
    const double displacement = (x - before).norm();
    if (displacement < config.stall_tolerance &&
        current_violation > config.violation_tolerance) {
      verdict.feasible = false;
      verdict.low_confidence =
          current_violation <= config.low_confidence_violation;
      verdict.iterate = std::move(x);
      verdict.detail = "stalled after " + std::to_string(sweep + 1) +
                       " sweeps with violation " +
                       std::to_string(current_violation);
      return verdict;
    }
  }

  if (current_violation <= config.violation_tolerance) {
    verdict.feasible = true;
    verdict.iterate = std::move(x);
    verdict.detail = "converged after " + std::to_string(sweep) + " sweeps";
    return verdict;
  }

  verdict.feasible = false;
  verdict.low_confidence = current_violation <= config.low_confidence_violation;
  verdict.iterate = std::move(x);
  verdict.detail = "sweep cap " + std::to_string(max_sweeps) +
                   " reached with violation " + std::to_string(current_violation);
  return verdict;
}

}  // namespace gridfit
