#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gridfit/feasibility.hpp"
#include "gridfit/lp.hpp"
#include "gridfit/projection.hpp"
#include "gridfit/sample.hpp"

namespace gridfit {

/// R(x) = numerator.G(x) / denominator.H(x). The denominator coefficient
/// chosen as the pin during fitting is stored restored to 1.
struct RationalModel {
  Basis num_basis;
  Basis den_basis;
  Eigen::VectorXd numerator;
  Eigen::VectorXd denominator;
};

inline constexpr double kDefaultDenominatorFloor = 1e-6;

/// Throws std::runtime_error (naming the point) when the denominator falls
/// below delta/2.
[[nodiscard]] double evaluate_rational(const RationalModel& model, const Point& x,
                                       double delta = kDefaultDenominatorFloor);

enum class FeasibilityBackend { lp, projection };

struct BisectionConfig {
  double epsilon = 1e-4;            // stop when the bracket width drops below
  double delta = 1e-6;              // pointwise denominator floor
  int max_iterations = 200;
  double coefficient_bound = 1e6;   // box |coefficient| <= bound in the LP
  FeasibilityBackend backend = FeasibilityBackend::lp;
  /// Denominator coefficient fixed at 1. Defaults to the first constant
  /// entry of the denominator basis; required when there is none.
  std::optional<int> pin_denominator_index;
  /// Overrides the computed initial bracket (lower, upper). The upper end
  /// is still verified feasible.
  std::optional<std::pair<double, double>> bracket;
  LpTolerances lp_tolerances;
  ProjectionConfig projection;
};

struct BisectionStep {
  int iteration = 0;
  double z = 0;
  bool feasible = false;
  // Bracket state after applying the verdict.
  double lower = 0;
  double upper = 0;
  double width = 0;
};

struct RationalFit {
  RationalModel model;
  double max_deviation = 0;  // final upper bracket end
  std::pair<double, double> initial_bracket{0, 0};
  std::pair<double, double> bracket{0, 0};
  int iterations = 0;
  std::vector<BisectionStep> trace;
  bool converged = true;
  double min_denominator = 0;
  double delta = kDefaultDenominatorFloor;
  double solve_seconds = 0;
};

/// (0, (max f - min f) / 2). The upper end is feasible because the constant
/// (max+min)/2 witnesses it; that is verified through a feasibility probe
/// and doubled (at most 60 times) if the probe disagrees numerically.
/// Requires a constant entry in both bases unless config.bracket is set.
[[nodiscard]] std::pair<double, double> initial_bracket(
    const SampleSet& samples, const Basis& num_basis, const Basis& den_basis,
    const BisectionConfig& config = {});

/// Level-z feasibility as an LP over (A, B-without-pin, u~):
///   minimize u~ s.t. for every sample x with value f
///     f * B.H - A.G <= z * B.H + u~
///     A.G - f * B.H <= z * B.H + u~
///     B.H >= delta
///   and |coefficient| <= bound for every A and free B entry.
/// 3N + 2(p+q) rows, p+q+1 variables. The level set is nonempty iff the
/// optimum u~ is <= 0; the boxes only keep the program bounded.
[[nodiscard]] LinearProgram assemble_feasibility_lp(
    const SampleSet& samples, const Basis& num_basis, const Basis& den_basis,
    double z, double delta, double coefficient_bound, int pinned_index = 0);

/// Probes level z with the configured backend. With the LP backend the
/// verdict is feasible iff the optimum u~ <= 1e-9 (or the LP is unbounded,
/// which means u~ -> -infinity).
[[nodiscard]] FeasibilityVerdict check_feasibility(const SampleSet& samples,
                                                   const Basis& num_basis,
                                                   const Basis& den_basis, double z,
                                                   const BisectionConfig& config = {});

/// Bisection on the deviation level. The bracket is kept as (lower, width)
/// with the width halved exactly each iteration; the probe level is
/// lower + width/2 and a feasible witness becomes the incumbent model.
/// Low-confidence projection verdicts are re-checked with the LP backend.
[[nodiscard]] RationalFit fit_rational(const SampleSet& samples,
                                       const Basis& num_basis,
                                       const Basis& den_basis,
                                       const BisectionConfig& config = {});

}  // namespace gridfit
