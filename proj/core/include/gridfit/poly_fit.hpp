#pragma once

#include <vector>

#include "gridfit/lp.hpp"
#include "gridfit/sample.hpp"

namespace gridfit {

/// Best uniform approximation by a linear combination of basis functions.
struct PolyFit {
  Basis basis;
  Eigen::VectorXd coefficients;
  double max_deviation = 0;
  double solve_seconds = 0;
};

/// Epigraph form of  min_a max_i |f(x_i) - a.g(x_i)|  over the samples.
/// Variables are the k coefficients followed by the level z; each sample
/// contributes the pair of rows
///    -a.g(x) - z <= -f(x)
///     a.g(x) - z <=  f(x)
/// in sample order, plus-row first. 2N rows, k+1 variables.
[[nodiscard]] LinearProgram assemble_minimax_lp(const SampleSet& samples,
                                                const Basis& basis);

/// Solves the assembled program. max_deviation is the optimal level z.
/// Throws std::runtime_error when the solver reports a numerical failure and
/// std::logic_error on statuses the construction rules out.
[[nodiscard]] PolyFit fit_polynomial(const SampleSet& samples, const Basis& basis,
                                     const LpTolerances& tolerances = {});

[[nodiscard]] double evaluate_polynomial(const PolyFit& fit, const Point& x);

struct ResidualSurface {
  std::vector<double> residuals;  // f(x_i) - p(x_i), sample order
  double max_abs = 0;
  std::vector<std::size_t> max_indices;  // residuals within 1e-6 of max_abs
};

[[nodiscard]] ResidualSurface residual_surface(const PolyFit& fit,
                                               const SampleSet& samples);

}  // namespace gridfit
