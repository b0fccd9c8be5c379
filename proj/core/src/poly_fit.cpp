#include "gridfit/poly_fit.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace gridfit {

LinearProgram assemble_minimax_lp(const SampleSet& samples, const Basis& basis) {
  if (samples.size() == 0) {
    throw std::invalid_argument("fit_polynomial: empty sample set");
  }
  if (basis.size() == 0) {
    throw std::invalid_argument("fit_polynomial: empty basis");
  }
  if (basis.dimension != samples.dimension) {
    throw std::invalid_argument("fit_polynomial: basis dimension " +
                                std::to_string(basis.dimension) +
                                " does not match samples dimension " +
                                std::to_string(samples.dimension));
  }

  const auto n = static_cast<Eigen::Index>(samples.size());
  const auto k = static_cast<Eigen::Index>(basis.size());

  LinearProgram lp;
  lp.objective = Eigen::VectorXd::Zero(k + 1);
  lp.objective[k] = 1.0;  // minimize z
  lp.constraints.resize(2 * n, k + 1);
  lp.rhs.resize(2 * n);

  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::VectorXd g = evaluate_basis(basis, samples.points[i]);
    const double f = samples.values[i];
    lp.constraints.row(2 * i).head(k) = -g.transpose();
    lp.constraints(2 * i, k) = -1.0;
    lp.rhs[2 * i] = -f;
    lp.constraints.row(2 * i + 1).head(k) = g.transpose();
    lp.constraints(2 * i + 1, k) = -1.0;
    lp.rhs[2 * i + 1] = f;
  }
  return lp;
}

PolyFit fit_polynomial(const SampleSet& samples, const Basis& basis,
                       const LpTolerances& tolerances) {
  const auto start = std::chrono::steady_clock::now();
  const LinearProgram lp = assemble_minimax_lp(samples, basis);
  const LpSolution solution = solve(lp, tolerances);

  switch (solution.status) {
    case LpStatus::Optimal:
      break;
    case LpStatus::NumericalFailure:
      throw std::runtime_error("fit_polynomial: LP numerical failure: " +
                               solution.message);
    default:
      // The paired rows force z >= 0 and any coefficient vector is feasible
      // for large z, so these statuses indicate an assembly bug.
      throw std::logic_error(std::string("fit_polynomial: unexpected LP status ") +
                             to_string(solution.status));
  }

  PolyFit fit;
  fit.basis = basis;
  fit.coefficients = solution.x.head(static_cast<Eigen::Index>(basis.size()));
  fit.max_deviation = solution.objective_value;
  fit.solve_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return fit;
}

double evaluate_polynomial(const PolyFit& fit, const Point& x) {
  return fit.coefficients.dot(evaluate_basis(fit.basis, x));
}

ResidualSurface residual_surface(const PolyFit& fit, const SampleSet& samples) {
  ResidualSurface surface;
  surface.residuals.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double r =
        samples.values[i] - evaluate_polynomial(fit, samples.points[i]);
    surface.residuals.push_back(r);
    surface.max_abs = std::max(surface.max_abs, std::abs(r));
  }
  for (std::size_t i = 0; i < surface.residuals.size(); ++i) {
    if (std::abs(surface.residuals[i]) >= surface.max_abs - 1e-6) {
      surface.max_indices.push_back(i);
    }
  }
  return surface;
}

}  // namespace gridfit
