#include "gridfit/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gridfit {

void validate_domain(const Domain& domain) {
  if (domain.lower.empty() || domain.lower.size() != domain.upper.size()) {
    throw std::invalid_argument("domain: lower/upper must have equal nonzero length");
  }
  for (std::size_t i = 0; i < domain.lower.size(); ++i) {
    if (!(domain.lower[i] < domain.upper[i])) {
      throw std::invalid_argument("domain: axis " + std::to_string(i) +
                                  " has lower >= upper");
    }
  }
}

namespace {

constexpr double kEndpointSlack = 1e-9;  // relative to step

std::vector<double> axis_values(double lower, double upper, double step) {
  const double span = upper - lower;
  if (step > span * (1.0 + kEndpointSlack)) {
    throw std::invalid_argument("grid: step " + std::to_string(step) +
                                " exceeds axis span " + std::to_string(span));
  }
  const auto last = static_cast<long long>(std::floor(span / step + kEndpointSlack));
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(last) + 1);
  for (long long k = 0; k <= last; ++k) {
    double v = lower + static_cast<double>(k) * step;
    if (std::abs(v - upper) <= step * kEndpointSlack) v = upper;
    values.push_back(v);
  }
  return values;
}

}  // namespace

std::vector<Point> generate_grid(const Domain& domain, double step) {
  validate_domain(domain);
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("grid: step must be positive and finite");
  }

  const int l = domain.dimension();
  std::vector<std::vector<double>> axes;
  axes.reserve(static_cast<std::size_t>(l));
  std::size_t total = 1;
  for (int i = 0; i < l; ++i) {
    axes.push_back(axis_values(domain.lower[i], domain.upper[i], step));
    total *= axes.back().size();
  }

  std::vector<Point> points;
  points.reserve(total);
  std::vector<std::size_t> index(static_cast<std::size_t>(l), 0);
  Point current(static_cast<std::size_t>(l));
  while (true) {
    for (int i = 0; i < l; ++i) current[i] = axes[i][index[i]];
    points.push_back(current);
    // Odometer increment, last axis fastest.
    int axis = l - 1;
    while (axis >= 0) {
      if (++index[axis] < axes[axis].size()) break;
      index[axis] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return points;
}

}  // namespace gridfit
