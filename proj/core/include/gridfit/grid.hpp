#pragma once

#include <vector>

#include "gridfit/basis.hpp"

namespace gridfit {

/// An axis-aligned box [lower[0], upper[0]] x ... x [lower[l-1], upper[l-1]].
struct Domain {
  std::vector<double> lower;
  std::vector<double> upper;

  [[nodiscard]] int dimension() const { return static_cast<int>(lower.size()); }
};

/// Throws std::invalid_argument unless lower/upper have equal nonzero length
/// and lower[i] < upper[i] for every axis.
void validate_domain(const Domain& domain);

/// Regular grid with spacing `step` on every axis. Axis values are computed
/// as lower[i] + k*step (never by repeated addition); the upper endpoint is
/// included when it lies within step*1e-9 of a generated value, and that
/// value is snapped onto the endpoint. Points are ordered lexicographically
/// by axis indices, last axis fastest.
[[nodiscard]] std::vector<Point> generate_grid(const Domain& domain, double step);

}  // namespace gridfit
