#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gridfit/basis.hpp"

namespace gridfit {

/// A target function sampled on a finite point set. Every point has length
/// `dimension` and every value is finite.
struct SampleSet {
  int dimension = 0;
  std::vector<Point> points;
  std::vector<double> values;

  [[nodiscard]] std::size_t size() const { return points.size(); }
  [[nodiscard]] double min_value() const;
  [[nodiscard]] double max_value() const;
};

/// Looks up a registered scalar function on R^dimension.
///
/// Registered identifiers:
///   sqrt_abs_sum   sqrt(|x| + |y|), dimension 2
///   abs_x          |x1|, any dimension
///   runge2d        1 / (1 + x^2 + y^2), dimension 2
///   constant:<v>   the constant v, any dimension
///
/// Throws std::invalid_argument for unknown identifiers or a dimension the
/// function does not support.
[[nodiscard]] std::function<double(const Point&)> lookup_function(
    const std::string& id, int dimension);

/// Samples a registered function over `points` (all of equal, nonzero
/// length). Throws std::invalid_argument on ragged points, an empty list,
/// or a non-finite sampled value.
[[nodiscard]] SampleSet sample_function(const std::string& id,
                                        std::vector<Point> points);

/// Same as sample_function but with an arbitrary callable.
[[nodiscard]] SampleSet sample_callable(
    const std::function<double(const Point&)>& fn, std::vector<Point> points);

}  // namespace gridfit
