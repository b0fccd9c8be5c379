#include "gridfit/sample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gridfit {

double SampleSet::min_value() const {
  if (values.empty()) throw std::logic_error("sample set is empty");
  return *std::min_element(values.begin(), values.end());
}

double SampleSet::max_value() const {
  if (values.empty()) throw std::logic_error("sample set is empty");
  return *std::max_element(values.begin(), values.end());
}

namespace {

void require_dimension(const std::string& id, int dimension, int expected) {
  if (dimension != expected) {
    throw std::invalid_argument("function '" + id + "' requires dimension " +
                                std::to_string(expected) + ", got " +
                                std::to_string(dimension));
  }
}

}  // namespace

std::function<double(const Point&)> lookup_function(const std::string& id,
                                                    int dimension) {
  if (dimension < 1) {
    throw std::invalid_argument("lookup_function: dimension must be >= 1");
  }
  if (id == "sqrt_abs_sum") {
    require_dimension(id, dimension, 2);
    return [](const Point& p) { return std::sqrt(std::abs(p[0]) + std::abs(p[1])); };
  }
  if (id == "abs_x") {
    return [](const Point& p) { return std::abs(p[0]); };
  }
  if (id == "runge2d") {
    require_dimension(id, dimension, 2);
    return [](const Point& p) { return 1.0 / (1.0 + p[0] * p[0] + p[1] * p[1]); };
  }
  if (id.rfind("constant:", 0) == 0) {
    const std::string body = id.substr(9);
    std::size_t consumed = 0;
    double v = 0.0;
    try {
      v = std::stod(body, &consumed);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad constant in '" + id + "'");
    }
    if (consumed != body.size() || !std::isfinite(v)) {
      throw std::invalid_argument("bad constant in '" + id + "'");
    }
    return [v](const Point&) { return v; };
  }
  throw std::invalid_argument("unknown function '" + id + "'");
}

SampleSet sample_callable(const std::function<double(const Point&)>& fn,
                          std::vector<Point> points) {
  if (points.empty()) {
    throw std::invalid_argument("sample: point list is empty");
  }
  const std::size_t dim = points.front().size();
  if (dim == 0) {
    throw std::invalid_argument("sample: zero-dimensional points");
  }
  SampleSet set;
  set.dimension = static_cast<int>(dim);
  set.values.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim) {
      throw std::invalid_argument("sample: ragged point list at index " +
                                  std::to_string(i));
    }
    const double v = fn(points[i]);
    if (!std::isfinite(v)) {
      throw std::invalid_argument("sample: non-finite value at point index " +
                                  std::to_string(i));
    }
    set.values.push_back(v);
  }
  set.points = std::move(points);
  return set;
}

SampleSet sample_function(const std::string& id, std::vector<Point> points) {
  if (points.empty()) {
    throw std::invalid_argument("sample: point list is empty");
  }
  const auto fn = lookup_function(id, static_cast<int>(points.front().size()));
  return sample_callable(fn, std::move(points));
}

}  // namespace gridfit
