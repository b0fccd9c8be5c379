#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gridfit {

/// A point in R^l.
using Point = std::vector<double>;

// ==== monomials ============================================================

/// A multivariate monomial x1^e1 * ... * xl^el.
struct Monomial {
  std::vector<int> exponents;

  [[nodiscard]] int degree() const;
  [[nodiscard]] double operator()(const Point& x) const;
};

/// Human-readable label: "1", "x", "x^2y", "x1^3*x4", ...
/// Variables are named x,y,z for up to three dimensions, x1..xl otherwise.
[[nodiscard]] std::string monomial_label(const Monomial& m);

// ==== basis functions ======================================================

/// One element of an approximation basis: either a monomial or a scalar
/// function taken from the registry (see sample.hpp).
class BasisFunction {
 public:
  static BasisFunction from_monomial(Monomial m);
  static BasisFunction from_registry(const std::string& id, int dimension);

  [[nodiscard]] double operator()(const Point& x) const;
  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] bool is_constant() const { return constant_; }
  /// Non-null only for monomial-backed entries.
  [[nodiscard]] const Monomial* monomial() const;

 private:
  BasisFunction() = default;

  std::optional<Monomial> monomial_;
  std::function<double(const Point&)> fn_;
  std::string label_;
  bool constant_ = false;
};

/// An ordered list of basis functions over R^dimension.
struct Basis {
  int dimension = 0;
  std::vector<BasisFunction> functions;

  [[nodiscard]] std::size_t size() const { return functions.size(); }
  /// Index of the first constant entry, if any.
  [[nodiscard]] std::optional<std::size_t> constant_index() const;
};

// ==== construction =========================================================

enum class MonomialOrdering {
  /// Ascending total degree; within a degree, descending lexicographic on
  /// exponent vectors (x^2 before xy before y^2).
  grlex,
  /// Two-dimensional ordering that lists each degree block as the pure
  /// x power, the pure y power, then mixed terms by descending x exponent
  /// (x^3, y^3, x^2y, xy^2). Requires dimension == 2.
  paper2d,
};

/// All monomials in `dimension` variables of total degree <= max_degree,
/// in the requested ordering. The count is C(dimension + max_degree, dimension).
[[nodiscard]] Basis enumerate_monomials(int dimension, int max_degree,
                                        MonomialOrdering ordering);

/// First `count` entries of `basis`; order is preserved.
[[nodiscard]] Basis truncate_basis(const Basis& basis, std::size_t count);

/// Parses a semicolon-separated list of basis entries. Each entry is either
/// an exponent tuple "(e1,...,el)" or a registered function identifier.
/// Example: "(0,0);(1,0);(0,1);(2,0);(0,2);(1,1)".
[[nodiscard]] Basis parse_basis_spec(const std::string& spec, int dimension);

/// Evaluates every basis function at x; result has basis.size() entries.
[[nodiscard]] Eigen::VectorXd evaluate_basis(const Basis& basis, const Point& x);

}  // namespace gridfit
