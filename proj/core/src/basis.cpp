#include "gridfit/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gridfit/sample.hpp"

namespace gridfit {

int Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

double Monomial::operator()(const Point& x) const {
  if (x.size() != exponents.size()) {
    throw std::invalid_argument("monomial: point dimension " +
                                std::to_string(x.size()) + " does not match " +
                                std::to_string(exponents.size()));
  }
  double value = 1.0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    for (int e = 0; e < exponents[i]; ++e) value *= x[i];
  }
  return value;
}

std::string monomial_label(const Monomial& m) {
  const std::size_t l = m.exponents.size();
  if (m.degree() == 0) return "1";
  static const char* kShortNames[] = {"x", "y", "z"};
  std::string out;
  for (std::size_t i = 0; i < l; ++i) {
    const int e = m.exponents[i];
    if (e == 0) continue;
    if (!out.empty() && l > 3) out += "*";
    out += (l <= 3) ? kShortNames[i] : "x" + std::to_string(i + 1);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ==== BasisFunction ========================================================

BasisFunction BasisFunction::from_monomial(Monomial m) {
  BasisFunction f;
  f.constant_ = m.degree() == 0;
  f.label_ = monomial_label(m);
  f.monomial_ = std::move(m);
  return f;
}

BasisFunction BasisFunction::from_registry(const std::string& id,
                                           int dimension) {
  BasisFunction f;
  f.fn_ = lookup_function(id, dimension);
  f.label_ = id;
  f.constant_ = id.rfind("constant:", 0) == 0;
  return f;
}

double BasisFunction::operator()(const Point& x) const {
  return monomial_ ? (*monomial_)(x) : fn_(x);
}

const Monomial* BasisFunction::monomial() const {
  return monomial_ ? &*monomial_ : nullptr;
}

std::optional<std::size_t> Basis::constant_index() const {
  for (std::size_t i = 0; i < functions.size(); ++i) {
    if (functions[i].is_constant()) return i;
  }
  return std::nullopt;
}

// ==== enumeration ==========================================================

namespace {

// All exponent vectors of total degree exactly `degree`, descending
// lexicographic (first variable's exponent highest first).
void append_degree_block_grlex(int dimension, int degree,
                               std::vector<std::vector<int>>& out) {
  std::vector<int> current(dimension, 0);
  // Recursive descent over positions; highest exponent first at each slot.
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == dimension - 1) {
      current[pos] = remaining;
      out.push_back(current);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current[pos] = e;
      rec(pos + 1, remaining - e);
    }
  };
  rec(0, degree);
}

void append_degree_block_paper2d(int degree,
                                 std::vector<std::vector<int>>& out) {
  if (degree == 0) {
    out.push_back({0, 0});
    return;
  }
  out.push_back({degree, 0});
  out.push_back({0, degree});
  for (int i = degree - 1; i >= 1; --i) out.push_back({i, degree - i});
}

}  // namespace

Basis enumerate_monomials(int dimension, int max_degree,
                          MonomialOrdering ordering) {
  if (dimension < 1) {
    throw std::invalid_argument("enumerate_monomials: dimension must be >= 1");
  }
  if (max_degree < 0) {
    throw std::invalid_argument("enumerate_monomials: max_degree must be >= 0");
  }
  if (ordering == MonomialOrdering::paper2d && dimension != 2) {
    throw std::invalid_argument(
        "enumerate_monomials: paper2d ordering requires dimension == 2");
  }

  std::vector<std::vector<int>> exponents;
  for (int d = 0; d <= max_degree; ++d) {
    if (ordering == MonomialOrdering::grlex) {
      append_degree_block_grlex(dimension, d, exponents);
    } else {
      append_degree_block_paper2d(d, exponents);
    }
  }

  Basis basis;
  basis.dimension = dimension;
  basis.functions.reserve(exponents.size());
  for (auto& e : exponents) {
    basis.functions.push_back(BasisFunction::from_monomial({std::move(e)}));
  }
  return basis;
}

Basis truncate_basis(const Basis& basis, std::size_t count) {
  if (count > basis.size()) {
    throw std::invalid_argument("truncate_basis: count " +
                                std::to_string(count) + " exceeds basis size " +
                                std::to_string(basis.size()));
  }
  Basis out;
  out.dimension = basis.dimension;
  out.functions.assign(basis.functions.begin(), basis.functions.begin() + count);
  return out;
}

// ==== spec parsing =========================================================

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

Monomial parse_exponent_tuple(const std::string& item, int dimension) {
  if (item.back() != ')') {
    throw std::invalid_argument("basis spec: missing ')' in '" + item + "'");
  }
  std::vector<int> exps;
  std::stringstream body(item.substr(1, item.size() - 2));
  std::string field;
  while (std::getline(body, field, ',')) {
    field = trim(field);
    std::size_t consumed = 0;
    int e = 0;
    try {
      e = std::stoi(field, &consumed);
    } catch (const std::exception&) {
      throw std::invalid_argument("basis spec: bad exponent '" + field + "'");
    }
    if (consumed != field.size() || e < 0) {
      throw std::invalid_argument("basis spec: bad exponent '" + field + "'");
    }
    exps.push_back(e);
  }
  if (static_cast<int>(exps.size()) != dimension) {
    throw std::invalid_argument("basis spec: tuple '" + item + "' has " +
                                std::to_string(exps.size()) +
                                " exponents, expected " +
                                std::to_string(dimension));
  }
  return Monomial{std::move(exps)};
}

}  // namespace

Basis parse_basis_spec(const std::string& spec, int dimension) {
  Basis basis;
  basis.dimension = dimension;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    if (item.front() == '(') {
      basis.functions.push_back(
          BasisFunction::from_monomial(parse_exponent_tuple(item, dimension)));
    } else {
      basis.functions.push_back(BasisFunction::from_registry(item, dimension));
    }
  }
  if (basis.functions.empty()) {
    throw std::invalid_argument("basis spec: no entries in '" + spec + "'");
  }
  return basis;
}

Eigen::VectorXd evaluate_basis(const Basis& basis, const Point& x) {
  if (static_cast<int>(x.size()) != basis.dimension) {
    throw std::invalid_argument("evaluate_basis: point dimension mismatch");
  }
  Eigen::VectorXd values(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    values[static_cast<Eigen::Index>(i)] = basis.functions[i](x);
  }
  return values;
}

}  // namespace gridfit
