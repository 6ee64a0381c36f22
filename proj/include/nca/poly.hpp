#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nca/rational.hpp"

namespace nca {

// Sparse exponent vector: (variable id, exponent), sorted by variable id,
// exponents > 0. Variable ids are positive ints chosen by the caller.
using Monomial = std::vector<std::pair<int, int>>;

int monomial_degree(const Monomial& m);
Monomial monomial_mul(const Monomial& a, const Monomial& b);

// Graded lexicographic order: lower total degree first; on equal degree the
// monomial with the higher exponent on the earliest differing variable is
// the larger one (x1 > x2 > ...).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Multivariate polynomial over Rational. The term map is the canonical form:
// no zero coefficients, keys unique and grlex-ordered.
class ExactPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  ExactPoly() = default;
  explicit ExactPoly(const Rational& c);  // constant
  static ExactPoly variable(int var);
  static ExactPoly term(const Rational& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // total degree; -1 for the zero polynomial
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  // Largest monomial under grlex, with its coefficient. Error on zero.
  std::pair<Monomial, Rational> leading_term() const;

  ExactPoly& operator+=(const ExactPoly& o);
  ExactPoly& operator-=(const ExactPoly& o);
  ExactPoly operator+(const ExactPoly& o) const;
  ExactPoly operator-(const ExactPoly& o) const;
  ExactPoly operator*(const ExactPoly& o) const;
  ExactPoly operator-() const;
  ExactPoly scaled(const Rational& c) const;
  bool operator==(const ExactPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ExactPoly& o) const { return terms_ != o.terms_; }

  void add_term(const Rational& c, const Monomial& m);

  // Substitutes every variable; throws missing-assignment if one is absent.
  Rational eval(const std::map<int, Rational>& assignment) const;

  // Renames variables; ids not in the map are kept. Distinct variables may
  // collapse to one (used when specializing cloned symbol grids).
  ExactPoly rename_variables(const std::map<int, int>& var_map) const;

  std::string str() const;  // debugging aid, deterministic

 private:
  TermMap terms_;
};

// prod_{(i,j) in pairs} (x_i - x_j); throws degenerate-factor when i = j.
ExactPoly difference_product(const std::vector<std::pair<int, int>>& pairs);

}  // namespace nca
