#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nca/poly.hpp"
#include "nca/rational.hpp"

namespace nca {

class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

// Rank by fraction-free (Bareiss) elimination on a denominator-cleared copy.
int rank(const ExactMatrix& m);

// One exact solution of A x = b (free variables set to 0), or nullopt when
// inconsistent. Throws dimension-mismatch when |b| != rows.
std::optional<std::vector<Rational>> solve(const ExactMatrix& a,
                                           const std::vector<Rational>& b);

// Incremental row echelonization of a family of sparse polynomials, treating
// each polynomial as a vector over the monomial basis. Supports rank queries
// and expressing further polynomials as exact linear combinations of the
// inserted family.
class PolyEchelon {
 public:
  explicit PolyEchelon(bool track_combinations = false)
      : track_(track_combinations) {}

  // Returns true when the polynomial enlarges the span.
  bool insert(const ExactPoly& p);

  int rank() const { return static_cast<int>(rows_.size()); }
  int inserted() const { return n_inserted_; }

  // Coefficients c with target = sum c_i * family_i (family = insertion
  // order, including dependent members), or nullopt when target is outside
  // the span. Requires tracking.
  std::optional<std::vector<Rational>> solve(const ExactPoly& target) const;

 private:
  struct Row {
    ExactPoly poly;                  // reduced, nonzero
    std::map<int, Rational> comb;    // poly = sum comb[i] * family_i, sparse
  };
  // Reduces p against rows_, returning the residual and (if tracking) the
  // multipliers applied to each row.
  ExactPoly reduce(const ExactPoly& p, std::map<int, Rational>* used) const;

  bool track_;
  int n_inserted_ = 0;
  std::vector<Row> rows_;  // pairwise distinct leading monomials
  std::map<Monomial, int, GrlexLess> by_lead_;
};

}  // namespace nca
