#pragma once

#include <map>
#include <vector>

#include "nca/linalg.hpp"
#include "nca/partition.hpp"
#include "nca/poly.hpp"
#include "nca/tableau.hpp"

namespace nca {

// Grid of independent polynomial variables, ids row-major starting at 1.
struct GenericMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> var;
  int id(int i, int j) const;  // 1-based
};
GenericMatrix generic_matrix(int rows, int cols);

// Determinant of the submatrix on rows I and columns J, Leibniz-expanded.
// I and J may repeat entries (the result is then zero by alternation).
ExactPoly minor_poly(const GenericMatrix& X, const std::vector<int>& I,
                     const std::vector<int>& J);

// Pair of equal-shape tableaux with strictly increasing columns; entries may
// repeat across columns but not inside one. Column pairs are kept in the
// canonical order: longer first, then left column colex, then right column
// colex. The written order is what the side predicates below inspect.
struct Bitableau {
  Tableau T;
  Tableau Tprime;
  bool operator==(const Bitableau&) const = default;
  bool operator<(const Bitableau& o) const;
};

void check_bitableau(const Bitableau& b);
Bitableau canonical_bitableau(Bitableau b);
Partition bitableau_shape(const Bitableau& b);

using Content = std::map<int, int>;  // value -> multiplicity
Content content_of(const Tableau& t);
int content_size(const Content& c);

// Product over column pairs of the minor on rows T.cols[j], columns
// Tprime.cols[j].
ExactPoly bideterminant(const Bitableau& b, const GenericMatrix& X);

// Side predicates, applied to the written column order.
// A side is semistandard when rows weakly increase left to right. It is
// non-crossing when the repeated values can be spread onto an absolute
// ground set (occurrences of v fill a block of consecutive indices, in some
// order) so that the resulting columns are their own canonical order and
// form a pairwise non-crossing tableau.
bool is_standard_side(const Tableau& t);
bool is_noncrossing_side(const Tableau& t);
bool is_standard_bitableau(const Bitableau& b);
bool is_noncrossing_bitableau(const Bitableau& b);

// All written column sequences of the given shape drawing entries from the
// content multiset exactly (enumerate_sides) or from {1..max_entry} freely
// (enumerate_sides_bounded).
std::vector<Tableau> enumerate_sides(const Partition& shape,
                                     const Content& alpha);
std::vector<Tableau> enumerate_sides_bounded(const Partition& shape,
                                             int max_entry);

// All canonical bitableaux of the given contents and shape.
std::vector<Bitableau> enumerate_bitableaux(const Content& alpha,
                                            const Content& beta,
                                            const Partition& shape);
long count_bitableaux(const Content& alpha, const Content& beta,
                      const Partition& shape, Family family);

// Matrix with row i of X repeated mult_alpha(i) times and column j repeated
// mult_beta(j) times, on fresh variables; specialization maps each fresh id
// back to its source id.
struct CloneResult {
  GenericMatrix matrix;
  std::map<int, int> specialization;
};
CloneResult clone_matrix(const GenericMatrix& X, const Content& alpha,
                         const Content& beta);

using BidetElement = std::map<Bitableau, Rational>;

// Exact expansion of a bideterminant over the non-crossing bitableaux of the
// same contents, all shapes. The result is verified by realization.
BidetElement decompose_bideterminant(const Bitableau& b);
ExactPoly realize_bidet(const BidetElement& e, const GenericMatrix& X);

// Ranks of the families { bideterminant((T_lambda, T)) } on a generic n x r
// matrix, T running over non-crossing (resp. semistandard) sides with
// entries <= r; T_lambda has column j equal to (1..lambda'_j). Both ranks
// must match the semistandard tableau count.
struct GlModuleReport {
  long expected = 0;
  long nc_rank = 0;
  long ssyt_rank = 0;
};
GlModuleReport gl_module_basis(const Partition& lambda, int n, int r);

}  // namespace nca
