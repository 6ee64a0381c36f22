#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nca/bidet.hpp"
#include "nca/partition.hpp"
#include "nca/poly.hpp"
#include "nca/rational.hpp"

namespace nca {

// Column set of a maximal minor: strictly increasing m-tuple in {1..m+n}.
using PIndex = std::vector<int>;
// Product of coordinates, kept as a sorted factor list.
using GrassMonomial = std::vector<PIndex>;
using GrassElement = std::map<GrassMonomial, Rational>;

void check_pindex(const PIndex& J, int m, int n);
GrassMonomial canonical_monomial(GrassMonomial M);
void check_monomial(const GrassMonomial& M, int m, int n);

// P_J expanded as the maximal minor of a generic m x (m+n) matrix on the
// columns J; products and linear combinations thereof.
ExactPoly pindex_poly(const PIndex& J, int m, int n);
ExactPoly monomial_poly(const GrassMonomial& M, int m, int n);
ExactPoly element_poly(const GrassElement& e, int m, int n);

// Signed exchange relation: positions l..m of I trade places with positions
// 1..l of J over all coset representatives. The result expands to zero on a
// generic matrix; that identity is what pins the sign choices.
GrassElement pluecker_relation(const PIndex& I, const PIndex& J, int l, int m,
                               int n);

// Factors sorted lexicographically must increase weakly in every component.
bool is_standard_monomial(const GrassMonomial& M);
// No two factors may interleave as j_k^p < j_k^q < j_{k+1}^p < j_{k+1}^q.
bool is_noncrossing_monomial(const GrassMonomial& M);

// Weight order for m = 2: w(J) = j_2 - j_1, w(M) multiplicative, and the
// LARGER weight is the SMALLER monomial; ties resolved lexicographically.
int weight(const PIndex& J);
Integer monomial_weight(const GrassMonomial& M);
bool precedes(const GrassMonomial& M1, const GrassMonomial& M2);

// Minimal supported monomial in the order above. Note the convention: the
// initial term is the smallest, not the largest.
GrassMonomial initial_term(const GrassElement& f);

// Rewrites crossing pairs (j1,j2),(j'1,j'2) with j1<j'1<j2<j'2 into
// (j1,j'1)(j2,j'2) + (j1,j'2)(j'1,j2), smallest crossing monomial and
// smallest crossing pair first, until only non-crossing monomials remain.
GrassElement straighten_g2n(const GrassMonomial& M);

// Relevance to a Schubert condition: j_k <= n + k - lambda_k for all k.
bool relevant_to(const PIndex& J, const Partition& lambda, int m, int n);
bool monomial_relevant_to(const GrassMonomial& M, const Partition& lambda,
                          int m, int n);

std::vector<PIndex> pindices(int m, int n);
std::vector<GrassMonomial> monomials_of_degree(int m, int n, int d);

// Dimension of the degree-d slice, three ways; they must agree.
struct GradedDimension {
  long standard_count = 0;
  long noncrossing_count = 0;
  long rank = 0;
};
GradedDimension graded_dimension(int m, int n, int d);

// (#relevant standard, #relevant non-crossing) monomials of degree d, m = 2.
std::pair<long, long> schubert_counts(const Partition& lambda, int n, int d);

// Exploratory rewriting for m = 3: repeatedly trades the first crossing pair
// through an exchange relation. No termination promise; capped.
struct SeagullResult {
  GrassElement element;
  std::vector<std::string> log;
  bool finished = false;
};
SeagullResult seagull_rewrite(const GrassMonomial& M, int n, int max_steps);

}  // namespace nca
