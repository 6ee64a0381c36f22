#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <vector>

#include "nca/error.hpp"
#include "nca/grass.hpp"

using namespace nca;

namespace {

std::string code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  return "no-error";
}

}  // namespace

TEST_CASE("index tuples") {
  CHECK(code_of([] { check_pindex({1, 2, 3}, 2, 2); }) == "out-of-range");
  CHECK(code_of([] { check_pindex({1, 5}, 2, 2); }) == "out-of-range");
  CHECK(code_of([] { check_pindex({3, 2}, 2, 2); }) == "out-of-range");
  CHECK(code_of([] { check_pindex({2, 2}, 2, 2); }) == "out-of-range");
  check_pindex({1, 4}, 2, 2);
  CHECK(canonical_monomial({{2, 4}, {1, 3}}) ==
        GrassMonomial{{1, 3}, {2, 4}});
  CHECK(pindices(2, 2).size() == 6);
  CHECK(pindices(2, 3).size() == 10);
  CHECK(monomials_of_degree(2, 2, 2).size() == 21);  // multisets of 6
  CHECK(monomials_of_degree(2, 3, 2).size() == 55);
}

TEST_CASE("coordinates expand to maximal minors") {
  // P(12) of a 2x4 matrix: x11 x22 - x12 x21 with row-major ids
  GenericMatrix X = generic_matrix(2, 4);
  ExactPoly p12 = pindex_poly({1, 2}, 2, 2);
  CHECK(p12 == minor_poly(X, {1, 2}, {1, 2}));
  CHECK(p12.term_count() == 2);
  CHECK(monomial_poly({{1, 2}, {3, 4}}, 2, 2) ==
        p12 * pindex_poly({3, 4}, 2, 2));
  GrassElement e;
  e[{{1, 2}}] = Rational(2);
  e[{{3, 4}}] = Rational(-1);
  CHECK(element_poly(e, 2, 2) ==
        p12.scaled(Rational(2)) - pindex_poly({3, 4}, 2, 2));
}

TEST_CASE("exchange relations") {
  GrassElement rel = pluecker_relation({1, 3}, {2, 4}, 1, 2, 2);
  GrassElement expected;
  expected[{{1, 3}, {2, 4}}] = Rational(1);
  expected[{{1, 2}, {3, 4}}] = Rational(-1);
  expected[{{1, 4}, {2, 3}}] = Rational(-1);
  CHECK(rel == expected);
  CHECK(element_poly(rel, 2, 2).is_zero());
  // both exchange windows give the same three-term relation
  CHECK(pluecker_relation({1, 3}, {2, 4}, 2, 2, 2) == expected);

  // shared index: the relation collapses to nothing
  CHECK(pluecker_relation({1, 2}, {1, 3}, 1, 2, 2).empty());
  CHECK(pluecker_relation({1, 3}, {2, 3}, 2, 2, 2).empty());

  // m = 3 relations still expand to zero on a generic matrix
  CHECK(element_poly(pluecker_relation({1, 3, 5}, {2, 4, 6}, 2, 3, 3), 3, 3)
            .is_zero());
  CHECK(element_poly(pluecker_relation({1, 2, 4}, {2, 3, 6}, 3, 3, 3), 3, 3)
            .is_zero());

  CHECK(code_of([] { pluecker_relation({1, 2}, {3, 4}, 0, 2, 2); }) ==
        "out-of-range");
}

TEST_CASE("monomial families") {
  CHECK(is_standard_monomial({{1, 2}, {1, 3}}));
  CHECK(is_standard_monomial({{1, 3}, {2, 4}}));   // componentwise sorted
  CHECK(!is_standard_monomial({{1, 4}, {2, 3}}));  // 4 > 3 in slot two

  CHECK(!is_noncrossing_monomial({{1, 3}, {2, 4}}));
  CHECK(is_noncrossing_monomial({{1, 4}, {2, 3}}));
  CHECK(is_noncrossing_monomial({{1, 2}, {3, 4}}));
  CHECK(is_noncrossing_monomial({{1, 2, 4}, {1, 3, 4}}));
  CHECK(!is_noncrossing_monomial({{1, 2, 5}, {3, 4, 6}}));
}

TEST_CASE("weight order prefers heavy monomials") {
  CHECK(weight({1, 3}) == 2);
  CHECK(monomial_weight({{1, 3}, {2, 4}}) == 4);
  CHECK(monomial_weight({{1, 4}, {2, 3}}) == 3);
  CHECK(monomial_weight({{1, 2}, {3, 4}}) == 1);
  GrassMonomial crossing{{1, 3}, {2, 4}};
  GrassMonomial nested{{1, 4}, {2, 3}};
  GrassMonomial disjoint{{1, 2}, {3, 4}};
  CHECK(precedes(crossing, nested));
  CHECK(precedes(nested, disjoint));
  CHECK(precedes(crossing, disjoint));
  CHECK(!precedes(nested, crossing));
  CHECK(!precedes(crossing, crossing));
  // equal weights fall back to the factor lists
  CHECK(precedes(GrassMonomial{{1, 2}, {2, 3}}, GrassMonomial{{2, 3}, {3, 4}}));
  CHECK(code_of([] { weight({1, 2, 3}); }) == "unsupported");

  GrassElement rel = pluecker_relation({1, 3}, {2, 4}, 1, 2, 2);
  CHECK(initial_term(rel) == crossing);
  CHECK(code_of([] { initial_term(GrassElement{}); }) == "zero-element");
}

TEST_CASE("straightening a crossing pair") {
  GrassElement s = straighten_g2n({{1, 3}, {2, 4}});
  GrassElement expected;
  expected[{{1, 2}, {3, 4}}] = Rational(1);
  expected[{{1, 4}, {2, 3}}] = Rational(1);
  CHECK(s == expected);

  // non-crossing monomials are fixed points
  for (const GrassMonomial& M :
       {GrassMonomial{{1, 4}, {2, 3}}, GrassMonomial{{1, 2}, {3, 4}},
        GrassMonomial{{1, 3}}}) {
    CHECK(straighten_g2n(M) == GrassElement{{M, Rational(1)}});
  }
  CHECK(code_of([] { straighten_g2n({{1, 2, 3}}); }) == "unsupported");
}

TEST_CASE("straightening realizes back to the same polynomial") {
  for (const GrassMonomial& M : monomials_of_degree(2, 3, 2)) {
    GrassElement s = straighten_g2n(M);
    for (const auto& [key, c] : s) {
      CHECK(is_noncrossing_monomial(key));
      CHECK(c != 0);
    }
    CHECK(element_poly(s, 2, 3) == monomial_poly(M, 2, 3));
  }
  GrassMonomial cube{{1, 3}, {2, 4}, {1, 3}};
  CHECK(element_poly(straighten_g2n(cube), 2, 2) == monomial_poly(cube, 2, 2));
}

TEST_CASE("schubert relevance") {
  CHECK(relevant_to({1, 2}, {1}, 2, 2));
  CHECK(relevant_to({2, 4}, {1}, 2, 2));
  CHECK(!relevant_to({3, 4}, {1}, 2, 2));
  int relevant = 0;
  for (const PIndex& J : pindices(2, 2)) relevant += relevant_to(J, {1}, 2, 2);
  CHECK(relevant == 5);
  CHECK(schubert_counts({1}, 2, 1) == std::pair<long, long>{5, 5});

  CHECK(monomial_relevant_to({{1, 2}, {2, 4}}, {1}, 2, 2));
  CHECK(!monomial_relevant_to({{1, 2}, {3, 4}}, {1}, 2, 2));
  CHECK(code_of([] { relevant_to({1, 2}, {3}, 2, 2); }) == "lambda-too-large");
}

TEST_CASE("graded dimensions agree three ways") {
  GradedDimension d1 = graded_dimension(2, 2, 1);
  CHECK(d1.standard_count == 6);
  CHECK(d1.noncrossing_count == 6);
  CHECK(d1.rank == 6);
  GradedDimension d2 = graded_dimension(2, 2, 2);
  CHECK(d2.standard_count == 20);  // 21 monomials, one relation
  CHECK(d2.noncrossing_count == 20);
  CHECK(d2.rank == 20);
  GradedDimension e1 = graded_dimension(3, 2, 1);
  CHECK(e1.standard_count == 10);
  CHECK(e1.noncrossing_count == 10);
  CHECK(e1.rank == 10);
}

TEST_CASE("seagull rewriting stays faithful to the polynomial") {
  SeagullResult fixed = seagull_rewrite({{1, 2, 3}}, 3, 10);
  CHECK(fixed.finished);
  CHECK(fixed.element == GrassElement{{{{1, 2, 3}}, Rational(1)}});
  CHECK(fixed.log.empty());

  for (const GrassMonomial& M :
       {GrassMonomial{{1, 2, 5}, {3, 4, 6}}, GrassMonomial{{1, 3, 5}, {2, 4, 6}},
        GrassMonomial{{1, 2, 4}, {2, 3, 6}}}) {
    SeagullResult r = seagull_rewrite(M, 3, 200);
    CHECK(!r.log.empty());
    CHECK(element_poly(r.element, 3, 3) == monomial_poly(M, 3, 3));
    if (r.finished) {
      for (const auto& [key, c] : r.element) {
        CHECK(is_noncrossing_monomial(key));
        CHECK(c != 0);
      }
    }
  }
  CHECK(code_of([] { seagull_rewrite({{1, 2}}, 3, 10); }) == "out-of-range");
}
