#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <map>
#include <vector>

#include "nca/bidet.hpp"
#include "nca/error.hpp"
#include "nca/partition.hpp"
#include "nca/tableau.hpp"

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

std::vector<int> weight_vector(const Content& c, int max_entry) {
  std::vector<int> w(max_entry, 0);
  for (const auto& [v, m] : c) w[v - 1] = m;
  return w;
}

// All contents of the given total size supported on {1..max_entry}.
std::vector<Content> contents_of(int size, int max_entry) {
  std::vector<Content> out;
  std::function<void(int, int, Content&)> go = [&](int v, int left,
                                                   Content& acc) {
    if (v > max_entry) {
      if (left == 0) out.push_back(acc);
      return;
    }
    for (int m = 0; m <= left; ++m) {
      if (m > 0) acc[v] = m;
      go(v + 1, left - m, acc);
      acc.erase(v);
    }
  };
  Content acc;
  go(1, size, acc);
  return out;
}

}  // namespace

TEST_CASE("generic matrices and minors") {
  GenericMatrix X = generic_matrix(2, 3);
  CHECK(X.id(1, 1) == 1);
  CHECK(X.id(2, 3) == 6);
  CHECK(code_of([&] { X.id(3, 1); }) == "out-of-range");

  ExactPoly x11 = ExactPoly::variable(X.id(1, 1));
  ExactPoly x12 = ExactPoly::variable(X.id(1, 2));
  ExactPoly x21 = ExactPoly::variable(X.id(2, 1));
  ExactPoly x22 = ExactPoly::variable(X.id(2, 2));

  CHECK(minor_poly(X, {2}, {3}) == ExactPoly::variable(X.id(2, 3)));
  CHECK(minor_poly(X, {1, 2}, {1, 2}) == x11 * x22 - x12 * x21);
  // repeats kill the determinant by alternation
  CHECK(minor_poly(X, {1, 1}, {1, 2}).is_zero());
  CHECK(minor_poly(X, {1, 2}, {3, 3}).is_zero());
  CHECK(code_of([&] { minor_poly(X, {1, 2}, {1}); }) == "size-mismatch");
}

TEST_CASE("bideterminants multiply minors across column pairs") {
  GenericMatrix X = generic_matrix(2, 2);
  Bitableau offdiag{Tableau{{{1}, {2}}}, Tableau{{{2}, {1}}}};
  check_bitableau(offdiag);
  CHECK(bideterminant(offdiag, X) ==
        ExactPoly::variable(X.id(1, 2)) * ExactPoly::variable(X.id(2, 1)));

  Bitableau full{Tableau{{{1, 2}}}, Tableau{{{1, 2}}}};
  CHECK(bideterminant(full, X) == minor_poly(X, {1, 2}, {1, 2}));

  GenericMatrix Y = generic_matrix(3, 3);
  Bitableau cube{Tableau{{{2}, {2}, {2}}}, Tableau{{{1}, {1}, {1}}}};
  ExactPoly x21 = ExactPoly::variable(Y.id(2, 1));
  CHECK(bideterminant(cube, Y) == x21 * x21 * x21);
}

TEST_CASE("canonical pair order moves both sides together") {
  Bitableau scrambled{Tableau{{{2}, {1}}}, Tableau{{{1}, {2}}}};
  Bitableau c = canonical_bitableau(scrambled);
  CHECK(c.T.cols == std::vector<Column>{{1}, {2}});
  CHECK(c.Tprime.cols == std::vector<Column>{{2}, {1}});
  CHECK(bitableau_shape(c) == Partition{2});

  Bitableau tall{Tableau{{{3}, {1, 2}}}, Tableau{{{1}, {1, 2}}}};
  Bitableau ct = canonical_bitableau(tall);
  CHECK(ct.T.cols == std::vector<Column>{{1, 2}, {3}});
  CHECK(bitableau_shape(ct) == Partition{2, 1});

  CHECK(code_of([] {
          check_bitableau(Bitableau{Tableau{{{1, 2}}}, Tableau{{{1}}}});
        }) == "bad-bitableau");
  CHECK(code_of([] {
          check_bitableau(Bitableau{Tableau{{{2, 2}}}, Tableau{{{1, 2}}}});
        }) == "bad-bitableau");
}

TEST_CASE("side predicates on written column order") {
  // semistandard but crossing
  Tableau crossing{{{1, 3}, {2, 4}}};
  CHECK(is_standard_side(crossing));
  CHECK(!is_noncrossing_side(crossing));

  // non-crossing (nested) but not semistandard
  Tableau nested{{{2, 3}, {1, 4}}};
  CHECK(!is_standard_side(nested));
  CHECK(is_noncrossing_side(nested));

  // repeated value: the only workable spreading sends the two 1s to 2,1
  Tableau repeated{{{1, 2}, {1, 3}}};
  CHECK(is_standard_side(repeated));
  CHECK(is_noncrossing_side(repeated));

  // written order [2],[1] is not its own canonical order
  Tableau reversed{{{2}, {1}}};
  CHECK(!is_standard_side(reversed));
  CHECK(!is_noncrossing_side(reversed));

  Bitableau offdiag{Tableau{{{1}, {2}}}, Tableau{{{2}, {1}}}};
  CHECK(!is_standard_bitableau(offdiag));
  CHECK(!is_noncrossing_bitableau(offdiag));
}

TEST_CASE("side enumeration against the kostka oracle") {
  Partition lambda{2, 1};
  Content chain{{1, 1}, {2, 1}, {3, 1}};
  std::vector<Tableau> sides = enumerate_sides(lambda, chain);
  CHECK(sides.size() == 3);
  long standard = 0, noncrossing = 0;
  for (const Tableau& s : sides) {
    standard += is_standard_side(s);
    noncrossing += is_noncrossing_side(s);
  }
  CHECK(standard == kostka_number(lambda, {1, 1, 1}));
  CHECK(noncrossing == standard);

  CHECK(enumerate_sides_bounded(Partition{1, 1}, 3).size() == 3);
  // written sequences, not canonical ones: all four ordered singleton pairs
  CHECK(enumerate_sides_bounded(Partition{2}, 2).size() == 4);
}

TEST_CASE("bitableau counts factor through kostka numbers") {
  for (int size = 1; size <= 3; ++size) {
    std::vector<Content> contents = contents_of(size, 3);
    for (const Partition& lambda : partitions_of(size)) {
      for (const Content& alpha : contents) {
        Integer ka = kostka_number(lambda, weight_vector(alpha, 3));
        for (const Content& beta : contents) {
          Integer kb = kostka_number(lambda, weight_vector(beta, 3));
          long nct = count_bitableaux(alpha, beta, lambda, Family::Nct);
          long syt = count_bitableaux(alpha, beta, lambda, Family::Syt);
          CHECK(nct == syt);
          CHECK(Integer(syt) == ka * kb);
        }
      }
    }
  }
}

TEST_CASE("off-diagonal product decomposes over the diagonal and the minor") {
  Bitableau offdiag{Tableau{{{1}, {2}}}, Tableau{{{2}, {1}}}};
  BidetElement d = decompose_bideterminant(offdiag);
  BidetElement expected;
  expected[Bitableau{Tableau{{{1}, {2}}}, Tableau{{{1}, {2}}}}] = Rational(1);
  expected[Bitableau{Tableau{{{1, 2}}}, Tableau{{{1, 2}}}}] = Rational(-1);
  CHECK(d == expected);

  GenericMatrix X = generic_matrix(2, 2);
  CHECK(realize_bidet(d, X) == bideterminant(offdiag, X));
}

TEST_CASE("decompositions land on non-crossing keys and realize back") {
  GenericMatrix X = generic_matrix(3, 3);
  for (const Content& alpha : contents_of(3, 3)) {
    for (const Content& beta : contents_of(3, 3)) {
      for (const Partition& lambda : partitions_of(3)) {
        for (const Bitableau& b : enumerate_bitableaux(alpha, beta, lambda)) {
          BidetElement d = decompose_bideterminant(b);
          for (const auto& [key, c] : d) {
            CHECK(is_noncrossing_bitableau(key));
            CHECK(c != 0);
          }
          CHECK(realize_bidet(d, X) == bideterminant(b, X));
          if (is_noncrossing_bitableau(b)) {
            CHECK(d == BidetElement{{b, Rational(1)}});
          }
        }
      }
    }
  }
}

TEST_CASE("cloned rows collapse minors after specialization") {
  GenericMatrix X = generic_matrix(2, 2);
  CloneResult clone = clone_matrix(X, Content{{1, 2}, {2, 1}},
                                   Content{{1, 1}, {2, 1}});
  CHECK(clone.matrix.rows == 3);
  CHECK(clone.matrix.cols == 2);
  // rows 1 and 2 specialize to the same source row: the minor dies
  ExactPoly doubled = minor_poly(clone.matrix, {1, 2}, {1, 2});
  CHECK(doubled.rename_variables(clone.specialization).is_zero());
  // rows 1 and 3 recover the source minor
  ExactPoly mixed = minor_poly(clone.matrix, {1, 3}, {1, 2});
  CHECK(mixed.rename_variables(clone.specialization) ==
        minor_poly(X, {1, 2}, {1, 2}));
}

TEST_CASE("module ranks at rank three") {
  for (const Partition& lambda :
       {Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}}) {
    GlModuleReport r = gl_module_basis(lambda, 3, 3);
    CHECK(r.expected ==
          long(enumerate_ssyt_tableaux(lambda, 3).size()));
    CHECK(r.nc_rank == r.expected);
    CHECK(r.ssyt_rank == r.expected);
  }
  CHECK(gl_module_basis(Partition{1}, 3, 3).expected == 3);
  CHECK(gl_module_basis(Partition{1, 1}, 3, 3).expected == 3);
  CHECK(gl_module_basis(Partition{2}, 3, 3).expected == 6);
  CHECK(code_of([] { gl_module_basis(Partition{1, 1, 1, 1}, 3, 3); }) ==
        "lambda-too-tall");
}
