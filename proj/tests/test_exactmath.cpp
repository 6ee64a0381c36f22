#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "nca/error.hpp"
#include "nca/linalg.hpp"
#include "nca/poly.hpp"
#include "nca/rational.hpp"

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

// Plain rational Gaussian elimination, kept independent of the Bareiss
// implementation under test.
int naive_rank(std::vector<std::vector<Rational>> a) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

ExactPoly x(int i) { return ExactPoly::variable(i); }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(rational_from_string("3/4") == Rational(3, 4));
  CHECK(rational_from_string("-7") == Rational(-7));
  CHECK(rational_from_string("6/4") == Rational(3, 2));
  CHECK(code_of([] { rational_from_string("seven"); }) == "bad-rational");
  CHECK(code_of([] { rational_from_string(""); }) == "bad-rational");
  CHECK(code_of([] { rational_from_string("1/0"); }) == "bad-rational");
}

TEST_CASE("monomial arithmetic and grlex order") {
  Monomial a{{1, 1}, {3, 2}};
  Monomial b{{2, 1}, {3, 1}};
  CHECK(monomial_degree(a) == 3);
  CHECK(monomial_mul(a, b) == Monomial{{1, 1}, {2, 1}, {3, 3}});

  GrlexLess less;
  CHECK(less(Monomial{{1, 1}}, Monomial{{1, 2}}));          // degree decides
  CHECK(less(Monomial{{2, 1}}, Monomial{{1, 1}}));          // x1 beats x2
  CHECK(less(Monomial{{2, 2}}, Monomial{{1, 1}, {3, 1}}));  // x2^2 < x1*x3
  CHECK(!less(a, a));
}

TEST_CASE("polynomial ring identities") {
  ExactPoly p = x(1) + x(2).scaled(2);
  ExactPoly q = x(1) * x(3) - x(2);
  ExactPoly r = ExactPoly(Rational(3)) - x(1);

  CHECK((p + q) * r == p * r + q * r);
  CHECK(p * q == q * p);
  CHECK((p * q) * r == p * (q * r));
  CHECK((p - p).is_zero());
  CHECK((p + (-p)).is_zero());
  CHECK(p.scaled(Rational(1, 2)) + p.scaled(Rational(1, 2)) == p);
  CHECK((p * ExactPoly(Rational(0))).is_zero());
}

TEST_CASE("leading term, degree, eval") {
  ExactPoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(code_of([&] { z.leading_term(); }) == "zero-polynomial");

  ExactPoly p = x(1) * x(1) - x(2);  // x1^2 - x2
  CHECK(p.degree() == 2);
  CHECK(p.leading_term().first == Monomial{{1, 2}});
  CHECK(p.eval({{1, Rational(2)}, {2, Rational(1)}}) == Rational(3));
  CHECK(code_of([&] { p.eval({{1, Rational(2)}}); }) == "missing-assignment");
}

TEST_CASE("variable renaming may collapse") {
  ExactPoly p = x(1) - x(2);
  CHECK(p.rename_variables({{2, 1}}).is_zero());
  ExactPoly q = x(1) * x(2);
  CHECK(q.rename_variables({{1, 5}, {2, 6}}) == x(5) * x(6));
}

TEST_CASE("difference product") {
  ExactPoly expected = (x(1) - x(2)) * (x(2) - x(3));
  CHECK(difference_product({{1, 2}, {2, 3}}) == expected);
  CHECK(difference_product({}) == ExactPoly(Rational(1)));
  CHECK(code_of([] { difference_product({{2, 2}}); }) == "degenerate-factor");
}

TEST_CASE("bareiss rank matches naive elimination") {
  std::mt19937 rng(20240901);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    ExactMatrix m(rows, cols);
    std::vector<std::vector<Rational>> copy(rows,
                                            std::vector<Rational>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        Rational v(num(rng), den(rng));
        v.canonicalize();
        m.at(i, j) = v;
        copy[i][j] = v;
      }
    CHECK(rank(m) == naive_rank(copy));
  }
}

TEST_CASE("linear solve") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> num(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    int rows = 4, cols = 3;
    ExactMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a.at(i, j) = Rational(num(rng));
    std::vector<Rational> x0(cols);
    for (auto& v : x0) v = Rational(num(rng));
    std::vector<Rational> b(rows, Rational(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) b[i] += a.at(i, j) * x0[j];
    auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    for (int i = 0; i < rows; ++i) {
      Rational acc(0);
      for (int j = 0; j < cols; ++j) acc += a.at(i, j) * (*sol)[j];
      CHECK(acc == b[i]);
    }
  }

  ExactMatrix a(2, 2);
  a.at(0, 0) = a.at(0, 1) = a.at(1, 0) = a.at(1, 1) = Rational(1);
  CHECK(!solve(a, {Rational(1), Rational(2)}).has_value());
  CHECK(code_of([&] { solve(a, {Rational(1)}); }) == "dimension-mismatch");
}

TEST_CASE("poly echelon rank and dependence") {
  PolyEchelon ech;
  CHECK(ech.insert(x(1)));
  CHECK(ech.insert(x(2)));
  CHECK(!ech.insert(x(1) + x(2)));
  CHECK(ech.rank() == 2);
  CHECK(ech.inserted() == 3);
  CHECK(code_of([&] { ech.solve(x(1)); }) == "internal");
}

TEST_CASE("poly echelon tracked solve") {
  PolyEchelon ech(true);
  ech.insert(x(1));
  ech.insert(x(2));
  ech.insert(x(1) + x(2));  // dependent, still part of the family indexing
  auto sol = ech.solve(x(1) - x(2));
  REQUIRE(sol.has_value());
  CHECK(*sol == std::vector<Rational>{Rational(1), Rational(-1), Rational(0)});
  CHECK(!ech.solve(x(3)).has_value());
}

TEST_CASE("poly echelon solve recombines exactly") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::vector<ExactPoly> family;
  PolyEchelon ech(true);
  for (int k = 0; k < 8; ++k) {
    ExactPoly p;
    for (int v = 1; v <= 3; ++v) {
      p += x(v).scaled(coef(rng));
      p += (x(v) * x((v % 3) + 1)).scaled(coef(rng));
    }
    family.push_back(p);
    ech.insert(p);
  }
  for (int trial = 0; trial < 10; ++trial) {
    ExactPoly target;
    for (const ExactPoly& p : family) target += p.scaled(coef(rng));
    auto sol = ech.solve(target);
    REQUIRE(sol.has_value());
    ExactPoly back;
    for (size_t i = 0; i < family.size(); ++i)
      back += family[i].scaled((*sol)[i]);
    CHECK(back == target);
  }
}
