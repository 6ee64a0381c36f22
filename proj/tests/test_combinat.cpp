#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

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

Column random_column(std::mt19937& rng, int len, int top) {
  std::vector<int> pool(top);
  for (int i = 0; i < top; ++i) pool[i] = i + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  Column c(pool.begin(), pool.begin() + len);
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

TEST_CASE("partitions and hook counts") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(conjugate({3, 1, 1}) == Partition{3, 1, 1});
  CHECK(conjugate({4, 2}) == Partition{2, 2, 1, 1});
  CHECK(conjugate({}) == Partition{});
  CHECK(syt_count_hook({2, 2}) == 2);
  CHECK(syt_count_hook({3, 1, 1}) == 6);
  CHECK(syt_count_hook({1}) == 1);
  CHECK(code_of([] { check_partition({1, 2}); }) == "bad-partition");
  CHECK(code_of([] { check_partition({2, 0}); }) == "bad-partition");
}

TEST_CASE("column order and canonical presentation") {
  CHECK(colex_less({3, 4, 5}, {1, 2, 6}));
  CHECK(!colex_less({1, 2, 6}, {3, 4, 5}));
  Tableau t{{{1, 3, 6}, {2, 4, 5}}};
  CHECK(canonicalized(t).cols == std::vector<Column>{{2, 4, 5}, {1, 3, 6}});
  Tableau mixed{{{2}, {1, 3}}};
  CHECK(canonicalized(mixed).cols == std::vector<Column>{{1, 3}, {2}});
}

TEST_CASE("pair predicates") {
  CHECK(is_noncrossing_pair({1, 2}, {3, 4}));
  // equal lengths are order-sensitive: the boundary condition wants the
  // left column smaller at the last differing position
  CHECK(!is_noncrossing_pair({3, 4}, {1, 2}));
  CHECK(!is_noncrossing_pair({1, 3}, {2, 4}));
  CHECK(is_noncrossing_pair({2, 3}, {1, 4}));  // nested is fine
  CHECK(is_nonnesting_pair({1, 3}, {2, 4}));
  CHECK(!is_nonnesting_pair({2, 3}, {1, 4}));
  // unequal lengths: b may not land strictly between the top two of a
  CHECK(!is_noncrossing_pair({1, 2, 5}, {3, 4}));
  CHECK(is_noncrossing_pair({1, 4, 5}, {2, 3}));
  CHECK(code_of([] { is_noncrossing_pair({1}, {2, 3}); }) == "malformed-part");
  CHECK(code_of([] { is_noncrossing_pair({2, 2}, {1}); }) == "malformed-part");
}

TEST_CASE("segment predicates are symmetric") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    Column a = random_column(rng, 3, 8);
    Column b = random_column(rng, 3, 8);
    CHECK(segments_noncrossing(a, b) == segments_noncrossing(b, a));
    CHECK(segments_nonnesting(a, b) == segments_nonnesting(b, a));
  }
}

TEST_CASE("matchings vs two-row tableaux") {
  CHECK(noncrossing_matchings(3).size() == 5);
  // One route through arc crossings, one through the column predicate.
  std::vector<Matching> all;
  std::function<void(Matching&, std::vector<int>&)> build =
      [&](Matching& acc, std::vector<int>& free) {
        if (free.empty()) {
          all.push_back(acc);
          return;
        }
        int a = free.front();
        for (size_t i = 1; i < free.size(); ++i) {
          Matching next = acc;
          next.emplace_back(a, free[i]);
          std::vector<int> rest;
          for (size_t j = 1; j < free.size(); ++j)
            if (j != i) rest.push_back(free[j]);
          build(next, rest);
        }
      };
  Matching acc;
  std::vector<int> pts{1, 2, 3, 4, 5, 6};
  build(acc, pts);
  CHECK(all.size() == 15);
  int noncrossing = 0;
  for (const Matching& m : all) {
    Tableau t = two_row_tableau(m);
    CHECK(matching_of_two_row(t) == m);
    CHECK(is_noncrossing_matching(m) == is_nct(t));
    if (is_noncrossing_matching(m)) ++noncrossing;
  }
  CHECK(noncrossing == 5);
  CHECK(crossing_count({{1, 3}, {2, 4}}) == 1);
  CHECK(code_of([] { check_matching({{1, 2}, {2, 3}}); }) == "bad-matching");
  CHECK(code_of([] {
          matching_of_two_row(Tableau{{{1, 2, 3}}});
        }) == "unsupported-shape");
}

TEST_CASE("readings round trip") {
  Reading r{1, 1, 2, 2};
  CHECK(is_yamanouchi(r));
  CHECK(!is_yamanouchi(Reading{2, 1, 1, 2}));
  CHECK(rectangular_content(r) == std::pair<int, int>{2, 2});
  CHECK(!rectangular_content(Reading{1, 1, 2}).has_value());

  for (const Partition& lam :
       {Partition{2, 2}, Partition{3, 1}, Partition{2, 2, 1}}) {
    Filling f = canonical_filling(lam);
    auto readings = enumerate_readings(f);
    CHECK(Integer(static_cast<long>(readings.size())) == syt_count_hook(lam));
    for (const Reading& w : readings) {
      Tableau s = reading_to_syt(w);
      Tableau c = reading_to_nct(w);
      CHECK(reading_of(s) == w);
      CHECK(reading_of(c) == w);
      CHECK(is_syt(s));
      CHECK(is_nct(c));
      CHECK(syt_to_nct(s) == c);
      CHECK(nct_to_syt(c) == s);
    }
  }
}

TEST_CASE("enumeration against the hook formula") {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      auto ncts = enumerate_nct(lam);
      auto syts = enumerate_syt(lam);
      CHECK(Integer(static_cast<long>(ncts.size())) == syt_count_hook(lam));
      CHECK(ncts.size() == syts.size());

      // brute-force route: filter every tableau of the shape by predicate
      std::set<Tableau> brute_nct, brute_syt;
      for (const Tableau& t : enumerate_bare_tableaux(lam)) {
        if (is_nct(t)) brute_nct.insert(t);
        if (is_syt(t)) brute_syt.insert(t);
      }
      CHECK(brute_nct == std::set<Tableau>(ncts.begin(), ncts.end()));
      CHECK(brute_syt == std::set<Tableau>(syts.begin(), syts.end()));

      // the reading bijection sends one family onto the other; it lives on
      // rectangles, so lift through the canonical completion and strip back
      Filling f = canonical_filling(lam);
      std::set<Tableau> images;
      for (const Tableau& t : ncts)
        images.insert(movable_part(nct_to_syt(complete_as_nct(t, f)), f.n));
      CHECK(images == brute_syt);
    }
  }
}

TEST_CASE("counts do not depend on the completion filling") {
  Partition lam{3, 1, 1};
  Filling row_major = canonical_filling(lam);
  CHECK(is_valid_filling(row_major));

  // Same skew shape filled column-major instead.
  Filling f;
  f.lambda = lam;
  f.mu = RectShape{3, 3};
  f.n = 5;
  f.col_entries = {{}, {6, 7}, {8, 9}};
  f.cells = {{2, 2}, {3, 2}, {2, 3}, {3, 3}};
  CHECK(is_valid_filling(f));
  CHECK(f.col_entries != row_major.col_entries);

  CHECK(enumerate_nct(f).size() == enumerate_nct(row_major).size());
  CHECK(enumerate_syt(f).size() == enumerate_syt(row_major).size());
  CHECK(Integer(static_cast<long>(enumerate_nct(f).size())) ==
        syt_count_hook(lam));

  // the movable parts are exactly the shape-lambda families, whichever
  // filling completes them
  auto stripped = [](const std::vector<Tableau>& v, int n) {
    std::set<Tableau> out;
    for (const Tableau& t : v) out.insert(movable_part(t, n));
    return out;
  };
  auto bare_ncts = enumerate_nct(lam);
  std::set<Tableau> bare_set(bare_ncts.begin(), bare_ncts.end());
  CHECK(stripped(enumerate_nct(f), f.n) == bare_set);
  CHECK(stripped(enumerate_nct(row_major), row_major.n) == bare_set);
  for (const Tableau& t : enumerate_nct(row_major)) CHECK(is_nct(t));
  // this filling places the frozen entries up each column, which happens to
  // match where the chains want them
  for (const Tableau& t : enumerate_nct(f)) CHECK(agrees_with_filling(t, f));
}

TEST_CASE("filled tableaux and completion plumbing") {
  Partition lam{2, 2};
  Filling f = canonical_filling(lam);
  auto filled = enumerate_filled_tableaux(f);
  CHECK(filled.size() == 3);
  CHECK(enumerate_bare_tableaux(lam).size() == 3);

  Tableau bare{{{1, 3}, {2, 4}}};
  CHECK(complete_with_filling(bare, f) == bare);  // already rectangular

  Partition hook_shape{2, 1};
  Filling g = canonical_filling(hook_shape);  // 2x2 rectangle, 4 frozen
  Tableau small{{{1, 2}, {3}}};
  Tableau completed = complete_with_filling(small, g);
  CHECK(completed.entry_count() == 4);
  CHECK(agrees_with_filling(completed, g));
  CHECK(strip_filling(completed, g) == small);
  CHECK(movable_part(completed, g.n) == small);

  // the chain completion lands back on its movable part
  for (const Tableau& t : enumerate_nct(hook_shape)) {
    Tableau full = complete_as_nct(t, g);
    CHECK(full.entry_count() == g.total());
    CHECK(is_nct(full));
    CHECK(movable_part(full, g.n) == t);
  }
  CHECK(code_of([&] { complete_as_nct(completed, g); }) == "classification");
  Filling sq = canonical_filling({2, 2});
  CHECK(code_of([&] {
          complete_as_nct(Tableau{{{1, 3}, {2, 4}}}, sq);
        }) == "classification");
}

TEST_CASE("weighted classes against Kostka numbers") {
  CHECK(kostka_number({2, 1}, {1, 1, 1}) == 2);
  CHECK(kostka_number({2, 1}, {2, 1}) == 1);
  CHECK(kostka_number({2, 2}, {1, 1, 1, 1}) == 2);
  CHECK(count_snct({2, 1}, {2, 1}) == 1);
  CHECK(weighted_class_words({2, 1}, {2, 1}, Family::Nct).size() == 1);

  for (const Partition& lam : {Partition{2, 1}, Partition{2, 2}, Partition{3, 1}}) {
    int n = partition_size(lam);
    // all weights with parts in {0,1,2,3} of the right total
    std::vector<std::vector<int>> weights;
    std::function<void(std::vector<int>&, int)> gen = [&](std::vector<int>& w,
                                                          int left) {
      if (static_cast<int>(w.size()) == n) {
        if (left == 0) weights.push_back(w);
        return;
      }
      for (int v = 0; v <= std::min(3, left); ++v) {
        w.push_back(v);
        gen(w, left - v);
        w.pop_back();
      }
    };
    std::vector<int> w;
    gen(w, n);
    for (const auto& weight : weights) {
      Integer k = kostka_number(lam, weight);
      CHECK(Integer(static_cast<long>(count_ssyt(lam, weight))) == k);
      CHECK(Integer(static_cast<long>(count_snct(lam, weight))) == k);
    }
  }

  // Kostka numbers are invariant under permuting the weight.
  CHECK(count_ssyt({3, 1}, {1, 2, 1}) == count_ssyt({3, 1}, {2, 1, 1}));
  CHECK(count_snct({3, 1}, {1, 2, 1}) == count_snct({3, 1}, {2, 1, 1}));
}

TEST_CASE("semistandard enumeration matches Kostka totals") {
  Partition lam{2, 1};
  auto ssyt = enumerate_ssyt_tableaux(lam, 3);
  CHECK(ssyt.size() == 8);  // dimension of the (2,1) Schur module on 3 letters
  Integer total = 0;
  std::vector<std::vector<int>> weights = {
      {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {0, 2, 1}, {1, 0, 2},
      {0, 1, 2}, {1, 1, 1}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}};
  for (const auto& weight : weights) total += kostka_number(lam, weight);
  CHECK(total == static_cast<long>(ssyt.size()));
}
