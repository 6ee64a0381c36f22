#include "nca/verify.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nca/bidet.hpp"
#include "nca/error.hpp"
#include "nca/grass.hpp"
#include "nca/linalg.hpp"
#include "nca/partition.hpp"
#include "nca/permutation.hpp"
#include "nca/poly.hpp"
#include "nca/specht.hpp"
#include "nca/tableau.hpp"
#include "nca/tl.hpp"

namespace nca {

namespace {

struct Recorder {
  long checks = 0;
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

template <class Body>
SuiteResult run_timed(const std::string& name, Body&& body) {
  SuiteResult out;
  out.suite = name;
  Recorder rec;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(rec);
  } catch (const error& e) {
    rec.pass = false;
    rec.detail = "exception [" + e.code() + "]: " + e.what();
  } catch (const std::exception& e) {
    rec.pass = false;
    rec.detail = std::string("exception: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  out.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  out.pass = rec.pass;
  out.checks = rec.checks;
  out.detail = rec.pass ? std::to_string(rec.checks) + " checks" : rec.detail;
  return out;
}

std::string ints(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string monomial_str(const GrassMonomial& m) {
  std::string s;
  for (const PIndex& j : m) s += "P" + ints(j);
  return s;
}

std::string content_str(const Content& c) {
  std::vector<int> flat;
  for (const auto& [value, mult] : c)
    flat.insert(flat.end(), mult, value);
  return ints(flat);
}

Integer catalan(int l) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * l, l);
  c /= l + 1;
  return c;
}

std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1 << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(std::move(parts));
  }
  return out;
}

std::vector<Content> contents_of(int size, int max_entry) {
  std::vector<Content> out;
  Content cur;
  std::function<void(int, int)> step = [&](int value, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (value > max_entry) return;
    for (int take = left; take >= 1; --take) {
      cur[value] = take;
      step(value + 1, left - take);
      cur.erase(value);
    }
    step(value + 1, left);
  };
  step(1, size);
  return out;
}

}  // namespace

SuiteResult suite_display() {
  return run_timed("display", [](Recorder& rec) {
    Tableau t{{{2, 4, 5}, {1, 3, 6}}};
    Filling f = canonical_filling({2, 2, 2});
    SpechtElement got = decompose_into_nct(t, f);

    SpechtElement expected;
    expected[canonicalized(Tableau{{{3, 4, 5}, {1, 2, 6}}})] = 1;
    expected[canonicalized(Tableau{{{1, 2, 3}, {4, 5, 6}}})] = -1;
    expected[canonicalized(Tableau{{{1, 4, 5}, {2, 3, 6}}})] = 1;

    rec.require(!is_nct(t), "the input tableau should have a crossing");
    for (const auto& [k, c] : expected)
      rec.require(is_nct(k), "an expected term crosses");
    rec.require(got == expected, "three-term expansion differs");
    rec.require(realize(got) == specht_poly(t), "realized polynomial differs");
  });
}

SuiteResult suite_counts(int max_n) {
  return run_timed("counts", [max_n](Recorder& rec) {
    for (int n = 1; n <= max_n; ++n) {
      for (const Partition& lam : partitions_of(n)) {
        Integer hook = syt_count_hook(lam);
        long nct = static_cast<long>(enumerate_nct(lam).size());
        long syt = static_cast<long>(enumerate_syt(lam).size());
        rec.require(hook == nct, "NCT count off the hook count at " + ints(lam));
        rec.require(hook == syt, "SYT count off the hook count at " + ints(lam));
      }
    }
  });
}

SuiteResult suite_basis(int max_n) {
  return run_timed("basis", [max_n](Recorder& rec) {
    for (int n = 1; n <= max_n; ++n) {
      for (const Partition& lam : partitions_of(n)) {
        Integer hook = syt_count_hook(lam);
        std::vector<Tableau> ncts = enumerate_nct(lam);
        PolyEchelon ech;
        for (const Tableau& t : ncts) ech.insert(specht_poly(t));
        rec.require(hook == static_cast<long>(ncts.size()),
                    "NCT family size off at " + ints(lam));
        rec.require(ech.rank() == static_cast<int>(ncts.size()),
                    "NCT Specht polynomials dependent at " + ints(lam));
        rec.require(hook == static_cast<long>(module_rank(lam)),
                    "module rank differs from the SYT count at " + ints(lam));
        rec.require(module_rank_completed(lam) == module_rank(lam),
                    "completion changed the rank at " + ints(lam));
      }
    }
  });
}

SuiteResult suite_weighted(int max_n) {
  return run_timed("weighted", [max_n](Recorder& rec) {
    for (int n = 1; n <= max_n; ++n) {
      auto comps = compositions_of(n);
      for (const Partition& lam : partitions_of(n)) {
        for (const auto& w : comps) {
          Integer k = kostka_number(lam, w);
          rec.require(k == static_cast<long>(count_ssyt(lam, w)),
                      "SSYT count vs Kostka at " + ints(lam) + " weight " +
                          ints(w));
          rec.require(k == static_cast<long>(count_snct(lam, w)),
                      "SNCT count vs Kostka at " + ints(lam) + " weight " +
                          ints(w));
        }
      }
    }
  });
}

SuiteResult suite_tl(int max_l) {
  return run_timed("tl", [max_l](Recorder& rec) {
    for (int l = 1; l <= max_l; ++l) {
      rec.require(catalan_dimension(l) == catalan(l),
                  "matching count vs Catalan at l=" + std::to_string(l));
      Filling f = canonical_filling(Partition(2, l));
      for (const Perm& w : all_permutations(l)) {
        Tableau t = two_row_tableau(wiring_matching(w));
        ResolveResult rr = resolve_crossings(t);
        TLElement th = theta(w);
        rec.require(rr.coefficients == th, "resolution vs theta at w=" + ints(w));
        rec.require(tl_coefficient_check(t),
                    "coefficient check rejects w=" + ints(w));
        SpechtElement d = decompose_into_nct(t, f);
        std::map<Matching, Rational> via;
        for (const auto& [key, c] : d) via[matching_of_two_row(key)] = c;
        rec.require(via == th, "linear solve vs theta at w=" + ints(w));
      }
    }
  });
}

SuiteResult suite_bidet(int max_entry, int max_size) {
  return run_timed("bidet", [max_entry, max_size](Recorder& rec) {
    {
      Bitableau b{Tableau{{{1}, {2}}}, Tableau{{{2}, {1}}}};
      BidetElement got = decompose_bideterminant(b);
      BidetElement expected;
      expected[Bitableau{Tableau{{{1}, {2}}}, Tableau{{{1}, {2}}}}] = 1;
      expected[Bitableau{Tableau{{{1, 2}}}, Tableau{{{1, 2}}}}] = -1;
      rec.require(got == expected, "x12*x21 expansion differs");
      GenericMatrix x2 = generic_matrix(2, 2);
      rec.require(realize_bidet(got, x2) == bideterminant(b, x2),
                  "x12*x21 realization differs");
    }
    GenericMatrix X = generic_matrix(max_entry, max_entry);
    for (int s = 1; s <= max_size; ++s) {
      auto cs = contents_of(s, max_entry);
      for (const Partition& lam : partitions_of(s)) {
        for (const Content& alpha : cs) {
          for (const Content& beta : cs) {
            long nc = count_bitableaux(alpha, beta, lam, Family::Nct);
            long st = count_bitableaux(alpha, beta, lam, Family::Syt);
            rec.require(nc == st, "class counts differ at shape " + ints(lam) +
                                      " contents " + content_str(alpha) + "/" +
                                      content_str(beta));
            for (const Bitableau& b : enumerate_bitableaux(alpha, beta, lam)) {
              BidetElement d = decompose_bideterminant(b);
              bool ok = true;
              for (const auto& [k, c] : d)
                ok = ok && is_noncrossing_bitableau(k);
              ok = ok && realize_bidet(d, X) == bideterminant(b, X);
              rec.require(ok, "expansion fails at shape " + ints(lam) +
                                  " contents " + content_str(alpha) + "/" +
                                  content_str(beta));
            }
          }
        }
      }
    }
  });
}

SuiteResult suite_grass(int max_n, int max_d) {
  return run_timed("grass", [max_n, max_d](Recorder& rec) {
    for (int n = 1; n <= max_n; ++n) {
      for (int d = 1; d <= max_d; ++d) {
        GradedDimension g = graded_dimension(2, n, d);
        rec.require(
            g.standard_count == g.noncrossing_count && g.standard_count == g.rank,
            "degree slice disagrees at n=" + std::to_string(n) +
                " d=" + std::to_string(d) + ": " +
                std::to_string(g.standard_count) + "/" +
                std::to_string(g.noncrossing_count) + "/" +
                std::to_string(g.rank));
      }
    }
    for (int m = 2; m <= 3; ++m) {
      int top = m == 2 ? max_n : std::min(max_n, 3);
      for (int n = 1; n <= top; ++n) {
        auto ps = pindices(m, n);
        for (size_t i = 0; i < ps.size(); ++i) {
          for (size_t j = i; j < ps.size(); ++j) {
            for (int l = 1; l <= m; ++l) {
              GrassElement rel = pluecker_relation(ps[i], ps[j], l, m, n);
              rec.require(element_poly(rel, m, n).is_zero(),
                          "relation does not vanish at I=" + ints(ps[i]) +
                              " J=" + ints(ps[j]) + " l=" + std::to_string(l) +
                              " m=" + std::to_string(m) +
                              " n=" + std::to_string(n));
            }
          }
        }
      }
    }
  });
}

SuiteResult suite_groebner(int max_n, int solve_n) {
  return run_timed("groebner", [max_n, solve_n](Recorder& rec) {
    for (int n = 2; n <= max_n; ++n) {
      auto ps = pindices(2, n);
      for (size_t i = 0; i < ps.size(); ++i) {
        for (size_t j = i; j < ps.size(); ++j) {
          GrassMonomial M = canonical_monomial({ps[i], ps[j]});
          for (int l = 1; l <= 2; ++l) {
            GrassElement rel = pluecker_relation(ps[i], ps[j], l, 2, n);
            if (rel.empty()) continue;
            rec.require(!is_noncrossing_monomial(initial_term(rel)),
                        "non-crossing initial term at I=" + ints(ps[i]) +
                            " J=" + ints(ps[j]) + " l=" + std::to_string(l) +
                            " n=" + std::to_string(n));
          }
          if (!is_noncrossing_monomial(M)) {
            GrassElement rel = pluecker_relation(ps[i], ps[j], 2, 2, n);
            rec.require(rel.size() == 3 && initial_term(rel) == M,
                        "crossing pair is not minimal in its relation: " +
                            monomial_str(M) + " n=" + std::to_string(n));
          }
        }
      }
    }
    for (int n = 1; n <= solve_n; ++n) {
      for (int d = 1; d <= 3; ++d) {
        auto ms = monomials_of_degree(2, n, d);
        std::vector<GrassMonomial> basis;
        PolyEchelon ech(true);
        for (const GrassMonomial& M : ms)
          if (is_noncrossing_monomial(M)) {
            basis.push_back(M);
            ech.insert(monomial_poly(M, 2, n));
          }
        rec.require(ech.rank() == static_cast<int>(basis.size()),
                    "non-crossing monomials dependent at n=" + std::to_string(n) +
                        " d=" + std::to_string(d));
        for (const GrassMonomial& M : ms) {
          GrassElement s = straighten_g2n(M);
          bool ok = true;
          for (const auto& [k, c] : s) ok = ok && is_noncrossing_monomial(k);
          ok = ok && element_poly(s, 2, n) == monomial_poly(M, 2, n);
          auto sol = ech.solve(monomial_poly(M, 2, n));
          ok = ok && sol.has_value();
          if (ok) {
            GrassElement via;
            for (size_t idx = 0; idx < basis.size(); ++idx)
              if ((*sol)[idx] != 0) via[basis[idx]] = (*sol)[idx];
            ok = s == via;
          }
          rec.require(ok, "straightening vs solve differs at " +
                              monomial_str(M) + " n=" + std::to_string(n));
        }
      }
    }
  });
}

SuiteResult suite_schubert(int max_total, int max_d) {
  return run_timed("schubert", [max_total, max_d](Recorder& rec) {
    for (int total = 3; total <= max_total; ++total) {
      int n = total - 2;
      for (int d = 1; d <= max_d; ++d) {
        auto ms = monomials_of_degree(2, n, d);
        std::vector<GrassMonomial> sm;
        PolyEchelon ech(true);
        for (const GrassMonomial& M : ms)
          if (is_standard_monomial(M)) {
            sm.push_back(M);
            ech.insert(monomial_poly(M, 2, n));
          }
        rec.require(ech.rank() == static_cast<int>(sm.size()),
                    "standard monomials dependent at " + std::to_string(total) +
                        " columns, d=" + std::to_string(d));
        for (int a = 0; a <= n; ++a) {
          for (int b = 0; b <= a; ++b) {
            Partition lam;
            if (a) lam.push_back(a);
            if (b) lam.push_back(b);
            std::string at = "lambda=" + ints(lam) + " on " +
                             std::to_string(total) +
                             " columns, d=" + std::to_string(d);
            auto [n_sm, n_ncm] = schubert_counts(lam, n, d);
            rec.require(n_sm == n_ncm, "relevant counts differ at " + at);
            std::vector<int> relcols;
            for (size_t idx = 0; idx < sm.size(); ++idx)
              if (monomial_relevant_to(sm[idx], lam, 2, n))
                relcols.push_back(static_cast<int>(idx));
            rec.require(static_cast<long>(relcols.size()) == n_sm,
                        "relevant standard recount differs at " + at);
            std::vector<std::vector<Rational>> rows;
            bool ok = true;
            for (const GrassMonomial& M : ms) {
              if (!is_noncrossing_monomial(M) ||
                  !monomial_relevant_to(M, lam, 2, n))
                continue;
              auto sol = ech.solve(monomial_poly(M, 2, n));
              if (!sol) {
                ok = false;
                break;
              }
              std::vector<Rational> row;
              for (int idx : relcols) row.push_back((*sol)[idx]);
              rows.push_back(std::move(row));
            }
            ok = ok && static_cast<long>(rows.size()) == n_ncm;
            if (ok && !rows.empty()) {
              ExactMatrix A(static_cast<int>(rows.size()),
                            static_cast<int>(relcols.size()));
              for (size_t r = 0; r < rows.size(); ++r)
                for (size_t c = 0; c < rows[r].size(); ++c)
                  A.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
              ok = rank(A) == static_cast<int>(rows.size());
            }
            rec.require(ok,
                        "relevant non-crossing images not independent at " + at);
          }
        }
      }
    }
  });
}

SuiteResult suite_gl(int max_size) {
  return run_timed("gl", [max_size](Recorder& rec) {
    for (int s = 1; s <= max_size; ++s) {
      for (const Partition& lam : partitions_of(s)) {
        if (static_cast<int>(lam.size()) > 3) continue;
        GlModuleReport rep = gl_module_basis(lam, 3, 3);
        rec.require(rep.nc_rank == rep.expected,
                    "non-crossing rank off at " + ints(lam) + ": " +
                        std::to_string(rep.nc_rank) + " vs " +
                        std::to_string(rep.expected));
        rec.require(rep.ssyt_rank == rep.expected,
                    "semistandard rank off at " + ints(lam) + ": " +
                        std::to_string(rep.ssyt_rank) + " vs " +
                        std::to_string(rep.expected));
      }
    }
  });
}

std::vector<SuiteResult> run_suites(const std::string& which, int bound) {
  auto cap = [bound](int d) { return bound > 0 ? std::min(d, bound) : d; };
  std::vector<std::pair<std::string, std::function<SuiteResult()>>> suites = {
      {"display", [] { return suite_display(); }},
      {"counts", [cap] { return suite_counts(cap(8)); }},
      {"basis", [cap] { return suite_basis(cap(6)); }},
      {"weighted", [cap] { return suite_weighted(cap(6)); }},
      {"tl", [cap] { return suite_tl(cap(4)); }},
      {"bidet", [cap] { return suite_bidet(cap(4), cap(4)); }},
      {"grass", [cap] { return suite_grass(cap(4), 3); }},
      {"groebner", [cap] { return suite_groebner(cap(8), cap(6)); }},
      {"schubert", [cap] { return suite_schubert(cap(5), 2); }},
      {"gl", [cap] { return suite_gl(cap(4)); }},
  };
  std::vector<SuiteResult> out;
  bool matched = false;
  for (auto& [name, fn] : suites) {
    if (which != "all" && which != name) continue;
    matched = true;
    out.push_back(fn());
  }
  if (!matched) throw error("bad-suite", "unknown suite: '" + which + "'");
  return out;
}

}  // namespace nca
