#include "nca/grass.hpp"

#include <algorithm>
#include <sstream>

#include "nca/error.hpp"

namespace nca {

void check_pindex(const PIndex& J, int m, int n) {
  if (static_cast<int>(J.size()) != m)
    throw error("out-of-range", "index tuple must have length m");
  for (size_t k = 0; k < J.size(); ++k) {
    if (J[k] < 1 || J[k] > m + n)
      throw error("out-of-range", "column index outside 1..m+n");
    if (k + 1 < J.size() && J[k] >= J[k + 1])
      throw error("out-of-range", "index tuple must strictly increase");
  }
}

GrassMonomial canonical_monomial(GrassMonomial M) {
  std::sort(M.begin(), M.end());
  return M;
}

void check_monomial(const GrassMonomial& M, int m, int n) {
  for (const auto& J : M) check_pindex(J, m, n);
}

ExactPoly pindex_poly(const PIndex& J, int m, int n) {
  check_pindex(J, m, n);
  GenericMatrix X = generic_matrix(m, m + n);
  std::vector<int> rows(m);
  for (int i = 0; i < m; ++i) rows[i] = i + 1;
  return minor_poly(X, rows, J);
}

ExactPoly monomial_poly(const GrassMonomial& M, int m, int n) {
  ExactPoly p(Rational(1));
  for (const auto& J : M) p = p * pindex_poly(J, m, n);
  return p;
}

ExactPoly element_poly(const GrassElement& e, int m, int n) {
  ExactPoly p;
  for (const auto& [M, c] : e) p += monomial_poly(M, m, n).scaled(c);
  return p;
}

namespace {

// parity of the permutation sorting v; nullopt-like -2 when v has repeats
int sort_parity(std::vector<int>& v) {
  int inv = 0;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return -2;
      if (v[i] > v[j]) ++inv;
    }
  std::sort(v.begin(), v.end());
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

GrassElement pluecker_relation(const PIndex& I, const PIndex& J, int l, int m,
                               int n) {
  check_pindex(I, m, n);
  check_pindex(J, m, n);
  if (l < 1 || l > m) throw error("out-of-range", "need 1 <= l <= m");

  // exchange window: tail of I from position l, prefix of J through l
  std::vector<int> window;
  for (int k = l - 1; k < m; ++k) window.push_back(I[k]);
  for (int k = 0; k < l; ++k) window.push_back(J[k]);
  const int w = static_cast<int>(window.size());  // m - l + 1 + l = m + 1
  const int take = m - l + 1;

  GrassElement rel;
  std::vector<int> pick(take);
  auto emit = [&](const std::vector<int>& positions) {
    std::vector<int> in_i, in_j;
    std::vector<bool> used(w, false);
    for (int p : positions) used[p] = true;
    for (int k = 0; k < l - 1; ++k) in_i.push_back(I[k]);
    for (int p : positions) in_i.push_back(window[p]);
    for (int p = 0; p < w; ++p)
      if (!used[p]) in_j.push_back(window[p]);
    for (int k = l; k < m; ++k) in_j.push_back(J[k]);

    int pos_sum = 0;
    for (int p : positions) pos_sum += p + 1;
    int base = (pos_sum - take * (take + 1) / 2) % 2 == 0 ? 1 : -1;
    int si = sort_parity(in_i);
    int sj = sort_parity(in_j);
    if (si == -2 || sj == -2) return;  // repeated column: zero minor
    GrassMonomial M = canonical_monomial({in_i, in_j});
    Rational& c = rel[M];
    c += Rational(base * si * sj);
    if (c == 0) rel.erase(M);
  };
  auto rec = [&](auto&& self, int from, int got) -> void {
    if (got == take) {
      emit(pick);
      return;
    }
    for (int p = from; p < w; ++p) {
      pick[got] = p;
      self(self, p + 1, got + 1);
    }
  };
  rec(rec, 0, 0);
  return rel;
}

bool is_standard_monomial(const GrassMonomial& M) {
  GrassMonomial s = canonical_monomial(M);
  for (size_t i = 0; i + 1 < s.size(); ++i)
    for (size_t k = 0; k < s[i].size(); ++k)
      if (s[i][k] > s[i + 1][k]) return false;
  return true;
}

bool is_noncrossing_monomial(const GrassMonomial& M) {
  for (size_t p = 0; p < M.size(); ++p)
    for (size_t q = 0; q < M.size(); ++q) {
      if (p == q) continue;
      for (size_t k = 0; k + 1 < M[p].size(); ++k)
        if (M[p][k] < M[q][k] && M[q][k] < M[p][k + 1] &&
            M[p][k + 1] < M[q][k + 1])
          return false;
    }
  return true;
}

int weight(const PIndex& J) {
  if (J.size() != 2)
    throw error("unsupported", "the weight order is defined for m = 2");
  return J[1] - J[0];
}

Integer monomial_weight(const GrassMonomial& M) {
  Integer w = 1;
  for (const auto& J : M) w *= weight(J);
  return w;
}

bool precedes(const GrassMonomial& M1, const GrassMonomial& M2) {
  Integer w1 = monomial_weight(M1), w2 = monomial_weight(M2);
  if (w1 != w2) return w1 > w2;  // larger weight = smaller monomial
  return canonical_monomial(M1) < canonical_monomial(M2);
}

GrassMonomial initial_term(const GrassElement& f) {
  if (f.empty()) throw error("zero-element", "no initial term in zero");
  const GrassMonomial* best = nullptr;
  for (const auto& [M, c] : f) {
    (void)c;
    if (!best || precedes(M, *best)) best = &M;
  }
  return *best;
}

namespace {

// first crossing pair of the monomial, as factor positions, smallest
// degree-2 submonomial first
bool crossing_pair(const GrassMonomial& M, size_t& bp, size_t& bq) {
  bool found = false;
  GrassMonomial best;
  for (size_t p = 0; p < M.size(); ++p)
    for (size_t q = p + 1; q < M.size(); ++q) {
      if (is_noncrossing_monomial({M[p], M[q]})) continue;
      GrassMonomial sub = canonical_monomial({M[p], M[q]});
      if (!found || precedes(sub, best)) {
        found = true;
        best = sub;
        bp = p;
        bq = q;
      }
    }
  return found;
}

}  // namespace

GrassElement straighten_g2n(const GrassMonomial& M0) {
  GrassMonomial M = canonical_monomial(M0);
  for (const auto& J : M)
    if (J.size() != 2)
      throw error("unsupported", "straightening is implemented for m = 2");

  GrassElement work;
  work[M] += 1;
  for (long step = 0; step < 100000; ++step) {
    const GrassMonomial* target = nullptr;
    size_t p = 0, q = 0;
    for (const auto& [cand, c] : work) {
      (void)c;
      size_t cp, cq;
      if (!crossing_pair(cand, cp, cq)) continue;
      if (!target || precedes(cand, *target)) {
        target = &cand;
        p = cp;
        q = cq;
      }
    }
    if (!target) return work;

    GrassMonomial cur = *target;
    Rational coeff = work[cur];
    work.erase(cur);
    PIndex a = cur[p], b = cur[q];
    if (!(a[0] < b[0] && b[0] < a[1] && a[1] < b[1])) std::swap(a, b);
    GrassMonomial rest;
    for (size_t i = 0; i < cur.size(); ++i)
      if (i != p && i != q) rest.push_back(cur[i]);

    for (const GrassMonomial& repl :
         {GrassMonomial{{a[0], b[0]}, {a[1], b[1]}},
          GrassMonomial{{a[0], b[1]}, {b[0], a[1]}}}) {
      GrassMonomial next = rest;
      next.insert(next.end(), repl.begin(), repl.end());
      next = canonical_monomial(next);
      Rational& c = work[next];
      c += coeff;
      if (c == 0) work.erase(next);
    }
  }
  throw error("internal", "straightening exceeded the step bound");
}

bool relevant_to(const PIndex& J, const Partition& lambda, int m, int n) {
  check_pindex(J, m, n);
  if (!lambda.empty()) {
    check_partition(lambda);
    if (static_cast<int>(lambda.size()) > m || lambda[0] > n)
      throw error("lambda-too-large", "shape outside the m x n box");
  }
  for (int k = 1; k <= m; ++k) {
    int lk = k <= static_cast<int>(lambda.size()) ? lambda[k - 1] : 0;
    if (J[k - 1] > n + k - lk) return false;
  }
  return true;
}

bool monomial_relevant_to(const GrassMonomial& M, const Partition& lambda,
                          int m, int n) {
  for (const auto& J : M)
    if (!relevant_to(J, lambda, m, n)) return false;
  return true;
}

std::vector<PIndex> pindices(int m, int n) {
  std::vector<PIndex> out;
  PIndex cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= m + n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<GrassMonomial> monomials_of_degree(int m, int n, int d) {
  std::vector<PIndex> coords = pindices(m, n);
  std::vector<GrassMonomial> out;
  GrassMonomial cur;
  auto rec = [&](auto&& self, size_t from) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (size_t i = from; i < coords.size(); ++i) {
      cur.push_back(coords[i]);
      self(self, i);  // multisets: factors may repeat
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

GradedDimension graded_dimension(int m, int n, int d) {
  GradedDimension g;
  PolyEchelon ech;
  for (const auto& M : monomials_of_degree(m, n, d)) {
    if (is_standard_monomial(M)) ++g.standard_count;
    if (is_noncrossing_monomial(M)) ++g.noncrossing_count;
    ech.insert(monomial_poly(M, m, n));
  }
  g.rank = ech.rank();
  return g;
}

std::pair<long, long> schubert_counts(const Partition& lambda, int n, int d) {
  long sm = 0, ncm = 0;
  for (const auto& M : monomials_of_degree(2, n, d)) {
    if (!monomial_relevant_to(M, lambda, 2, n)) continue;
    if (is_standard_monomial(M)) ++sm;
    if (is_noncrossing_monomial(M)) ++ncm;
  }
  return {sm, ncm};
}

namespace {

int crossing_count(const GrassMonomial& M) {
  int c = 0;
  for (size_t p = 0; p < M.size(); ++p)
    for (size_t q = 0; q < M.size(); ++q) {
      if (p == q) continue;
      for (size_t k = 0; k + 1 < M[p].size(); ++k)
        if (M[p][k] < M[q][k] && M[q][k] < M[p][k + 1] &&
            M[p][k + 1] < M[q][k + 1])
          ++c;
    }
  return c;
}

std::string monomial_str(const GrassMonomial& M) {
  std::ostringstream os;
  for (const auto& J : M) {
    os << "P(";
    for (size_t k = 0; k < J.size(); ++k) os << (k ? "," : "") << J[k];
    os << ")";
  }
  return os.str();
}

}  // namespace

SeagullResult seagull_rewrite(const GrassMonomial& M0, int n, int max_steps) {
  const int m = 3;
  GrassMonomial M = canonical_monomial(M0);
  check_monomial(M, m, n);
  for (const auto& J : M)
    if (J.size() != 3)
      throw error("unsupported", "seagull rewriting expects m = 3");

  SeagullResult res;
  res.element[M] += 1;
  for (int step = 0; step < max_steps; ++step) {
    // lex-first monomial carrying a crossing, lex-first crossing in it
    const GrassMonomial* target = nullptr;
    for (const auto& [cand, c] : res.element) {
      (void)c;
      if (!is_noncrossing_monomial(cand)) {
        target = &cand;
        break;
      }
    }
    if (!target) {
      res.finished = true;
      return res;
    }
    GrassMonomial cur = *target;
    size_t p = 0, q = 0;
    int k = -1;
    for (p = 0; p < cur.size() && k < 0; ++p)
      for (q = 0; q < cur.size() && k < 0; ++q) {
        if (p == q) continue;
        for (size_t kk = 0; kk + 1 < cur[p].size(); ++kk)
          if (cur[p][kk] < cur[q][kk] && cur[q][kk] < cur[p][kk + 1] &&
              cur[p][kk + 1] < cur[q][kk + 1]) {
            k = static_cast<int>(kk);
            break;
          }
      }
    --p;
    --q;

    Rational coeff = res.element[cur];
    res.element.erase(cur);
    GrassMonomial rest;
    for (size_t i = 0; i < cur.size(); ++i)
      if (i != p && i != q) rest.push_back(cur[i]);

    // exchange around the crossing position; solve the relation for the
    // rewritten pair (coset collisions can scale or cancel its coefficient,
    // so it is read off rather than assumed to be +1)
    GrassElement rel = pluecker_relation(cur[p], cur[q], k + 2, m, n);
    GrassMonomial id_term = canonical_monomial({cur[p], cur[q]});
    auto id_it = rel.find(id_term);
    if (id_it == rel.end())
      throw error("internal", "exchange relation lost the rewritten pair");
    Rational c_id = id_it->second;
    rel.erase(id_it);
    std::ostringstream line;
    line << "step " << step << ": " << monomial_str(cur) << " (crossings "
         << crossing_count(cur) << ") -> " << rel.size() << " terms";
    for (const auto& [pair_mon, c] : rel) {
      GrassMonomial next = rest;
      next.insert(next.end(), pair_mon.begin(), pair_mon.end());
      next = canonical_monomial(next);
      Rational& target_c = res.element[next];
      target_c += coeff * (-c / c_id);
      if (target_c == 0) res.element.erase(next);
    }
    res.log.push_back(line.str());
  }
  res.finished = false;
  for (const auto& [cand, c] : res.element) {
    (void)c;
    if (!is_noncrossing_monomial(cand)) {
      res.log.push_back("cap reached with crossings remaining in " +
                        monomial_str(cand));
      break;
    }
  }
  return res;
}

}  // namespace nca
