#include "nca/tl.hpp"

#include <algorithm>
#include <numeric>

#include "nca/error.hpp"

namespace nca {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

void check_diagram(const TLDiagram& d) {
  if (d.l <= 0) throw error("bad-diagram", "rank must be positive");
  check_matching(d.arcs);
  if (static_cast<int>(d.arcs.size()) != d.l)
    throw error("bad-diagram", "arc count must equal the rank");
  if (!is_noncrossing_matching(d.arcs))
    throw error("bad-diagram", "diagram must be planar");
}

TLDiagram tl_identity(int l) {
  TLDiagram d{l, {}};
  for (int h = 1; h <= l; ++h) d.arcs.emplace_back(h, 2 * l + 1 - h);
  std::sort(d.arcs.begin(), d.arcs.end());
  check_diagram(d);
  return d;
}

TLDiagram tl_generator(int l, int i) {
  if (i < 1 || i >= l) throw error("bad-generator", "need 1 <= i <= l-1");
  TLDiagram d{l, {}};
  d.arcs.emplace_back(i, i + 1);
  d.arcs.emplace_back(2 * l - i, 2 * l + 1 - i);
  for (int h = 1; h <= l; ++h) {
    if (h == i || h == i + 1) continue;
    d.arcs.emplace_back(h, 2 * l + 1 - h);
  }
  std::sort(d.arcs.begin(), d.arcs.end());
  check_diagram(d);
  return d;
}

TLElement tl_multiply(const TLDiagram& d1, const TLDiagram& d2,
                      const Rational& xi) {
  check_diagram(d1);
  check_diagram(d2);
  if (d1.l != d2.l) throw error("rank-mismatch", "diagram ranks differ");
  const int l = d1.l;
  // nodes: d1 points 1..2l, then d2 points offset by 2l
  Dsu dsu(4 * l + 1);
  for (auto [a, b] : d1.arcs) dsu.unite(a, b);
  for (auto [a, b] : d2.arcs) dsu.unite(2 * l + a, 2 * l + b);
  // glue d1's right height h to d2's left height h
  for (int h = 1; h <= l; ++h) dsu.unite(2 * l + 1 - h, 2 * l + h);

  // final boundary: d1's left (ids 1..l), d2's right (heights via linear ids)
  std::map<int, std::vector<int>> members;  // root -> final linear ids
  auto final_linear = [&](int h, bool left) {
    return left ? h : 2 * l + 1 - h;
  };
  for (int h = 1; h <= l; ++h) {
    members[dsu.find(h)].push_back(final_linear(h, true));
    members[dsu.find(2 * l + (2 * l + 1 - h))].push_back(final_linear(h, false));
  }
  TLDiagram out{l, {}};
  std::vector<int> used_roots;
  for (auto& [root, pts] : members) {
    if (pts.size() != 2) throw error("internal", "boundary component arity");
    out.arcs.emplace_back(std::min(pts[0], pts[1]), std::max(pts[0], pts[1]));
    used_roots.push_back(root);
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  check_diagram(out);
  // loops: interior components not meeting the final boundary
  int loops = 0;
  for (int node = 1; node <= 4 * l; ++node) {
    if (dsu.find(node) == node &&
        !std::count(used_roots.begin(), used_roots.end(), node))
      ++loops;
  }
  TLElement e;
  Rational c(1);
  for (int k = 0; k < loops; ++k) c *= xi;
  if (c != 0) e[out.arcs] = c;
  return e;
}

TLElement tl_multiply_elements(int l, const TLElement& e1, const TLElement& e2,
                               const Rational& xi) {
  TLElement out;
  for (const auto& [a1, c1] : e1) {
    for (const auto& [a2, c2] : e2) {
      TLElement prod = tl_multiply({l, a1}, {l, a2}, xi);
      for (const auto& [arcs, c] : prod) {
        out[arcs] += c1 * c2 * c;
        if (out[arcs] == 0) out.erase(arcs);
      }
    }
  }
  return out;
}

ThetaResult theta_word(const std::vector<int>& word, int l) {
  if (l <= 0) throw error("bad-generator", "rank must be positive");
  const Rational xi(-2);
  ThetaResult res;
  res.element[tl_identity(l).arcs] = 1;
  Perm w = identity_perm(l);
  for (int i : word) {
    if (i < 1 || i >= l) throw error("bad-generator", "letter out of range");
    TLElement factor;
    factor[tl_generator(l, i).arcs] = 1;
    factor[tl_identity(l).arcs] = 1;
    res.element = tl_multiply_elements(l, res.element, factor, xi);
    std::swap(w[i - 1], w[i]);
  }
  res.reduced = static_cast<int>(word.size()) == inversions(w);
  return res;
}

TLElement theta(const Perm& w) {
  check_perm(w);
  // reduced_word lists generators outermost-first as function composition;
  // diagram concatenation applies the first-glued factor first, so the word
  // is consumed in reverse
  std::vector<int> word = reduced_word(w);
  std::reverse(word.begin(), word.end());
  return theta_word(word, static_cast<int>(w.size())).element;
}

Matching wiring_matching(const Perm& w) {
  check_perm(w);
  const int l = static_cast<int>(w.size());
  Matching m;
  for (int i = 1; i <= l; ++i) m.emplace_back(i, 2 * l + 1 - w[i - 1]);
  std::sort(m.begin(), m.end());
  check_matching(m);
  return m;
}

Perm wiring_permutation(const Matching& m) {
  check_matching(m);
  const int l = static_cast<int>(m.size());
  Perm w(l, 0);
  for (auto [i, j] : m) {
    if (i > l || j <= l)
      throw error("not-a-wiring-diagram", "arcs must join the two halves");
    w[i - 1] = 2 * l + 1 - j;
  }
  check_perm(w);
  return w;
}

ArcDiagram semicircle_diagram(const Matching& m) {
  check_matching(m);
  ArcDiagram d;
  d.arcs = m;
  d.along.assign(m.size(), {});
  // abscissa of the intersection of the semicircles over [a1,b1], [a2,b2]
  std::vector<std::vector<std::pair<Rational, int>>> hits(m.size());
  for (size_t p = 0; p < m.size(); ++p) {
    for (size_t q = p + 1; q < m.size(); ++q) {
      if (!arcs_cross(m[p], m[q])) continue;
      auto [a1, b1] = m[p];
      auto [a2, b2] = m[q];
      // interleaved arcs never share a circle center, so this is finite
      Rational x = Rational(a2 * b2 - a1 * b1) /
                   Rational((a2 + b2) - (a1 + b1));
      int id = static_cast<int>(d.crossings.size());
      d.crossings.emplace_back(static_cast<int>(p), static_cast<int>(q));
      hits[p].emplace_back(x, id);
      hits[q].emplace_back(x, id);
    }
  }
  for (size_t a = 0; a < m.size(); ++a) {
    std::sort(hits[a].begin(), hits[a].end());
    for (size_t k = 0; k + 1 < hits[a].size(); ++k) {
      if (hits[a][k].first == hits[a][k + 1].first)
        throw error("internal", "concurrent crossings on one arc");
    }
    for (auto& [x, id] : hits[a]) d.along[a].push_back(id);
  }
  return d;
}

ResolveResult resolve_arc_diagram(const ArcDiagram& d) {
  const size_t k = d.crossings.size();
  const size_t n_arcs = d.arcs.size();
  // fragment ids: arc a contributes along[a].size() + 1 fragments
  std::vector<int> offset(n_arcs + 1, 0);
  for (size_t a = 0; a < n_arcs; ++a)
    offset[a + 1] = offset[a] + static_cast<int>(d.along[a].size()) + 1;
  const int n_frag = offset[n_arcs];

  // crossing -> (position along first arc, position along second arc)
  std::vector<std::pair<int, int>> pos(k);
  for (size_t a = 0; a < n_arcs; ++a) {
    for (size_t s = 0; s < d.along[a].size(); ++s) {
      int c = d.along[a][s];
      if (d.crossings[c].first == static_cast<int>(a))
        pos[c].first = static_cast<int>(s);
      else if (d.crossings[c].second == static_cast<int>(a))
        pos[c].second = static_cast<int>(s);
      else
        throw error("internal", "crossing order list names a foreign arc");
    }
  }

  ResolveResult res;
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    Dsu dsu(n_frag);
    for (size_t c = 0; c < k; ++c) {
      auto [a1, a2] = d.crossings[c];
      int l1 = offset[a1] + pos[c].first, r1 = l1 + 1;
      int l2 = offset[a2] + pos[c].second, r2 = l2 + 1;
      if (mask >> c & 1) {
        dsu.unite(l1, r2);  // horizontal smoothing
        dsu.unite(r1, l2);
      } else {
        dsu.unite(l1, l2);  // vertical smoothing
        dsu.unite(r1, r2);
      }
    }
    std::map<int, std::vector<int>> ends;  // root -> ground points
    for (size_t a = 0; a < n_arcs; ++a) {
      ends[dsu.find(offset[a])].push_back(d.arcs[a].first);
      ends[dsu.find(offset[a + 1] - 1)].push_back(d.arcs[a].second);
    }
    Uncrossing u;
    std::vector<int> strand_roots;
    for (auto& [root, pts] : ends) {
      if (pts.size() != 2) throw error("internal", "strand arity");
      u.strands.emplace_back(std::min(pts[0], pts[1]), std::max(pts[0], pts[1]));
      strand_roots.push_back(root);
    }
    std::sort(u.strands.begin(), u.strands.end());
    for (int f = 0; f < n_frag; ++f) {
      if (dsu.find(f) == f &&
          !std::count(strand_roots.begin(), strand_roots.end(), f))
        ++u.cycles;
    }
    Rational c(1);
    for (int t = 0; t < u.cycles; ++t) c *= Rational(-2);
    res.coefficients[u.strands] += c;
    if (res.coefficients[u.strands] == 0) res.coefficients.erase(u.strands);
    res.states.push_back(std::move(u));
  }
  return res;
}

ResolveResult resolve_crossings(const Tableau& t) {
  Matching m = matching_of_two_row(t);
  ResolveResult res = resolve_arc_diagram(semicircle_diagram(m));
  for (const auto& [strands, c] : res.coefficients) {
    (void)c;
    if (!is_noncrossing_matching(strands))
      throw error("internal", "smoothing left a crossing strand");
  }
  return res;
}

bool tl_coefficient_check(const Tableau& t) {
  Matching m = matching_of_two_row(t);
  Perm w = wiring_permutation(m);
  ResolveResult res = resolve_crossings(t);
  return res.coefficients == theta(w);
}

Integer catalan_dimension(int l) {
  if (l < 0) throw error("bad-matching", "rank must be nonnegative");
  if (l == 0) return 1;
  return Integer(static_cast<long>(noncrossing_matchings(l).size()));
}

}  // namespace nca
