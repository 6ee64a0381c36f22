#include "nca/specht.hpp"

#include <algorithm>
#include <set>

#include "nca/error.hpp"
#include "nca/linalg.hpp"

namespace nca {

ExactPoly specht_poly(const Tableau& t) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& col : t.cols) {
    if (col.empty()) throw error("malformed-part", "empty column");
    for (size_t i = 0; i < col.size(); ++i) {
      if (col[i] <= 0 || (i > 0 && col[i] <= col[i - 1]))
        throw error("malformed-part", "columns must strictly increase");
      for (size_t j = i + 1; j < col.size(); ++j)
        pairs.emplace_back(col[i], col[j]);
    }
  }
  return difference_product(pairs);
}

ExactPoly realize(const SpechtElement& e) {
  ExactPoly out;
  for (const auto& [t, c] : e) out += specht_poly(t).scaled(c);
  return out;
}

namespace {

// Relabels entries through `image` (identity beyond its length), sorts each
// part, and accumulates the per-part inversion parity.
std::pair<Tableau, int> apply_point_map(const std::vector<int>& image,
                                        const Tableau& t) {
  Tableau out;
  int sign = 1;
  for (const auto& col : t.cols) {
    Column c;
    for (int e : col)
      c.push_back(e <= static_cast<int>(image.size()) ? image[e - 1] : e);
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j)
        if (c[i] > c[j]) sign = -sign;
    std::sort(c.begin(), c.end());
    out.cols.push_back(std::move(c));
  }
  return {std::move(out), sign};
}

}  // namespace

std::pair<Tableau, int> permute_tableau(const Perm& w, const Tableau& t,
                                        int n_free) {
  check_perm(w);
  for (size_t i = n_free; i < w.size(); ++i) {
    if (w[i] != static_cast<int>(i) + 1)
      throw error("action-domain", "permutation moves a frozen entry");
  }
  return apply_point_map(w, t);
}

namespace {

struct GarnirMove {
  SpechtElement terms;  // T = sum of these
};

// Exchange relation at the first row descent between adjacent columns j,
// j+1 of the canonically ordered tableau. Tries the unsigned coefficient
// convention first, then the signed one; the returned identity is verified
// exactly. r0 is the 0-based descent row.
GarnirMove garnir_relation(const Tableau& t, size_t j, size_t r0) {
  const Column& c1 = t.cols[j];
  const Column& c2 = t.cols[j + 1];
  std::vector<int> a(c1.begin() + r0, c1.end());
  std::vector<int> b(c2.begin(), c2.begin() + r0 + 1);
  std::vector<int> u;
  u.insert(u.end(), a.begin(), a.end());
  u.insert(u.end(), b.begin(), b.end());
  std::sort(u.begin(), u.end());
  const size_t ka = a.size();

  // other = all splits of u into (new a, new b) except the original one
  std::vector<std::pair<Tableau, int>> terms;  // (tableau, epsilon)
  std::vector<int> pick(u.size(), 0);
  std::fill(pick.begin(), pick.begin() + ka, 1);
  std::sort(pick.begin(), pick.end());
  // iterate subsets of size ka via permutations of the 0/1 mask
  do {
    std::vector<int> na, nb;
    for (size_t i = 0; i < u.size(); ++i) (pick[i] ? na : nb).push_back(u[i]);
    if (na == a) continue;
    // point map sending sorted a -> na and sorted b -> nb order-preservingly
    std::vector<int> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    int max_pt = u.back();
    std::vector<int> image(max_pt);
    for (int i = 0; i < max_pt; ++i) image[i] = i + 1;
    for (size_t i = 0; i < sa.size(); ++i) image[sa[i] - 1] = na[i];
    for (size_t i = 0; i < sb.size(); ++i) image[sb[i] - 1] = nb[i];
    // parity of the map restricted to u
    int eps = 1;
    for (size_t x = 0; x < u.size(); ++x)
      for (size_t y = x + 1; y < u.size(); ++y)
        if (image[u[x] - 1] > image[u[y] - 1]) eps = -eps;
    auto [nt, sort_sign] = apply_point_map(image, t);
    terms.emplace_back(canonicalized(nt), eps * sort_sign);
  } while (std::next_permutation(pick.begin(), pick.end()));

  const ExactPoly lhs = specht_poly(t);
  for (int attempt = 0; attempt < 2; ++attempt) {
    SpechtElement cand;
    ExactPoly sum;
    for (const auto& [nt, eps] : terms) {
      Rational c = attempt == 0 ? Rational(-1) : Rational(-eps);
      cand[nt] += c;
    }
    for (auto it = cand.begin(); it != cand.end();) {
      if (it->second == 0)
        it = cand.erase(it);
      else
        ++it;
    }
    for (const auto& [nt, c] : cand) sum += specht_poly(nt).scaled(c);
    if (sum == lhs) return {std::move(cand)};
  }
  throw error("internal", "exchange relation failed verification");
}

// 0-based (column, row) of the first row descent in canonical column order,
// or nullopt when rows increase everywhere (the standard case).
std::optional<std::pair<size_t, size_t>> first_descent(const Tableau& t) {
  for (size_t j = 0; j + 1 < t.cols.size(); ++j) {
    size_t m = std::min(t.cols[j].size(), t.cols[j + 1].size());
    for (size_t r = 0; r < m; ++r) {
      if (t.cols[j][r] > t.cols[j + 1][r]) return std::make_pair(j, r);
    }
  }
  return std::nullopt;
}

Partition shape_of_columns(const Tableau& t) {
  Partition lengths;
  for (const auto& c : t.cols) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.rbegin(), lengths.rend());
  return conjugate(lengths);
}

std::vector<Tableau> standard_family_of(const Tableau& t) {
  const Partition lambda = shape_of_columns(t);
  const Filling f = canonical_filling(lambda);
  if (f.total() == t.entry_count()) return enumerate_syt(f);  // completed
  std::vector<Tableau> out;
  for (const auto& s : enumerate_syt(f)) out.push_back(strip_filling(s, f));
  return out;
}

}  // namespace

SpechtElement garnir_expand(const Tableau& t) {
  if (!is_partition_tableau(t))
    throw error("malformed-part", "straightening requires a partition tableau");
  SpechtElement pending, result;
  pending[canonicalized(t)] = 1;
  // strictly decreasing concatenated column words bound the loop; the cap is
  // a safety net
  const int cap = 200000;
  int steps = 0;
  while (!pending.empty()) {
    if (++steps > cap) {
      SpechtElement out =
          decompose_into_family(t, standard_family_of(t));
      return out;
    }
    auto [cur, coeff] = *pending.begin();
    pending.erase(pending.begin());
    if (coeff == 0) continue;
    auto descent = first_descent(cur);
    if (!descent) {
      result[cur] += coeff;
      if (result[cur] == 0) result.erase(cur);
      continue;
    }
    GarnirMove move = garnir_relation(cur, descent->first, descent->second);
    for (const auto& [nt, c] : move.terms) {
      pending[nt] += coeff * c;
      if (pending[nt] == 0) pending.erase(nt);
    }
  }
  return result;
}

SpechtElement decompose_into_family(const Tableau& t,
                                    const std::vector<Tableau>& family) {
  PolyEchelon ech(true);
  for (const auto& m : family) {
    if (!ech.insert(specht_poly(m)))
      throw error("internal", "family polynomials are linearly dependent");
  }
  auto coeffs = ech.solve(specht_poly(t));
  if (!coeffs)
    throw error("internal", "polynomial lies outside the family span");
  SpechtElement out;
  for (size_t i = 0; i < family.size(); ++i) {
    if ((*coeffs)[i] != 0) out[canonicalized(family[i])] = (*coeffs)[i];
  }
  return out;
}

// The decomposition lives on the movable entries: completed Specht products
// span more than the module itself (extra directions mix the frozen
// variables in), so inputs are stripped and solved over the shape-lambda
// non-crossing family, which is an honest basis there.
SpechtElement decompose_into_nct(const Tableau& t, const Filling& f) {
  if (!is_partition_tableau(t))
    throw error("malformed-part", "decomposition requires a partition tableau");
  // entries are contiguous from 1, so the count decides the view
  const int count = t.entry_count();
  if (count != f.n && count != f.total())
    throw error("filling-disagreement", "partial completion");
  Tableau bare = movable_part(t, f.n);
  Partition sizes;
  for (const auto& col : bare.cols)
    sizes.push_back(static_cast<int>(col.size()));
  std::sort(sizes.rbegin(), sizes.rend());
  if (sizes != conjugate(f.lambda))
    throw error("filling-disagreement",
                "movable entries do not fill the shape");
  SpechtElement out = decompose_into_family(bare, enumerate_nct(f.lambda));
  if (realize(out) != specht_poly(bare))
    throw error("internal", "decomposition failed the exactness check");
  return out;
}

std::map<int, Rational> reading_evaluation(const Tableau& t0) {
  Reading r = reading_of(t0);
  std::map<int, Rational> out;
  for (size_t i = 0; i < r.size(); ++i)
    out[static_cast<int>(i) + 1] = Rational(r[i]);
  return out;
}

namespace {

int family_rank(const std::vector<Tableau>& family) {
  PolyEchelon ech;
  for (const auto& t : family) ech.insert(specht_poly(t));
  return ech.rank();
}

}  // namespace

int module_rank(const Partition& lambda) {
  return family_rank(enumerate_bare_tableaux(lambda));
}

int module_rank_completed(const Partition& lambda) {
  return family_rank(enumerate_syt(canonical_filling(lambda)));
}

}  // namespace nca
