#include "nca/bidet.hpp"

#include <algorithm>
#include <tuple>

#include "nca/error.hpp"
#include "nca/permutation.hpp"

namespace nca {

int GenericMatrix::id(int i, int j) const {
  if (i < 1 || i > rows || j < 1 || j > cols)
    throw error("out-of-range", "matrix position outside the grid");
  return var[i - 1][j - 1];
}

GenericMatrix generic_matrix(int rows, int cols) {
  if (rows < 0 || cols < 0) throw error("out-of-range", "negative dimension");
  GenericMatrix x{rows, cols, {}};
  x.var.assign(rows, std::vector<int>(cols, 0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) x.var[i][j] = i * cols + j + 1;
  return x;
}

ExactPoly minor_poly(const GenericMatrix& X, const std::vector<int>& I,
                     const std::vector<int>& J) {
  if (I.size() != J.size())
    throw error("size-mismatch", "row and column sets differ in size");
  const int k = static_cast<int>(I.size());
  if (k == 0) return ExactPoly(Rational(1));
  ExactPoly det;
  for (const Perm& s : all_permutations(k)) {
    std::map<int, int> exps;
    for (int i = 0; i < k; ++i) ++exps[X.id(I[i], J[s[i] - 1])];
    Monomial m(exps.begin(), exps.end());
    det.add_term(Rational(perm_sign(s)), m);
  }
  return det;
}

namespace {

// canonical column-pair order: longer first, then left colex, then right
bool pair_before(const Column& a, const Column& ap, const Column& b,
                 const Column& bp) {
  if (a.size() != b.size()) return a.size() > b.size();
  if (a != b) return colex_less(a, b);
  return colex_less(ap, bp);
}

void check_side_column(const Column& c) {
  if (c.empty()) throw error("bad-bitableau", "empty column");
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1) throw error("bad-bitableau", "entries must be positive");
    if (i + 1 < c.size() && c[i] >= c[i + 1])
      throw error("bad-bitableau", "columns must strictly increase");
  }
}

}  // namespace

bool Bitableau::operator<(const Bitableau& o) const {
  return std::tie(T.cols, Tprime.cols) < std::tie(o.T.cols, o.Tprime.cols);
}

void check_bitableau(const Bitableau& b) {
  if (b.T.cols.size() != b.Tprime.cols.size())
    throw error("bad-bitableau", "sides have different column counts");
  if (b.T.cols.empty()) throw error("bad-bitableau", "no columns");
  for (size_t j = 0; j < b.T.cols.size(); ++j) {
    check_side_column(b.T.cols[j]);
    check_side_column(b.Tprime.cols[j]);
    if (b.T.cols[j].size() != b.Tprime.cols[j].size())
      throw error("bad-bitableau", "sides have different shapes");
  }
}

Bitableau canonical_bitableau(Bitableau b) {
  check_bitableau(b);
  std::vector<size_t> idx(b.T.cols.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](size_t p, size_t q) {
    return pair_before(b.T.cols[p], b.Tprime.cols[p], b.T.cols[q],
                       b.Tprime.cols[q]);
  });
  Bitableau out;
  for (size_t i : idx) {
    out.T.cols.push_back(b.T.cols[i]);
    out.Tprime.cols.push_back(b.Tprime.cols[i]);
  }
  return out;
}

Partition bitableau_shape(const Bitableau& b) {
  Partition lengths;
  for (const auto& c : b.T.cols) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.rbegin(), lengths.rend());
  return conjugate(lengths);
}

Content content_of(const Tableau& t) {
  Content c;
  for (const auto& col : t.cols)
    for (int v : col) ++c[v];
  return c;
}

int content_size(const Content& c) {
  int n = 0;
  for (auto [v, m] : c) {
    (void)v;
    n += m;
  }
  return n;
}

ExactPoly bideterminant(const Bitableau& b, const GenericMatrix& X) {
  check_bitableau(b);
  ExactPoly prod(Rational(1));
  for (size_t j = 0; j < b.T.cols.size(); ++j) {
    for (int v : b.T.cols[j])
      if (v > X.rows) throw error("out-of-range", "row index beyond the grid");
    for (int v : b.Tprime.cols[j])
      if (v > X.cols)
        throw error("out-of-range", "column index beyond the grid");
    prod = prod * minor_poly(X, b.T.cols[j], b.Tprime.cols[j]);
  }
  return prod;
}

bool is_standard_side(const Tableau& t) {
  for (size_t j = 0; j + 1 < t.cols.size(); ++j) {
    const Column& a = t.cols[j];
    const Column& b = t.cols[j + 1];
    if (a.size() < b.size()) return false;
    for (size_t i = 0; i < b.size(); ++i)
      if (a[i] > b[i]) return false;
  }
  return true;
}

bool is_noncrossing_side(const Tableau& t) {
  const size_t ncols = t.cols.size();
  // the written order must be the side's own canonical arrangement; that is
  // what pins the column pairing inside a bitableau
  if (canonicalized(t).cols != t.cols) return false;
  // a column may not repeat a value (columns are sorted, so check neighbors)
  for (const Column& c : t.cols)
    for (size_t i = 0; i + 1 < c.size(); ++i)
      if (c[i] == c[i + 1]) return false;

  // occurrence lists per value, in the written order
  std::map<int, std::vector<size_t>> occ;
  for (size_t j = 0; j < ncols; ++j)
    for (int v : t.cols[j]) occ[v].push_back(j);

  std::vector<std::pair<int, std::vector<size_t>>> vals(occ.begin(), occ.end());
  // absolute index block per value
  std::vector<std::vector<int>> block(vals.size());
  {
    int next = 1;
    for (size_t vi = 0; vi < vals.size(); ++vi) {
      for (size_t k = 0; k < vals[vi].second.size(); ++k)
        block[vi].push_back(next++);
    }
  }

  // the side is non-crossing when some spreading of the repeated values
  // gives a non-crossing tableau, as a set of parts; the spread order need
  // not follow the written column order
  std::vector<std::vector<int>> chosen(vals.size());
  auto passes = [&]() {
    Tableau a;
    a.cols.assign(ncols, {});
    for (size_t vi = 0; vi < vals.size(); ++vi)
      for (size_t k = 0; k < vals[vi].second.size(); ++k)
        a.cols[vals[vi].second[k]].push_back(chosen[vi][k]);
    for (auto& c : a.cols) std::sort(c.begin(), c.end());
    return is_nct(a);
  };
  auto rec = [&](auto&& self, size_t vi) -> bool {
    if (vi == vals.size()) return passes();
    std::vector<int> perm = block[vi];
    do {
      chosen[vi] = perm;
      if (self(self, vi + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  return rec(rec, 0);
}

bool is_standard_bitableau(const Bitableau& b) {
  Bitableau c = canonical_bitableau(b);
  return is_standard_side(c.T) && is_standard_side(c.Tprime);
}

bool is_noncrossing_bitableau(const Bitableau& b) {
  Bitableau c = canonical_bitableau(b);
  return is_noncrossing_side(c.T) && is_noncrossing_side(c.Tprime);
}

namespace {

// strictly increasing columns of the given height drawn from avail
void columns_from(Content& avail, int height, int min_value, Column& acc,
                  std::vector<Column>& out) {
  if (height == 0) {
    out.push_back(acc);
    return;
  }
  for (auto it = avail.lower_bound(min_value); it != avail.end(); ++it) {
    if (it->second == 0) continue;
    --it->second;
    acc.push_back(it->first);
    columns_from(avail, height - 1, it->first + 1, acc, out);
    acc.pop_back();
    ++it->second;
  }
}

void sides_rec(const Partition& heights, size_t j, Content& avail,
               std::vector<Column>& acc, std::vector<Tableau>& out) {
  if (j == heights.size()) {
    out.push_back(Tableau{acc});
    return;
  }
  std::vector<Column> cands;
  Column tmp;
  columns_from(avail, heights[j], 1, tmp, cands);
  for (const auto& col : cands) {
    for (int v : col) --avail[v];
    acc.push_back(col);
    sides_rec(heights, j + 1, avail, acc, out);
    acc.pop_back();
    for (int v : col) ++avail[v];
  }
}

}  // namespace

std::vector<Tableau> enumerate_sides(const Partition& shape,
                                     const Content& alpha) {
  check_partition(shape);
  if (content_size(alpha) != partition_size(shape)) return {};
  Partition heights = conjugate(shape);
  Content avail = alpha;
  std::vector<Column> acc;
  std::vector<Tableau> out;
  sides_rec(heights, 0, avail, acc, out);
  return out;
}

std::vector<Tableau> enumerate_sides_bounded(const Partition& shape,
                                             int max_entry) {
  check_partition(shape);
  Content avail;
  for (int v = 1; v <= max_entry; ++v) avail[v] = shape[0];
  Partition heights = conjugate(shape);
  std::vector<Column> acc;
  std::vector<Tableau> out;
  sides_rec(heights, 0, avail, acc, out);
  return out;
}

std::vector<Bitableau> enumerate_bitableaux(const Content& alpha,
                                            const Content& beta,
                                            const Partition& shape) {
  check_partition(shape);
  std::vector<Bitableau> out;
  if (content_size(alpha) != partition_size(shape) ||
      content_size(beta) != partition_size(shape))
    return out;
  Partition heights = conjugate(shape);
  Content availA = alpha, availB = beta;
  Bitableau acc;

  auto rec = [&](auto&& self, size_t j) -> void {
    if (j == heights.size()) {
      out.push_back(acc);
      return;
    }
    std::vector<Column> left, right;
    Column tmp;
    columns_from(availA, heights[j], 1, tmp, left);
    columns_from(availB, heights[j], 1, tmp, right);
    for (const auto& cl : left) {
      for (const auto& cr : right) {
        if (j > 0 && heights[j] == heights[j - 1] &&
            pair_before(cl, cr, acc.T.cols[j - 1], acc.Tprime.cols[j - 1]))
          continue;  // keep the pair sequence canonically sorted
        for (int v : cl) --availA[v];
        for (int v : cr) --availB[v];
        acc.T.cols.push_back(cl);
        acc.Tprime.cols.push_back(cr);
        self(self, j + 1);
        acc.T.cols.pop_back();
        acc.Tprime.cols.pop_back();
        for (int v : cl) ++availA[v];
        for (int v : cr) ++availB[v];
      }
    }
  };
  rec(rec, 0);
  return out;
}

long count_bitableaux(const Content& alpha, const Content& beta,
                      const Partition& shape, Family family) {
  long n = 0;
  for (const auto& b : enumerate_bitableaux(alpha, beta, shape)) {
    bool ok = family == Family::Syt ? is_standard_bitableau(b)
                                    : is_noncrossing_bitableau(b);
    if (ok) ++n;
  }
  return n;
}

CloneResult clone_matrix(const GenericMatrix& X, const Content& alpha,
                         const Content& beta) {
  std::vector<int> row_src, col_src;
  for (auto [i, m] : alpha) {
    if (i < 1 || i > X.rows) throw error("out-of-range", "row to clone");
    if (m < 0) throw error("out-of-range", "negative multiplicity");
    for (int k = 0; k < m; ++k) row_src.push_back(i);
  }
  for (auto [j, m] : beta) {
    if (j < 1 || j > X.cols) throw error("out-of-range", "column to clone");
    if (m < 0) throw error("out-of-range", "negative multiplicity");
    for (int k = 0; k < m; ++k) col_src.push_back(j);
  }
  CloneResult res;
  res.matrix = generic_matrix(static_cast<int>(row_src.size()),
                              static_cast<int>(col_src.size()));
  for (int r = 0; r < res.matrix.rows; ++r)
    for (int c = 0; c < res.matrix.cols; ++c)
      res.specialization[res.matrix.var[r][c]] =
          X.id(row_src[r], col_src[c]);
  return res;
}

ExactPoly realize_bidet(const BidetElement& e, const GenericMatrix& X) {
  ExactPoly sum;
  for (const auto& [b, c] : e) sum += bideterminant(b, X).scaled(c);
  return sum;
}

BidetElement decompose_bideterminant(const Bitableau& b0) {
  Bitableau b = canonical_bitableau(b0);
  Content alpha = content_of(b.T), beta = content_of(b.Tprime);
  GenericMatrix X = generic_matrix(alpha.rbegin()->first, beta.rbegin()->first);
  ExactPoly target = bideterminant(b, X);

  PolyEchelon ech(true);
  std::vector<Bitableau> basis;
  for (const Partition& lam : partitions_of(content_size(alpha))) {
    for (const auto& cand : enumerate_bitableaux(alpha, beta, lam)) {
      if (!is_noncrossing_bitableau(cand)) continue;
      if (!ech.insert(bideterminant(cand, X)))
        throw error("internal", "non-crossing bideterminants came out dependent");
      basis.push_back(cand);
    }
  }
  auto sol = ech.solve(target);
  if (!sol)
    throw error("internal", "bideterminant escaped the non-crossing span");
  BidetElement out;
  for (size_t i = 0; i < basis.size(); ++i)
    if ((*sol)[i] != 0) out[basis[i]] = (*sol)[i];
  if (realize_bidet(out, X) != target)
    throw error("internal", "decomposition does not realize back");
  return out;
}

GlModuleReport gl_module_basis(const Partition& lambda, int n, int r) {
  check_partition(lambda);
  if (static_cast<int>(lambda.size()) > n)
    throw error("lambda-too-tall", "shape has more rows than the group rank");
  GenericMatrix X = generic_matrix(n, r);
  Partition heights = conjugate(lambda);
  Tableau t_lambda;
  for (int h : heights) {
    Column col(h);
    for (int i = 0; i < h; ++i) col[i] = i + 1;
    t_lambda.cols.push_back(std::move(col));
  }

  GlModuleReport rep;
  rep.expected =
      static_cast<long>(enumerate_ssyt_tableaux(lambda, r).size());
  PolyEchelon nc_ech, ssyt_ech;
  for (const auto& side : enumerate_sides_bounded(lambda, r)) {
    Bitableau m{t_lambda, side};
    if (is_noncrossing_side(side)) nc_ech.insert(bideterminant(m, X));
    if (is_standard_side(side)) ssyt_ech.insert(bideterminant(m, X));
  }
  rep.nc_rank = nc_ech.rank();
  rep.ssyt_rank = ssyt_ech.rank();
  return rep;
}

}  // namespace nca
