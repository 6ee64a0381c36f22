#include "nca/linalg.hpp"

#include <algorithm>
#include <map>

#include "nca/error.hpp"

namespace nca {

namespace {

// Denominator-cleared integer copy; row scaling keeps rank and row spans.
std::vector<std::vector<Integer>> integerize(const ExactMatrix& m,
                                             const std::vector<Rational>* rhs) {
  int extra = rhs ? 1 : 0;
  std::vector<std::vector<Integer>> a(
      m.rows(), std::vector<Integer>(m.cols() + extra));
  for (int i = 0; i < m.rows(); ++i) {
    Integer l(1);
    for (int j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    if (rhs)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)[i].get_den_mpz_t());
    for (int j = 0; j < m.cols(); ++j)
      a[i][j] = Integer(m.at(i, j).get_num()) * (l / Integer(m.at(i, j).get_den()));
    if (rhs)
      a[i][m.cols()] =
          Integer((*rhs)[i].get_num()) * (l / Integer((*rhs)[i].get_den()));
  }
  return a;
}

// One-step fraction-free elimination. Pivot columns are recorded in order;
// returns the row rank. `width` columns take part in pivoting; any extra
// columns (an augmented right-hand side) are carried through the same row
// operations.
int bareiss(std::vector<std::vector<Integer>>& a, int width,
            std::vector<int>* pivot_cols) {
  int rows = static_cast<int>(a.size());
  int total = rows ? static_cast<int>(a[0].size()) : 0;
  Integer prev(1);
  int r = 0;
  for (int c = 0; c < width && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < total; ++j) {
        Integer t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

int rank(const ExactMatrix& m) {
  auto a = integerize(m, nullptr);
  return bareiss(a, m.cols(), nullptr);
}

std::optional<std::vector<Rational>> solve(const ExactMatrix& m,
                                           const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw error("dimension-mismatch", "solve: |b| != rows");
  auto a = integerize(m, &b);
  std::vector<int> pivots;
  int r = bareiss(a, m.cols(), &pivots);
  for (int i = r; i < m.rows(); ++i)
    if (a[i][m.cols()] != 0) return std::nullopt;
  std::vector<Rational> x(m.cols(), Rational(0));
  for (int i = r - 1; i >= 0; --i) {
    Rational acc(a[i][m.cols()]);
    for (int j = i + 1; j < r; ++j)
      acc -= Rational(a[i][pivots[j]]) * x[pivots[j]];
    x[pivots[i]] = acc / Rational(a[i][pivots[i]]);
  }
  return x;
}

ExactPoly PolyEchelon::reduce(const ExactPoly& p,
                              std::map<int, Rational>* used) const {
  if (used) used->clear();
  // Leading monomials of rows_ are pairwise distinct, so repeatedly
  // cancelling the leading term either reaches 0 or exits the span.
  ExactPoly r = p;
  while (!r.is_zero()) {
    auto [mono, coeff] = r.leading_term();
    auto it = by_lead_.find(mono);
    if (it == by_lead_.end()) break;
    const Row& row = rows_[it->second];
    Rational f = coeff / row.poly.leading_term().second;
    r -= row.poly.scaled(f);
    if (used) (*used)[it->second] += f;
  }
  return r;
}

bool PolyEchelon::insert(const ExactPoly& p) {
  std::map<int, Rational> used;
  ExactPoly residual = reduce(p, track_ ? &used : nullptr);
  int idx = n_inserted_++;
  if (residual.is_zero()) return false;
  Row row;
  row.poly = std::move(residual);
  if (track_) {
    row.comb[idx] = 1;
    for (const auto& [j, f] : used) {
      if (f == 0) continue;
      for (const auto& [k, c] : rows_[j].comb) row.comb[k] -= f * c;
    }
    for (auto it = row.comb.begin(); it != row.comb.end();)
      it = it->second == 0 ? row.comb.erase(it) : std::next(it);
  }
  by_lead_.emplace(row.poly.leading_term().first, static_cast<int>(rows_.size()));
  rows_.push_back(std::move(row));
  return true;
}

std::optional<std::vector<Rational>> PolyEchelon::solve(
    const ExactPoly& target) const {
  if (!track_)
    throw error("internal", "PolyEchelon::solve requires combination tracking");
  std::map<int, Rational> used;
  ExactPoly residual = reduce(target, &used);
  if (!residual.is_zero()) return std::nullopt;
  std::vector<Rational> out(n_inserted_, Rational(0));
  for (const auto& [j, f] : used) {
    if (f == 0) continue;
    for (const auto& [k, c] : rows_[j].comb) out[k] += f * c;
  }
  return out;
}

}  // namespace nca
