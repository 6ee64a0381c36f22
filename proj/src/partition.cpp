#include "nca/partition.hpp"

#include <algorithm>

#include "nca/error.hpp"

namespace nca {

void check_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0)
      throw error("bad-partition", "partition parts must be positive");
    if (i > 0 && p[i] > p[i - 1])
      throw error("bad-partition", "partition parts must weakly decrease");
  }
}

int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

Partition conjugate(const Partition& p) {
  check_partition(p);
  Partition q;
  if (p.empty()) return q;
  q.resize(p[0]);
  for (int c = 0; c < p[0]; ++c) {
    int h = 0;
    for (int r : p)
      if (r > c) ++h;
    q[c] = h;
  }
  return q;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Integer syt_count_hook(const Partition& p) {
  check_partition(p);
  int n = partition_size(p);
  Partition q = conjugate(p);
  Integer num = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  Integer den = 1;
  for (size_t r = 0; r < p.size(); ++r)
    for (int c = 0; c < p[r]; ++c) {
      int hook = (p[r] - c - 1) + (q[c] - static_cast<int>(r) - 1) + 1;
      den *= hook;
    }
  return num / den;
}

RectShape enclosing_rectangle(const Partition& p) {
  check_partition(p);
  if (p.empty()) return {0, 0};
  return {static_cast<int>(p.size()), p[0]};
}

Filling canonical_filling(const Partition& lambda) {
  return canonical_filling(lambda, enclosing_rectangle(lambda));
}

Filling canonical_filling(const Partition& lambda, RectShape mu) {
  check_partition(lambda);
  if (mu.rows < 0 || mu.cols < 0 || (mu.rows == 0) != (mu.cols == 0))
    throw error("shape-not-rectangular", "degenerate rectangle");
  if (static_cast<int>(lambda.size()) > mu.rows ||
      (!lambda.empty() && lambda[0] > mu.cols))
    throw error("shape-containment", "shape does not fit inside the rectangle");

  Filling f;
  f.lambda = lambda;
  f.mu = mu;
  f.n = partition_size(lambda);
  f.col_entries.assign(mu.cols, {});
  int next = f.n + 1;
  for (int r = 1; r <= mu.rows; ++r) {
    int row_len = r <= static_cast<int>(lambda.size()) ? lambda[r - 1] : 0;
    for (int c = row_len + 1; c <= mu.cols; ++c) {
      f.col_entries[c - 1].push_back(next);
      f.cells.emplace_back(r, c);
      ++next;
    }
  }
  return f;
}

bool is_valid_filling(const Filling& f) {
  int skew = f.mu.cells() - f.n;
  if (static_cast<int>(f.cells.size()) != skew) return false;
  // entry -> cell, entries are exactly n+1..|mu|, grid positions unique
  std::vector<std::vector<int>> grid(f.mu.rows + 1,
                                     std::vector<int>(f.mu.cols + 1, 0));
  for (int k = 0; k < skew; ++k) {
    auto [r, c] = f.cells[k];
    if (r < 1 || r > f.mu.rows || c < 1 || c > f.mu.cols) return false;
    int row_len = r <= static_cast<int>(f.lambda.size()) ? f.lambda[r - 1] : 0;
    if (c <= row_len) return false;  // inside lambda
    if (grid[r][c]) return false;
    grid[r][c] = f.n + 1 + k;
  }
  for (int r = 1; r <= f.mu.rows; ++r)
    for (int c = 1; c <= f.mu.cols; ++c) {
      if (!grid[r][c]) continue;
      if (c + 1 <= f.mu.cols && grid[r][c + 1] && grid[r][c + 1] <= grid[r][c])
        return false;
      if (r + 1 <= f.mu.rows && grid[r + 1][c] && grid[r + 1][c] <= grid[r][c])
        return false;
    }
  // column lists match the cell map
  std::vector<std::vector<int>> cols(f.mu.cols);
  for (int k = 0; k < skew; ++k) cols[f.cells[k].second - 1].push_back(f.n + 1 + k);
  for (auto& c : cols) std::sort(c.begin(), c.end());
  return cols == f.col_entries;
}

}  // namespace nca
