#pragma once

#include <utility>
#include <vector>

#include "nca/rational.hpp"

namespace nca {

// Weakly decreasing positive parts; {} is the empty partition.
using Partition = std::vector<int>;

void check_partition(const Partition& p);  // throws bad-partition
int partition_size(const Partition& p);
Partition conjugate(const Partition& p);
std::vector<Partition> partitions_of(int n);

// Number of standard Young tableaux of straight shape, by the hook length
// formula. Used as the counting oracle the enumeration routines are checked
// against.
Integer syt_count_hook(const Partition& p);

struct RectShape {
  int rows = 0, cols = 0;
  int cells() const { return rows * cols; }
  bool operator==(const RectShape&) const = default;
};

// Smallest rectangle containing the shape.
RectShape enclosing_rectangle(const Partition& p);

// A completion filling: the cells of mu/lambda carry the frozen entries
// n+1..|mu|, strictly increasing along rows and columns of the skew part.
struct Filling {
  Partition lambda;
  RectShape mu;
  int n = 0;  // movable entries are 1..n
  std::vector<std::vector<int>> col_entries;        // per column of mu, sorted
  std::vector<std::pair<int, int>> cells;           // entry n+1+k -> (row, col), 1-based
  int total() const { return mu.cells(); }
};

// Row-major canonical filling of mu/lambda. mu defaults to the enclosing
// rectangle. Throws shape-containment when lambda does not fit inside mu and
// shape-not-rectangular when mu has no cells in some row.
Filling canonical_filling(const Partition& lambda);
Filling canonical_filling(const Partition& lambda, RectShape mu);

bool is_valid_filling(const Filling& f);

}  // namespace nca
