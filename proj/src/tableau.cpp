#include "nca/tableau.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nca/error.hpp"

namespace nca {

namespace {

void check_column(const Column& c) {
  if (c.empty()) throw error("malformed-part", "empty column");
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] <= 0) throw error("malformed-part", "entries must be positive");
    if (i > 0 && c[i] <= c[i - 1])
      throw error("malformed-part", "column entries must strictly increase");
  }
}

}  // namespace

int Tableau::entry_count() const {
  int n = 0;
  for (const auto& c : cols) n += static_cast<int>(c.size());
  return n;
}

bool colex_less(const Column& a, const Column& b) {
  size_t i = std::min(a.size(), b.size());
  while (i-- > 0) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

Tableau canonicalized(Tableau t) {
  std::sort(t.cols.begin(), t.cols.end(), [](const Column& a, const Column& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return colex_less(a, b);
  });
  return t;
}

bool segments_noncrossing(const Column& a, const Column& b) {
  size_t m = std::min(a.size(), b.size());
  for (size_t i = 0; i + 1 < m; ++i) {
    // crossing: one segment starts strictly inside the other and ends
    // strictly beyond it
    if (a[i] < b[i] && b[i] < a[i + 1] && a[i + 1] < b[i + 1]) return false;
    if (b[i] < a[i] && a[i] < b[i + 1] && b[i + 1] < a[i + 1]) return false;
  }
  return true;
}

bool segments_nonnesting(const Column& a, const Column& b) {
  size_t m = std::min(a.size(), b.size());
  for (size_t i = 0; i + 1 < m; ++i) {
    if (a[i] < b[i] && b[i + 1] < a[i + 1]) return false;
    if (b[i] < a[i] && a[i + 1] < b[i + 1]) return false;
  }
  return true;
}

bool is_noncrossing_pair(const Column& a, const Column& b) {
  check_column(a);
  check_column(b);
  size_t p = a.size(), q = b.size();
  if (p < q) throw error("malformed-part", "left column must not be shorter");
  if (!segments_noncrossing(a, b)) return false;
  if (p > q) {
    // the missing segment of b may not start inside a's q-th segment
    if (a[q - 1] < b[q - 1] && b[q - 1] < a[q]) return false;
    return true;
  }
  // equal lengths: the last disagreement decides the column order
  size_t s = p;
  while (s-- > 0) {
    if (a[s] != b[s]) return a[s] < b[s];
  }
  return true;  // identical columns
}

bool is_nonnesting_pair(const Column& a, const Column& b) {
  check_column(a);
  check_column(b);
  size_t p = a.size(), q = b.size();
  if (p < q) throw error("malformed-part", "left column must not be shorter");
  if (!segments_nonnesting(a, b)) return false;
  if (p > q) {
    // b's last point may not sit below a's continuation
    return a[q - 1] < b[q - 1];
  }
  size_t s = p;
  while (s-- > 0) {
    if (a[s] != b[s]) return a[s] < b[s];
  }
  return true;
}

bool is_partition_tableau(const Tableau& t) {
  std::vector<int> seen;
  for (const auto& c : t.cols) {
    if (c.empty()) return false;
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] <= 0) return false;
      if (i > 0 && c[i] <= c[i - 1]) return false;
      seen.push_back(c[i]);
    }
  }
  std::sort(seen.begin(), seen.end());
  for (size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != static_cast<int>(i) + 1) return false;
  }
  return !seen.empty();
}

bool is_rectangular_tableau(const Tableau& t) {
  if (t.cols.empty()) return false;
  for (const auto& c : t.cols) {
    if (c.size() != t.cols.front().size()) return false;
  }
  return true;
}

namespace {

template <bool (*PairOk)(const Column&, const Column&)>
bool tableau_predicate(const Tableau& t) {
  if (!is_partition_tableau(t)) return false;
  Tableau c = canonicalized(t);
  for (size_t j = 0; j < c.cols.size(); ++j) {
    for (size_t k = j + 1; k < c.cols.size(); ++k) {
      if (!PairOk(c.cols[j], c.cols[k])) return false;
    }
  }
  return true;
}

}  // namespace

bool is_nct(const Tableau& t) { return tableau_predicate<is_noncrossing_pair>(t); }
bool is_syt(const Tableau& t) { return tableau_predicate<is_nonnesting_pair>(t); }

Tableau complete_with_filling(const Tableau& t, const Filling& f) {
  const Partition lc = conjugate(f.lambda);
  if (t.cols.size() != lc.size())
    throw error("shape-containment", "column count does not match the shape");
  Tableau out;
  for (size_t j = 0; j < t.cols.size(); ++j) {
    const Column& c = t.cols[j];
    if (static_cast<int>(c.size()) != lc[j])
      throw error("shape-containment", "column length does not match the shape");
    Column full = c;
    for (int e : c) {
      if (e > f.n)
        throw error("shape-containment", "diagram-view entries must stay <= n");
    }
    full.insert(full.end(), f.col_entries[j].begin(), f.col_entries[j].end());
    std::sort(full.begin(), full.end());
    check_column(full);
    out.cols.push_back(std::move(full));
  }
  return out;
}

bool agrees_with_filling(const Tableau& t, const Filling& f) {
  return arrange_by_filling(t, f).has_value();
}

std::optional<Tableau> arrange_by_filling(const Tableau& t, const Filling& f) {
  const size_t width = f.col_entries.size();
  if (t.cols.size() != width) return std::nullopt;
  if (!is_partition_tableau(t)) return std::nullopt;
  if (t.entry_count() != f.total()) return std::nullopt;
  std::vector<const Column*> slot(width, nullptr);
  std::vector<const Column*> bare;  // parts without frozen entries
  for (const auto& part : t.cols) {
    Column frozen;
    for (int e : part) {
      if (e > f.n) frozen.push_back(e);
    }
    if (frozen.empty()) {
      bare.push_back(&part);
      continue;
    }
    bool placed = false;
    for (size_t j = 0; j < width; ++j) {
      if (!slot[j] && f.col_entries[j] == frozen) {
        slot[j] = &part;
        placed = true;
        break;
      }
    }
    if (!placed) return std::nullopt;
  }
  std::sort(bare.begin(), bare.end(),
            [](const Column* a, const Column* b) { return colex_less(*a, *b); });
  size_t next = 0;
  for (size_t j = 0; j < width; ++j) {
    if (slot[j]) continue;
    if (!f.col_entries[j].empty() || next >= bare.size()) return std::nullopt;
    slot[j] = bare[next++];
  }
  if (next != bare.size()) return std::nullopt;
  Tableau out;
  for (size_t j = 0; j < width; ++j) {
    if (static_cast<int>(slot[j]->size()) != f.mu.rows) return std::nullopt;
    out.cols.push_back(*slot[j]);
  }
  return out;
}

Tableau strip_filling(const Tableau& t, const Filling& f) {
  auto arranged = arrange_by_filling(t, f);
  if (!arranged)
    throw error("filling-disagreement",
                "tableau does not agree with the filling");
  Tableau out;
  for (const auto& part : arranged->cols) {
    Column c;
    for (int e : part) {
      if (e <= f.n) c.push_back(e);
    }
    out.cols.push_back(std::move(c));
  }
  return out;
}

Tableau movable_part(const Tableau& t, int n) {
  Tableau out;
  for (const auto& part : t.cols) {
    Column c;
    for (int e : part) {
      if (e <= n) c.push_back(e);
    }
    if (!c.empty()) out.cols.push_back(std::move(c));
  }
  return canonicalized(out);
}

bool is_yamanouchi(const Reading& r) {
  if (r.empty()) return false;
  std::map<int, int> count;
  for (int l : r) {
    if (l <= 0) return false;
    ++count[l];
    if (l > 1 && count[l] > count[l - 1]) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> rectangular_content(const Reading& r) {
  if (r.empty()) return std::nullopt;
  int p = *std::max_element(r.begin(), r.end());
  std::vector<int> count(p + 1, 0);
  for (int l : r) {
    if (l <= 0) return std::nullopt;
    ++count[l];
  }
  for (int m = 2; m <= p; ++m) {
    if (count[m] != count[1]) return std::nullopt;
  }
  return std::make_pair(p, count[1]);
}

Reading reading_of(const Tableau& t) {
  if (!is_partition_tableau(t))
    throw error("malformed-part", "reading requires a partition tableau");
  Reading r(t.entry_count(), 0);
  for (const auto& part : t.cols) {
    for (size_t i = 0; i < part.size(); ++i) {
      r[part[i] - 1] = static_cast<int>(i) + 1;
    }
  }
  return r;
}

namespace {

Tableau chains_to_tableau(const Reading& r, const std::map<int, int>& next) {
  Tableau t;
  for (size_t i = 0; i < r.size(); ++i) {
    if (r[i] != 1) continue;
    Column part{static_cast<int>(i) + 1};
    auto it = next.find(part.back());
    while (it != next.end()) {
      part.push_back(it->second);
      it = next.find(part.back());
    }
    t.cols.push_back(std::move(part));
  }
  return canonicalized(t);
}

void require_rectangular_yamanouchi(const Reading& r) {
  if (!is_yamanouchi(r))
    throw error("invalid-reading", "reading is not Yamanouchi");
  if (!rectangular_content(r))
    throw error("invalid-reading", "reading content is not rectangular");
}

}  // namespace

Tableau reading_to_syt(const Reading& r) {
  require_rectangular_yamanouchi(r);
  auto [p, q] = *rectangular_content(r);
  (void)q;
  std::map<int, std::vector<int>> positions;
  for (size_t i = 0; i < r.size(); ++i)
    positions[r[i]].push_back(static_cast<int>(i) + 1);
  std::map<int, int> next;
  for (int m = 1; m < p; ++m) {
    const auto& a = positions[m];
    const auto& b = positions[m + 1];
    for (size_t k = 0; k < a.size(); ++k) next[a[k]] = b[k];
  }
  return chains_to_tableau(r, next);
}

Tableau reading_to_nct(const Reading& r) {
  require_rectangular_yamanouchi(r);
  auto [p, q] = *rectangular_content(r);
  (void)q;
  std::map<int, int> next;
  for (int m = 1; m < p; ++m) {
    std::vector<int> open;
    for (size_t i = 0; i < r.size(); ++i) {
      if (r[i] == m) {
        open.push_back(static_cast<int>(i) + 1);
      } else if (r[i] == m + 1) {
        // Yamanouchi guarantees an open point
        next[open.back()] = static_cast<int>(i) + 1;
        open.pop_back();
      }
    }
  }
  return chains_to_tableau(r, next);
}

Tableau syt_to_nct(const Tableau& t) {
  if (!is_rectangular_tableau(t) || !is_syt(t))
    throw error("classification", "input is not a completed standard tableau");
  return reading_to_nct(reading_of(t));
}

Tableau nct_to_syt(const Tableau& t) {
  if (!is_rectangular_tableau(t) || !is_nct(t))
    throw error("classification", "input is not a completed non-crossing tableau");
  return reading_to_syt(reading_of(t));
}

Tableau complete_as_nct(const Tableau& t, const Filling& f) {
  if (!is_partition_tableau(t))
    throw error("classification", "input is not a partition tableau");
  for (const auto& col : t.cols)
    for (int e : col)
      if (e > f.n)
        throw error("classification", "diagram-view entries must stay <= n");
  // movable labels survive completion unchanged (frozen entries are larger),
  // so the completed reading is the movable reading plus the forced tail
  Reading r = reading_of(canonicalized(t));
  for (size_t k = 0; k < f.cells.size(); ++k) r.push_back(f.cells[k].first);
  if (!is_yamanouchi(r) || !rectangular_content(r))
    throw error("classification", "shape does not match the filling");
  Tableau full = reading_to_nct(r);
  if (movable_part(full, f.n) != canonicalized(t))
    throw error("classification", "input is not a non-crossing tableau");
  return full;
}

std::vector<Reading> enumerate_readings(const Filling& f) {
  const int p = f.mu.rows, q = f.mu.cols, n = f.n;
  const int total = f.total();
  Reading word(total, 0);
  // tail labels are forced: a frozen cell in row i carries label i
  for (int v = n + 1; v <= total; ++v) word[v - 1] = f.cells[v - n - 1].first;
  std::vector<int> count(p + 2, 0);
  std::vector<Reading> out;

  auto tail_ok = [&]() {
    auto c = count;
    for (int v = n; v < total; ++v) {
      int l = word[v];
      ++c[l];
      if (l > 1 && c[l] > c[l - 1]) return false;
    }
    for (int m = 1; m <= p; ++m) {
      if (c[m] != q) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      if (tail_ok()) out.push_back(word);
      return;
    }
    for (int l = 1; l <= p; ++l) {
      if (count[l] >= q) continue;
      if (l > 1 && count[l] + 1 > count[l - 1]) continue;
      word[pos] = l;
      ++count[l];
      self(self, pos + 1);
      --count[l];
    }
    word[pos] = 0;
  };
  rec(rec, 0);
  return out;
}

namespace {

}  // namespace

std::vector<Tableau> enumerate_nct(const Filling& f) {
  std::vector<Tableau> out;
  for (const auto& r : enumerate_readings(f)) {
    Tableau t = reading_to_nct(r);
    if (reading_of(t) != r)
      throw error("internal", "chain construction lost the reading");
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Tableau> enumerate_nct(const Partition& lambda) {
  const Filling f = canonical_filling(lambda);
  std::vector<Tableau> out;
  for (const auto& t : enumerate_nct(f)) out.push_back(movable_part(t, f.n));
  return out;
}

// Independent of the readings route: grow the grid cell by cell in value
// order, keeping rows and columns increasing and frozen cells pinned.
std::vector<Tableau> enumerate_syt(const Filling& f) {
  const int p = f.mu.rows, q = f.mu.cols, n = f.n;
  const int total = f.total();
  std::vector<std::vector<int>> grid(p + 1, std::vector<int>(q + 1, 0));
  std::vector<int> height(q + 1, 0);  // filled prefix length per column
  std::map<int, std::pair<int, int>> pinned;
  for (size_t k = 0; k < f.cells.size(); ++k)
    pinned[n + 1 + static_cast<int>(k)] = f.cells[k];

  std::vector<Tableau> out;
  auto emit = [&]() {
    Tableau t;
    for (int c = 1; c <= q; ++c) {
      Column col;
      for (int r = 1; r <= p; ++r) col.push_back(grid[r][c]);
      t.cols.push_back(std::move(col));
    }
    out.push_back(canonicalized(t));
  };

  auto rec = [&](auto&& self, int v) -> void {
    if (v > total) {
      emit();
      return;
    }
    auto pin = pinned.find(v);
    for (int c = 1; c <= q; ++c) {
      int r = height[c] + 1;
      if (r > p) continue;
      if (c > 1 && height[c - 1] < r) continue;  // row must grow rightward
      if (pin != pinned.end() && pin->second != std::make_pair(r, c)) continue;
      if (pin == pinned.end() && v > n) continue;
      grid[r][c] = v;
      height[c] = r;
      self(self, v + 1);
      height[c] = r - 1;
      grid[r][c] = 0;
    }
  };
  rec(rec, 1);

  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return reading_of(a) < reading_of(b);
  });
  return out;
}

std::vector<Tableau> enumerate_syt(const Partition& lambda) {
  const Filling f = canonical_filling(lambda);
  std::vector<Tableau> out;
  for (const auto& t : enumerate_syt(f)) out.push_back(strip_filling(t, f));
  return out;
}

namespace {

}  // namespace

// Distributes {1..n} over the filling's columns (capacity = free cells) and
// completes each choice; set-partition duplicates collapse.
std::vector<Tableau> enumerate_filled_tableaux(const Filling& f) {
  const int n = f.n;
  const size_t width = f.col_entries.size();
  std::vector<int> cap(width);
  for (size_t j = 0; j < width; ++j)
    cap[j] = f.mu.rows - static_cast<int>(f.col_entries[j].size());
  std::vector<int> owner(n + 1, -1);
  std::set<Tableau> seen;

  auto fill_column = [&](auto&& self, size_t j) -> void {
    if (j == width) {
      Tableau t;
      for (size_t c = 0; c < width; ++c) {
        Column col = f.col_entries[c];
        for (int v = 1; v <= n; ++v) {
          if (owner[v] == static_cast<int>(c)) col.push_back(v);
        }
        std::sort(col.begin(), col.end());
        t.cols.push_back(std::move(col));
      }
      seen.insert(canonicalized(t));
      return;
    }
    auto pick = [&](auto&& inner, int from, int left) -> void {
      if (left == 0) {
        self(self, j + 1);
        return;
      }
      for (int v = from; v <= n; ++v) {
        if (owner[v] != -1) continue;
        owner[v] = static_cast<int>(j);
        inner(inner, v + 1, left - 1);
        owner[v] = -1;
      }
    };
    pick(pick, 1, cap[j]);
  };
  fill_column(fill_column, 0);

  return {seen.begin(), seen.end()};
}

std::vector<Tableau> enumerate_bare_tableaux(const Partition& lambda) {
  check_partition(lambda);
  const Partition lc = conjugate(lambda);
  const int n = partition_size(lambda);
  std::vector<int> owner(n + 1, -1);
  std::set<Tableau> seen;
  auto rec = [&](auto&& self, size_t j) -> void {
    if (j == lc.size()) {
      Tableau t;
      for (size_t c = 0; c < lc.size(); ++c) {
        Column col;
        for (int v = 1; v <= n; ++v) {
          if (owner[v] == static_cast<int>(c)) col.push_back(v);
        }
        t.cols.push_back(std::move(col));
      }
      seen.insert(canonicalized(t));
      return;
    }
    auto pick = [&](auto&& inner, int from, int left) -> void {
      if (left == 0) {
        self(self, j + 1);
        return;
      }
      for (int v = from; v <= n; ++v) {
        if (owner[v] != -1) continue;
        owner[v] = static_cast<int>(j);
        inner(inner, v + 1, left - 1);
        owner[v] = -1;
      }
    };
    pick(pick, 1, lc[j]);
  };
  rec(rec, 0);
  return {seen.begin(), seen.end()};
}

std::vector<Reading> weighted_class_words(const Partition& lambda,
                                          const std::vector<int>& weight,
                                          Family kind) {
  check_partition(lambda);
  const int n = partition_size(lambda);
  long long wsum = 0;
  for (int w : weight) {
    if (w < 0) throw error("bad-weight", "weight parts must be nonnegative");
    wsum += w;
  }
  if (wsum != n)
    throw error("bad-weight", "weight must sum to the shape size");

  std::vector<int> segment_of(n + 1, 0);
  {
    int v = 1;
    for (size_t s = 0; s < weight.size(); ++s) {
      for (int k = 0; k < weight[s]; ++k) segment_of[v++] = static_cast<int>(s);
    }
  }

  const Filling f = canonical_filling(lambda);
  std::set<Reading> classes;
  for (const auto& r : enumerate_readings(f)) {
    Tableau t = kind == Family::Syt ? reading_to_syt(r) : reading_to_nct(r);
    bool ok = true;
    for (const auto& part : t.cols) {
      std::set<int> segs;
      for (int e : part) {
        if (e > n) continue;
        if (!segs.insert(segment_of[e]).second) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) continue;
    // orbit representative: labels sorted decreasingly inside each segment
    Reading cls = r;
    int v = 1;
    for (size_t s = 0; s < weight.size(); ++s) {
      std::sort(cls.begin() + (v - 1), cls.begin() + (v - 1) + weight[s],
                std::greater<int>());
      v += weight[s];
    }
    classes.insert(std::move(cls));
  }
  return {classes.begin(), classes.end()};
}

long long count_weighted_classes(const Partition& lambda,
                                 const std::vector<int>& weight, Family kind) {
  return static_cast<long long>(weighted_class_words(lambda, weight, kind).size());
}

long long count_ssyt(const Partition& lambda, const std::vector<int>& weight) {
  return count_weighted_classes(lambda, weight, Family::Syt);
}

long long count_snct(const Partition& lambda, const std::vector<int>& weight) {
  return count_weighted_classes(lambda, weight, Family::Nct);
}

std::vector<Tableau> enumerate_ssyt_tableaux(const Partition& lambda,
                                             int max_entry) {
  check_partition(lambda);
  if (max_entry < 0) throw error("bad-weight", "entry bound must be >= 0");
  const int rows = static_cast<int>(lambda.size());
  std::vector<std::vector<int>> grid(rows);
  for (int r = 0; r < rows; ++r) grid[r].assign(lambda[r], 0);
  std::vector<Tableau> out;

  auto emit = [&]() {
    Tableau t;
    const Partition lc = conjugate(lambda);
    for (size_t c = 0; c < lc.size(); ++c) {
      Column col;
      for (int r = 0; r < lc[c]; ++r) col.push_back(grid[r][c]);
      t.cols.push_back(std::move(col));
    }
    out.push_back(std::move(t));
  };

  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == rows) {
      emit();
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= lambda[r]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid[r][c - 1]);      // rows weakly increase
    if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);  // columns strictly
    for (int v = lo; v <= max_entry; ++v) {
      grid[r][c] = v;
      self(self, nr, nc);
    }
    grid[r][c] = 0;
  };
  if (rows == 0) return out;
  rec(rec, 0, 0);
  return out;
}

Integer kostka_number(const Partition& lambda, const std::vector<int>& weight) {
  long long wsum = 0;
  for (int w : weight) {
    if (w < 0) throw error("bad-weight", "weight parts must be nonnegative");
    wsum += w;
  }
  if (wsum != partition_size(lambda))
    throw error("bad-weight", "weight must sum to the shape size");
  Integer count = 0;
  for (const auto& t : enumerate_ssyt_tableaux(lambda,
                                               static_cast<int>(weight.size()))) {
    std::vector<long long> content(weight.size() + 1, 0);
    for (const auto& col : t.cols) {
      for (int e : col) ++content[e];
    }
    bool ok = true;
    for (size_t s = 0; s < weight.size(); ++s) {
      if (content[s + 1] != weight[s]) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

void check_matching(const Matching& m) {
  if (m.empty()) throw error("bad-matching", "empty matching");
  std::set<int> seen;
  for (size_t k = 0; k < m.size(); ++k) {
    auto [i, j] = m[k];
    if (i >= j) throw error("bad-matching", "arcs must satisfy i < j");
    if (!seen.insert(i).second || !seen.insert(j).second)
      throw error("bad-matching", "repeated endpoint");
    if (k > 0 && m[k - 1].first >= i)
      throw error("bad-matching", "arcs must be sorted by left endpoint");
  }
  int n = 2 * static_cast<int>(m.size());
  if (*seen.begin() != 1 || *seen.rbegin() != n)
    throw error("bad-matching", "endpoints must cover 1..2l");
}

bool arcs_cross(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

bool is_noncrossing_matching(const Matching& m) {
  return crossing_count(m) == 0;
}

int crossing_count(const Matching& m) {
  check_matching(m);
  int c = 0;
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = i + 1; j < m.size(); ++j) {
      if (arcs_cross(m[i], m[j])) ++c;
    }
  }
  return c;
}

std::vector<Matching> noncrossing_matchings(int l) {
  if (l <= 0) throw error("bad-matching", "need l >= 1");
  const int n = 2 * l;
  std::vector<int> partner(n + 1, 0);
  std::vector<Matching> out;
  auto rec = [&](auto&& self, int i) -> void {
    while (i <= n && partner[i] != 0) ++i;
    if (i > n) {
      Matching m;
      for (int a = 1; a <= n; ++a) {
        if (partner[a] > a) m.emplace_back(a, partner[a]);
      }
      out.push_back(std::move(m));
      return;
    }
    // match i to j with an even gap so the span can be filled non-crossingly
    for (int j = i + 1; j <= n; j += 2) {
      if (partner[j] != 0) continue;
      bool blocked = false;
      for (int k = i + 1; k < j; ++k) {
        if (partner[k] != 0 && (partner[k] < i || partner[k] > j)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      partner[i] = j;
      partner[j] = i;
      self(self, i + 1);
      partner[i] = 0;
      partner[j] = 0;
    }
  };
  rec(rec, 1);
  return out;
}

Matching matching_of_two_row(const Tableau& t) {
  if (!is_partition_tableau(t))
    throw error("unsupported-shape", "need a partition tableau");
  Matching m;
  for (const auto& part : t.cols) {
    if (part.size() != 2)
      throw error("unsupported-shape", "every part must have two entries");
    m.emplace_back(part[0], part[1]);
  }
  std::sort(m.begin(), m.end());
  check_matching(m);
  return m;
}

Tableau two_row_tableau(const Matching& m) {
  check_matching(m);
  Tableau t;
  for (auto [i, j] : m) t.cols.push_back({i, j});
  return canonicalized(t);
}

}  // namespace nca
