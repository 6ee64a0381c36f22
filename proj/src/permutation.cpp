#include "nca/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "nca/error.hpp"

namespace nca {

void check_perm(const Perm& w) {
  std::vector<char> seen(w.size() + 1, 0);
  for (int x : w) {
    if (x < 1 || x > static_cast<int>(w.size()) || seen[x])
      throw error("bad-permutation", "not a permutation in one-line notation");
    seen[x] = 1;
  }
}

Perm identity_perm(int l) {
  Perm w(l);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

Perm compose(const Perm& u, const Perm& v) {
  if (u.size() != v.size())
    throw error("bad-permutation", "composing permutations of unequal rank");
  Perm w(u.size());
  for (size_t i = 0; i < w.size(); ++i) w[i] = u[v[i] - 1];
  return w;
}

Perm inverse(const Perm& w) {
  Perm v(w.size());
  for (size_t i = 0; i < w.size(); ++i) v[w[i] - 1] = static_cast<int>(i) + 1;
  return v;
}

int inversions(const Perm& w) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

int perm_sign(const Perm& w) { return inversions(w) % 2 ? -1 : 1; }

std::vector<Perm> all_permutations(int l) {
  std::vector<Perm> out;
  Perm w = identity_perm(l);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

bool is_321_avoiding(const Perm& w) {
  int l = static_cast<int>(w.size());
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      for (int k = j + 1; k < l; ++k)
        if (w[i] > w[j] && w[j] > w[k]) return false;
  return true;
}

std::vector<int> reduced_word(const Perm& w) {
  check_perm(w);
  Perm cur = w;
  std::vector<int> word;
  // Right-multiplying by s_i swaps positions i, i+1; each swap at a descent
  // removes exactly one inversion, so the collected word is reduced.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < cur.size(); ++i)
      if (cur[i] > cur[i + 1]) {
        std::swap(cur[i], cur[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace nca
