#pragma once

#include <vector>

namespace nca {

// One-line notation, 1-based images: perm[i-1] = w(i).
using Perm = std::vector<int>;

void check_perm(const Perm& w);  // throws bad-permutation
Perm identity_perm(int l);
Perm compose(const Perm& u, const Perm& v);  // (u*v)(i) = u(v(i))
Perm inverse(const Perm& w);
int inversions(const Perm& w);
int perm_sign(const Perm& w);
std::vector<Perm> all_permutations(int l);
bool is_321_avoiding(const Perm& w);

// Reduced word i_1..i_k with w = s_{i_1} ... s_{i_k}; k = inversions(w).
std::vector<int> reduced_word(const Perm& w);

}  // namespace nca
