#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nca/partition.hpp"
#include "nca/permutation.hpp"
#include "nca/poly.hpp"
#include "nca/tableau.hpp"

namespace nca {

// Formal rational combination of tableaux of one shape; no zero coefficients.
using SpechtElement = std::map<Tableau, Rational>;

// Product of x_i - x_j over all within-column pairs with i above j. Parts
// must be strictly increasing but need not partition {1..N}.
ExactPoly specht_poly(const Tableau& t);

ExactPoly realize(const SpechtElement& e);

// Applies w to entries <= n_free (entries above n_free are frozen and must
// be fixed by w, else action-domain error). Returns the entry-sorted tableau
// and the sign with
//   specht_poly(t) under x_i -> x_{w(i)}  =  sign * specht_poly(result).
std::pair<Tableau, int> permute_tableau(const Perm& w, const Tableau& t,
                                        int n_free);

// Straightens P_T over standard tableaux by exchange relations on adjacent
// columns. Every relation is verified by exact polynomial arithmetic before
// use; a step cap triggers the linear-solve fallback.
SpechtElement garnir_expand(const Tableau& t);

// Expresses specht_poly(t) over the family's polynomials by incremental
// echelonization; internal error when the family does not span (a bug
// signal, since the families we pass are proven bases).
SpechtElement decompose_into_family(const Tableau& t,
                                    const std::vector<Tableau>& family);

// Unique coefficients over the shape-lambda non-crossing family. Accepts a
// bare tableau or a full completion (frozen entries are dropped; anything
// between is filling-disagreement). The output realized through specht_poly
// equals specht_poly of the movable part exactly.
SpechtElement decompose_into_nct(const Tableau& t, const Filling& f);

// x_i := label of i in the reading of t0.
std::map<int, Rational> reading_evaluation(const Tableau& t0);

// Rank of {specht_poly(T)} over all tableaux of shape lambda: the module
// dimension. The completed variant ranks the standard family completed with
// the canonical filling; the two agreeing is the content of the completion
// isomorphism.
int module_rank(const Partition& lambda);
int module_rank_completed(const Partition& lambda);

}  // namespace nca
