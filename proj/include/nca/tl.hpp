#pragma once

#include <map>
#include <vector>

#include "nca/permutation.hpp"
#include "nca/rational.hpp"
#include "nca/tableau.hpp"

namespace nca {

// Planar diagram of rank l: a non-crossing perfect matching on 2l boundary
// points numbered counterclockwise, left side top-to-bottom 1..l, right side
// bottom-to-top l+1..2l. Right height h is point 2l+1-h.
struct TLDiagram {
  int l = 0;
  Matching arcs;
};

void check_diagram(const TLDiagram& d);  // throws bad-diagram
TLDiagram tl_identity(int l);
TLDiagram tl_generator(int l, int i);  // t_i, 1 <= i <= l-1

// Rational combination of diagrams of one rank, keyed by arc sets.
using TLElement = std::map<Matching, Rational>;

// Concatenation with loop count: glue d1's right side to d2's left side;
// every closed loop contributes a factor xi.
TLElement tl_multiply(const TLDiagram& d1, const TLDiagram& d2,
                      const Rational& xi);
TLElement tl_multiply_elements(int l, const TLElement& e1, const TLElement& e2,
                               const Rational& xi);

// Product of (t_i + 1) over the word, glued left to right, expanded in the
// diagram basis at xi = -2. `reduced` records whether the word is a reduced
// decomposition of the permutation it multiplies out to. theta(w) picks a
// reduced word for w and glues it so that the composite diagram is the
// wiring diagram of w when every t_i term is dropped for its +1.
struct ThetaResult {
  TLElement element;
  bool reduced = false;
};
ThetaResult theta_word(const std::vector<int>& word, int l);
TLElement theta(const Perm& w);

// Wiring diagram of a permutation: left height i joins right height w(i).
// wiring_permutation inverts that encoding; arcs must join the two halves
// (throws not-a-wiring-diagram otherwise).
Matching wiring_matching(const Perm& w);
Perm wiring_permutation(const Matching& m);

// An arrangement of open arcs with an explicit crossing list. `along[a]`
// holds the crossing ids in traversal order from arcs[a].first; that order
// is what the smoothing states recombine through.
struct ArcDiagram {
  std::vector<std::pair<int, int>> arcs;
  std::vector<std::pair<int, int>> crossings;  // pairs of arc indices
  std::vector<std::vector<int>> along;
};

// Realizes a matching by upper semicircles over the number line; crossings
// ordered along each arc by intersection abscissa. Three arcs meeting at one
// point would make the smoothing ill-defined; that cannot happen below the
// desk bounds and raises an internal error.
ArcDiagram semicircle_diagram(const Matching& m);

struct Uncrossing {
  Matching strands;
  int cycles = 0;
};

struct ResolveResult {
  std::vector<Uncrossing> states;            // one per smoothing choice
  std::map<Matching, Rational> coefficients;  // collected, factor -2 per cycle
};

// Smooths every crossing both ways (2^k states), replacing each closed cycle
// by a factor -2, and collects the resulting non-crossing matchings.
ResolveResult resolve_arc_diagram(const ArcDiagram& d);

// The two-row expansion: parts of size 2 are read as a matching, realized by
// semicircles, and fully smoothed. Throws unsupported-shape otherwise.
ResolveResult resolve_crossings(const Tableau& t);

// True when the resolution coefficients of the wiring matching of t equal
// the diagram coefficients of theta applied to its permutation.
bool tl_coefficient_check(const Tableau& t);

Integer catalan_dimension(int l);  // by enumeration

}  // namespace nca
