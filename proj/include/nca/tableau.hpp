#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nca/partition.hpp"

namespace nca {

// A column is a strictly increasing list of positive entries.
using Column = std::vector<int>;

// Ordered columns. Three usage modes share the type:
//  * completed view: columns partition {1..N} and all have the same length
//    (the rectangle completion; frozen filling entries included);
//  * diagram view: columns partition {1..n} with lengths conjugate(lambda),
//    in diagram order (frozen entries stripped);
//  * content view: entries may repeat across columns (bideterminant sides).
struct Tableau {
  std::vector<Column> cols;

  bool operator==(const Tableau&) const = default;
  bool operator<(const Tableau& o) const { return cols < o.cols; }
  int entry_count() const;
};

// Last-differing-entry order on equal-length columns; the column order that
// standard and non-crossing tableaux use for columns of equal length.
bool colex_less(const Column& a, const Column& b);

// Sorts columns by (length desc, colex asc): the canonical presentation of a
// completed tableau, matching diagram order whenever the tableau agrees with
// a row-major filling.
Tableau canonicalized(Tableau t);

// Pair predicates on bare columns, |a| >= |b| required (pass the left column
// as `a` when lengths are equal). Throws malformed-part on non-increasing
// input or |a| < |b|.
bool is_noncrossing_pair(const Column& a, const Column& b);
bool is_nonnesting_pair(const Column& a, const Column& b);

// Symmetric consecutive-segment tests (no boundary conditions); the pairwise
// test for completed tableaux, where all columns have equal length.
bool segments_noncrossing(const Column& a, const Column& b);
bool segments_nonnesting(const Column& a, const Column& b);

bool is_partition_tableau(const Tableau& t);  // parts partition {1..N}
bool is_rectangular_tableau(const Tableau& t);

// Tableau-level predicates: canonical column order, then every ordered pair
// must pass the corresponding pair predicate.
bool is_nct(const Tableau& t);
bool is_syt(const Tableau& t);

// ---- completions -------------------------------------------------------

// Appends the filling's frozen entries to the columns, which must be given
// in diagram order with entries <= f.n. Throws shape-containment on length
// mismatch.
Tableau complete_with_filling(const Tableau& t, const Filling& f);

// Removes entries > f.n; requires agreement with f. Columns come out in
// diagram order.
Tableau strip_filling(const Tableau& t, const Filling& f);

// Parts restricted to entries <= n, in canonical order; emptied parts
// vanish. No agreement required.
Tableau movable_part(const Tableau& t, int n);

// Completes a shape-lambda non-crossing tableau to the member of the
// forced-tail family with the same movable reading. Unlike
// complete_with_filling this places the frozen entries where the
// parenthesization chains put them, which is what keeps the completion
// non-crossing. Classification error when t is not non-crossing.
Tableau complete_as_nct(const Tableau& t, const Filling& f);

// True when each part's frozen entries match one column of f bijectively.
bool agrees_with_filling(const Tableau& t, const Filling& f);

// Reorders parts into the filling's column order (empty-filling columns by
// colex); nullopt when the tableau does not agree with f.
std::optional<Tableau> arrange_by_filling(const Tableau& t, const Filling& f);

// ---- readings ----------------------------------------------------------

// labels[i-1] = rank of point i inside its part.
using Reading = std::vector<int>;

bool is_yamanouchi(const Reading& r);
// (p, q) when every label 1..p occurs exactly q times, else nullopt.
std::optional<std::pair<int, int>> rectangular_content(const Reading& r);

Reading reading_of(const Tableau& t);

// Non-nesting chains: the k-th point with label m links to the k-th point
// with label m+1. Requires a Yamanouchi reading of rectangular content.
Tableau reading_to_syt(const Reading& r);

// Non-crossing chains: label-(m+1) points match the nearest open label-m
// point, as in balanced parenthesization.
Tableau reading_to_nct(const Reading& r);

// Reading-preserving bijections on completed tableaux.
Tableau syt_to_nct(const Tableau& t);
Tableau nct_to_syt(const Tableau& t);

// ---- enumeration -------------------------------------------------------

// All Yamanouchi readings whose tail n+1..N carries the filling's forced
// labels (the row index of each frozen cell), in lexicographic order.
std::vector<Reading> enumerate_readings(const Filling& f);

// Completed families, in reading order. The non-crossing family is the
// image of the forced-tail readings; its frozen entries sit where the
// parenthesization chains put them, which coincides with f's own columns
// only when each column of f holds a run of consecutive values. The
// standard family is grid-backtracked and always agrees with f set-wise.
std::vector<Tableau> enumerate_nct(const Filling& f);
std::vector<Tableau> enumerate_syt(const Filling& f);

// Shape-lambda families (movable entries only). These are the filling-free
// definitions: every choice of valid completion filling strips back to the
// same lists.
std::vector<Tableau> enumerate_nct(const Partition& lambda);
std::vector<Tableau> enumerate_syt(const Partition& lambda);

// Every completed tableau agreeing with f (arbitrary fillings, not just
// standard ones). Note the span of their Specht polynomials can exceed the
// module dimension; rank statements live on the movable parts.
std::vector<Tableau> enumerate_filled_tableaux(const Filling& f);

// Set partitions of {1..n} with part sizes conjugate(lambda).
std::vector<Tableau> enumerate_bare_tableaux(const Partition& lambda);

// ---- weighted classes ----------------------------------------------------

// Classes of semistandard-weight tableaux counted through Yamanouchi words:
// words whose tableau takes at most one point per weight segment in every
// part, collected by the segment-sorted word. The two families are in
// bijection with semistandard and semi-non-crossing tableaux respectively.
enum class Family { Syt, Nct };
std::vector<Reading> weighted_class_words(const Partition& lambda,
                                          const std::vector<int>& weight,
                                          Family kind);
long long count_weighted_classes(const Partition& lambda,
                                 const std::vector<int>& weight, Family kind);
long long count_ssyt(const Partition& lambda, const std::vector<int>& weight);
long long count_snct(const Partition& lambda, const std::vector<int>& weight);

// Direct semistandard enumeration (entries <= max_entry), used by the module
// dimension checks and as the independent Kostka oracle.
std::vector<Tableau> enumerate_ssyt_tableaux(const Partition& lambda,
                                             int max_entry);
Integer kostka_number(const Partition& lambda, const std::vector<int>& weight);

// ---- matchings -----------------------------------------------------------

// Perfect matching on {1..2l}: pairs (i, j) with i < j, sorted by first
// element.
using Matching = std::vector<std::pair<int, int>>;

void check_matching(const Matching& m);  // throws bad-matching
bool arcs_cross(const std::pair<int, int>& a, const std::pair<int, int>& b);
bool is_noncrossing_matching(const Matching& m);
int crossing_count(const Matching& m);
std::vector<Matching> noncrossing_matchings(int l);  // on 2l points

// Two-row tableaux <-> matchings. Throws unsupported-shape when a part does
// not have exactly two entries.
Matching matching_of_two_row(const Tableau& t);
Tableau two_row_tableau(const Matching& m);

}  // namespace nca
