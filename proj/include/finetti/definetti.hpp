#pragma once

#include <functional>
#include <string>
#include <vector>

#include "finetti/poset.hpp"
#include "finetti/triangle.hpp"

namespace finetti {

enum class DeFinettiKind { bn2, fn2, fn21_member, linear_extension };

const char* kind_name(DeFinettiKind k);
DeFinettiKind kind_from_name(const std::string& name);

// A poset over all subsets of [n] of size at most two. The kind records how
// much of the forced relation structure it carries.
struct DeFinettiPoset {
  Poset base;
  int n = 0;
  DeFinettiKind kind = DeFinettiKind::bn2;

  friend bool operator==(const DeFinettiPoset& a, const DeFinettiPoset& b) {
    return a.n == b.n && a.kind == b.kind && a.base.leq == b.base.leq;
  }
};

// Canonically ordered elements of the two-level order ideal: the empty set,
// the singletons, then the doubletons.
std::vector<SubsetElement> bn2_elements(int n);

// Inclusion order only.
DeFinettiPoset build_bn2(int n);

// Transitive closure of inclusion plus the singleton chain and the
// componentwise doubleton order; a distributive lattice.
DeFinettiPoset build_fn2(int n);

// Closed-form meet/join: treat a singleton {j} as {j,0}, pair up larger and
// smaller members, take componentwise min/max, strip the 0 padding.
SubsetElement fn2_meet(const SubsetElement& x, const SubsetElement& y);
SubsetElement fn2_join(const SubsetElement& x, const SubsetElement& y);

// The singleton chain starts the order, and comparisons survive both adding
// disjoint elements to a comparable pair and cancelling the common part.
bool satisfies_definetti(const Poset& p);

// I_k: doubletons {j,i} with i < j < k, the ones no forced relation compares
// with the singleton {k}. Canonical order.
std::vector<SubsetElement> undetermined_doubletons(int n, int k);

// A total comparison of singleton {k} against I_k, stored parallel to
// undetermined_doubletons(n, k): singleton_below[d] means {k} sits below the
// d-th doubleton.
struct SingletonComparisons {
  int k = 3;
  std::vector<bool> singleton_below;
};

// The same data compressed to counts: above_counts[m-2] is the number of
// doubletons {m,j}, j < m, lying strictly above {k}. Valid lists are zero or
// more leading zeros followed by a strictly increasing positive run (the
// entry at 1-based position p never exceeds p).
struct SingletonPlacement {
  int k = 3;
  std::vector<int> above_counts;

  friend bool operator==(const SingletonPlacement& a, const SingletonPlacement& b) {
    return a.k == b.k && a.above_counts == b.above_counts;
  }
};

bool placement_list_valid(const std::vector<int>& counts);

// Throws InconsistentPlacement when the comparisons cannot come from a
// consistent order (non-monotone within a chain row, or a cross-row
// violation).
SingletonPlacement encode_placement(const SingletonComparisons& c);

// Left inverse of encode_placement: {k} sits below {m,j} exactly when
// j > m-1-above_counts[m-2].
SingletonComparisons decode_placement(const SingletonPlacement& s);

// Row k-2 of the output records the placement of singleton {k}; the column
// condition of the result mirrors the consistency of the placements.
// Throws NotUniversallyComparable when some singleton-doubleton pair is
// unresolved in e.
Triangle refinement_to_kagog(const DeFinettiPoset& e);

// Transitive closure of the forced lattice plus the decoded singleton
// decisions. CycleError here is an internal assertion: valid triangles never
// trigger it.
DeFinettiPoset kagog_to_refinement(const Triangle& k);

enum class Fn21Mode { via_kagog, direct };

// Minimal refinements in which every singleton is comparable with every
// doubleton. via_kagog walks the triangle family; direct backtracks over raw
// singleton decisions and keeps the closures that stay antisymmetric and
// de Finetti-consistent (guarded at n <= 5 unless unguarded).
void enumerate_fn21(int n, Fn21Mode mode,
                    const std::function<bool(const DeFinettiPoset&)>& visit,
                    bool unguarded = false);
std::vector<DeFinettiPoset> collect_fn21(int n, Fn21Mode mode, bool unguarded = false);

// Shifted staircase filling of 1..n(n+1)/2, rows and columns strictly
// increasing; row k is drawn shifted right by k-1 cells.
struct ShiftedTableau {
  int n = 1;
  std::vector<std::vector<int>> rows;

  friend bool operator==(const ShiftedTableau& a, const ShiftedTableau& b) {
    return a.n == b.n && a.rows == b.rows;
  }
};

bool tableau_valid(const ShiftedTableau& t);

// Place position number l in the box of the l-th set of the order, under the
// grid where row k holds the sets {i,k-1}. Throws NotDeFinetti when the
// result fails to increase along a row or column. A leading empty set is
// dropped.
ShiftedTableau le_to_tableau(int n, const std::vector<SubsetElement>& order);
std::vector<SubsetElement> tableau_to_le(const ShiftedTableau& t);

// Total orders of the full power set of [n] respecting the singleton chain
// and the cancellation law. Exhaustive; guarded at n <= 5 unless unguarded.
void enumerate_definetti_total_orders(
    int n, const std::function<bool(const std::vector<SubsetElement>&)>& visit,
    bool unguarded = false);
unsigned long long count_definetti_total_orders(int n, bool unguarded = false);

}  // namespace finetti
