#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "finetti/relation.hpp"
#include "finetti/subset_element.hpp"

namespace finetti {

// Finite poset over subset elements. The relation is stored in full
// (reflexive-transitive), elements in canonical order (size, then
// lexicographic). Immutable after construction.
struct Poset {
  int n = 0;  // ground-set size
  std::vector<SubsetElement> elements;
  Relation leq;

  int size() const { return static_cast<int>(elements.size()); }
  bool less(int a, int b) const { return a != b && leq.get(a, b); }
  int index_of(const SubsetElement& e) const;  // -1 when absent
};

struct CoverList {
  std::vector<std::pair<int, int>> covers;  // (a, b): a is covered by b
};

// Reflexive, antisymmetric, transitive, canonical element order, no
// duplicate elements.
bool is_valid_poset(const Poset& p);

// Transitive closure of p.leq plus the extra strict pairs. Empty result when
// the closure breaks antisymmetry; callers prune refinement searches on it.
std::optional<Poset> refine_with(const Poset& p, const std::vector<std::pair<int, int>>& extra);

// Cover pairs of the relation: a < b with nothing strictly between.
CoverList hasse_covers(const Poset& p);

// Rebuild the full relation from covers (reflexive-transitive closure).
Relation relation_from_covers(int size, const std::vector<std::pair<int, int>>& covers);

// All unordered pairs {a,b} with neither a<=b nor b<=a, a < b, in index order.
std::vector<std::pair<int, int>> incomparable_pairs(const Poset& p);

// Linear extensions, emitted as element-index sequences in lexicographic
// order. The visitor returns false to stop early.
void for_each_linear_extension(const Poset& p,
                               const std::function<bool(const std::vector<int>&)>& visit);

// Count-only fast path (ideal-to-ideal dynamic program); agrees with the
// stream length.
unsigned long long linear_extension_count(const Poset& p);

struct LatticeResult {
  bool is_lattice = false;
  // Row-major pair tables, filled only when is_lattice.
  std::vector<int> meet;
  std::vector<int> join;
  // First offending pair otherwise.
  int fail_a = -1;
  int fail_b = -1;

  int meet_of(int a, int b, int m) const { return meet[static_cast<size_t>(a) * m + b]; }
  int join_of(int a, int b, int m) const { return join[static_cast<size_t>(a) * m + b]; }
};

// Every pair must have a unique minimal upper bound and a unique maximal
// lower bound; in a finite poset those are then least/greatest.
LatticeResult lattice_check(const Poset& p);

}  // namespace finetti
