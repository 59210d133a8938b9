#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace finetti {

// A subset of [1..n] with strictly increasing members. Ground-set elements of
// the posets handled here: sizes 0, 1 or 2 in the two-level order ideal,
// arbitrary sizes in full power-set contexts.
struct SubsetElement {
  std::vector<int> members;

  SubsetElement() = default;
  explicit SubsetElement(std::vector<int> m) : members(std::move(m)) {}

  static SubsetElement empty() { return SubsetElement{}; }
  static SubsetElement singleton(int i) { return SubsetElement{{i}}; }
  static SubsetElement doubleton(int a, int b) {
    return a < b ? SubsetElement{{a, b}} : SubsetElement{{b, a}};
  }

  int size() const { return static_cast<int>(members.size()); }
  bool is_empty() const { return members.empty(); }

  // Strictly increasing members inside [1..n].
  bool well_formed(int n) const {
    int prev = 0;
    for (int v : members) {
      if (v <= prev || v > n) return false;
      prev = v;
    }
    return true;
  }

  uint64_t mask() const {
    uint64_t m = 0;
    for (int v : members) m |= uint64_t{1} << (v - 1);
    return m;
  }

  // Smaller member of a doubleton, 0-padded for singletons and the empty set.
  int low() const { return size() == 2 ? members[0] : 0; }
  // Larger member, 0 for the empty set.
  int high() const { return members.empty() ? 0 : members.back(); }

  // Display name in the style of the lattice diagrams: members concatenated
  // in decreasing order ("43", "4"), braces beyond single digits.
  std::string label() const;

  friend bool operator==(const SubsetElement& a, const SubsetElement& b) {
    return a.members == b.members;
  }
  friend bool operator!=(const SubsetElement& a, const SubsetElement& b) { return !(a == b); }

  // Canonical order: cardinality, then lexicographic on members.
  friend bool operator<(const SubsetElement& a, const SubsetElement& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  }
};

}  // namespace finetti
