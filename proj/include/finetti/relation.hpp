#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace finetti {

// Square boolean relation over element indices, bit-packed one row per
// element so that closure and comparability scans run word-parallel.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int size)
      : size_(size), words_(word_count(size)), bits_(static_cast<size_t>(size) * words_, 0) {}

  int size() const { return size_; }

  bool get(int a, int b) const {
    return (row(a)[static_cast<size_t>(b) >> 6] >> (b & 63)) & 1u;
  }
  void set(int a, int b, bool value = true) {
    uint64_t& w = row(a)[static_cast<size_t>(b) >> 6];
    const uint64_t m = uint64_t{1} << (b & 63);
    if (value)
      w |= m;
    else
      w &= ~m;
  }

  void set_reflexive() {
    for (int i = 0; i < size_; ++i) set(i, i);
  }

  bool is_reflexive() const {
    for (int i = 0; i < size_; ++i)
      if (!get(i, i)) return false;
    return true;
  }

  // No two distinct elements related both ways.
  bool is_antisymmetric() const {
    for (int a = 0; a < size_; ++a)
      for (int b = a + 1; b < size_; ++b)
        if (get(a, b) && get(b, a)) return false;
    return true;
  }

  bool is_transitive() const;

  // row(to) |= row(from)
  void or_row(int to, int from) {
    uint64_t* dst = row(to);
    const uint64_t* src = row(from);
    for (int w = 0; w < words_; ++w) dst[w] |= src[w];
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.size_ == b.size_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Relation& a, const Relation& b) { return !(a == b); }

  uint64_t* row(int a) { return bits_.data() + static_cast<size_t>(a) * words_; }
  const uint64_t* row(int a) const { return bits_.data() + static_cast<size_t>(a) * words_; }
  int words() const { return words_; }

 private:
  static int word_count(int size) { return (size + 63) / 64; }

  int size_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

// Smallest transitive superset of the input relation. Warshall pass with a
// word-parallel inner loop; idempotent.
Relation transitive_closure(Relation r);

}  // namespace finetti
