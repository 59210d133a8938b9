#include "finetti/relation.hpp"

namespace finetti {

bool Relation::is_transitive() const {
  // a<=b and b<=c must give a<=c: every row reached from a is a subset of row a.
  const int n = size_;
  for (int a = 0; a < n; ++a) {
    const uint64_t* ra = row(a);
    for (int b = 0; b < n; ++b) {
      if (a == b || !get(a, b)) continue;
      const uint64_t* rb = row(b);
      for (int w = 0; w < words_; ++w)
        if (rb[w] & ~ra[w]) return false;
    }
  }
  return true;
}

Relation transitive_closure(Relation r) {
  const int n = r.size();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (i != k && r.get(i, k)) r.or_row(i, k);
  return r;
}

}  // namespace finetti
