#include "finetti/poset.hpp"

#include <algorithm>
#include <unordered_map>

#include "finetti/errors.hpp"

namespace finetti {

int Poset::index_of(const SubsetElement& e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e);
  if (it != elements.end() && *it == e) return static_cast<int>(it - elements.begin());
  return -1;
}

bool is_valid_poset(const Poset& p) {
  const int m = p.size();
  if (p.leq.size() != m) return false;
  for (int i = 0; i + 1 < m; ++i)
    if (!(p.elements[i] < p.elements[i + 1])) return false;  // order + duplicates
  for (const auto& e : p.elements)
    if (!e.well_formed(p.n)) return false;
  return p.leq.is_reflexive() && p.leq.is_antisymmetric() && p.leq.is_transitive();
}

std::optional<Poset> refine_with(const Poset& p, const std::vector<std::pair<int, int>>& extra) {
  Relation r = p.leq;
  for (auto [a, b] : extra) {
    if (a < 0 || b < 0 || a >= r.size() || b >= r.size())
      throw InvalidArgument("refine_with: element index out of range");
    r.set(a, b);
  }
  r = transitive_closure(std::move(r));
  if (!r.is_antisymmetric()) return std::nullopt;
  return Poset{p.n, p.elements, std::move(r)};
}

CoverList hasse_covers(const Poset& p) {
  const int m = p.size();
  CoverList out;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (!p.less(a, b)) continue;
      bool strict_mid = false;
      for (int c = 0; c < m && !strict_mid; ++c)
        if (p.less(a, c) && p.less(c, b)) strict_mid = true;
      if (!strict_mid) out.covers.emplace_back(a, b);
    }
  }
  std::sort(out.covers.begin(), out.covers.end());
  return out;
}

Relation relation_from_covers(int size, const std::vector<std::pair<int, int>>& covers) {
  Relation r(size);
  r.set_reflexive();
  for (auto [a, b] : covers) {
    if (a < 0 || b < 0 || a >= size || b >= size)
      throw InvalidArgument("relation_from_covers: index out of range");
    r.set(a, b);
  }
  return transitive_closure(std::move(r));
}

std::vector<std::pair<int, int>> incomparable_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  const int m = p.size();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (!p.leq.get(a, b) && !p.leq.get(b, a)) out.emplace_back(a, b);
  return out;
}

namespace {

bool extend(const Poset& p, std::vector<int>& missing, std::vector<bool>& placed,
            std::vector<int>& seq, const std::function<bool(const std::vector<int>&)>& visit) {
  const int m = p.size();
  if (static_cast<int>(seq.size()) == m) return visit(seq);
  // smallest currently-minimal index first gives lexicographic emission
  for (int v = 0; v < m; ++v) {
    if (placed[v] || missing[v] != 0) continue;
    placed[v] = true;
    seq.push_back(v);
    for (int b = 0; b < m; ++b)
      if (p.less(v, b)) --missing[b];
    const bool keep_going = extend(p, missing, placed, seq, visit);
    for (int b = 0; b < m; ++b)
      if (p.less(v, b)) ++missing[b];
    seq.pop_back();
    placed[v] = false;
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void for_each_linear_extension(const Poset& p,
                               const std::function<bool(const std::vector<int>&)>& visit) {
  const int m = p.size();
  std::vector<int> missing(m, 0);
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < m; ++a)
      if (p.less(a, b)) ++missing[b];
  std::vector<bool> placed(m, false);
  std::vector<int> seq;
  seq.reserve(m);
  extend(p, missing, placed, seq, visit);
}

namespace {

unsigned long long count_orders(const Poset& p, uint64_t remaining,
                                const std::vector<uint64_t>& below,
                                std::unordered_map<uint64_t, unsigned long long>& memo) {
  if (remaining == 0) return 1;
  auto it = memo.find(remaining);
  if (it != memo.end()) return it->second;
  unsigned long long total = 0;
  uint64_t cand = remaining;
  while (cand) {
    const int v = __builtin_ctzll(cand);
    cand &= cand - 1;
    if (below[v] & remaining) continue;  // some predecessor still unplaced
    total += count_orders(p, remaining & ~(uint64_t{1} << v), below, memo);
  }
  memo.emplace(remaining, total);
  return total;
}

}  // namespace

unsigned long long linear_extension_count(const Poset& p) {
  const int m = p.size();
  if (m > 64) {
    // fall back to streaming; posets here stay far below this
    unsigned long long c = 0;
    for_each_linear_extension(p, [&](const std::vector<int>&) {
      ++c;
      return true;
    });
    return c;
  }
  std::vector<uint64_t> below(m, 0);
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < m; ++a)
      if (p.less(a, b)) below[b] |= uint64_t{1} << a;
  std::unordered_map<uint64_t, unsigned long long> memo;
  const uint64_t all = m == 64 ? ~uint64_t{0} : (uint64_t{1} << m) - 1;
  return count_orders(p, all, below, memo);
}

LatticeResult lattice_check(const Poset& p) {
  const int m = p.size();
  const int words = p.leq.words();
  // ups[a] = bitset of elements >= a (row a); downs[a] = elements <= a.
  std::vector<std::vector<uint64_t>> downs(m, std::vector<uint64_t>(words, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (p.leq.get(a, b)) downs[b][static_cast<size_t>(a) >> 6] |= uint64_t{1} << (a & 63);

  LatticeResult res;
  res.meet.assign(static_cast<size_t>(m) * m, -1);
  res.join.assign(static_cast<size_t>(m) * m, -1);
  std::vector<uint64_t> common(words);

  auto unique_extreme = [&](int a, int b, bool want_join) -> int {
    // candidates: common upper (lower) bounds of a and b
    for (int w = 0; w < words; ++w)
      common[w] = want_join ? (p.leq.row(a)[w] & p.leq.row(b)[w]) : (downs[a][w] & downs[b][w]);
    int found = -1;
    for (int z = 0; z < m; ++z) {
      if (!((common[static_cast<size_t>(z) >> 6] >> (z & 63)) & 1u)) continue;
      // minimal (maximal) within the candidate set?
      bool extreme = true;
      for (int w = 0; w < words && extreme; ++w) {
        const uint64_t inside =
            common[w] & (want_join ? downs[z][w] : p.leq.row(z)[w]);
        // `inside` holds candidates below z (above z for meets), z included
        uint64_t stripped = inside;
        if ((static_cast<size_t>(z) >> 6) == static_cast<size_t>(w))
          stripped &= ~(uint64_t{1} << (z & 63));
        if (stripped) extreme = false;
      }
      if (!extreme) continue;
      if (found != -1) return -1;  // two minimal upper bounds: not a lattice
      found = z;
    }
    return found;
  };

  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      const int j = unique_extreme(a, b, true);
      const int mt = unique_extreme(a, b, false);
      if (j < 0 || mt < 0) {
        res.is_lattice = false;
        res.fail_a = a;
        res.fail_b = b;
        res.meet.clear();
        res.join.clear();
        return res;
      }
      res.join[static_cast<size_t>(a) * m + b] = res.join[static_cast<size_t>(b) * m + a] = j;
      res.meet[static_cast<size_t>(a) * m + b] = res.meet[static_cast<size_t>(b) * m + a] = mt;
    }
  }
  res.is_lattice = true;
  return res;
}

}  // namespace finetti
