#include "finetti/definetti.hpp"

#include <algorithm>
#include <unordered_map>

#include "finetti/errors.hpp"

namespace finetti {

const char* kind_name(DeFinettiKind k) {
  switch (k) {
    case DeFinettiKind::bn2: return "bn2";
    case DeFinettiKind::fn2: return "fn2";
    case DeFinettiKind::fn21_member: return "fn21-member";
    case DeFinettiKind::linear_extension: return "linear-extension";
  }
  return "?";
}

DeFinettiKind kind_from_name(const std::string& name) {
  if (name == "bn2") return DeFinettiKind::bn2;
  if (name == "fn2") return DeFinettiKind::fn2;
  if (name == "fn21-member") return DeFinettiKind::fn21_member;
  if (name == "linear-extension") return DeFinettiKind::linear_extension;
  throw InvalidArgument("unknown poset kind: " + name);
}

std::vector<SubsetElement> bn2_elements(int n) {
  std::vector<SubsetElement> out;
  out.push_back(SubsetElement::empty());
  for (int i = 1; i <= n; ++i) out.push_back(SubsetElement::singleton(i));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.push_back(SubsetElement::doubleton(a, b));
  return out;
}

DeFinettiPoset build_bn2(int n) {
  if (n < 1) throw InvalidArgument("build_bn2: n must be >= 1");
  auto elems = bn2_elements(n);
  const int m = static_cast<int>(elems.size());
  Relation r(m);
  r.set_reflexive();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const uint64_t ma = elems[a].mask(), mb = elems[b].mask();
      if ((ma & mb) == ma && ma != mb) r.set(a, b);  // proper inclusion
    }
  return DeFinettiPoset{Poset{n, std::move(elems), std::move(r)}, n, DeFinettiKind::bn2};
}

DeFinettiPoset build_fn2(int n) {
  if (n < 1) throw InvalidArgument("build_fn2: n must be >= 1");
  DeFinettiPoset p = build_bn2(n);
  Relation r = p.base.leq;
  const auto& elems = p.base.elements;
  const int m = static_cast<int>(elems.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const auto& x = elems[a];
      const auto& y = elems[b];
      if (x.size() == 1 && y.size() == 1 && x.high() < y.high()) r.set(a, b);
      if (x.size() == 2 && y.size() == 2) {
        // componentwise on (larger, smaller), strict somewhere
        if (x.high() <= y.high() && x.low() <= y.low()) r.set(a, b);
      }
    }
  r = transitive_closure(std::move(r));
  p.base.leq = std::move(r);
  p.kind = DeFinettiKind::fn2;
  return p;
}

namespace {

std::pair<int, int> padded(const SubsetElement& x) {
  // (larger, smaller) with 0 padding
  return {x.high(), x.low()};
}

SubsetElement strip(int hi, int lo) {
  if (hi == 0) return SubsetElement::empty();
  if (lo == 0) return SubsetElement::singleton(hi);
  return SubsetElement::doubleton(hi, lo);
}

}  // namespace

SubsetElement fn2_meet(const SubsetElement& x, const SubsetElement& y) {
  auto [xh, xl] = padded(x);
  auto [yh, yl] = padded(y);
  return strip(std::min(xh, yh), std::min(xl, yl));
}

SubsetElement fn2_join(const SubsetElement& x, const SubsetElement& y) {
  auto [xh, xl] = padded(x);
  auto [yh, yl] = padded(y);
  return strip(std::max(xh, yh), std::max(xl, yl));
}

bool satisfies_definetti(const Poset& p) {
  const int m = p.size();
  std::unordered_map<uint64_t, int> idx;
  for (int i = 0; i < m; ++i) idx.emplace(p.elements[i].mask(), i);

  // singleton chain, empty set included when present
  {
    std::vector<int> chain;
    auto it = idx.find(0);
    if (it != idx.end()) chain.push_back(it->second);
    for (int i = 1; i <= p.n; ++i) {
      it = idx.find(uint64_t{1} << (i - 1));
      if (it != idx.end()) chain.push_back(it->second);
    }
    for (size_t a = 0; a < chain.size(); ++a)
      for (size_t b = a + 1; b < chain.size(); ++b)
        if (!p.less(chain[a], chain[b])) return false;
  }

  const uint64_t ground = p.n >= 64 ? ~uint64_t{0} : (uint64_t{1} << p.n) - 1;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (!p.less(a, b)) continue;
      const uint64_t ma = p.elements[a].mask(), mb = p.elements[b].mask();
      // cancellation: the symmetric parts must compare the same way
      const uint64_t ra = ma & ~mb, rb = mb & ~ma;
      if (ra != ma) {  // overlapping pair; the disjoint residue is a different pair
        auto ia = idx.find(ra);
        auto ib = idx.find(rb);
        if (ia != idx.end() && ib != idx.end() && !p.less(ia->second, ib->second)) return false;
      }
      // augmentation: adding any common disjoint set preserves the comparison
      const uint64_t free = ground & ~(ma | mb);
      for (uint64_t z = free; z != 0; z = (z - 1) & free) {
        auto ia = idx.find(ma | z);
        if (ia == idx.end()) continue;
        auto ib = idx.find(mb | z);
        if (ib == idx.end()) continue;
        if (!p.less(ia->second, ib->second)) return false;
      }
    }
  }
  return true;
}

std::vector<SubsetElement> undetermined_doubletons(int n, int k) {
  if (k < 3 || k > n) throw InvalidArgument("undetermined_doubletons: need 3 <= k <= n");
  std::vector<SubsetElement> out;
  for (int i = 1; i < k; ++i)
    for (int j = i + 1; j < k; ++j) out.push_back(SubsetElement::doubleton(i, j));
  std::sort(out.begin(), out.end());
  return out;
}

bool placement_list_valid(const std::vector<int>& counts) {
  // zero prefix, then strictly increasing, entry at position p at most p
  bool seen_positive = false;
  int prev = 0;
  for (size_t p = 0; p < counts.size(); ++p) {
    const int c = counts[p];
    if (c < 0 || c > static_cast<int>(p) + 1) return false;
    if (seen_positive && c <= prev) return false;
    if (c > 0) {
      seen_positive = true;
      prev = c;
    }
  }
  return true;
}

SingletonPlacement encode_placement(const SingletonComparisons& c) {
  const int k = c.k;
  if (k < 3) throw InvalidArgument("encode_placement: k must be >= 3");
  const int expect = (k - 1) * (k - 2) / 2;
  if (static_cast<int>(c.singleton_below.size()) != expect)
    throw InvalidArgument("encode_placement: comparisons must cover all undetermined doubletons");
  SingletonPlacement out;
  out.k = k;
  out.above_counts.assign(k - 2, 0);
  // canonical doubleton order is (smaller, larger) lexicographic
  int pos = 0;
  std::vector<std::vector<bool>> below_by_larger(k);  // index m, entries j = 1..m-1
  for (int i = 1; i < k; ++i)
    for (int j = i + 1; j < k; ++j) below_by_larger[j].push_back(c.singleton_below[pos++]);
  // reorder: below_by_larger[m][t] currently holds pairs (i, m) in i order, which
  // is exactly j = i = 1..m-1
  for (int mlarge = 2; mlarge < k; ++mlarge) {
    const auto& row = below_by_larger[mlarge];
    int cnt = 0;
    for (bool b : row) cnt += b ? 1 : 0;
    // within the chain {m,1} < {m,2} < ... the singleton must cut it once
    for (int t = 0; t < static_cast<int>(row.size()); ++t) {
      const bool expected_below = t >= mlarge - 1 - cnt;
      if (row[t] != expected_below)
        throw InconsistentPlacement("singleton " + std::to_string(c.k) +
                                    " cuts the chain of larger member " +
                                    std::to_string(mlarge) + " more than once");
    }
    out.above_counts[mlarge - 2] = cnt;
  }
  if (!placement_list_valid(out.above_counts))
    throw InconsistentPlacement("placement counts of singleton " + std::to_string(c.k) +
                                " do not form a zero prefix plus increasing run");
  return out;
}

SingletonComparisons decode_placement(const SingletonPlacement& s) {
  const int k = s.k;
  if (k < 3 || static_cast<int>(s.above_counts.size()) != k - 2 ||
      !placement_list_valid(s.above_counts))
    throw InconsistentPlacement("decode_placement: invalid placement list");
  SingletonComparisons out;
  out.k = k;
  for (int i = 1; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      // doubleton {i,j}: larger member j, smaller i; below iff i > j-1-c_j
      const int c = s.above_counts[j - 2];
      out.singleton_below.push_back(i > j - 1 - c);
    }
  return out;
}

namespace {

// Indices of {k} and of I_k inside a canonical two-level poset.
struct GroundIndex {
  std::vector<int> singleton;                 // [1..n] -> element index
  std::vector<std::vector<int>> doubleton;    // [lo][hi] -> element index
};

GroundIndex index_ground(const Poset& p) {
  GroundIndex g;
  g.singleton.assign(p.n + 1, -1);
  g.doubleton.assign(p.n + 1, std::vector<int>(p.n + 1, -1));
  for (int e = 0; e < p.size(); ++e) {
    const auto& el = p.elements[e];
    if (el.size() == 1) g.singleton[el.high()] = e;
    if (el.size() == 2) g.doubleton[el.low()][el.high()] = e;
  }
  return g;
}

}  // namespace

Triangle refinement_to_kagog(const DeFinettiPoset& e) {
  const int n = e.n;
  if (n < 2) throw InvalidArgument("refinement_to_kagog: n must be >= 2");
  const auto g = index_ground(e.base);
  Triangle t;
  t.family = TriangleFamily::kagog;
  t.index = n - 1;
  t.rows.resize(n - 2);
  for (int k = 3; k <= n; ++k) {
    SingletonComparisons cmp;
    cmp.k = k;
    const int ks = g.singleton[k];
    for (int i = 1; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        const int d = g.doubleton[i][j];
        const bool below = e.base.less(ks, d);
        const bool above = e.base.less(d, ks);
        if (!below && !above)
          throw NotUniversallyComparable("singleton " + std::to_string(k) +
                                         " is incomparable with doubleton {" +
                                         std::to_string(j) + "," + std::to_string(i) + "}");
        cmp.singleton_below.push_back(below);
      }
    t.rows[k - 3] = encode_placement(cmp).above_counts;
  }
  require_valid(t);
  return t;
}

DeFinettiPoset kagog_to_refinement(const Triangle& k) {
  if (k.family != TriangleFamily::kagog)
    throw InvalidArgument("kagog_to_refinement: not a kagog triangle");
  require_valid(k);
  const int n = k.index + 1;
  DeFinettiPoset base = build_fn2(n);
  const auto g = index_ground(base.base);
  Relation r = base.base.leq;
  for (int kk = 3; kk <= n; ++kk) {
    SingletonPlacement s;
    s.k = kk;
    s.above_counts = k.rows[kk - 3];
    const auto cmp = decode_placement(s);
    const int ks = g.singleton[kk];
    int pos = 0;
    for (int i = 1; i < kk; ++i)
      for (int j = i + 1; j < kk; ++j) {
        const int d = g.doubleton[i][j];
        if (cmp.singleton_below[pos++])
          r.set(ks, d);
        else
          r.set(d, ks);
      }
  }
  r = transitive_closure(std::move(r));
  if (!r.is_antisymmetric())
    throw CycleError("kagog_to_refinement: decoded decisions closed into a cycle");
  base.base.leq = std::move(r);
  base.kind = DeFinettiKind::fn21_member;
  return base;
}

namespace {

void enumerate_fn21_direct(int n, const std::function<bool(const DeFinettiPoset&)>& visit) {
  // raw decision vectors: each undetermined doubleton independently above or
  // below its singleton, keep the closures that survive
  DeFinettiPoset fn2 = build_fn2(n);
  const auto g = index_ground(fn2.base);
  struct Pair {
    int singleton, doubleton;
  };
  std::vector<Pair> pairs;
  for (int k = 3; k <= n; ++k)
    for (int i = 1; i < k; ++i)
      for (int j = i + 1; j < k; ++j) pairs.push_back({g.singleton[k], g.doubleton[i][j]});

  std::vector<DeFinettiPoset> found;
  const size_t total = size_t{1} << pairs.size();
  for (size_t bits = 0; bits < total; ++bits) {
    Relation r = fn2.base.leq;
    for (size_t p = 0; p < pairs.size(); ++p) {
      if ((bits >> p) & 1)
        r.set(pairs[p].singleton, pairs[p].doubleton);
      else
        r.set(pairs[p].doubleton, pairs[p].singleton);
    }
    r = transitive_closure(std::move(r));
    if (!r.is_antisymmetric()) continue;
    DeFinettiPoset cand{Poset{n, fn2.base.elements, std::move(r)}, n,
                        DeFinettiKind::fn21_member};
    if (!satisfies_definetti(cand.base)) continue;
    found.push_back(std::move(cand));
  }
  // canonical emission order: lexicographic by triangle encoding
  std::sort(found.begin(), found.end(), [](const DeFinettiPoset& a, const DeFinettiPoset& b) {
    return refinement_to_kagog(a).rows < refinement_to_kagog(b).rows;
  });
  for (const auto& p : found)
    if (!visit(p)) return;
}

}  // namespace

void enumerate_fn21(int n, Fn21Mode mode, const std::function<bool(const DeFinettiPoset&)>& visit,
                    bool unguarded) {
  if (n < 2) throw InvalidArgument("enumerate_fn21: n must be >= 2");
  if (mode == Fn21Mode::direct) {
    if (n > 5 && !unguarded)
      throw InfeasibleError("enumerate_fn21: direct mode is exhaustive over 2^" +
                            std::to_string(n * (n - 1) * (n - 2) / 6) + " decision vectors; n > 5 refused");
    enumerate_fn21_direct(n, visit);
    return;
  }
  enumerate_family(TriangleFamily::kagog, n - 1,
                   [&](const Triangle& t) { return visit(kagog_to_refinement(t)); });
}

std::vector<DeFinettiPoset> collect_fn21(int n, Fn21Mode mode, bool unguarded) {
  std::vector<DeFinettiPoset> out;
  enumerate_fn21(n, mode,
                 [&](const DeFinettiPoset& p) {
                   out.push_back(p);
                   return true;
                 },
                 unguarded);
  return out;
}

bool tableau_valid(const ShiftedTableau& t) {
  const int n = t.n;
  if (n < 1 || static_cast<int>(t.rows.size()) != n) return false;
  for (int r = 0; r < n; ++r)
    if (static_cast<int>(t.rows[r].size()) != n - r) return false;
  const int total = n * (n + 1) / 2;
  std::vector<bool> seen(total + 1, false);
  for (const auto& row : t.rows)
    for (int v : row) {
      if (v < 1 || v > total || seen[v]) return false;
      seen[v] = true;
    }
  for (int r = 0; r < n; ++r)
    for (int p = 0; p + 1 < n - r; ++p)
      if (t.rows[r][p] >= t.rows[r][p + 1]) return false;
  // absolute column a holds row r at offset a-r; row r+1 sits one cell right
  for (int r = 0; r + 1 < n; ++r)
    for (int a = r + 1; a < n; ++a)
      if (t.rows[r][a - r] >= t.rows[r + 1][a - r - 1]) return false;
  return true;
}

ShiftedTableau le_to_tableau(int n, const std::vector<SubsetElement>& order) {
  if (n < 1) throw InvalidArgument("le_to_tableau: n must be >= 1");
  std::vector<SubsetElement> seq = order;
  if (!seq.empty() && seq.front().is_empty()) seq.erase(seq.begin());
  const int total = n * (n + 1) / 2;
  if (static_cast<int>(seq.size()) != total)
    throw InvalidArgument("le_to_tableau: order must list all " + std::to_string(total) +
                          " nonempty sets");
  ShiftedTableau t;
  t.n = n;
  t.rows.resize(n);
  for (int r = 0; r < n; ++r) t.rows[r].assign(n - r, 0);
  for (int l = 1; l <= total; ++l) {
    const auto& e = seq[l - 1];
    if (e.is_empty() || e.size() > 2 || !e.well_formed(n))
      throw InvalidArgument("le_to_tableau: order contains a set outside the ground ideal");
    const int lo = e.low();   // 0 for singletons
    const int hi = e.high();
    const int r = lo;         // row k = lo+1
    const int p = hi - lo - 1;
    if (t.rows[r][p] != 0) throw InvalidArgument("le_to_tableau: duplicate set in order");
    t.rows[r][p] = l;
  }
  if (!tableau_valid(t))
    throw NotDeFinetti("le_to_tableau: order does not increase along the staircase grid");
  return t;
}

std::vector<SubsetElement> tableau_to_le(const ShiftedTableau& t) {
  if (!tableau_valid(t)) throw NotDeFinetti("tableau_to_le: invalid shifted tableau");
  const int n = t.n;
  const int total = n * (n + 1) / 2;
  std::vector<SubsetElement> order(total);
  for (int r = 0; r < n; ++r)
    for (int p = 0; p < n - r; ++p) {
      const int hi = r + p + 1;
      order[t.rows[r][p] - 1] =
          r == 0 ? SubsetElement::singleton(hi) : SubsetElement::doubleton(r, hi);
    }
  return order;
}

namespace {

// Backtracking enumeration of power-set total orders: the singleton chain is
// forced, and each newly placed set is checked against every earlier set by
// cancelling their common part. Comparisons whose cancelled forms are both
// unplaced become pending precedence constraints.
class TotalOrderSearch {
 public:
  TotalOrderSearch(int n, const std::function<bool(const std::vector<SubsetElement>&)>& visit)
      : n_(n), visit_(visit) {
    for (uint32_t m = 0; m < (uint32_t{1} << n); ++m) elems_.emplace_back(unmask(m));
    std::sort(elems_.begin(), elems_.end());
    m_ = static_cast<int>(elems_.size());
    mask_of_.resize(m_);
    idx_of_.assign(uint32_t{1} << n, -1);
    for (int e = 0; e < m_; ++e) {
      mask_of_[e] = static_cast<uint32_t>(elems_[e].mask());
      idx_of_[mask_of_[e]] = e;
    }
    placed_.assign(m_, false);
    pos_.assign(m_, -1);
    pending_.assign(m_, 0);
    out_cnt_.assign(m_, {});
    unplaced_subsets_.assign(m_, 0);
    for (int e = 0; e < m_; ++e) unplaced_subsets_[e] = static_cast<int>(count_subsets_mask(e));
    singleton_idx_.assign(n_ + 1, -1);
    for (int i = 1; i <= n_; ++i) singleton_idx_[i] = idx_of_[uint32_t{1} << (i - 1)];
  }

  bool run() { return place_next(); }

 private:
  SubsetElement unmask(uint32_t m) const {
    std::vector<int> mem;
    for (int i = 1; i <= n_; ++i)
      if ((m >> (i - 1)) & 1) mem.push_back(i);
    return SubsetElement{std::move(mem)};
  }

  uint32_t count_subsets_mask(int e) const {
    // proper subsets are all strictly smaller submasks; count via popcount of
    // a virtual set, cheaper to just count them
    uint32_t mask = mask_of_[e];
    uint32_t cnt = 0;
    for (uint32_t s = (mask - 1) & mask;; s = (s - 1) & mask) {
      ++cnt;
      if (s == 0) break;
    }
    return mask == 0 ? 0 : cnt;
  }

  bool place_next() {
    if (static_cast<int>(seq_.size()) == m_) {
      std::vector<SubsetElement> order;
      order.reserve(m_);
      for (int e : seq_) order.push_back(elems_[e]);
      return visit_(order);
    }
    for (int x = 0; x < m_; ++x) {
      if (placed_[x] || pending_[x] != 0 || unplaced_subsets_[x] != 0) continue;
      if (elems_[x].size() == 1) {
        const int v = elems_[x].high();
        if (v >= 2 && !placed_[singleton_idx_[v - 1]]) continue;  // singleton chain order
      }
      if (!try_place(x)) return false;
    }
    return true;
  }

  bool try_place(int x) {
    std::vector<std::pair<int, int>> added;
    placed_[x] = true;
    pos_[x] = static_cast<int>(seq_.size());
    seq_.push_back(x);
    bool ok = true;
    for (size_t t = 0; t + 1 < seq_.size() && ok; ++t) {
      const int y = seq_[t];
      const uint32_t ra = mask_of_[y] & ~mask_of_[x];
      const uint32_t rb = mask_of_[x] & ~mask_of_[y];
      const int a = idx_of_[ra], b = idx_of_[rb];
      if (a == b) continue;
      if (placed_[a] && placed_[b]) {
        if (pos_[a] > pos_[b]) ok = false;
      } else if (placed_[b]) {
        ok = false;  // the cancelled pair already resolved the other way
      } else if (!placed_[a]) {
        auto& rev = out_cnt_[b];
        if (rev.count(a)) {
          ok = false;  // opposite constraint already pending
        } else {
          ++out_cnt_[a][b];
          ++pending_[b];
          added.emplace_back(a, b);
        }
      }
    }

    bool keep_going = true;
    if (ok) {
      for (auto& [v, cnt] : out_cnt_[x]) pending_[v] -= cnt;  // x now precedes them
      for (int e = 0; e < m_; ++e)
        if (is_proper_subset(x, e)) --unplaced_subsets_[e];
      keep_going = place_next();
      for (int e = 0; e < m_; ++e)
        if (is_proper_subset(x, e)) ++unplaced_subsets_[e];
      for (auto& [v, cnt] : out_cnt_[x]) pending_[v] += cnt;
    }

    for (auto [a, b] : added) {
      auto it = out_cnt_[a].find(b);
      if (--it->second == 0) out_cnt_[a].erase(it);
      --pending_[b];
    }
    seq_.pop_back();
    pos_[x] = -1;
    placed_[x] = false;
    return keep_going;
  }

  bool is_proper_subset(int x, int e) const {
    const uint32_t mx = mask_of_[x], me = mask_of_[e];
    return mx != me && (mx & me) == mx;
  }

  int n_, m_ = 0;
  std::vector<SubsetElement> elems_;
  std::vector<uint32_t> mask_of_;
  std::vector<int> idx_of_;
  std::vector<int> singleton_idx_;
  std::vector<bool> placed_;
  std::vector<int> pos_;
  std::vector<int> pending_;
  std::vector<std::unordered_map<int, int>> out_cnt_;
  std::vector<int> unplaced_subsets_;
  std::vector<int> seq_;
  const std::function<bool(const std::vector<SubsetElement>&)>& visit_;
};

}  // namespace

void enumerate_definetti_total_orders(
    int n, const std::function<bool(const std::vector<SubsetElement>&)>& visit, bool unguarded) {
  if (n < 1) throw InvalidArgument("enumerate_definetti_total_orders: n must be >= 1");
  if (n > 5 && !unguarded)
    throw InfeasibleError("enumerate_definetti_total_orders: exhaustive over the power set; "
                          "n > 5 refused");
  TotalOrderSearch search(n, visit);
  search.run();
}

unsigned long long count_definetti_total_orders(int n, bool unguarded) {
  unsigned long long c = 0;
  enumerate_definetti_total_orders(
      n,
      [&](const std::vector<SubsetElement>&) {
        ++c;
        return true;
      },
      unguarded);
  return c;
}

}  // namespace finetti
