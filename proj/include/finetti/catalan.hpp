#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "finetti/triangle.hpp"

namespace finetti {

// Nondecreasing integer sequence (s_0,...,s_{n-1}) with 0 <= s_i <= i.
struct MonotoneSequence {
  int n = 1;
  std::vector<int> values;

  friend bool operator==(const MonotoneSequence& a, const MonotoneSequence& b) {
    return a.n == b.n && a.values == b.values;
  }
  friend bool operator<(const MonotoneSequence& a, const MonotoneSequence& b) {
    return a.values < b.values;
  }
};

bool sequence_valid(const MonotoneSequence& s);

// Unit-step lattice path (0,0) -> (n,n) that never climbs above the
// diagonal: after any prefix, the number of N steps never exceeds the E's.
struct SubDiagonalPath {
  int n = 1;
  std::vector<uint8_t> steps;  // 0 = E, 1 = N

  friend bool operator==(const SubDiagonalPath& a, const SubDiagonalPath& b) {
    return a.n == b.n && a.steps == b.steps;
  }
};

bool path_valid(const SubDiagonalPath& p);

// The k-th horizontal step of the path runs at height s_k.
SubDiagonalPath to_path(const MonotoneSequence& s);
MonotoneSequence path_to_sequence(const SubDiagonalPath& p);

// Coins stacked in the plane: the bottom row holds positions 1..n, and a
// coin at (row r, position p), r >= 1, rests on the coins at positions p and
// p+1 of row r-1. Higher rows need not be contiguous.
struct CoinPyramid {
  int n = 1;
  std::vector<std::vector<int>> rows;  // rows[r] = sorted occupied positions, rows[0] bottom

  bool has_coin(int r, int p) const;
  friend bool operator==(const CoinPyramid& a, const CoinPyramid& b);
  friend bool operator<(const CoinPyramid& a, const CoinPyramid& b) { return a.rows < b.rows; }
};

bool coin_pyramid_valid(const CoinPyramid& c);

// Sequence -> path -> two-colored squares under the diagonal -> coin
// pyramid; the off-diagonal white squares become the coins above the fixed
// bottom row.
CoinPyramid sigma(const MonotoneSequence& s);
MonotoneSequence sigma_inverse(const CoinPyramid& c);

// Sequence embedded as the zeroed column-monotone triangle whose last row is
// (s_1,...,s_{n-1}) with all other rows zero.
Triangle rho(const MonotoneSequence& s);
MonotoneSequence rho_inverse(const Triangle& t);

// Coin pyramid embedded into the strict-row family: drop the diagonal coins,
// mirror, 0/1-encode, then add j-1 down column j. Every entry of the image
// sits in {j-1, j}.
Triangle tau(const CoinPyramid& c);
CoinPyramid tau_inverse(const Triangle& t);

// sigma == tau^{-1} . psi . rho over every monotone sequence of length n.
// Guarded at n <= 10.
bool check_commutation(int n, bool unguarded = false);

void enumerate_monotone(int n, const std::function<bool(const MonotoneSequence&)>& visit);
std::vector<MonotoneSequence> collect_monotone(int n);

// Independent walk over stackings (not routed through sigma).
void enumerate_coin(int n, const std::function<bool(const CoinPyramid&)>& visit);
std::vector<CoinPyramid> collect_coin(int n);

}  // namespace finetti
