#include "finetti/catalan.hpp"

#include <algorithm>

#include "finetti/errors.hpp"
#include "finetti/pyramid.hpp"

namespace finetti {

bool sequence_valid(const MonotoneSequence& s) {
  if (s.n < 1 || static_cast<int>(s.values.size()) != s.n) return false;
  for (int i = 0; i < s.n; ++i) {
    if (s.values[i] < 0 || s.values[i] > i) return false;
    if (i > 0 && s.values[i] < s.values[i - 1]) return false;
  }
  return true;
}

bool path_valid(const SubDiagonalPath& p) {
  if (p.n < 1 || static_cast<int>(p.steps.size()) != 2 * p.n) return false;
  int east = 0, north = 0;
  for (uint8_t s : p.steps) {
    if (s > 1) return false;
    if (s == 0)
      ++east;
    else
      ++north;
    if (north > east) return false;
  }
  return east == p.n && north == p.n;
}

SubDiagonalPath to_path(const MonotoneSequence& s) {
  if (!sequence_valid(s)) throw ValidationError("to_path: invalid monotone sequence");
  SubDiagonalPath p;
  p.n = s.n;
  int height = 0;
  for (int k = 0; k < s.n; ++k) {
    while (height < s.values[k]) {
      p.steps.push_back(1);
      ++height;
    }
    p.steps.push_back(0);
  }
  while (height < s.n) {
    p.steps.push_back(1);
    ++height;
  }
  return p;
}

MonotoneSequence path_to_sequence(const SubDiagonalPath& p) {
  if (!path_valid(p)) throw ValidationError("path_to_sequence: invalid path");
  MonotoneSequence s;
  s.n = p.n;
  int height = 0;
  for (uint8_t st : p.steps) {
    if (st == 1)
      ++height;
    else
      s.values.push_back(height);
  }
  return s;
}

bool CoinPyramid::has_coin(int r, int p) const {
  if (r < 0 || r >= static_cast<int>(rows.size())) return false;
  return std::binary_search(rows[r].begin(), rows[r].end(), p);
}

bool operator==(const CoinPyramid& a, const CoinPyramid& b) {
  if (a.n != b.n) return false;
  // trailing empty rows are irrelevant
  const size_t ra = a.rows.size(), rb = b.rows.size();
  for (size_t r = 0; r < std::max(ra, rb); ++r) {
    const bool ea = r >= ra || a.rows[r].empty();
    const bool eb = r >= rb || b.rows[r].empty();
    if (ea != eb) return false;
    if (!ea && a.rows[r] != b.rows[r]) return false;
  }
  return true;
}

bool coin_pyramid_valid(const CoinPyramid& c) {
  if (c.n < 1 || c.rows.empty()) return false;
  if (static_cast<int>(c.rows.size()) > c.n) return false;
  std::vector<int> bottom(c.n);
  for (int p = 1; p <= c.n; ++p) bottom[p - 1] = p;
  if (c.rows[0] != bottom) return false;
  for (int r = 1; r < static_cast<int>(c.rows.size()); ++r) {
    int prev = 0;
    for (int p : c.rows[r]) {
      if (p <= prev || p > c.n - r) return false;
      prev = p;
      if (!c.has_coin(r - 1, p) || !c.has_coin(r - 1, p + 1)) return false;
    }
  }
  return true;
}

namespace {

// Square (x,y) of the under-diagonal region, 0 <= y <= x <= n-1, is white
// when it lies on or above the path, i.e. y >= s_x. Off-diagonal whites are
// the coins: square (x,y), y < x, is the coin at row x-y, position y+1.
bool square_white_from_sequence(const MonotoneSequence& s, int x, int y) {
  return y >= s.values[x];
}

bool square_white_from_coins(const CoinPyramid& c, int x, int y) {
  if (x == y) return true;
  return c.has_coin(x - y, y + 1);
}

}  // namespace

CoinPyramid sigma(const MonotoneSequence& s) {
  if (!sequence_valid(s)) throw ValidationError("sigma: invalid monotone sequence");
  CoinPyramid c;
  c.n = s.n;
  c.rows.resize(s.n);
  for (int p = 1; p <= s.n; ++p) c.rows[0].push_back(p);
  for (int r = 1; r < s.n; ++r)
    for (int p = 1; p <= s.n - r; ++p)
      if (square_white_from_sequence(s, r + p - 1, p - 1)) c.rows[r].push_back(p);
  while (c.rows.size() > 1 && c.rows.back().empty()) c.rows.pop_back();
  return c;
}

MonotoneSequence sigma_inverse(const CoinPyramid& c) {
  if (!coin_pyramid_valid(c)) throw ValidationError("sigma_inverse: invalid coin pyramid");
  MonotoneSequence s;
  s.n = c.n;
  s.values.resize(c.n);
  for (int x = 0; x < c.n; ++x) {
    int y = 0;
    while (y < x && !square_white_from_coins(c, x, y)) ++y;
    s.values[x] = y;
  }
  if (!sequence_valid(s)) throw ValidationError("sigma_inverse: coins do not shadow a path");
  return s;
}

Triangle rho(const MonotoneSequence& s) {
  if (!sequence_valid(s)) throw ValidationError("rho: invalid monotone sequence");
  const int n = s.n;
  Triangle t;
  t.family = TriangleFamily::omagog;
  t.index = n;
  t.rows.resize(n - 1);
  for (int i = 1; i <= n - 1; ++i) t.rows[i - 1].assign(i, 0);
  for (int j = 1; j <= n - 1; ++j) t.rows[n - 2][j - 1] = s.values[j];
  require_valid(t);
  return t;
}

MonotoneSequence rho_inverse(const Triangle& t) {
  if (t.family != TriangleFamily::omagog) throw InvalidArgument("rho_inverse: not an omagog");
  require_valid(t);
  const int n = t.index;
  for (int i = 1; i <= n - 2; ++i)
    for (int j = 1; j <= i; ++j)
      if (t.at(i, j) != 0)
        throw ValidationError("rho_inverse: rows above the last must be zero");
  MonotoneSequence s;
  s.n = n;
  s.values.assign(n, 0);
  for (int j = 1; j <= n - 1; ++j) s.values[j] = n >= 2 ? t.at(n - 1, j) : 0;
  if (!sequence_valid(s)) throw ValidationError("rho_inverse: last row is not monotone");
  return s;
}

Triangle tau(const CoinPyramid& c) {
  if (!coin_pyramid_valid(c)) throw ValidationError("tau: invalid coin pyramid");
  const int n = c.n;
  Triangle t;
  t.family = TriangleFamily::kagog;
  t.index = n;
  t.rows.resize(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    t.rows[i - 1].resize(i);
    for (int j = 1; j <= i; ++j) {
      // mirrored square for cell (i,j)
      const int white = square_white_from_coins(c, n - j, n - 1 - i) ? 1 : 0;
      t.rows[i - 1][j - 1] = white + (j - 1);
    }
  }
  require_valid(t);
  return t;
}

CoinPyramid tau_inverse(const Triangle& t) {
  if (t.family != TriangleFamily::kagog) throw InvalidArgument("tau_inverse: not a kagog");
  require_valid(t);
  const int n = t.index;
  CoinPyramid c;
  c.n = n;
  c.rows.resize(n);
  for (int p = 1; p <= n; ++p) c.rows[0].push_back(p);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j) {
      const int b = t.at(i, j) - (j - 1);
      if (b != 0 && b != 1)
        throw ValidationError("tau_inverse: entry in column " + std::to_string(j) +
                              " is neither j-1 nor j");
      if (b == 1) {
        const int x = n - j, y = n - 1 - i;  // coin (x-y, y+1)
        c.rows[x - y].push_back(y + 1);
      }
    }
  for (auto& row : c.rows) std::sort(row.begin(), row.end());
  while (c.rows.size() > 1 && c.rows.back().empty()) c.rows.pop_back();
  if (!coin_pyramid_valid(c)) throw ValidationError("tau_inverse: coins do not stack");
  return c;
}

bool check_commutation(int n, bool unguarded) {
  if (n < 1) throw InvalidArgument("check_commutation: n must be >= 1");
  if (n > 10 && !unguarded) throw InfeasibleError("check_commutation: n > 10 refused");
  bool ok = true;
  enumerate_monotone(n, [&](const MonotoneSequence& s) {
    const Triangle lifted = psi_triangle(rho(s));
    if (sigma(s) != tau_inverse(lifted)) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

void enumerate_monotone(int n, const std::function<bool(const MonotoneSequence&)>& visit) {
  if (n < 1) throw InvalidArgument("enumerate_monotone: n must be >= 1");
  MonotoneSequence s;
  s.n = n;
  s.values.assign(n, 0);
  // lexicographic DFS over positions
  std::function<bool(int)> fill = [&](int i) -> bool {
    if (i == n) return visit(s);
    const int lo = i == 0 ? 0 : s.values[i - 1];
    for (int v = lo; v <= i; ++v) {
      s.values[i] = v;
      if (!fill(i + 1)) return false;
    }
    s.values[i] = 0;
    return true;
  };
  fill(0);
}

std::vector<MonotoneSequence> collect_monotone(int n) {
  std::vector<MonotoneSequence> out;
  enumerate_monotone(n, [&](const MonotoneSequence& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

void enumerate_coin(int n, const std::function<bool(const CoinPyramid&)>& visit) {
  if (n < 1) throw InvalidArgument("enumerate_coin: n must be >= 1");
  CoinPyramid c;
  c.n = n;
  c.rows.resize(n);
  for (int p = 1; p <= n; ++p) c.rows[0].push_back(p);

  // row by row: any subset of the supported positions
  std::function<bool(int)> fill = [&](int r) -> bool {
    if (r == n) {
      CoinPyramid trimmed = c;
      while (trimmed.rows.size() > 1 && trimmed.rows.back().empty()) trimmed.rows.pop_back();
      return visit(trimmed);
    }
    std::vector<int> supported;
    for (int p = 1; p <= n - r; ++p)
      if (c.has_coin(r - 1, p) && c.has_coin(r - 1, p + 1)) supported.push_back(p);
    const size_t total = size_t{1} << supported.size();
    for (size_t bits = 0; bits < total; ++bits) {
      c.rows[r].clear();
      for (size_t q = 0; q < supported.size(); ++q)
        if ((bits >> q) & 1) c.rows[r].push_back(supported[q]);
      if (!fill(r + 1)) return false;
    }
    c.rows[r].clear();
    return true;
  };
  fill(1);
}

std::vector<CoinPyramid> collect_coin(int n) {
  std::vector<CoinPyramid> out;
  enumerate_coin(n, [&](const CoinPyramid& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

}  // namespace finetti
