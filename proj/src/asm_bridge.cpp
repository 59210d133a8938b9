#include "finetti/asm_bridge.hpp"

#include <algorithm>

#include "finetti/errors.hpp"
#include "finetti/pyramid.hpp"

namespace finetti {

namespace {

void check_square(const AsmMatrix& a) {
  if (a.n < 1 || static_cast<int>(a.rows.size()) != a.n)
    throw ShapeError("matrix must have n rows");
  for (const auto& row : a.rows)
    if (static_cast<int>(row.size()) != a.n) throw ShapeError("matrix must be square");
}

bool line_ok(const std::vector<int>& v) {
  int sum = 0, last_sign = 0;
  for (int x : v) {
    if (x < -1 || x > 1) return false;
    sum += x;
    if (x != 0) {
      if (x == last_sign) return false;  // consecutive nonzeros must alternate
      last_sign = x;
    }
  }
  return sum == 1;
}

}  // namespace

bool validate_asm(const AsmMatrix& a) {
  check_square(a);
  for (int i = 1; i <= a.n; ++i)
    if (!line_ok(a.rows[i - 1])) return false;
  for (int j = 1; j <= a.n; ++j) {
    std::vector<int> col(a.n);
    for (int i = 1; i <= a.n; ++i) col[i - 1] = a.at(i, j);
    if (!line_ok(col)) return false;
  }
  return true;
}

Triangle asm_to_gog(const AsmMatrix& a) {
  check_square(a);
  if (!validate_asm(a)) throw ValidationError("asm_to_gog: input is not alternating-sign");
  const int n = a.n;
  Triangle g;
  g.family = TriangleFamily::gog;
  g.index = n;
  g.rows.resize(n);
  std::vector<int> sums(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < n; ++j) {
      sums[j] += a.rows[i - 1][j];
      if (sums[j] < 0 || sums[j] > 1)
        throw ValidationError("asm_to_gog: partial sums leave {0,1}");
    }
    for (int j = 0; j < n; ++j)
      if (sums[j] == 1) g.rows[i - 1].push_back(j + 1);
    if (static_cast<int>(g.rows[i - 1].size()) != i)
      throw ValidationError("asm_to_gog: partial sum row lacks exactly i ones");
  }
  require_valid(g);
  return g;
}

AsmMatrix gog_to_asm(const Triangle& g) {
  if (g.family != TriangleFamily::gog) throw InvalidArgument("gog_to_asm: not a gog triangle");
  require_valid(g);
  const int n = g.index;
  AsmMatrix a;
  a.n = n;
  a.rows.assign(n, std::vector<int>(n, 0));
  std::vector<int> prev(n, 0), cur(n, 0);
  for (int i = 1; i <= n; ++i) {
    std::fill(cur.begin(), cur.end(), 0);
    for (int v : g.rows[i - 1]) cur[v - 1] = 1;
    for (int j = 0; j < n; ++j) {
      const int d = cur[j] - prev[j];
      if (d < -1 || d > 1) throw ValidationError("gog_to_asm: indicator difference outside {-1,0,1}");
      a.rows[i - 1][j] = d;
    }
    std::swap(prev, cur);
  }
  if (!validate_asm(a)) throw ValidationError("gog_to_asm: reconstruction is not alternating-sign");
  return a;
}

AsmMatrix row_reverse(const AsmMatrix& a) {
  check_square(a);
  AsmMatrix out = a;
  std::reverse(out.rows.begin(), out.rows.end());
  return out;
}

Triangle gog_involution(const Triangle& g) {
  if (g.index == 1) {  // the single one-cell triangle maps to itself
    require_valid(g);
    return g;
  }
  return ogog_to_gog(phi_triangle(gog_to_ogog(g)));
}

bool verify_row_reversal_correspondence(int n, bool unguarded) {
  if (n > 6 && !unguarded)
    throw InfeasibleError("verify_row_reversal_correspondence: n > 6 refused");
  bool ok = true;
  enumerate_asm(
      n,
      [&](const AsmMatrix& a) {
        if (asm_to_gog(row_reverse(a)) != gog_involution(asm_to_gog(a))) {
          ok = false;
          return false;
        }
        return true;
      },
      unguarded);
  return ok;
}

void enumerate_asm(int n, const std::function<bool(const AsmMatrix&)>& visit, bool unguarded) {
  if (n < 1) throw InvalidArgument("enumerate_asm: n must be >= 1");
  if (n > 7 && !unguarded) throw InfeasibleError("enumerate_asm: n > 7 refused");
  enumerate_family(TriangleFamily::gog, n,
                   [&](const Triangle& g) { return visit(gog_to_asm(g)); });
}

std::vector<AsmMatrix> collect_asm(int n, bool unguarded) {
  std::vector<AsmMatrix> out;
  enumerate_asm(
      n,
      [&](const AsmMatrix& a) {
        out.push_back(a);
        return true;
      },
      unguarded);
  return out;
}

std::string render_asm(const AsmMatrix& a) {
  std::string out;
  for (const auto& row : a.rows) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      if (row[j] >= 0) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace finetti
