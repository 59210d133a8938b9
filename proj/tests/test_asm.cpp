#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "finetti/asm_bridge.hpp"
#include "finetti/errors.hpp"
#include "finetti/numbers.hpp"

using namespace finetti;

namespace {

AsmMatrix mat(std::vector<std::vector<int>> rows) {
  AsmMatrix a;
  a.n = static_cast<int>(rows.size());
  a.rows = std::move(rows);
  return a;
}

Triangle gog(int n, std::vector<std::vector<int>> rows) {
  return Triangle{TriangleFamily::gog, n, std::move(rows)};
}

// size-3 matrices in display order, pairing with the size-3 strict-row
// triangles entry by entry
const std::vector<AsmMatrix> kAsm3 = {
    mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), mat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}),
    mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), mat({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}),
    mat({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}), mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}),
    mat({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})};

const std::vector<Triangle> kGog3 = {
    gog(3, {{1}, {1, 2}, {1, 2, 3}}), gog(3, {{1}, {1, 3}, {1, 2, 3}}),
    gog(3, {{2}, {1, 2}, {1, 2, 3}}), gog(3, {{2}, {1, 3}, {1, 2, 3}}),
    gog(3, {{2}, {2, 3}, {1, 2, 3}}), gog(3, {{3}, {1, 3}, {1, 2, 3}}),
    gog(3, {{3}, {2, 3}, {1, 2, 3}})};

// worked 4x4 pair related by row reversal
const AsmMatrix kA = mat({{0, 0, 1, 0}, {1, 0, -1, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
const AsmMatrix kB = mat({{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, -1, 1}, {0, 0, 1, 0}});
const Triangle kG = gog(4, {{3}, {1, 4}, {1, 2, 4}, {1, 2, 3, 4}});
const Triangle kH = gog(4, {{3}, {2, 3}, {1, 2, 4}, {1, 2, 3, 4}});

// direct matrix backtracker, the test-only oracle: rows drawn from the valid
// line set, column partial sums confined to {0,1}
void oracle_asms(int n, std::vector<std::vector<int>>& acc, std::vector<int>& colsum,
                 std::vector<AsmMatrix>& out) {
  if (static_cast<int>(acc.size()) == n) {
    for (int s : colsum)
      if (s != 1) return;
    out.push_back(mat(acc));
    return;
  }
  std::vector<int> row(n, -2);
  std::function<void(int, int, int)> build = [&](int j, int sum, int last) {
    if (j == n) {
      if (sum != 1) return;
      bool ok = true;
      for (int c = 0; c < n && ok; ++c) {
        const int s = colsum[c] + row[c];
        if (s < 0 || s > 1) ok = false;
      }
      if (!ok) return;
      acc.push_back(row);
      for (int c = 0; c < n; ++c) colsum[c] += row[c];
      oracle_asms(n, acc, colsum, out);
      for (int c = 0; c < n; ++c) colsum[c] -= row[c];
      acc.pop_back();
      return;
    }
    for (int v : {-1, 0, 1}) {
      if (v != 0 && v == last) continue;
      row[j] = v;
      build(j + 1, sum + v, v != 0 ? v : last);
    }
    row[j] = -2;
  };
  build(0, 0, 0);
}

}  // namespace

TEST_CASE("alternating-sign validation") {
  for (const auto& a : kAsm3) CHECK(validate_asm(a));
  CHECK(validate_asm(kA));
  CHECK(validate_asm(mat({{1, 0}, {0, 1}})));
  CHECK_FALSE(validate_asm(mat({{1, -1}, {0, 1}})));          // row sums to 0
  CHECK_FALSE(validate_asm(mat({{0, 1}, {1, -1}})));          // column sums to 0
  CHECK_FALSE(validate_asm(mat({{2, -1}, {-1, 2}})));         // entries out of range
  CHECK_THROWS_AS(validate_asm(mat({{1, 0}, {0}})), ShapeError);
}

TEST_CASE("partial-sum triangle correspondence") {
  for (size_t i = 0; i < kAsm3.size(); ++i) {
    CHECK(asm_to_gog(kAsm3[i]) == kGog3[i]);
    CHECK(gog_to_asm(kGog3[i]) == kAsm3[i]);
  }

  SUBCASE("identity matrix gives the bottom triangle") {
    AsmMatrix id;
    id.n = 4;
    id.rows.assign(4, std::vector<int>(4, 0));
    for (int i = 0; i < 4; ++i) id.rows[i][i] = 1;
    CHECK(asm_to_gog(id) == gog(4, {{1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}}));
  }

  SUBCASE("worked 4x4 example") {
    CHECK(asm_to_gog(kA) == kG);
    CHECK(gog_to_asm(kG) == kA);
  }

  SUBCASE("exhaustive round trips") {
    for (int n = 1; n <= 4; ++n) {
      int count = 0;
      enumerate_family(TriangleFamily::gog, n, [&](const Triangle& g) {
        const AsmMatrix a = gog_to_asm(g);
        CHECK(validate_asm(a));
        CHECK(asm_to_gog(a) == g);
        ++count;
        return true;
      });
      CHECK(BigInt(count) == asm_count_formula(n));
    }
  }

  SUBCASE("each partial-sum row carries exactly i ones") {
    enumerate_asm(4, [&](const AsmMatrix& a) {
      const Triangle g = asm_to_gog(a);
      for (int i = 1; i <= 4; ++i) {
        CHECK(static_cast<int>(g.rows[i - 1].size()) == i);
        CHECK(std::is_sorted(g.rows[i - 1].begin(), g.rows[i - 1].end()));
      }
      return true;
    });
  }
}

TEST_CASE("row reversal") {
  CHECK(row_reverse(kA) == kB);
  CHECK(row_reverse(kB) == kA);

  // palindromic rows are fixed
  CHECK(row_reverse(kAsm3[3]) == kAsm3[3]);

  enumerate_asm(4, [&](const AsmMatrix& a) {
    const AsmMatrix r = row_reverse(a);
    CHECK(validate_asm(r));
    CHECK(row_reverse(r) == a);
    return true;
  });
}

TEST_CASE("the triangle involution matches row reversal") {
  CHECK(gog_involution(kG) == kH);
  CHECK(gog_involution(kH) == kG);
  CHECK(asm_to_gog(kB) == kH);

  for (int n = 1; n <= 4; ++n) {
    enumerate_family(TriangleFamily::gog, n, [&](const Triangle& g) {
      CHECK(gog_involution(gog_involution(g)) == g);
      return true;
    });
    CHECK(verify_row_reversal_correspondence(n));
  }
  CHECK_THROWS_AS(verify_row_reversal_correspondence(7), InfeasibleError);
}

TEST_CASE("matrix enumeration") {
  const auto ones = collect_asm(1);
  REQUIRE(ones.size() == 1);
  CHECK(ones[0] == mat({{1}}));

  const auto threes = collect_asm(3);
  std::set<std::vector<std::vector<int>>> got, want;
  for (const auto& a : threes) got.insert(a.rows);
  for (const auto& a : kAsm3) want.insert(a.rows);
  CHECK(got == want);

  SUBCASE("agrees with the direct matrix backtracker") {
    for (int n = 1; n <= 4; ++n) {
      std::vector<AsmMatrix> oracle;
      std::vector<std::vector<int>> acc;
      std::vector<int> colsum(n, 0);
      oracle_asms(n, acc, colsum, oracle);
      std::set<std::vector<std::vector<int>>> a, b;
      for (const auto& m : oracle) a.insert(m.rows);
      for (const auto& m : collect_asm(n)) b.insert(m.rows);
      CHECK(a == b);
      CHECK(BigInt(a.size()) == asm_count_formula(n));
    }
  }

  SUBCASE("guard refuses oversized enumerations") {
    CHECK_THROWS_AS(collect_asm(8), InfeasibleError);
  }
}
