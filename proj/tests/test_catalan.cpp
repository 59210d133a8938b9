#include <doctest.h>

#include <random>
#include <set>

#include "finetti/catalan.hpp"
#include "finetti/errors.hpp"
#include "finetti/numbers.hpp"
#include "finetti/pyramid.hpp"

using namespace finetti;

namespace {

MonotoneSequence seq(std::vector<int> v) {
  MonotoneSequence s;
  s.n = static_cast<int>(v.size());
  s.values = std::move(v);
  return s;
}

CoinPyramid coins(int n, std::vector<std::vector<int>> rows) {
  CoinPyramid c;
  c.n = n;
  c.rows = std::move(rows);
  return c;
}

Triangle tri(TriangleFamily f, int index, std::vector<std::vector<int>> rows) {
  return Triangle{f, index, std::move(rows)};
}

// the five length-3 columns of the worked correspondence table
struct Column {
  MonotoneSequence s;
  Triangle s_primed;   // zeroed column-monotone embedding
  CoinPyramid c;
  Triangle c_primed;   // strict-row embedding
};

std::vector<Column> worked_columns() {
  return {
      {seq({0, 0, 0}), tri(TriangleFamily::omagog, 3, {{0}, {0, 0}}),
       coins(3, {{1, 2, 3}, {1, 2}, {1}}), tri(TriangleFamily::kagog, 3, {{1}, {1, 2}})},
      {seq({0, 0, 1}), tri(TriangleFamily::omagog, 3, {{0}, {0, 1}}),
       coins(3, {{1, 2, 3}, {1, 2}}), tri(TriangleFamily::kagog, 3, {{1}, {0, 2}})},
      {seq({0, 1, 1}), tri(TriangleFamily::omagog, 3, {{0}, {1, 1}}),
       coins(3, {{1, 2, 3}, {2}}), tri(TriangleFamily::kagog, 3, {{1}, {0, 1}})},
      {seq({0, 0, 2}), tri(TriangleFamily::omagog, 3, {{0}, {0, 2}}),
       coins(3, {{1, 2, 3}, {1}}), tri(TriangleFamily::kagog, 3, {{0}, {0, 2}})},
      {seq({0, 1, 2}), tri(TriangleFamily::omagog, 3, {{0}, {1, 2}}),
       coins(3, {{1, 2, 3}}), tri(TriangleFamily::kagog, 3, {{0}, {0, 1}})},
  };
}

}  // namespace

TEST_CASE("sequences and paths") {
  CHECK(sequence_valid(seq({0, 0, 2})));
  CHECK_FALSE(sequence_valid(seq({0, 2, 1})));  // not monotone
  CHECK_FALSE(sequence_valid(seq({1, 1, 1})));  // s_0 > 0

  SUBCASE("round trip and the prefix invariant") {
    for (int n = 1; n <= 6; ++n)
      enumerate_monotone(n, [&](const MonotoneSequence& s) {
        const SubDiagonalPath p = to_path(s);
        CHECK(path_valid(p));
        CHECK(path_to_sequence(p) == s);
        int east = 0, north = 0;
        for (uint8_t st : p.steps) {
          (st == 0 ? east : north) += 1;
          CHECK(north <= east);
        }
        return true;
      });
  }
}

TEST_CASE("coin pyramids stack on adjacent pairs") {
  CHECK(coin_pyramid_valid(coins(3, {{1, 2, 3}, {1, 2}, {1}})));
  CHECK(coin_pyramid_valid(coins(4, {{1, 2, 3, 4}, {1, 3}})));  // gaps are fine
  CHECK_FALSE(coin_pyramid_valid(coins(3, {{1, 2}})));          // bottom not full
  CHECK_FALSE(coin_pyramid_valid(coins(3, {{1, 2, 3}, {}, {1}})));  // floating coin
  CHECK_FALSE(coin_pyramid_valid(coins(3, {{1, 2, 3}, {3}})));  // off the edge
}

TEST_CASE("the worked length-3 table") {
  for (const auto& col : worked_columns()) {
    CAPTURE(col.s.values);
    CHECK(rho(col.s) == col.s_primed);
    CHECK(rho_inverse(col.s_primed) == col.s);
    CHECK(sigma(col.s) == col.c);
    CHECK(sigma_inverse(col.c) == col.s);
    CHECK(tau(col.c) == col.c_primed);
    CHECK(tau_inverse(col.c_primed) == col.c);
    // the lifted map agrees column by column
    CHECK(psi_triangle(col.s_primed) == col.c_primed);
  }
}

TEST_CASE("round trips over whole families") {
  for (int n = 1; n <= 6; ++n) {
    enumerate_monotone(n, [&](const MonotoneSequence& s) {
      CHECK(sigma_inverse(sigma(s)) == s);
      CHECK(rho_inverse(rho(s)) == s);
      return true;
    });
    enumerate_coin(n, [&](const CoinPyramid& c) {
      CHECK(sigma(sigma_inverse(c)) == c);
      CHECK(tau_inverse(tau(c)) == c);
      return true;
    });
  }
}

TEST_CASE("family sizes are the Catalan numbers") {
  for (int n = 1; n <= 10; ++n) {
    const BigInt cat = catalan_number(n);
    const auto seqs = collect_monotone(n);
    const auto cs = collect_coin(n);
    CHECK(BigInt(seqs.size()) == cat);
    CHECK(BigInt(cs.size()) == cat);
    std::set<std::vector<std::vector<int>>> sp, cp;
    for (const auto& s : seqs) sp.insert(rho(s).rows);
    for (const auto& c : cs) cp.insert(tau(c).rows);
    CHECK(BigInt(sp.size()) == cat);
    CHECK(BigInt(cp.size()) == cat);
  }
}

TEST_CASE("the lifted map restricts to the embedded families") {
  for (int n = 2; n <= 6; ++n) {
    std::set<std::vector<std::vector<int>>> images, targets;
    enumerate_monotone(n, [&](const MonotoneSequence& s) {
      images.insert(psi_triangle(rho(s)).rows);
      return true;
    });
    enumerate_coin(n, [&](const CoinPyramid& c) {
      targets.insert(tau(c).rows);
      return true;
    });
    CHECK(images == targets);
  }
}

TEST_CASE("commutation of the four maps") {
  for (int n = 1; n <= 6; ++n) CHECK(check_commutation(n));
  CHECK_THROWS_AS(check_commutation(11), InfeasibleError);
}

TEST_CASE("embedded-family validation errors") {
  // an entry outside {j-1, j} cannot come from coins
  CHECK_THROWS_AS(tau_inverse(tri(TriangleFamily::kagog, 3, {{0}, {0, 0}})), ValidationError);
  // a nonzero early row is not a sequence embedding
  CHECK_THROWS_AS(rho_inverse(tri(TriangleFamily::kagog, 3, {{0}, {0, 0}})), InvalidArgument);
  CHECK_THROWS_AS(rho_inverse(tri(TriangleFamily::omagog, 4, {{1}, {1, 1}, {1, 1, 1}})),
                  ValidationError);
}
