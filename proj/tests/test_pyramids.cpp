#include <doctest.h>

#include <random>
#include <set>

#include "finetti/errors.hpp"
#include "finetti/pyramid.hpp"

using namespace finetti;

namespace {

Triangle tri(TriangleFamily f, int index, std::vector<std::vector<int>> rows) {
  return Triangle{f, index, std::move(rows)};
}

int white_count(const TwoColorPyramid& p) {
  int c = 0;
  for (int i = 1; i <= p.row_count(); ++i)
    for (int j = 1; j <= i; ++j)
      for (int k = 1; k <= p.tower_height(i, j); ++k) c += p.color(i, j, k);
  return c;
}

// inequality oracle for images of the omagog-to-kagog map
bool kagog_pyramid_ok(const TwoColorPyramid& p) {
  const int r = p.row_count();
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= i; ++j)
      for (int k = 1; k <= p.tower_height(i, j); ++k) {
        if (i < r && p.color(i, j, k) < p.color(i + 1, j, k)) return false;
        if (j > 1 && k > 1 && p.color(i, j, k) < p.color(i, j - 1, k - 1)) return false;
        if (k < p.tower_height(i, j) && p.color(i, j, k) < p.color(i, j, k + 1)) return false;
      }
  return true;
}

// the six inequalities describing valid height-bounded pyramids
bool ogog_pyramid_ok(const TwoColorPyramid& p) {
  const int n = p.index();
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j)
      for (int k = 1; k <= n - i; ++k) {
        const int c = p.color(i, j, k);
        if (j < i && p.color(i, j + 1, k) < c) return false;
        if (i > 1 && j < i && p.color(i - 1, j, k) < c) return false;
        if (i < n - 1 && k > 1 && p.color(i + 1, j + 1, k - 1) < c) return false;
        if (k > 1 && p.color(i, j, k - 1) < c) return false;
      }
  return true;
}

std::mt19937 rng(424242);

Triangle random_omagog(int n) {
  Triangle t = min_triangle(TriangleFamily::omagog, n);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j) {
      int lo = 0;
      if (j > 1) lo = std::max(lo, t.at(i, j - 1));
      if (i > 1 && j < i) lo = std::max(lo, t.at(i - 1, j));
      std::uniform_int_distribution<int> pick(lo, j);
      t.rows[i - 1][j - 1] = pick(rng);
    }
  require_valid(t);
  return t;
}

Triangle random_ogog(int n) {
  Triangle t = min_triangle(TriangleFamily::ogog, n);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j) {
      int lo = 0, hi = n - i;
      if (j > 1) lo = std::max(lo, t.at(i, j - 1));
      if (i > 1 && j > 1) lo = std::max(lo, t.at(i - 1, j - 1) - 1);
      if (i > 1 && j < i) hi = std::min(hi, t.at(i - 1, j));
      std::uniform_int_distribution<int> pick(lo, hi);
      t.rows[i - 1][j - 1] = pick(rng);
    }
  require_valid(t);
  return t;
}

}  // namespace

TEST_CASE("towers split into white below gray") {
  const Triangle o = tri(TriangleFamily::omagog, 4, {{0}, {0, 1}, {1, 2, 2}});
  const TwoColorPyramid p = to_pyramid(o);
  CHECK(p.color(3, 2, 2) == 1);
  CHECK(p.color(3, 3, 3) == 0);
  CHECK(p.obeys_gravity());
  CHECK(from_pyramid(p) == o);

  CHECK(white_count(to_pyramid(min_triangle(TriangleFamily::omagog, 4))) == 0);
  const auto mx = to_pyramid(max_triangle(TriangleFamily::omagog, 4));
  CHECK(white_count(mx) == mx.cube_count());

  SUBCASE("round trip across every family") {
    for (int n = 1; n <= 4; ++n)
      for (auto f : {TriangleFamily::kagog, TriangleFamily::magog, TriangleFamily::gog,
                     TriangleFamily::omagog, TriangleFamily::ogog})
        enumerate_family(f, n, [&](const Triangle& t) {
          CHECK(from_pyramid(to_pyramid(t)) == t);
          return true;
        });
  }

  SUBCASE("white above gray is refused") {
    TwoColorPyramid bad(TriangleFamily::omagog, 3);
    bad.set_color(2, 2, 2, 1);  // floating cube
    CHECK_THROWS_AS(from_pyramid(bad), GravityError);
  }

  SUBCASE("out-of-domain access is an error") {
    const TwoColorPyramid p3(TriangleFamily::omagog, 3);
    CHECK_THROWS_AS(p3.color(1, 1, 2), DomainError);
    CHECK_THROWS_AS(p3.color(3, 1, 1), DomainError);
  }
}

TEST_CASE("the four-step map and its single affine form") {
  SUBCASE("worked index-4 example") {
    const Triangle in = tri(TriangleFamily::omagog, 4, {{0}, {0, 1}, {1, 2, 2}});
    const Triangle out = tri(TriangleFamily::kagog, 4, {{1}, {0, 1}, {0, 0, 2}});
    CHECK(psi_triangle(in) == out);
    CHECK(psi_inverse_triangle(out) == in);
  }

  SUBCASE("extremes swap under the color flip") {
    for (int n = 2; n <= 5; ++n) {
      CHECK(psi_triangle(min_triangle(TriangleFamily::omagog, n)) ==
            max_triangle(TriangleFamily::kagog, n));
      CHECK(psi_triangle(max_triangle(TriangleFamily::omagog, n)) ==
            min_triangle(TriangleFamily::kagog, n));
    }
  }

  SUBCASE("the composed map equals its documented steps, cube by cube") {
    for (int n = 2; n <= 7; ++n) {
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= i; ++j)
          for (int k = 1; k <= j; ++k) {
            // push north, tip over, reflect
            const int a = i - (j - 1), b = j, c = k;
            const int a2 = n - c, b2 = b, c2 = a;
            const CubeCoord stepped{a2, n - b2, c2};
            const CubeCoord mapped = psi_cube(CubeCoord{i, j, k}, n);
            CHECK(mapped == stepped);
            CHECK(psi_cube_inverse(mapped, n) == CubeCoord{i, j, k});
            // the height-bounded relocation is its own inverse
            const CubeCoord ph = phi_cube(CubeCoord{i, j, k}, n);
            CHECK(phi_cube(ph, n) == CubeCoord{i, j, k});
          }
    }
  }

  SUBCASE("round trips and bijectivity, exhaustively") {
    for (int n = 2; n <= 5; ++n) {
      std::set<std::vector<std::vector<int>>> images;
      int total = 0;
      enumerate_family(TriangleFamily::omagog, n, [&](const Triangle& t) {
        const TwoColorPyramid p = to_pyramid(t);
        const TwoColorPyramid q = psi(p);
        CHECK(kagog_pyramid_ok(q));
        CHECK(psi_inverse(q) == p);
        CHECK(white_count(p) + white_count(q) == p.cube_count());
        images.insert(from_pyramid(q).rows);
        ++total;
        return true;
      });
      int kagogs = 0;
      enumerate_family(TriangleFamily::kagog, n, [&](const Triangle& t) {
        CHECK(images.count(t.rows) == 1);
        ++kagogs;
        return true;
      });
      CHECK(static_cast<int>(images.size()) == total);
      CHECK(kagogs == total);
    }
  }

  SUBCASE("random large instances keep the image inequalities") {
    for (int n : {6, 7})
      for (int round = 0; round < 200; ++round) {
        const Triangle t = random_omagog(n);
        const TwoColorPyramid q = psi(to_pyramid(t));
        CHECK(kagog_pyramid_ok(q));
        CHECK(psi_inverse_triangle(psi_triangle(t)) == t);
      }
  }
}

TEST_CASE("the color-flip involution on height-bounded pyramids") {
  SUBCASE("worked index-4 example") {
    const Triangle in = tri(TriangleFamily::ogog, 4, {{2}, {0, 2}, {0, 0, 1}});
    const Triangle out = tri(TriangleFamily::ogog, 4, {{2}, {1, 1}, {0, 0, 1}});
    CHECK(phi_triangle(in) == out);
    CHECK(phi_triangle(out) == in);
  }

  SUBCASE("a single cube flips color, so the smallest pyramid is not fixed") {
    const Triangle z = min_triangle(TriangleFamily::ogog, 2);
    CHECK(phi_triangle(z) == max_triangle(TriangleFamily::ogog, 2));
  }

  SUBCASE("involution over every index up to 5") {
    for (int n = 2; n <= 5; ++n)
      enumerate_family(TriangleFamily::ogog, n, [&](const Triangle& t) {
        const TwoColorPyramid p = to_pyramid(t);
        const TwoColorPyramid q = phi(p);
        CHECK(ogog_pyramid_ok(q));
        CHECK(phi(q) == p);
        CHECK(white_count(p) + white_count(q) == p.cube_count());
        return true;
      });
  }

  SUBCASE("random large instances") {
    for (int n : {6, 7})
      for (int round = 0; round < 200; ++round) {
        const Triangle t = random_ogog(n);
        const TwoColorPyramid q = phi(to_pyramid(t));
        CHECK(ogog_pyramid_ok(q));
        CHECK(phi_triangle(phi_triangle(t)) == t);
      }
  }
}

TEST_CASE("layer rendering") {
  SUBCASE("all-gray pyramid draws dots only") {
    const auto p = to_pyramid(min_triangle(TriangleFamily::omagog, 3));
    CHECK(render_layers(p) == ".\n..\n\n .\n");
  }

  SUBCASE("worked example layers") {
    const auto p = to_pyramid(tri(TriangleFamily::omagog, 4, {{0}, {0, 1}, {1, 2, 2}}));
    CHECK(render_layers(p) ==
          ".\n"
          ".#\n"
          "###\n"
          "\n"
          " .\n"
          " ##\n"
          "\n"
          "  .\n");
  }

  SUBCASE("the empty pyramid renders nothing") {
    CHECK(render_layers(to_pyramid(min_triangle(TriangleFamily::omagog, 1))).empty());
  }
}
