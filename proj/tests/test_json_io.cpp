#include <doctest.h>

#include "finetti/errors.hpp"
#include "finetti/json_io.hpp"

using namespace finetti;

TEST_CASE("triangle JSON round trip") {
  const Triangle t{TriangleFamily::kagog, 4, {{1}, {0, 1}, {0, 0, 2}}};
  const Json j = triangle_to_json(t);
  CHECK(j["family"] == "kagog");
  CHECK(triangle_from_json(j) == t);
  CHECK(triangle_to_json(t).dump() == j.dump());  // stable bytes

  SUBCASE("axiom violations are reported by name") {
    Json bad = j;
    bad["rows"] = Json::array({Json::array({2}), Json::array({0, 1}), Json::array({0, 0, 2})});
    try {
      triangle_from_json(bad);
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("K2") != std::string::npos);
    }
  }

  SUBCASE("shape problems throw") {
    Json bad = j;
    bad["rows"] = Json::array({Json::array({1})});
    CHECK_THROWS_AS(triangle_from_json(bad), ShapeError);
    bad["family"] = "gogog";
    CHECK_THROWS_AS(triangle_from_json(bad), InvalidArgument);
    Json missing;
    missing["family"] = "kagog";
    CHECK_THROWS_AS(triangle_from_json(missing), ValidationError);
  }
}

TEST_CASE("pyramid JSON lists every cube exactly once") {
  const Triangle t{TriangleFamily::omagog, 4, {{0}, {0, 1}, {1, 2, 2}}};
  const TwoColorPyramid p = to_pyramid(t);
  const Json j = pyramid_to_json(p);
  CHECK(pyramid_from_json(j) == p);

  Json bad = j;
  bad["cubes"].erase(0);
  CHECK_THROWS_AS(pyramid_from_json(bad), ValidationError);

  Json floating = j;
  // recolor a mid-tower cube to break gravity
  for (auto& cube : floating["cubes"])
    if (cube["i"] == 3 && cube["j"] == 3 && cube["k"] == 1) cube["color"] = 0;
  CHECK_THROWS_AS(pyramid_from_json(floating), GravityError);
}

TEST_CASE("matrix JSON") {
  const AsmMatrix a{4, {{0, 0, 1, 0}, {1, 0, -1, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}};
  CHECK(asm_from_json(asm_to_json(a)) == a);
  Json bad = asm_to_json(a);
  bad["rows"][0][0] = 1;
  CHECK_THROWS_AS(asm_from_json(bad), ValidationError);
}

TEST_CASE("poset JSON carries covers and kind") {
  const DeFinettiPoset f = build_fn2(4);
  const Json j = poset_to_json(f);
  CHECK(j["kind"] == "fn2");
  CHECK(j["covers"].size() == 13);
  const DeFinettiPoset back = definetti_poset_from_json(j);
  CHECK(back.base.leq == f.base.leq);
  CHECK(back.kind == DeFinettiKind::fn2);

  const auto members = collect_fn21(4, Fn21Mode::via_kagog);
  for (const auto& m : members) {
    const Json mj = poset_to_json(m);
    CHECK(mj["kind"] == "fn21-member");
    CHECK(definetti_poset_from_json(mj) == m);
  }

  Json bad = j;
  bad["covers"].push_back(Json::array({0, 99}));
  CHECK_THROWS_AS(poset_from_json(bad), InvalidArgument);
}

TEST_CASE("tableau, sequence, coin and order JSON") {
  const ShiftedTableau t{4, {{1, 2, 3, 5}, {4, 6, 8}, {7, 9}, {10}}};
  CHECK(tableau_from_json(tableau_to_json(t)) == t);
  Json bad = tableau_to_json(t);
  bad["rows"][0][0] = 2;
  CHECK_THROWS_AS(tableau_from_json(bad), ValidationError);

  const MonotoneSequence s{3, {0, 1, 2}};
  CHECK(sequence_from_json(sequence_to_json(s)) == s);
  CHECK_THROWS_AS(sequence_from_json(Json{{"n", 3}, {"values", {1, 0, 0}}}), ValidationError);

  const CoinPyramid c{3, {{1, 2, 3}, {1, 2}, {1}}};
  CHECK(coin_from_json(coin_to_json(c)) == c);
  CHECK_THROWS_AS(coin_from_json(Json{{"n", 3}, {"rows", {{1, 2}}}}), ValidationError);

  const std::vector<SubsetElement> order = {SubsetElement::singleton(1),
                                            SubsetElement::doubleton(2, 1)};
  const Json oj = order_to_json(3, order);
  const auto [n, back] = order_from_json(oj);
  CHECK(n == 3);
  CHECK(back == order);
}
