#include "finetti/json_io.hpp"

#include <set>
#include <tuple>

#include "finetti/errors.hpp"

namespace finetti {

namespace {

int get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ValidationError(std::string("missing or non-integer field \"") + key + "\"");
  return j[key].get<int>();
}

std::vector<std::vector<int>> get_rows(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw ValidationError(std::string("missing or non-array field \"") + key + "\"");
  std::vector<std::vector<int>> out;
  for (const auto& row : j[key]) {
    if (!row.is_array()) throw ValidationError(std::string(key) + " must be an array of arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ValidationError(std::string(key) + " entries must be integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Json poset_to_json(const Poset& p) {
  Json j;
  j["n"] = p.n;
  Json elems = Json::array();
  for (const auto& e : p.elements) elems.push_back(e.members);
  j["elements"] = std::move(elems);
  Json covers = Json::array();
  for (auto [a, b] : hasse_covers(p).covers) covers.push_back(Json::array({a, b}));
  j["covers"] = std::move(covers);
  return j;
}

Json poset_to_json(const DeFinettiPoset& p) {
  Json j = poset_to_json(p.base);
  j["kind"] = kind_name(p.kind);
  return j;
}

Poset poset_from_json(const Json& j) {
  Poset p;
  p.n = get_int(j, "n");
  for (const auto& mem : get_rows(j, "elements")) p.elements.emplace_back(mem);
  const int m = static_cast<int>(p.elements.size());
  std::vector<std::pair<int, int>> covers;
  if (!j.contains("covers") || !j["covers"].is_array())
    throw ValidationError("missing or non-array field \"covers\"");
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2) throw ValidationError("covers must be [a,b] pairs");
    covers.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  p.leq = relation_from_covers(m, covers);
  if (!is_valid_poset(p))
    throw ValidationError("poset JSON does not describe a valid canonical poset");
  return p;
}

DeFinettiPoset definetti_poset_from_json(const Json& j) {
  DeFinettiPoset p;
  p.base = poset_from_json(j);
  p.n = p.base.n;
  p.kind = j.contains("kind") ? kind_from_name(j["kind"].get<std::string>())
                              : DeFinettiKind::bn2;
  if (p.base.elements != bn2_elements(p.n))
    throw ValidationError("poset elements are not the canonical two-level ground set");
  return p;
}

Json triangle_to_json(const Triangle& t) {
  return Json{{"family", family_name(t.family)}, {"index", t.index}, {"rows", t.rows}};
}

Triangle triangle_from_json(const Json& j) {
  Triangle t;
  if (!j.contains("family") || !j["family"].is_string())
    throw ValidationError("missing or non-string field \"family\"");
  t.family = family_from_name(j["family"].get<std::string>());
  t.index = get_int(j, "index");
  t.rows = get_rows(j, "rows");
  require_valid(t);
  return t;
}

Json pyramid_to_json(const TwoColorPyramid& p) {
  Json cubes = Json::array();
  for (int i = 1; i <= p.row_count(); ++i)
    for (int j = 1; j <= i; ++j)
      for (int k = 1; k <= p.tower_height(i, j); ++k)
        cubes.push_back(Json{{"i", i}, {"j", j}, {"k", k}, {"color", p.color(i, j, k)}});
  return Json{{"family", family_name(p.family())}, {"index", p.index()}, {"cubes", cubes}};
}

TwoColorPyramid pyramid_from_json(const Json& j) {
  if (!j.contains("family") || !j["family"].is_string())
    throw ValidationError("missing or non-string field \"family\"");
  const auto family = family_from_name(j["family"].get<std::string>());
  const int index = get_int(j, "index");
  TwoColorPyramid p(family, index);
  if (!j.contains("cubes") || !j["cubes"].is_array())
    throw ValidationError("missing or non-array field \"cubes\"");
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& c : j["cubes"]) {
    const int i = get_int(c, "i"), jj = get_int(c, "j"), k = get_int(c, "k");
    const int color = get_int(c, "color");
    if (color != 0 && color != 1) throw ValidationError("cube color must be 0 or 1");
    if (!p.in_domain(i, jj, k))
      throw ValidationError("cube (" + std::to_string(i) + "," + std::to_string(jj) + "," +
                            std::to_string(k) + ") outside the family domain");
    if (!seen.emplace(i, jj, k).second)
      throw ValidationError("pyramid JSON lists a cube twice");
    p.set_color(i, jj, k, color);
  }
  if (static_cast<int>(seen.size()) != p.cube_count())
    throw ValidationError("pyramid JSON must list every cube of the domain exactly once");
  // round through the triangle to enforce gravity and the family axioms
  from_pyramid(p);
  return p;
}

Json asm_to_json(const AsmMatrix& a) { return Json{{"n", a.n}, {"rows", a.rows}}; }

AsmMatrix asm_from_json(const Json& j) {
  AsmMatrix a;
  a.n = get_int(j, "n");
  a.rows = get_rows(j, "rows");
  if (!validate_asm(a)) throw ValidationError("matrix is not alternating-sign");
  return a;
}

Json tableau_to_json(const ShiftedTableau& t) { return Json{{"n", t.n}, {"rows", t.rows}}; }

ShiftedTableau tableau_from_json(const Json& j) {
  ShiftedTableau t;
  t.n = get_int(j, "n");
  t.rows = get_rows(j, "rows");
  if (!tableau_valid(t)) throw ValidationError("invalid shifted staircase tableau");
  return t;
}

Json sequence_to_json(const MonotoneSequence& s) { return Json{{"n", s.n}, {"values", s.values}}; }

MonotoneSequence sequence_from_json(const Json& j) {
  MonotoneSequence s;
  s.n = get_int(j, "n");
  if (!j.contains("values") || !j["values"].is_array())
    throw ValidationError("missing or non-array field \"values\"");
  for (const auto& v : j["values"]) s.values.push_back(v.get<int>());
  if (!sequence_valid(s)) throw ValidationError("invalid monotone sequence");
  return s;
}

Json coin_to_json(const CoinPyramid& c) { return Json{{"n", c.n}, {"rows", c.rows}}; }

CoinPyramid coin_from_json(const Json& j) {
  CoinPyramid c;
  c.n = get_int(j, "n");
  c.rows = get_rows(j, "rows");
  if (!coin_pyramid_valid(c)) throw ValidationError("invalid coin pyramid");
  return c;
}

Json order_to_json(int n, const std::vector<SubsetElement>& order) {
  Json arr = Json::array();
  for (const auto& e : order) arr.push_back(e.members);
  return Json{{"n", n}, {"order", arr}};
}

std::pair<int, std::vector<SubsetElement>> order_from_json(const Json& j) {
  const int n = get_int(j, "n");
  std::vector<SubsetElement> order;
  for (const auto& mem : get_rows(j, "order")) {
    SubsetElement e{mem};
    if (!e.well_formed(n)) throw ValidationError("order contains a malformed set");
    order.push_back(std::move(e));
  }
  return {n, order};
}

}  // namespace finetti
