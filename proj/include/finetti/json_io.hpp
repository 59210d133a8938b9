#pragma once

#include <json.hpp>

#include "finetti/asm_bridge.hpp"
#include "finetti/catalan.hpp"
#include "finetti/definetti.hpp"
#include "finetti/poset.hpp"
#include "finetti/pyramid.hpp"
#include "finetti/triangle.hpp"

namespace finetti {

using Json = nlohmann::json;

// Poset JSON carries the Hasse covers; parsing rebuilds the closure. The
// optional "kind" tag marks the construction of a two-level poset.
Json poset_to_json(const Poset& p);
Json poset_to_json(const DeFinettiPoset& p);
Poset poset_from_json(const Json& j);
DeFinettiPoset definetti_poset_from_json(const Json& j);

Json triangle_to_json(const Triangle& t);
Triangle triangle_from_json(const Json& j);  // validates, names the violated axiom

Json pyramid_to_json(const TwoColorPyramid& p);  // cubes sorted by (i,j,k)
TwoColorPyramid pyramid_from_json(const Json& j);

Json asm_to_json(const AsmMatrix& a);
AsmMatrix asm_from_json(const Json& j);

Json tableau_to_json(const ShiftedTableau& t);
ShiftedTableau tableau_from_json(const Json& j);

Json sequence_to_json(const MonotoneSequence& s);
MonotoneSequence sequence_from_json(const Json& j);

Json coin_to_json(const CoinPyramid& c);
CoinPyramid coin_from_json(const Json& j);

// A total order of subsets, e.g. a linear extension: {"n": .., "order": [[..]..]}.
Json order_to_json(int n, const std::vector<SubsetElement>& order);
std::pair<int, std::vector<SubsetElement>> order_from_json(const Json& j);

}  // namespace finetti
