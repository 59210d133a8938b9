#include "finetti/subset_element.hpp"

namespace finetti {

std::string SubsetElement::label() const {
  if (members.empty()) return "∅";
  if (members.back() <= 9) {
    std::string s;
    for (auto it = members.rbegin(); it != members.rend(); ++it) s += static_cast<char>('0' + *it);
    return s;
  }
  std::string s = "{";
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    if (s.size() > 1) s += ',';
    s += std::to_string(*it);
  }
  s += '}';
  return s;
}

}  // namespace finetti
