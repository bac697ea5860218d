#pragma once

// Invariants of flat virtual diagrams: the parity of a link (inter-component
// crossings mod 2) and the flat biquandle, reduced to one relation
// (s^e - 1) g = 0 per component, where e is the component's net exponent.
// At a flat crossing the strand through the positive-signed endpoint picks up
// s, the other strand s^-1; this convention reproduces the relations
// s^2 a = a, s^-2 b = b of the worked two-component example.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "codes.hpp"
#include "laurent.hpp"

namespace vknot {

class flat_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int parity(const Diagram& d) {
  if (d.components.size() < 2) throw flat_error("parity: needs a diagram with >= 2 components");
  int count = 0;
  for (const auto& ch : chords_of(d))
    if (ch.plus.component != ch.minus.component) ++count;
  return count % 2;
}

struct FlatRelation {
  int component = 0;
  std::string generator;  // "a", "b", ... by component order
  int exponent = 0;       // relation (s^exponent - 1) * generator = 0

  // the relation's coefficient as a Laurent polynomial in s
  Laurent1 coefficient() const {
    Laurent1 c = Laurent1::term(exponent, 1);
    c.add_term(0, -1);
    return c;
  }
};

inline std::vector<FlatRelation> flat_relations(const Diagram& d) {
  std::vector<FlatRelation> rels(d.components.size());
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    rels[c].component = c;
    rels[c].generator = detail::fresh_name(c);
    for (auto& ch : rels[c].generator) ch = static_cast<char>(std::tolower(ch));
  }
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c)
    for (const auto& t : d.components[c]) rels[c].exponent += t.sign;
  return rels;
}

inline bool is_flat_detected(const Diagram& d) {
  if (d.components.size() < 2)
    throw flat_error("is_flat_detected: needs a diagram with >= 2 components");
  for (const auto& r : flat_relations(d))
    if (r.exponent != 0) return true;
  return false;
}

}  // namespace vknot
