#pragma once

// JSON schemas for the machine-readable outputs: polynomials as sorted
// (exponent, coefficient) lists, quarter exponents as {num, den: 4},
// filamentation witnesses, flat relations, and move paths.

#include <json.hpp>

#include "codes.hpp"
#include "filamentation.hpp"
#include "flat.hpp"
#include "laurent.hpp"
#include "moves.hpp"

namespace vknot {

using json = nlohmann::json;

inline json to_json(const Laurent1& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, c});
  return terms;
}

inline json to_json(const QuarterLaurent& p) {
  json terms = json::array();
  for (const auto& [q, c] : p.quarter_terms().terms())
    terms.push_back({{{"num", q}, {"den", 4}}, c});
  return terms;
}

inline json to_json(const LaurentST& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.s, e.t, c});
  return terms;
}

inline json to_json(const Pos& p) { return {{"component", p.component}, {"index", p.index}}; }

inline json to_json(const MoveInstance& m) {
  json site = json::array();
  for (const Pos& p : m.sites) site.push_back(to_json(p));
  return {{"kind", move_kind_name(m.kind)},
          {"site", site},
          {"params", {{"chords", m.chords}, {"sign", m.sign}, {"variant", m.variant}}}};
}

inline json to_json(const std::vector<MoveInstance>& path) {
  json out = json::array();
  for (const auto& m : path) out.push_back(to_json(m));
  return out;
}

inline json filamentation_witness_json(const Diagram& d, const Pairing& p) {
  json pairs = json::array();
  for (const auto& pair : p)
    pairs.push_back({{"pair", {pair.first, pair.second}},
                     {"intersection_number", pair_intersection_number(d, p, pair)}});
  return pairs;
}

inline json to_json(const FlatRelation& r) {
  return {{"generator", r.generator}, {"exponent", r.exponent}};
}

inline json to_json(const std::vector<FlatRelation>& rels) {
  json out = json::array();
  for (const auto& r : rels) out.push_back(to_json(r));
  return out;
}

}  // namespace vknot
