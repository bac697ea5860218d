#pragma once

// Filamentations on single-component chord diagrams.  A pairing is an
// involution on the chords (self-pairs allowed); each pair carries one or two
// filaments running from a negative endpoint to a positive one.  Filaments
// are realized as straight chords of the disk, so the oriented intersection
// number of two filaments depends only on the cyclic order of their four
// endpoints and their directions: interleaved endpoints give +1 when the
// second filament crosses the first from right to left, -1 the other way,
// and 0 when the endpoint pairs do not interleave.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "codes.hpp"

namespace vknot {

class filament_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

using ChordPair = std::pair<std::string, std::string>;  // names, first <= second
using Pairing = std::vector<ChordPair>;                 // sorted list of pairs

// Oriented filament between endpoint positions of a single-component diagram.
struct Filament {
  int from = 0;  // index of the negative endpoint
  int to = 0;    // index of the positive endpoint
  int pair_id = 0;
};

namespace detail {

inline void require_single_component(const Diagram& d, const char* op) {
  if (d.components.size() != 1)
    throw filament_error(std::string(op) + ": diagram must have a single component");
}

// true when exactly one of {b1, b2} lies on the arc strictly between a1 and a2
inline bool interleaved(int a1, int a2, int b1, int b2, int m) {
  auto between = [&](int x) {
    // walking forward from a1, is x reached strictly before a2?
    int da = (a2 - a1 + m) % m;
    int dx = (x - a1 + m) % m;
    return dx > 0 && dx < da;
  };
  return between(b1) != between(b2);
}

}  // namespace detail

// Oriented intersection number of two straight-chord filaments on a circle
// with m endpoint positions.  +1 iff the counterclockwise cyclic order is
// (f.from, g.from, f.to, g.to).
inline int oriented_intersection(const Filament& f, const Filament& g, int m) {
  if (f.from == g.from || f.from == g.to || f.to == g.from || f.to == g.to)
    throw filament_error("oriented_intersection: filaments share an endpoint");
  if (!detail::interleaved(f.from, f.to, g.from, g.to, m)) return 0;
  const int dg_from = (g.from - f.from + m) % m;
  const int df_to = (f.to - f.from + m) % m;
  return dg_from < df_to ? +1 : -1;
}

// All filaments of a pairing: one per self-pair (X- -> X+), two per mixed
// pair (X- -> Y+ and Y- -> X+).
inline std::vector<Filament> filaments_of(const Diagram& d, const Pairing& p) {
  detail::require_single_component(d, "filaments_of");
  std::map<std::string, std::pair<int, int>> ends;  // chord -> (minus index, plus index)
  const auto& comp = d.components[0];
  for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
    auto& e = ends[comp[i].chord];
    (comp[i].sign < 0 ? e.first : e.second) = i;
  }
  std::vector<Filament> fs;
  for (int pid = 0; pid < static_cast<int>(p.size()); ++pid) {
    const auto& [x, y] = p[pid];
    auto ix = ends.find(x), iy = ends.find(y);
    if (ix == ends.end() || iy == ends.end())
      throw filament_error("pairing names a chord missing from the diagram");
    if (x == y) {
      fs.push_back({ix->second.first, ix->second.second, pid});
    } else {
      fs.push_back({ix->second.first, iy->second.second, pid});
      fs.push_back({iy->second.first, ix->second.second, pid});
    }
  }
  return fs;
}

inline void validate_pairing(const Diagram& d, const Pairing& p) {
  detail::require_single_component(d, "validate_pairing");
  std::map<std::string, int> count;
  for (const auto& ch : chords_of(d)) count[ch.name] = 0;
  for (const auto& [x, y] : p) {
    auto ix = count.find(x), iy = count.find(y);
    if (ix == count.end() || iy == count.end())
      throw filament_error("pairing names an unknown chord");
    ix->second += 1;
    if (x != y) iy->second += 1;
  }
  for (const auto& [name, c] : count)
    if (c != 1) throw filament_error("chord '" + name + "' must occur in exactly one pair");
}

// All involutions of the chord set, ordered lexicographically on the sorted
// pair-list representation (all-self-pairs first).
inline std::vector<Pairing> enumerate_pairings(const Diagram& d) {
  detail::require_single_component(d, "enumerate_pairings");
  std::vector<std::string> names;
  for (const auto& ch : chords_of(d)) names.push_back(ch.name);
  std::sort(names.begin(), names.end());
  std::vector<Pairing> out;
  Pairing current;
  std::vector<bool> used(names.size(), false);
  auto rec = [&](auto&& self, std::size_t lo) -> void {
    while (lo < names.size() && used[lo]) ++lo;
    if (lo == names.size()) {
      out.push_back(current);
      return;
    }
    used[lo] = true;
    current.push_back({names[lo], names[lo]});
    self(self, lo + 1);
    current.pop_back();
    for (std::size_t j = lo + 1; j < names.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      current.push_back({names[lo], names[j]});
      self(self, lo + 1);
      current.pop_back();
      used[j] = false;
    }
    used[lo] = false;
  };
  rec(rec, 0);
  return out;
}

// Intersection number of one pair: both of its filaments summed against all
// filaments of all other pairs (duals and self-intersections excluded).
inline int pair_intersection_number(const Diagram& d, const Pairing& p, const ChordPair& pair) {
  validate_pairing(d, p);
  int pid = -1;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] == pair || (p[i].first == pair.second && p[i].second == pair.first)) pid = i;
  if (pid < 0) throw filament_error("pair_intersection_number: pair not in pairing");
  const auto fs = filaments_of(d, p);
  const int m = d.total_endpoints();
  int total = 0;
  for (const auto& beta : fs) {
    if (beta.pair_id != pid) continue;
    for (const auto& gamma : fs) {
      if (gamma.pair_id == pid) continue;
      total += oriented_intersection(beta, gamma, m);
    }
  }
  return total;
}

inline bool is_filamentation(const Diagram& d, const Pairing& p) {
  validate_pairing(d, p);
  const auto fs = filaments_of(d, p);
  const int m = d.total_endpoints();
  std::vector<int> number(p.size(), 0);
  for (const auto& beta : fs)
    for (const auto& gamma : fs) {
      if (beta.pair_id == gamma.pair_id) continue;
      number[beta.pair_id] += oriented_intersection(beta, gamma, m);
    }
  for (int v : number)
    if (v != 0) return false;
  return true;
}

// First admissible pairing in enumeration order, if any.
inline std::optional<Pairing> find_filamentation(const Diagram& d) {
  detail::require_single_component(d, "find_filamentation");
  for (const auto& p : enumerate_pairings(d))
    if (is_filamentation(d, p)) return p;
  return std::nullopt;
}

}  // namespace vknot
