#pragma once

// Reidemeister rewrite engine on diagram codes.
//
// Arrow-diagram moves AD1/AD2/AD3 act on arrow codes, the flat moves I/II/III
// on OCD codes.  Virtual moves are identities at code level and have no
// representation here.  Removal instances are found by exact pattern matching
// on cyclically adjacent endpoint pairs:
//   AD1: a chord with adjacent endpoints;
//   AD2: adjacent base pair with opposite signs plus the adjacent tip pair,
//        both tip orders allowed;
//   AD3: three adjacent pairs matching one of the subcode forms
//        A-u B-u .. C+o A+o .. C-u B+o   ->   B-u A-u .. A+o C+o .. B+o C-u
//        (and the one-negative-crossing variant), applied by swapping the
//        two endpoints on each arc; the arcs may sit anywhere in the code.
// The arrow flip (reversing one arrow while negating both endpoint signs)
// preserves the bracket but is not a Reidemeister move.

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "codes.hpp"

namespace vknot {

enum class MoveKind : unsigned char {
  ad1_add,
  ad1_remove,
  ad2_add,
  ad2_remove,
  ad3,
  flip,
  flat1_add,
  flat1_remove,
  flat2_add,
  flat2_remove,
  flat3,
};

inline const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::ad1_add: return "AD1-add";
    case MoveKind::ad1_remove: return "AD1-remove";
    case MoveKind::ad2_add: return "AD2-add";
    case MoveKind::ad2_remove: return "AD2-remove";
    case MoveKind::ad3: return "AD3";
    case MoveKind::flip: return "FLIP";
    case MoveKind::flat1_add: return "FLAT1-add";
    case MoveKind::flat1_remove: return "FLAT1-remove";
    case MoveKind::flat2_add: return "FLAT2-add";
    case MoveKind::flat2_remove: return "FLAT2-remove";
    case MoveKind::flat3: return "FLAT3";
  }
  return "?";
}

inline std::optional<MoveKind> move_kind_from_name(const std::string& s) {
  for (int k = 0; k <= static_cast<int>(MoveKind::flat3); ++k)
    if (s == move_kind_name(static_cast<MoveKind>(k))) return static_cast<MoveKind>(k);
  return std::nullopt;
}

class move_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A located, reversible rewrite.  For removals and AD3, `sites` holds the
// endpoint positions the move touches; for additions it holds insertion gaps
// (component, index) with index in [0, component length].
struct MoveInstance {
  MoveKind kind{};
  std::vector<std::string> chords;
  std::vector<Pos> sites;
  int sign = 0;     // epsilon for AD1/AD2/FLAT1/FLAT2 additions
  int variant = 0;  // tip order for AD2/FLAT2, base-first flag for AD1, pattern id for AD3

  friend bool operator==(const MoveInstance& a, const MoveInstance& b) {
    return a.kind == b.kind && a.chords == b.chords && a.sites == b.sites && a.sign == b.sign &&
           a.variant == b.variant;
  }
};

namespace detail {

// Cyclically adjacent ordered endpoint pairs (p, next(p)) per component.
inline std::vector<std::array<Pos, 2>> adjacent_pairs(const Diagram& d) {
  std::vector<std::array<Pos, 2>> out;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const int len = static_cast<int>(d.components[c].size());
    if (len < 2) continue;
    for (int i = 0; i < len; ++i) out.push_back({Pos{c, i}, Pos{c, (i + 1) % len}});
  }
  return out;
}

inline std::vector<Pos> insertion_gaps(const Diagram& d) {
  std::vector<Pos> out;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const int len = static_cast<int>(d.components[c].size());
    for (int i = 0; i < std::max(len, 1); ++i) out.push_back({c, i});
  }
  return out;
}

inline std::string fresh_chord_name(const Diagram& d, int& counter) {
  std::set<std::string> used;
  for (const auto& comp : d.components)
    for (const auto& t : comp) used.insert(t.chord);
  std::string name;
  do
    name = fresh_name(counter++);
  while (used.count(name));
  return name;
}

// --- triple patterns for AD3 / FLAT3 -------------------------------------

struct EndSpec {
  int var;  // 0 = a, 1 = b, 2 = c
  int sign;
  Role role;
};
using PairSpec = std::array<EndSpec, 2>;
using TriPattern = std::array<PairSpec, 3>;

// The two subcode forms of the all-positive AD3 and the one-negative figure
// variant, each with its swapped right-hand side (the move is an involution).
inline const std::vector<TriPattern>& ad3_patterns() {
  static const std::vector<TriPattern> pats = {
      // V1 lhs: (A-u B-u) (C+o A+o) (C-u B+o)
      {{{{{0, -1, Role::tip}, {1, -1, Role::tip}}},
        {{{2, +1, Role::base}, {0, +1, Role::base}}},
        {{{2, -1, Role::tip}, {1, +1, Role::base}}}}},
      // V1 rhs: (B-u A-u) (A+o C+o) (B+o C-u)
      {{{{{1, -1, Role::tip}, {0, -1, Role::tip}}},
        {{{0, +1, Role::base}, {2, +1, Role::base}}},
        {{{1, +1, Role::base}, {2, -1, Role::tip}}}}},
      // V2 lhs: (C-u A+u) (B-u A-o) (C+o B+o)
      {{{{{2, -1, Role::tip}, {0, +1, Role::tip}}},
        {{{1, -1, Role::tip}, {0, -1, Role::base}}},
        {{{2, +1, Role::base}, {1, +1, Role::base}}}}},
      // V2 rhs: (A+u C-u) (A-o B-u) (B+o C+o)
      {{{{{0, +1, Role::tip}, {2, -1, Role::tip}}},
        {{{0, -1, Role::base}, {1, -1, Role::tip}}},
        {{{1, +1, Role::base}, {2, +1, Role::base}}}}},
  };
  return pats;
}

inline const std::vector<TriPattern>& flat3_patterns() {
  static const std::vector<TriPattern> pats = {
      // lhs: (A- B-) (C+ A+) (C- B+)
      {{{{{0, -1, Role::none}, {1, -1, Role::none}}},
        {{{2, +1, Role::none}, {0, +1, Role::none}}},
        {{{2, -1, Role::none}, {1, +1, Role::none}}}}},
      // rhs: (B- A-) (A+ C+) (B+ C-)
      {{{{{1, -1, Role::none}, {0, -1, Role::none}}},
        {{{0, +1, Role::none}, {2, +1, Role::none}}},
        {{{1, +1, Role::none}, {2, -1, Role::none}}}}},
  };
  return pats;
}

// Try to bind three candidate adjacent pairs (in the given order) to a
// pattern; returns the chord names bound to (a, b, c) on success.
inline bool bind_pattern(const Diagram& d, const TriPattern& pat,
                         const std::array<std::array<Pos, 2>, 3>& cand,
                         std::array<std::string, 3>& names) {
  names = {"", "", ""};
  for (int pi = 0; pi < 3; ++pi)
    for (int e = 0; e < 2; ++e) {
      const EndSpec& spec = pat[pi][e];
      const Token& tok = d.at(cand[pi][e]);
      if (tok.sign != spec.sign || tok.role != spec.role) return false;
      std::string& bound = names[spec.var];
      if (bound.empty())
        bound = tok.chord;
      else if (bound != tok.chord)
        return false;
    }
  return names[0] != names[1] && names[0] != names[2] && names[1] != names[2];
}

inline std::vector<Pos> sorted_positions(std::vector<Pos> ps) {
  std::sort(ps.begin(), ps.end());
  return ps;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

inline std::vector<MoveInstance> enumerate_moves(const Diagram& d, const std::set<MoveKind>& kinds) {
  std::vector<MoveInstance> out;
  const bool arrow = d.kind == CodeKind::arrow;
  const auto pairs = detail::adjacent_pairs(d);

  auto want = [&](MoveKind k) { return kinds.count(k) > 0; };

  // single-chord removals (AD1 / FLAT1)
  const MoveKind k1rm = arrow ? MoveKind::ad1_remove : MoveKind::flat1_remove;
  if (want(k1rm)) {
    std::set<std::string> seen;
    for (const auto& pr : pairs) {
      const Token& t0 = d.at(pr[0]);
      const Token& t1 = d.at(pr[1]);
      if (t0.chord != t1.chord) continue;
      if (!seen.insert(t0.chord).second) continue;
      MoveInstance m;
      m.kind = k1rm;
      m.chords = {t0.chord};
      m.sites = {pr[0], pr[1]};
      out.push_back(std::move(m));
    }
  }

  // single-chord additions
  const MoveKind k1add = arrow ? MoveKind::ad1_add : MoveKind::flat1_add;
  if (want(k1add)) {
    for (const Pos& gap : detail::insertion_gaps(d))
      for (int eps : {+1, -1})
        for (int base_first = arrow ? 1 : 0; base_first >= 0; --base_first) {
          MoveInstance m;
          m.kind = k1add;
          m.sites = {gap};
          m.sign = eps;
          m.variant = base_first;
          out.push_back(std::move(m));
          if (!arrow) break;  // flat kinks have no role order; eps covers both sign orders
        }
  }

  // two-chord removals (AD2 / FLAT2)
  const MoveKind k2rm = arrow ? MoveKind::ad2_remove : MoveKind::flat2_remove;
  if (want(k2rm)) {
    std::set<std::vector<Pos>> seen;
    for (const auto& first : pairs) {
      const Token& a0 = d.at(first[0]);
      const Token& b0 = d.at(first[1]);
      if (a0.chord == b0.chord) continue;
      if (a0.sign + b0.sign != 0) continue;
      if (arrow && (a0.role != Role::base || b0.role != Role::base)) continue;
      for (const auto& second : pairs) {
        const Token& x = d.at(second[0]);
        const Token& y = d.at(second[1]);
        bool complement = (x.chord == a0.chord && y.chord == b0.chord) ||
                          (x.chord == b0.chord && y.chord == a0.chord);
        if (!complement) continue;
        if (arrow && (x.role != Role::tip || y.role != Role::tip)) continue;
        std::vector<Pos> all = {first[0], first[1], second[0], second[1]};
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end()) continue;  // overlap
        if (!seen.insert(all).second) continue;
        MoveInstance m;
        m.kind = k2rm;
        m.chords = {a0.chord, b0.chord};
        m.sites = {first[0], first[1], second[0], second[1]};
        out.push_back(std::move(m));
      }
    }
  }

  // two-chord additions
  const MoveKind k2add = arrow ? MoveKind::ad2_add : MoveKind::flat2_add;
  if (want(k2add)) {
    const auto gaps = detail::insertion_gaps(d);
    for (const Pos& g1 : gaps)
      for (const Pos& g2 : gaps)
        for (int eps : {+1, -1})
          for (int variant : {0, 1}) {
            MoveInstance m;
            m.kind = k2add;
            m.sites = {g1, g2};
            m.sign = eps;
            m.variant = variant;
            out.push_back(std::move(m));
          }
  }

  // triple moves (AD3 / FLAT3)
  const MoveKind k3 = arrow ? MoveKind::ad3 : MoveKind::flat3;
  if (want(k3)) {
    const auto& pats = arrow ? detail::ad3_patterns() : detail::flat3_patterns();
    std::set<std::vector<Pos>> seen;
    const int np = static_cast<int>(pairs.size());
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < np; ++j)
        for (int k = 0; k < np; ++k) {
          if (i == j || j == k || i == k) continue;
          std::vector<Pos> all = {pairs[i][0], pairs[i][1], pairs[j][0],
                                  pairs[j][1], pairs[k][0], pairs[k][1]};
          std::sort(all.begin(), all.end());
          if (std::adjacent_find(all.begin(), all.end()) != all.end()) continue;
          std::array<std::array<Pos, 2>, 3> cand = {pairs[i], pairs[j], pairs[k]};
          for (int pi = 0; pi < static_cast<int>(pats.size()); ++pi) {
            std::array<std::string, 3> names;
            if (!detail::bind_pattern(d, pats[pi], cand, names)) continue;
            if (!seen.insert(all).second) break;
            MoveInstance m;
            m.kind = k3;
            m.chords = {names[0], names[1], names[2]};
            m.sites = {cand[0][0], cand[0][1], cand[1][0], cand[1][1], cand[2][0], cand[2][1]};
            m.variant = pi;
            out.push_back(std::move(m));
            break;
          }
        }
  }

  // arrow flips
  if (arrow && want(MoveKind::flip)) {
    for (const auto& ch : chords_of(d)) {
      MoveInstance m;
      m.kind = MoveKind::flip;
      m.chords = {ch.name};
      out.push_back(std::move(m));
    }
  }

  return out;
}

// ---------------------------------------------------------------------------
// Application
// ---------------------------------------------------------------------------

namespace detail {

inline void erase_positions(Diagram& d, std::vector<Pos> ps) {
  std::sort(ps.begin(), ps.end());
  for (auto it = ps.rbegin(); it != ps.rend(); ++it)
    d.components[it->component].erase(d.components[it->component].begin() + it->index);
}

inline void insert_block(Diagram& d, Pos gap, std::vector<Token> toks) {
  auto& comp = d.components[gap.component];
  comp.insert(comp.begin() + gap.index, toks.begin(), toks.end());
}

}  // namespace detail

namespace detail {

inline Diagram apply_unchecked(const Diagram& d, const MoveInstance& m) {
  Diagram out = d;
  int name_counter = 0;
  switch (m.kind) {
    case MoveKind::ad1_remove:
    case MoveKind::flat1_remove:
      detail::erase_positions(out, m.sites);
      break;
    case MoveKind::ad2_remove:
    case MoveKind::flat2_remove:
      detail::erase_positions(out, m.sites);
      break;
    case MoveKind::ad1_add:
    case MoveKind::flat1_add: {
      const std::string name = detail::fresh_chord_name(out, name_counter);
      const bool arrow = m.kind == MoveKind::ad1_add;
      Token first{name, m.sign, arrow ? Role::base : Role::none};
      Token second{name, -m.sign, arrow ? Role::tip : Role::none};
      if (arrow && m.variant == 0) std::swap(first, second);  // tip-first variant
      detail::insert_block(out, m.sites[0], {first, second});
      break;
    }
    case MoveKind::ad2_add:
    case MoveKind::flat2_add: {
      const bool arrow = m.kind == MoveKind::ad2_add;
      const std::string na = detail::fresh_chord_name(out, name_counter);
      const std::string nb = detail::fresh_chord_name(out, name_counter);
      // bases (A^-eps o, B^eps o); tips (A^eps u, B^-eps u), order per variant
      std::vector<Token> bases = {{na, -m.sign, arrow ? Role::base : Role::none},
                                  {nb, m.sign, arrow ? Role::base : Role::none}};
      std::vector<Token> tips = {{na, m.sign, arrow ? Role::tip : Role::none},
                                 {nb, -m.sign, arrow ? Role::tip : Role::none}};
      if (m.variant == 1) std::swap(tips[0], tips[1]);
      const Pos g1 = m.sites[0], g2 = m.sites[1];
      if (g1.component == g2.component) {
        auto& comp = out.components[g1.component];
        if (g1.index == g2.index) {
          std::vector<Token> block = bases;
          block.insert(block.end(), tips.begin(), tips.end());
          comp.insert(comp.begin() + g1.index, block.begin(), block.end());
        } else if (g1.index < g2.index) {
          comp.insert(comp.begin() + g2.index, tips.begin(), tips.end());
          comp.insert(comp.begin() + g1.index, bases.begin(), bases.end());
        } else {
          comp.insert(comp.begin() + g1.index, bases.begin(), bases.end());
          comp.insert(comp.begin() + g2.index, tips.begin(), tips.end());
        }
      } else {
        detail::insert_block(out, g1, bases);
        detail::insert_block(out, g2, tips);
      }
      break;
    }
    case MoveKind::ad3:
    case MoveKind::flat3:
      for (int p = 0; p < 3; ++p)
        std::swap(out.at(m.sites[2 * p]), out.at(m.sites[2 * p + 1]));
      break;
    case MoveKind::flip: {
      auto ch = find_chord(out, m.chords[0]);
      for (Pos p : {ch->base, ch->tip}) {
        Token& t = out.at(p);
        t.sign = -t.sign;
        t.role = t.role == Role::base ? Role::tip : Role::base;
      }
      break;
    }
  }
  validate(out);
  return out;
}

}  // namespace detail

inline Diagram apply_move(const Diagram& d, const MoveInstance& m) {
  const auto candidates = enumerate_moves(d, {m.kind});
  if (std::find(candidates.begin(), candidates.end(), m) == candidates.end())
    throw move_error(std::string("apply_move: inapplicable ") + move_kind_name(m.kind) +
                     " instance");
  return detail::apply_unchecked(d, m);
}

// Reverse one arrow, negating both endpoint signs.  Preserves the crossing
// sign and the bracket; not a Reidemeister move.
inline Diagram jones_flip(const Diagram& d, const std::string& chord) {
  if (d.kind != CodeKind::arrow) throw code_error("jones_flip: needs an arrow diagram");
  if (!find_chord(d, chord)) throw code_error("jones_flip: unknown chord '" + chord + "'");
  MoveInstance m;
  m.kind = MoveKind::flip;
  m.chords = {chord};
  return apply_move(d, m);
}

inline const std::set<MoveKind>& reidemeister_kinds(CodeKind kind) {
  static const std::set<MoveKind> arrow_kinds = {MoveKind::ad1_remove, MoveKind::ad2_remove,
                                                 MoveKind::ad3, MoveKind::ad1_add,
                                                 MoveKind::ad2_add};
  static const std::set<MoveKind> flat_kinds = {MoveKind::flat1_remove, MoveKind::flat2_remove,
                                                MoveKind::flat3, MoveKind::flat1_add,
                                                MoveKind::flat2_add};
  return kind == CodeKind::arrow ? arrow_kinds : flat_kinds;
}

// ---------------------------------------------------------------------------
// Bounded breadth-first reduction search over canonical forms.
// ---------------------------------------------------------------------------

enum class ReduceStatus {
  reduced,      // found at least one strictly smaller diagram
  irreducible,  // explored everything within the chord bound, nothing smaller
  exhausted,    // step budget ran out before any reduction was found
};

struct ReduceResult {
  ReduceStatus status = ReduceStatus::irreducible;
  Diagram diagram;                 // the most reduced diagram reached
  std::vector<MoveInstance> path;  // certified move path from the input
  long long steps_used = 0;
};

inline ReduceResult reduce_search(const Diagram& start, int max_chords, long long max_steps) {
  if (max_chords <= 0 || max_steps <= 0)
    throw std::invalid_argument("reduce_search: budgets must be positive");
  const auto& kinds = reidemeister_kinds(start.kind);

  ReduceResult result;
  result.diagram = canonicalize(start);
  long long steps = 0;
  bool reduced_once = false;

  while (true) {
    // one BFS round looking for any diagram with fewer chords than `base`
    const Diagram base = result.diagram;
    const int base_chords = base.chord_count();
    if (base_chords == 0) {
      result.status = reduced_once ? ReduceStatus::reduced : ReduceStatus::irreducible;
      break;
    }
    std::map<std::string, std::pair<std::string, MoveInstance>> parent;
    std::deque<Diagram> frontier;
    std::set<std::string> seen;
    const std::string base_key = canonical_form(base);
    seen.insert(base_key);
    frontier.push_back(base);
    bool found = false;
    bool out_of_steps = false;
    Diagram found_diagram;
    std::string found_key;

    while (!frontier.empty() && !found) {
      Diagram cur = frontier.front();
      frontier.pop_front();
      const std::string cur_key = canonical_form(cur);
      for (const MoveInstance& m : enumerate_moves(cur, kinds)) {
        if (++steps > max_steps) {
          out_of_steps = true;
          break;
        }
        Diagram next = detail::apply_unchecked(cur, m);
        if (next.chord_count() > max_chords) continue;
        std::string key = canonical_form(next);
        if (!seen.insert(key).second) continue;
        parent.emplace(key, std::make_pair(cur_key, m));
        if (next.chord_count() < base_chords) {
          found = true;
          found_diagram = next;
          found_key = key;
          break;
        }
        frontier.push_back(std::move(next));
      }
      if (out_of_steps) break;
    }

    if (found) {
      // stitch the move path for this round onto the overall path
      std::vector<MoveInstance> round;
      std::string key = found_key;
      while (key != base_key) {
        auto it = parent.find(key);
        round.push_back(it->second.second);
        key = it->second.first;
      }
      // The path is recorded against this round's BFS representatives; it
      // certifies the reduction when replayed from `base`.
      std::reverse(round.begin(), round.end());
      result.path.insert(result.path.end(), round.begin(), round.end());
      result.diagram = canonicalize(found_diagram);
      reduced_once = true;
      if (result.diagram.chord_count() == 0) {
        result.status = ReduceStatus::reduced;
        break;
      }
      continue;
    }
    result.status = reduced_once ? ReduceStatus::reduced
                                 : (out_of_steps ? ReduceStatus::exhausted
                                                 : ReduceStatus::irreducible);
    break;
  }
  result.steps_used = steps;
  return result;
}

}  // namespace vknot
