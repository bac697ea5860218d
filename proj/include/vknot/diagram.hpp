#pragma once

// Semantic queries on diagram codes: role erasure, crossing signs, writhe,
// and the genus of the surface the diagram embeds in.  The genus comes from
// face tracing the 4-valent ribbon graph whose vertices are the chords; the
// rotation system at a crossing is fixed by the endpoint signs: at a
// positive-signed endpoint the four ends run counterclockwise as
// (this-in, other-in, this-out, other-out).

#include <numeric>
#include <stdexcept>
#include <vector>

#include "codes.hpp"

namespace vknot {

inline Diagram underlying_ocd(const Diagram& d) {
  Diagram out = d;
  out.kind = CodeKind::ocd;
  for (auto& comp : out.components)
    for (auto& t : comp) t.role = Role::none;
  return out;
}

// Crossing sign of a chord in an arrow diagram: the orientation sign at its
// base (overcrossing) endpoint.  This matches the classical convention.
inline int crossing_sign(const Diagram& d, const std::string& chord) {
  if (d.kind != CodeKind::arrow) throw code_error("crossing_sign: needs an arrow diagram");
  auto ch = find_chord(d, chord);
  if (!ch) throw code_error("crossing_sign: unknown chord '" + chord + "'");
  return d.at(ch->base).sign;
}

inline int writhe(const Diagram& d) {
  if (d.kind != CodeKind::arrow) throw code_error("writhe: needs an arrow diagram");
  int w = 0;
  for (const auto& ch : chords_of(d)) w += d.at(ch.base).sign;
  return w;
}

// ---------------------------------------------------------------------------
// Genus of the ribbon graph (V = chords, E = arcs, F by face tracing).
// ---------------------------------------------------------------------------

namespace detail {

// Arc model shared with the bracket and biquandle builders: each component
// with k >= 1 endpoints is cut into k arcs, arc i running from endpoint i to
// endpoint i+1 (cyclically).  Arc ends are numbered 2*arc (tail) and
// 2*arc + 1 (head).
struct ArcModel {
  // arc ids entering/leaving each endpoint position
  std::vector<std::vector<int>> in_arc, out_arc;
  int arc_count = 0;
  int empty_components = 0;

  explicit ArcModel(const Diagram& d) {
    in_arc.resize(d.components.size());
    out_arc.resize(d.components.size());
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      const int k = static_cast<int>(d.components[c].size());
      if (k == 0) {
        ++empty_components;
        continue;
      }
      in_arc[c].resize(k);
      out_arc[c].resize(k);
      for (int i = 0; i < k; ++i) {
        out_arc[c][i] = arc_count + i;
        in_arc[c][i] = arc_count + (i + k - 1) % k;
      }
      arc_count += k;
    }
  }

  int tail(int arc) const { return 2 * arc; }
  int head(int arc) const { return 2 * arc + 1; }
  int in_end(Pos p) const { return head(in_arc[p.component][p.index]); }
  int out_end(Pos p) const { return tail(out_arc[p.component][p.index]); }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace detail

inline int genus(const Diagram& d) {
  const auto chords = chords_of(d);
  const detail::ArcModel arcs(d);
  const int n = static_cast<int>(chords.size());

  // Rotation system: for each chord vertex, its four arc-ends in ccw order,
  // read from the positive endpoint: (+in, -in, +out, -out).
  // next_ccw[end] = following arc-end around the same vertex;
  // mate[end] = the other end of the same arc.
  std::vector<int> next_ccw(2 * arcs.arc_count, -1);
  for (const auto& ch : chords) {
    int ends[4] = {arcs.in_end(ch.plus), arcs.in_end(ch.minus), arcs.out_end(ch.plus),
                   arcs.out_end(ch.minus)};
    for (int i = 0; i < 4; ++i) next_ccw[ends[i]] = ends[(i + 1) % 4];
  }

  // Faces: orbits of end -> next_ccw[mate(end)].
  std::vector<bool> visited(2 * arcs.arc_count, false);
  int faces = 0;
  for (int e = 0; e < 2 * arcs.arc_count; ++e) {
    if (visited[e]) continue;
    ++faces;
    int cur = e;
    do {
      visited[cur] = true;
      cur = next_ccw[cur ^ 1];  // cross the arc, then rotate
    } while (cur != e);
  }

  // Connected pieces of the graph: circles glued along chords.
  const int m = static_cast<int>(d.components.size());
  detail::UnionFind uf(m);
  int pieces = m;
  for (const auto& ch : chords)
    if (uf.unite(ch.plus.component, ch.minus.component)) --pieces;

  // Circles with no endpoints contribute a sphere piece each (genus 0);
  // via Euler characteristic their V=E=0, F=2 contribution is implicit in
  // counting them as separate pieces below.
  const int V = n;
  const int E = 2 * n;
  const int F = faces + 2 * arcs.empty_components;
  const int euler = V - E + F;  // sum of 2 - 2g over pieces
  const int total_genus2 = 2 * pieces - euler;
  if (total_genus2 < 0 || total_genus2 % 2 != 0)
    throw std::logic_error("genus: face trace produced an impossible Euler characteristic");
  return total_genus2 / 2;
}

inline bool is_classical_realizable(const Diagram& d) { return genus(d) == 0; }

}  // namespace vknot
