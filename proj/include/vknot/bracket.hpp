#pragma once

// Kauffman bracket state sum on arrow diagram codes, the writhe-normalized
// polynomial f_K(A) = (-A^3)^(-w) <K>, and the Jones polynomial via the
// substitution A = t^(-1/4).  Virtual crossings never enter the code, so a
// state's loops are counted by tracing the reconnected arcs directly.
//
// Smoothing convention, pinned by the virtual Hopf anchor and the kink
// behaviour: at a positive crossing the A-smoothing is the
// orientation-preserving reconnection (over-in -> under-out,
// under-in -> over-out); at a negative crossing A and B swap.

#include <cstdint>
#include <vector>

#include "codes.hpp"
#include "diagram.hpp"
#include "laurent.hpp"

namespace vknot {

inline Laurent1 bracket_loop_value() {
  Laurent1 delta;
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  return delta;  // -A^2 - A^-2
}

inline Laurent1 kauffman_bracket(const Diagram& d) {
  if (d.kind != CodeKind::arrow) throw code_error("kauffman_bracket: needs an arrow diagram");
  const auto chords = chords_of(d);
  const detail::ArcModel arcs(d);
  const int n = static_cast<int>(chords.size());
  if (n > 24) throw std::invalid_argument("kauffman_bracket: too many crossings for a state sum");

  struct Gluing {
    int a1, b1, a2, b2;  // two arc-end joins
  };
  // per chord: [0] = orientation-preserving joins, [1] = orientation-reversing
  std::vector<Gluing> preserve(n), reverse(n);
  std::vector<int> positive(n);
  for (int i = 0; i < n; ++i) {
    const auto& ch = chords[i];
    const int over_in = arcs.in_end(ch.base), over_out = arcs.out_end(ch.base);
    const int under_in = arcs.in_end(ch.tip), under_out = arcs.out_end(ch.tip);
    preserve[i] = {over_in, under_out, under_in, over_out};
    reverse[i] = {over_in, under_in, over_out, under_out};
    positive[i] = d.at(ch.base).sign > 0;
  }

  const Laurent1 delta = bracket_loop_value();
  std::vector<Laurent1> delta_pow(n + static_cast<int>(d.components.size()) + 2);
  delta_pow[0] = Laurent1::one();
  for (std::size_t i = 1; i < delta_pow.size(); ++i) delta_pow[i] = delta_pow[i - 1] * delta;

  Laurent1 total;
  const std::uint32_t states = n == 0 ? 1u : (1u << n);
  for (std::uint32_t mask = 0; mask < states; ++mask) {
    detail::UnionFind uf(2 * arcs.arc_count);
    int loops = arcs.arc_count + arcs.empty_components;
    for (int a = 0; a < arcs.arc_count; ++a) uf.unite(2 * a, 2 * a + 1);
    int exponent = 0;
    for (int i = 0; i < n; ++i) {
      const bool a_smoothing = ((mask >> i) & 1u) == 0;
      exponent += a_smoothing ? 1 : -1;
      // A on a positive crossing preserves orientation; on a negative it reverses.
      const Gluing& g = (a_smoothing == (positive[i] != 0)) ? preserve[i] : reverse[i];
      if (uf.unite(g.a1, g.b1)) --loops;
      if (uf.unite(g.a2, g.b2)) --loops;
    }
    // every arc-end now has degree 2, so components are exactly the loops
    total += Laurent1::term(exponent, 1) * delta_pow[loops - 1];
  }
  return total;
}

inline Laurent1 f_polynomial(const Diagram& d) {
  const int w = writhe(d);
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  const Laurent1 norm = Laurent1::term(-3 * w, (w % 2 == 0) ? 1 : -1);
  return norm * kauffman_bracket(d);
}

inline QuarterLaurent jones(const Diagram& d) {
  return QuarterLaurent::from_bracket_variable(f_polynomial(d));
}

// Switch every crossing: each chord's base and tip roles are exchanged, so
// the new base sits at the opposite-signed endpoint and every crossing sign
// is negated.  Satisfies f_mirror(A) = f(A^-1).
inline Diagram mirror(const Diagram& d) {
  if (d.kind != CodeKind::arrow) throw code_error("mirror: needs an arrow diagram");
  Diagram out = d;
  for (auto& comp : out.components)
    for (auto& t : comp) t.role = t.role == Role::base ? Role::tip : Role::base;
  return out;
}

}  // namespace vknot
