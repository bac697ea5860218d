#pragma once

// Alexander biquandle relation matrices over Z[s^±1, t^±1] and the
// generalized Alexander polynomial G_K(s,t), defined up to units ±s^i t^j.
//
// One generator per arc (arcs are cut at every classical endpoint — both
// strands change labels at a biquandle crossing).  Per crossing of sign σ:
//   over_out  - s^σ over_in                          = 0
//   under_out - t^σ under_in - (1 - (st)^σ) over_in  = 0
// G_K vanishes on classical knots and links; the crossingless convention
// G := 0 keeps that uniform.

#include <stdexcept>
#include <string>
#include <vector>

#include "codes.hpp"
#include "diagram.hpp"
#include "laurent.hpp"

namespace vknot {

enum class TangleMatrix : unsigned char { A, Ahat, B, Bhat, C, Chat, D, Dhat, V };

// The 2x2 matrices of the Alexander biquandle, exactly as tabulated.
inline STMatrix crossing_matrix(TangleMatrix kind) {
  const LaurentST s = LaurentST::s(), t = LaurentST::t();
  const LaurentST si = LaurentST::s(-1), ti = LaurentST::t(-1);
  const LaurentST one = LaurentST::one();
  STMatrix m(2, 2);
  switch (kind) {
    case TangleMatrix::A:
      m(0, 0) = one - s * t; m(0, 1) = t;
      m(1, 0) = s;           m(1, 1) = LaurentST::zero();
      break;
    case TangleMatrix::Ahat:
      m(0, 0) = LaurentST::zero(); m(0, 1) = s;
      m(1, 0) = t;                 m(1, 1) = one - s * t;
      break;
    case TangleMatrix::B:
      m(0, 0) = LaurentST::zero(); m(0, 1) = si;
      m(1, 0) = ti;                m(1, 1) = one - si * ti;
      break;
    case TangleMatrix::Bhat:
      m(0, 0) = one - si * ti; m(0, 1) = ti;
      m(1, 0) = si;            m(1, 1) = LaurentST::zero();
      break;
    case TangleMatrix::C:
      m(0, 0) = LaurentST::zero(); m(0, 1) = si;
      m(1, 0) = t;                 m(1, 1) = si - t;
      break;
    case TangleMatrix::Chat:
      m(0, 0) = si - t; m(0, 1) = t;
      m(1, 0) = si;     m(1, 1) = LaurentST::zero();
      break;
    case TangleMatrix::D:
      m(0, 0) = LaurentST::zero(); m(0, 1) = s;
      m(1, 0) = ti;                m(1, 1) = s - ti;
      break;
    case TangleMatrix::Dhat:
      m(0, 0) = s - ti; m(0, 1) = ti;
      m(1, 0) = s;      m(1, 1) = LaurentST::zero();
      break;
    case TangleMatrix::V:
      m(0, 1) = one;
      m(1, 0) = one;
      break;
  }
  return m;
}

// Relation matrix of the Alexander biquandle presentation: rows are the two
// relations per crossing, columns are the arc generators.
inline STMatrix relation_matrix(const Diagram& d) {
  if (d.kind != CodeKind::arrow) throw code_error("relation_matrix: needs an arrow diagram");
  const auto chords = chords_of(d);
  if (chords.empty()) throw code_error("relation_matrix: crossingless diagram");
  const detail::ArcModel arcs(d);
  const int cols = arcs.arc_count + arcs.empty_components;
  STMatrix m(2 * chords.size(), static_cast<std::size_t>(cols));
  auto in_arc = [&](Pos p) { return arcs.in_arc[p.component][p.index]; };
  auto out_arc = [&](Pos p) { return arcs.out_arc[p.component][p.index]; };
  for (std::size_t i = 0; i < chords.size(); ++i) {
    const auto& ch = chords[i];
    const int sigma = d.at(ch.base).sign;
    const int over_in = in_arc(ch.base), over_out = out_arc(ch.base);
    const int under_in = in_arc(ch.tip), under_out = out_arc(ch.tip);
    const LaurentST s_pow = LaurentST::s(sigma);
    const LaurentST t_pow = LaurentST::t(sigma);
    const LaurentST st_pow = LaurentST::term(sigma, sigma, 1);
    m(2 * i, over_out) += LaurentST::one();
    m(2 * i, over_in) -= s_pow;
    m(2 * i + 1, under_out) += LaurentST::one();
    m(2 * i + 1, under_in) -= t_pow;
    m(2 * i + 1, over_in) -= LaurentST::one() - st_pow;
  }
  return m;
}

// Normalize up to the unit group {± s^i t^j}: minimal exponents are shifted
// to zero and the lexicographically least term gets a positive coefficient.
inline LaurentST normalize_units(const LaurentST& p) {
  if (p.is_zero()) return p;
  const STExp m = p.min_exponents();
  LaurentST shifted = p.shifted(-m.s, -m.t);
  if (shifted.terms().begin()->second < 0) return -shifted;
  return shifted;
}

inline LaurentST determinant(const STMatrix& m) {
  return m.rows() < 7 ? det_cofactor(m) : det_bareiss(m);
}

// Generalized Alexander polynomial, unit-normalized.  Crossingless diagrams
// return 0; so does any diagram with a crossingless split component (its arc
// generator meets no relation, giving a non-square presentation).
inline LaurentST g_polynomial(const Diagram& d) {
  const auto chords = chords_of(d);
  if (chords.empty()) return LaurentST::zero();
  const STMatrix m = relation_matrix(d);
  if (m.rows() != m.cols()) return LaurentST::zero();
  return normalize_units(determinant(m));
}

// ---------------------------------------------------------------------------
// Closed forms used to cross-check the K_n family.
// ---------------------------------------------------------------------------

inline STMatrix power_C(int n) {
  if (n < 0) throw std::invalid_argument("power_C: n must be nonnegative");
  return crossing_matrix(TangleMatrix::C).pow(n);
}

// (st+1) * C^n as a polynomial matrix:
//   [ (-t)^n + t s^(1-n)          -(-t)^n + s^-n      ]
//   [ t(-s(-t)^n + s^(1-n))       t s (-t)^n + s^-n   ]
inline STMatrix closed_form_Cn(int n) {
  if (n < 0) throw std::invalid_argument("closed_form_Cn: n must be nonnegative");
  const LaurentST neg_t_n = (-LaurentST::t()).pow(n);
  STMatrix m(2, 2);
  m(0, 0) = neg_t_n + LaurentST::term(1 - n, 1, 1);
  m(0, 1) = -neg_t_n + LaurentST::s(-n);
  m(1, 0) = LaurentST::t() * (-(LaurentST::s() * neg_t_n) + LaurentST::s(1 - n));
  m(1, 1) = LaurentST::term(1, 1, 1) * neg_t_n + LaurentST::s(-n);
  return m;
}

// G_{K_n} closed form: the determinant's numerator divided exactly by (st+1),
// unit-normalized.  The numerator is
//   s^n (s^2 t + 1)(1 - t) + s^2 t^2 - 1 + (1 - s^2) t^(1-n)   (n even)
//   s^(n+1) (1 - t^2)      + s^2 t^2 - 1 + (1 - s^2) t^(1-n)   (n odd)
inline LaurentST g_closed_form_Kn(int n) {
  if (n < 0) throw std::invalid_argument("g_closed_form_Kn: n must be nonnegative");
  const LaurentST s = LaurentST::s(), t = LaurentST::t(), one = LaurentST::one();
  const LaurentST tail = s.pow(2) * t.pow(2) - one + (one - s.pow(2)) * LaurentST::t(1 - n);
  LaurentST head;
  if (n % 2 == 0)
    head = LaurentST::s(n) * (s.pow(2) * t + one) * (one - t);
  else
    head = LaurentST::s(n + 1) * (one - t.pow(2));
  const LaurentST numerator = head + tail;
  if (numerator.is_zero()) return numerator;
  return normalize_units(numerator.exact_div(s * t + one));
}

}  // namespace vknot
