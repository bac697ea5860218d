#pragma once

// Constructors for the D_n / K_n families and the named example corpus.
//
// D_n is the single-component OCD with linear code
//   X- Yn- ... Y1- X+ Y1+ ... Yn+
// (n horizontal chords plus the vertical chord x).  K_n is the arrow diagram
// on the same code: x based at X+ (crossing sign +), and the horizontal
// chord y_i based at its minus endpoint when n - i is even, at its plus
// endpoint otherwise (alternating from the topmost chord down).  The
// alternation phase is pinned by two anchors: f_{K_n} = 1 for all n, and
// G_{K_n} matching the closed forms for n >= 2.

#include <stdexcept>
#include <string>
#include <vector>

#include "codes.hpp"

namespace vknot {

inline Diagram make_Dn(int n) {
  if (n < 0) throw std::invalid_argument("make_Dn: n must be nonnegative");
  Diagram d;
  d.kind = CodeKind::ocd;
  auto& comp = d.components.emplace_back();
  comp.push_back({"X", -1, Role::none});
  for (int i = n; i >= 1; --i) comp.push_back({"Y" + std::to_string(i), -1, Role::none});
  comp.push_back({"X", +1, Role::none});
  for (int i = 1; i <= n; ++i) comp.push_back({"Y" + std::to_string(i), +1, Role::none});
  validate(d);
  return d;
}

inline Diagram make_Kn(int n) {
  if (n < 0) throw std::invalid_argument("make_Kn: n must be nonnegative");
  Diagram d = make_Dn(n);
  d.kind = CodeKind::arrow;
  auto& comp = d.components[0];
  auto role_at = [&](int index, Role r) { comp[index].role = r; };
  role_at(0, Role::tip);       // X-
  role_at(n + 1, Role::base);  // X+ : crossing sign +1
  for (int i = 1; i <= n; ++i) {
    const bool base_at_minus = (n - i) % 2 == 0;
    const int minus_index = n + 1 - i;
    const int plus_index = n + 1 + i;
    role_at(minus_index, base_at_minus ? Role::base : Role::tip);
    role_at(plus_index, base_at_minus ? Role::tip : Role::base);
  }
  validate(d);
  return d;
}

// ---------------------------------------------------------------------------
// Named example corpus
// ---------------------------------------------------------------------------

enum class ExampleName {
  vhopf_plus,
  vhopf_minus,
  trefoil_right,
  trefoil_left,
  figure8,
  virtual_trefoil,
  kishino,
  paper_ocd_example,
  flat_E,
};

struct CorpusEntry {
  ExampleName id;
  const char* name;
  CodeKind kind;
  const char* code;
  const char* note;
};

inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {ExampleName::vhopf_plus, "vhopf_plus", CodeKind::arrow, "A+o | A-u",
       "positive virtual Hopf link; <K> = A + A^-1, f = -A^-2 - A^-4"},
      {ExampleName::vhopf_minus, "vhopf_minus", CodeKind::arrow, "A+u | A-o",
       "negative virtual Hopf link, the mirror of vhopf_plus; f = -A^2 - A^4"},
      {ExampleName::trefoil_right, "trefoil_right", CodeKind::arrow,
       "A+o B-u C+o A-u B+o C-u", "right-handed trefoil (O1+ U2+ O3+ U1+ O2+ U3+); classical"},
      {ExampleName::trefoil_left, "trefoil_left", CodeKind::arrow,
       "A+u B-o C+u A-o B+u C-o", "left-handed trefoil, mirror of trefoil_right"},
      {ExampleName::figure8, "figure8", CodeKind::arrow,
       "A+o B+u C-o A-u D+o C+u B-o D-u",
       "figure-eight knot from DT code 4 6 8 2; classical, writhe 0"},
      {ExampleName::virtual_trefoil, "virtual_trefoil", CodeKind::arrow, "A+o B+o A-u B-u",
       "positive virtual trefoil; genus 1, not classically realizable"},
      {ExampleName::kishino, "kishino", CodeKind::arrow,
       "A+o B+u A-u B-o C+u D+o C-o D-u",
       "Kishino's knot: connected sum of two trivial 2-crossing halves; f = 1, G = 0"},
      {ExampleName::paper_ocd_example, "paper_ocd_example", CodeKind::ocd, "A+ B+ C- A- C+ B-",
       "three-chord OCD admitting the filamentation {(a,a),(b,c)}"},
      {ExampleName::flat_E, "flat_E", CodeKind::ocd, "A- B- A+ B+",
       "flat diagram E, a two-crossing flat virtual knot; exploration only"},
  };
  return entries;
}

inline Diagram named_example(ExampleName id) {
  for (const auto& e : corpus())
    if (e.id == id) return parse_code(e.code, e.kind);
  throw std::invalid_argument("named_example: unknown example");
}

inline Diagram named_example(const std::string& name) {
  for (const auto& e : corpus())
    if (name == e.name) return parse_code(e.code, e.kind);
  throw std::invalid_argument("named_example: unknown example '" + name + "'");
}

}  // namespace vknot
