#pragma once

// Textual codes for oriented chord diagrams (OCD) and arrow diagrams.
//
// Grammar:  code := component ("|" component)*
//           component := token*
//           token := NAME SIGN ROLE?
//           NAME := [A-Za-z][A-Za-z0-9]* | [0-9]+
//           SIGN := "+" | "-"
//           ROLE := "o" (arrow base, overcrossing) | "u" (arrow tip, undercrossing)
// Whitespace between tokens is arbitrary.  A code is one cyclic word per
// component; virtual crossings never appear at this level.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vknot {

enum class Role : unsigned char { none, base, tip };
enum class CodeKind : unsigned char { ocd, arrow };

struct Token {
  std::string chord;
  int sign = +1;  // +1 or -1
  Role role = Role::none;

  friend bool operator==(const Token& a, const Token& b) {
    return a.chord == b.chord && a.sign == b.sign && a.role == b.role;
  }
};

// Position of an endpoint: component index and index within its cyclic word.
struct Pos {
  int component = 0;
  int index = 0;
  friend bool operator==(const Pos& a, const Pos& b) {
    return a.component == b.component && a.index == b.index;
  }
  friend bool operator<(const Pos& a, const Pos& b) {
    return a.component != b.component ? a.component < b.component : a.index < b.index;
  }
};

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t offset, const std::string& what)
      : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class code_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A validated diagram code: every chord name appears exactly twice with
// opposite signs; in arrow codes one endpoint is the base, the other the tip.
struct Diagram {
  CodeKind kind = CodeKind::ocd;
  std::vector<std::vector<Token>> components;

  const Token& at(Pos p) const { return components[p.component][p.index]; }
  Token& at(Pos p) { return components[p.component][p.index]; }

  int total_endpoints() const {
    int n = 0;
    for (const auto& c : components) n += static_cast<int>(c.size());
    return n;
  }

  int chord_count() const { return total_endpoints() / 2; }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.kind == b.kind && a.components == b.components;
  }
};

// Both endpoint positions of one chord.
struct ChordEnds {
  std::string name;
  Pos plus, minus;  // positions of the +1 and -1 endpoints
  bool has_roles = false;
  Pos base, tip;  // meaningful when has_roles
};

inline void validate(const Diagram& d) {
  std::map<std::string, std::vector<Pos>> occ;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c)
    for (int i = 0; i < static_cast<int>(d.components[c].size()); ++i) {
      const Token& t = d.components[c][i];
      if (t.sign != 1 && t.sign != -1) throw code_error("token sign must be +1 or -1");
      if (d.kind == CodeKind::ocd && t.role != Role::none)
        throw code_error("chord '" + t.chord + "': role marker in an OCD code");
      if (d.kind == CodeKind::arrow && t.role == Role::none)
        throw code_error("chord '" + t.chord + "': arrow code token lacks o/u role");
      occ[t.chord].push_back({c, i});
    }
  for (const auto& [name, ps] : occ) {
    if (ps.size() != 2)
      throw code_error("chord '" + name + "' appears " + std::to_string(ps.size()) +
                       " times, expected 2");
    const Token& a = d.at(ps[0]);
    const Token& b = d.at(ps[1]);
    if (a.sign + b.sign != 0) throw code_error("chord '" + name + "': equal signs on endpoints");
    if (d.kind == CodeKind::arrow && a.role == b.role)
      throw code_error("chord '" + name + "': needs one base (o) and one tip (u) endpoint");
  }
}

inline std::vector<ChordEnds> chords_of(const Diagram& d) {
  std::map<std::string, std::vector<Pos>> occ;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c)
    for (int i = 0; i < static_cast<int>(d.components[c].size()); ++i)
      occ[d.components[c][i].chord].push_back({c, i});
  std::vector<ChordEnds> out;
  out.reserve(occ.size());
  for (const auto& [name, ps] : occ) {
    ChordEnds ch;
    ch.name = name;
    const Token& a = d.at(ps[0]);
    ch.plus = a.sign > 0 ? ps[0] : ps[1];
    ch.minus = a.sign > 0 ? ps[1] : ps[0];
    if (d.kind == CodeKind::arrow) {
      ch.has_roles = true;
      ch.base = a.role == Role::base ? ps[0] : ps[1];
      ch.tip = a.role == Role::base ? ps[1] : ps[0];
    }
    out.push_back(ch);
  }
  return out;
}

inline std::optional<ChordEnds> find_chord(const Diagram& d, const std::string& name) {
  for (const auto& ch : chords_of(d))
    if (ch.name == name) return ch;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parsing and serialization
// ---------------------------------------------------------------------------

inline Diagram parse_code(const std::string& text, CodeKind kind) {
  Diagram d;
  d.kind = kind;
  d.components.emplace_back();
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '|') {
      d.components.emplace_back();
      ++i;
      continue;
    }
    Token tok;
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      tok.chord = text.substr(start, i - start);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      ++i;
      while (i < n && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
      tok.chord = text.substr(start, i - start);
    } else {
      throw parse_error(i, std::string("unexpected character '") + c + "'");
    }
    // NAME greedily eats a trailing role letter; the sign separates them,
    // so the role is parsed after the sign below.
    if (i >= n || (text[i] != '+' && text[i] != '-'))
      throw parse_error(i, "expected sign '+' or '-' after chord name '" + tok.chord + "'");
    tok.sign = text[i] == '+' ? +1 : -1;
    ++i;
    if (i < n && (text[i] == 'o' || text[i] == 'u')) {
      tok.role = text[i] == 'o' ? Role::base : Role::tip;
      ++i;
      if (i < n && std::isalnum(static_cast<unsigned char>(text[i])))
        throw parse_error(i, "unexpected character after role marker");
    }
    d.components.back().push_back(std::move(tok));
  }
  try {
    validate(d);
  } catch (const code_error& e) {
    throw parse_error(0, e.what());
  }
  return d;
}

inline std::string serialize(const Diagram& d) {
  std::string out;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    if (c > 0) out += " | ";
    for (std::size_t i = 0; i < d.components[c].size(); ++i) {
      if (i > 0) out += " ";
      const Token& t = d.components[c][i];
      out += t.chord;
      out += t.sign > 0 ? "+" : "-";
      if (t.role == Role::base) out += "o";
      if (t.role == Role::tip) out += "u";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form: lexicographically least serialization over all cyclic
// rotations of each component, permutations of components, and renamings of
// chords in order of first occurrence.  Reversal is not quotiented.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string fresh_name(int k) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('A' + k % 26));
    k = k / 26 - 1;
  } while (k >= 0);
  return s;
}

inline void canonical_search(const Diagram& d, std::vector<int>& order, std::vector<bool>& used,
                             std::string& best) {
  const int m = static_cast<int>(d.components.size());
  if (static_cast<int>(order.size()) == m) {
    // all rotation combinations for this component order
    std::vector<int> rot(m, 0);
    while (true) {
      Diagram cand;
      cand.kind = d.kind;
      std::map<std::string, std::string> rename;
      for (int ci = 0; ci < m; ++ci) {
        const auto& src = d.components[order[ci]];
        std::vector<Token> comp;
        const int len = static_cast<int>(src.size());
        for (int i = 0; i < len; ++i) {
          Token t = src[(i + rot[ci]) % len];
          auto it = rename.find(t.chord);
          if (it == rename.end())
            it = rename.emplace(t.chord, fresh_name(static_cast<int>(rename.size()))).first;
          t.chord = it->second;
          comp.push_back(std::move(t));
        }
        cand.components.push_back(std::move(comp));
      }
      std::string s = serialize(cand);
      if (best.empty() || s < best) best = std::move(s);
      // next rotation vector
      int k = 0;
      while (k < m) {
        const int len = static_cast<int>(d.components[order[k]].size());
        if (len > 0 && ++rot[k] < len) break;
        rot[k] = 0;
        ++k;
      }
      if (k == m) break;
    }
    return;
  }
  for (int c = 0; c < m; ++c) {
    if (used[c]) continue;
    used[c] = true;
    order.push_back(c);
    canonical_search(d, order, used, best);
    order.pop_back();
    used[c] = false;
  }
}

}  // namespace detail

inline std::string canonical_form(const Diagram& d) {
  if (d.components.empty()) return "";
  std::string best;
  std::vector<int> order;
  std::vector<bool> used(d.components.size(), false);
  detail::canonical_search(d, order, used, best);
  return best;
}

inline Diagram canonicalize(const Diagram& d) { return parse_code(canonical_form(d), d.kind); }

// ---------------------------------------------------------------------------
// Bridge from the common O/U crossing-sign notation: "O1+ U1+" style tokens,
// one O and one U per crossing with matching signs.  The over passage becomes
// the arrow base carrying the crossing sign; the under passage becomes the
// tip with the opposite sign.
// ---------------------------------------------------------------------------

inline Diagram from_standard_gauss(const std::string& text) {
  Diagram d;
  d.kind = CodeKind::arrow;
  d.components.emplace_back();
  std::map<std::string, std::string> names;  // crossing label -> chord name
  struct Seen {
    int over = 0, under = 0;
    int sign = 0;
  };
  std::map<std::string, Seen> seen;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '|') {
      d.components.emplace_back();
      ++i;
      continue;
    }
    if (c != 'O' && c != 'U') throw parse_error(i, "expected 'O' or 'U'");
    bool over = c == 'O';
    ++i;
    std::size_t start = i;
    while (i < n && std::isalnum(static_cast<unsigned char>(text[i])) && text[i] != 'O' &&
           text[i] != 'U')
      ++i;
    if (i == start) throw parse_error(i, "expected crossing label");
    std::string label = text.substr(start, i - start);
    if (i >= n || (text[i] != '+' && text[i] != '-'))
      throw parse_error(i, "expected sign after crossing label '" + label + "'");
    int sign = text[i] == '+' ? +1 : -1;
    ++i;
    auto it = names.find(label);
    if (it == names.end())
      it = names.emplace(label, detail::fresh_name(static_cast<int>(names.size()))).first;
    Seen& s = seen[label];
    if (s.over + s.under == 0)
      s.sign = sign;
    else if (s.sign != sign)
      throw parse_error(0, "crossing '" + label + "': mismatched signs");
    (over ? s.over : s.under) += 1;
    Token tok;
    tok.chord = it->second;
    tok.sign = over ? sign : -sign;
    tok.role = over ? Role::base : Role::tip;
    d.components.back().push_back(std::move(tok));
  }
  for (const auto& [label, s] : seen)
    if (s.over != 1 || s.under != 1)
      throw parse_error(0, "crossing '" + label + "': needs exactly one O and one U passage");
  validate(d);
  return d;
}

}  // namespace vknot
