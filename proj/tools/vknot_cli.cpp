// Command-line front end for the vknot library: parsing and canonical forms,
// the bracket / f / Jones / generalized Alexander polynomials, filamentation
// search, flat invariants, genus, move enumeration, and the bounded
// reduction search.  --json switches every command to machine-readable
// output on stdout; timings go to stderr so stdout stays byte-deterministic.
//
// Exit codes: 0 success, 1 computation-domain error, 2 parse error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <vknot/json_io.hpp>
#include <vknot/vknot.hpp>

namespace {

using namespace vknot;

struct InputOpts {
  std::string code;
  std::string file;
  std::string family;
  int n = -1;
  std::string name;
  std::string kind = "auto";
};

void add_input_flags(CLI::App* cmd, InputOpts& in, bool with_family_and_name = true) {
  cmd->add_option("--code", in.code, "diagram code (codes grammar)");
  cmd->add_option("--file", in.file, "read the code from a file");
  if (with_family_and_name) {
    cmd->add_option("--family", in.family, "family constructor: Dn, An or Kn")
        ->check(CLI::IsMember({"Dn", "An", "Kn"}));
    cmd->add_option("--n", in.n, "family index (n >= 0)");
    cmd->add_option("--name", in.name, "named corpus example");
  }
}

bool looks_like_arrow(const std::string& text) {
  for (std::size_t i = 1; i < text.size(); ++i)
    if ((text[i] == 'o' || text[i] == 'u') && (text[i - 1] == '+' || text[i - 1] == '-'))
      return true;
  return false;
}

// wanted: the kind a command requires, or nullopt to autodetect
Diagram resolve_input(const InputOpts& in, std::optional<CodeKind> wanted) {
  int sources = !in.code.empty() + !in.file.empty() + !in.family.empty() + !in.name.empty();
  if (sources == 0 && in.code.empty()) sources = 1;  // allow the empty --code diagram
  if (sources > 1) throw code_error("choose one input among --code/--file/--family/--name");
  if (!in.family.empty()) {
    if (in.n < 0) throw code_error("--family requires --n >= 0");
    Diagram d = in.family == "Dn" ? make_Dn(in.n) : make_Kn(in.n);
    if (wanted && d.kind != *wanted)
      throw code_error(in.family + " has the wrong kind for this command");
    return d;
  }
  if (!in.name.empty()) {
    Diagram d = named_example(in.name);
    if (wanted && d.kind != *wanted)
      throw code_error("corpus example '" + in.name + "' has the wrong kind for this command");
    return d;
  }
  std::string text = in.code;
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw code_error("cannot open file '" + in.file + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  CodeKind kind;
  if (wanted)
    kind = *wanted;
  else if (in.kind == "ocd")
    kind = CodeKind::ocd;
  else if (in.kind == "arrow")
    kind = CodeKind::arrow;
  else
    kind = looks_like_arrow(text) ? CodeKind::arrow : CodeKind::ocd;
  return parse_code(text, kind);
}

struct Report {
  std::string invariant;
  Diagram input;
  json payload;
  std::string text;
};

void emit(const Report& r, bool as_json, std::chrono::steady_clock::time_point t0) {
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0);
  if (as_json) {
    json out = {{"input", canonical_form(r.input)},
                {"invariant", r.invariant},
                {"result", r.payload}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << r.text << "\n";
  }
  std::cerr << r.invariant << ": " << elapsed.count() << " us\n";
}

std::string pairing_text(const Diagram& d, const Pairing& p) {
  std::string out = "pairing:";
  for (const auto& pair : p) {
    out += " (" + pair.first + "," + pair.second +
           ")=" + std::to_string(pair_intersection_number(d, p, pair));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"virtual knot diagram codes and invariants"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  InputOpts in;
  std::string family_arg;
  std::string kinds_arg;
  int max_chords = -1;
  long long max_steps = 10000;

  auto* parse_cmd = app.add_subcommand("parse", "validate a code and echo its canonical form");
  add_input_flags(parse_cmd, in);
  parse_cmd->add_option("--kind", in.kind, "ocd | arrow | auto")
      ->check(CLI::IsMember({"ocd", "arrow", "auto"}));
  auto* canon_cmd = app.add_subcommand("canon", "canonical form of a code");
  add_input_flags(canon_cmd, in);
  canon_cmd->add_option("--kind", in.kind, "ocd | arrow | auto")
      ->check(CLI::IsMember({"ocd", "arrow", "auto"}));

  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket <K>");
  auto* fpoly_cmd = app.add_subcommand("fpoly", "normalized bracket f_K(A)");
  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial V_K(t)");
  auto* galex_cmd = app.add_subcommand("galex", "generalized Alexander polynomial G_K(s,t)");
  for (auto* c : {bracket_cmd, fpoly_cmd, jones_cmd, galex_cmd}) add_input_flags(c, in);

  auto* filament_cmd = app.add_subcommand("filament", "filamentation existence and witness");
  auto* parity_cmd = app.add_subcommand("parity", "parity of a flat link");
  auto* flatbq_cmd = app.add_subcommand("flatbq", "flat biquandle relations");
  auto* genus_cmd = app.add_subcommand("genus", "genus of the underlying surface");
  for (auto* c : {filament_cmd, parity_cmd, flatbq_cmd, genus_cmd}) add_input_flags(c, in);
  genus_cmd->add_option("--kind", in.kind, "ocd | arrow | auto")
      ->check(CLI::IsMember({"ocd", "arrow", "auto"}));

  auto* moves_cmd = app.add_subcommand("moves", "enumerate applicable move instances");
  add_input_flags(moves_cmd, in);
  moves_cmd->add_option("--kind", in.kind, "ocd | arrow | auto")
      ->check(CLI::IsMember({"ocd", "arrow", "auto"}));
  moves_cmd->add_option("--kinds", kinds_arg, "comma-separated move kinds (default: all)");

  auto* reduce_cmd = app.add_subcommand("reduce", "bounded breadth-first reduction search");
  add_input_flags(reduce_cmd, in);
  reduce_cmd->add_option("--kind", in.kind, "ocd | arrow | auto")
      ->check(CLI::IsMember({"ocd", "arrow", "auto"}));
  reduce_cmd->add_option("--max-chords", max_chords, "chord bound for intermediate diagrams");
  reduce_cmd->add_option("--max-steps", max_steps, "move application budget");

  auto* family_cmd = app.add_subcommand("family", "emit a family diagram code");
  family_cmd->add_option("which", family_arg, "Dn, An or Kn")
      ->required()
      ->check(CLI::IsMember({"Dn", "An", "Kn"}));
  family_cmd->add_option("--n", in.n, "family index")->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "named example codes");
  corpus_cmd->add_option("--name", in.name, "example name (omit to list all)");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  const auto t0 = std::chrono::steady_clock::now();

  try {
    Report r;
    if (parse_cmd->parsed() || canon_cmd->parsed()) {
      r.invariant = parse_cmd->parsed() ? "parse" : "canon";
      r.input = resolve_input(in, std::nullopt);
      r.text = canonical_form(r.input);
      r.payload = {{"canonical", r.text},
                   {"components", r.input.components.size()},
                   {"chords", r.input.chord_count()}};
    } else if (bracket_cmd->parsed()) {
      r.invariant = "bracket";
      r.input = resolve_input(in, CodeKind::arrow);
      Laurent1 p = kauffman_bracket(r.input);
      r.text = p.to_string("A");
      r.payload = to_json(p);
    } else if (fpoly_cmd->parsed()) {
      r.invariant = "fpoly";
      r.input = resolve_input(in, CodeKind::arrow);
      Laurent1 p = f_polynomial(r.input);
      r.text = p.to_string("A");
      r.payload = to_json(p);
    } else if (jones_cmd->parsed()) {
      r.invariant = "jones";
      r.input = resolve_input(in, CodeKind::arrow);
      QuarterLaurent p = jones(r.input);
      r.text = p.to_string();
      r.payload = to_json(p);
    } else if (galex_cmd->parsed()) {
      r.invariant = "galex";
      r.input = resolve_input(in, CodeKind::arrow);
      LaurentST p = g_polynomial(r.input);
      r.text = p.to_string();
      r.payload = to_json(p);
    } else if (filament_cmd->parsed()) {
      r.invariant = "filament";
      r.input = resolve_input(in, CodeKind::ocd);
      auto found = find_filamentation(r.input);
      if (found) {
        r.text = pairing_text(r.input, *found);
        r.payload = {{"found", true},
                     {"pairing", filamentation_witness_json(r.input, *found)}};
      } else {
        r.text = "none";
        r.payload = {{"found", false}};
      }
    } else if (parity_cmd->parsed()) {
      r.invariant = "parity";
      r.input = resolve_input(in, CodeKind::ocd);
      const int p = parity(r.input);
      r.text = std::to_string(p);
      r.payload = p;
    } else if (flatbq_cmd->parsed()) {
      r.invariant = "flatbq";
      r.input = resolve_input(in, CodeKind::ocd);
      auto rels = flat_relations(r.input);
      std::string text;
      for (const auto& rel : rels) {
        if (!text.empty()) text += "\n";
        text += rel.generator + ": (" + rel.coefficient().to_string("s") + ") " +
                rel.generator + " = 0";
      }
      r.text = text.empty() ? "(no components)" : text;
      r.payload = to_json(rels);
    } else if (genus_cmd->parsed()) {
      r.invariant = "genus";
      r.input = resolve_input(in, std::nullopt);
      const int g = genus(r.input);
      r.text = "genus " + std::to_string(g) +
               (g == 0 ? ", classically realizable" : ", not classically realizable");
      r.payload = {{"genus", g}, {"classically_realizable", g == 0}};
    } else if (moves_cmd->parsed()) {
      r.invariant = "moves";
      r.input = resolve_input(in, std::nullopt);
      std::set<MoveKind> kinds = reidemeister_kinds(r.input.kind);
      if (r.input.kind == CodeKind::arrow) kinds.insert(MoveKind::flip);
      if (!kinds_arg.empty()) {
        kinds.clear();
        std::stringstream ss(kinds_arg);
        std::string item;
        while (std::getline(ss, item, ',')) {
          auto k = move_kind_from_name(item);
          if (!k) throw code_error("unknown move kind '" + item + "'");
          kinds.insert(*k);
        }
      }
      auto ms = enumerate_moves(r.input, kinds);
      std::string text;
      for (const auto& m : ms) {
        if (!text.empty()) text += "\n";
        text += move_kind_name(m.kind);
        for (const auto& c : m.chords) text += " " + c;
        for (const auto& s : m.sites)
          text += " (" + std::to_string(s.component) + "," + std::to_string(s.index) + ")";
        if (m.sign != 0) text += " eps=" + std::string(m.sign > 0 ? "+" : "-");
      }
      r.text = text.empty() ? "(none)" : text;
      r.payload = to_json(ms);
    } else if (reduce_cmd->parsed()) {
      r.invariant = "reduce";
      r.input = resolve_input(in, std::nullopt);
      const int bound = max_chords > 0 ? max_chords : r.input.chord_count() + 2;
      ReduceResult res = reduce_search(r.input, bound, max_steps);
      const char* status = res.status == ReduceStatus::reduced
                               ? "reduced"
                               : res.status == ReduceStatus::irreducible ? "irreducible"
                                                                         : "exhausted";
      std::string text = std::string(status) + ": " + canonical_form(res.diagram);
      for (const auto& m : res.path) text += std::string("\n  ") + move_kind_name(m.kind);
      r.text = text;
      r.payload = {{"status", status},
                   {"diagram", canonical_form(res.diagram)},
                   {"path", to_json(res.path)}};
    } else if (family_cmd->parsed()) {
      r.invariant = "family";
      if (in.n < 0) throw code_error("--n must be >= 0");
      r.input = family_arg == "Dn" ? make_Dn(in.n) : make_Kn(in.n);
      r.text = serialize(r.input);
      r.payload = {{"code", r.text}, {"kind", family_arg == "Dn" ? "ocd" : "arrow"}};
    } else if (corpus_cmd->parsed()) {
      r.invariant = "corpus";
      if (in.name.empty()) {
        std::string text;
        json list = json::array();
        for (const auto& e : corpus()) {
          if (!text.empty()) text += "\n";
          text += std::string(e.name) + ": " + e.code;
          list.push_back({{"name", e.name},
                          {"kind", e.kind == CodeKind::arrow ? "arrow" : "ocd"},
                          {"code", e.code},
                          {"note", e.note}});
        }
        r.text = text;
        r.payload = list;
        r.input = parse_code("", CodeKind::ocd);
      } else {
        r.input = named_example(in.name);
        for (const auto& e : corpus())
          if (in.name == e.name) {
            r.text = e.code;
            r.payload = {{"name", e.name},
                         {"kind", e.kind == CodeKind::arrow ? "arrow" : "ocd"},
                         {"code", e.code},
                         {"note", e.note}};
          }
      }
    }
    emit(r, as_json, t0);
    return 0;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
