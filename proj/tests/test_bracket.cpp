#include <doctest.h>

#include <random>
#include <vknot/bracket.hpp>
#include <vknot/families.hpp>

#include "support/oracles.hpp"
#include "support/random_diagrams.hpp"

using namespace vknot;

namespace {
Laurent1 term(int e, Coeff c) { return Laurent1::term(e, c); }
}  // namespace

TEST_CASE("bracket anchors: virtual Hopf link and trivial diagrams") {
  Diagram vhopf = parse_code("A+o | A-u", CodeKind::arrow);
  CHECK(kauffman_bracket(vhopf) == term(1, 1) + term(-1, 1));  // A + A^-1
  CHECK(f_polynomial(vhopf) == term(-2, -1) + term(-4, -1));   // -A^-2 - A^-4

  CHECK(kauffman_bracket(parse_code("", CodeKind::arrow)) == Laurent1::one());
  CHECK(kauffman_bracket(parse_code("|", CodeKind::arrow)) == bracket_loop_value());
}

TEST_CASE("bracket anchors: mirrored virtual Hopf") {
  Diagram vhopf_minus = mirror(parse_code("A+o | A-u", CodeKind::arrow));
  CHECK(writhe(vhopf_minus) == -1);
  CHECK(f_polynomial(vhopf_minus) == term(2, -1) + term(4, -1));  // -A^2 - A^4
  CHECK(canonical_form(vhopf_minus) ==
        canonical_form(parse_code("A+u | A-o", CodeKind::arrow)));
}

TEST_CASE("kink behaviour: AD1 scales the bracket by -A^±3") {
  const Laurent1 one = Laurent1::one();
  CHECK(kauffman_bracket(parse_code("A+o A-u", CodeKind::arrow)) == term(3, -1));
  CHECK(kauffman_bracket(parse_code("A-o A+u", CodeKind::arrow)) == term(-3, -1));
  CHECK(f_polynomial(parse_code("A+o A-u", CodeKind::arrow)) == one);
  CHECK(f_polynomial(parse_code("A-o A+u", CodeKind::arrow)) == one);
}

TEST_CASE("state sum equals the recursive skein oracle") {
  // named small diagrams
  for (const char* code : {"A+o | A-u", "A+o A-u", "A+o B+o A-u B-u",
                           "A+o B-u C+o A-u B+o C-u", "A+o B+u C-u A-u C+o B-o"}) {
    Diagram d = parse_code(code, CodeKind::arrow);
    CHECK(kauffman_bracket(d) == testing::bracket_skein_oracle(d));
  }
  // random diagrams up to 6 crossings, 1-2 components
  std::mt19937 rng(424242);
  for (int i = 0; i < 60; ++i) {
    int chords = std::uniform_int_distribution<int>(0, 6)(rng);
    int comps = std::uniform_int_distribution<int>(1, 2)(rng);
    Diagram d = testing::random_diagram(rng, chords, comps, CodeKind::arrow);
    CHECK(kauffman_bracket(d) == testing::bracket_skein_oracle(d));
  }
}

TEST_CASE("jones substitution") {
  Diagram vhopf = parse_code("A+o | A-u", CodeKind::arrow);
  QuarterLaurent v = jones(vhopf);
  CHECK(v.to_string() == "-t^1/2 - t");
  CHECK(jones(parse_code("", CodeKind::arrow)).to_string() == "1");
  // single-component classical sample: all integral exponents
  Diagram trefoil = parse_code("A+o B-u C+o A-u B+o C-u", CodeKind::arrow);
  CHECK(jones(trefoil).all_exponents_integral());
}

TEST_CASE("mirror properties") {
  std::mt19937 rng(5150);
  Diagram trefoil = parse_code("A+o B-u C+o A-u B+o C-u", CodeKind::arrow);
  CHECK(f_polynomial(mirror(trefoil)) == f_polynomial(trefoil).substitute_power(-1));
  CHECK(canonical_form(mirror(mirror(trefoil))) == canonical_form(trefoil));
  for (int i = 0; i < 25; ++i) {
    Diagram d = testing::random_diagram(rng, std::uniform_int_distribution<int>(0, 5)(rng), 1,
                                        CodeKind::arrow);
    CHECK(f_polynomial(mirror(d)) == f_polynomial(d).substitute_power(-1));
  }
}

TEST_CASE("exponent lattice: classical f in A^4 powers, virtual in A^2 powers") {
  Diagram trefoil = parse_code("A+o B-u C+o A-u B+o C-u", CodeKind::arrow);
  for (const auto& [e, c] : f_polynomial(trefoil).terms()) CHECK(e % 4 == 0);
  Diagram vt = parse_code("A+o B+o A-u B-u", CodeKind::arrow);
  for (const auto& [e, c] : f_polynomial(vt).terms()) CHECK(e % 2 == 0);
}
