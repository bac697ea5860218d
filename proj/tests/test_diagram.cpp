#include <doctest.h>

#include <random>
#include <vknot/diagram.hpp>
#include <vknot/families.hpp>

#include "support/random_diagrams.hpp"

using namespace vknot;

TEST_CASE("underlying_ocd erases roles, keeps signs") {
  CHECK(serialize(underlying_ocd(parse_code("A+o A-u", CodeKind::arrow))) == "A+ A-");
  // the arrow code over the worked OCD example
  Diagram ad = parse_code("A+o B+u C-u A-u C+o B-o", CodeKind::arrow);
  CHECK(canonical_form(underlying_ocd(ad)) ==
        canonical_form(parse_code("A+ B+ C- A- C+ B-", CodeKind::ocd)));
  CHECK(serialize(underlying_ocd(parse_code("", CodeKind::arrow))) == "");
}

TEST_CASE("underlying_ocd commutes with re-encoding") {
  std::mt19937 rng(99);
  Diagram ad = parse_code("A+o B+u C-u A-u C+o B-o", CodeKind::arrow);
  const std::string canon = canonical_form(underlying_ocd(ad));
  for (int i = 0; i < 50; ++i)
    CHECK(canonical_form(underlying_ocd(testing::random_reencoding(rng, ad))) == canon);
}

TEST_CASE("crossing_sign reads the base endpoint") {
  CHECK(crossing_sign(parse_code("A+o A-u", CodeKind::arrow), "A") == +1);
  CHECK(crossing_sign(parse_code("A-o A+u", CodeKind::arrow), "A") == -1);
  CHECK(crossing_sign(parse_code("A+o | A-u", CodeKind::arrow), "A") == +1);
  CHECK_THROWS_AS(crossing_sign(parse_code("A+o A-u", CodeKind::arrow), "Z"), code_error);
}

TEST_CASE("writhe sums crossing signs") {
  CHECK(writhe(parse_code("A+o | A-u", CodeKind::arrow)) == +1);
  CHECK(writhe(parse_code("", CodeKind::arrow)) == 0);
  CHECK(writhe(make_Kn(1)) == 0);
  CHECK(writhe(parse_code("A+o B-u C+o A-u B+o C-u", CodeKind::arrow)) == +3);
}

TEST_CASE("genus by face tracing matches hand-traced anchors") {
  // classical trefoil shadow: V=3, E=6, hand trace gives F=5, so genus 0
  Diagram trefoil = parse_code("A+ B- C+ A- B+ C-", CodeKind::ocd);
  CHECK(genus(trefoil) == 0);
  CHECK(is_classical_realizable(trefoil));

  // virtual trefoil shadow: V=2, E=4, hand trace gives F=2, so genus 1
  Diagram vt = underlying_ocd(parse_code("A+o B+o A-u B-u", CodeKind::arrow));
  CHECK(genus(vt) == 1);
  CHECK_FALSE(is_classical_realizable(vt));

  CHECK(genus(parse_code("", CodeKind::ocd)) == 0);
  CHECK(genus(parse_code("A+ A-", CodeKind::ocd)) == 0);
  CHECK(genus(parse_code("A+ | A-", CodeKind::ocd)) == 1);  // virtual Hopf shadow
  CHECK(genus(parse_code("A+ A- | ", CodeKind::ocd)) == 0);
}

TEST_CASE("genus is constant on the code orbit") {
  std::mt19937 rng(321);
  for (const char* code : {"A+ B+ A- B-", "A+ B- C+ A- B+ C-", "A+ B+ | A- B-"}) {
    Diagram d = parse_code(code, CodeKind::ocd);
    const int g = genus(d);
    for (int i = 0; i < 40; ++i) CHECK(genus(testing::random_reencoding(rng, d)) == g);
  }
}
