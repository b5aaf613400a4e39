#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sqp/corpus.hpp"
#include "sqp/fence.hpp"
#include "sqp/invariants.hpp"

using namespace sqp;

namespace {

const char* kAnnulusWord = "strands: 6\na(2,6) a(1,4) a(2,5) a(4,6) a(3,5) a(1,3)";
const char* kTrefoilWord = "strands: 2\na(1,2) a(1,2) a(1,2)";
const char* kFigureEightWord = "strands: 3\na(1,2) a(2,3)^-1 a(1,2) a(2,3)^-1";

LaurentPoly trefoil_delta() {  // 1 - t + t^2
  return LaurentPoly(1) - LaurentPoly::t() + LaurentPoly::monomial(1, 2);
}

SeifertMatrix from_entries(IntMatrix m) {
  SeifertMatrix v;
  v.entries = std::move(m);
  return v;
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
  const LaurentPoly p = LaurentPoly(1) - LaurentPoly::t();
  CHECK((p * p).str() == "1 - 2t + t^2");
  CHECK((p * p).exact_div(p) == p);
  CHECK_THROWS_AS(trefoil_delta().exact_div(p), Error);
  CHECK(LaurentPoly::monomial(2, -3).reversed() == LaurentPoly::monomial(2, 3));
  CHECK(normalize(LaurentPoly::monomial(-1, -2) + LaurentPoly::monomial(1, -1)) ==
        (LaurentPoly(-1) + LaurentPoly::t()) * LaurentPoly(-1));
  CHECK_THROWS_AS(normalize(LaurentPoly(0)), ZeroPolynomial);
}

TEST_CASE("alexander from an explicit trefoil seifert matrix") {
  const SeifertMatrix v = from_entries({{-1, 1}, {0, -1}});
  CHECK(alexander_from_seifert(v) == trefoil_delta());
  CHECK(signature(v) == -2);
}

TEST_CASE("alexander of the empty matrix is 1") {
  CHECK(alexander_from_seifert(from_entries({})) == LaurentPoly(1));
}

TEST_CASE("burau route on sigma_1^3") {
  ArtinWord b;
  b.strands = 2;
  b.letters = {{1, +1}, {1, +1}, {1, +1}};
  CHECK(alexander_from_burau(b) == trefoil_delta());
}

TEST_CASE("burau letters are inverse to each other") {
  ArtinWord b;
  b.strands = 4;
  b.letters = {{1, +1}, {3, -1}, {2, +1}, {2, -1}, {3, +1}, {1, -1}};
  const PolyMatrix m = burau_reduced(b);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      CHECK(m[i][j] == LaurentPoly(i == j ? 1 : 0));
}

TEST_CASE("trefoil word agrees with both oracles") {
  const BandWord w = parse_band_word(kTrefoilWord);
  const SeifertMatrix v = seifert_matrix(w, cycle_basis(w));
  CHECK(alexander_from_seifert(v) == trefoil_delta());
  CHECK(signature(v) == -2);
  CHECK(alexander_from_burau(artin_expand(w)) == trefoil_delta());
}

TEST_CASE("figure-eight word") {
  const BandWord w = parse_band_word(kFigureEightWord);
  const SeifertMatrix v = seifert_matrix(w, cycle_basis(w));
  const LaurentPoly expected =
      LaurentPoly(1) - LaurentPoly::monomial(3, 1) + LaurentPoly::monomial(1, 2);
  CHECK(alexander_from_seifert(v) == expected);
  CHECK(signature(v) == 0);
}

TEST_CASE("signature of simple symmetric matrices") {
  CHECK(signature_of_symmetric({{2}}) == 1);
  CHECK(signature_of_symmetric({{0, 1}, {1, 0}}) == 0);
  CHECK(signature_of_symmetric({{0, 0}, {0, 0}}) == 0);
  CHECK(signature_of_symmetric({{-2, 1}, {1, -2}}) == -2);
  CHECK(signature_of_symmetric({{0, 1, 0}, {1, 0, 0}, {0, 0, 3}}) == 1);
}

TEST_CASE("linking matrix of the positive hopf link") {
  const LinkingMatrix lk = linking_matrix(parse_band_word("strands: 2\na(1,2) a(1,2)"));
  CHECK(lk.entries == IntMatrix{{0, 1}, {1, 0}});
}

TEST_CASE("linking matrix of a knot is the 1x1 zero matrix") {
  const LinkingMatrix lk = linking_matrix(parse_band_word(kTrefoilWord));
  CHECK(lk.entries == IntMatrix{{0}});
}

TEST_CASE("annulus boundary components are trefoils with zero framing meaning") {
  const BandWord w = parse_band_word(kAnnulusWord);
  const ClosureSummary cs = closure_summary(w);
  REQUIRE(cs.components == 2);
  for (int c = 1; c <= 2; ++c)
    CHECK(alexander_from_burau(extract_component(w, c)) == trefoil_delta());
  CHECK(linking_matrix(w).entries == IntMatrix{{0, 0}, {0, 0}});
}

TEST_CASE("extract_component on a split strand gives the unknot") {
  const BandWord w = parse_band_word("strands: 2\na(1,2) a(1,2)");
  const ArtinWord comp = extract_component(w, 1);
  CHECK(comp.strands == 1);
  CHECK(comp.letters.empty());
  CHECK_THROWS_AS(extract_component(w, 3), UnknownComponent);
}

TEST_CASE("alexander oracles agree on random words") {
  std::mt19937 rng(23);
  for (int k = 0; k < 60; ++k) {
    const CheckResult r = check_alexander_oracles(random_connected_word(rng));
    CHECK_MESSAGE(r.ok, r.detail);
  }
}

TEST_CASE("alexander symmetry and determinant condition on random knots") {
  std::mt19937 rng(29);
  int knots = 0;
  while (knots < 25) {
    const BandWord w = random_connected_word(rng);
    if (closure_summary(w).components != 1) continue;
    ++knots;
    const LaurentPoly d = alexander_from_seifert(seifert_matrix(w, cycle_basis(w)));
    CHECK(normalize(d.reversed()) == d);  // Delta(t) = Delta(1/t) up to units
    const long long at1 = d.eval_at_one();
    CHECK((at1 == 1 || at1 == -1));
  }
}
