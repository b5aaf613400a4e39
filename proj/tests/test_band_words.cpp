#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sqp/band_words.hpp"

using namespace sqp;

namespace {
const char* kAnnulusWord = "strands: 6\na(2,6) a(1,4) a(2,5) a(4,6) a(3,5) a(1,3)";
}

TEST_CASE("parse and render round-trip") {
  const BandWord w = parse_band_word(kAnnulusWord);
  CHECK(w.strands == 6);
  CHECK(w.letters.size() == 6);
  CHECK(w.letters[0] == BandLetter{2, 6, +1});
  CHECK(parse_band_word(render_band_word(w)) == w);
}

TEST_CASE("parser accepts comments and odd whitespace") {
  const BandWord w = parse_band_word(
      "# a header comment\n strands:   3 \n a(1,2)^-1 # trailing\n\ta(1,3)\n");
  CHECK(w.strands == 3);
  REQUIRE(w.letters.size() == 2);
  CHECK(w.letters[0] == BandLetter{1, 2, -1});
  CHECK(w.letters[1] == BandLetter{1, 3, +1});
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_band_word("a(1,2)"), ParseError);
  CHECK_THROWS_AS(parse_band_word("strands: 2\na(2,1)"), ParseError);
  CHECK_THROWS_AS(parse_band_word("strands: 2\na(1,3)"), ParseError);
  CHECK_THROWS_AS(parse_band_word("strands: 0"), ParseError);
  try {
    parse_band_word("strands: 2\nb(1,2)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 11);
  }
}

TEST_CASE("artin expansion of band generators") {
  const BandWord w = parse_band_word("strands: 3\na(1,2) a(1,3)^-1");
  const ArtinWord a = artin_expand(w);
  REQUIRE(a.letters.size() == 4);  // 1 + 3
  CHECK(a.letters[0] == ArtinLetter{1, +1});
  CHECK(a.letters[1] == ArtinLetter{1, +1});
  CHECK(a.letters[2] == ArtinLetter{2, -1});
  CHECK(a.letters[3] == ArtinLetter{1, -1});
}

TEST_CASE("expansion length is 2(upper-lower)-1") {
  for (int j = 2; j <= 6; ++j) {
    BandWord w;
    w.strands = 6;
    w.letters = {{1, j, +1}};
    CHECK(artin_expand(w).letters.size() == static_cast<std::size_t>(2 * (j - 1) - 1));
  }
}

TEST_CASE("closure permutation matches the artin expansion") {
  const BandWord w = parse_band_word(kAnnulusWord);
  CHECK(closure_permutation(w) == closure_permutation(artin_expand(w)));
}

TEST_CASE("annulus word closes to two components") {
  const ClosureSummary cs = closure_summary(parse_band_word(kAnnulusWord));
  CHECK(cs.components == 2);
}

TEST_CASE("band generator acts as a transposition") {
  const BandWord w = parse_band_word("strands: 4\na(2,4)");
  const auto perm = closure_permutation(w);
  CHECK(perm == std::vector<int>{1, 4, 3, 2});
}

TEST_CASE("sqp flag and negative positions") {
  const BandWord w = parse_band_word("strands: 3\na(1,2)^-1 a(1,3)^-1 a(1,2) a(1,3)");
  CHECK_FALSE(is_strongly_quasipositive(w));
  CHECK(negative_positions(w) == std::vector<int>{1, 2});
  CHECK(is_strongly_quasipositive(parse_band_word(kAnnulusWord)));
  CHECK(negative_positions(parse_band_word(kAnnulusWord)).empty());
}

TEST_CASE("validate rejects malformed words") {
  BandWord w;
  w.strands = 2;
  w.letters = {{2, 1, +1}};
  CHECK_THROWS_AS(validate(w), PreconditionViolated);
  w.letters = {{1, 2, 3}};
  CHECK_THROWS_AS(validate(w), PreconditionViolated);
}
