#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <random>

#include "doctest.h"
#include "sqp/annulus.hpp"
#include "sqp/corpus.hpp"
#include "sqp/fence.hpp"
#include "sqp/invariants.hpp"

using namespace sqp;
namespace fs = std::filesystem;

namespace {
const char* kAnnulusWord = "strands: 6\na(2,6) a(1,4) a(2,5) a(4,6) a(3,5) a(1,3)";
}

TEST_CASE("the built-in annulus word validates") {
  const AnnulusEntry e =
      validate_annulus(parse_band_word(kAnnulusWord), "trefoil_T23", "T(2,3)");
  CHECK(e.word.strands == 6);
  const LaurentPoly trefoil =
      LaurentPoly(1) - LaurentPoly::t() + LaurentPoly::monomial(1, 2);
  CHECK(core_alexander(e) == trefoil);
}

TEST_CASE("validation failure modes, in precedence order") {
  CHECK_THROWS_AS(validate_annulus(parse_band_word("strands: 2\na(1,2)^-1 a(1,2)^-1"),
                                   "", ""),
                  NotSQP);
  CHECK_THROWS_AS(validate_annulus(parse_band_word("strands: 2\na(1,2)"), "", ""),
                  NotAnAnnulus);
  CHECK_THROWS_AS(validate_annulus(parse_band_word("strands: 4\na(1,2) a(1,2) a(3,4) a(3,4)"),
                                   "", ""),
                  NotAnAnnulus);
  try {
    validate_annulus(parse_band_word("strands: 2\na(1,2) a(1,2)"), "", "");
    FAIL("expected NonZeroFraming");
  } catch (const NonZeroFraming& e) {
    CHECK(e.framing == -1);
  }
}

TEST_CASE("markov reduction undoes stabilizations") {
  const BandWord base = parse_band_word(kAnnulusWord);
  CHECK(markov_reduce(base).word == base);

  const BandWord once =
      parse_band_word("strands: 7\na(2,6) a(1,4) a(2,5) a(4,6) a(3,5) a(1,3) a(6,7)");
  CHECK(markov_reduce(once).word == base);

  const BandWord twice = parse_band_word(
      "strands: 8\na(2,6) a(1,4) a(2,5) a(4,6) a(3,5) a(1,3) a(6,7) a(7,8)");
  CHECK(markov_reduce(twice).word == base);
}

TEST_CASE("markov reduction rejects isolated strands") {
  CHECK_THROWS_AS(markov_reduce(parse_band_word("strands: 3\na(1,2) a(1,2)")),
                  IsolatedStrand);
}

TEST_CASE("cut_annulus golden words") {
  // Word order from the rotated listing: first a(1,j) is a(1,4).
  const ReducedAnnulus rotated{
      parse_band_word("strands: 6\na(1,4) a(2,5) a(4,6) a(3,5) a(1,3) a(2,6)")};
  CHECK(render_band_word(cut_annulus(rotated)) ==
        "strands: 7\na(2,5) a(3,6) a(5,7) a(4,6) a(1,4) a(3,7)");

  const ReducedAnnulus catalog_order{parse_band_word(kAnnulusWord)};
  CHECK(render_band_word(cut_annulus(catalog_order)) ==
        "strands: 7\na(3,7) a(2,5) a(3,6) a(5,7) a(4,6) a(1,4)");
}

TEST_CASE("cut_annulus output is a positive disc word") {
  const BandWord v = cut_annulus(ReducedAnnulus{parse_band_word(kAnnulusWord)});
  CHECK(is_strongly_quasipositive(v));
  CHECK(v.strands == 7);
  CHECK(v.letters.size() == 6);
  const SurfaceStats st = surface_stats(v);
  CHECK(st.b1 == 0);
  CHECK(st.surface_components == 1);
}

TEST_CASE("catalog built-in and store behavior") {
  const fs::path store = fs::temp_directory_path() / "sqp_catalog_test";
  fs::remove_all(store);
  Catalog cat(store.string());

  CHECK(cat.list() == std::vector<std::string>{"trefoil_T23"});
  CHECK(cat.get("trefoil_T23").word == parse_band_word(kAnnulusWord));
  CHECK_THROWS_AS(cat.get("nonexistent"), UnknownEntry);
  CHECK_THROWS_AS(cat.add("hopf", parse_band_word("strands: 2\na(1,2) a(1,2)"),
                          "hopf band"),
                  ValidationFailed);

  cat.add("trefoil_copy", parse_band_word(kAnnulusWord), "T(2,3)", "test copy");
  CHECK(cat.list() == std::vector<std::string>{"trefoil_T23", "trefoil_copy"});
  const Catalog reopened(store.string());
  CHECK(reopened.get("trefoil_copy").word == parse_band_word(kAnnulusWord));
  CHECK(reopened.get("trefoil_copy").declared_core == "T(2,3)");
  fs::remove_all(store);
}

TEST_CASE("markov soundness on randomly stabilized annuli") {
  std::mt19937 rng(37);
  const BandWord base = parse_band_word(kAnnulusWord);
  for (int k = 0; k < 20; ++k) {
    const CheckResult r = check_markov_soundness(base, rng, 1 + k % 4);
    CHECK_MESSAGE(r.ok, r.detail);
  }
}
