#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sqp/corpus.hpp"
#include "sqp/fence.hpp"
#include "sqp/invariants.hpp"
#include "sqp/transform.hpp"

using namespace sqp;

namespace {

const char* kInputWord = "strands: 3\na(1,2)^-1 a(1,3)^-1 a(1,2) a(1,3)";
const char* kStepWord =
    "strands: 9\n"
    "a(1,8)^-1 a(3,7) a(2,5) a(3,6) a(5,7) a(4,6) a(1,4) a(2,9) a(1,8) a(1,9)";

AnnulusEntry trefoil() { return Catalog::builtin_trefoil(); }

}  // namespace

TEST_CASE("replace_one golden step") {
  const auto [out, step] = replace_one(parse_band_word(kInputWord), 2, trefoil());
  CHECK(out == parse_band_word(kStepWord));
  CHECK(step.replaced_position == 2);
  CHECK(step.p == 1);
  CHECK(step.q == 3);
  CHECK(step.n_A == 6);
  CHECK(step.annulus == "trefoil_T23");
  REQUIRE(step.inserted_block.size() == 7);
  CHECK(step.inserted_block.back() == BandLetter{2, 9, +1});
  CHECK(apply_step(parse_band_word(kInputWord), step) == out);
}

TEST_CASE("replace_one rejects positive letters") {
  CHECK_THROWS_AS(replace_one(parse_band_word(kInputWord), 3, trefoil()), NotNegative);
}

TEST_CASE("replace_one rejects non-annulus companions") {
  AnnulusEntry bad = trefoil();
  bad.word = parse_band_word("strands: 2\na(1,2) a(1,2)");
  CHECK_THROWS_AS(replace_one(parse_band_word(kInputWord), 2, bad), InvalidAnnulus);
}

TEST_CASE("adjacent endpoints give the closing letter a(p+1, p+1+n_A)") {
  const BandWord w = parse_band_word("strands: 2\na(1,2) a(1,2)^-1");
  const auto [out, step] = replace_one(w, 2, trefoil());
  CHECK(step.inserted_block.back() == BandLetter{2, 8, +1});
  CHECK(out.strands == 8);
  CHECK(out.letters.size() == 8);
}

TEST_CASE("full transform of the two-negative word") {
  const BandWord w = parse_band_word(kInputWord);
  const auto [out, cert] = rudolph_transform(w, {trefoil()});
  CHECK(out.strands == 15);
  CHECK(out.letters.size() == 16);
  CHECK(is_strongly_quasipositive(out));
  REQUIRE(cert.steps.size() == 2);
  CHECK(cert.steps[0].replaced_position == 2);  // last negative first
  CHECK(apply_step(w, cert.steps[0]) == parse_band_word(kStepWord));
  CHECK(satellite_trace(cert) == std::vector<std::string>{"trefoil_T23", "trefoil_T23"});
}

TEST_CASE("all-positive input is a fixed point with an empty certificate") {
  const BandWord w = parse_band_word("strands: 3\na(1,3) a(1,2) a(2,3)");
  const auto [out, cert] = rudolph_transform(w, {trefoil()});
  CHECK(out == w);
  CHECK(cert.steps.empty());
  CHECK(cert.companions.empty());
  CHECK(satellite_trace(cert).empty());
  const CycleBasis basis = cycle_basis(w);
  const CycleBasis mapped = map_basis(cert, basis);
  CHECK(mapped.cycles == basis.cycles);
  CHECK(mapped.chords == basis.chords);
}

TEST_CASE("arity checking") {
  const BandWord w = parse_band_word(kInputWord);
  CHECK_THROWS_AS(rudolph_transform(w, {trefoil(), trefoil(), trefoil()}),
                  ArityMismatch);
  const auto [out, cert] = rudolph_transform(w, {trefoil(), trefoil()});
  CHECK(out.strands == 15);
}

TEST_CASE("disconnected inputs are rejected") {
  CHECK_THROWS_AS(rudolph_transform(parse_band_word("strands: 4\na(1,2)^-1 a(3,4)"),
                                    {trefoil()}),
                  DisconnectedSurface);
}

TEST_CASE("figure-eight word keeps its invariants") {
  const BandWord w = parse_band_word("strands: 3\na(1,2) a(2,3)^-1 a(1,2) a(2,3)^-1");
  const auto [out, cert] = rudolph_transform(w, {trefoil()});
  CHECK(out.strands == 15);
  CHECK(is_strongly_quasipositive(out));
  const SurfaceStats st = surface_stats(out);
  CHECK(st.b1 == 2);
  const SeifertMatrix v = seifert_matrix(out, map_basis(cert, cycle_basis(w)));
  const LaurentPoly expected =
      LaurentPoly(1) - LaurentPoly::monomial(3, 1) + LaurentPoly::monomial(1, 2);
  CHECK(alexander_from_seifert(v) == expected);
  CHECK(signature(v) == 0);
}

TEST_CASE("minimal cancelling pair preserves the seifert matrix") {
  const BandWord w = parse_band_word("strands: 2\na(1,2) a(1,2)^-1");
  const CheckResult r = check_transform_invariance(w, trefoil());
  CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("invariance suite on random words") {
  std::mt19937 rng(41);
  for (int k = 0; k < 25; ++k) {
    const CheckResult r = check_transform_invariance(random_connected_word(rng), trefoil());
    CHECK_MESSAGE(r.ok, r.detail);
  }
}

TEST_CASE("map_basis rejects foreign bases") {
  const BandWord w = parse_band_word(kInputWord);
  const auto [out, cert] = rudolph_transform(w, {trefoil()});
  CycleBasis bogus;
  bogus.cycles.push_back(Cycle{{Traversal{99, true}}});
  bogus.chords.push_back(99);
  CHECK_THROWS_AS(map_basis(cert, bogus), CertificateMismatch);
}

TEST_CASE("certificate serialization is shaped as documented") {
  const BandWord w = parse_band_word(kInputWord);
  const auto [out, cert] = rudolph_transform(w, {trefoil()});
  const auto doc = certificate_json(cert);
  CHECK(doc.at("steps").size() == 2);
  CHECK(doc.at("companions").size() == 2);
  CHECK(doc.at("steps")[0].at("n_A") == 6);
  CHECK(doc.at("steps")[0].at("inserted_block").size() == 7);
  CHECK(doc.at("basis_map").size() == cycle_basis(w).cycles.size());
  CHECK(doc.at("input").get<std::string>() == render_band_word(w));
  CHECK(doc.at("output").get<std::string>() == render_band_word(out));
}
