#pragma once

#include <random>
#include <string>

#include "sqp/annulus.hpp"
#include "sqp/band_words.hpp"

namespace sqp {

/// Outcome of one property check; detail is empty on success.
struct CheckResult {
  bool ok = true;
  std::string detail;
};

/// Uniform-ish random band word; may have a disconnected canonical surface.
/// Uses explicit modulo on the raw engine output so sequences are identical
/// across standard libraries.
BandWord random_band_word(std::mt19937& rng, int max_strands = 6,
                          int max_letters = 10);

/// Retries random_band_word until the canonical surface is connected.
BandWord random_connected_word(std::mt19937& rng, int max_strands = 6,
                               int max_letters = 10);

/// Applies `count` Markov stabilizations at random strand slots and word
/// positions (positive bands, so strong quasipositivity is preserved).
BandWord random_stabilization(const BandWord& w, std::mt19937& rng, int count);

/// Seifert-route vs Burau-route Alexander agreement:
/// det(V - tV^T) ≐ det(burau - I)(1-t)/(1-t^n) · (1-t)^{m-1}.
CheckResult check_alexander_oracles(const BandWord& w);

/// Full invariance suite for rudolph_transform with one broadcast companion:
/// SQP output, strand/letter/b1/component accounting, Seifert matrix equality
/// over the mapped basis, Alexander/signature/linking preservation.
CheckResult check_transform_invariance(const BandWord& w,
                                       const AnnulusEntry& companion);

/// Stabilize an annulus word `stabilizations` times, reduce, and compare
/// valences, framing, closure components, and core Alexander polynomial.
CheckResult check_markov_soundness(const BandWord& annulus_word,
                                   std::mt19937& rng, int stabilizations);

}  // namespace sqp
