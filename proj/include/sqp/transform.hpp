#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sqp/annulus.hpp"
#include "sqp/band_words.hpp"
#include "sqp/fence.hpp"

namespace sqp {

/// One negative-letter replacement. Positions and strands refer to the word
/// the step was applied to; the strand remap is x -> x for x <= p,
/// x -> x + n_A for x > p.
struct ReplacementStep {
  int replaced_position = 1;  // 1-based letter index of the negative letter g
  int p = 1, q = 2;           // endpoints of g
  std::string annulus;        // catalog name of the companion entry
  int n_A = 0;                // strands of the reduced annulus word
  /// shift_{p-1}(cut_annulus(reduced)) followed by the closing letter
  /// a(p+1, q+n_A); n_A + 1 positive letters forming a tree in the Seifert
  /// graph of the output.
  std::vector<BandLetter> inserted_block;

  friend bool operator==(const ReplacementStep&, const ReplacementStep&) = default;
};

struct TransformCertificate {
  BandWord input;
  BandWord output;
  /// Execution order: last-appearing negative letter first (g_t, ..., g_1).
  std::vector<ReplacementStep> steps;
  /// Companion names in appearance order (g_1, ..., g_t) — the satellite
  /// companions K_1, ..., K_t.
  std::vector<std::string> companions;
};

/// Replace the negative letter at g_pos (1-based) by the cut-open annulus
/// block. Throws NotNegative or InvalidAnnulus.
std::pair<BandWord, ReplacementStep> replace_one(const BandWord& w, int g_pos,
                                                 const AnnulusEntry& a);

/// Replay a recorded step on the word it was applied to.
BandWord apply_step(const BandWord& w, const ReplacementStep& step);

/// Iterated replacement of every negative letter, last-appearing first.
/// companions: one entry per negative letter in appearance order, or a single
/// entry broadcast to all of them. Throws DisconnectedSurface, ArityMismatch,
/// InvalidAnnulus.
std::pair<BandWord, TransformCertificate> rudolph_transform(
    const BandWord& w, const std::vector<AnnulusEntry>& companions);

/// Push a cycle basis of the input through the recorded steps: surviving
/// letters keep their roles under the index shifts, and a traversal of a
/// replaced letter is rerouted along the tree path through the inserted
/// block. Throws CertificateMismatch.
CycleBasis map_basis(const TransformCertificate& cert, const CycleBasis& basis);

/// Companion names in the satellite order K_1..K_t (reverse of execution
/// order).
std::vector<std::string> satellite_trace(const TransformCertificate& cert);

/// Where each input strand ends up in the output: entry s-1 is the image of
/// strand s under the composed per-step remaps.
std::vector<int> strand_map(const TransformCertificate& cert);

/// Closure component labels permute when strands are renumbered; this is the
/// induced map from input component labels to output component labels
/// (1-based, index c-1 holds the image of label c).
std::vector<int> component_map(const TransformCertificate& cert);

nlohmann::ordered_json certificate_json(const TransformCertificate& cert);

}  // namespace sqp
