#pragma once

#include <string>
#include <vector>

#include "sqp/band_words.hpp"
#include "sqp/laurent.hpp"

namespace sqp {

/// A validated strongly quasipositive word whose canonical surface is a
/// connected zero-framed annulus.
struct AnnulusEntry {
  std::string name;
  BandWord word;
  std::string declared_core;  // free-text knot name, a claim, not checked
  std::string provenance;
};

/// Annulus word in which every strand has valence exactly 2 in the Seifert
/// graph; then letters == strands and exactly two letters have lower == 1.
struct ReducedAnnulus {
  BandWord word;
};

/// Checks all three entry invariants; throws NotSQP, NotAnAnnulus, or
/// NonZeroFraming (in that order of precedence).
AnnulusEntry validate_annulus(const BandWord& word, const std::string& name,
                              const std::string& declared_core,
                              const std::string& provenance = "");

/// Normalized Alexander polynomial of one closure component (both components
/// of an annulus have the core's knot type). A heuristic witness for
/// declared_core.
LaurentPoly core_alexander(const AnnulusEntry& entry);

/// Markov destabilization: repeatedly delete the unique letter at the
/// smallest valence-1 strand and renumber. Preserves the closure link.
ReducedAnnulus markov_reduce(const BandWord& word);

/// Cut the annulus open along strand 1: the first a(1,j) becomes a(2,j+1),
/// the other a(1,j') becomes a(1,j'+1), everything else shifts by (1,1).
/// The result is a disc word on one more strand.
BandWord cut_annulus(const ReducedAnnulus& r);

/// Named annulus entries: one built-in ("trefoil_T23") plus an optional
/// directory store holding one JSON document per entry.
class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::string store_dir);

  AnnulusEntry get(const std::string& name) const;  // throws UnknownEntry
  std::vector<std::string> list() const;            // sorted, built-in included

  /// Validates, then writes <store>/<name>.json. Throws ValidationFailed
  /// (wrapping the invariant that failed) or StoreIOError.
  AnnulusEntry add(const std::string& name, const BandWord& word,
                   const std::string& declared_core,
                   const std::string& provenance = "");

  static AnnulusEntry builtin_trefoil();

 private:
  std::string store_;
};

}  // namespace sqp
