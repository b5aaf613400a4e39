#pragma once

#include <string>
#include <vector>

#include "sqp/errors.hpp"

namespace sqp {

/// A band generator a(lower,upper)^sign joining strands lower < upper,
/// passing in front of the strands strictly between them.
struct BandLetter {
  int lower = 1;
  int upper = 2;
  int sign = +1;  // +1 or -1

  friend bool operator==(const BandLetter&, const BandLetter&) = default;
};

/// A band-generator braid word. Letter order is significant: the first
/// letter is the bottom band of the fence diagram.
struct BandWord {
  int strands = 1;
  std::vector<BandLetter> letters;

  friend bool operator==(const BandWord&, const BandWord&) = default;
};

struct ArtinLetter {
  int index = 1;  // 1 <= index <= strands-1
  int sign = +1;

  friend bool operator==(const ArtinLetter&, const ArtinLetter&) = default;
};

struct ArtinWord {
  int strands = 1;
  std::vector<ArtinLetter> letters;

  friend bool operator==(const ArtinWord&, const ArtinWord&) = default;
};

/// Components of the braid closure. Labels are 1..components, numbered by
/// the smallest strand in each permutation cycle.
struct ClosureSummary {
  int components = 1;
  std::vector<int> strand_component;  // size strands, 1-based labels

  int label(int strand) const { return strand_component.at(strand - 1); }
};

void validate(const BandWord& w);  // throws PreconditionViolated on bad indices

BandWord parse_band_word(const std::string& text);
std::string render_band_word(const BandWord& w);

ArtinWord artin_expand(const BandWord& w);

/// Strand permutation of the braid (composing letter transpositions in word
/// order): perm[s-1] is where strand s, entering at the bottom, exits.
std::vector<int> closure_permutation(const BandWord& w);
std::vector<int> closure_permutation(const ArtinWord& w);

ClosureSummary closure_summary(const BandWord& w);

bool is_strongly_quasipositive(const BandWord& w);

/// 1-based positions of the negative letters g_1..g_t, in word order.
std::vector<int> negative_positions(const BandWord& w);

}  // namespace sqp
