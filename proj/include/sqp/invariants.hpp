#pragma once

#include "sqp/band_words.hpp"
#include "sqp/fence.hpp"
#include "sqp/laurent.hpp"

namespace sqp {

/// Symmetric pairwise linking numbers of the closure components, zero
/// diagonal, indexed by closure component labels.
struct LinkingMatrix {
  IntMatrix entries;

  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;
};

/// normalize(det(V - t V^T)). Zero polynomial possible for links; the 0x0
/// matrix gives 1.
LaurentPoly alexander_from_seifert(const SeifertMatrix& V);

/// Raw det(V - t V^T), not normalized (may be zero).
LaurentPoly seifert_alexander_raw(const SeifertMatrix& V);

/// Product of the reduced Burau images of the letters, (n-1)x(n-1).
PolyMatrix burau_reduced(const ArtinWord& b);

/// normalize(det(burau(b) - I) (1-t)/(1-t^n)); throws NotCoprimePermutation
/// if the exact division fails, ZeroPolynomial for split closures.
LaurentPoly alexander_from_burau(const ArtinWord& b);

/// Same, but returns the raw (possibly zero) polynomial before normalizing.
LaurentPoly burau_alexander_raw(const ArtinWord& b);

/// normalize(p), except the zero polynomial passes through unchanged.
/// Comparison helper for links whose Alexander polynomial vanishes.
LaurentPoly normalized_or_zero(const LaurentPoly& p);

/// Signature of V + V^T, exact over the rationals.
int signature(const SeifertMatrix& V);
int signature_of_symmetric(const IntMatrix& sym);

LinkingMatrix linking_matrix(const BandWord& w);

/// Braid word of one closure component: delete every strand outside the
/// component and every crossing touching a deleted strand.
ArtinWord extract_component(const BandWord& w, int component);

}  // namespace sqp
