#pragma once

#include <optional>
#include <vector>

#include "sqp/band_words.hpp"

namespace sqp {

/// Multigraph of the canonical (fence) surface: one vertex per strand disk,
/// one edge per band, stacked by letter order (height = 1-based letter index).
struct SeifertGraph {
  struct Edge {
    int a = 1, b = 2;  // a < b, strand indices
    int sign = +1;
    int height = 1;  // 1-based letter index
  };
  int vertices = 1;
  std::vector<Edge> edges;

  std::vector<int> valences() const;
};

struct SurfaceStats {
  int b1 = 0;
  int surface_components = 1;
  int euler = 1;
  int boundary_components = 1;
  std::optional<int> genus_if_connected;
};

/// One pass of a cycle through a band. forward means lower -> upper strand.
struct Traversal {
  int letter = 0;  // 0-based index into the word
  bool forward = true;

  friend bool operator==(const Traversal&, const Traversal&) = default;
};

/// A closed route on the canonical surface: a cyclic sequence of band
/// traversals; the disk runs between consecutive bands are implied.
struct Cycle {
  std::vector<Traversal> steps;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct CycleBasis {
  std::vector<Cycle> cycles;
  /// 0-based letter index of the defining chord of each cycle; -1 for cycles
  /// produced by rerouting (mapped bases).
  std::vector<int> chords;
};

using IntMatrix = std::vector<std::vector<long long>>;

struct SeifertMatrix {
  IntMatrix entries;
  CycleBasis basis;

  std::size_t size() const { return entries.size(); }
};

SeifertGraph seifert_graph(const BandWord& w);
SurfaceStats surface_stats(const BandWord& w);

/// Number of connected pieces of the canonical surface.
int surface_component_count(const BandWord& w);

/// Deterministic chord/tree basis of H1: spanning tree by first-seen letters,
/// one cycle per chord in word order. Throws DisconnectedSurface.
CycleBasis cycle_basis(const BandWord& w);

/// Seifert pairing V[a][b] = lk(c_a^+, c_b) over the given basis, computed by
/// exact crossing counts on the fence diagram (bands pass in front of disks,
/// hooked ends carry the half twists, push-offs on the positive-normal side).
SeifertMatrix seifert_matrix(const BandWord& w, const CycleBasis& basis);

/// Algebraic intersection numbers of the basis cycles on the surface.
/// Equals V - V^T.
IntMatrix intersection_form(const BandWord& w, const CycleBasis& basis);

/// Single Seifert-matrix entry of a connected b1 = 1 word. Throws NotAnAnnulus.
long long framing(const BandWord& w);

}  // namespace sqp
