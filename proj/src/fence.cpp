#include "sqp/fence.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <stdexcept>

namespace sqp {

std::vector<int> SeifertGraph::valences() const {
  std::vector<int> v(vertices, 0);
  for (const auto& e : edges) {
    ++v[e.a - 1];
    ++v[e.b - 1];
  }
  return v;
}

SeifertGraph seifert_graph(const BandWord& w) {
  validate(w);
  SeifertGraph g;
  g.vertices = w.strands;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    const auto& l = w.letters[k];
    g.edges.push_back({l.lower, l.upper, l.sign, static_cast<int>(k) + 1});
  }
  return g;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

int surface_component_count(const BandWord& w) {
  UnionFind uf(w.strands);
  int comps = w.strands;
  for (const auto& l : w.letters)
    if (uf.unite(l.lower - 1, l.upper - 1)) --comps;
  return comps;
}

SurfaceStats surface_stats(const BandWord& w) {
  validate(w);
  SurfaceStats st;
  const int letters = static_cast<int>(w.letters.size());
  st.surface_components = surface_component_count(w);
  st.euler = w.strands - letters;
  st.b1 = letters - w.strands + st.surface_components;
  st.boundary_components = closure_summary(w).components;
  if (st.surface_components == 1) {
    const int twog = 2 - st.euler - st.boundary_components;
    assert(twog % 2 == 0 && twog >= 0);
    st.genus_if_connected = twog / 2;
  }
  return st;
}

CycleBasis cycle_basis(const BandWord& w) {
  validate(w);
  if (surface_component_count(w) != 1) throw DisconnectedSurface();

  const int n = w.strands;
  UnionFind uf(n);
  std::vector<bool> is_tree(w.letters.size(), false);
  // adjacency over tree edges: strand -> (neighbor strand, letter)
  std::vector<std::vector<std::pair<int, int>>> adj(n + 1);
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    const auto& l = w.letters[k];
    if (uf.unite(l.lower - 1, l.upper - 1)) {
      is_tree[k] = true;
      adj[l.lower].push_back({l.upper, static_cast<int>(k)});
      adj[l.upper].push_back({l.lower, static_cast<int>(k)});
    }
  }

  CycleBasis basis;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (is_tree[k]) continue;
    const int from = w.letters[k].upper;  // chord traversed lower -> upper
    const int to = w.letters[k].lower;
    // unique tree path from `from` back to `to`
    std::vector<int> prev_strand(n + 1, 0), prev_letter(n + 1, -1);
    std::queue<int> q;
    q.push(from);
    prev_strand[from] = from;
    while (!q.empty()) {
      int s = q.front();
      q.pop();
      if (s == to) break;
      for (auto [nb, letter] : adj[s])
        if (prev_strand[nb] == 0) {
          prev_strand[nb] = s;
          prev_letter[nb] = letter;
          q.push(nb);
        }
    }
    assert(prev_strand[to] != 0);
    std::vector<Traversal> back;
    for (int s = to; s != from; s = prev_strand[s]) {
      const int letter = prev_letter[s];
      // traversed from prev_strand[s] to s
      const bool fwd = (w.letters[letter].lower == prev_strand[s]);
      back.push_back({letter, fwd});
    }
    Cycle c;
    c.steps.push_back({static_cast<int>(k), true});
    c.steps.insert(c.steps.end(), back.rbegin(), back.rend());
    basis.cycles.push_back(std::move(c));
    basis.chords.push_back(static_cast<int>(k));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Seifert pairing by exact crossing counts.
//
// The fence diagram lives in the plane: disk s is the vertical line x = s,
// the band of letter k runs horizontally at height k from disk lower to disk
// upper, passing in front of every disk strictly between and of the upper
// disk itself, then hooks (up for a positive band, down for a negative one)
// and attaches to the upper disk from the right. The surface is the
// blackboard-framed thickening, so the push-off of a cycle projects onto the
// cycle itself and every linking contribution is a crossing of the drawn
// diagram: either a band passing in front of a disk run, or two routes
// meeting inside a shared disk corridor (where the pushed-off curve is the
// over-strand). Coordinates are scaled integers, all segments axis-aligned,
// so the counts are exact.
// ---------------------------------------------------------------------------

namespace {

constexpr long long kUnit = 1000;  // per strand / per height unit
constexpr long long kWall = 100;   // right wall of a disk

struct Seg {
  long long x1, y1, x2, y2;
  bool band;     // band corridor (else disk corridor)
  int corridor;  // letter index for bands, strand index for disks

  int dx() const { return (x2 > x1) - (x2 < x1); }
  int dy() const { return (y2 > y1) - (y2 < y1); }
};

struct Route {
  std::vector<Seg> segs;
};

// Strict interior crossing of a horizontal and a vertical segment.
bool crosses(const Seg& a, const Seg& b, const Seg** hor, const Seg** ver) {
  const bool a_h = (a.y1 == a.y2);
  const bool b_h = (b.y1 == b.y2);
  if (a_h == b_h) {
    // Parallel segments in our diagrams never overlap transversally; distinct
    // lanes keep them at distinct coordinates.
    return false;
  }
  *hor = a_h ? &a : &b;
  *ver = a_h ? &b : &a;
  const long long hx_lo = std::min((*hor)->x1, (*hor)->x2);
  const long long hx_hi = std::max((*hor)->x1, (*hor)->x2);
  const long long vy_lo = std::min((*ver)->y1, (*ver)->y2);
  const long long vy_hi = std::max((*ver)->y1, (*ver)->y2);
  return hx_lo < (*ver)->x1 && (*ver)->x1 < hx_hi && vy_lo < (*hor)->y1 &&
         (*hor)->y1 < vy_hi;
}

int crossing_sign(const Seg& over, const Seg& under) {
  return over.dx() * under.dy() - over.dy() * under.dx();
}

// Builds the explicit planar route of one cycle. `lane` separates parallel
// traversals of shared corridors between the routed cycles; `off` is the
// in-disk lane of the vertical runs.
Route build_route(const BandWord& w, const Cycle& cycle, long long lane, long long off) {
  if (cycle.steps.size() < 2)
    throw PreconditionViolated("a cycle needs at least two band traversals");
  std::set<int> letters_seen;
  std::set<int> strands_seen;

  struct BandPiece {
    std::vector<Seg> segs;
    int entry_strand, exit_strand;
    long long entry_y, exit_y;
  };
  std::vector<BandPiece> pieces;
  for (const auto& t : cycle.steps) {
    if (!letters_seen.insert(t.letter).second)
      throw PreconditionViolated("cycle traverses a band twice");
    const auto& l = w.letters.at(t.letter);
    const long long h = (t.letter + 1) * kUnit;
    const long long yL = h + lane;
    const long long yR = h + 100 * l.sign - lane;
    const long long hook_r = 150 - lane * l.sign;
    const long long ax = l.lower * kUnit + kWall;
    const long long bx = l.upper * kUnit + 200 + hook_r;
    const long long dx = l.upper * kUnit + kWall;
    BandPiece p;
    if (t.forward) {
      p.segs = {{ax, yL, bx, yL, true, t.letter},
                {bx, yL, bx, yR, true, t.letter},
                {bx, yR, dx, yR, true, t.letter}};
      p.entry_strand = l.lower;
      p.entry_y = yL;
      p.exit_strand = l.upper;
      p.exit_y = yR;
    } else {
      p.segs = {{dx, yR, bx, yR, true, t.letter},
                {bx, yR, bx, yL, true, t.letter},
                {bx, yL, ax, yL, true, t.letter}};
      p.entry_strand = l.upper;
      p.entry_y = yR;
      p.exit_strand = l.lower;
      p.exit_y = yL;
    }
    pieces.push_back(std::move(p));
  }

  Route route;
  const std::size_t m = pieces.size();
  for (std::size_t r = 0; r < m; ++r) {
    const auto& cur = pieces[r];
    const auto& nxt = pieces[(r + 1) % m];
    if (cur.exit_strand != nxt.entry_strand)
      throw PreconditionViolated("cycle traversals do not chain");
    if (!strands_seen.insert(cur.exit_strand).second)
      throw PreconditionViolated("cycle visits a disk twice");
    route.segs.insert(route.segs.end(), cur.segs.begin(), cur.segs.end());
    const int s = cur.exit_strand;
    const long long wall = s * kUnit + kWall;
    const long long run = s * kUnit + off;
    const long long y1 = cur.exit_y;
    const long long y2 = nxt.entry_y;
    route.segs.push_back({wall, y1, run, y1, false, s});
    route.segs.push_back({run, y1, run, y2, false, s});
    route.segs.push_back({run, y2, wall, y2, false, s});
  }
  return route;
}

// Self-pairing lk(c^+, c): only band-over-disk self-crossings contribute
// (surface-level self-crossings cancel against the push-off).
long long diagonal_entry(const Route& r) {
  long long sum = 0;
  for (std::size_t i = 0; i < r.segs.size(); ++i)
    for (std::size_t j = i + 1; j < r.segs.size(); ++j) {
      const Seg *hor, *ver;
      if (!crosses(r.segs[i], r.segs[j], &hor, &ver)) continue;
      const Seg& a = r.segs[i];
      const Seg& b = r.segs[j];
      if (a.band == b.band) {
        if (a.band) throw std::logic_error("band corridors of one route crossed");
        continue;  // same-surface self-crossing: no net contribution
      }
      const Seg& band = a.band ? a : b;
      const Seg& disk = a.band ? b : a;
      sum += crossing_sign(band, disk);
    }
  return sum;
}

struct PairEntries {
  long long v_ab = 0, v_ba = 0;
  long long q_ab = 0;  // surface intersection part alone
};

PairEntries pair_entries(const Route& ra, const Route& rb) {
  PairEntries out;
  for (const auto& a : ra.segs)
    for (const auto& b : rb.segs) {
      const Seg *hor, *ver;
      if (!crosses(a, b, &hor, &ver)) continue;
      if (a.band && b.band)
        throw std::logic_error("band corridors of two routes crossed");
      if (!a.band && !b.band) {
        if (a.corridor != b.corridor)
          throw std::logic_error("disk corridors of distinct strands crossed");
        // Both routes on the surface: the pushed-off copy is the over-strand.
        const long long s = crossing_sign(a, b);
        out.v_ab += s;
        out.v_ba -= s;
        out.q_ab += s;
      } else if (a.band) {
        out.v_ab += crossing_sign(a, b);  // a's band in front of b's disk run
      } else {
        out.v_ba += crossing_sign(b, a);  // b's band in front of a's disk run
      }
    }
  return out;
}

}  // namespace

SeifertMatrix seifert_matrix(const BandWord& w, const CycleBasis& basis) {
  validate(w);
  if (surface_component_count(w) != 1) throw DisconnectedSurface();
  const std::size_t n = basis.cycles.size();
  SeifertMatrix V;
  V.basis = basis;
  V.entries.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    V.entries[i][i] = diagonal_entry(build_route(w, basis.cycles[i], 1, 30));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Route ra = build_route(w, basis.cycles[i], 2, 60);
      const Route rb = build_route(w, basis.cycles[j], 1, 30);
      const PairEntries pe = pair_entries(ra, rb);
      V.entries[i][j] = pe.v_ab;
      V.entries[j][i] = pe.v_ba;
    }
  return V;
}

IntMatrix intersection_form(const BandWord& w, const CycleBasis& basis) {
  validate(w);
  if (surface_component_count(w) != 1) throw DisconnectedSurface();
  const std::size_t n = basis.cycles.size();
  IntMatrix Q(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Route ra = build_route(w, basis.cycles[i], 2, 60);
      const Route rb = build_route(w, basis.cycles[j], 1, 30);
      const PairEntries pe = pair_entries(ra, rb);
      Q[i][j] = pe.q_ab;
      Q[j][i] = -pe.q_ab;
    }
  return Q;
}

long long framing(const BandWord& w) {
  const SurfaceStats st = surface_stats(w);
  if (st.surface_components != 1)
    throw NotAnAnnulus("surface is disconnected");
  if (st.b1 != 1)
    throw NotAnAnnulus("first Betti number is " + std::to_string(st.b1));
  const auto basis = cycle_basis(w);
  return seifert_matrix(w, basis).entries[0][0];
}

}  // namespace sqp
