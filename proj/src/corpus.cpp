#include "sqp/corpus.hpp"

#include <sstream>

#include "sqp/fence.hpp"
#include "sqp/invariants.hpp"
#include "sqp/transform.hpp"

namespace sqp {

namespace {

int pick(std::mt19937& rng, int n) {  // uniform-ish in [0, n)
  return static_cast<int>(rng() % static_cast<unsigned>(n));
}

std::string matrix_str(const IntMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m[i].size(); ++j)
      out << (j ? "," : "") << m[i][j];
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace

BandWord random_band_word(std::mt19937& rng, int max_strands, int max_letters) {
  BandWord w;
  w.strands = 2 + pick(rng, max_strands - 1);
  const int letters = 1 + pick(rng, max_letters);
  for (int k = 0; k < letters; ++k) {
    const int lower = 1 + pick(rng, w.strands - 1);
    const int upper = lower + 1 + pick(rng, w.strands - lower);
    const int sign = pick(rng, 2) ? +1 : -1;
    w.letters.push_back({lower, upper, sign});
  }
  return w;
}

BandWord random_connected_word(std::mt19937& rng, int max_strands,
                               int max_letters) {
  for (;;) {
    BandWord w = random_band_word(rng, max_strands, max_letters);
    if (surface_component_count(w) == 1) return w;
  }
}

BandWord random_stabilization(const BandWord& w, std::mt19937& rng, int count) {
  BandWord out = w;
  for (int k = 0; k < count; ++k) {
    const int s = 1 + pick(rng, out.strands + 1);  // slot of the new strand
    for (auto& l : out.letters) {
      if (l.lower >= s) ++l.lower;
      if (l.upper >= s) ++l.upper;
    }
    ++out.strands;
    int other = 1 + pick(rng, out.strands - 1);
    if (other >= s) ++other;
    const BandLetter extra{std::min(s, other), std::max(s, other), +1};
    const std::size_t pos = static_cast<std::size_t>(pick(
        rng, static_cast<int>(out.letters.size()) + 1));
    out.letters.insert(out.letters.begin() + pos, extra);
  }
  return out;
}

CheckResult check_alexander_oracles(const BandWord& w) {
  const LaurentPoly via_seifert =
      seifert_alexander_raw(seifert_matrix(w, cycle_basis(w)));
  // det(V - tV^T) ≐ det(burau - I)(1-t)/(1-t^n) for every link, knot or not
  // (checked against the Hopf link by hand: both routes give 1 - t).
  const LaurentPoly via_burau = w.strands == 1
                                    ? LaurentPoly(1)
                                    : burau_alexander_raw(artin_expand(w));
  if (normalized_or_zero(via_seifert) != normalized_or_zero(via_burau))
    return {false, "Alexander oracles disagree on " + render_band_word(w) +
                       ": Seifert " + via_seifert.str() + " vs Burau " +
                       via_burau.str()};
  return {};
}

CheckResult check_transform_invariance(const BandWord& w,
                                       const AnnulusEntry& companion) {
  const auto fail = [&](const std::string& why) {
    return CheckResult{false, why + " for " + render_band_word(w)};
  };

  const CycleBasis basis = cycle_basis(w);
  const SeifertMatrix v_in = seifert_matrix(w, basis);
  const LaurentPoly alex_in = normalized_or_zero(seifert_alexander_raw(v_in));
  const int sig_in = signature(v_in);
  const LinkingMatrix lk_in = linking_matrix(w);
  const SurfaceStats st_in = surface_stats(w);
  const int comps_in = closure_summary(w).components;
  const std::size_t t = negative_positions(w).size();

  const auto [out, cert] = rudolph_transform(w, {companion});

  if (!is_strongly_quasipositive(out)) return fail("output not SQP");
  int added = 0;
  for (const auto& step : cert.steps) added += step.n_A;
  if (cert.steps.size() != t) return fail("step count != negative letters");
  if (out.strands != w.strands + added) return fail("strand accounting off");
  if (out.letters.size() != w.letters.size() + static_cast<std::size_t>(added))
    return fail("letter accounting off");

  const SurfaceStats st_out = surface_stats(out);
  if (st_out.b1 != st_in.b1) return fail("b1 changed");
  if (st_out.surface_components != 1) return fail("surface disconnected");
  if (closure_summary(out).components != comps_in)
    return fail("closure component count changed");

  const CycleBasis mapped = map_basis(cert, basis);
  const SeifertMatrix v_out = seifert_matrix(out, mapped);
  if (v_out.entries != v_in.entries)
    return fail("Seifert matrix changed: " + matrix_str(v_in.entries) +
                " -> " + matrix_str(v_out.entries));

  if (normalized_or_zero(seifert_alexander_raw(v_out)) != alex_in)
    return fail("Alexander polynomial changed");
  if (signature(v_out) != sig_in) return fail("signature changed");

  // Strand renumbering permutes the closure component labels, so compare
  // linking numbers through the induced correspondence.
  const std::vector<int> cmap = component_map(cert);
  const LinkingMatrix lk_out = linking_matrix(out);
  for (int a = 0; a < comps_in; ++a)
    for (int b = 0; b < comps_in; ++b)
      if (lk_out.entries[cmap[a] - 1][cmap[b] - 1] != lk_in.entries[a][b])
        return fail("linking matrix changed");
  return {};
}

CheckResult check_markov_soundness(const BandWord& annulus_word,
                                   std::mt19937& rng, int stabilizations) {
  const long long f0 = framing(annulus_word);
  const int comps0 = closure_summary(annulus_word).components;
  const LaurentPoly core0 =
      alexander_from_burau(extract_component(annulus_word, 1));

  const BandWord fat = random_stabilization(annulus_word, rng, stabilizations);
  const ReducedAnnulus r = markov_reduce(fat);

  const auto fail = [&](const std::string& why) {
    return CheckResult{false, why + " after reducing " + render_band_word(fat)};
  };
  for (int v : seifert_graph(r.word).valences())
    if (v != 2) return fail("valence != 2 survived");
  if (framing(r.word) != f0) return fail("framing changed");
  if (closure_summary(r.word).components != comps0)
    return fail("component count changed");
  if (alexander_from_burau(extract_component(r.word, 1)) != core0)
    return fail("core Alexander polynomial changed");
  return {};
}

}  // namespace sqp
