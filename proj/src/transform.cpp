#include "sqp/transform.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>

namespace sqp {

namespace {

BandLetter remap_letter(const BandLetter& l, int p, int n_A) {
  if (l.upper <= p) return l;
  if (l.lower <= p) return {l.lower, l.upper + n_A, l.sign};
  return {l.lower + n_A, l.upper + n_A, l.sign};
}

ReducedAnnulus reduce_companion(const AnnulusEntry& a) {
  try {
    validate_annulus(a.word, a.name, a.declared_core, a.provenance);
    return markov_reduce(a.word);
  } catch (const Error& e) {
    throw InvalidAnnulus(a.name + ": " + e.what());
  }
}

}  // namespace

std::pair<BandWord, ReplacementStep> replace_one(const BandWord& w, int g_pos,
                                                 const AnnulusEntry& a) {
  validate(w);
  if (g_pos < 1 || g_pos > static_cast<int>(w.letters.size()))
    throw PreconditionViolated("letter index out of range");
  const BandLetter g = w.letters[g_pos - 1];
  if (g.sign != -1) throw NotNegative(g_pos);

  const ReducedAnnulus reduced = reduce_companion(a);
  const int p = g.lower, q = g.upper;
  const int n_A = reduced.word.strands;

  ReplacementStep step;
  step.replaced_position = g_pos;
  step.p = p;
  step.q = q;
  step.annulus = a.name;
  step.n_A = n_A;
  for (const BandLetter& l : cut_annulus(reduced).letters)
    step.inserted_block.push_back({l.lower + p - 1, l.upper + p - 1, +1});
  step.inserted_block.push_back({p + 1, q + n_A, +1});

  return {apply_step(w, step), step};
}

BandWord apply_step(const BandWord& w, const ReplacementStep& step) {
  BandWord out;
  out.strands = w.strands + step.n_A;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (static_cast<int>(k) == step.replaced_position - 1)
      out.letters.insert(out.letters.end(), step.inserted_block.begin(),
                         step.inserted_block.end());
    else
      out.letters.push_back(remap_letter(w.letters[k], step.p, step.n_A));
  }
  return out;
}

std::pair<BandWord, TransformCertificate> rudolph_transform(
    const BandWord& w, const std::vector<AnnulusEntry>& companions) {
  validate(w);
  if (surface_component_count(w) != 1) throw DisconnectedSurface();

  const std::vector<int> negs = negative_positions(w);
  const std::size_t t = negs.size();

  TransformCertificate cert;
  cert.input = w;
  if (t == 0) {
    cert.output = w;
    return {w, cert};
  }

  std::vector<const AnnulusEntry*> assigned(t);
  if (companions.size() == 1)
    for (std::size_t i = 0; i < t; ++i) assigned[i] = &companions[0];
  else if (companions.size() == t)
    for (std::size_t i = 0; i < t; ++i) assigned[i] = &companions[i];
  else
    throw ArityMismatch(companions.size(), t);
  for (std::size_t i = 0; i < t; ++i) cert.companions.push_back(assigned[i]->name);

  BandWord cur = w;
  for (;;) {
    const std::vector<int> remaining = negative_positions(cur);
    if (remaining.empty()) break;
    // Remaining negatives are g_1..g_k in appearance order: replacements only
    // insert positive letters, so earlier negatives keep their relative order.
    const std::size_t k = remaining.size();
    auto [next, step] = replace_one(cur, remaining.back(), *assigned[k - 1]);
    cert.steps.push_back(std::move(step));
    cur = std::move(next);
  }
  assert(is_strongly_quasipositive(cur));
  cert.output = cur;
  return {cur, cert};
}

namespace {

// Tree path through the inserted block, from strand `from` to strand `to`,
// as traversals of the block letters (indexed base0 + offset into the word).
std::vector<Traversal> block_path(const ReplacementStep& step, int base0) {
  std::map<int, std::vector<std::pair<int, int>>> adj;  // strand -> (block idx, other)
  for (std::size_t b = 0; b < step.inserted_block.size(); ++b) {
    const BandLetter& l = step.inserted_block[b];
    adj[l.lower].push_back({static_cast<int>(b), l.upper});
    adj[l.upper].push_back({static_cast<int>(b), l.lower});
  }
  const int from = step.p, to = step.q + step.n_A;
  std::map<int, std::pair<int, int>> via;  // strand -> (prev strand, block idx)
  std::deque<int> queue{from};
  via[from] = {from, -1};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (auto [b, v] : adj[u])
      if (!via.count(v)) {
        via[v] = {u, b};
        queue.push_back(v);
      }
  }
  if (!via.count(to))
    throw CertificateMismatch("inserted block does not connect the band endpoints");
  std::vector<Traversal> path;
  for (int v = to; v != from;) {
    const auto [u, b] = via[v];
    const BandLetter& l = step.inserted_block[b];
    path.push_back({base0 + b, l.lower == u});  // traversed u -> v
    v = u;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

CycleBasis map_basis(const TransformCertificate& cert, const CycleBasis& basis) {
  const int in_letters = static_cast<int>(cert.input.letters.size());
  for (const Cycle& c : basis.cycles)
    for (const Traversal& tr : c.steps)
      if (tr.letter < 0 || tr.letter >= in_letters)
        throw CertificateMismatch("basis refers to letters outside the input word");

  CycleBasis cur = basis;
  for (const ReplacementStep& step : cert.steps) {
    const int gp0 = step.replaced_position - 1;
    const std::vector<Traversal> path = block_path(step, gp0);
    for (Cycle& c : cur.cycles) {
      std::vector<Traversal> out;
      for (const Traversal& tr : c.steps) {
        if (tr.letter < gp0) {
          out.push_back(tr);
        } else if (tr.letter > gp0) {
          out.push_back({tr.letter + step.n_A, tr.forward});
        } else if (tr.forward) {
          out.insert(out.end(), path.begin(), path.end());
        } else {
          for (auto it = path.rbegin(); it != path.rend(); ++it)
            out.push_back({it->letter, !it->forward});
        }
      }
      c.steps = std::move(out);
    }
    for (int& chord : cur.chords) {
      if (chord == gp0)
        chord = -1;  // rerouted: the defining chord was replaced
      else if (chord > gp0)
        chord += step.n_A;
    }
  }
  return cur;
}

std::vector<std::string> satellite_trace(const TransformCertificate& cert) {
  return cert.companions;
}

std::vector<int> strand_map(const TransformCertificate& cert) {
  std::vector<int> map(cert.input.strands);
  for (int s = 1; s <= cert.input.strands; ++s) map[s - 1] = s;
  for (const ReplacementStep& step : cert.steps)
    for (int& s : map)
      if (s > step.p) s += step.n_A;
  return map;
}

std::vector<int> component_map(const TransformCertificate& cert) {
  const ClosureSummary in = closure_summary(cert.input);
  const ClosureSummary out = closure_summary(cert.output);
  if (in.components != out.components)
    throw CertificateMismatch("closure component counts differ");
  const std::vector<int> smap = strand_map(cert);
  std::vector<int> cmap(in.components, 0);
  for (int s = 1; s <= cert.input.strands; ++s)
    cmap[in.label(s) - 1] = out.label(smap[s - 1]);
  return cmap;
}

nlohmann::ordered_json certificate_json(const TransformCertificate& cert) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["input"] = render_band_word(cert.input);
  doc["output"] = render_band_word(cert.output);

  json steps = json::array();
  int strands_before = cert.input.strands;
  for (const ReplacementStep& s : cert.steps) {
    json st;
    st["replaced_position"] = s.replaced_position;
    st["p"] = s.p;
    st["q"] = s.q;
    st["annulus"] = s.annulus;
    st["n_A"] = s.n_A;
    json remap = json::object();  // only the strands that move
    for (int x = s.p + 1; x <= strands_before; ++x)
      remap[std::to_string(x)] = x + s.n_A;
    st["strand_remap"] = remap;
    json block = json::array();
    for (const BandLetter& l : s.inserted_block)
      block.push_back("a(" + std::to_string(l.lower) + "," +
                      std::to_string(l.upper) + ")");
    st["inserted_block"] = block;
    steps.push_back(st);
    strands_before += s.n_A;
  }
  doc["steps"] = steps;
  doc["companions"] = cert.companions;

  const CycleBasis in_basis = cycle_basis(cert.input);
  const CycleBasis out_basis = map_basis(cert, in_basis);
  json bmap = json::array();
  for (std::size_t i = 0; i < in_basis.cycles.size(); ++i) {
    json entry;
    entry["input_chord"] = in_basis.chords[i];
    entry["output_chord"] = out_basis.chords[i];
    json route = json::array();
    for (const Traversal& tr : out_basis.cycles[i].steps) {
      json hop;
      hop["letter"] = tr.letter;
      hop["forward"] = tr.forward;
      route.push_back(hop);
    }
    entry["output_cycle"] = route;
    bmap.push_back(entry);
  }
  doc["basis_map"] = bmap;
  return doc;
}

}  // namespace sqp
