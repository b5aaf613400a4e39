#include "sqp/annulus.hpp"

#include <algorithm>
#include <cassert>
#include <filesystem>
#include <fstream>
#include <set>

#include "json.hpp"
#include "sqp/fence.hpp"
#include "sqp/invariants.hpp"

namespace fs = std::filesystem;

namespace sqp {

AnnulusEntry validate_annulus(const BandWord& word, const std::string& name,
                              const std::string& declared_core,
                              const std::string& provenance) {
  validate(word);
  if (!is_strongly_quasipositive(word)) throw NotSQP();
  const SurfaceStats st = surface_stats(word);
  if (st.surface_components != 1) throw NotAnAnnulus("surface is disconnected");
  if (st.b1 != 1)
    throw NotAnAnnulus("b1 = " + std::to_string(st.b1) + ", need 1");
  const long long f = framing(word);
  if (f != 0) throw NonZeroFraming(static_cast<int>(f));
  return AnnulusEntry{name, word, declared_core, provenance};
}

LaurentPoly core_alexander(const AnnulusEntry& entry) {
  const ArtinWord comp = extract_component(entry.word, 1);
  return alexander_from_burau(comp);
}

ReducedAnnulus markov_reduce(const BandWord& word) {
  BandWord w = word;
  for (;;) {
    std::vector<int> val(w.strands, 0);
    for (const auto& l : w.letters) {
      ++val[l.lower - 1];
      ++val[l.upper - 1];
    }
    for (int s = 0; s < w.strands; ++s)
      if (val[s] == 0) throw IsolatedStrand(s + 1);
    int k = 0;
    while (k < w.strands && val[k] != 1) ++k;
    if (k == w.strands) break;  // all valences >= 2
    const int strand = k + 1;
    BandWord next;
    next.strands = w.strands - 1;
    for (const auto& l : w.letters) {
      if (l.lower == strand || l.upper == strand) continue;
      BandLetter m = l;
      if (m.lower > strand) --m.lower;
      if (m.upper > strand) --m.upper;
      next.letters.push_back(m);
    }
    w = std::move(next);
  }
  if (static_cast<int>(w.letters.size()) != w.strands)
    throw NotAnAnnulus("valence-2 word has letters != strands (b1 != 1)");
  int lower1 = 0;
  for (const auto& l : w.letters) lower1 += (l.lower == 1);
  assert(lower1 == 2);
  return ReducedAnnulus{std::move(w)};
}

BandWord cut_annulus(const ReducedAnnulus& r) {
  const BandWord& w = r.word;
  std::vector<std::size_t> at1;
  for (std::size_t k = 0; k < w.letters.size(); ++k)
    if (w.letters[k].lower == 1) at1.push_back(k);
  if (at1.size() != 2)
    throw PreconditionViolated("reduced annulus needs exactly two a(1,j) letters");
  BandWord out;
  out.strands = w.strands + 1;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    const BandLetter& l = w.letters[k];
    if (k == at1[0])
      out.letters.push_back({2, l.upper + 1, +1});
    else if (k == at1[1])
      out.letters.push_back({1, l.upper + 1, +1});
    else
      out.letters.push_back({l.lower + 1, l.upper + 1, +1});
  }
  return out;
}

AnnulusEntry Catalog::builtin_trefoil() {
  const BandWord w =
      parse_band_word("strands: 6\na(2,6) a(1,4) a(2,5) a(4,6) a(3,5) a(1,3)");
  return AnnulusEntry{"trefoil_T23", w, "T(2,3) torus knot",
                      "built-in zero-framed annulus with trefoil core"};
}

Catalog::Catalog(std::string store_dir) : store_(std::move(store_dir)) {
  if (store_.empty()) return;
  std::error_code ec;
  fs::create_directories(store_, ec);
  if (ec) throw StoreIOError("cannot create " + store_ + ": " + ec.message());
}

namespace {

AnnulusEntry entry_from_json(const nlohmann::json& doc) {
  BandWord w = parse_band_word("strands: " +
                               std::to_string(doc.at("strands").get<int>()) +
                               "\n" + doc.at("word").get<std::string>());
  return AnnulusEntry{doc.at("name").get<std::string>(), std::move(w),
                      doc.value("declared_core", std::string{}),
                      doc.value("provenance", std::string{})};
}

std::string word_body(const BandWord& w) {
  const std::string full = render_band_word(w);  // "strands: N\n<letters>"
  return full.substr(full.find('\n') + 1);
}

}  // namespace

AnnulusEntry Catalog::get(const std::string& name) const {
  if (name == "trefoil_T23") return builtin_trefoil();
  if (!store_.empty()) {
    const fs::path p = fs::path(store_) / (name + ".json");
    if (fs::exists(p)) {
      std::ifstream in(p);
      if (!in) throw StoreIOError("cannot read " + p.string());
      nlohmann::json doc;
      try {
        in >> doc;
        return entry_from_json(doc);
      } catch (const nlohmann::json::exception& e) {
        throw StoreIOError(p.string() + ": " + e.what());
      }
    }
  }
  throw UnknownEntry(name);
}

std::vector<std::string> Catalog::list() const {
  std::set<std::string> names{"trefoil_T23"};
  if (!store_.empty() && fs::is_directory(store_))
    for (const auto& ent : fs::directory_iterator(store_))
      if (ent.path().extension() == ".json")
        names.insert(ent.path().stem().string());
  return {names.begin(), names.end()};
}

AnnulusEntry Catalog::add(const std::string& name, const BandWord& word,
                          const std::string& declared_core,
                          const std::string& provenance) {
  AnnulusEntry entry;
  try {
    entry = validate_annulus(word, name, declared_core, provenance);
  } catch (const Error& e) {
    throw ValidationFailed(e.what());
  }
  if (store_.empty()) throw StoreIOError("catalog opened without a store directory");
  nlohmann::ordered_json doc;
  doc["name"] = entry.name;
  doc["declared_core"] = entry.declared_core;
  doc["strands"] = entry.word.strands;
  doc["word"] = word_body(entry.word);
  doc["provenance"] = entry.provenance;
  const fs::path p = fs::path(store_) / (name + ".json");
  std::ofstream out(p);
  if (!out) throw StoreIOError("cannot write " + p.string());
  out << doc.dump(2) << "\n";
  if (!out) throw StoreIOError("write failed for " + p.string());
  return entry;
}

}  // namespace sqp
