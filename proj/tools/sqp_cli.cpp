// Command-line front end: parsing, invariant reports, annulus management,
// and the negative-band replacement transform.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqp/annulus.hpp"
#include "sqp/band_words.hpp"
#include "sqp/corpus.hpp"
#include "sqp/fence.hpp"
#include "sqp/invariants.hpp"
#include "sqp/transform.hpp"

using json = nlohmann::ordered_json;

namespace {

// Exit codes, mirrored in the README.
enum ExitCode {
  kOk = 0,
  kParse = 1,
  kDisconnected = 2,
  kUnknownEntry = 3,
  kArity = 4,
  kValidation = 5,
  kPreservation = 6,
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw sqp::ParseError("cannot open " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

sqp::BandWord load_word(const std::string& path) {
  return sqp::parse_band_word(slurp(path));
}

json matrix_json(const sqp::IntMatrix& m) {
  json rows = json::array();
  for (const auto& r : m) rows.push_back(r);
  return rows;
}

std::string matrix_text(const sqp::IntMatrix& m) {
  std::ostringstream out;
  for (const auto& r : m) {
    out << "  [";
    for (std::size_t j = 0; j < r.size(); ++j) out << (j ? " " : "") << r[j];
    out << "]\n";
  }
  return out.str();
}

int run_info(const std::string& input, bool as_json) {
  const sqp::BandWord w = load_word(input);
  const sqp::ClosureSummary cs = sqp::closure_summary(w);
  const sqp::SurfaceStats st = sqp::surface_stats(w);
  const bool connected = st.surface_components == 1;

  json doc;
  doc["word"] = sqp::render_band_word(w);
  doc["strands"] = w.strands;
  doc["letters"] = w.letters.size();
  doc["sqp"] = sqp::is_strongly_quasipositive(w);
  doc["components"] = cs.components;
  doc["b1"] = st.b1;
  doc["euler"] = st.euler;
  if (st.genus_if_connected) doc["genus"] = *st.genus_if_connected;
  json warnings = json::array();
  if (connected) {
    const sqp::CycleBasis basis = sqp::cycle_basis(w);
    const sqp::SeifertMatrix v = sqp::seifert_matrix(w, basis);
    doc["seifert_matrix"] = matrix_json(v.entries);
    const sqp::LaurentPoly alex =
        sqp::normalized_or_zero(sqp::seifert_alexander_raw(v));
    doc["alexander"] = alex.str();
    doc["signature"] = sqp::signature(v);
    doc["linking_matrix"] = matrix_json(sqp::linking_matrix(w).entries);
  } else {
    warnings.push_back("canonical surface is disconnected; homology fields omitted");
  }
  doc["warnings"] = warnings;

  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << doc["word"].get<std::string>() << "\n";
    std::cout << "strands: " << w.strands << "  letters: " << w.letters.size()
              << "  sqp: " << (doc["sqp"].get<bool>() ? "yes" : "no")
              << "  components: " << cs.components << "  b1: " << st.b1
              << "  euler: " << st.euler;
    if (st.genus_if_connected) std::cout << "  genus: " << *st.genus_if_connected;
    std::cout << "\n";
    if (connected) {
      std::cout << "seifert matrix:\n"
                << matrix_text(sqp::seifert_matrix(w, sqp::cycle_basis(w)).entries);
      std::cout << "alexander: " << doc["alexander"].get<std::string>() << "\n";
      std::cout << "signature: " << doc["signature"].get<int>() << "\n";
      std::cout << "linking matrix:\n"
                << matrix_text(sqp::linking_matrix(w).entries);
    }
    for (const auto& warn : warnings)
      std::cout << "warning: " << warn.get<std::string>() << "\n";
  }
  return connected ? kOk : kDisconnected;
}

int run_expand(const std::string& input, bool as_json) {
  const sqp::BandWord w = load_word(input);
  const sqp::ArtinWord a = sqp::artin_expand(w);
  if (as_json) {
    json doc;
    doc["strands"] = a.strands;
    json letters = json::array();
    for (const auto& l : a.letters) {
      json item;
      item["index"] = l.index;
      item["sign"] = l.sign;
      letters.push_back(item);
    }
    doc["letters"] = letters;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "strands: " << a.strands << "\n";
    for (std::size_t k = 0; k < a.letters.size(); ++k) {
      std::cout << (k ? " " : "") << "s" << a.letters[k].index;
      if (a.letters[k].sign < 0) std::cout << "^-1";
    }
    std::cout << "\n";
  }
  return kOk;
}

int run_transform(const std::string& input, const std::string& store,
                  const std::string& annulus_name,
                  const std::string& annuli_csv,
                  const std::string& certificate_path, bool as_json) {
  const sqp::BandWord w = load_word(input);
  const sqp::Catalog catalog(store);

  std::vector<sqp::AnnulusEntry> companions;
  if (!annuli_csv.empty()) {
    std::stringstream ss(annuli_csv);
    std::string name;
    while (std::getline(ss, name, ','))
      companions.push_back(catalog.get(name));
  } else {
    companions.push_back(catalog.get(annulus_name));
  }

  const auto [out, cert] = sqp::rudolph_transform(w, companions);

  // Recompute everything; the certificate is evidence, not trusted input.
  bool preserved = true;
  std::string violation;
  {
    const sqp::CycleBasis basis = sqp::cycle_basis(w);
    const sqp::SeifertMatrix v_in = sqp::seifert_matrix(w, basis);
    const sqp::SeifertMatrix v_out =
        sqp::seifert_matrix(out, sqp::map_basis(cert, basis));
    if (v_in.entries != v_out.entries) {
      preserved = false;
      violation = "Seifert matrix not preserved";
    } else if (sqp::normalized_or_zero(sqp::seifert_alexander_raw(v_in)) !=
               sqp::normalized_or_zero(sqp::seifert_alexander_raw(v_out))) {
      preserved = false;
      violation = "Alexander polynomial not preserved";
    } else if (sqp::signature(v_in) != sqp::signature(v_out)) {
      preserved = false;
      violation = "signature not preserved";
    } else {
      const std::vector<int> cmap = sqp::component_map(cert);
      const sqp::LinkingMatrix lk_in = sqp::linking_matrix(w);
      const sqp::LinkingMatrix lk_out = sqp::linking_matrix(out);
      for (std::size_t a = 0; a < lk_in.entries.size() && preserved; ++a)
        for (std::size_t b = 0; b < lk_in.entries.size() && preserved; ++b)
          if (lk_out.entries[cmap[a] - 1][cmap[b] - 1] != lk_in.entries[a][b]) {
            preserved = false;
            violation = "linking matrix not preserved";
          }
    }
    if (preserved && !sqp::is_strongly_quasipositive(out)) {
      preserved = false;
      violation = "output is not strongly quasipositive";
    }
  }

  if (!certificate_path.empty()) {
    std::ofstream cf(certificate_path);
    if (!cf) throw sqp::StoreIOError("cannot write " + certificate_path);
    cf << sqp::certificate_json(cert).dump(2) << "\n";
  }

  if (as_json) {
    json doc;
    doc["output"] = sqp::render_band_word(out);
    doc["steps"] = cert.steps.size();
    doc["companions"] = sqp::satellite_trace(cert);
    doc["seifert_form_preserved"] = preserved;
    if (!preserved) doc["violation"] = violation;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << sqp::render_band_word(out) << "\n";
    std::cout << "steps: " << cert.steps.size() << "\n";
    std::cout << "seifert_form_preserved: " << (preserved ? "true" : "false")
              << "\n";
    if (!preserved) std::cout << "violation: " << violation << "\n";
  }
  return preserved ? kOk : kPreservation;
}

int run_annulus_validate(const std::string& input, const std::string& name,
                         const std::string& core, bool as_json) {
  const sqp::BandWord w = load_word(input);
  const sqp::AnnulusEntry e = sqp::validate_annulus(w, name, core);
  const sqp::LaurentPoly witness = sqp::core_alexander(e);
  if (as_json) {
    json doc;
    doc["name"] = e.name;
    doc["word"] = sqp::render_band_word(e.word);
    doc["declared_core"] = e.declared_core;
    doc["core_alexander"] = witness.str();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "valid zero-framed annulus\n";
    std::cout << "core alexander (witness): " << witness.str() << "\n";
  }
  return kOk;
}

int run_annulus_reduce(const std::string& input, bool as_json) {
  const sqp::BandWord w = load_word(input);
  sqp::validate_annulus(w, "", "");
  const sqp::ReducedAnnulus r = sqp::markov_reduce(w);
  if (as_json) {
    json doc;
    doc["word"] = sqp::render_band_word(r.word);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << sqp::render_band_word(r.word) << "\n";
  }
  return kOk;
}

int run_annulus_cut(const std::string& input, bool as_json) {
  const sqp::BandWord w = load_word(input);
  sqp::validate_annulus(w, "", "");
  const sqp::BandWord v = sqp::cut_annulus(sqp::markov_reduce(w));
  if (as_json) {
    json doc;
    doc["word"] = sqp::render_band_word(v);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << sqp::render_band_word(v) << "\n";
  }
  return kOk;
}

int run_annulus_list(const std::string& store, bool as_json) {
  const sqp::Catalog catalog(store);
  const auto names = catalog.list();
  if (as_json) {
    std::cout << json(names).dump(2) << "\n";
  } else {
    for (const auto& n : names) std::cout << n << "\n";
  }
  return kOk;
}

int run_annulus_add(const std::string& input, const std::string& store,
                    const std::string& name, const std::string& core,
                    const std::string& provenance) {
  const sqp::BandWord w = load_word(input);
  sqp::Catalog catalog(store);
  catalog.add(name, w, core, provenance);
  std::cout << "added " << name << "\n";
  return kOk;
}

int run_corpus(unsigned seed, int count, bool as_json) {
  std::mt19937 rng(seed);
  const sqp::AnnulusEntry trefoil = sqp::Catalog::builtin_trefoil();
  int oracle_fail = 0, transform_fail = 0;
  std::vector<std::string> failures;
  for (int k = 0; k < count; ++k) {
    const sqp::BandWord w = sqp::random_connected_word(rng);
    if (const auto r = sqp::check_alexander_oracles(w); !r.ok) {
      ++oracle_fail;
      failures.push_back(r.detail);
    }
    if (const auto r = sqp::check_transform_invariance(w, trefoil); !r.ok) {
      ++transform_fail;
      failures.push_back(r.detail);
    }
  }
  if (as_json) {
    json doc;
    doc["seed"] = seed;
    doc["count"] = count;
    doc["alexander_oracle_failures"] = oracle_fail;
    doc["transform_invariance_failures"] = transform_fail;
    doc["failures"] = failures;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "corpus: " << count << " words, seed " << seed << "\n";
    std::cout << "alexander oracle failures: " << oracle_fail << "\n";
    std::cout << "transform invariance failures: " << transform_fail << "\n";
    for (const auto& f : failures) std::cout << "  " << f << "\n";
  }
  return (oracle_fail || transform_fail) ? kPreservation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strongly quasipositive band-word toolkit"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string store;
  std::string annulus_name = "trefoil_T23";
  std::string annuli_csv;
  std::string certificate_path;
  std::string name;
  std::string core;
  std::string provenance;
  bool as_json = false;
  unsigned seed = 0;
  int count = 200;
  int jobs = 1;

  auto* info = app.add_subcommand("info", "invariant report for a band word");
  info->add_option("input", input, "word file, or - for stdin");
  info->add_flag("--json", as_json);

  auto* expand = app.add_subcommand("expand", "expand to an Artin braid word");
  expand->add_option("input", input);
  expand->add_flag("--json", as_json);

  auto* transform =
      app.add_subcommand("transform", "replace negative bands by cut-open annuli");
  transform->add_option("input", input);
  transform->add_option("--annulus", annulus_name, "catalog entry for every negative");
  transform->add_option("--annuli", annuli_csv, "comma-separated, one per negative");
  transform->add_option("--certificate", certificate_path, "write certificate JSON here");
  transform->add_option("--store", store, "catalog directory");
  transform->add_flag("--json", as_json);

  auto* annulus = app.add_subcommand("annulus", "companion annulus management");
  annulus->require_subcommand(1);
  auto* a_validate = annulus->add_subcommand("validate");
  a_validate->add_option("input", input);
  a_validate->add_option("--name", name);
  a_validate->add_option("--core", core);
  a_validate->add_flag("--json", as_json);
  auto* a_reduce = annulus->add_subcommand("reduce");
  a_reduce->add_option("input", input);
  a_reduce->add_flag("--json", as_json);
  auto* a_cut = annulus->add_subcommand("cut");
  a_cut->add_option("input", input);
  a_cut->add_flag("--json", as_json);
  auto* a_list = annulus->add_subcommand("list");
  a_list->add_option("--store", store);
  a_list->add_flag("--json", as_json);
  auto* a_add = annulus->add_subcommand("add");
  a_add->add_option("input", input);
  a_add->add_option("--store", store)->required();
  a_add->add_option("--name", name)->required();
  a_add->add_option("--core", core);
  a_add->add_option("--provenance", provenance);

  auto* corpus = app.add_subcommand("corpus", "randomized property suite");
  corpus->add_option("--seed", seed);
  corpus->add_option("--count", count);
  corpus->add_option("--jobs", jobs, "accepted for compatibility; runs sequentially");
  corpus->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) return run_info(input, as_json);
    if (*expand) return run_expand(input, as_json);
    if (*transform)
      return run_transform(input, store, annulus_name, annuli_csv,
                           certificate_path, as_json);
    if (*annulus) {
      if (*a_validate) return run_annulus_validate(input, name, core, as_json);
      if (*a_reduce) return run_annulus_reduce(input, as_json);
      if (*a_cut) return run_annulus_cut(input, as_json);
      if (*a_list) return run_annulus_list(store, as_json);
      if (*a_add) return run_annulus_add(input, store, name, core, provenance);
    }
    if (*corpus) return run_corpus(seed, count, as_json);
  } catch (const sqp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const sqp::DisconnectedSurface& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDisconnected;
  } catch (const sqp::UnknownEntry& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnknownEntry;
  } catch (const sqp::ArityMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kArity;
  } catch (const sqp::Error& e) {
    // NotSQP, NotAnAnnulus, NonZeroFraming, ValidationFailed, store and
    // precondition errors all land here.
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}
