#include "sqp/band_words.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace sqp {

void validate(const BandWord& w) {
  if (w.strands < 1) throw PreconditionViolated("strand count must be positive");
  for (const auto& l : w.letters) {
    if (l.lower < 1 || l.lower >= l.upper)
      throw PreconditionViolated("band letter needs 1 <= lower < upper");
    if (l.upper > w.strands)
      throw PreconditionViolated("band letter upper index exceeds strand count");
    if (l.sign != 1 && l.sign != -1)
      throw PreconditionViolated("band letter sign must be +1 or -1");
  }
}

namespace {

struct Scanner {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      } else if (s[pos] == '#') {  // comment to end of line
        while (pos < s.size() && s[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_ws();
    return pos >= s.size();
  }

  void expect(const std::string& tok) {
    skip_ws();
    if (s.compare(pos, tok.size(), tok) != 0)
      throw ParseError("expected '" + tok + "'", pos);
    pos += tok.size();
  }

  int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected an integer", pos);
    long v = 0;
    for (std::size_t i = start; i < pos; ++i) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) throw ParseError("integer out of range", start);
    }
    if (v < 1) throw ParseError("integer must be >= 1", start);
    return static_cast<int>(v);
  }
};

}  // namespace

BandWord parse_band_word(const std::string& text) {
  Scanner sc{text};
  sc.expect("strands:");
  BandWord w;
  w.strands = sc.integer();
  while (!sc.eof()) {
    std::size_t letter_pos = sc.pos;
    sc.expect("a(");
    BandLetter l;
    l.lower = sc.integer();
    sc.expect(",");
    l.upper = sc.integer();
    sc.expect(")");
    sc.skip_ws();
    if (text.compare(sc.pos, 3, "^-1") == 0) {
      l.sign = -1;
      sc.pos += 3;
    }
    if (l.lower >= l.upper)
      throw ParseError("band indices need lower < upper", letter_pos);
    if (l.upper > w.strands)
      throw ParseError("band index exceeds strand count", letter_pos);
    w.letters.push_back(l);
  }
  return w;
}

std::string render_band_word(const BandWord& w) {
  std::ostringstream out;
  out << "strands: " << w.strands << "\n";
  bool first = true;
  for (const auto& l : w.letters) {
    if (!first) out << " ";
    first = false;
    out << "a(" << l.lower << "," << l.upper << ")";
    if (l.sign < 0) out << "^-1";
  }
  return out.str();
}

ArtinWord artin_expand(const BandWord& w) {
  validate(w);
  ArtinWord a;
  a.strands = w.strands;
  for (const auto& l : w.letters) {
    // a(i,j) = (s_i ... s_{j-2}) s_{j-1} (s_i ... s_{j-2})^{-1}
    for (int g = l.lower; g <= l.upper - 2; ++g) a.letters.push_back({g, +1});
    a.letters.push_back({l.upper - 1, l.sign});
    for (int g = l.upper - 2; g >= l.lower; --g) a.letters.push_back({g, -1});
  }
  return a;
}

std::vector<int> closure_permutation(const BandWord& w) {
  std::vector<int> perm(w.strands);
  std::iota(perm.begin(), perm.end(), 1);
  for (const auto& l : w.letters)
    for (int s = 0; s < w.strands; ++s) {
      if (perm[s] == l.lower)
        perm[s] = l.upper;
      else if (perm[s] == l.upper)
        perm[s] = l.lower;
    }
  return perm;
}

std::vector<int> closure_permutation(const ArtinWord& w) {
  std::vector<int> perm(w.strands);
  std::iota(perm.begin(), perm.end(), 1);
  for (const auto& l : w.letters)
    for (int s = 0; s < w.strands; ++s) {
      if (perm[s] == l.index)
        perm[s] = l.index + 1;
      else if (perm[s] == l.index + 1)
        perm[s] = l.index;
    }
  return perm;
}

ClosureSummary closure_summary(const BandWord& w) {
  validate(w);
  const auto perm = closure_permutation(w);
  ClosureSummary cs;
  cs.strand_component.assign(w.strands, 0);
  int next = 0;
  for (int s = 1; s <= w.strands; ++s) {
    if (cs.strand_component[s - 1] != 0) continue;
    ++next;
    int cur = s;
    do {
      cs.strand_component[cur - 1] = next;
      cur = perm[cur - 1];
    } while (cur != s);
  }
  cs.components = next;
  return cs;
}

bool is_strongly_quasipositive(const BandWord& w) {
  for (const auto& l : w.letters)
    if (l.sign < 0) return false;
  return true;
}

std::vector<int> negative_positions(const BandWord& w) {
  std::vector<int> out;
  for (std::size_t k = 0; k < w.letters.size(); ++k)
    if (w.letters[k].sign < 0) out.push_back(static_cast<int>(k) + 1);
  return out;
}

}  // namespace sqp
