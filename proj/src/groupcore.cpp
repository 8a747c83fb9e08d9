#include "knotepi/groupcore.hpp"

#include <cctype>
#include <charconv>
#include <deque>
#include <sstream>

namespace knotepi {

namespace {

// floor division and matching non-negative remainder
std::pair<Int, Int> floor_divmod(Int a, Int m) {
  Int q = a / m, r = a % m;
  if (r < 0) {
    r += m;
    --q;
  }
  return {q, r};
}

void push_free(std::vector<Syllable>& out, Syllable s) {
  if (s.exp == 0) return;
  if (!out.empty() && out.back().gen == s.gen) {
    out.back().exp += s.exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(s);
}

}  // namespace

AmalgamParams make_params(Int r1, Int r2) {
  if (r1 < 2 || r2 < 2 || gcd(r1, r2) != 1)
    throw InvalidParameters("amalgam parameters must be coprime and >= 2, got " + std::to_string(r1) + "," +
                            std::to_string(r2));
  return {r1, r2};
}

AmalgamWord::AmalgamWord(std::vector<Syllable> syllables) {
  for (const auto& s : syllables) push_free(syllables_, s);
}

AmalgamWord AmalgamWord::power(Gen g, Int e) { return AmalgamWord({Syllable{g, e}}); }

AmalgamWord AmalgamWord::inverse() const {
  AmalgamWord inv;
  inv.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) inv.syllables_.push_back({it->gen, -it->exp});
  return inv;
}

AmalgamWord AmalgamWord::pow(Int n) const {
  const AmalgamWord base = n < 0 ? inverse() : *this;
  AmalgamWord out;
  for (Int k = 0; k < (n < 0 ? -n : n); ++k)
    for (const auto& s : base.syllables_) push_free(out.syllables_, s);
  return out;
}

AmalgamWord operator*(const AmalgamWord& x, const AmalgamWord& y) {
  AmalgamWord out = x;
  for (const auto& s : y.syllables_) push_free(out.syllables_, s);
  return out;
}

NormalForm normalize_word(const AmalgamWord& w, const AmalgamParams& params) {
  NormalForm nf;
  auto& stack = nf.reduced;
  for (const auto& s : w.syllables()) {
    Int e = s.exp;
    if (!stack.empty() && stack.back().gen == s.gen) {
      e += stack.back().exp;
      stack.pop_back();
    }
    auto [q, r] = floor_divmod(e, params.order(s.gen));
    // x^(q r_x) = z^q is central and moves out of the word
    nf.central_exponent += q;
    if (r != 0) stack.push_back({s.gen, r});
  }
  return nf;
}

AmalgamWord to_word(const NormalForm& nf, const AmalgamParams& params) {
  return AmalgamWord::power(Gen::A, nf.central_exponent * params.r1) * AmalgamWord(nf.reduced);
}

bool words_equal(const AmalgamWord& w1, const AmalgamWord& w2, const AmalgamParams& params) {
  return normalize_word(w1, params) == normalize_word(w2, params);
}

Int abelianize(const AmalgamWord& w, const AmalgamParams& params) {
  Int total = 0;
  for (const auto& s : w.syllables()) total += s.exp * params.weight(s.gen);
  return total;
}

Int abelianize(const NormalForm& nf, const AmalgamParams& params) {
  return nf.central_exponent * params.r1 * params.r2 + abelianize(AmalgamWord(nf.reduced), params);
}

PeripheralPair peripheral_words(Int p1, Int p2) {
  const auto params = make_params(p1, p2);
  // j = p2^-1 mod p1 in (0, p1]
  Int j = 1;
  while ((j * params.r2) % params.r1 != 1 % params.r1) ++j;
  const Int i = (1 - j * p2) / p1;
  PeripheralPair pp;
  pp.i = i;
  pp.j = j;
  pp.meridian = AmalgamWord({{Gen::A, j}, {Gen::B, i}});
  pp.longitude = AmalgamWord::power(Gen::A, p1) * pp.meridian.pow(-p1 * p2);
  return pp;
}

AmalgamWord apply_hom(const AmalgamWord& w, const AmalgamWord& img_u, const AmalgamWord& img_v) {
  AmalgamWord out;
  for (const auto& s : w.syllables()) out = out * (s.gen == Gen::A ? img_u : img_v).pow(s.exp);
  return out;
}

bool is_meridional_form(const AmalgamWord& w, const AmalgamParams& params) {
  const NormalForm nf = normalize_word(w, params);
  const Int ab = abelianize(nf, params);
  if (ab != 1 && ab != -1) return false;
  // cyclically reduce the image in Z_r1 * Z_r2
  std::deque<Syllable> cyc(nf.reduced.begin(), nf.reduced.end());
  while (cyc.size() >= 2 && cyc.front().gen == cyc.back().gen) {
    const Int r = params.order(cyc.front().gen);
    const Int e = (cyc.front().exp + cyc.back().exp) % r;
    cyc.pop_back();
    if (e == 0) {
      cyc.pop_front();
    } else {
      cyc.front().exp = e;
    }
  }
  return cyc.size() == 2;
}

std::string to_string(const AmalgamWord& w, std::string_view letters) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) out << ' ';
    first = false;
    out << letters[s.gen == Gen::A ? 0 : 1] << '^' << s.exp;
  }
  return out.str();
}

AmalgamWord parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<Syllable> syl;
  bool identity = false;
  while (in >> tok) {
    if (tok == "1") {
      identity = true;
      continue;
    }
    Gen g;
    switch (tok[0]) {
      case 'a': case 'u': g = Gen::A; break;
      case 'b': case 'v': g = Gen::B; break;
      default: throw ParseError("bad generator in word syllable '" + tok + "'");
    }
    Int e = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^' || tok.size() < 3) throw ParseError("bad word syllable '" + tok + "'");
      auto [ptr, ec] = std::from_chars(tok.data() + 2, tok.data() + tok.size(), e);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError("bad exponent in word syllable '" + tok + "'");
    }
    syl.push_back({g, e});
  }
  if (identity && !syl.empty()) throw ParseError("identity '1' mixed with syllables in word literal");
  return AmalgamWord(std::move(syl));
}

}  // namespace knotepi
