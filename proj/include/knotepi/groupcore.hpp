#pragma once

// Word problem in the torus-knot group <a, b | a^r1 = b^r2>.
//
// The group is a central extension of Z_r1 * Z_r2 by <z>, z = a^r1 = b^r2.
// Every element has a unique normal form z^c . x_1^e_1 ... x_k^e_k with
// alternating generators and each exponent strictly inside (0, r) for its
// generator's order r.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "knotepi/knots.hpp"

namespace knotepi {

enum class Gen : std::uint8_t { A, B };

struct Syllable {
  Gen gen;
  Int exp;
  bool operator==(const Syllable&) const = default;
};

struct AmalgamParams {
  Int r1;
  Int r2;
  Int order(Gen g) const { return g == Gen::A ? r1 : r2; }
  // abelianization sends A to r2, B to r1
  Int weight(Gen g) const { return g == Gen::A ? r2 : r1; }
  bool operator==(const AmalgamParams&) const = default;
};

// Validates r1, r2 >= 2 and coprime. Throws InvalidParameters.
AmalgamParams make_params(Int r1, Int r2);

class AmalgamWord {
 public:
  AmalgamWord() = default;
  explicit AmalgamWord(std::vector<Syllable> syllables);

  static AmalgamWord power(Gen g, Int e);

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }

  AmalgamWord inverse() const;
  AmalgamWord pow(Int n) const;
  friend AmalgamWord operator*(const AmalgamWord& x, const AmalgamWord& y);
  bool operator==(const AmalgamWord&) const = default;

 private:
  // zero exponents dropped, adjacent like syllables merged freely
  std::vector<Syllable> syllables_;
};

struct NormalForm {
  Int central_exponent = 0;
  std::vector<Syllable> reduced;
  bool operator==(const NormalForm&) const = default;
};

NormalForm normalize_word(const AmalgamWord& w, const AmalgamParams& params);
AmalgamWord to_word(const NormalForm& nf, const AmalgamParams& params);
bool words_equal(const AmalgamWord& w1, const AmalgamWord& w2, const AmalgamParams& params);
Int abelianize(const AmalgamWord& w, const AmalgamParams& params);
Int abelianize(const NormalForm& nf, const AmalgamParams& params);

// Meridian m = u^j v^i and longitude l = u^p1 m^(-p1 p2) of <u, v | u^p1 = v^p2>,
// written over generators A = u, B = v.
struct PeripheralPair {
  AmalgamWord meridian;
  AmalgamWord longitude;
  Int i = 0;  // i p1 + j p2 = 1, 0 < j <= p1
  Int j = 0;
};

PeripheralPair peripheral_words(Int p1, Int p2);

// Substitutes img_u for A and img_v for B.
AmalgamWord apply_hom(const AmalgamWord& w, const AmalgamWord& img_u, const AmalgamWord& img_v);

// Whether w is conjugate to a^x b^y with abelianization +-1, which is exactly
// the conjugacy class of the meridian or its inverse.
bool is_meridional_form(const AmalgamWord& w, const AmalgamParams& params);

// "a^2 b^-3 a^1"; the empty word renders as "1". `letters` names A and B.
std::string to_string(const AmalgamWord& w, std::string_view letters = "ab");
// Accepts a/b or u/v letters and "1" for the identity. Throws ParseError.
AmalgamWord parse_word(std::string_view text);

}  // namespace knotepi
