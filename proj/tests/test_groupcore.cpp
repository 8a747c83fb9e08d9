#include <doctest.h>

#include <random>

#include "knotepi/groupcore.hpp"

using namespace knotepi;

namespace {

AmalgamWord A(Int e) { return AmalgamWord::power(Gen::A, e); }
AmalgamWord B(Int e) { return AmalgamWord::power(Gen::B, e); }

AmalgamWord random_word(std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> g(0, 1);
  std::uniform_int_distribution<Int> e(-9, 9);
  std::vector<Syllable> s;
  for (int i = 0; i < len; ++i) s.push_back({g(rng) ? Gen::A : Gen::B, e(rng)});
  return AmalgamWord(s);
}

Int exponent_sum(const AmalgamWord& w, const AmalgamParams& p) {
  Int s = 0;
  for (const auto& x : w.syllables()) s += p.weight(x.gen) * x.exp;
  return s;
}

std::vector<AmalgamParams> small_params() {
  std::vector<AmalgamParams> out;
  for (Int r1 = 2; r1 <= 17; ++r1)
    for (Int r2 = 2; r1 * r2 <= 35; ++r2)
      if (gcd(r1, r2) == 1) out.push_back({r1, r2});
  return out;
}

}  // namespace

TEST_CASE("normalize examples") {
  const AmalgamParams p{3, 5};
  const NormalForm id = normalize_word(A(3) * B(-5), p);
  CHECK(id.central_exponent == 0);
  CHECK(id.reduced.empty());
  const NormalForm n = normalize_word(A(4), p);
  CHECK(n.central_exponent == 1);
  CHECK(n.reduced == std::vector<Syllable>{{Gen::A, 1}});
  const NormalForm z = normalize_word(B(-1) * A(3) * B(1), p);
  CHECK(z.central_exponent == 1);
  CHECK(z.reduced.empty());
  // negative exponents are shifted into (0, r)
  const NormalForm m = normalize_word(A(-1), p);
  CHECK(m.central_exponent == -1);
  CHECK(m.reduced == std::vector<Syllable>{{Gen::A, 2}});
}

TEST_CASE("words_equal examples") {
  const AmalgamParams p{2, 3};
  const AmalgamWord ab = A(1) * B(1);
  CHECK(words_equal(ab, ab, p));
  CHECK(words_equal(A(2), B(3), p));
  CHECK_FALSE(words_equal(A(1), B(1), p));
}

TEST_CASE("make_params validates") {
  CHECK_THROWS_AS(make_params(4, 6), InvalidParameters);
  CHECK_THROWS_AS(make_params(1, 3), InvalidParameters);
  CHECK(make_params(3, 5) == AmalgamParams{3, 5});
}

TEST_CASE("normal form uniqueness (fuzz)") {
  std::mt19937_64 rng(29);
  for (const auto& p : small_params()) {
    for (int it = 0; it < 150; ++it) {
      const AmalgamWord w1 = random_word(rng, 1 + it % 7);
      // w2: either a rewriting of w1 with relators inserted, or unrelated
      AmalgamWord w2 = (it % 2 == 0) ? w1 * A(p.r1) * B(-p.r2) : random_word(rng, 1 + it % 5);
      if (it % 4 == 0) w2 = B(p.r2) * w1 * A(-p.r1);
      const bool same = normalize_word(w1, p) == normalize_word(w2, p);
      const NormalForm q = normalize_word(w1 * w2.inverse(), p);
      CHECK(same == (q.central_exponent == 0 && q.reduced.empty()));
      if (it % 2 == 0) CHECK(same);
      // exponent sum survives normalization and round trip
      CHECK(abelianize(normalize_word(w1, p), p) == exponent_sum(w1, p));
      CHECK(abelianize(w1, p) == exponent_sum(w1, p));
      CHECK(normalize_word(to_word(normalize_word(w1, p), p), p) == normalize_word(w1, p));
      for (const auto& s : normalize_word(w1, p).reduced) {
        CHECK(s.exp > 0);
        CHECK(s.exp < p.order(s.gen));
      }
    }
  }
}

TEST_CASE("z is central") {
  std::mt19937_64 rng(31);
  for (const auto& p : small_params())
    for (int it = 0; it < 20; ++it) {
      const AmalgamWord w = random_word(rng, 6);
      CHECK(words_equal(w * A(p.r1), A(p.r1) * w, p));
      CHECK(words_equal(w * B(p.r2), A(p.r1) * w, p));
    }
}

TEST_CASE("peripheral examples") {
  const PeripheralPair t = peripheral_words(2, 3);
  CHECK(t.i == -1);
  CHECK(t.j == 1);
  CHECK(t.meridian == A(1) * B(-1));
  // extended-Euclid oracle: j = p2^-1 mod p1 in (0, p1]
  const PeripheralPair f = peripheral_words(3, 5);
  CHECK(f.j == 2);
  CHECK(f.i == -3);
  CHECK(f.i * 3 + f.j * 5 == 1);
  CHECK(abelianize(f.meridian, {3, 5}) == 1);
}

TEST_CASE("peripheral properties for p1 p2 <= 100") {
  for (Int p1 = 2; p1 <= 50; ++p1)
    for (Int p2 = p1 + 1; p1 * p2 <= 100; ++p2) {
      if (gcd(p1, p2) != 1) continue;
      const AmalgamParams par{p1, p2};
      const PeripheralPair pp = peripheral_words(p1, p2);
      CHECK(pp.i * p1 + pp.j * p2 == 1);
      CHECK(pp.j > 0);
      CHECK(pp.j <= p1);
      CHECK(abelianize(pp.meridian, par) == 1);
      CHECK(abelianize(pp.longitude, par) == 0);
      CHECK(words_equal(pp.meridian * pp.longitude, pp.longitude * pp.meridian, par));
      CHECK(is_meridional_form(pp.meridian, par));
    }
}

TEST_CASE("apply_hom examples") {
  // (4,15) -> (2,5): n1 = 2, n2 = 3
  const PeripheralPair pp = peripheral_words(4, 15);
  const AmalgamWord iu = A(3), iv = B(2);
  const AmalgamWord m = A(pp.j) * B(pp.i);
  CHECK(apply_hom(m, iu, iv) == A(pp.j * 3) * B(pp.i * 2));
  CHECK(apply_hom(AmalgamWord{}, iu, iv).empty());
  const NormalForm nf = normalize_word(apply_hom(A(4), iu, iv), {2, 5});
  CHECK(nf.central_exponent == 6);
  CHECK(nf.reduced.empty());
}

TEST_CASE("meridional form") {
  const AmalgamParams p{2, 5};
  const PeripheralPair pp = peripheral_words(4, 15);
  for (Int t = 0; t < 4; ++t) {
    const AmalgamWord w = A(-t) * A(pp.j * 3) * B(pp.i * 2) * A(t);
    CHECK(is_meridional_form(w, p));
    CHECK(is_meridional_form(w.inverse(), p));
  }
  CHECK_FALSE(is_meridional_form(A(2), p));
  const AmalgamWord abab = A(1) * B(1) * A(1) * B(1);
  CHECK(abelianize(abab, p) != 1);
  CHECK_FALSE(is_meridional_form(abab, p));
}

TEST_CASE("word text") {
  CHECK(to_string(A(2) * B(-3)) == "a^2 b^-3");
  CHECK(to_string(AmalgamWord{}) == "1");
  CHECK(parse_word("a^2 b^-3") == A(2) * B(-3));
  CHECK(parse_word("u^3 v^-11") == A(3) * B(-11));
  CHECK(parse_word("1").empty());
  CHECK_THROWS_AS(parse_word("c^2"), ParseError);
  std::mt19937_64 rng(37);
  for (int it = 0; it < 100; ++it) {
    const AmalgamWord w = random_word(rng, 8);
    CHECK(parse_word(to_string(w)) == w);
  }
}
