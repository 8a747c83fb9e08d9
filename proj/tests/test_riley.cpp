#include <doctest.h>

#include <chrono>

#include "knotepi/riley.hpp"
#include "oracles.hpp"

using namespace knotepi;

namespace {

std::vector<mpz_class> integer_roots(const IntPoly& f) {
  std::vector<mpz_class> out;
  mpz_class c0 = abs(f.coeff(0));
  if (c0 == 0) out.push_back(0);
  for (mpz_class d = 1; d <= c0 && d <= 100000; ++d) {
    if (c0 % d != 0) continue;
    for (const mpz_class r : {mpz_class(d), mpz_class(-d)})
      if (eval_at(f, r) == 0) out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_CASE("presentation") {
  const auto t = tb_presentation({3, 1});
  CHECK(t.relator_word == std::vector<PresentationLetter>{{'x', 1}, {'y', 1}});
  const auto f = tb_presentation({5, 3});
  CHECK(f.relator_word == std::vector<PresentationLetter>{{'x', 1}, {'y', -1}, {'x', -1}, {'y', 1}});
  for (Int p = 3; p <= 99; p += 2)
    for (const auto& k : tb_knots_with_determinant(p)) CHECK(tb_presentation(k).relator_word.size() == static_cast<std::size_t>(p - 1));
}

TEST_CASE("small examples against the interpolation oracle") {
  const IntPoly t = riley_polynomial({3, 1});
  CHECK(t == oracle::riley_by_interpolation(tb_epsilon_sequence({3, 1})));
  CHECK(t == IntPoly{1, 1});
  const IntPoly f = riley_polynomial({5, 3});
  CHECK(f == oracle::riley_by_interpolation(tb_epsilon_sequence({5, 3})));
  CHECK(f == IntPoly{1, -1, 1});
  CHECK(oracle::discriminant(f) < 0);  // no real roots
}

TEST_CASE("interpolation oracle agreement for p <= 31") {
  for (Int p = 3; p <= 31; p += 2)
    for (const auto& k : tb_knots_with_determinant(p)) CHECK(riley_polynomial(k) == oracle::riley_by_interpolation(tb_epsilon_sequence(k)));
}

TEST_CASE("monic of degree (p-1)/2 for p <= 60") {
  for (Int p = 3; p <= 60; p += 2)
    for (const auto& k : tb_knots_with_determinant(p)) {
      const IntPoly phi = riley_polynomial(k);
      CHECK(phi.degree() == (p - 1) / 2);
      CHECK(phi.leading() == 1);
      CHECK(parabolic_class_count(k) == (p - 1) / 2);
    }
  CHECK(parabolic_class_count({7, 3}) == 3);
}

TEST_CASE("degree 87 for (175,81)") {
  const auto t0 = std::chrono::steady_clock::now();
  const IntPoly phi = riley_polynomial(tb_normalize(175, 81));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(phi.degree() == 87);
  CHECK(phi.leading() == 1);
  CHECK(secs < 60.0);
}

TEST_CASE("integer roots annihilate the relation") {
  int seen = 0;
  for (Int p = 3; p <= 25; p += 2)
    for (const auto& k : tb_knots_with_determinant(p)) {
      const SymMat2 d = relation_defect(tb_presentation(k));
      for (const auto& r : integer_roots(riley_polynomial(k))) {
        ++seen;
        for (const auto& e : d.e) CHECK(eval_at(e, r) == 0);
      }
    }
  CHECK(seen > 0);  // the trefoil has w = -1
}

TEST_CASE("orbit members related by q -> -q give the same polynomial") {
  for (Int p = 3; p <= 25; p += 2)
    for (Int q = 1; q < p; q += 2) {
      if (gcd(p, q) != 1) continue;
      CHECK(riley_polynomial(TwoBridgeKnot::make(p, q)) == riley_polynomial(TwoBridgeKnot::make(p, -q)));
    }
}

// For q' = q^-1 mod p the generator pair swaps roles and w becomes a different
// element of the same number field. The polynomials are not equal in general;
// what survives is the degree and the discriminant up to rational squares.
TEST_CASE("orbit members related by q -> q^-1") {
  int differ = 0;
  for (Int p = 3; p <= 25; p += 2)
    for (Int q = 1; q < p; q += 2) {
      if (gcd(p, q) != 1) continue;
      Int inv = 1;
      while ((inv * q) % p != 1) ++inv;
      if (inv % 2 == 0) inv -= p;
      const IntPoly a = riley_polynomial(TwoBridgeKnot::make(p, q));
      const IntPoly b = riley_polynomial(TwoBridgeKnot::make(p, inv));
      CHECK(a.degree() == b.degree());
      CHECK(b.leading() == 1);
      if (a.degree() >= 2) {
        const mpz_class prod = oracle::discriminant(a) * oracle::discriminant(b);
        CHECK(prod > 0);
        CHECK(mpz_perfect_square_p(prod.get_mpz_t()) != 0);
      }
      if (!(a == b)) ++differ;
    }
  // (7,3) vs (7,5): 1 + 2w + w^2 + w^3 against 1 + 2w - 3w^2 + w^3
  CHECK(riley_polynomial({7, 3}) == IntPoly{1, 2, 1, 1});
  CHECK(riley_polynomial({7, 5}) == IntPoly{1, 2, -3, 1});
  CHECK(oracle::discriminant(IntPoly{1, 2, 1, 1}) == -23);
  CHECK(oracle::discriminant(IntPoly{1, 2, -3, 1}) == -23);
  CHECK(differ > 0);
}

TEST_CASE("advisory") {
  for (Int p = 3; p <= 15; p += 2)
    for (const auto& k : tb_knots_with_determinant(p)) CHECK(riley_divides_advisory(k, k) == RileyAdvisory::consistent);
  CHECK(riley_divides_advisory(tb_normalize(175, 81), {7, 3}) == RileyAdvisory::consistent);
  CHECK(riley_divides_advisory(tb_normalize(9, 4), {3, 1}) == RileyAdvisory::inconsistent);
  // squarefree parts: a repeated factor in the source does not matter
  const IntPoly phi{1, 1};
  CHECK(riley_divides_advisory(phi * phi * IntPoly{1, -1, 1}, phi) == RileyAdvisory::consistent);
  CHECK(riley_divides_advisory(phi, phi * phi) == RileyAdvisory::consistent);
  CHECK(std::string(to_string(RileyAdvisory::skipped)) == "skipped");
}

TEST_CASE("parabolic generators") {
  const SymMat2 x = parabolic_x(), y = parabolic_y();
  CHECK(x.at(0, 1) == IntPoly{1});
  CHECK(x.at(1, 0).is_zero());
  CHECK(y.at(1, 0) == IntPoly{0, 1});
  CHECK(y.at(0, 1).is_zero());
  CHECK(evaluate_word({{'x', 1}, {'x', -1}}) == SymMat2{});
}
