#pragma once

// Univariate polynomials over the integers with GMP coefficients.
//
// An IntPoly is kept trimmed: the coefficient vector never ends in a zero, so
// the zero polynomial is the empty vector and has degree kZeroDegree.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "knotepi/errors.hpp"

namespace knotepi {

class IntPoly {
 public:
  static constexpr int kZeroDegree = -1;

  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly constant(const mpz_class& c);
  // c * var^n
  static IntPoly monomial(const mpz_class& c, std::size_t n);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  // zero beyond the degree
  mpz_class coeff(std::size_t i) const;
  const mpz_class& leading() const { return coeffs_.back(); }

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const mpz_class& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& c) { return a *= c; }
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  // multiply by var^n
  IntPoly shifted(std::size_t n) const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

enum class PolyOp { add, sub, mul };

IntPoly poly_arith(const IntPoly& a, const IntPoly& b, PolyOp op);

// Exact quotient over Z; throws ZeroDivisor or NotDivisible.
IntPoly poly_divexact(const IntPoly& n, const IntPoly& d);
// Non-throwing variant; nullopt when d does not divide n exactly.
std::optional<IntPoly> try_divexact(const IntPoly& n, const IntPoly& d);

// Canonical representative of the class {±t^k p}: no factor of t, positive
// constant term. Throws ZeroInput.
IntPoly unit_normalize(const IntPoly& p);

// Whether ±t^k q d = n for some integer polynomial q.
bool divides_up_to_units(const IntPoly& d, const IntPoly& n);

IntPoly derivative(const IntPoly& p);
mpz_class content(const IntPoly& p);
// p / content(p) with positive leading coefficient; zero stays zero
IntPoly primitive_part(const IntPoly& p);
// lc(b)^(deg a - deg b + 1) * a mod b
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
// gcd over Z[t] via primitive pseudo-remainder sequences; leading coefficient positive
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// p / gcd(p, p'), unit-normalized. Throws ZeroInput.
IntPoly squarefree_part(const IntPoly& p);

mpz_class eval_at(const IntPoly& p, const mpz_class& x);

// Whether p reversed equals p up to sign (palindromic coefficient list).
bool is_palindromic(const IntPoly& p);

// A small prime modulo which p stays of full degree and is irreducible, if one
// exists among the first `tries` primes. Such a prime proves irreducibility of
// a primitive p over Z.
std::optional<std::uint32_t> irreducibility_witness(const IntPoly& p, int tries = 25);

// "2 - 5*t + 2*t^2": ascending degree, explicit signs, unit coefficients elided.
std::string to_string(const IntPoly& p, std::string_view var = "t");
// Inverse of to_string; accepts any single-letter variable. Throws ParseError.
IntPoly parse_poly(std::string_view text);

}  // namespace knotepi
