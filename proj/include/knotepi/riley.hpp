#pragma once

// Nonabelian parabolic representations of 2-bridge knot groups.
//
// The group of the (p, q) 2-bridge knot is <x, y | W x = y W> with
// W = x^e1 y^e2 x^e3 ... y^e(p-1). Sending x to [[1, 1], [0, 1]] and y to
// [[1, 0], [w, 1]] turns the relation into polynomial conditions on w; their
// gcd is the Riley polynomial, monic of degree (p - 1) / 2.

#include <array>
#include <vector>

#include "knotepi/knots.hpp"
#include "knotepi/polyring.hpp"

namespace knotepi {

// 2x2 matrix over Z[w], row-major
struct SymMat2 {
  std::array<IntPoly, 4> e{IntPoly{1}, IntPoly{}, IntPoly{}, IntPoly{1}};

  const IntPoly& at(int row, int col) const { return e[static_cast<std::size_t>(2 * row + col)]; }
  IntPoly& at(int row, int col) { return e[static_cast<std::size_t>(2 * row + col)]; }
  friend SymMat2 operator*(const SymMat2& x, const SymMat2& y);
  friend SymMat2 operator-(const SymMat2& x, const SymMat2& y);
  bool operator==(const SymMat2&) const = default;
};

struct PresentationLetter {
  char gen;  // 'x' or 'y'
  int sign;  // +1 or -1
  bool operator==(const PresentationLetter&) const = default;
};

struct TwoBridgePresentation {
  TwoBridgeKnot knot;
  std::vector<int> epsilons;
  std::vector<PresentationLetter> relator_word;  // W
};

TwoBridgePresentation tb_presentation(const TwoBridgeKnot& k);

SymMat2 parabolic_x();
SymMat2 parabolic_y();
// rho(W) as a matrix over Z[w]
SymMat2 evaluate_word(const std::vector<PresentationLetter>& word);
// W rho(x) - rho(y) W
SymMat2 relation_defect(const TwoBridgePresentation& pres);

IntPoly riley_polynomial(const TwoBridgeKnot& k);
Int parabolic_class_count(const TwoBridgeKnot& k);

enum class RileyAdvisory { consistent, inconsistent, skipped };

// Heuristic only: does squarefree(Phi_k2) divide squarefree(Phi_k) up to units.
RileyAdvisory riley_divides_advisory(const TwoBridgeKnot& k, const TwoBridgeKnot& k2);
RileyAdvisory riley_divides_advisory(const IntPoly& phi_k, const IntPoly& phi_k2);

const char* to_string(RileyAdvisory a);

}  // namespace knotepi
