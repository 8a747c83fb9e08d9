#pragma once

// Torus and 2-bridge knot parameters, canonical forms and classical invariants.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "knotepi/polyring.hpp"

namespace knotepi {

using Int = std::int64_t;

Int gcd(Int a, Int b);
bool is_prime(Int n);

// (p1, p2)-torus knot, stored with p1 < p2.
struct TorusKnot {
  Int p1 = 2;
  Int p2 = 3;

  // Validates p1, p2 >= 2 and coprime; orders the pair. Throws InvalidParameters.
  static TorusKnot make(Int a, Int b);

  auto operator<=>(const TorusKnot&) const = default;
};

// (p, q) 2-bridge knot with p, q odd, p >= 3, -p < q < p, gcd(p, q) = 1.
// Any such pair is representable; tb_normalize picks the canonical member of
// its knot type.
struct TwoBridgeKnot {
  Int p = 3;
  Int q = 1;

  // Validates without canonicalizing. Throws InvalidParameters.
  static TwoBridgeKnot make(Int p, Int q);

  auto operator<=>(const TwoBridgeKnot&) const = default;
};

using KnotId = std::variant<TorusKnot, TwoBridgeKnot>;

// Least positive odd q' in (-p, p) with q' = ±q^(±1) mod p. Even q is accepted
// and first replaced by its odd representative modulo p.
TwoBridgeKnot tb_normalize(Int p, Int q);
inline TwoBridgeKnot tb_normalize(const TwoBridgeKnot& k) { return tb_normalize(k.p, k.q); }
bool tb_is_canonical(const TwoBridgeKnot& k);

// The (2, n)-torus knot is the 2-bridge knot (n, 1).
bool tb_is_torus(const TwoBridgeKnot& k);
TwoBridgeKnot torus_as_two_bridge(const TorusKnot& k);  // requires p1 == 2
TorusKnot two_bridge_as_torus(const TwoBridgeKnot& k);  // requires tb_is_torus

// eps_i = (-1)^floor(i q / p), i = 1..p-1
std::vector<int> tb_epsilon_sequence(const TwoBridgeKnot& k);
IntPoly tb_alexander(const TwoBridgeKnot& k);
Int tb_determinant(const TwoBridgeKnot& k);
Int tb_genus(const TwoBridgeKnot& k);

IntPoly torus_alexander(const TorusKnot& k);
Int torus_crossing_number(const TorusKnot& k);
Int torus_genus(const TorusKnot& k);

// All canonical 2-bridge knots of determinant p, sorted by q.
std::vector<TwoBridgeKnot> tb_knots_with_determinant(Int p);

// "torus:p1,p2" / "tb:p,q"; 2-bridge literals are canonicalized.
KnotId parse_knot(std::string_view literal);
std::string to_string(const TorusKnot& k);
std::string to_string(const TwoBridgeKnot& k);
std::string to_string(const KnotId& k);

}  // namespace knotepi
