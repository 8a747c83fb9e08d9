#include "knotepi/knots.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

namespace knotepi {

Int gcd(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) a = std::exchange(b, a % b);
  return a;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int inverse_mod(Int a, Int m) {
  Int t = 0, nt = 1, r = m, nr = mod(a, m);
  while (nr != 0) {
    Int q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw InvalidParameters("no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
  return mod(t, m);
}

// odd representative of the residue r mod p inside (-p, p); p odd
Int odd_window_rep(Int r, Int p) {
  r = mod(r, p);
  return (r % 2 != 0) ? r : r - p;
}

}  // namespace

TorusKnot TorusKnot::make(Int a, Int b) {
  if (a < 2 || b < 2)
    throw InvalidParameters("torus knot parameters must be >= 2, got " + std::to_string(a) + "," + std::to_string(b));
  if (gcd(a, b) != 1)
    throw InvalidParameters("torus knot parameters must be coprime, got " + std::to_string(a) + "," + std::to_string(b));
  return a < b ? TorusKnot{a, b} : TorusKnot{b, a};
}

TwoBridgeKnot TwoBridgeKnot::make(Int p, Int q) {
  if (p < 3 || p % 2 == 0) throw InvalidParameters("2-bridge determinant must be odd and >= 3, got " + std::to_string(p));
  if (q % 2 == 0 || q <= -p || q >= p)
    throw InvalidParameters("2-bridge q must be odd with -p < q < p, got " + std::to_string(q));
  if (gcd(p, q) != 1) throw InvalidParameters("2-bridge parameters must be coprime, got " + std::to_string(p) + "," + std::to_string(q));
  return TwoBridgeKnot{p, q};
}

TwoBridgeKnot tb_normalize(Int p, Int q) {
  if (p < 3 || p % 2 == 0) throw InvalidParameters("2-bridge determinant must be odd and >= 3, got " + std::to_string(p));
  if (gcd(p, q) != 1) throw InvalidParameters("2-bridge parameters must be coprime, got " + std::to_string(p) + "," + std::to_string(q));
  const Int inv = inverse_mod(q, p);
  Int best = p;
  for (Int r : {q, -q, inv, -inv}) {
    Int w = odd_window_rep(r, p);
    if (w > 0 && w < best) best = w;
  }
  return TwoBridgeKnot{p, best};
}

bool tb_is_canonical(const TwoBridgeKnot& k) { return tb_normalize(k.p, k.q) == k; }

bool tb_is_torus(const TwoBridgeKnot& k) { return tb_normalize(k.p, k.q).q == 1; }

TwoBridgeKnot torus_as_two_bridge(const TorusKnot& k) {
  if (k.p1 != 2) throw InvalidParameters("only (2,n)-torus knots are 2-bridge");
  return TwoBridgeKnot{k.p2, 1};
}

TorusKnot two_bridge_as_torus(const TwoBridgeKnot& k) {
  if (!tb_is_torus(k)) throw InvalidParameters(to_string(k) + " is not a torus knot");
  return TorusKnot::make(2, k.p);
}

std::vector<int> tb_epsilon_sequence(const TwoBridgeKnot& k) {
  const Int q = k.q < 0 ? k.q + 2 * k.p : k.q;
  std::vector<int> eps;
  eps.reserve(static_cast<std::size_t>(k.p - 1));
  for (Int i = 1; i < k.p; ++i) eps.push_back(((i * q) / k.p) % 2 == 0 ? 1 : -1);
  return eps;
}

IntPoly tb_alexander(const TwoBridgeKnot& k) {
  const auto eps = tb_epsilon_sequence(k);
  // sum_k (-1)^k t^(eps_1 + ... + eps_k)
  std::vector<Int> partial{0};
  for (int e : eps) partial.push_back(partial.back() + e);
  const Int low = *std::min_element(partial.begin(), partial.end());
  const Int high = *std::max_element(partial.begin(), partial.end());
  std::vector<mpz_class> c(static_cast<std::size_t>(high - low + 1));
  for (std::size_t i = 0; i < partial.size(); ++i) c[static_cast<std::size_t>(partial[i] - low)] += (i % 2 == 0) ? 1 : -1;
  return unit_normalize(IntPoly(std::move(c)));
}

Int tb_determinant(const TwoBridgeKnot& k) {
  mpz_class d = abs(eval_at(tb_alexander(k), -1));
  if (d != k.p) throw std::logic_error("determinant mismatch for " + to_string(k));
  return k.p;
}

Int tb_genus(const TwoBridgeKnot& k) { return tb_alexander(k).degree() / 2; }

IntPoly torus_alexander(const TorusKnot& k) {
  auto t_pow_minus_one = [](Int n) { return IntPoly::monomial(1, static_cast<std::size_t>(n)) - IntPoly{1}; };
  IntPoly num = t_pow_minus_one(k.p1 * k.p2) * IntPoly{-1, 1};
  IntPoly den = t_pow_minus_one(k.p1) * t_pow_minus_one(k.p2);
  return unit_normalize(poly_divexact(num, den));
}

Int torus_crossing_number(const TorusKnot& k) { return std::min(k.p1 * (k.p2 - 1), k.p2 * (k.p1 - 1)); }

Int torus_genus(const TorusKnot& k) { return (k.p1 - 1) * (k.p2 - 1) / 2; }

std::vector<TwoBridgeKnot> tb_knots_with_determinant(Int p) {
  std::set<TwoBridgeKnot> seen;
  for (Int q = 1; q < p; q += 2)
    if (gcd(p, q) == 1) seen.insert(tb_normalize(p, q));
  return {seen.begin(), seen.end()};
}

namespace {

Int parse_int(std::string_view s, std::string_view literal) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("malformed knot literal '" + std::string(literal) + "'");
  return v;
}

}  // namespace

KnotId parse_knot(std::string_view literal) {
  auto colon = literal.find(':');
  auto comma = literal.find(',');
  if (colon == std::string_view::npos || comma == std::string_view::npos || comma < colon)
    throw ParseError("malformed knot literal '" + std::string(literal) + "', expected tb:p,q or torus:p,q");
  std::string_view kind = literal.substr(0, colon);
  Int a = parse_int(literal.substr(colon + 1, comma - colon - 1), literal);
  Int b = parse_int(literal.substr(comma + 1), literal);
  try {
    if (kind == "torus") return TorusKnot::make(a, b);
    if (kind == "tb") return tb_normalize(a, b);
  } catch (const InvalidParameters& e) {
    throw ParseError(std::string(literal) + ": " + e.what());
  }
  throw ParseError("unknown knot family '" + std::string(kind) + "'");
}

std::string to_string(const TorusKnot& k) { return "torus:" + std::to_string(k.p1) + "," + std::to_string(k.p2); }
std::string to_string(const TwoBridgeKnot& k) { return "tb:" + std::to_string(k.p) + "," + std::to_string(k.q); }
std::string to_string(const KnotId& k) {
  return std::visit([](const auto& x) { return to_string(x); }, k);
}

}  // namespace knotepi
