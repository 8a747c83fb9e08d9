#include "knotepi/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

namespace knotepi {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t n) {
  std::vector<mpz_class> v(n + 1);
  v[n] = c;
  return IntPoly(std::move(v));
}

mpz_class IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

IntPoly IntPoly::shifted(std::size_t n) const {
  if (is_zero()) return {};
  std::vector<mpz_class> v(n);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

IntPoly poly_arith(const IntPoly& a, const IntPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  return {};
}

std::optional<IntPoly> try_divexact(const IntPoly& n, const IntPoly& d) {
  if (d.is_zero()) throw ZeroDivisor();
  if (n.is_zero()) return IntPoly{};
  if (n.degree() < d.degree()) return std::nullopt;

  std::vector<mpz_class> rem = n.coeffs();
  const auto& dc = d.coeffs();
  const std::size_t dd = dc.size() - 1;
  std::vector<mpz_class> quot(rem.size() - dd);
  mpz_class q;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpz_class& top = rem[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), dc[dd].get_mpz_t())) return std::nullopt;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), dc[dd].get_mpz_t());
    for (std::size_t j = 0; j <= dd; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), dc[j].get_mpz_t());
    }
    quot[k] = q;
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

IntPoly poly_divexact(const IntPoly& n, const IntPoly& d) {
  auto q = try_divexact(n, d);
  if (!q) throw NotDivisible();
  return *std::move(q);
}

IntPoly unit_normalize(const IntPoly& p) {
  if (p.is_zero()) throw ZeroInput("unit_normalize");
  const auto& c = p.coeffs();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  std::vector<mpz_class> v(c.begin() + static_cast<std::ptrdiff_t>(low), c.end());
  if (v.front() < 0) {
    for (auto& x : v) x = -x;
  }
  return IntPoly(std::move(v));
}

bool divides_up_to_units(const IntPoly& d, const IntPoly& n) {
  return try_divexact(unit_normalize(n), unit_normalize(d)).has_value();
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<mpz_class> v(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) v[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  mpz_class g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<mpz_class> v = p.coeffs();
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ZeroDivisor();
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const mpz_class& lb = bc[db];
  for (std::size_t k = r.size(); k-- > db;) {
    // r <- lb * r - r[k] * t^(k-db) * b, which clears degree k
    mpz_class top = r[k];
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k - db + j].get_mpz_t(), top.get_mpz_t(), bc[j].get_mpz_t());
  }
  r.resize(db);
  return IntPoly(std::move(r));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b) * content(b);
  if (b.is_zero()) return primitive_part(a) * content(a);
  mpz_class g;
  mpz_class ca = content(a), cb = content(b);
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return x * g;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw ZeroInput("squarefree_part");
  IntPoly g = primitive_part(poly_gcd(p, derivative(p)));
  if (g.is_zero()) g = IntPoly{1};
  return unit_normalize(poly_divexact(p, g));
}

mpz_class eval_at(const IntPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x;
    acc += c[i];
  }
  return acc;
}

bool is_palindromic(const IntPoly& p) {
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

namespace {

using ModPoly = std::vector<std::uint64_t>;

void trim_mod(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return static_cast<std::uint64_t>((t % static_cast<std::int64_t>(m) + static_cast<std::int64_t>(m)) %
                                    static_cast<std::int64_t>(m));
}

// remainder of a modulo monic f
ModPoly rem_mod(ModPoly a, const ModPoly& f, std::uint64_t m) {
  trim_mod(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    std::uint64_t top = a.back();
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) a[shift + j] = (a[shift + j] + (m - top) * f[j]) % m;
    trim_mod(a);
  }
  return a;
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::uint64_t m) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % m;
  return rem_mod(std::move(out), f, m);
}

ModPoly powmod(ModPoly base, std::uint64_t e, const ModPoly& f, std::uint64_t m) {
  ModPoly acc{1};
  while (e > 0) {
    if (e & 1) acc = mulmod(acc, base, f, m);
    base = mulmod(base, base, f, m);
    e >>= 1;
  }
  return acc;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, std::uint64_t m) {
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    std::uint64_t inv = inv_mod(b.back(), m);
    for (auto& x : b) x = x * inv % m;
    a = rem_mod(std::move(a), b, m);
    std::swap(a, b);
  }
  return a;
}

// Rabin's test; f monic of degree n >= 1.
bool irreducible_mod(const ModPoly& f, std::uint64_t m) {
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  std::vector<std::size_t> prime_divisors;
  for (std::size_t r = 2, k = n; r <= k; ++r) {
    if (k % r == 0) {
      prime_divisors.push_back(r);
      while (k % r == 0) k /= r;
    }
  }
  const ModPoly x{0, 1};
  // frob[k] = x^(m^k) mod f
  std::vector<ModPoly> frob{rem_mod(x, f, m)};
  for (std::size_t k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), m, f, m));
  auto minus_x = [&](ModPoly h) {
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + m - 1) % m;
    trim_mod(h);
    return h;
  };
  if (!minus_x(frob[n]).empty()) return false;
  for (std::size_t r : prime_divisors) {
    ModPoly g = gcd_mod(minus_x(frob[n / r]), f, m);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

std::optional<std::uint32_t> irreducibility_witness(const IntPoly& p, int tries) {
  if (p.degree() < 1 || content(p) != 1) return std::nullopt;
  int seen = 0;
  for (std::uint32_t ell = 2; seen < tries; ++ell) {
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= ell; ++d) prime = prime && (ell % d != 0);
    if (!prime) continue;
    ++seen;
    mpz_class lc_mod;
    mpz_class mm(ell);
    mpz_mod(lc_mod.get_mpz_t(), p.leading().get_mpz_t(), mm.get_mpz_t());
    if (lc_mod == 0) continue;
    ModPoly f;
    for (const auto& c : p.coeffs()) {
      mpz_class r;
      mpz_mod(r.get_mpz_t(), c.get_mpz_t(), mm.get_mpz_t());
      f.push_back(r.get_ui());
    }
    std::uint64_t inv = inv_mod(f.back(), ell);
    for (auto& x : f) x = x * inv % ell;
    if (irreducible_mod(f, ell)) return ell;
  }
  return std::nullopt;
}

std::string to_string(const IntPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const mpz_class& c = p.coeffs()[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

IntPoly parse_poly(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty polynomial literal");
  if (s == "0") return {};

  std::vector<mpz_class> coeffs;
  std::size_t pos = 0;
  char var = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected sign in polynomial literal '" + s + "'");
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    mpz_class c = 1;
    bool has_digits = pos > start;
    if (has_digits) c = mpz_class(s.substr(start, pos - start));
    std::size_t exponent = 0;
    if (pos < s.size() && (s[pos] == '*' || std::isalpha(static_cast<unsigned char>(s[pos])))) {
      if (s[pos] == '*') {
        if (!has_digits) throw ParseError("dangling '*' in polynomial literal");
        ++pos;
      }
      if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
        throw ParseError("expected variable in polynomial literal '" + s + "'");
      if (var != 0 && s[pos] != var) throw ParseError("mixed variables in polynomial literal");
      var = s[pos++];
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t es = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == es) throw ParseError("missing exponent in polynomial literal");
        exponent = std::stoul(s.substr(es, pos - es));
      }
    } else if (!has_digits) {
      throw ParseError("malformed term in polynomial literal '" + s + "'");
    }
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
    coeffs[exponent] += sign * c;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace knotepi
