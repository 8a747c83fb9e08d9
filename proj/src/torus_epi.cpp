#include "knotepi/torus_epi.hpp"

#include <algorithm>
#include <set>

namespace knotepi {

namespace {

std::vector<Int> divisors_at_least_two(Int n) {
  std::vector<Int> out;
  for (Int d = 2; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

AmalgamWord conjugator(Int s, Int t) { return AmalgamWord({{Gen::B, s}, {Gen::A, t}}); }

AmalgamWord expected_img_v(Int n1, Int s, Int t) {
  const AmalgamWord c = conjugator(s, t);
  return c.inverse() * AmalgamWord::power(Gen::B, n1) * c;
}

}  // namespace

std::vector<TorusKnot> torus_targets(const TorusKnot& k) {
  std::set<TorusKnot> out;
  for (Int d1 : divisors_at_least_two(k.p1))
    for (Int d2 : divisors_at_least_two(k.p2)) out.insert(TorusKnot::make(d1, d2));
  return {out.begin(), out.end()};
}

bool torus_ge(const TorusKnot& k, const TorusKnot& k2) {
  const bool straight = k.p1 % k2.p1 == 0 && k.p2 % k2.p2 == 0;
  const bool crossed = k.p2 % k2.p1 == 0 && k.p1 % k2.p2 == 0;
  return straight || crossed;
}

bool torus_is_minimal(const TorusKnot& k) { return is_prime(k.p1) && is_prime(k.p2); }

AmalgamParams EpiCertificate::target_params() const {
  return matching == Matching::straight ? AmalgamParams{target.p1, target.p2} : AmalgamParams{target.p2, target.p1};
}

EpiCertificate build_epimorphism(const TorusKnot& k, const TorusKnot& k2, Int s, Int t) {
  if (!torus_ge(k, k2)) throw NoEpimorphism(to_string(k) + " does not map onto " + to_string(k2));
  EpiCertificate cert;
  cert.source = k;
  cert.target = k2;
  cert.matching = (k.p1 % k2.p1 == 0 && k.p2 % k2.p2 == 0) ? Matching::straight : Matching::crossed;
  const AmalgamParams tp = cert.target_params();
  cert.n1 = k.p1 / tp.r1;
  cert.n2 = k.p2 / tp.r2;
  cert.s = s;
  cert.t = t;
  cert.img_u = AmalgamWord::power(Gen::A, cert.n2);
  cert.img_v = expected_img_v(cert.n1, s, t);
  const PeripheralPair pp = peripheral_words(k.p1, k.p2);
  cert.bezout_i = pp.i;
  cert.bezout_j = pp.j;
  cert.transcript = run_checks(cert);
  return cert;
}

Transcript run_checks(const EpiCertificate& cert) {
  Transcript tr;
  const Int p1 = cert.source.p1, p2 = cert.source.p2;
  AmalgamParams tp;
  try {
    tp = make_params(cert.target_params().r1, cert.target_params().r2);
  } catch (const InvalidParameters&) {
    for (const char* name : {"relator", "meridian", "longitude", "surjectivity", "consistency"}) tr.push_back({name, false});
    return tr;
  }

  // both relator sides land on the same central power z^(n1 n2)
  {
    const NormalForm want{cert.n1 * cert.n2, {}};
    const AmalgamWord lhs = apply_hom(AmalgamWord::power(Gen::A, p1), cert.img_u, cert.img_v);
    const AmalgamWord rhs = apply_hom(AmalgamWord::power(Gen::B, p2), cert.img_u, cert.img_v);
    tr.push_back({"relator", normalize_word(lhs, tp) == want && normalize_word(rhs, tp) == want});
  }

  const AmalgamWord source_meridian({{Gen::A, cert.bezout_j}, {Gen::B, cert.bezout_i}});
  tr.push_back({"meridian", is_meridional_form(apply_hom(source_meridian, cert.img_u, cert.img_v), tp)});

  // image of the source longitude is a^-t l2^(n1 n2) a^t
  {
    const AmalgamWord l1 = AmalgamWord::power(Gen::A, p1) * source_meridian.pow(-p1 * p2);
    const AmalgamWord l2 = peripheral_words(tp.r1, tp.r2).longitude;
    const AmalgamWord at = AmalgamWord::power(Gen::A, cert.t);
    const AmalgamWord want = at.inverse() * l2.pow(cert.n1 * cert.n2) * at;
    tr.push_back({"longitude", words_equal(apply_hom(l1, cert.img_u, cert.img_v), want, tp)});
  }

  {
    const Int ab_u = abelianize(cert.img_u, tp);
    const Int ab_v = abelianize(cert.img_v, tp);
    const bool ok = gcd(cert.n2, tp.r1) == 1 && gcd(cert.n1, tp.r2) == 1 && gcd(ab_u, ab_v) == 1;
    tr.push_back({"surjectivity", ok});
  }

  {
    const bool straight = cert.matching == Matching::straight;
    const bool matching_ok = straight ? (p1 % cert.target.p1 == 0 && p2 % cert.target.p2 == 0)
                                      : (p1 % cert.target.p2 == 0 && p2 % cert.target.p1 == 0);
    const bool ok = matching_ok && cert.n1 * tp.r1 == p1 && cert.n2 * tp.r2 == p2 &&
                    cert.img_u == AmalgamWord::power(Gen::A, cert.n2) &&
                    cert.img_v == expected_img_v(cert.n1, cert.s, cert.t) &&
                    cert.bezout_i * p1 + cert.bezout_j * p2 == 1 && cert.bezout_j > 0 && cert.bezout_j <= p1;
    tr.push_back({"consistency", ok});
  }
  return tr;
}

bool all_pass(const Transcript& transcript) {
  return std::all_of(transcript.begin(), transcript.end(), [](const CheckResult& c) { return c.pass; });
}

Transcript verify_epimorphism(const EpiCertificate& cert) {
  Transcript tr = run_checks(cert);
  for (const auto& c : tr)
    if (!c.pass) throw VerificationFailed(c.check);
  return tr;
}

std::string to_string(Matching m) { return m == Matching::straight ? "straight" : "crossed"; }

Matching parse_matching(const std::string& s) {
  if (s == "straight") return Matching::straight;
  if (s == "crossed") return Matching::crossed;
  throw ParseError("unknown matching '" + s + "'");
}

}  // namespace knotepi
