#pragma once

// Epimorphisms between torus-knot groups.
//
// pi(p1,p2) = <u, v | u^p1 = v^p2> maps onto pi(r1,r2) exactly when the target
// parameters divide the source parameters under one of the two matchings. The
// explicit map sends u to a^n2 and v to c^-1 b^n1 c with c = b^s a^t, where
// the target is presented as <a, b | a^R1 = b^R2> and n1 R1 = p1, n2 R2 = p2.

#include <string>
#include <vector>

#include "knotepi/groupcore.hpp"
#include "knotepi/knots.hpp"

namespace knotepi {

std::vector<TorusKnot> torus_targets(const TorusKnot& k);
bool torus_ge(const TorusKnot& k, const TorusKnot& k2);
bool torus_is_minimal(const TorusKnot& k);

// straight: (R1, R2) = (r1, r2); crossed: (R1, R2) = (r2, r1)
enum class Matching { straight, crossed };

struct CheckResult {
  std::string check;
  bool pass = false;
  bool operator==(const CheckResult&) const = default;
};

using Transcript = std::vector<CheckResult>;

struct EpiCertificate {
  TorusKnot source;
  TorusKnot target;
  Int n1 = 1;
  Int n2 = 1;
  Matching matching = Matching::straight;
  Int s = 0;
  Int t = 0;
  AmalgamWord img_u;
  AmalgamWord img_v;
  Int bezout_i = 0;  // source meridian u^j v^i
  Int bezout_j = 0;
  Transcript transcript;

  // target presentation <a, b | a^R1 = b^R2> used by the images
  AmalgamParams target_params() const;
  bool operator==(const EpiCertificate&) const = default;
};

// Certificate for k >= k2 with conjugator c = b^s a^t. Throws NoEpimorphism.
EpiCertificate build_epimorphism(const TorusKnot& k, const TorusKnot& k2, Int s = 0, Int t = 0);

// Runs every check without throwing: relator, meridian, longitude,
// surjectivity, consistency.
Transcript run_checks(const EpiCertificate& cert);
// Like run_checks but throws VerificationFailed naming the first failed check.
Transcript verify_epimorphism(const EpiCertificate& cert);
bool all_pass(const Transcript& transcript);

std::string to_string(Matching m);
Matching parse_matching(const std::string& s);

}  // namespace knotepi
