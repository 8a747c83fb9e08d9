#pragma once

// Candidate targets of peripheral-preserving epimorphisms from 2-bridge knots,
// p-minimality verdicts and curated literature relations.
//
// For 2-bridge knots the filters are necessary conditions only: a target must
// be 2-bridge with determinant properly dividing the source determinant and
// Alexander polynomial dividing the source's. A surviving pair is reported as
// a candidate ("not refuted"), never as an existing epimorphism.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "knotepi/knots.hpp"
#include "knotepi/riley.hpp"
#include "knotepi/torus_epi.hpp"

namespace knotepi {

enum class FilterOutcome { pass, fail, skipped };
enum class EdgeStatus { refuted, candidate, proven, known_literature };

struct Filters {
  FilterOutcome determinant = FilterOutcome::skipped;
  FilterOutcome alexander = FilterOutcome::skipped;
  // torus-knot order, applied when the source is a torus knot
  FilterOutcome torus = FilterOutcome::skipped;
  RileyAdvisory riley_advisory = RileyAdvisory::skipped;
  bool operator==(const Filters&) const = default;
};

struct CandidateReport {
  KnotId source;
  KnotId target;
  Filters filters;
  EdgeStatus status = EdgeStatus::candidate;
  std::optional<EpiCertificate> certificate;  // proven edges only
  bool operator==(const CandidateReport&) const = default;
};

struct KnownRelation {
  KnotId source;
  KnotId target;
  std::string citation;
  bool operator==(const KnownRelation&) const = default;
};

class KnownRelations {
 public:
  KnownRelations() = default;
  explicit KnownRelations(std::vector<KnownRelation> relations) : relations_(std::move(relations)) {}

  const std::vector<KnownRelation>& relations() const noexcept { return relations_; }
  bool empty() const noexcept { return relations_.empty(); }
  const KnownRelation* find(const KnotId& source, const KnotId& target) const;
  bool operator==(const KnownRelations&) const = default;

 private:
  std::vector<KnownRelation> relations_;
};

// Format: one relation per line, "tb:175,81 >=p tb:7,3 # citation". Blank lines
// and lines starting with '#' are ignored. Throws ParseError with line number.
KnownRelations parse_known_relations(std::istream& in);
KnownRelations load_known_relations(const std::string& path);

struct CandidateOptions {
  bool riley = false;
  const KnownRelations* known = nullptr;
};

// Per-knot data reused across many pair evaluations.
struct TbInvariants {
  TwoBridgeKnot knot;
  IntPoly alexander;
  std::optional<IntPoly> riley;  // present when computed
};
TbInvariants tb_invariants(const TwoBridgeKnot& k, bool riley);

// Runs every filter on a 2-bridge pair (canonical forms expected).
CandidateReport evaluate_tb_pair(const TbInvariants& source, const TbInvariants& target,
                                 const KnownRelations* known = nullptr);
CandidateReport evaluate_tb_pair(const TwoBridgeKnot& source, const TwoBridgeKnot& target,
                                 const CandidateOptions& opts = {});

// Every canonical 2-bridge knot with determinant a proper divisor (>= 3) of
// k.p, with filter outcomes. Sorted by (p, q) of the target.
std::vector<CandidateReport> tb_candidates(const TwoBridgeKnot& k, const CandidateOptions& opts = {});

enum class Verdict { p_minimal, not_p_minimal, undetermined };
enum class MinimalityReason {
  prime_determinant,
  genus_one,
  irreducible_delta_fastpath,
  exhaustive_elimination,
  torus_prime_params,
  witness_target,
  surviving_candidates,
};

struct MinimalityVerdict {
  KnotId knot;
  Verdict verdict = Verdict::undetermined;
  MinimalityReason reason = MinimalityReason::surviving_candidates;
  std::optional<KnotId> witness;
  std::vector<KnotId> survivors;  // unrefuted, unproven candidates
};

struct MinimalityOptions {
  // skip the theorem-backed shortcuts and decide by candidate elimination
  bool fast_paths = true;
  bool riley = false;
};

MinimalityVerdict tb_is_p_minimal(const TwoBridgeKnot& k, const KnownRelations& known,
                                  const MinimalityOptions& opts = {});
MinimalityVerdict torus_minimality(const TorusKnot& k);
MinimalityVerdict is_p_minimal(const KnotId& k, const KnownRelations& known, const MinimalityOptions& opts = {});

enum class GenusOneClass { twist_like_genus_one, other };
GenusOneClass is_twist_or_genus_one(const TwoBridgeKnot& k);

// k >= k2 under the peripheral-preserving order, as far as it is decidable here.
struct OrderAnswer {
  EdgeStatus status;
  std::string reason;
};
OrderAnswer decide_order(const KnotId& k, const KnotId& k2, const KnownRelations& known, bool riley = false);

// torus structure if the knot is a torus knot, including (n, 1) 2-bridge knots
std::optional<TorusKnot> as_torus(const KnotId& k);
std::optional<TwoBridgeKnot> as_two_bridge(const KnotId& k);
// canonical identity of the knot type; (2, n)-torus knots become tb:n,1
KnotId canonical_id(const KnotId& k);

const char* to_string(FilterOutcome f);
const char* to_string(EdgeStatus s);
const char* to_string(Verdict v);
const char* to_string(MinimalityReason r);
FilterOutcome parse_filter_outcome(const std::string& s);
EdgeStatus parse_edge_status(const std::string& s);
RileyAdvisory parse_riley_advisory(const std::string& s);

}  // namespace knotepi
