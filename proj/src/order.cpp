#include "knotepi/order.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace knotepi {

std::optional<TorusKnot> as_torus(const KnotId& k) {
  if (const auto* t = std::get_if<TorusKnot>(&k)) return *t;
  const auto& tb = std::get<TwoBridgeKnot>(k);
  if (tb_is_torus(tb)) return TorusKnot::make(2, tb.p);
  return std::nullopt;
}

std::optional<TwoBridgeKnot> as_two_bridge(const KnotId& k) {
  if (const auto* tb = std::get_if<TwoBridgeKnot>(&k)) return tb_normalize(*tb);
  const auto& t = std::get<TorusKnot>(k);
  if (t.p1 == 2) return torus_as_two_bridge(t);
  return std::nullopt;
}

KnotId canonical_id(const KnotId& k) {
  if (auto tb = as_two_bridge(k)) return *tb;
  return k;
}

const KnownRelation* KnownRelations::find(const KnotId& source, const KnotId& target) const {
  const KnotId s = canonical_id(source), t = canonical_id(target);
  for (const auto& r : relations_)
    if (canonical_id(r.source) == s && canonical_id(r.target) == t) return &r;
  return nullptr;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

KnownRelations parse_known_relations(std::istream& in) {
  std::vector<KnownRelation> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line, citation;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      body = line.substr(0, hash);
      citation = trim(line.substr(hash + 1));
    }
    std::istringstream toks(body);
    std::vector<std::string> parts;
    for (std::string t; toks >> t;) parts.push_back(t);
    if (parts.empty()) continue;
    if (parts.size() != 3 || parts[1] != ">=p")
      throw ParseError(lineno, "expected '<knot> >=p <knot> # citation', got '" + trim(line) + "'");
    try {
      out.push_back({parse_knot(parts[0]), parse_knot(parts[2]), citation});
    } catch (const ParseError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return KnownRelations(std::move(out));
}

KnownRelations load_known_relations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open known-relations file '" + path + "'");
  return parse_known_relations(in);
}

TbInvariants tb_invariants(const TwoBridgeKnot& k, bool riley) {
  TbInvariants inv{k, tb_alexander(k), std::nullopt};
  if (riley) inv.riley = riley_polynomial(k);
  return inv;
}

CandidateReport evaluate_tb_pair(const TbInvariants& source, const TbInvariants& target, const KnownRelations* known) {
  const TwoBridgeKnot& s = source.knot;
  const TwoBridgeKnot& t = target.knot;
  CandidateReport rep;
  rep.source = s;
  rep.target = t;
  auto outcome = [](bool ok) { return ok ? FilterOutcome::pass : FilterOutcome::fail; };

  rep.filters.determinant = outcome(t.p < s.p && s.p % t.p == 0);
  rep.filters.alexander = outcome(divides_up_to_units(target.alexander, source.alexander));
  const bool source_torus = tb_is_torus(s), target_torus = tb_is_torus(t);
  if (source_torus)
    rep.filters.torus = outcome(target_torus && torus_ge(two_bridge_as_torus(s), two_bridge_as_torus(t)));
  if (source.riley && target.riley) rep.filters.riley_advisory = riley_divides_advisory(*source.riley, *target.riley);

  const auto& f = rep.filters;
  if (f.determinant == FilterOutcome::fail || f.alexander == FilterOutcome::fail || f.torus == FilterOutcome::fail) {
    rep.status = EdgeStatus::refuted;
  } else if (source_torus && target_torus) {
    rep.status = EdgeStatus::proven;
    rep.certificate = build_epimorphism(two_bridge_as_torus(s), two_bridge_as_torus(t));
  } else if (known != nullptr && known->find(s, t) != nullptr) {
    rep.status = EdgeStatus::known_literature;
  } else {
    rep.status = EdgeStatus::candidate;
  }
  return rep;
}

CandidateReport evaluate_tb_pair(const TwoBridgeKnot& source, const TwoBridgeKnot& target,
                                 const CandidateOptions& opts) {
  return evaluate_tb_pair(tb_invariants(tb_normalize(source), opts.riley), tb_invariants(tb_normalize(target), opts.riley),
                          opts.known);
}

std::vector<CandidateReport> tb_candidates(const TwoBridgeKnot& k, const CandidateOptions& opts) {
  const TbInvariants src = tb_invariants(tb_normalize(k), opts.riley);
  std::vector<CandidateReport> out;
  for (Int d = 3; d < k.p; d += 2) {
    if (k.p % d != 0) continue;
    for (const auto& t : tb_knots_with_determinant(d)) out.push_back(evaluate_tb_pair(src, tb_invariants(t, opts.riley), opts.known));
  }
  return out;
}

GenusOneClass is_twist_or_genus_one(const TwoBridgeKnot& k) {
  return tb_alexander(k).degree() == 2 ? GenusOneClass::twist_like_genus_one : GenusOneClass::other;
}

MinimalityVerdict tb_is_p_minimal(const TwoBridgeKnot& knot, const KnownRelations& known,
                                  const MinimalityOptions& opts) {
  const TwoBridgeKnot k = tb_normalize(knot);
  MinimalityVerdict v;
  v.knot = k;
  if (opts.fast_paths) {
    v.verdict = Verdict::p_minimal;
    if (is_prime(k.p)) {
      v.reason = MinimalityReason::prime_determinant;
      return v;
    }
    const IntPoly delta = tb_alexander(k);
    if (delta.degree() == 2) {
      v.reason = MinimalityReason::genus_one;
      return v;
    }
    if (irreducibility_witness(delta)) {
      v.reason = MinimalityReason::irreducible_delta_fastpath;
      return v;
    }
  }

  const auto cands = tb_candidates(k, {opts.riley, &known});
  for (const auto& c : cands) {
    if (c.status == EdgeStatus::proven || c.status == EdgeStatus::known_literature) {
      v.verdict = Verdict::not_p_minimal;
      v.reason = MinimalityReason::witness_target;
      v.witness = c.target;
      return v;
    }
    if (c.status == EdgeStatus::candidate) v.survivors.push_back(c.target);
  }
  if (v.survivors.empty()) {
    v.verdict = Verdict::p_minimal;
    v.reason = MinimalityReason::exhaustive_elimination;
  } else {
    v.verdict = Verdict::undetermined;
    v.reason = MinimalityReason::surviving_candidates;
  }
  return v;
}

MinimalityVerdict torus_minimality(const TorusKnot& k) {
  MinimalityVerdict v;
  v.knot = k;
  if (torus_is_minimal(k)) {
    v.verdict = Verdict::p_minimal;
    v.reason = MinimalityReason::torus_prime_params;
    return v;
  }
  v.verdict = Verdict::not_p_minimal;
  v.reason = MinimalityReason::witness_target;
  for (const auto& t : torus_targets(k)) {
    if (t != k) {
      v.witness = t;
      break;
    }
  }
  return v;
}

MinimalityVerdict is_p_minimal(const KnotId& k, const KnownRelations& known, const MinimalityOptions& opts) {
  if (const auto* t = std::get_if<TorusKnot>(&k)) return torus_minimality(*t);
  return tb_is_p_minimal(std::get<TwoBridgeKnot>(k), known, opts);
}

OrderAnswer decide_order(const KnotId& k, const KnotId& k2, const KnownRelations& known, bool riley) {
  const KnotId a = canonical_id(k), b = canonical_id(k2);
  if (a == b) return {EdgeStatus::proven, "reflexive"};
  const auto ta = as_torus(a), tb = as_torus(b);
  if (ta && tb) {
    return torus_ge(*ta, *tb) ? OrderAnswer{EdgeStatus::proven, "torus parameters divide"}
                              : OrderAnswer{EdgeStatus::refuted, "torus parameters do not divide"};
  }
  if (ta) return {EdgeStatus::refuted, "torus knots map only onto torus knots"};
  const auto sa = as_two_bridge(a), sb = as_two_bridge(b);
  if (!sb) return {EdgeStatus::refuted, "2-bridge knots map only onto 2-bridge knots"};
  const CandidateReport rep = evaluate_tb_pair(*sa, *sb, {riley, &known});
  switch (rep.status) {
    case EdgeStatus::refuted:
      return {EdgeStatus::refuted, rep.filters.determinant == FilterOutcome::fail ? "determinant does not properly divide"
                                                                                  : "Alexander polynomial does not divide"};
    case EdgeStatus::known_literature: return {rep.status, known.find(a, b)->citation};
    case EdgeStatus::proven: return {rep.status, "torus parameters divide"};
    case EdgeStatus::candidate: return {rep.status, "necessary conditions hold; existence not decided"};
  }
  return {rep.status, ""};
}

const char* to_string(FilterOutcome f) {
  switch (f) {
    case FilterOutcome::pass: return "pass";
    case FilterOutcome::fail: return "fail";
    case FilterOutcome::skipped: return "skipped";
  }
  return "skipped";
}

const char* to_string(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::refuted: return "refuted";
    case EdgeStatus::candidate: return "candidate";
    case EdgeStatus::proven: return "proven";
    case EdgeStatus::known_literature: return "known_literature";
  }
  return "candidate";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::p_minimal: return "p_minimal";
    case Verdict::not_p_minimal: return "not_p_minimal";
    case Verdict::undetermined: return "undetermined";
  }
  return "undetermined";
}

const char* to_string(MinimalityReason r) {
  switch (r) {
    case MinimalityReason::prime_determinant: return "prime_determinant";
    case MinimalityReason::genus_one: return "genus_one";
    case MinimalityReason::irreducible_delta_fastpath: return "irreducible_delta_fastpath";
    case MinimalityReason::exhaustive_elimination: return "exhaustive_elimination";
    case MinimalityReason::torus_prime_params: return "torus_prime_params";
    case MinimalityReason::witness_target: return "witness_target";
    case MinimalityReason::surviving_candidates: return "surviving_candidates";
  }
  return "surviving_candidates";
}

FilterOutcome parse_filter_outcome(const std::string& s) {
  for (auto f : {FilterOutcome::pass, FilterOutcome::fail, FilterOutcome::skipped})
    if (s == to_string(f)) return f;
  throw ParseError("unknown filter outcome '" + s + "'");
}

EdgeStatus parse_edge_status(const std::string& s) {
  for (auto e : {EdgeStatus::refuted, EdgeStatus::candidate, EdgeStatus::proven, EdgeStatus::known_literature})
    if (s == to_string(e)) return e;
  throw ParseError("unknown edge status '" + s + "'");
}

RileyAdvisory parse_riley_advisory(const std::string& s) {
  for (auto r : {RileyAdvisory::consistent, RileyAdvisory::inconsistent, RileyAdvisory::skipped})
    if (s == to_string(r)) return r;
  throw ParseError("unknown riley advisory '" + s + "'");
}

}  // namespace knotepi
