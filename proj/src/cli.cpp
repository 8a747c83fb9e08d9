#include "knotepi/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>

#include "knotepi/json_io.hpp"

namespace knotepi::cli {

namespace {

struct Settings {
  std::string format = "text";
  Int max_det = 9;
  Int max_torus = 15;
  std::string known_path;
  bool riley = false;
  std::string out_path;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

KnownRelations load_known(const Settings& s) {
  return s.known_path.empty() ? KnownRelations{} : load_known_relations(s.known_path);
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(20) << key << value << "\n";
}

int cmd_invariants(const Settings& s, const std::string& lit, std::ostream& out) {
  const AtlasNode node = make_node(parse_knot(lit), s.riley);
  if (s.format == "json") {
    print_json(out, node_to_json(node));
    return kOk;
  }
  row(out, "knot", node_id(node));
  if (node.alias) row(out, "alias", to_string(*node.alias));
  row(out, "determinant", std::to_string(node.determinant));
  row(out, "genus", std::to_string(node.genus));
  row(out, "alexander", to_string(node.alexander));
  if (const auto t = as_torus(node.knot)) row(out, "crossing_number", std::to_string(torus_crossing_number(*t)));
  if (node.riley_degree) row(out, "riley_degree", std::to_string(*node.riley_degree));
  if (node.riley_polynomial) row(out, "riley_polynomial", to_string(*node.riley_polynomial, "w"));
  return kOk;
}

int status_exit(EdgeStatus st) {
  switch (st) {
    case EdgeStatus::proven:
    case EdgeStatus::known_literature: return kOk;
    case EdgeStatus::refuted: return kFalse;
    case EdgeStatus::candidate: return kUndetermined;
  }
  return kUndetermined;
}

int cmd_order(const Settings& s, const std::string& a, const std::string& b, std::ostream& out) {
  const KnotId k = parse_knot(a), k2 = parse_knot(b);
  const OrderAnswer ans = decide_order(k, k2, load_known(s), s.riley);
  const int code = status_exit(ans.status);
  const char* holds = code == kOk ? "true" : code == kFalse ? "false" : "undetermined";
  if (s.format == "json") {
    Json j;
    j["source"] = to_string(canonical_id(k));
    j["target"] = to_string(canonical_id(k2));
    j["holds"] = code == kUndetermined ? Json(nullptr) : Json(code == kOk);
    j["status"] = to_string(ans.status);
    j["reason"] = ans.reason;
    print_json(out, j);
  } else {
    out << holds << "\n";
    row(out, "status", to_string(ans.status));
    row(out, "reason", ans.reason);
  }
  return code;
}

int cmd_certificate(const Settings& s, const std::string& a, const std::string& b, std::ostream& out) {
  const auto k = as_torus(parse_knot(a)), k2 = as_torus(parse_knot(b));
  if (!k || !k2) throw UsageError("certificates exist only between torus knots");
  if (!torus_ge(*k, *k2)) {
    if (s.format == "json") {
      print_json(out, Json{{"source", to_string(*k)}, {"target", to_string(*k2)}, {"certificate", nullptr}});
    } else {
      out << "no epimorphism " << to_string(*k) << " -> " << to_string(*k2) << "\n";
    }
    return kFalse;
  }
  const EpiCertificate cert = build_epimorphism(*k, *k2);
  verify_epimorphism(cert);
  if (s.format == "json") {
    print_json(out, certificate_to_json(cert));
    return kOk;
  }
  const AmalgamParams tp = cert.target_params();
  row(out, "source", to_string(cert.source) + "  <u,v | u^" + std::to_string(cert.source.p1) + " = v^" +
                         std::to_string(cert.source.p2) + ">");
  row(out, "target", to_string(cert.target) + "  <a,b | a^" + std::to_string(tp.r1) + " = b^" + std::to_string(tp.r2) + ">");
  row(out, "matching", to_string(cert.matching));
  row(out, "n1, n2", std::to_string(cert.n1) + ", " + std::to_string(cert.n2));
  row(out, "u ->", to_string(cert.img_u));
  row(out, "v ->", to_string(cert.img_v));
  row(out, "meridian", "u^" + std::to_string(cert.bezout_j) + " v^" + std::to_string(cert.bezout_i));
  for (const auto& c : cert.transcript) row(out, "check " + c.check, c.pass ? "pass" : "FAIL");
  return kOk;
}

int cmd_candidates(const Settings& s, const std::string& lit, std::ostream& out) {
  const auto k = as_two_bridge(parse_knot(lit));
  if (!k) throw UsageError("candidates are enumerated for 2-bridge knots only");
  const KnownRelations known = load_known(s);
  const auto reps = tb_candidates(*k, {s.riley, &known});
  if (s.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reps) arr.push_back(report_to_json(r));
    print_json(out, Json{{"source", to_string(*k)}, {"candidates", arr}});
    return kOk;
  }
  out << "candidates for " << to_string(*k) << ": " << reps.size() << "\n";
  for (const auto& r : reps) {
    out << "  " << std::left << std::setw(12) << to_string(r.target) << std::setw(18) << to_string(r.status)
        << "det=" << to_string(r.filters.determinant) << " alex=" << to_string(r.filters.alexander)
        << " torus=" << to_string(r.filters.torus) << " riley=" << to_string(r.filters.riley_advisory) << "\n";
  }
  return kOk;
}

std::string describe(MinimalityReason r) {
  switch (r) {
    case MinimalityReason::prime_determinant: return "prime determinant";
    case MinimalityReason::genus_one: return "genus one";
    case MinimalityReason::irreducible_delta_fastpath: return "irreducible Alexander polynomial";
    case MinimalityReason::exhaustive_elimination: return "all candidates refuted";
    case MinimalityReason::torus_prime_params: return "prime torus parameters";
    case MinimalityReason::witness_target: return "maps onto";
    case MinimalityReason::surviving_candidates: return "unrefuted candidates";
  }
  return "";
}

int cmd_minimal(const Settings& s, const std::string& lit, std::ostream& out) {
  const MinimalityVerdict v = is_p_minimal(parse_knot(lit), load_known(s), {true, s.riley});
  if (s.format == "json") {
    print_json(out, verdict_to_json(v));
  } else {
    switch (v.verdict) {
      case Verdict::p_minimal: out << "p-minimal (" << describe(v.reason) << ")\n"; break;
      case Verdict::not_p_minimal: out << "not p-minimal (" << describe(v.reason) << " " << to_string(*v.witness) << ")\n"; break;
      case Verdict::undetermined: {
        out << "undetermined (" << describe(v.reason) << ":";
        for (const auto& k : v.survivors) out << " " << to_string(k);
        out << ")\n";
        break;
      }
    }
  }
  switch (v.verdict) {
    case Verdict::p_minimal: return kOk;
    case Verdict::not_p_minimal: return kFalse;
    case Verdict::undetermined: return kUndetermined;
  }
  return kUndetermined;
}

int cmd_atlas(const Settings& s, std::ostream& out) {
  const PosetAtlas atlas = build_atlas({s.max_det, s.max_torus}, load_known(s), {s.riley, 0});
  if (!s.out_path.empty()) {
    std::ofstream dot(s.out_path, std::ios::binary);
    if (!dot) throw UsageError("cannot write '" + s.out_path + "'");
    dot << render_atlas_dot(atlas);
  }
  if (s.format == "json") {
    out << render_atlas_json(atlas);
    return kOk;
  }
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& e : atlas.edges) ++counts[static_cast<int>(e.report.status)];
  row(out, "nodes", std::to_string(atlas.nodes.size()));
  row(out, "edges", std::to_string(atlas.edges.size()));
  for (auto st : {EdgeStatus::proven, EdgeStatus::known_literature, EdgeStatus::candidate, EdgeStatus::refuted})
    row(out, std::string("  ") + to_string(st), std::to_string(counts[static_cast<int>(st)]));
  for (const auto& e : atlas.edges) {
    if (!e.hasse) continue;
    out << "  " << to_string(e.report.source) << " >= " << to_string(e.report.target) << "  [" << to_string(e.report.status)
        << "]\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knot-group epimorphisms for torus and 2-bridge knots", "knotepi"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-det", s.max_det, "atlas: largest 2-bridge determinant");
  app.add_option("--max-torus", s.max_torus, "atlas: largest torus product p1*p2");
  app.add_option("--known", s.known_path, "known-relations file");
  app.add_flag("--riley", s.riley, "compute Riley polynomials");
  app.add_option("--out", s.out_path, "atlas: write DOT to this file");

  std::string k1, k2;
  auto* inv = app.add_subcommand("invariants", "classical invariants of a knot")->fallthrough();
  inv->add_option("knot", k1)->required();
  auto* ord = app.add_subcommand("order", "decide whether knot1 >= knot2")->fallthrough();
  ord->add_option("knot1", k1)->required();
  ord->add_option("knot2", k2)->required();
  auto* cert = app.add_subcommand("certificate", "explicit torus-knot epimorphism")->fallthrough();
  cert->add_option("knot1", k1)->required();
  cert->add_option("knot2", k2)->required();
  auto* cand = app.add_subcommand("candidates", "2-bridge epimorphism candidates")->fallthrough();
  cand->add_option("knot", k1)->required();
  auto* mini = app.add_subcommand("minimal", "p-minimality verdict")->fallthrough();
  mini->add_option("knot", k1)->required();
  auto* atl = app.add_subcommand("atlas", "partial-order atlas")->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(s, k1, out);
    if (ord->parsed()) return cmd_order(s, k1, k2, out);
    if (cert->parsed()) return cmd_certificate(s, k1, k2, out);
    if (cand->parsed()) return cmd_candidates(s, k1, out);
    if (mini->parsed()) return cmd_minimal(s, k1, out);
    if (atl->parsed()) return cmd_atlas(s, out);
  } catch (const ParseError& e) {
    err << "knotepi: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidBounds& e) {
    err << "knotepi: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "knotepi: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace knotepi::cli
