#include <sstream>

#include "knotepi/json_io.hpp"

namespace knotepi {

namespace {

TorusKnot torus_from_literal(const std::string& s) {
  const KnotId k = parse_knot(s);
  if (const auto* t = std::get_if<TorusKnot>(&k)) return *t;
  throw ParseError("expected a torus knot literal, got '" + s + "'");
}

Json filters_to_json(const Filters& f) {
  Json j;
  j["determinant"] = to_string(f.determinant);
  j["alexander"] = to_string(f.alexander);
  j["torus"] = to_string(f.torus);
  j["riley_advisory"] = to_string(f.riley_advisory);
  return j;
}

Filters filters_from_json(const Json& j) {
  Filters f;
  f.determinant = parse_filter_outcome(j.at("determinant").get<std::string>());
  f.alexander = parse_filter_outcome(j.at("alexander").get<std::string>());
  f.torus = parse_filter_outcome(j.at("torus").get<std::string>());
  f.riley_advisory = parse_riley_advisory(j.at("riley_advisory").get<std::string>());
  return f;
}

std::string dot_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

Json certificate_to_json(const EpiCertificate& cert) {
  Json j;
  j["source"] = to_string(cert.source);
  j["target"] = to_string(cert.target);
  j["n1"] = cert.n1;
  j["n2"] = cert.n2;
  j["matching"] = to_string(cert.matching);
  const AmalgamParams tp = cert.target_params();
  j["presentation"] = {{"a_order", tp.r1}, {"b_order", tp.r2}};
  j["conjugator"] = {{"s", cert.s}, {"t", cert.t}};
  j["bezout"] = {{"i", cert.bezout_i}, {"j", cert.bezout_j}};
  j["images"] = {{"u", to_string(cert.img_u)}, {"v", to_string(cert.img_v)}};
  Json tr = Json::array();
  for (const auto& c : cert.transcript) tr.push_back({{"check", c.check}, {"pass", c.pass}});
  j["transcript"] = tr;
  return j;
}

EpiCertificate certificate_from_json(const Json& j) {
  EpiCertificate c;
  c.source = torus_from_literal(j.at("source").get<std::string>());
  c.target = torus_from_literal(j.at("target").get<std::string>());
  c.n1 = j.at("n1").get<Int>();
  c.n2 = j.at("n2").get<Int>();
  c.matching = parse_matching(j.at("matching").get<std::string>());
  c.s = j.at("conjugator").at("s").get<Int>();
  c.t = j.at("conjugator").at("t").get<Int>();
  c.bezout_i = j.at("bezout").at("i").get<Int>();
  c.bezout_j = j.at("bezout").at("j").get<Int>();
  c.img_u = parse_word(j.at("images").at("u").get<std::string>());
  c.img_v = parse_word(j.at("images").at("v").get<std::string>());
  for (const auto& e : j.at("transcript")) c.transcript.push_back({e.at("check").get<std::string>(), e.at("pass").get<bool>()});
  return c;
}

Json node_to_json(const AtlasNode& n) {
  Json j;
  j["id"] = node_id(n);
  if (const auto* tb = std::get_if<TwoBridgeKnot>(&n.knot)) {
    j["kind"] = "tb";
    j["p"] = tb->p;
    j["q"] = tb->q;
  } else {
    const auto& t = std::get<TorusKnot>(n.knot);
    j["kind"] = "torus";
    j["p"] = t.p1;
    j["q"] = t.p2;
  }
  j["alias"] = n.alias ? Json(to_string(*n.alias)) : Json(nullptr);
  j["determinant"] = n.determinant;
  j["genus"] = n.genus;
  j["alexander"] = to_string(n.alexander);
  j["riley_degree"] = n.riley_degree ? Json(*n.riley_degree) : Json(nullptr);
  if (n.riley_polynomial) j["riley_polynomial"] = to_string(*n.riley_polynomial, "w");
  if (const auto t = as_torus(n.knot)) j["crossing_number"] = torus_crossing_number(*t);
  return j;
}

AtlasNode node_from_json(const Json& j) {
  AtlasNode n;
  n.knot = parse_knot(j.at("id").get<std::string>());
  if (!j.at("alias").is_null()) n.alias = torus_from_literal(j.at("alias").get<std::string>());
  n.determinant = j.at("determinant").get<Int>();
  n.genus = j.at("genus").get<Int>();
  n.alexander = parse_poly(j.at("alexander").get<std::string>());
  if (!j.at("riley_degree").is_null()) n.riley_degree = j.at("riley_degree").get<Int>();
  if (j.contains("riley_polynomial")) n.riley_polynomial = parse_poly(j.at("riley_polynomial").get<std::string>());
  return n;
}

Json report_to_json(const CandidateReport& rep) {
  Json j;
  j["src"] = to_string(rep.source);
  j["dst"] = to_string(rep.target);
  j["status"] = to_string(rep.status);
  j["filters"] = filters_to_json(rep.filters);
  if (rep.certificate) j["certificate"] = certificate_to_json(*rep.certificate);
  return j;
}

CandidateReport report_from_json(const Json& j) {
  CandidateReport rep;
  rep.source = parse_knot(j.at("src").get<std::string>());
  rep.target = parse_knot(j.at("dst").get<std::string>());
  rep.status = parse_edge_status(j.at("status").get<std::string>());
  rep.filters = filters_from_json(j.at("filters"));
  if (j.contains("certificate")) rep.certificate = certificate_from_json(j.at("certificate"));
  return rep;
}

Json verdict_to_json(const MinimalityVerdict& v) {
  Json j;
  j["knot"] = to_string(v.knot);
  j["verdict"] = to_string(v.verdict);
  j["reason"] = to_string(v.reason);
  j["witness"] = v.witness ? Json(to_string(*v.witness)) : Json(nullptr);
  Json surv = Json::array();
  for (const auto& s : v.survivors) surv.push_back(to_string(s));
  j["survivors"] = surv;
  return j;
}

Json atlas_to_json(const PosetAtlas& atlas) {
  Json j;
  j["bounds"] = {{"max_determinant", atlas.bounds.max_determinant},
                 {"max_torus_product", atlas.bounds.max_torus_product}};
  j["riley"] = atlas.riley;
  Json nodes = Json::array();
  for (const auto& n : atlas.nodes) nodes.push_back(node_to_json(n));
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& e : atlas.edges) {
    Json ej = report_to_json(e.report);
    ej["hasse"] = e.hasse;
    edges.push_back(ej);
  }
  j["edges"] = edges;
  Json known = Json::array();
  for (const auto& r : atlas.known_relations)
    known.push_back({{"src", to_string(r.source)}, {"dst", to_string(r.target)}, {"citation", r.citation}});
  j["known_relations"] = known;
  return j;
}

PosetAtlas atlas_from_json(const Json& j) {
  PosetAtlas a;
  a.bounds.max_determinant = j.at("bounds").at("max_determinant").get<Int>();
  a.bounds.max_torus_product = j.at("bounds").at("max_torus_product").get<Int>();
  a.riley = j.at("riley").get<bool>();
  for (const auto& n : j.at("nodes")) a.nodes.push_back(node_from_json(n));
  for (const auto& e : j.at("edges")) a.edges.push_back({report_from_json(e), e.at("hasse").get<bool>()});
  for (const auto& r : j.at("known_relations"))
    a.known_relations.push_back(
        {parse_knot(r.at("src").get<std::string>()), parse_knot(r.at("dst").get<std::string>()), r.at("citation").get<std::string>()});
  return a;
}

std::string render_atlas_json(const PosetAtlas& atlas) { return atlas_to_json(atlas).dump(2) + "\n"; }

PosetAtlas parse_atlas_json(const std::string& text) {
  try {
    return atlas_from_json(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("atlas JSON: ") + e.what());
  }
}

std::string render_atlas_dot(const PosetAtlas& atlas) {
  std::ostringstream out;
  out << "digraph atlas {\n";
  out << "  rankdir=TB;\n";
  for (const auto& n : atlas.nodes) out << "  " << dot_quote(node_id(n)) << " [label=" << dot_quote(node_id(n)) << "];\n";
  for (const auto& e : atlas.edges) {
    if (!e.hasse || e.report.status == EdgeStatus::refuted) continue;
    const char* style = "solid";
    if (e.report.status == EdgeStatus::known_literature) style = "bold";
    if (e.report.status == EdgeStatus::candidate) style = "dashed";
    out << "  " << dot_quote(to_string(e.report.source)) << " -> " << dot_quote(to_string(e.report.target))
        << " [style=" << style << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace knotepi
