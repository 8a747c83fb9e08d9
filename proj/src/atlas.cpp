#include "knotepi/atlas.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <set>

#include <omp.h>

namespace knotepi {

AtlasNode make_node(const KnotId& k, bool riley) {
  AtlasNode n;
  n.knot = canonical_id(k);
  if (const auto* tb = std::get_if<TwoBridgeKnot>(&n.knot)) {
    if (tb_is_torus(*tb)) n.alias = two_bridge_as_torus(*tb);
    n.alexander = tb_alexander(*tb);
    n.determinant = tb_determinant(*tb);
    n.genus = tb_genus(*tb);
    if (riley) {
      n.riley_polynomial = riley_polynomial(*tb);
      n.riley_degree = n.riley_polynomial->degree();
    } else {
      n.riley_degree = parabolic_class_count(*tb);
    }
  } else {
    const auto& t = std::get<TorusKnot>(n.knot);
    n.alexander = torus_alexander(t);
    mpz_class det = abs(eval_at(n.alexander, -1));
    n.determinant = det.get_si();
    n.genus = torus_genus(t);
  }
  return n;
}

std::string node_id(const AtlasNode& n) { return to_string(n.knot); }

namespace {

void check_bounds(const AtlasBounds& b) {
  if (b.max_determinant < 3 || b.max_torus_product < 6)
    throw InvalidBounds("atlas bounds must satisfy max_det >= 3 and max_torus >= 6, got " +
                        std::to_string(b.max_determinant) + " and " + std::to_string(b.max_torus_product));
}

// 2-bridge nodes (including (2,n)-torus knots) sorted by (p, q), then the
// remaining torus knots sorted by (p1, p2).
std::vector<KnotId> enumerate_nodes(const AtlasBounds& b) {
  std::set<TwoBridgeKnot> tbs;
  std::set<TorusKnot> tori;
  for (Int p = 3; p <= b.max_determinant; p += 2)
    for (const auto& k : tb_knots_with_determinant(p)) tbs.insert(k);
  for (Int p1 = 2; p1 * (p1 + 1) <= b.max_torus_product; ++p1) {
    for (Int p2 = p1 + 1; p1 * p2 <= b.max_torus_product; ++p2) {
      if (gcd(p1, p2) != 1) continue;
      if (p1 == 2) {
        tbs.insert(torus_as_two_bridge(TorusKnot{p1, p2}));
      } else {
        tori.insert(TorusKnot{p1, p2});
      }
    }
  }
  std::vector<KnotId> out(tbs.begin(), tbs.end());
  out.insert(out.end(), tori.begin(), tori.end());
  return out;
}

CandidateReport torus_edge(const KnotId& src, const KnotId& dst) {
  const TorusKnot s = *as_torus(src), t = *as_torus(dst);
  CandidateReport rep;
  rep.source = src;
  rep.target = dst;
  rep.filters.torus = FilterOutcome::pass;
  rep.status = EdgeStatus::proven;
  rep.certificate = build_epimorphism(s, t);
  return rep;
}

// Marks edges not implied by a longer path of non-refuted edges.
void mark_hasse(std::vector<AtlasEdge>& edges, std::size_t node_count, const std::map<KnotId, std::size_t>& index) {
  std::vector<std::vector<std::size_t>> adj(node_count);
  for (const auto& e : edges)
    if (e.report.status != EdgeStatus::refuted) adj[index.at(e.report.source)].push_back(index.at(e.report.target));
  for (auto& e : edges) {
    if (e.report.status == EdgeStatus::refuted) {
      e.hasse = false;
      continue;
    }
    const std::size_t from = index.at(e.report.source), to = index.at(e.report.target);
    // search for to from the other successors of from
    std::vector<char> seen(node_count, 0);
    std::vector<std::size_t> stack;
    for (std::size_t w : adj[from])
      if (w != to) stack.push_back(w);
    bool implied = false;
    while (!stack.empty() && !implied) {
      std::size_t x = stack.back();
      stack.pop_back();
      if (seen[x]) continue;
      seen[x] = 1;
      for (std::size_t y : adj[x]) {
        if (y == to) {
          implied = true;
          break;
        }
        if (!seen[y]) stack.push_back(y);
      }
    }
    e.hasse = !implied;
  }
}

PosetAtlas finish(const AtlasBounds& bounds, const KnownRelations& known, const AtlasOptions& opts,
                  std::vector<AtlasNode> nodes, std::vector<AtlasEdge> edges) {
  std::map<KnotId, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i].knot, i);
  std::sort(edges.begin(), edges.end(), [&](const AtlasEdge& a, const AtlasEdge& b) {
    return std::pair(index.at(a.report.source), index.at(a.report.target)) <
           std::pair(index.at(b.report.source), index.at(b.report.target));
  });
  mark_hasse(edges, nodes.size(), index);
  PosetAtlas atlas;
  atlas.bounds = bounds;
  atlas.riley = opts.riley;
  atlas.nodes = std::move(nodes);
  atlas.edges = std::move(edges);
  atlas.known_relations = known.relations();
  return atlas;
}

class FirstError {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu_);
      if (!err_) err_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (err_) std::rethrow_exception(err_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr err_;
};

}  // namespace

PosetAtlas build_atlas(const AtlasBounds& bounds, const KnownRelations& known, const AtlasOptions& opts) {
  check_bounds(bounds);
  const std::vector<KnotId> ids = enumerate_nodes(bounds);
  const long n = static_cast<long>(ids.size());
  const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();

  std::map<KnotId, std::size_t> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);

  std::vector<AtlasNode> nodes(ids.size());
  std::vector<std::optional<TbInvariants>> inv(ids.size());
  FirstError err;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < n; ++i) {
    err.run([&] {
      const auto ui = static_cast<std::size_t>(i);
      nodes[ui] = make_node(ids[ui], opts.riley);
      if (const auto* tb = std::get_if<TwoBridgeKnot>(&ids[ui]))
        inv[ui] = TbInvariants{*tb, nodes[ui].alexander, nodes[ui].riley_polynomial};
    });
  }
  err.rethrow();

  std::vector<std::vector<AtlasEdge>> per_source(ids.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < n; ++i) {
    err.run([&] {
      const auto ui = static_cast<std::size_t>(i);
      auto& out = per_source[ui];
      if (inv[ui]) {
        const Int p = inv[ui]->knot.p;
        for (Int d = 3; d < p; d += 2) {
          if (p % d != 0) continue;
          for (const auto& t : tb_knots_with_determinant(d)) {
            auto it = index.find(t);
            if (it == index.end()) continue;
            out.push_back({evaluate_tb_pair(*inv[ui], *inv[it->second], &known), false});
          }
        }
      } else {
        const TorusKnot s = std::get<TorusKnot>(ids[ui]);
        for (const auto& t : torus_targets(s)) {
          if (t == s) continue;
          out.push_back({torus_edge(ids[ui], ids[index.at(canonical_id(t))]), false});
        }
      }
    });
  }
  err.rethrow();

  std::vector<AtlasEdge> edges;
  for (auto& v : per_source) edges.insert(edges.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  return finish(bounds, known, opts, std::move(nodes), std::move(edges));
}

PosetAtlas build_atlas_serial(const AtlasBounds& bounds, const KnownRelations& known, const AtlasOptions& opts) {
  check_bounds(bounds);
  const std::vector<KnotId> ids = enumerate_nodes(bounds);
  std::vector<AtlasNode> nodes;
  for (const auto& k : ids) nodes.push_back(make_node(k, opts.riley));

  std::vector<AtlasEdge> edges;
  for (const auto& src : ids) {
    for (const auto& dst : ids) {
      if (src == dst) continue;
      const auto sb = as_two_bridge(src), tb = as_two_bridge(dst);
      if (sb && tb) {
        if (tb->p < sb->p && sb->p % tb->p == 0) edges.push_back({evaluate_tb_pair(*sb, *tb, {opts.riley, &known}), false});
        continue;
      }
      const auto st = as_torus(src), tt = as_torus(dst);
      if (st && tt && torus_ge(*st, *tt)) edges.push_back({torus_edge(src, dst), false});
    }
  }
  return finish(bounds, known, opts, std::move(nodes), std::move(edges));
}

}  // namespace knotepi
