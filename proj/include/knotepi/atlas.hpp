#pragma once

// Partial-order atlas over bounded families of torus and 2-bridge knots.
//
// build_atlas evaluates edges per source node with OpenMP; build_atlas_serial
// is the reference, testing every ordered node pair in a single thread. Both
// must produce identical atlases.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "knotepi/order.hpp"

namespace knotepi {

struct AtlasBounds {
  Int max_determinant = 9;
  Int max_torus_product = 15;
  bool operator==(const AtlasBounds&) const = default;
};

struct AtlasNode {
  KnotId knot;                       // canonical: tb:n,1 for (2,n)-torus knots
  std::optional<TorusKnot> alias;    // torus form of a 2-bridge torus knot
  Int determinant = 0;
  Int genus = 0;
  IntPoly alexander;
  std::optional<Int> riley_degree;   // 2-bridge nodes only
  std::optional<IntPoly> riley_polynomial;
  bool operator==(const AtlasNode&) const = default;
};

struct AtlasEdge {
  CandidateReport report;
  // kept by the transitive reduction of the non-refuted edges
  bool hasse = false;
  bool operator==(const AtlasEdge&) const = default;
};

struct PosetAtlas {
  AtlasBounds bounds;
  bool riley = false;
  std::vector<AtlasNode> nodes;
  std::vector<AtlasEdge> edges;
  std::vector<KnownRelation> known_relations;
  bool operator==(const PosetAtlas&) const = default;
};

struct AtlasOptions {
  bool riley = false;
  int threads = 0;  // 0: OpenMP default
};

// Invariant summary for one knot; 2-bridge torus knots get a torus alias.
AtlasNode make_node(const KnotId& k, bool riley);

// Throws InvalidBounds unless max_determinant >= 3 and max_torus_product >= 6.
PosetAtlas build_atlas(const AtlasBounds& bounds, const KnownRelations& known, const AtlasOptions& opts = {});
PosetAtlas build_atlas_serial(const AtlasBounds& bounds, const KnownRelations& known, const AtlasOptions& opts = {});

std::string node_id(const AtlasNode& n);

std::string render_atlas_json(const PosetAtlas& atlas);
PosetAtlas parse_atlas_json(const std::string& text);
std::string render_atlas_dot(const PosetAtlas& atlas);

}  // namespace knotepi
