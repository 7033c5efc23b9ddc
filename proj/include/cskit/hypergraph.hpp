#pragma once

#include "cskit/core.hpp"

namespace cskit {

// Vertex set plus edge family; edges must be subsets of the vertex set.
// Edges may be non-Sperner; sperner_reduce() yields the minimal ones.
struct Hypergraph {
  ElementSet vertices;
  SetFamily edges;

  Hypergraph(ElementSet vertices_, SetFamily edges_);
};

// Inclusion-minimal edges, deduplicated, in first-occurrence order.
Hypergraph sperner_reduce(const Hypergraph& h);

// All inclusion-minimal transversals of size <= kmax, each verified
// minimal (every element has a private edge), ordered by (size, lex).
// Passing kmax = |edges| is always complete. An empty edge makes the
// result empty; a hypergraph with no edges has the single transversal {}.
SetFamily minimal_transversals_bounded(const Hypergraph& h, int kmax);

// Complements of the minimal transversals within the vertex set.
// Intended for oracles and instance validation only; throws CapExceeded
// when the vertex set is larger than cap.
SetFamily maximal_independent_sets_small(const Hypergraph& h, int cap = 22);

// True iff every minimal transversal has size <= k.
bool dual_dimension_at_most(const Hypergraph& h, int k);

}  // namespace cskit
