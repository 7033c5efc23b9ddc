#pragma once

#include "cskit/core.hpp"

namespace cskit {

// Directed graph on the elements of a ground set, adjacency as bitsets.
// No self-loops for graphs built from normalized bases.
class DirectedGraph {
 public:
  explicit DirectedGraph(GroundSetPtr ground);

  const GroundSetPtr& ground() const { return ground_; }
  void add_arc(int from, int to);
  bool has_arc(int from, int to) const;
  const ElementSet& out(int from) const;
  ElementSet in(int to) const;

 private:
  GroundSetPtr ground_;
  std::vector<ElementSet> out_;
};

// Arc a -> b whenever some implication has a in its premise and b in its
// conclusion.
DirectedGraph implication_graph(const ImplicationalBase& ib);

bool is_acyclic(const DirectedGraph& g);
bool is_acyclic_ib(const ImplicationalBase& ib);

// Sources first; ties broken by smallest canonical index. Throws
// CyclicError on cyclic input.
std::vector<int> topological_order(const DirectedGraph& g);

// Transitive in-neighborhood of x, excluding x itself.
ElementSet ancestors_in(const DirectedGraph& g, int x);
ElementSet ancestors(const ImplicationalBase& ib, int x);

// Arc a -> b iff some member of irr(b) omits a (a != b); the implication
// graph of the minimal-generator base, recovered from irreducibles.
DirectedGraph delta_graph(const GroundSetPtr& ground, const AttachedFamily& irr_all);

bool is_acyclic_system_from_irr(const GroundSetPtr& ground, const AttachedFamily& irr_all);

// Ancestors of x in the delta graph; equals the critical-base ancestor
// relation for acyclic systems. Throws CyclicError on cyclic systems.
ElementSet critanc_from_irr(const GroundSetPtr& ground, const AttachedFamily& irr_all, int x);

}  // namespace cskit
