#include "cskit/acyclic.hpp"

#include <algorithm>

namespace cskit {

DirectedGraph::DirectedGraph(GroundSetPtr ground) : ground_(std::move(ground)) {
  out_.assign(static_cast<size_t>(ground_->size()), ElementSet(ground_));
}

void DirectedGraph::add_arc(int from, int to) {
  if (from == to) throw PreconditionViolated("self-loop arc");
  out_.at(static_cast<size_t>(from)).insert(to);
}

bool DirectedGraph::has_arc(int from, int to) const {
  return out_.at(static_cast<size_t>(from)).contains(to);
}

const ElementSet& DirectedGraph::out(int from) const {
  return out_.at(static_cast<size_t>(from));
}

ElementSet DirectedGraph::in(int to) const {
  ElementSet result(ground_);
  for (int v = 0; v < ground_->size(); ++v)
    if (out_[static_cast<size_t>(v)].contains(to)) result.insert(v);
  return result;
}

DirectedGraph implication_graph(const ImplicationalBase& ib) {
  DirectedGraph g(ib.ground());
  for (const Implication& imp : ib.implications())
    for (int a = imp.premise.first(); a >= 0; a = imp.premise.next(a))
      for (int b = imp.conclusion.first(); b >= 0; b = imp.conclusion.next(b)) g.add_arc(a, b);
  return g;
}

namespace {

std::vector<int> in_degrees(const DirectedGraph& g) {
  int n = g.ground()->size();
  std::vector<int> deg(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int w = g.out(v).first(); w >= 0; w = g.out(v).next(w)) ++deg[static_cast<size_t>(w)];
  return deg;
}

// Kahn elimination with smallest-index tie break; empty result vector
// signals a cycle.
std::vector<int> kahn(const DirectedGraph& g) {
  int n = g.ground()->size();
  std::vector<int> deg = in_degrees(g);
  std::vector<bool> removed(static_cast<size_t>(n), false);
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[static_cast<size_t>(v)] && deg[static_cast<size_t>(v)] == 0) {
        pick = v;
        break;
      }
    if (pick < 0) return {};
    removed[static_cast<size_t>(pick)] = true;
    order.push_back(pick);
    for (int w = g.out(pick).first(); w >= 0; w = g.out(pick).next(w))
      --deg[static_cast<size_t>(w)];
  }
  return order;
}

}  // namespace

bool is_acyclic(const DirectedGraph& g) {
  return g.ground()->size() == 0 || !kahn(g).empty();
}

bool is_acyclic_ib(const ImplicationalBase& ib) { return is_acyclic(implication_graph(ib)); }

std::vector<int> topological_order(const DirectedGraph& g) {
  if (g.ground()->size() == 0) return {};
  std::vector<int> order = kahn(g);
  if (order.empty()) throw CyclicError("topological_order: graph has a cycle");
  return order;
}

ElementSet ancestors_in(const DirectedGraph& g, int x) {
  ElementSet result(g.ground());
  ElementSet frontier = g.in(x);
  while (!frontier.empty()) {
    ElementSet next(g.ground());
    for (int v = frontier.first(); v >= 0; v = frontier.next(v)) {
      if (result.contains(v)) continue;
      result.insert(v);
      next |= g.in(v);
    }
    next -= result;
    frontier = std::move(next);
  }
  result.erase(x);
  return result;
}

ElementSet ancestors(const ImplicationalBase& ib, int x) {
  DirectedGraph g = implication_graph(ib);
  if (!is_acyclic(g)) throw CyclicError("ancestors: implication graph has a cycle");
  return ancestors_in(g, x);
}

DirectedGraph delta_graph(const GroundSetPtr& ground, const AttachedFamily& irr_all) {
  DirectedGraph g(ground);
  for (int b = 0; b < ground->size(); ++b)
    for (const ElementSet& m : irr_all.of(b).sets())
      for (int a = 0; a < ground->size(); ++a)
        if (a != b && !m.contains(a)) g.add_arc(a, b);
  return g;
}

bool is_acyclic_system_from_irr(const GroundSetPtr& ground, const AttachedFamily& irr_all) {
  return is_acyclic(delta_graph(ground, irr_all));
}

ElementSet critanc_from_irr(const GroundSetPtr& ground, const AttachedFamily& irr_all, int x) {
  DirectedGraph g = delta_graph(ground, irr_all);
  if (!is_acyclic(g)) throw CyclicError("critanc_from_irr: system is not acyclic");
  return ancestors_in(g, x);
}

}  // namespace cskit
