#include "cskit/hypergraph.hpp"

#include <algorithm>

namespace cskit {

Hypergraph::Hypergraph(ElementSet vertices_, SetFamily edges_)
    : vertices(std::move(vertices_)), edges(std::move(edges_)) {
  for (const ElementSet& e : edges.sets())
    if (!e.is_subset_of(vertices))
      throw PreconditionViolated("hypergraph edge not contained in vertex set");
}

Hypergraph sperner_reduce(const Hypergraph& h) {
  SetFamily out(h.edges.ground());
  const auto& all = h.edges.sets();
  for (size_t i = 0; i < all.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < all.size() && minimal; ++j) {
      if (i == j) continue;
      if (all[j].is_subset_of(all[i]) && (all[j] != all[i] || j < i)) minimal = false;
    }
    if (minimal && !out.contains(all[i])) out.push_back(all[i]);
  }
  return Hypergraph(h.vertices, std::move(out));
}

namespace {

bool is_transversal(const ElementSet& t, const SetFamily& edges) {
  for (const ElementSet& e : edges.sets())
    if (!t.intersects(e)) return false;
  return true;
}

// Every element of t must own an edge it alone hits.
bool has_private_edges(const ElementSet& t, const SetFamily& edges) {
  for (int x = t.first(); x >= 0; x = t.next(x)) {
    bool private_edge = false;
    for (const ElementSet& e : edges.sets()) {
      if (!e.contains(x)) continue;
      ElementSet hit = e & t;
      if (hit.count() == 1) {
        private_edge = true;
        break;
      }
    }
    if (!private_edge) return false;
  }
  return true;
}

// Calls fn on every size-k subset of `pool`, in lexicographic order of
// index sequences. Returns false if fn requested a stop.
template <class Fn>
bool for_each_combination(const std::vector<int>& pool, int k, const GroundSetPtr& ground,
                          Fn&& fn) {
  int n = static_cast<int>(pool.size());
  if (k > n) return true;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    ElementSet s(ground);
    for (int i : idx) s.insert(pool[static_cast<size_t>(i)]);
    if (!fn(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

bool has_empty_edge(const SetFamily& edges) {
  for (const ElementSet& e : edges.sets())
    if (e.empty()) return true;
  return false;
}

}  // namespace

SetFamily minimal_transversals_bounded(const Hypergraph& h, int kmax) {
  SetFamily out(h.vertices.ground());
  if (h.edges.empty()) {
    out.push_back(ElementSet(h.vertices.ground()));
    return out;
  }
  if (has_empty_edge(h.edges)) return out;
  std::vector<int> pool = h.vertices.members();
  int top = std::min<int>(kmax, static_cast<int>(pool.size()));
  for (int k = 0; k <= top; ++k) {
    for_each_combination(pool, k, h.vertices.ground(), [&](const ElementSet& t) {
      if (is_transversal(t, h.edges) && has_private_edges(t, h.edges)) out.push_back(t);
      return true;
    });
  }
  return out;
}

SetFamily maximal_independent_sets_small(const Hypergraph& h, int cap) {
  if (h.vertices.count() > cap)
    throw CapExceeded("maximal_independent_sets_small: vertex set exceeds cap");
  SetFamily transversals = minimal_transversals_bounded(h, h.edges.size());
  SetFamily out(h.vertices.ground());
  for (const ElementSet& t : transversals.sets()) out.push_back(h.vertices - t);
  return out.canonical();
}

bool dual_dimension_at_most(const Hypergraph& h, int k) {
  if (h.edges.empty() || has_empty_edge(h.edges)) return true;
  std::vector<int> pool = h.vertices.members();
  int top = std::min<int>(h.edges.size(), static_cast<int>(pool.size()));
  for (int s = k + 1; s <= top; ++s) {
    bool found = !for_each_combination(pool, s, h.vertices.ground(), [&](const ElementSet& t) {
      return !(is_transversal(t, h.edges) && has_private_edges(t, h.edges));
    });
    if (found) return false;
  }
  return true;
}

}  // namespace cskit
