#pragma once

#include <functional>
#include <unordered_map>

#include "cskit/closure.hpp"
#include "cskit/hypergraph.hpp"

namespace cskit {

// Streaming consumer of (attached element, irreducible closed set)
// pairs. Return false to stop the enumeration.
using EmitSink = std::function<bool(int, const ElementSet&)>;

// Per-element irreducible families available to an enumeration; must
// cover the ancestors of the current target.
class AncestorSolutions {
 public:
  AncestorSolutions() = default;

  bool has(int x) const { return families_.count(x) > 0; }
  const SetFamily& of(int x) const;  // throws MissingAncestor
  void set(int x, SetFamily family) { families_[x] = std::move(family); }

 private:
  std::unordered_map<int, SetFamily> families_;
};

// Hypergraph of premises of implications concluding x; vertices are the
// union of those premises.
Hypergraph premises_of(const ImplicationalBase& ib, int x);

// Cartesian-product cursor over one irreducible choice per element of t,
// in canonical order (families cycle fastest on the largest element).
// Every element of t must have a non-empty family in anc.
class IrreducibleSelections {
 public:
  IrreducibleSelections(const ElementSet& t, const AncestorSolutions& anc);

  bool next();  // advance to the next selection; false when exhausted
  const std::vector<const ElementSet*>& current() const { return current_; }
  // Intersection of the current selection; the full set for an empty t.
  ElementSet intersection() const;

 private:
  GroundSetPtr ground_;
  ElementSet t_;
  std::vector<const SetFamily*> families_;
  std::vector<int> choice_;
  std::vector<const ElementSet*> current_;
  bool started_ = false;
  bool done_ = false;
};

// Records which transversal/selection pair produced an emitted set.
struct ConclusionWitness {
  ElementSet transversal;
  std::vector<ElementSet> selection;
  ElementSet emitted;
};

// Enumerate irr(x) for bounded conclusion degree: intersect irreducible
// selections over the minimal transversals of the premise hypergraph,
// keep the attached candidates. Returns the number of sets emitted.
long acs_conclusion(const ImplicationalBase& ib, int x, const AncestorSolutions& anc,
                    const EmitSink& out, std::vector<ConclusionWitness>* witnesses = nullptr);

// Maximal superset of y whose closure avoids x; a member of irr(x).
// Requires x not in closure(y).
ElementSet greedy_completion(const ImplicationalBase& ib, int x, const ElementSet& y);

// Hypergraph of premises triggered by adding y to the closed set m,
// restricted to implications whose conclusion escapes m.
Hypergraph triggered_premises(const ImplicationalBase& ib, const ElementSet& m, int y);

// All solution-graph neighbors of m in irr(x), deduplicated, canonical.
SetFamily neighbors(const ImplicationalBase& ib, int x, const ElementSet& m,
                    const AncestorSolutions& anc);

// Enumerate irr(x) for bounded premise degree by breadth-first solution
// graph traversal from the greedy completion of the empty set.
long acs_premise(const ImplicationalBase& ib, int x, const AncestorSolutions& anc,
                 const EmitSink& out);

enum class IcsAlgo { kAuto, kConclusion, kPremise, kOracle };

struct IcsOptions {
  IcsAlgo algo = IcsAlgo::kAuto;
  int degree_bound = 6;  // auto-mode threshold for cdeg(x) / pdeg(Sigma)
  int oracle_cap = 20;
};

// Top-down driver: processes elements in topological order, storing each
// irr(x) as ancestor solutions for later elements. Emits every
// irreducible of the system exactly once.
long ics_enum(const ImplicationalBase& ib, const IcsOptions& options, const EmitSink& out);

// Convenience: collect the emissions of ics_enum into an AttachedFamily.
AttachedFamily ics_enum_collect(const ImplicationalBase& ib, const IcsOptions& options = {});

}  // namespace cskit
