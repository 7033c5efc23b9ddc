#pragma once

#include "cskit/core.hpp"

namespace cskit {

// Closure via forward chaining: least fixpoint of the implications,
// fired in base order within each round.
ElementSet closure_fc(const ImplicationalBase& ib, const ElementSet& y);

// Closure as the intersection of all members of irr (and the full set)
// containing y; irr must be the complete irreducible family.
ElementSet closure_from_family(const GroundSetPtr& ground, const SetFamily& irr,
                               const ElementSet& y);

// A closure operator backed either by an implicational base or by the
// family of irreducible closed sets. Cheap to copy.
class ClosureOperator {
 public:
  static ClosureOperator from_base(ImplicationalBase ib);
  static ClosureOperator from_family(GroundSetPtr ground, SetFamily irr);

  const GroundSetPtr& ground() const { return ground_; }
  ElementSet closure(const ElementSet& y) const;

  bool family_backed() const { return family_.has_value(); }

 private:
  ClosureOperator() = default;
  GroundSetPtr ground_;
  std::optional<ImplicationalBase> base_;
  std::optional<SetFamily> family_;
};

bool is_closed(const ClosureOperator& op, const ElementSet& c);

// {x in a : x not in closure(a \ {x})}
ElementSet extreme_points(const ClosureOperator& op, const ElementSet& a);

// True iff m is closed, x not in m, and m is maximal with that property.
bool is_attached(const ClosureOperator& op, const ElementSet& m, int x);

// The unique element m is attached to; NotConvexGeometry when the
// candidate is not unique. irr_all must be the complete family.
int attached_element(const GroundSetPtr& ground, const SetFamily& irr_all, const ElementSet& m);

// Brute-force sweep over all subsets; canonical order. CapExceeded when
// the ground set is larger than cap.
SetFamily all_closed_sets_oracle(const ClosureOperator& op, int cap = 20);

// All irreducible closed sets assigned to their attached element.
// Requires a convex geometry (checked).
AttachedFamily irr_oracle(const ClosureOperator& op, int cap = 20);

// Inclusion-minimal subsets of X \ {x} whose closure contains x.
SetFamily mingen_oracle(const ClosureOperator& op, int x, int cap = 20);

// True iff the empty set is closed and every closed set C != X extends
// to a closed C + {x}.
bool is_convex_geometry_oracle(const ClosureOperator& op, int cap = 20);

}  // namespace cskit
