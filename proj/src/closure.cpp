#include "cskit/closure.hpp"

#include <algorithm>
#include <unordered_set>

namespace cskit {

ElementSet closure_fc(const ImplicationalBase& ib, const ElementSet& y) {
  ElementSet current = y;
  bool grew = true;
  while (grew) {
    grew = false;
    ElementSet round = current;
    for (const Implication& imp : ib.implications()) {
      if (imp.premise.is_subset_of(current) && !imp.conclusion.is_subset_of(current))
        round |= imp.conclusion;
    }
    if (round != current) {
      current = std::move(round);
      grew = true;
    }
  }
  return current;
}

ElementSet closure_from_family(const GroundSetPtr& ground, const SetFamily& irr,
                               const ElementSet& y) {
  ElementSet out = ElementSet::full(ground);
  for (const ElementSet& m : irr.sets())
    if (y.is_subset_of(m)) out &= m;
  return out;
}

ClosureOperator ClosureOperator::from_base(ImplicationalBase ib) {
  ClosureOperator op;
  op.ground_ = ib.ground();
  op.base_ = std::move(ib);
  return op;
}

ClosureOperator ClosureOperator::from_family(GroundSetPtr ground, SetFamily irr) {
  ClosureOperator op;
  op.ground_ = std::move(ground);
  op.family_ = std::move(irr);
  return op;
}

ElementSet ClosureOperator::closure(const ElementSet& y) const {
  if (base_) return closure_fc(*base_, y);
  return closure_from_family(ground_, *family_, y);
}

bool is_closed(const ClosureOperator& op, const ElementSet& c) {
  return op.closure(c) == c;
}

ElementSet extreme_points(const ClosureOperator& op, const ElementSet& a) {
  ElementSet out(a.ground());
  for (int x = a.first(); x >= 0; x = a.next(x)) {
    ElementSet rest = a;
    rest.erase(x);
    if (!op.closure(rest).contains(x)) out.insert(x);
  }
  return out;
}

bool is_attached(const ClosureOperator& op, const ElementSet& m, int x) {
  if (m.contains(x)) return false;
  if (!is_closed(op, m)) return false;
  for (int y = 0; y < op.ground()->size(); ++y) {
    if (y == x || m.contains(y)) continue;
    ElementSet ext = m;
    ext.insert(y);
    if (!op.closure(ext).contains(x)) return false;
  }
  return true;
}

int attached_element(const GroundSetPtr& ground, const SetFamily& irr_all, const ElementSet& m) {
  ClosureOperator op = ClosureOperator::from_family(ground, irr_all);
  int found = -1;
  for (int x = 0; x < ground->size(); ++x) {
    if (m.contains(x)) continue;
    if (is_attached(op, m, x)) {
      if (found >= 0)
        throw NotConvexGeometry("set attached to both " + ground->name(found) + " and " +
                                ground->name(x));
      found = x;
    }
  }
  if (found < 0) throw NotConvexGeometry("set is attached to no element");
  return found;
}

namespace {

void check_cap(const GroundSetPtr& ground, int cap, const char* what) {
  // 30 is a hard limit for the 2^n sweep regardless of the configured cap.
  if (ground->size() > cap || ground->size() > 30)
    throw CapExceeded(std::string(what) + ": ground set exceeds oracle cap");
}

// All subsets of the ground set, in counter order; n <= cap keeps this sane.
template <class Fn>
void for_each_subset(const GroundSetPtr& ground, Fn&& fn) {
  int n = ground->size();
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ElementSet s(ground);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) s.insert(i);
    fn(s);
  }
}

}  // namespace

SetFamily all_closed_sets_oracle(const ClosureOperator& op, int cap) {
  check_cap(op.ground(), cap, "all_closed_sets_oracle");
  std::vector<ElementSet> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for_each_subset(op.ground(), [&](const ElementSet& s) {
    ElementSet c = op.closure(s);
    if (seen.insert(c).second) out.push_back(std::move(c));
  });
  std::sort(out.begin(), out.end(), ElementSet::lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return SetFamily(op.ground(), std::move(out));
}

bool is_convex_geometry_oracle(const ClosureOperator& op, int cap) {
  SetFamily closed = all_closed_sets_oracle(op, cap);
  if (!closed.contains(ElementSet(op.ground()))) return false;
  ElementSet full = ElementSet::full(op.ground());
  for (const ElementSet& c : closed.sets()) {
    if (c == full) continue;
    bool extends = false;
    for (int x = 0; x < op.ground()->size() && !extends; ++x) {
      if (c.contains(x)) continue;
      ElementSet ext = c;
      ext.insert(x);
      if (closed.contains(ext)) extends = true;
    }
    if (!extends) return false;
  }
  return true;
}

AttachedFamily irr_oracle(const ClosureOperator& op, int cap) {
  if (!is_convex_geometry_oracle(op, cap))
    throw NotConvexGeometry("irr_oracle: closure system is not a convex geometry");
  SetFamily closed = all_closed_sets_oracle(op, cap);
  ElementSet full = ElementSet::full(op.ground());
  AttachedFamily out(op.ground());
  for (const ElementSet& c : closed.sets()) {
    if (c == full) continue;
    // Irreducible iff the intersection of all proper closed supersets
    // differs from c.
    ElementSet meet = full;
    for (const ElementSet& d : closed.sets())
      if (c != d && c.is_subset_of(d)) meet &= d;
    if (meet == c) continue;
    int x = -1;
    for (int cand = 0; cand < op.ground()->size(); ++cand) {
      if (c.contains(cand)) continue;
      if (is_attached(op, c, cand)) {
        if (x >= 0) throw NotConvexGeometry("irreducible attached to two elements");
        x = cand;
      }
    }
    if (x < 0) throw NotConvexGeometry("irreducible attached to no element");
    out.add(x, c);
  }
  return out;
}

SetFamily mingen_oracle(const ClosureOperator& op, int x, int cap) {
  check_cap(op.ground(), cap, "mingen_oracle");
  std::vector<ElementSet> generating;
  for_each_subset(op.ground(), [&](const ElementSet& s) {
    if (s.contains(x)) return;
    if (op.closure(s).contains(x)) generating.push_back(s);
  });
  std::vector<ElementSet> minimal;
  for (const ElementSet& a : generating) {
    bool is_min = true;
    for (const ElementSet& b : generating)
      if (b != a && b.is_subset_of(a)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end(), ElementSet::lex_less);
  return SetFamily(op.ground(), std::move(minimal));
}

}  // namespace cskit
