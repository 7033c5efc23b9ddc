#include "cskit/critgen.hpp"

#include <algorithm>

#include "cskit/acyclic.hpp"

namespace cskit {

bool is_critical(const ClosureOperator& op, int x, const ElementSet& a) {
  if (a.contains(x)) return false;
  ElementSet closed = op.closure(a);
  if (!closed.contains(x)) return false;
  for (int e = a.first(); e >= 0; e = a.next(e)) {
    ElementSet rest = a;
    rest.erase(e);
    if (op.closure(rest).contains(x)) return false;  // not a minimal generator
    ElementSet drop = closed;
    drop.erase(e);
    drop.erase(x);
    if (!is_closed(op, drop)) return false;
  }
  return true;
}

ElementSet critical_descent(const ClosureOperator& op, int x, const ElementSet& y) {
  if (y.contains(x)) throw PreconditionViolated("critical_descent: x lies in y");
  ElementSet current = op.closure(y);
  if (!current.contains(x))
    throw PreconditionViolated("critical_descent: x not generated by y");
  while (true) {
    ElementSet ex = extreme_points(op, current);
    int pick = -1;
    for (int e = ex.first(); e >= 0; e = ex.next(e)) {
      ElementSet pred = current;
      pred.erase(e);
      // Admissible when x stays a non-extreme member of the predecessor.
      ElementSet pred_rest = pred;
      pred_rest.erase(x);
      if (op.closure(pred_rest).contains(x)) {
        pick = e;
        break;
      }
    }
    if (pick < 0) return ex;
    current.erase(pick);
  }
}

ImplicationalBase critical_base_from_ib(const ImplicationalBase& ib) {
  if (!is_acyclic_ib(ib)) throw CyclicError("critical_base_from_ib: base is cyclic");
  ClosureOperator op = ClosureOperator::from_base(ib);
  std::vector<Implication> found;
  for (const Implication& unit : unit_expansion(ib).implications()) {
    int b = unit.conclusion.first();
    ElementSet premise = critical_descent(op, b, unit.premise);
    Implication imp{std::move(premise), unit.conclusion};
    if (std::find(found.begin(), found.end(), imp) == found.end())
      found.push_back(std::move(imp));
  }
  std::vector<int> topo = topological_order(implication_graph(ib));
  std::vector<int> pos(static_cast<size_t>(ib.ground()->size()), 0);
  for (size_t i = 0; i < topo.size(); ++i) pos[static_cast<size_t>(topo[i])] = static_cast<int>(i);
  std::stable_sort(found.begin(), found.end(), [&](const Implication& a, const Implication& b) {
    int pa = pos[static_cast<size_t>(a.conclusion.first())];
    int pb = pos[static_cast<size_t>(b.conclusion.first())];
    if (pa != pb) return pa < pb;
    return ElementSet::lex_less(a.premise, b.premise);
  });
  return ImplicationalBase(ib.ground(), std::move(found));
}

}  // namespace cskit
