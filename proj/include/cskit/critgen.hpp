#pragma once

#include "cskit/closure.hpp"

namespace cskit {

// True iff a is a minimal generator of x whose closure drops to a closed
// set after removing any {e, x} pair. Requires x not in a.
bool is_critical(const ClosureOperator& op, int x, const ElementSet& a);

// Descend from closure(y) to a critical generator A of x with
// closure(A) contained in closure(y). Deterministic: at each step the
// smallest-index admissible extreme point is removed. Requires x not in
// y and x in closure(y); throws PreconditionViolated otherwise.
ElementSet critical_descent(const ClosureOperator& op, int x, const ElementSet& y);

// The unit critical base {A -> b : A critical generator of b}, obtained
// by descending from every unit implication of the input, deduplicated
// and ordered by (topological conclusion, lexicographic premise).
// Throws CyclicError for cyclic bases.
ImplicationalBase critical_base_from_ib(const ImplicationalBase& ib);

}  // namespace cskit
