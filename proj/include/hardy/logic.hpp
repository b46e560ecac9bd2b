#pragma once

#include "hardy/model.hpp"
#include "hardy/types.hpp"

namespace hardy {

// A possible joint outcome of one context, named as a paradox candidate.
struct ContextWitness {
  int context = 0;
  unsigned outcome = 0;
  bool operator==(const ContextWitness&) const = default;
};

// Result of the exhaustive global-assignment check. A model is logically
// contextual when some support outcome extends to no global assignment that
// is consistent with every other context's support; strongly contextual when
// no global assignment is consistent with all contexts at once. witnesses
// lists every support outcome with no such extension (context ascending,
// all-plus outcome first within a context).
struct ContextualityVerdict {
  bool logically_contextual = false;
  bool strongly_contextual = false;
  std::vector<ContextWitness> witnesses;
};

// Brute force over all assignments of {+,-} to the observable set X.
// input_error if |X| > 24.
ContextualityVerdict check_logical(const EmpiricalModel& m);

// DIMACS CNF encoding of the paradox formula for one witness: the witness
// outcome is forced by unit clauses, and every other context contributes
// "some support outcome holds" via one selector variable per support
// element. The formula is satisfiable iff the witness is NOT a paradox.
// input_error if the chosen outcome is not in its context's support.
std::string export_dimacs(const EmpiricalModel& m, const ContextWitness& w);

// The probability the model assigns to the witness outcome.
double hardy_paradox_probability(const EmpiricalModel& m, const ContextWitness& w);

}  // namespace hardy
