#pragma once

#include <map>

#include "hardy/state.hpp"
#include "hardy/types.hpp"
#include "hardy/witness.hpp"

namespace hardy {

// The measurement scenario: each party's menu of observable labels. A
// context is one label per party; contexts are indexed with party 1 as the
// most significant digit.
struct MeasurementScenario {
  int parties = 0;
  std::vector<std::vector<std::string>> menu;  // menu[p-1] = labels of party p

  int context_count() const;
  std::vector<int> context_choice(int ctx) const;  // per-party menu index
  std::string context_label(int ctx) const;        // e.g. "D,D,B"
};

// Outcome masks: bit (parties - p) of the mask holds party p's outcome,
// 1 = '+'. So for 3 parties, "+-+" is 0b101.
std::string outcome_to_string(unsigned mask, int parties);
unsigned outcome_from_string(const std::string& s);

// One probability table per context, indexed by outcome mask.
struct EmpiricalModel {
  MeasurementScenario scenario;
  std::vector<std::vector<double>> tables;
  double support_tol = 1e-9;
};

// P(outcome | measure context on state), context = one observable per party
// in party order.
double born_probability(const QubitState& state, const std::vector<Observable>& context,
                        unsigned outcome_mask);

// Evaluate the full empirical model of an observable assignment (as produced
// by classify) on a state. Every context table is checked to normalize.
EmpiricalModel build_model(const QubitState& state,
                           const std::map<int, std::vector<Observable>>& assignment,
                           double support_tol = 1e-9);

// Outcome masks with probability above support_tol, ascending.
std::vector<unsigned> support(const EmpiricalModel& m, int ctx);

// Model file round-trip (JSON).
std::string model_to_json(const EmpiricalModel& m);
EmpiricalModel model_from_json(const std::string& text);

}  // namespace hardy
