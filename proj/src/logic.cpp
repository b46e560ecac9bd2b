#include "hardy/logic.hpp"

#include <sstream>

namespace hardy {

namespace {

// Per-party variable ids: var(p, choice) = offset[p] + choice, 0-based.
struct VarLayout {
  std::vector<int> offset;
  int total = 0;

  explicit VarLayout(const MeasurementScenario& sc) {
    offset.resize(sc.parties);
    for (int p = 0; p < sc.parties; ++p) {
      offset[p] = total;
      total += static_cast<int>(sc.menu[p].size());
    }
  }
};

}  // namespace

ContextualityVerdict check_logical(const EmpiricalModel& m) {
  const MeasurementScenario& sc = m.scenario;
  const int n = sc.parties;
  VarLayout vars(sc);
  if (vars.total > 24) throw input_error("check_logical: more than 24 observables");

  const int contexts = sc.context_count();
  std::vector<std::vector<int>> vid(contexts, std::vector<int>(n));
  for (int c = 0; c < contexts; ++c) {
    std::vector<int> choice = sc.context_choice(c);
    for (int p = 0; p < n; ++p) vid[c][p] = vars.offset[p] + choice[p];
  }
  std::vector<std::vector<uint8_t>> in_support(contexts);
  for (int c = 0; c < contexts; ++c) {
    in_support[c].resize(m.tables[c].size());
    for (size_t o = 0; o < m.tables[c].size(); ++o)
      in_support[c][o] = m.tables[c][o] > m.support_tol;
  }

  // extendable[c][o]: some global assignment restricting to outcome o at
  // context c is consistent with every other context's support.
  std::vector<std::vector<uint8_t>> extendable(contexts);
  for (int c = 0; c < contexts; ++c) extendable[c].assign(m.tables[c].size(), 0);
  bool found_global = false;

  std::vector<unsigned> mask(contexts);
  const uint64_t assignments = uint64_t{1} << vars.total;
  for (uint64_t g = 0; g < assignments; ++g) {
    int bad_count = 0;
    int bad_ctx = -1;
    for (int c = 0; c < contexts; ++c) {
      unsigned o = 0;
      for (int p = 0; p < n; ++p) o = (o << 1) | ((g >> vid[c][p]) & 1u);
      mask[c] = o;
      if (!in_support[c][o]) {
        if (++bad_count > 1) break;
        bad_ctx = c;
      }
    }
    if (bad_count == 0) {
      found_global = true;
      for (int c = 0; c < contexts; ++c) extendable[c][mask[c]] = 1;
    } else if (bad_count == 1) {
      extendable[bad_ctx][mask[bad_ctx]] = 1;
    }
  }

  ContextualityVerdict v;
  v.strongly_contextual = !found_global;
  for (int c = 0; c < contexts; ++c)
    for (size_t o = in_support[c].size(); o-- > 0;)  // all-plus first
      if (in_support[c][o] && !extendable[c][o])
        v.witnesses.push_back({c, static_cast<unsigned>(o)});
  v.logically_contextual = !v.witnesses.empty();
  return v;
}

std::string export_dimacs(const EmpiricalModel& m, const ContextWitness& w) {
  const MeasurementScenario& sc = m.scenario;
  const int n = sc.parties;
  const int contexts = sc.context_count();
  if (w.context < 0 || w.context >= contexts)
    throw input_error("export_dimacs: context index out of range");
  if (w.outcome >= m.tables[w.context].size())
    throw input_error("export_dimacs: outcome out of range");
  if (!(m.tables[w.context][w.outcome] > m.support_tol))
    throw input_error("export_dimacs: chosen outcome is not in the context's support");

  VarLayout vars(sc);
  std::vector<int> wchoice = sc.context_choice(w.context);

  std::ostringstream head, body;
  int var_count = vars.total;
  int clause_count = 0;

  head << "c paradox formula: context " << sc.context_label(w.context) << ", outcome "
       << outcome_to_string(w.outcome, n) << "\n";
  head << "c a satisfying assignment is a global outcome consistent with every other\n";
  head << "c context's support; unsatisfiable = the outcome witnesses contextuality\n";
  for (int p = 0; p < n; ++p)
    for (size_t i = 0; i < sc.menu[p].size(); ++i)
      head << "c var " << (vars.offset[p] + static_cast<int>(i) + 1) << " = party " << (p + 1)
           << " observable " << sc.menu[p][i] << " (true = +)\n";

  // The witness outcome, as unit clauses on its context's variables.
  for (int p = 0; p < n; ++p) {
    int var = vars.offset[p] + wchoice[p] + 1;
    bool plus = (w.outcome >> (n - 1 - p)) & 1u;
    body << (plus ? var : -var) << " 0\n";
    ++clause_count;
  }

  // Every other context: one selector per support outcome; the selector
  // forces that outcome's literals, and some selector must hold.
  for (int c = 0; c < contexts; ++c) {
    if (c == w.context) continue;
    std::vector<int> choice = sc.context_choice(c);
    std::vector<unsigned> sup;
    for (unsigned o = 0; o < m.tables[c].size(); ++o)
      if (m.tables[c][o] > m.support_tol) sup.push_back(o);

    std::ostringstream any;
    for (unsigned o : sup) {
      int sel = ++var_count;
      head << "c var " << sel << " = selector: context " << sc.context_label(c) << " outcome "
           << outcome_to_string(o, n) << "\n";
      any << sel << " ";
      for (int p = 0; p < n; ++p) {
        int var = vars.offset[p] + choice[p] + 1;
        bool plus = (o >> (n - 1 - p)) & 1u;
        body << -sel << " " << (plus ? var : -var) << " 0\n";
        ++clause_count;
      }
    }
    body << any.str() << "0\n";
    ++clause_count;
  }

  std::ostringstream out;
  out << head.str() << "p cnf " << var_count << " " << clause_count << "\n" << body.str();
  return out.str();
}

double hardy_paradox_probability(const EmpiricalModel& m, const ContextWitness& w) {
  if (w.context < 0 || w.context >= static_cast<int>(m.tables.size()))
    throw input_error("hardy_paradox_probability: context index out of range");
  if (w.outcome >= m.tables[w.context].size())
    throw input_error("hardy_paradox_probability: outcome out of range");
  return m.tables[w.context][w.outcome];
}

}  // namespace hardy
