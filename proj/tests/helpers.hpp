#pragma once

// Shared test utilities: reference states, an independent truth-table
// contextuality checker, a small DPLL solver that consumes exported DIMACS
// text, a no-signalling checker, and generators for randomized properties.
// Everything here is deliberately written against the public API only, with
// its own bookkeeping, so it can serve as an oracle for the library.

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hardy/linalg.hpp"
#include "hardy/logic.hpp"
#include "hardy/model.hpp"
#include "hardy/pn_test.hpp"
#include "hardy/state.hpp"
#include "hardy/witness.hpp"

namespace hardy::testing {

inline QubitState ghz(int n) {
  CVec amp(size_t{1} << n, 0.0);
  const double s = 1.0 / std::sqrt(2.0);
  amp.front() = s;
  amp.back() = s;
  return {n, amp};
}

inline QubitState w_state(int n) {
  CVec amp(size_t{1} << n, 0.0);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (int q = 0; q < n; ++q) amp[size_t{1} << q] = s;
  return {n, amp};
}

inline QubitState bell() { return ghz(2); }

inline Observable x_obs() {
  const double s = 1.0 / std::sqrt(2.0);
  return {"X", {s, s}, {s, -s}};
}

inline Observable y_obs() {
  const double s = 1.0 / std::sqrt(2.0);
  return {"Y", {Complex(s, 0), Complex(0, s)}, {Complex(s, 0), Complex(0, -s)}};
}

// ---------------------------------------------------------------------------
// Independent truth-table checker: builds the paradox formula semantics
// directly (candidate outcome fixed, every other context must restrict into
// its support) and evaluates it over all global assignments.

struct OracleVerdict {
  bool logically = false;
  bool strongly = false;
  std::vector<ContextWitness> witnesses;
};

inline OracleVerdict truth_table_check(const EmpiricalModel& m) {
  const MeasurementScenario& sc = m.scenario;
  const int n = sc.parties;
  std::vector<int> offset(n);
  int total = 0;
  for (int p = 0; p < n; ++p) {
    offset[p] = total;
    total += static_cast<int>(sc.menu[p].size());
  }
  const int contexts = sc.context_count();
  std::vector<std::vector<int>> vid(contexts, std::vector<int>(n));
  for (int c = 0; c < contexts; ++c) {
    std::vector<int> choice = sc.context_choice(c);
    for (int p = 0; p < n; ++p) vid[c][p] = offset[p] + choice[p];
  }
  auto restrict_to = [&](uint64_t g, int c) {
    unsigned o = 0;
    for (int p = 0; p < n; ++p) o = (o << 1) | ((g >> vid[c][p]) & 1u);
    return o;
  };
  auto in_support = [&](int c, unsigned o) { return m.tables[c][o] > m.support_tol; };

  OracleVerdict v;
  const uint64_t assignments = uint64_t{1} << total;
  v.strongly = true;
  for (uint64_t g = 0; g < assignments && v.strongly; ++g) {
    bool all = true;
    for (int c = 0; c < contexts && all; ++c) all = in_support(c, restrict_to(g, c));
    if (all) v.strongly = false;
  }
  for (int c = 0; c < contexts; ++c) {
    for (size_t o = m.tables[c].size(); o-- > 0;) {
      if (!in_support(c, static_cast<unsigned>(o))) continue;
      bool extendable = false;
      for (uint64_t g = 0; g < assignments && !extendable; ++g) {
        if (restrict_to(g, c) != o) continue;
        bool ok = true;
        for (int c2 = 0; c2 < contexts && ok; ++c2)
          if (c2 != c) ok = in_support(c2, restrict_to(g, c2));
        extendable = ok;
      }
      if (!extendable) v.witnesses.push_back({c, static_cast<unsigned>(o)});
    }
  }
  v.logically = !v.witnesses.empty();
  return v;
}

// ---------------------------------------------------------------------------
// Minimal DIMACS reader + DPLL. Consumes the exported CNF text verbatim, so
// the byte format itself is exercised.

struct Cnf {
  int vars = 0;
  std::vector<std::vector<int>> clauses;
};

inline Cnf parse_dimacs(const std::string& text) {
  Cnf cnf;
  std::istringstream in(text);
  std::string line;
  int declared_clauses = -1;
  std::vector<int> cur;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream h(line);
      std::string p, fmt;
      h >> p >> fmt >> cnf.vars >> declared_clauses;
      if (fmt != "cnf") throw std::runtime_error("dimacs: bad header");
      continue;
    }
    std::istringstream ls(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(cur);
        cur.clear();
      } else {
        if (std::abs(lit) > cnf.vars) throw std::runtime_error("dimacs: literal out of range");
        cur.push_back(lit);
      }
    }
  }
  if (!cur.empty()) throw std::runtime_error("dimacs: unterminated clause");
  if (declared_clauses != static_cast<int>(cnf.clauses.size()))
    throw std::runtime_error("dimacs: clause count mismatch");
  return cnf;
}

inline bool dpll_sat_rec(const Cnf& cnf, std::vector<int8_t>& assign) {
  // Unit propagation to a fixed point.
  bool changed = true;
  std::vector<std::pair<int, int8_t>> trail;
  auto undo = [&]() {
    for (auto [v, _] : trail) assign[v] = 0;
  };
  while (changed) {
    changed = false;
    for (const auto& clause : cnf.clauses) {
      int unassigned = 0, last = 0;
      bool satisfied = false;
      for (int lit : clause) {
        int v = std::abs(lit);
        if (assign[v] == 0) {
          ++unassigned;
          last = lit;
        } else if ((assign[v] > 0) == (lit > 0)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (unassigned == 0) {
        undo();
        return false;  // conflict
      }
      if (unassigned == 1) {
        int v = std::abs(last);
        assign[v] = last > 0 ? 1 : -1;
        trail.push_back({v, assign[v]});
        changed = true;
      }
    }
  }
  int branch = 0;
  for (int v = 1; v <= cnf.vars && !branch; ++v)
    if (assign[v] == 0) branch = v;
  if (!branch) return true;  // no conflict, everything assigned
  for (int8_t val : {int8_t{1}, int8_t{-1}}) {
    assign[branch] = val;
    if (dpll_sat_rec(cnf, assign)) return true;
    assign[branch] = 0;
  }
  undo();
  return false;
}

inline bool dpll_sat(const std::string& dimacs_text) {
  Cnf cnf = parse_dimacs(dimacs_text);
  std::vector<int8_t> assign(cnf.vars + 1, 0);
  return dpll_sat_rec(cnf, assign);
}

// ---------------------------------------------------------------------------
// No-signalling: for every pair of contexts, the marginal over the parties
// whose observables agree must match. Returns the worst discrepancy.

inline double no_signalling_violation(const EmpiricalModel& m) {
  const MeasurementScenario& sc = m.scenario;
  const int n = sc.parties;
  const int contexts = sc.context_count();
  double worst = 0.0;
  for (int c1 = 0; c1 < contexts; ++c1) {
    std::vector<int> ch1 = sc.context_choice(c1);
    for (int c2 = c1 + 1; c2 < contexts; ++c2) {
      std::vector<int> ch2 = sc.context_choice(c2);
      std::vector<int> shared;
      for (int p = 0; p < n; ++p)
        if (ch1[p] == ch2[p]) shared.push_back(p);
      if (shared.empty()) continue;
      auto marginal = [&](int c) {
        std::map<unsigned, double> marg;
        for (size_t o = 0; o < m.tables[c].size(); ++o) {
          unsigned key = 0;
          for (int p : shared) key = (key << 1) | ((o >> (n - 1 - p)) & 1u);
          marg[key] += m.tables[c][o];
        }
        return marg;
      };
      std::map<unsigned, double> m1 = marginal(c1), m2 = marginal(c2);
      for (const auto& [key, v1] : m1) worst = std::max(worst, std::abs(v1 - m2[key]));
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Generators.

// Random disjoint pairing of a subset of positions 1..n.
inline std::vector<std::pair<int, int>> random_matching(int n, Rng& rng) {
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[i] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(pos[i], pos[rng.eng() % static_cast<uint64_t>(i + 1)]);
  int k = static_cast<int>(rng.eng() % static_cast<uint64_t>(n / 2 + 1));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) pairs.emplace_back(pos[2 * i], pos[2 * i + 1]);
  return pairs;
}

// Random tiny scenario with uniform-over-support tables: supports are exact,
// probabilities exactly 1/|S|. Good fodder for the logic oracles.
inline EmpiricalModel random_small_model(Rng& rng) {
  EmpiricalModel m;
  int parties = 2 + static_cast<int>(rng.eng() % 2);
  m.scenario.parties = parties;
  for (int p = 0; p < parties; ++p) {
    int sz = 1 + static_cast<int>(rng.eng() % 2);
    std::vector<std::string> labels;
    for (int i = 0; i < sz; ++i) labels.push_back("M" + std::to_string(i));
    m.scenario.menu.push_back(labels);
  }
  int contexts = m.scenario.context_count();
  size_t outcomes = size_t{1} << parties;
  for (int c = 0; c < contexts; ++c) {
    uint64_t full = (uint64_t{1} << outcomes) - 1;
    uint64_t sup = 1 + rng.eng() % full;  // nonempty subset of outcomes
    int count = 0;
    for (size_t o = 0; o < outcomes; ++o) count += (sup >> o) & 1u;
    std::vector<double> tbl(outcomes, 0.0);
    for (size_t o = 0; o < outcomes; ++o)
      if ((sup >> o) & 1u) tbl[o] = 1.0 / count;
    m.tables.push_back(std::move(tbl));
  }
  return m;
}

// The Popescu-Rohrlich box: perfectly correlated except when both parties
// pick their second observable, then perfectly anticorrelated.
inline EmpiricalModel pr_box() {
  EmpiricalModel m;
  m.scenario.parties = 2;
  m.scenario.menu = {{"A1", "A2"}, {"B1", "B2"}};
  // outcome masks (party 1 msb): ++ = 3, +- = 2, -+ = 1, -- = 0
  m.tables = {
      {0.5, 0.0, 0.0, 0.5},  // A1,B1
      {0.5, 0.0, 0.0, 0.5},  // A1,B2
      {0.5, 0.0, 0.0, 0.5},  // A2,B1
      {0.0, 0.5, 0.5, 0.0},  // A2,B2
  };
  return m;
}

inline std::map<int, std::vector<Observable>> xy_assignment(int parties) {
  std::map<int, std::vector<Observable>> a;
  for (int p = 1; p <= parties; ++p) a[p] = {x_obs(), y_obs()};
  return a;
}

}  // namespace hardy::testing
