#include "hardy/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace hardy {

int MeasurementScenario::context_count() const {
  int c = 1;
  for (const auto& m : menu) c *= static_cast<int>(m.size());
  return c;
}

std::vector<int> MeasurementScenario::context_choice(int ctx) const {
  if (ctx < 0 || ctx >= context_count()) throw input_error("context index out of range");
  std::vector<int> choice(parties);
  for (int p = parties - 1; p >= 0; --p) {
    int sz = static_cast<int>(menu[p].size());
    choice[p] = ctx % sz;
    ctx /= sz;
  }
  return choice;
}

std::string MeasurementScenario::context_label(int ctx) const {
  std::vector<int> choice = context_choice(ctx);
  std::string out;
  for (int p = 0; p < parties; ++p) {
    if (p) out += ",";
    out += menu[p][choice[p]];
  }
  return out;
}

std::string outcome_to_string(unsigned mask, int parties) {
  std::string s(parties, '-');
  for (int p = 0; p < parties; ++p)
    if ((mask >> (parties - 1 - p)) & 1u) s[p] = '+';
  return s;
}

unsigned outcome_from_string(const std::string& s) {
  unsigned mask = 0;
  for (char c : s) {
    if (c != '+' && c != '-') throw input_error("outcome string must be over {+,-}");
    mask = (mask << 1) | (c == '+' ? 1u : 0u);
  }
  if (s.empty() || s.size() > 24) throw input_error("outcome string length out of range");
  return mask;
}

namespace {

void check_observable(const Observable& o) {
  if (o.plus.size() != 2 || o.minus.size() != 2)
    throw input_error("observable eigenvectors must be 2-vectors");
  if (std::abs(norm(o.plus) - 1.0) > 1e-8 || std::abs(norm(o.minus) - 1.0) > 1e-8 ||
      std::abs(inner(o.plus, o.minus)) > 1e-8)
    throw input_error("observable eigenbasis is not orthonormal");
}

// Contract the most significant qubit of v against eigenvector e.
CVec contract_msb(const CVec& v, const CVec& e) {
  size_t half = v.size() / 2;
  CVec w(half);
  for (size_t r = 0; r < half; ++r)
    w[r] = std::conj(e[0]) * v[r] + std::conj(e[1]) * v[r + half];
  return w;
}

}  // namespace

double born_probability(const QubitState& state, const std::vector<Observable>& context,
                        unsigned outcome_mask) {
  if (static_cast<int>(context.size()) != state.n)
    throw input_error("born_probability: need one observable per qubit");
  for (const Observable& o : context) check_observable(o);
  if (outcome_mask >> state.n) throw input_error("born_probability: outcome mask out of range");
  CVec v = state.amp;
  for (int p = 0; p < state.n; ++p) {
    bool plus = (outcome_mask >> (state.n - 1 - p)) & 1u;
    v = contract_msb(v, plus ? context[p].plus : context[p].minus);
  }
  return std::min(1.0, std::norm(v[0]));
}

EmpiricalModel build_model(const QubitState& state,
                           const std::map<int, std::vector<Observable>>& assignment,
                           double support_tol) {
  const int n = state.n;
  EmpiricalModel m;
  m.support_tol = support_tol;
  m.scenario.parties = n;
  m.scenario.menu.resize(n);
  {
    int expect = 1;
    for (const auto& [party, obs] : assignment) {
      if (party != expect++) throw input_error("build_model: assignment must cover parties 1..n");
      if (obs.empty()) throw input_error("build_model: empty menu for a party");
      for (const Observable& o : obs) {
        check_observable(o);
        for (const std::string& seen : m.scenario.menu[party - 1])
          if (seen == o.label) throw input_error("build_model: duplicate label within a party");
        m.scenario.menu[party - 1].push_back(o.label);
      }
    }
    if (expect != n + 1) throw input_error("build_model: assignment must cover parties 1..n");
  }

  int contexts = m.scenario.context_count();
  m.tables.assign(contexts, std::vector<double>(size_t{1} << n, 0.0));
  for (int c = 0; c < contexts; ++c) {
    std::vector<int> choice = m.scenario.context_choice(c);
    std::vector<double>& tbl = m.tables[c];

    // Walk the binary outcome tree, contracting one party per level; the
    // whole table costs O(n * 2^n) instead of 4^n.
    auto descend = [&](auto&& self, const CVec& v, int party, unsigned mask) -> void {
      if (party > n) {
        tbl[mask] = std::min(1.0, std::norm(v[0]));
        return;
      }
      const Observable& o = assignment.at(party)[choice[party - 1]];
      self(self, contract_msb(v, o.plus), party + 1, (mask << 1) | 1u);
      self(self, contract_msb(v, o.minus), party + 1, mask << 1);
    };
    descend(descend, state.amp, 1, 0u);

    double sum = 0.0;
    for (double p : tbl) sum += p;
    if (std::abs(sum - 1.0) > 1e-9)
      throw internal_error("build_model: context table does not normalize");
  }
  return m;
}

std::vector<unsigned> support(const EmpiricalModel& m, int ctx) {
  if (ctx < 0 || ctx >= static_cast<int>(m.tables.size()))
    throw input_error("support: context index out of range");
  std::vector<unsigned> out;
  for (unsigned o = 0; o < m.tables[ctx].size(); ++o)
    if (m.tables[ctx][o] > m.support_tol) out.push_back(o);
  return out;
}

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

std::string model_to_json(const EmpiricalModel& m) {
  std::ostringstream out;
  out << "{\n  \"support_tol\": " << fmt17(m.support_tol) << ",\n";
  out << "  \"parties\": " << m.scenario.parties << ",\n  \"menu\": [";
  for (int p = 0; p < m.scenario.parties; ++p) {
    if (p) out << ", ";
    out << "[";
    for (size_t i = 0; i < m.scenario.menu[p].size(); ++i)
      out << (i ? ", " : "") << "\"" << m.scenario.menu[p][i] << "\"";
    out << "]";
  }
  out << "],\n  \"contexts\": [\n";
  int contexts = m.scenario.context_count();
  for (int c = 0; c < contexts; ++c) {
    std::vector<int> choice = m.scenario.context_choice(c);
    out << "    {\"choice\": [";
    for (int p = 0; p < m.scenario.parties; ++p)
      out << (p ? ", " : "") << "\"" << m.scenario.menu[p][choice[p]] << "\"";
    out << "], \"table\": {";
    const auto& tbl = m.tables[c];
    bool first = true;
    for (size_t o = tbl.size(); o-- > 0;) {  // all-plus first
      out << (first ? "" : ", ") << "\""
          << outcome_to_string(static_cast<unsigned>(o), m.scenario.parties)
          << "\": " << fmt17(tbl[o]);
      first = false;
    }
    out << "}}" << (c + 1 < contexts ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

EmpiricalModel model_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("model file: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("parties") || !j.contains("menu") || !j.contains("contexts"))
    throw input_error("model file: need parties, menu, contexts");
  EmpiricalModel m;
  m.support_tol = j.value("support_tol", 1e-9);
  if (!(m.support_tol >= 0.0) || !std::isfinite(m.support_tol))
    throw input_error("model file: bad support_tol");
  if (!j["parties"].is_number_integer()) throw input_error("model file: parties must be an integer");
  m.scenario.parties = j["parties"].get<int>();
  if (m.scenario.parties < 1 || m.scenario.parties > 20)
    throw input_error("model file: parties out of range (1..20)");
  if (!j["menu"].is_array() || j["menu"].size() != static_cast<size_t>(m.scenario.parties))
    throw input_error("model file: menu must list one label array per party");
  for (const auto& arr : j["menu"]) {
    if (!arr.is_array() || arr.empty()) throw input_error("model file: empty menu");
    std::vector<std::string> labels;
    for (const auto& l : arr) {
      std::string s = l.get<std::string>();
      if (s.empty() || std::find(labels.begin(), labels.end(), s) != labels.end())
        throw input_error("model file: menu labels must be nonempty and unique per party");
      labels.push_back(s);
    }
    m.scenario.menu.push_back(std::move(labels));
  }
  int contexts = m.scenario.context_count();
  if (!j["contexts"].is_array() || j["contexts"].size() != static_cast<size_t>(contexts))
    throw input_error("model file: expected " + std::to_string(contexts) + " contexts");
  size_t outcomes = size_t{1} << m.scenario.parties;
  for (int c = 0; c < contexts; ++c) {
    const auto& jc = j["contexts"][c];
    if (!jc.is_object() || !jc.contains("choice") || !jc.contains("table"))
      throw input_error("model file: each context needs choice and table");
    std::vector<int> choice = m.scenario.context_choice(c);
    const auto& jchoice = jc["choice"];
    if (!jchoice.is_array() || jchoice.size() != static_cast<size_t>(m.scenario.parties))
      throw input_error("model file: bad context choice");
    for (int p = 0; p < m.scenario.parties; ++p)
      if (jchoice[p].get<std::string>() != m.scenario.menu[p][choice[p]])
        throw input_error("model file: contexts must appear in canonical order");
    std::vector<double> tbl(outcomes, 0.0);
    const auto& jt = jc["table"];
    if (!jt.is_object()) throw input_error("model file: table must be an object");
    double sum = 0.0;
    size_t seen = 0;
    for (const auto& [key, val] : jt.items()) {
      if (key.size() != static_cast<size_t>(m.scenario.parties))
        throw input_error("model file: outcome key has wrong length");
      unsigned mask = outcome_from_string(key);
      if (!val.is_number()) throw input_error("model file: probabilities must be numbers");
      double p = val.get<double>();
      if (!std::isfinite(p) || p < -1e-12 || p > 1.0 + 1e-9)
        throw input_error("model file: probability out of range");
      tbl[mask] = std::clamp(p, 0.0, 1.0);
      sum += tbl[mask];
      ++seen;
    }
    if (seen != outcomes) throw input_error("model file: table must list every outcome");
    if (std::abs(sum - 1.0) > 1e-6)
      throw input_error("model file: context table does not normalize");
    m.tables.push_back(std::move(tbl));
  }
  return m;
}

}  // namespace hardy
