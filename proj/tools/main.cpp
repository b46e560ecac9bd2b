// hardy — classify n-qubit pure states as P_n members or as logically
// contextual, emit the witnessing observables, and verify the resulting
// Hardy paradox by exhaustive satisfiability over the empirical model.
//
// Exit codes: 0 verdict reached (either class), 1 verification failure,
// 2 input error, 3 internal-consistency violation.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hardy/logic.hpp"
#include "hardy/model.hpp"
#include "hardy/pn_test.hpp"
#include "hardy/state.hpp"
#include "hardy/types.hpp"
#include "hardy/witness.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hardy::input_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hardy::input_error("cannot write file: " + path);
  out << text;
  if (!out.good()) throw hardy::input_error("write failed: " + path);
}

void emit(const std::optional<std::string>& out_path, const std::string& text) {
  if (out_path)
    write_file(*out_path, text);
  else
    std::cout << text;
}

// Seed precedence: --seed flag, then HARDY_SEED, then 0.
uint64_t resolve_seed(const std::optional<uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HARDY_SEED")) {
    std::string s(env);
    size_t used = 0;
    uint64_t v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      throw hardy::input_error("HARDY_SEED is not an unsigned integer: " + s);
    }
    if (used != s.size()) throw hardy::input_error("HARDY_SEED is not an unsigned integer: " + s);
    return v;
  }
  return 0;
}

// Short complex rendering for human-format summaries (full precision lives
// in the JSON files).
std::string short_complex(hardy::Complex z) {
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.6g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  }
  return buf;
}

std::string short_vec(const hardy::CVec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += short_complex(v[i]);
  }
  return s + "]";
}

// "1-2,3-4" -> {(1,2),(3,4)}; empty string -> no pairs.
std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  if (text.empty()) return pairs;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t dash = item.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == item.size())
      throw hardy::input_error("bad pair syntax (want e.g. 1-2,3-4): " + item);
    try {
      pairs.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    } catch (const std::exception&) {
      throw hardy::input_error("bad pair syntax (want e.g. 1-2,3-4): " + item);
    }
  }
  return pairs;
}

struct ClassifyArgs {
  std::string state_path;
  bool verify = false;
  std::optional<std::string> out;
  std::string format = "human";
  hardy::Tolerances tol;
  double support_tol = hardy::Tolerances{}.support;
};

int run_classify(const ClassifyArgs& a) {
  hardy::QubitState state = hardy::parse_state(read_file(a.state_path));
  hardy::WitnessReport rep = hardy::classify(state, a.tol);

  if (rep.verdict == hardy::Verdict::InPn) {
    if (a.format == "json")
      std::cout << hardy::witness_to_json(rep);
    else
      std::cout << "P_n: " << hardy::to_string(rep.pn.type) << "\n";
    // A membership verdict produces no witness file unless one was asked for.
    if (a.out) write_file(*a.out, hardy::witness_to_json(rep));
    return 0;
  }

  std::string witness_path = a.out ? *a.out : a.state_path + ".witness.json";
  write_file(witness_path, hardy::witness_to_json(rep));

  bool verified = false;
  std::vector<hardy::ContextWitness> witnesses;
  hardy::EmpiricalModel model;
  if (a.verify) {
    model = hardy::build_model(state, rep.assignment, a.support_tol);
    hardy::ContextualityVerdict v = hardy::check_logical(model);
    verified = v.logically_contextual;
    witnesses = v.witnesses;
  }

  if (a.format == "json") {
    std::cout << hardy::witness_to_json(rep);
  } else {
    int total = 0;
    for (const auto& [party, obs] : rep.assignment) total += static_cast<int>(obs.size());
    std::cout << (a.verify ? (verified ? "contextual, verified" : "contextual, VERIFICATION FAILED")
                           : "contextual")
              << "\n";
    std::cout << "witness file: " << witness_path << "\n";
    std::cout << "observables (" << total << "):\n";
    for (const auto& [party, obs] : rep.assignment)
      for (const auto& o : obs)
        std::cout << "  party " << party << "  " << o.label << "  plus = " << short_vec(o.plus)
                  << "  minus = " << short_vec(o.minus) << "\n";
    if (a.verify && verified) {
      std::cout << "paradox events (" << witnesses.size() << "):\n";
      for (const auto& w : witnesses)
        std::cout << "  " << model.scenario.context_label(w.context) << "  "
                  << hardy::outcome_to_string(w.outcome, model.scenario.parties) << "  p = "
                  << hardy::hardy_paradox_probability(model, w) << "\n";
    }
  }
  if (a.verify && !verified) {
    std::cerr << "error: witness model is not logically contextual\n";
    return 1;
  }
  return 0;
}

struct RandomArgs {
  int n = 0;
  std::string kind = "haar";
  std::optional<uint64_t> seed;
  std::optional<std::string> out;
};

int run_random(const RandomArgs& a) {
  if (a.n < 1 || a.n > 20) throw hardy::input_error("qubit count must be in 1..20");
  hardy::Rng rng(resolve_seed(a.seed));
  hardy::QubitState state;
  if (a.kind == "haar") {
    state = hardy::random_state(a.n, rng);
  } else if (a.kind == "pn" || a.kind.rfind("pn:", 0) == 0) {
    std::string spec = a.kind == "pn" ? "" : a.kind.substr(3);
    state = hardy::random_pn_state(a.n, parse_pairs(spec), rng);
  } else {
    throw hardy::input_error("unknown kind (want haar or pn:<pairs>): " + a.kind);
  }
  emit(a.out, hardy::write_state(state));
  return 0;
}

struct ModelArgs {
  std::string state_path, witness_path;
  std::optional<std::string> out;
  double support_tol = hardy::Tolerances{}.support;
};

int run_model(const ModelArgs& a) {
  hardy::QubitState state = hardy::parse_state(read_file(a.state_path));
  hardy::WitnessReport rep = hardy::witness_from_json(read_file(a.witness_path));
  if (rep.verdict != hardy::Verdict::Contextual)
    throw hardy::input_error("witness file carries a P_n verdict, no observables to evaluate");
  hardy::EmpiricalModel m = hardy::build_model(state, rep.assignment, a.support_tol);
  emit(a.out, hardy::model_to_json(m));
  return 0;
}

struct CheckArgs {
  std::string model_path;
  std::string format = "human";
};

int run_check(const CheckArgs& a) {
  hardy::EmpiricalModel m = hardy::model_from_json(read_file(a.model_path));
  hardy::ContextualityVerdict v = hardy::check_logical(m);
  if (a.format == "json") {
    std::ostringstream out;
    out << "{\n  \"logically_contextual\": " << (v.logically_contextual ? "true" : "false")
        << ",\n  \"strongly_contextual\": " << (v.strongly_contextual ? "true" : "false")
        << ",\n  \"witnesses\": [";
    for (size_t i = 0; i < v.witnesses.size(); ++i) {
      const auto& w = v.witnesses[i];
      out << (i ? "," : "") << "\n    {\"context\": \"" << m.scenario.context_label(w.context)
          << "\", \"outcome\": \"" << hardy::outcome_to_string(w.outcome, m.scenario.parties)
          << "\"}";
    }
    out << (v.witnesses.empty() ? "]" : "\n  ]") << "\n}\n";
    std::cout << out.str();
  } else {
    if (!v.logically_contextual) {
      std::cout << "not logically contextual\n";
    } else {
      std::cout << (v.strongly_contextual ? "strongly contextual\nlogically contextual"
                                          : "logically contextual")
                << "\n";
      std::cout << "witnesses (" << v.witnesses.size() << "):\n";
      for (const auto& w : v.witnesses)
        std::cout << "  " << m.scenario.context_label(w.context) << "  "
                  << hardy::outcome_to_string(w.outcome, m.scenario.parties) << "\n";
    }
  }
  return 0;
}

struct BenchArgs {
  int n_min = 4, n_max = 10, trials = 20;
  std::optional<uint64_t> seed;
  std::optional<std::string> out;
};

// Per-trial seed, decoupled across (n, trial) cells so adding trials or
// changing the range never reshuffles earlier cells.
uint64_t trial_seed(uint64_t base, int n, int t) {
  return base * 1000003ULL + static_cast<uint64_t>(n) * 1009ULL + static_cast<uint64_t>(t);
}

int run_bench(const BenchArgs& a) {
  if (a.n_min < 2 || a.n_max < a.n_min || a.n_max > 20)
    throw hardy::input_error("bench range must satisfy 2 <= n-min <= n-max <= 20");
  if (a.trials < 1) throw hardy::input_error("trials must be positive");
  uint64_t base = resolve_seed(a.seed);
  hardy::Tolerances tol;

  std::ostringstream csv;
  csv << "n,d,trials,mean_ms\n";
  for (int n = a.n_min; n <= a.n_max; ++n) {
    std::vector<hardy::QubitState> states;
    states.reserve(a.trials);
    for (int t = 0; t < a.trials; ++t) {
      hardy::Rng rng(trial_seed(base, n, t));
      states.push_back(hardy::random_state(n, rng));
    }
    // Warm-up run so the first timed trial pays no cold-cache penalty.
    (void)hardy::classify(states[0], tol);
    auto start = std::chrono::steady_clock::now();
    int contextual = 0;
    for (const auto& s : states)
      if (hardy::classify(s, tol).verdict == hardy::Verdict::Contextual) ++contextual;
    auto stop = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(stop - start).count() / a.trials;
    if (contextual != a.trials)
      throw hardy::internal_error("bench: a Haar-random state was classified as P_n");
    char row[128];
    std::snprintf(row, sizeof row, "%d,%d,%d,%.3f\n", n, 1 << n, a.trials, ms);
    csv << row;
  }
  emit(a.out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Classify n-qubit pure states: tensor products of 1-qubit states and "
      "maximally entangled pairs (P_n), or logically contextual with n+2 "
      "witnessing local observables"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  CLI::App* classify = app.add_subcommand(
      "classify", "Decide P_n membership; emit witness observables otherwise");
  classify->add_option("state", ca.state_path, "state JSON file")->required();
  classify->add_flag("--verify", ca.verify,
                     "build the empirical model and confirm the paradox exhaustively");
  classify->add_option("--out", ca.out, "witness file path (default: <state>.witness.json)");
  classify->add_option("--format", ca.format, "human or json")
      ->check(CLI::IsMember({"human", "json"}));
  classify->add_option("--tol-purity", ca.tol.purity, "purity tolerance for reduced densities");
  classify->add_option("--tol-maxent", ca.tol.maxent,
                       "tolerance separating maximally entangled / product Schmidt forms");
  classify->add_option("--tol-support", ca.support_tol,
                       "probability threshold for empirical-model supports");

  RandomArgs ra;
  CLI::App* random = app.add_subcommand("random", "Generate a random state file");
  random->add_option("n", ra.n, "qubit count")->required();
  random->add_option("--kind", ra.kind, "haar | pn | pn:<pairs>, e.g. pn:1-2,3-4");
  random->add_option("--seed", ra.seed, "RNG seed (fallback: HARDY_SEED, then 0)");
  random->add_option("--out", ra.out, "output path (default: stdout)");

  ModelArgs ma;
  CLI::App* model = app.add_subcommand(
      "model", "Evaluate the empirical model of a witness file on a state");
  model->add_option("state", ma.state_path, "state JSON file")->required();
  model->add_option("witness", ma.witness_path, "witness JSON file")->required();
  model->add_option("--out", ma.out, "output path (default: stdout)");
  model->add_option("--tol-support", ma.support_tol,
                    "probability threshold for empirical-model supports");

  CheckArgs ka;
  CLI::App* check = app.add_subcommand(
      "check", "Test a model file for logical/strong contextuality");
  check->add_option("model", ka.model_path, "model JSON file")->required();
  check->add_option("--format", ka.format, "human or json")
      ->check(CLI::IsMember({"human", "json"}));

  BenchArgs ba;
  CLI::App* bench = app.add_subcommand("bench", "Time classify on Haar-random states");
  bench->add_option("--n-min", ba.n_min, "smallest qubit count");
  bench->add_option("--n-max", ba.n_max, "largest qubit count");
  bench->add_option("--trials", ba.trials, "states per qubit count");
  bench->add_option("--seed", ba.seed, "RNG seed (fallback: HARDY_SEED, then 0)");
  bench->add_option("--out", ba.out, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // argument problems are input errors
  }

  try {
    if (*classify) return run_classify(ca);
    if (*random) return run_random(ra);
    if (*model) return run_model(ma);
    if (*check) return run_check(ka);
    if (*bench) return run_bench(ba);
  } catch (const hardy::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hardy::internal_error& e) {
    std::cerr << "internal consistency violation: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
