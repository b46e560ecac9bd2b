#include "hardy/witness.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace hardy {

CMat observable_matrix(const Observable& o) {
  if (o.plus.size() != 2 || o.minus.size() != 2)
    throw input_error("observable_matrix: eigenvectors must be 2-vectors");
  CMat m(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m(i, j) = o.plus[i] * std::conj(o.plus[j]) - o.minus[i] * std::conj(o.minus[j]);
  return m;
}

Observable z_observable() { return {"Z", {1.0, 0.0}, {0.0, 1.0}}; }

Observable b_observable(Complex x, Complex y) {
  if (std::abs(x) < 1e-150 || std::abs(y) < 1e-150)
    throw input_error("b_observable: x and y must be nonzero");
  return {"B", normalized({std::conj(y), std::conj(x)}), normalized({x, -y})};
}

HardyBase hardy_base(double alpha, double beta, const Tolerances& tol) {
  if (std::abs(alpha * alpha + beta * beta - 1.0) > 1e-6)
    throw input_error("hardy_base: coefficients must satisfy alpha^2 + beta^2 = 1");
  if (beta <= tol.maxent || alpha <= tol.maxent)
    throw input_error("hardy_base: product state admits no paradox");
  if (std::abs(alpha - beta) < tol.maxent)
    throw input_error("hardy_base: maximally entangled state admits no paradox");
  HardyBase hb;
  hb.alpha = alpha;
  hb.beta = beta;
  double nu = std::sqrt(alpha + beta);
  double nd = std::sqrt(alpha * alpha * alpha + beta * beta * beta);
  hb.u = {std::sqrt(beta) / nu, std::sqrt(alpha) / nu};
  hb.d = {std::pow(beta, 1.5) / nd, -std::pow(alpha, 1.5) / nd};
  return hb;
}

namespace {

CVec perp2(const CVec& v) { return {-std::conj(v[1]), std::conj(v[0])}; }

// c0 * bp + c1 * bm
CVec in_basis(const CVec& c, const CVec& bp, const CVec& bm) {
  return {c[0] * bp[0] + c[1] * bm[0], c[0] * bp[1] + c[1] * bm[1]};
}

}  // namespace

HardyPair hardy_observables(const SchmidtForm& sf, const Tolerances& tol) {
  HardyBase hb = hardy_base(sf.alpha, sf.beta, tol);
  // Party 2 works in {f+, f-} = {b2+, -b2-}, which turns the Schmidt form
  // into alpha|e+ f+> - beta|e- f->.
  CVec f_plus = sf.basis2_plus;
  CVec f_minus = {-sf.basis2_minus[0], -sf.basis2_minus[1]};
  CVec up = perp2(hb.u), dp = perp2(hb.d);
  HardyPair hp;
  hp.first_u = {"U", in_basis(hb.u, sf.basis1_plus, sf.basis1_minus),
                in_basis(up, sf.basis1_plus, sf.basis1_minus)};
  hp.first_d = {"D", in_basis(hb.d, sf.basis1_plus, sf.basis1_minus),
                in_basis(dp, sf.basis1_plus, sf.basis1_minus)};
  hp.second_u = {"U", in_basis(hb.u, f_plus, f_minus), in_basis(up, f_plus, f_minus)};
  hp.second_d = {"D", in_basis(hb.d, f_plus, f_minus), in_basis(dp, f_plus, f_minus)};
  return hp;
}

namespace {

std::string fmt6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

struct Classifier {
  const Tolerances& tol;
  std::vector<std::string> trace;

  void note(int n, const std::string& msg) {
    trace.push_back("n=" + std::to_string(n) + ": " + msg);
  }

  WitnessReport in_pn_report(PnResult r) {
    WitnessReport rep;
    rep.verdict = Verdict::InPn;
    rep.pn = std::move(r);
    return rep;
  }

  // 2-qubit bottom: Schmidt-gate the degenerate boundaries, otherwise the
  // Hardy pair. Reached only after test_pn said no.
  WitnessReport base2(const QubitState& st) {
    SchmidtForm sf = schmidt_2qubit(st.amp);
    if (sf.beta <= tol.maxent) {
      note(2, "schmidt gap puts the state on the product boundary; in P_2");
      PnResult r;
      r.in_pn = true;
      r.type.singles = {1, 2};
      r.singles[1] = phase_fixed(sf.basis1_plus);
      r.singles[2] = phase_fixed(sf.basis2_plus);
      return in_pn_report(std::move(r));
    }
    if (std::abs(sf.alpha - sf.beta) < tol.maxent) {
      note(2, "schmidt coefficients coincide; maximally entangled, in P_2");
      PnResult r;
      r.in_pn = true;
      r.type.pairs = {{1, 2}};
      r.pairs[{1, 2}] = phase_fixed(st.amp);
      return in_pn_report(std::move(r));
    }
    note(2, "schmidt alpha=" + fmt6(sf.alpha) + " beta=" + fmt6(sf.beta) +
               "; hardy pair on parties (1,2)");
    HardyPair hp = hardy_observables(sf, tol);
    WitnessReport rep;
    rep.verdict = Verdict::Contextual;
    rep.assignment[1] = {hp.first_u, hp.first_d};
    rep.assignment[2] = {hp.second_u, hp.second_d};
    return rep;
  }

  WitnessReport rec(const QubitState& st) {
    const int n = st.n;
    PnResult r = test_pn(st, tol);
    if (r.in_pn) {
      note(n, "in P_" + std::to_string(n) + " (" + to_string(r.type) + ")");
      return in_pn_report(std::move(r));
    }
    if (n == 1) throw internal_error("classify: a single qubit cannot fail test_pn");
    if (n == 2) return base2(st);

    SplitDecomposition sd = split_last_qubit(st, tol);
    note(n, "not in P_" + std::to_string(n) + "; split alpha=" + fmt6(sd.alpha) +
               " beta=" + fmt6(sd.beta));

    // A branch that already fails the membership test carries the paradox;
    // conditioning the new party's Z on the matching outcome lifts it.
    std::optional<PnResult> rpsi, rphi;
    if (sd.psi) {
      PnResult t = test_pn(*sd.psi, tol);
      if (!t.in_pn) {
        note(n, "psi branch escapes P_" + std::to_string(n - 1) + "; recursing");
        WitnessReport child = rec(*sd.psi);
        if (child.verdict != Verdict::Contextual)
          throw internal_error("classify: branch failed test_pn but reclassified as in P_n");
        child.assignment[n] = {z_observable()};
        note(n, "lift with Z on party " + std::to_string(n) + " (conditioning outcome +)");
        return child;
      }
      rpsi = std::move(t);
    }
    if (sd.phi) {
      PnResult t = test_pn(*sd.phi, tol);
      if (!t.in_pn) {
        note(n, "phi branch escapes P_" + std::to_string(n - 1) + "; recursing");
        WitnessReport child = rec(*sd.phi);
        if (child.verdict != Verdict::Contextual)
          throw internal_error("classify: branch failed test_pn but reclassified as in P_n");
        child.assignment[n] = {z_observable()};
        note(n, "lift with Z on party " + std::to_string(n) + " (conditioning outcome -)");
        return child;
      }
      rphi = std::move(t);
    }
    if (!rpsi || !rphi)
      throw internal_error("classify: lone-branch state failed test_pn but its branch passed");

    // Both branches are in P_{n-1}: scan combinations. If the branches
    // differ in two or more factors, some grid point must leave P_{n-1}
    // (a polynomial identity argument caps the degenerate values at 20).
    for (int k = 1; k <= 19; ++k) {
      double a = k / 20.0;
      QubitState t = tau(a, *sd.psi, *sd.phi, tol);
      if (test_pn(t, tol).in_pn) continue;
      note(n, "tau sweep leaves P_" + std::to_string(n - 1) + " at a=" + fmt6(a) + "; recursing");
      WitnessReport child = rec(t);
      if (child.verdict != Verdict::Contextual)
        throw internal_error("classify: tau grid point failed test_pn but reclassified as in P_n");
      Complex x = sd.alpha / a;
      Complex y = sd.beta / std::sqrt(1.0 - a * a);
      child.assignment[n] = {b_observable(x, y)};
      note(n, "lift with B on party " + std::to_string(n) + " (x=" + fmt6(x.real()) +
                 " y=" + fmt6(y.real()) + ")");
      return child;
    }

    // Whole grid stayed inside P_{n-1}: the branches can differ in at most
    // one 1-qubit factor, and the state is a product of the common factors
    // with one entangled, non-maximal 2-qubit block.
    DiffReport diff = factor_difference(*rpsi, *rphi, tol);
    if (diff.kind == DiffKind::Identical)
      throw internal_error("classify: branches share every factor yet the state is not in P_n");
    if (diff.kind == DiffKind::ManyQubit)
      throw internal_error("classify: sweep stayed in P_n though branches differ in 2+ factors");

    int j = diff.position;
    CMat rho = reduced_density(st.amp, {j, n});
    if (std::abs(purity(rho) - 1.0) > tol.purity)
      throw internal_error("classify: block of the differing qubit and the last is not pure");
    CVec xi = dominant_eigenvector(rho);
    SchmidtForm sf = schmidt_2qubit(xi);
    if (sf.beta <= tol.maxent)
      throw internal_error("classify: induced 2-qubit block is a product");
    if (std::abs(sf.alpha - sf.beta) < tol.maxent)
      throw internal_error("classify: induced 2-qubit block is maximally entangled");
    note(n, "branches differ only at party " + std::to_string(j) + "; hardy pair on parties (" +
               std::to_string(j) + "," + std::to_string(n) + "), Z elsewhere");
    HardyPair hp = hardy_observables(sf, tol);
    WitnessReport rep;
    rep.verdict = Verdict::Contextual;
    rep.assignment[j] = {hp.first_u, hp.first_d};
    rep.assignment[n] = {hp.second_u, hp.second_d};
    for (int p = 1; p <= n; ++p)
      if (p != j && p != n) rep.assignment[p] = {z_observable()};
    return rep;
  }
};

}  // namespace

WitnessReport classify(const QubitState& state, const Tolerances& tol) {
  if (state.n < 1 || state.amp.size() != (size_t{1} << state.n))
    throw input_error("classify: amplitude count does not match qubit count");
  double nm = norm(state.amp);
  if (std::abs(nm - 1.0) > 1e-6) throw input_error("classify: unnormalized state");
  QubitState st{state.n, state.amp};
  for (Complex& x : st.amp) x /= nm;

  Classifier c{tol, {}};
  WitnessReport rep = c.rec(st);
  rep.trace = std::move(c.trace);
  return rep;
}

std::map<int, std::vector<CMat>> observables_to_matrices(const WitnessReport& rep) {
  if (rep.verdict != Verdict::Contextual)
    throw input_error("observables_to_matrices: report carries no observables");
  std::map<int, std::vector<CMat>> out;
  for (const auto& [party, obs] : rep.assignment) {
    std::vector<CMat> ms;
    for (const Observable& o : obs) ms.push_back(observable_matrix(o));
    out[party] = std::move(ms);
  }
  return out;
}

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void emit_vec(std::ostringstream& out, const CVec& v) {
  out << "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << "[" << fmt17(v[i].real()) << ", " << fmt17(v[i].imag()) << "]";
  }
  out << "]";
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string witness_to_json(const WitnessReport& rep) {
  std::ostringstream out;
  out << "{\n";
  if (rep.verdict == Verdict::InPn) {
    out << "  \"verdict\": \"in_pn\",\n";
    out << "  \"entanglement\": \"" << json_escape(to_string(rep.pn.type)) << "\",\n";
  } else {
    out << "  \"verdict\": \"contextual\",\n";
    out << "  \"parties\": " << rep.assignment.size() << ",\n";
    out << "  \"assignment\": {\n";
    size_t i = 0;
    for (const auto& [party, obs] : rep.assignment) {
      out << "    \"" << party << "\": [";
      for (size_t k = 0; k < obs.size(); ++k) {
        if (k) out << ", ";
        out << "{\"label\": \"" << json_escape(obs[k].label) << "\", \"plus\": ";
        emit_vec(out, obs[k].plus);
        out << ", \"minus\": ";
        emit_vec(out, obs[k].minus);
        out << "}";
      }
      out << "]" << (++i < rep.assignment.size() ? "," : "") << "\n";
    }
    out << "  },\n";
  }
  out << "  \"trace\": [";
  for (size_t i = 0; i < rep.trace.size(); ++i) {
    if (i) out << ", ";
    out << "\"" << json_escape(rep.trace[i]) << "\"";
  }
  out << "]\n}\n";
  return out.str();
}

namespace {

CVec parse_vec2(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw input_error(std::string("witness file: bad ") + what);
  CVec v(2);
  for (int i = 0; i < 2; ++i) {
    const auto& p = j[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw input_error(std::string("witness file: bad ") + what);
    v[i] = {p[0].get<double>(), p[1].get<double>()};
  }
  return v;
}

}  // namespace

WitnessReport witness_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("witness file: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("verdict"))
    throw input_error("witness file: missing \"verdict\"");
  WitnessReport rep;
  std::string verdict = j["verdict"].get<std::string>();
  if (verdict == "in_pn") {
    rep.verdict = Verdict::InPn;
  } else if (verdict == "contextual") {
    rep.verdict = Verdict::Contextual;
    if (!j.contains("assignment") || !j["assignment"].is_object())
      throw input_error("witness file: contextual verdict without \"assignment\"");
    for (const auto& [key, arr] : j["assignment"].items()) {
      int party = 0;
      try {
        party = std::stoi(key);
      } catch (...) {
        throw input_error("witness file: party keys must be integers");
      }
      if (party < 1 || !arr.is_array() || arr.empty())
        throw input_error("witness file: bad assignment entry for party " + key);
      std::vector<Observable> obs;
      for (const auto& o : arr) {
        if (!o.is_object() || !o.contains("label") || !o.contains("plus") || !o.contains("minus"))
          throw input_error("witness file: observable must have label/plus/minus");
        obs.push_back({o["label"].get<std::string>(), parse_vec2(o["plus"], "plus vector"),
                       parse_vec2(o["minus"], "minus vector")});
      }
      rep.assignment[party] = std::move(obs);
    }
    int expect = 1;
    for (const auto& [party, obs] : rep.assignment)
      if (party != expect++)
        throw input_error("witness file: assignment must cover parties 1..n");
  } else {
    throw input_error("witness file: unknown verdict \"" + verdict + "\"");
  }
  if (j.contains("trace") && j["trace"].is_array())
    for (const auto& t : j["trace"]) rep.trace.push_back(t.get<std::string>());
  return rep;
}

}  // namespace hardy
