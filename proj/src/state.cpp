#include "hardy/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace hardy {

namespace {

constexpr int kMaxQubits = 20;

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) throw input_error("qubit count out of range (1..20)");
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

QubitState parse_state(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("state file: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw input_error("state file: top level must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw input_error("state file: missing integer field \"n\"");
  int n = j["n"].get<int>();
  check_qubit_count(n);
  if (!j.contains("ordering") || j["ordering"] != "q1-msb")
    throw input_error("state file: \"ordering\" must be \"q1-msb\"");
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
    throw input_error("state file: missing array field \"amplitudes\"");
  const auto& arr = j["amplitudes"];
  size_t want = size_t{1} << n;
  if (arr.size() != want)
    throw input_error("state file: expected " + std::to_string(want) + " amplitudes, got " +
                      std::to_string(arr.size()));
  CVec amp(want);
  for (size_t i = 0; i < want; ++i) {
    const auto& pair = arr[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw input_error("state file: amplitude " + std::to_string(i) + " must be [re, im]");
    double re = pair[0].get<double>();
    double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw input_error("state file: amplitude " + std::to_string(i) + " is not finite");
    amp[i] = {re, im};
  }
  double nm = norm(amp);
  if (std::abs(nm - 1.0) > 1e-6)
    throw input_error("state file: unnormalized state (norm = " + fmt17(nm) + ")");
  for (Complex& x : amp) x /= nm;
  return {n, amp};
}

std::string write_state(const QubitState& s) {
  std::ostringstream out;
  out << "{\n  \"n\": " << s.n << ",\n  \"ordering\": \"q1-msb\",\n  \"amplitudes\": [\n";
  for (size_t i = 0; i < s.amp.size(); ++i) {
    out << "    [" << fmt17(s.amp[i].real()) << ", " << fmt17(s.amp[i].imag()) << "]";
    if (i + 1 < s.amp.size()) out << ",";
    out << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

SplitDecomposition split_last_qubit(const QubitState& omega, const Tolerances& tol) {
  if (omega.n < 2) throw input_error("split_last_qubit: need at least 2 qubits");
  size_t half = omega.amp.size() / 2;
  CVec a(half), b(half);  // last-qubit |0> and |1> branches
  for (size_t i = 0; i < half; ++i) {
    a[i] = omega.amp[2 * i];
    b[i] = omega.amp[2 * i + 1];
  }
  SplitDecomposition sd;
  double na = norm(a), nb = norm(b);
  if (na > tol.zero) {
    sd.alpha = na;
    for (Complex& x : a) x /= na;
    sd.psi = QubitState{omega.n - 1, std::move(a)};
  }
  if (nb > tol.zero) {
    sd.beta = nb;
    for (Complex& x : b) x /= nb;
    sd.phi = QubitState{omega.n - 1, std::move(b)};
  }
  if (!sd.psi && !sd.phi) throw input_error("split_last_qubit: zero state");
  return sd;
}

QubitState tau(double a, const QubitState& psi, const QubitState& phi, const Tolerances& tol) {
  if (psi.n != phi.n) throw input_error("tau: qubit count mismatch");
  if (!(a >= 0.0 && a <= 1.0)) throw input_error("tau: coefficient outside [0,1]");
  double g = std::sqrt(std::max(0.0, 1.0 - a * a));
  CVec v(psi.amp.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = a * psi.amp[i] + g * phi.amp[i];
  double nm = norm(v);
  if (nm < tol.zero) throw input_error("tau: combination cancels to zero");
  for (Complex& x : v) x /= nm;
  return {psi.n, std::move(v)};
}

double Rng::uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  double r = std::sqrt(-2.0 * std::log(u1));
  double t = 2.0 * std::numbers::pi * uniform();
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

QubitState random_state(int n, Rng& rng) {
  check_qubit_count(n);
  CVec amp(size_t{1} << n);
  for (Complex& x : amp) x = rng.cgaussian();
  return {n, normalized(amp)};
}

CMat haar_unitary2(Rng& rng) {
  CVec c0 = normalized({rng.cgaussian(), rng.cgaussian()});
  CVec c1 = {rng.cgaussian(), rng.cgaussian()};
  Complex ov = inner(c0, c1);
  c1[0] -= ov * c0[0];
  c1[1] -= ov * c0[1];
  c1 = normalized(c1);
  CMat u(2, 2);
  u(0, 0) = c0[0];
  u(1, 0) = c0[1];
  u(0, 1) = c1[0];
  u(1, 1) = c1[1];
  return u;
}

QubitState apply_local_unitary(const QubitState& s, const CMat& u, int pos) {
  if (u.rows != 2 || u.cols != 2) throw input_error("apply_local_unitary: need a 2x2 matrix");
  if (pos < 1 || pos > s.n) throw input_error("apply_local_unitary: position out of range");
  size_t stride = size_t{1} << (s.n - pos);
  CVec out = s.amp;
  for (size_t i = 0; i < out.size(); ++i) {
    if (i & stride) continue;
    Complex v0 = out[i], v1 = out[i | stride];
    out[i] = u(0, 0) * v0 + u(0, 1) * v1;
    out[i | stride] = u(1, 0) * v0 + u(1, 1) * v1;
  }
  return {s.n, std::move(out)};
}

QubitState apply_local_unitaries(const QubitState& s, const std::vector<CMat>& units) {
  if (static_cast<int>(units.size()) != s.n)
    throw input_error("apply_local_unitaries: need one unitary per qubit");
  QubitState out = s;
  for (int i = 0; i < s.n; ++i) out = apply_local_unitary(out, units[i], i + 1);
  return out;
}

QubitState apply_qubit_permutation(const QubitState& s, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != s.n)
    throw input_error("apply_qubit_permutation: permutation size mismatch");
  std::vector<bool> seen(s.n + 1, false);
  for (int p : perm) {
    if (p < 1 || p > s.n || seen[p]) throw input_error("apply_qubit_permutation: not a permutation");
    seen[p] = true;
  }
  CVec out(s.amp.size());
  for (size_t i = 0; i < s.amp.size(); ++i) {
    size_t j = 0;
    for (int p = 1; p <= s.n; ++p) {
      size_t bit = (i >> (s.n - p)) & 1u;
      j |= bit << (s.n - perm[p - 1]);
    }
    out[j] = s.amp[i];
  }
  return {s.n, std::move(out)};
}

std::vector<CMat> random_local_unitaries(int n, Rng& rng) {
  check_qubit_count(n);
  std::vector<CMat> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(haar_unitary2(rng));
  return out;
}

QubitState random_pn_state(int n, const std::vector<std::pair<int, int>>& pairs, Rng& rng) {
  check_qubit_count(n);
  std::vector<std::pair<int, int>> norm_pairs;
  std::vector<bool> used(n + 1, false);
  for (auto [p, q] : pairs) {
    if (p < 1 || p > n || q < 1 || q > n || p == q)
      throw input_error("random_pn_state: bad pair position");
    if (used[p] || used[q]) throw input_error("random_pn_state: overlapping pairs");
    used[p] = used[q] = true;
    norm_pairs.emplace_back(std::min(p, q), std::max(p, q));
  }
  std::sort(norm_pairs.begin(), norm_pairs.end());
  std::vector<int> singles;
  for (int p = 1; p <= n; ++p)
    if (!used[p]) singles.push_back(p);

  // Assemble factors in a canonical slot order (singles ascending, then
  // pairs ascending), then permute slots onto their target positions.
  CVec acc = {1.0};
  std::vector<int> slot_target;
  for (int p : singles) {
    CVec one = normalized({rng.cgaussian(), rng.cgaussian()});
    acc = tensor(acc, one);
    slot_target.push_back(p);
  }
  const double s2 = 1.0 / std::sqrt(2.0);
  for (auto [p, q] : norm_pairs) {
    QubitState bell{2, {s2, 0.0, 0.0, s2}};
    bell = apply_local_unitary(bell, haar_unitary2(rng), 1);
    bell = apply_local_unitary(bell, haar_unitary2(rng), 2);
    acc = tensor(acc, bell.amp);
    slot_target.push_back(p);
    slot_target.push_back(q);
  }
  return apply_qubit_permutation(QubitState{n, std::move(acc)}, slot_target);
}

}  // namespace hardy
