#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "hardy/linalg.hpp"
#include "hardy/types.hpp"

namespace hardy {

// Pure state of n qubits. amp[i] is the amplitude of the computational basis
// vector whose bits, most significant first, give the outcomes of qubits
// 1..n ("q1-msb" ordering everywhere).
struct QubitState {
  int n = 0;
  CVec amp;
};

// Parse the JSON state format:
//   {"n": 3, "ordering": "q1-msb", "amplitudes": [[re, im], ...]}
// Amplitude count must be 2^n; norm must be within 1e-6 of 1 (then it is
// renormalized exactly). Anything else is an input_error.
QubitState parse_state(const std::string& text);

// Inverse of parse_state; 17 significant digits, stable layout.
std::string write_state(const QubitState& s);

// omega = alpha * psi ⊗ |0> + beta * phi ⊗ |1>, splitting off the last
// qubit. alpha, beta >= 0 real; branch states are normalized with phases
// left untouched. A branch whose weight is below tol.zero is absent.
struct SplitDecomposition {
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<QubitState> psi;
  std::optional<QubitState> phi;
};

SplitDecomposition split_last_qubit(const QubitState& omega, const Tolerances& tol = {});

// normalize(a * psi + sqrt(1-a^2) * phi). Throws input_error if the two
// states have different qubit counts, a is outside [0,1], or the combination
// cancels to (near) zero.
QubitState tau(double a, const QubitState& psi, const QubitState& phi,
               const Tolerances& tol = {});

// Deterministic random source. mt19937_64 plus a hand-rolled Box-Muller so
// that streams are reproducible across standard libraries (normal_distribution
// is implementation-defined).
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}

  double uniform();            // [0, 1)
  double gaussian();           // N(0, 1)
  Complex cgaussian() {        // independent N(0,1) real and imaginary parts
    double re = gaussian();
    double im = gaussian();
    return {re, im};
  }

 private:
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Haar-random state: normalized vector of 2^n complex gaussians.
QubitState random_state(int n, Rng& rng);

// Haar-random 2x2 unitary (gaussian matrix + Gram-Schmidt).
CMat haar_unitary2(Rng& rng);

// Random n-qubit member of P_n with the given maximally entangled pairs
// (1-based positions, disjoint); remaining positions get Haar 1-qubit
// factors. Pairs are locally rotated Bell states.
QubitState random_pn_state(int n, const std::vector<std::pair<int, int>>& pairs, Rng& rng);

// One Haar 2x2 unitary per qubit position.
std::vector<CMat> random_local_unitaries(int n, Rng& rng);

// Apply a 2x2 unitary to qubit `pos` (1-based).
QubitState apply_local_unitary(const QubitState& s, const CMat& u, int pos);

// Apply units[i] to qubit i+1.
QubitState apply_local_unitaries(const QubitState& s, const std::vector<CMat>& units);

// Relabel qubits: source qubit p moves to position perm[p-1] (perm is a
// permutation of 1..n).
QubitState apply_qubit_permutation(const QubitState& s, const std::vector<int>& perm);

}  // namespace hardy
