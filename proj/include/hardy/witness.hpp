#pragma once

#include <map>

#include "hardy/linalg.hpp"
#include "hardy/pn_test.hpp"
#include "hardy/state.hpp"
#include "hardy/types.hpp"

namespace hardy {

// A dichotomic local observable, stored by its outcome eigenvectors.
struct Observable {
  std::string label;
  CVec plus, minus;  // orthonormal 2-vectors: the +1 / -1 outcome states
};

// |plus><plus| - |minus><minus|.
CMat observable_matrix(const Observable& o);

// Computational-basis Z: plus = |0>, minus = |1>.
Observable z_observable();

// B(x, y) for nonzero x, y: plus ∝ conj(y)|0> + conj(x)|1>,
// minus ∝ x|0> - y|1>. Matrix form [[|y|^2-|x|^2, 2x*conj(y)],
// [2*conj(x)*y, |x|^2-|y|^2]] / (|x|^2+|y|^2).
Observable b_observable(Complex x, Complex y);

// The two measurement directions of Hardy's construction for the state
// alpha|e+ f+> - beta|e- f->, as coefficient pairs over {+,-}:
//   u = (sqrt(beta), sqrt(alpha)) / sqrt(alpha+beta)
//   d = (beta^{3/2}, -alpha^{3/2}) / sqrt(alpha^3+beta^3)
// Requires alpha^2 + beta^2 = 1, alpha > beta > 0 strictly separated by
// tol.maxent (equal coefficients or a product state admit no paradox).
struct HardyBase {
  double alpha = 0.0, beta = 0.0;
  CVec u, d;
};

HardyBase hardy_base(double alpha, double beta, const Tolerances& tol = {});

// Concrete U/D observables for both parties of a 2-qubit state given its
// Schmidt form. The Schmidt form has a +beta coefficient; the sign the
// construction needs is absorbed into the second party's minus basis vector,
// so party 2's observables live in the basis {b2+, -b2-}.
struct HardyPair {
  Observable first_u, first_d;    // party holding Schmidt basis 1
  Observable second_u, second_d;  // party holding Schmidt basis 2
};

HardyPair hardy_observables(const SchmidtForm& sf, const Tolerances& tol = {});

enum class Verdict { InPn, Contextual };

// Result of classify: either a P_n factorization or a per-party observable
// assignment (n+2 observables total) whose empirical model carries a Hardy
// paradox. trace records the construction path.
struct WitnessReport {
  Verdict verdict = Verdict::InPn;
  PnResult pn;                                        // when InPn
  std::map<int, std::vector<Observable>> assignment;  // when Contextual
  std::vector<std::string> trace;
};

// The dichotomy: decide membership in P_n, and in the negative case build
// the witnessing observables by recursion on the last qubit.
WitnessReport classify(const QubitState& state, const Tolerances& tol = {});

// Matrix form of a contextual report's assignment. input_error on InPn.
std::map<int, std::vector<CMat>> observables_to_matrices(const WitnessReport& rep);

// Witness file round-trip (JSON).
std::string witness_to_json(const WitnessReport& rep);
WitnessReport witness_from_json(const std::string& text);

}  // namespace hardy
