#pragma once

#include "hardy/types.hpp"

namespace hardy {

// Kronecker product of two state vectors: (a ⊗ b)[i*|b|+j] = a[i]*b[j].
CVec tensor(const CVec& a, const CVec& b);

// <a|b> = sum_i conj(a_i) * b_i. Sizes must match.
Complex inner(const CVec& a, const CVec& b);

// Euclidean norm.
double norm(const CVec& a);

// Scale so ||v|| = 1. Throws internal_error if ||v|| is (near) zero.
CVec normalized(const CVec& v);

// Distance between rays: min over phases t of ||a - e^{it} b||.
// Both inputs are used as given (not renormalized).
double ray_distance(const CVec& a, const CVec& b);

// Multiply by the phase that makes the largest-magnitude entry real and
// positive (first such entry on ties). Deterministic representative of a ray.
CVec phase_fixed(const CVec& v);

// Partial trace of |state><state| keeping the 1-based qubit positions in
// `keep` (ascending, no duplicates). Qubit 1 is the most significant bit of
// the amplitude index. Result is a 2^k x 2^k density matrix whose row index
// uses keep[0] as its most significant bit.
CMat reduced_density(const CVec& state, const std::vector<int>& keep);

// tr(rho^2), real part. rho must be square.
double purity(const CMat& rho);

// max_ij |rho_ij - conj(rho_ji)|.
double hermiticity_error(const CMat& rho);

Complex trace(const CMat& rho);

// Largest-eigenvalue eigenvector of a hermitian PSD matrix, unit norm,
// phase-fixed. Deterministic (power iteration from the first nonzero column).
CVec dominant_eigenvector(const CMat& rho);

// Schmidt decomposition of a 2-qubit state:
//   state = alpha * b1p ⊗ b2p + beta * b1m ⊗ b2m,  alpha >= beta >= 0,
// with {b1p,b1m} and {b2p,b2m} orthonormal. Coefficients are real and
// nonnegative; all phase freedom is pushed into the basis vectors.
struct SchmidtForm {
  double alpha = 0.0;
  double beta = 0.0;
  CVec basis1_plus, basis1_minus;  // qubit 1 (most significant)
  CVec basis2_plus, basis2_minus;  // qubit 2
};

// Closed-form 2x2 singular value decomposition. Throws input_error if the
// input is not a normalized 4-vector.
SchmidtForm schmidt_2qubit(const CVec& state);

}  // namespace hardy
