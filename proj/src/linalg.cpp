#include "hardy/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace hardy {

CVec tensor(const CVec& a, const CVec& b) {
  CVec out(a.size() * b.size());
  size_t k = 0;
  for (const Complex& x : a)
    for (const Complex& y : b) out[k++] = x * y;
  return out;
}

Complex inner(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw input_error("inner: size mismatch");
  Complex s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const CVec& a) {
  double s = 0.0;
  for (const Complex& x : a) s += std::norm(x);
  return std::sqrt(s);
}

CVec normalized(const CVec& v) {
  double n = norm(v);
  if (n < 1e-150) throw internal_error("normalized: zero vector");
  CVec out = v;
  for (Complex& x : out) x /= n;
  return out;
}

double ray_distance(const CVec& a, const CVec& b) {
  // ||a - c*b|| with the optimal unit phase c; the subtraction is done
  // entrywise so nearly-equal rays do not lose precision to cancellation.
  Complex ov = inner(a, b);
  double mag = std::abs(ov);
  if (mag < 1e-300) return std::hypot(norm(a), norm(b));
  Complex c = std::conj(ov) / mag;
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - c * b[i]);
  return std::sqrt(s);
}

CVec phase_fixed(const CVec& v) {
  size_t imax = 0;
  double best = -1.0;
  for (size_t i = 0; i < v.size(); ++i) {
    double m = std::abs(v[i]);
    if (m > best) {
      best = m;
      imax = i;
    }
  }
  if (best < 1e-150) return v;
  Complex phase = std::conj(v[imax]) / best;
  CVec out = v;
  for (Complex& x : out) x *= phase;
  return out;
}

namespace {

int qubit_count(size_t dim) {
  int n = 0;
  size_t d = 1;
  while (d < dim) {
    d <<= 1;
    ++n;
  }
  if (d != dim || n < 1) throw input_error("state length is not a power of two >= 2");
  return n;
}

}  // namespace

CMat reduced_density(const CVec& state, const std::vector<int>& keep) {
  int n = qubit_count(state.size());
  if (keep.empty()) throw input_error("reduced_density: empty keep set");
  for (size_t j = 0; j < keep.size(); ++j) {
    if (keep[j] < 1 || keep[j] > n) throw input_error("reduced_density: position out of range");
    if (j > 0 && keep[j] <= keep[j - 1])
      throw input_error("reduced_density: keep positions must be strictly ascending");
  }
  int k = static_cast<int>(keep.size());
  std::vector<int> kshift(k), oshift;
  for (int j = 0; j < k; ++j) kshift[j] = n - keep[j];
  {
    std::vector<bool> kept(n + 1, false);
    for (int p : keep) kept[p] = true;
    for (int p = 1; p <= n; ++p)
      if (!kept[p]) oshift.push_back(n - p);
  }
  size_t K = size_t{1} << k;
  size_t E = size_t{1} << (n - k);

  // Regroup amplitudes as scratch[env * K + sys], then sum outer products
  // over the traced-out environment index.
  CVec scratch(state.size());
  for (size_t idx = 0; idx < state.size(); ++idx) {
    size_t r = 0, e = 0;
    for (int j = 0; j < k; ++j) r |= ((idx >> kshift[j]) & 1u) << (k - 1 - j);
    for (size_t j = 0; j < oshift.size(); ++j)
      e |= ((idx >> oshift[j]) & 1u) << (oshift.size() - 1 - j);
    scratch[e * K + r] = state[idx];
  }
  CMat rho(static_cast<int>(K), static_cast<int>(K));
  for (size_t e = 0; e < E; ++e) {
    const Complex* block = scratch.data() + e * K;
    for (size_t r = 0; r < K; ++r)
      for (size_t c = 0; c < K; ++c)
        rho(static_cast<int>(r), static_cast<int>(c)) += block[r] * std::conj(block[c]);
  }
  return rho;
}

double purity(const CMat& rho) {
  if (rho.rows != rho.cols) throw input_error("purity: matrix not square");
  Complex s = 0.0;
  for (int i = 0; i < rho.rows; ++i)
    for (int j = 0; j < rho.cols; ++j) s += rho(i, j) * rho(j, i);
  return s.real();
}

double hermiticity_error(const CMat& rho) {
  if (rho.rows != rho.cols) throw input_error("hermiticity_error: matrix not square");
  double worst = 0.0;
  for (int i = 0; i < rho.rows; ++i)
    for (int j = 0; j < rho.cols; ++j)
      worst = std::max(worst, std::abs(rho(i, j) - std::conj(rho(j, i))));
  return worst;
}

Complex trace(const CMat& rho) {
  if (rho.rows != rho.cols) throw input_error("trace: matrix not square");
  Complex s = 0.0;
  for (int i = 0; i < rho.rows; ++i) s += rho(i, i);
  return s;
}

CVec dominant_eigenvector(const CMat& rho) {
  if (rho.rows != rho.cols) throw input_error("dominant_eigenvector: matrix not square");
  int d = rho.rows;
  // Start from the column under the largest diagonal entry: that basis
  // vector always overlaps the top eigenspace of a near-pure density, so the
  // iteration cannot stall on a smaller eigenvector.
  int jmax = 0;
  for (int j = 1; j < d; ++j)
    if (rho(j, j).real() > rho(jmax, jmax).real()) jmax = j;
  CVec v(d);
  for (int i = 0; i < d; ++i) v[i] = rho(i, jmax);
  if (norm(v) < 1e-150) throw internal_error("dominant_eigenvector: zero matrix");
  v = normalized(v);
  for (int iter = 0; iter < 500; ++iter) {
    CVec w(d, 0.0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) w[i] += rho(i, j) * v[j];
    double lam = norm(w);
    if (lam < 1e-150) throw internal_error("dominant_eigenvector: collapsed to zero");
    for (Complex& x : w) x /= lam;
    double delta = 0.0;
    for (int i = 0; i < d; ++i) delta = std::max(delta, std::abs(w[i] - v[i]));
    v = std::move(w);
    if (delta < 1e-15) break;
  }
  return phase_fixed(v);
}

namespace {

CVec perp2(const CVec& v) { return {-std::conj(v[1]), std::conj(v[0])}; }

}  // namespace

SchmidtForm schmidt_2qubit(const CVec& state) {
  if (state.size() != 4) throw input_error("schmidt_2qubit: expected a 2-qubit state");
  if (std::abs(norm(state) - 1.0) > 1e-6) throw input_error("schmidt_2qubit: unnormalized input");

  // Amplitude matrix A[i][j] = <ij|state>, row = qubit 1.
  const Complex a00 = state[0], a01 = state[1], a10 = state[2], a11 = state[3];
  // M = A^dagger A, hermitian 2x2.
  const double m00 = std::norm(a00) + std::norm(a10);
  const double m11 = std::norm(a01) + std::norm(a11);
  const Complex m01 = std::conj(a00) * a01 + std::conj(a10) * a11;

  const double tr = m00 + m11;
  const double disc = std::sqrt(std::max(0.0, (m00 - m11) * (m00 - m11) + 4.0 * std::norm(m01)));
  const double lam_p = (tr + disc) / 2.0;
  const double lam_m = std::max(0.0, (tr - disc) / 2.0);

  SchmidtForm sf;
  sf.alpha = std::sqrt(std::min(1.0, lam_p));
  sf.beta = std::sqrt(std::min(1.0, lam_m));

  // Eigenvector of M for lam_p: pick the better-conditioned closed form.
  CVec vp;
  {
    CVec cand1 = {m01, Complex(lam_p - m00, 0.0)};
    CVec cand2 = {Complex(lam_p - m11, 0.0), std::conj(m01)};
    double n1 = norm(cand1), n2 = norm(cand2);
    if (std::max(n1, n2) < 1e-14) {
      vp = {1.0, 0.0};  // M is (close to) a multiple of the identity
    } else {
      vp = normalized(n1 >= n2 ? cand1 : cand2);
    }
  }
  CVec vm = perp2(vp);

  auto apply_A = [&](const CVec& v) -> CVec {
    return {a00 * v[0] + a01 * v[1], a10 * v[0] + a11 * v[1]};
  };

  CVec up = normalized(apply_A(vp));
  CVec um;
  if (sf.beta > 1e-10) {
    um = apply_A(vm);
    Complex overlap = inner(up, um);  // re-orthogonalize against rounding
    um[0] -= overlap * up[0];
    um[1] -= overlap * up[1];
    um = normalized(um);
  } else {
    um = perp2(up);
  }

  sf.basis1_plus = up;
  sf.basis1_minus = um;
  sf.basis2_plus = {std::conj(vp[0]), std::conj(vp[1])};
  sf.basis2_minus = {std::conj(vm[0]), std::conj(vm[1])};
  return sf;
}

}  // namespace hardy
