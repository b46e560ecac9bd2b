#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardy {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

// Dense row-major complex matrix. Small (at most 2^n x 2^n for reduced
// densities of a handful of qubits), so no fancy storage.
struct CMat {
  int rows = 0;
  int cols = 0;
  CVec a;

  CMat() = default;
  CMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Complex& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Complex& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Bad data coming from outside (files, CLI arguments, caller-supplied
// structures). Maps to exit code 2 in the CLI.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A state of affairs the algorithms guarantee cannot happen; reaching one
// means a bug or a tolerance breakdown. Maps to exit code 3 in the CLI.
struct internal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every numeric threshold in one place. Defaults are the working values;
// the CLI exposes the ones users may want to move.
struct Tolerances {
  double norm = 1e-9;      // acceptable deviation of ||state|| from 1
  double herm = 1e-10;     // hermiticity slack for density matrices
  double purity = 1e-7;    // |tr(rho^2) - 1| below this counts as pure
  double mm = 1e-7;        // entrywise distance from I/2 for "maximally mixed"
  double maxent = 1e-6;    // |alpha - beta| below this counts as maximally
                           // entangled; also the beta ~ 0 product boundary
  double zero = 1e-12;     // split coefficients below this are exact zeros
  double support = 1e-9;   // probabilities above this are "possible"
  double recon = 1e-7;     // reconstruction distance for verified factorings
};

}  // namespace hardy
