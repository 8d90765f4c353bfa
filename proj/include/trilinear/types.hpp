#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace trilin {

using cxd = std::complex<double>;

// Eigenvalues below -kPsdEps count as a broken density matrix.
inline constexpr double kPsdEps = 1e-10;

struct CutoffError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Diagonal single-mode state: probability per Fock occupation number.
struct NumberDistribution {
  std::vector<double> probs;

  double total() const {
    double t = 0.0;
    for (double p : probs) t += p;
    return t;
  }

  double mean() const {
    double m = 0.0;
    for (std::size_t n = 0; n < probs.size(); ++n) m += double(n) * probs[n];
    return m;
  }
};

/// Hermitian unit-trace matrix over the Fock basis of a single mode.
struct DensityMatrix {
  Eigen::MatrixXcd elements;

  int dim() const { return static_cast<int>(elements.rows()); }

  double trace_real() const { return elements.trace().real(); }

  double purity() const {
    return (elements * elements).trace().real();
  }
};

}  // namespace trilin
