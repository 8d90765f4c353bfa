#include "trilinear/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "trilinear/types.hpp"

namespace trilin::special {

double jacobi_dn(double u, double m) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw std::domain_error("jacobi_dn: parameter m must lie in [0, 1]");
  }
  if (m == 0.0) return 1.0;
  if (m == 1.0) return 1.0 / std::cosh(u);

  // Descending Landen / AGM scale (Abramowitz & Stegun 16.4).
  constexpr int kMaxIter = 32;
  double a[kMaxIter], c[kMaxIter];
  double an = 1.0;
  double bn = std::sqrt(1.0 - m);
  double cn = std::sqrt(m);
  int n = 0;
  a[0] = an;
  c[0] = cn;
  while (std::abs(cn) > 1e-16 * an && n < kMaxIter - 1) {
    double at = 0.5 * (an + bn);
    cn = 0.5 * (an - bn);
    bn = std::sqrt(an * bn);
    an = at;
    ++n;
    a[n] = an;
    c[n] = cn;
  }

  // Backward recurrence for the amplitude function.
  double phi = std::ldexp(an * u, n);
  for (int j = n; j > 0; --j) {
    double s = std::clamp(c[j] / a[j] * std::sin(phi), -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(s));
  }
  double sn = std::sin(phi);
  return std::sqrt(1.0 - m * sn * sn);
}

double ln_factorial(int n) {
  if (n < 0) throw std::domain_error("ln_factorial: negative argument");
  static std::vector<double> table;
  static std::once_flag built;
  std::call_once(built, [] {
    table.resize(10001);
    table[0] = 0.0;
    for (int k = 1; k <= 10000; ++k) table[k] = table[k - 1] + std::log(double(k));
  });
  if (n < static_cast<int>(table.size())) return table[n];
  return std::lgamma(double(n) + 1.0);
}

double log_upper_gamma(int a, double x) {
  if (a < 1) throw std::domain_error("log_upper_gamma: order must be >= 1");
  if (!(x > 0.0)) throw std::domain_error("log_upper_gamma: x must be positive");
  // log-sum-exp over terms j*ln(x) - ln(j!)
  double lnx = std::log(x);
  double mx = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < a; ++j) mx = std::max(mx, j * lnx - ln_factorial(j));
  double acc = 0.0;
  for (int j = 0; j < a; ++j) acc += std::exp(j * lnx - ln_factorial(j) - mx);
  return ln_factorial(a - 1) - x + mx + std::log(acc);
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa,
             double b, double fb, double fm, double whole, double tol,
             int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  if (!std::isfinite(flm) || !std::isfinite(frm)) {
    throw NumericalError("integrate: non-finite integrand sample");
  }
  double left = simpson(f, a, fa, m, fm, flm);
  double right = simpson(f, m, fm, b, fb, frm);
  double err = left + right - whole;
  // At the depth limit the interval is ~2^-50 of the original span; the
  // Richardson-corrected estimate is the best available (this happens only
  // at integrable kinks such as sqrt(max(f, 0)) crossings).
  if (depth <= 0 || std::abs(err) <= 15.0 * tol) {
    return left + right + err / 15.0;
  }
  return adapt(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  if (a == b) return 0.0;
  double fa = f(a);
  double fb = f(b);
  double fm = f(0.5 * (a + b));
  if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm)) {
    throw NumericalError("integrate: non-finite integrand sample");
  }
  double whole = simpson(f, a, fa, b, fb, fm);
  return adapt(f, a, fa, b, fb, fm, whole, abs_tol, 50);
}

}  // namespace trilin::special
