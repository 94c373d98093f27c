// Test-only oracles, independent of the library's computation paths.
#ifndef HMAP_TESTS_ORACLES_HPP
#define HMAP_TESTS_ORACLES_HPP

#include <cmath>
#include <numbers>

namespace oracles {

inline constexpr double kPi = std::numbers::pi;

// C_q through the Beta-integral identity
//   (1/2pi) int_0^{2pi} |cos t|^q dt = Gamma((q+1)/2) / (sqrt(pi) Gamma(q/2+1)),
// evaluated with lgamma.  Independent of the tanh-sinh route used by the
// library.
inline double cq_gamma(double q) {
  if (std::isinf(q)) return 1.0;
  const double log_mean = std::lgamma((q + 1.0) / 2.0) - 0.5 * std::log(kPi) -
                          std::lgamma(q / 2.0 + 1.0);
  return std::exp(log_mean / q);
}

// Largest x in [lo, hi] with f(x) <= 0 for nondecreasing f.
template <class F>
double bisect_le(F f, double lo, double hi, double tol = 1e-14) {
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) <= 0.0 ? lo : hi) = mid;
  }
  return lo;
}

// Closed-form majorant of the extremal family: sum over odd m of
// 4M/(pi m) r^{n m} = (4M/pi) artanh(r^n).
inline double extremal_majorant(double M, int n, double r) {
  return (4.0 * M / kPi) * std::atanh(std::pow(r, n));
}

}  // namespace oracles

#endif  // HMAP_TESTS_ORACLES_HPP
