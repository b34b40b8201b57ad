#include "mtp/cfun.hpp"

#include <cmath>
#include <stdexcept>

namespace mtp {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// log sin(pi z), stable for large |Im z| where sin(pi z) itself overflows.
// Branch offsets by 2*pi*i*k are irrelevant downstream (only exponentials
// of log-Gamma sums are consumed).
Complex log_sin_pi(Complex z) {
  double im = z.imag();
  if (std::fabs(im) < 20.0) return std::log(std::sin(kPi * z));
  if (im > 0) {
    Complex q2 = std::exp(Complex(0, 2 * kPi) * z); // tiny
    return std::log(1.0 - q2) + Complex(-std::log(2.0), kPi / 2) - Complex(0, kPi) * z;
  }
  Complex p2 = std::exp(Complex(0, -2 * kPi) * z); // tiny
  return std::log(1.0 - p2) + Complex(-std::log(2.0), -kPi / 2) + Complex(0, kPi) * z;
}

} // namespace

bool is_nonpositive_integer(Complex z, double tol) {
  if (std::fabs(z.imag()) > tol) return false;
  double r = std::round(z.real());
  return r <= 0.5 && std::fabs(z.real() - r) <= tol;
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw std::domain_error("log_gamma: pole at non-positive integer");
  if (z.real() < 0.5) return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);

  // Lanczos, g = 7, 9-term coefficient set (Godfrey's values, as used by
  // the usual double-precision implementations).
  static const double p[9] = {0.99999999999980993,  676.5203681218851,
                              -1259.1392167224028,  771.32342877765313,
                              -176.61502916214059,  12.507343278686905,
                              -0.13857109526572012, 9.9843695780195716e-6,
                              1.5056327351493116e-7};
  Complex x = p[0];
  for (int i = 1; i < 9; ++i) x += p[i] / (z - 1.0 + (double)i);
  Complex t = z + 6.5; // z - 1 + g + 1/2
  return 0.5 * std::log(2 * kPi) + (z - 0.5) * std::log(t) - t + std::log(x);
}

CValue gamma_ratio(const std::vector<Complex>& num, const std::vector<Complex>& den) {
  for (const Complex& a : num)
    if (is_nonpositive_integer(a)) return CValue::pole();
  for (const Complex& b : den)
    if (is_nonpositive_integer(b)) return CValue::finite(0.0);
  Complex logv = 0.5 * std::log(kPi);
  for (const Complex& a : num) logv += log_gamma(a);
  for (const Complex& b : den) logv -= log_gamma(b);
  return CValue::finite(std::exp(logv));
}

CValue c_n_over_2(int n, Complex s) {
  Complex h = (s + 1.0) / 2.0;
  double q = n / 4.0;
  return gamma_ratio({s / 2.0, h}, {h + q, h - q});
}

CValue c_linear(int n, Complex s) {
  double dn = n;
  return gamma_ratio({s / 2.0, (s + 1.0) / 2.0}, {(s + dn + 1.0) / 2.0, (s - dn + 1.0) / 2.0});
}

CValue c0(Complex nu) { return gamma_ratio({nu / 2.0}, {(nu + 1.0) / 2.0}); }

CValue c_half(Complex nu) {
  return gamma_ratio({nu / 2.0, (nu + 1.0) / 2.0}, {nu / 2.0 + 0.75, nu / 2.0 + 0.25});
}

} // namespace mtp
