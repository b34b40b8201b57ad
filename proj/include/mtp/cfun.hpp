#pragma once

#include <complex>
#include <vector>

namespace mtp {

using Complex = std::complex<double>;

/// Value of a c-function: finite, a pole of the Gamma numerator, or (only
/// at the product level) an unresolved pole-times-zero collision.
struct CValue {
  enum class Kind { Finite, Pole, Indeterminate };
  Kind kind = Kind::Finite;
  Complex value{0.0, 0.0};

  static CValue finite(Complex v) { return CValue{Kind::Finite, v}; }
  static CValue pole() { return CValue{Kind::Pole, {}}; }
  static CValue indeterminate() { return CValue{Kind::Indeterminate, {}}; }

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_pole() const { return kind == Kind::Pole; }
  bool is_zero() const { return kind == Kind::Finite && value == Complex{0.0, 0.0}; }
};

/// True if z is within tol of a non-positive integer (a Gamma pole).
bool is_nonpositive_integer(Complex z, double tol = 1e-9);

/// Principal-branch log-Gamma via Lanczos approximation with reflection
/// for Re(z) < 1/2. Throws std::domain_error at non-positive integers.
Complex log_gamma(Complex z);

/// sqrt(pi) * prod Gamma(num) / prod Gamma(den), evaluated at the point:
/// a numerator pole gives Pole, a denominator pole gives exact 0.
CValue gamma_ratio(const std::vector<Complex>& num, const std::vector<Complex>& den);

/// c_{n/2}(s) = sqrt(pi) G(s/2) G((s+1)/2) / (G((s+1)/2+n/4) G((s+1)/2-n/4)).
CValue c_n_over_2(int n, Complex s);

/// Linear-group c-function:
/// c_n(s) = sqrt(pi) G(s/2) G((s+1)/2) / (G((s+n+1)/2) G((s-n+1)/2)).
CValue c_linear(int n, Complex s);

/// c_0(nu) = sqrt(pi) G(nu/2) / G((nu+1)/2).
CValue c0(Complex nu);

/// c_{1/2}(nu) = sqrt(pi) G(nu/2) G((nu+1)/2) / (G(nu/2+3/4) G(nu/2+1/4)).
CValue c_half(Complex nu);

} // namespace mtp
