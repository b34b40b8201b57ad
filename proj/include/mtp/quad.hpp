#pragma once

#include <complex>
#include <functional>

#include "mtp/cfun.hpp"

namespace mtp {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-11;
  int max_subdivisions = 4000;
};

struct QuadratureResult {
  Complex value{};
  double error_estimate = 0;
  int panels = 0;
};

/// Adaptive Gauss-Kronrod 15(7) integration of a complex-valued function
/// over [a,b]. Panels are bisected left-first and summed in completion
/// order. Throws std::runtime_error when the panel budget is exhausted.
QuadratureResult integrate_gk(const std::function<Complex(double)>& f, double a,
                              double b, const QuadratureSpec& spec);

/// Numerical oracle for c_{n/2}(s): after t = tan(theta) the defining
/// integral becomes int_{-pi/2}^{pi/2} cos(theta)^{s-1} e^{in theta/2};
/// endpoint-singular and oscillatory cases go through a further
/// theta = (pi/2) tanh(u) change of variable. Requires Re(s) > 0.
Complex quad_oracle(int n, Complex s, const QuadratureSpec& spec = {});

/// Full group-theoretic oracle: integrates f_s^{n/2} over the lifted
/// lower-unipotent subgroup, with f_s^{n/2}(nak) = a^{s+1} sigma_{n/2}(k)
/// evaluated through the cover's Iwasawa decomposition and sign
/// arithmetic. Requires Re(s) > 0.
Complex intertwine_sl2_numeric(int n, Complex s, const QuadratureSpec& spec = {});

} // namespace mtp
