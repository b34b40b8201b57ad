#include "mtp/quad.hpp"

#include <cmath>
#include <stdexcept>

#include "mtp/sl2.hpp"

namespace mtp {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kHalfPi = kPi / 2;

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (QUADPACK dqk15 values).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679,  0.1903505780647854,  0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

struct PanelEstimate {
  Complex kronrod;
  double error;
};

PanelEstimate gk15(const std::function<Complex(double)>& f, double a, double b) {
  double half = 0.5 * (b - a);
  double mid = 0.5 * (a + b);
  Complex fk{}, fg{};
  for (int i = 0; i < 8; ++i) {
    if (kXgk[i] == 0.0) {
      Complex v = f(mid);
      fk += kWgk[i] * v;
      fg += kWg[3] * v;
      continue;
    }
    Complex vp = f(mid + half * kXgk[i]);
    Complex vm = f(mid - half * kXgk[i]);
    fk += kWgk[i] * (vp + vm);
    if (i % 2 == 1) fg += kWg[i / 2] * (vp + vm);
  }
  fk *= half;
  fg *= half;
  return PanelEstimate{fk, std::abs(fk - fg)};
}

void integrate_rec(const std::function<Complex(double)>& f, double a, double b,
                   double tol_per_length, int depth, QuadratureResult& acc,
                   const QuadratureSpec& spec) {
  PanelEstimate est = gk15(f, a, b);
  if (++acc.panels > spec.max_subdivisions)
    throw std::runtime_error("integrate_gk: max_subdivisions exceeded");
  if (est.error <= tol_per_length * (b - a) || depth >= 60) {
    acc.value += est.kronrod;
    acc.error_estimate += est.error;
    return;
  }
  double mid = 0.5 * (a + b);
  integrate_rec(f, a, mid, tol_per_length, depth + 1, acc, spec);
  integrate_rec(f, mid, b, tol_per_length, depth + 1, acc, spec);
}

} // namespace

QuadratureResult integrate_gk(const std::function<Complex(double)>& f, double a,
                              double b, const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0) || !(spec.rel_tol > 0))
    throw std::invalid_argument("integrate_gk: tolerances must be positive");
  PanelEstimate whole = gk15(f, a, b);
  double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(whole.kronrod));
  QuadratureResult acc;
  integrate_rec(f, a, b, tol / (b - a), 0, acc, spec);
  return acc;
}

namespace {

// Point of the theta = (pi/2) tanh(u) substitution. v = 1 - |tanh u| is
// formed as 2/(1+e^{2|u|}) and cos(theta) as sin(pi v / 2); both stay
// accurate out to the truncation point, where v underflows to 0.
struct TanhPoint {
  double theta;
  double cos_theta;
  double sin_theta; // signed
  double jacobian;  // d theta / d u
};

TanhPoint tanh_point(double u) {
  double au = std::fabs(u);
  double v = 2.0 / (1.0 + std::exp(2.0 * au));
  double sign = u < 0 ? -1.0 : 1.0;
  TanhPoint p;
  p.theta = sign * kHalfPi * (1.0 - v);
  p.cos_theta = std::sin(kHalfPi * v);
  p.sin_theta = sign * std::cos(kHalfPi * v);
  p.jacobian = kHalfPi * v * (2.0 - v);
  return p;
}

bool needs_tanh(Complex s) { return s.real() < 1.0 || s.imag() != 0.0; }

double tanh_cutoff(Complex s) { return std::max(35.0, 19.0 / s.real()); }

} // namespace

Complex quad_oracle(int n, Complex s, const QuadratureSpec& spec) {
  if (!(s.real() > 0)) throw std::invalid_argument("quad_oracle: requires Re(s) > 0");
  Complex sm1 = s - 1.0;
  if (needs_tanh(s)) {
    auto f = [n, sm1](double u) -> Complex {
      TanhPoint p = tanh_point(u);
      if (p.cos_theta == 0.0) return Complex{};
      Complex amp = std::exp(sm1 * std::log(p.cos_theta));
      Complex osc = std::exp(Complex(0, n * p.theta / 2));
      return amp * osc * p.jacobian;
    };
    double cut = tanh_cutoff(s);
    return integrate_gk(f, -cut, cut, spec).value;
  }
  auto f = [n, sm1](double theta) -> Complex {
    double c = std::cos(theta);
    if (c <= 0.0) return Complex{};
    return std::exp(sm1 * std::log(c)) * std::exp(Complex(0, n * theta / 2));
  };
  return integrate_gk(f, -kHalfPi, kHalfPi, spec).value;
}

Complex intertwine_sl2_numeric(int n, Complex s, const QuadratureSpec& spec) {
  if (!(s.real() > 0)) throw std::invalid_argument("intertwine_sl2_numeric: requires Re(s) > 0");
  Complex sp1 = s + 1.0;
  // f_s^{n/2} at the lift of the lower unipotent y_(t), evaluated through
  // the cover: Iwasawa data plus sigma_{n/2} on the K-component.
  auto f_value = [n, sp1](double t) -> Complex {
    IwasawaData iw = iwasawa(gen_y(t));
    Complex a_pow = std::exp(sp1 * std::log(iw.a_param));
    return a_pow * sigma_char(n, iw.k);
  };
  if (needs_tanh(s)) {
    auto f = [&f_value](double u) -> Complex {
      TanhPoint p = tanh_point(u);
      if (p.cos_theta == 0.0) return Complex{};
      double t = p.sin_theta / p.cos_theta;
      double sec2 = 1.0 / (p.cos_theta * p.cos_theta);
      return f_value(t) * sec2 * p.jacobian;
    };
    double cut = tanh_cutoff(s);
    return integrate_gk(f, -cut, cut, spec).value;
  }
  auto f = [&f_value](double theta) -> Complex {
    double c = std::cos(theta);
    if (c <= 0.0) return Complex{};
    double t = std::tan(theta);
    return f_value(t) / (c * c);
  };
  return integrate_gk(f, -kHalfPi, kHalfPi, spec).value;
}

} // namespace mtp
