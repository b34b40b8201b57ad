#include "mtp/sl2.hpp"

#include <cmath>

namespace mtp {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kHalfPi = 1.5707963267948966192313216916398;
constexpr double kAngleTol = 1e-12;

double reduce_mod_2pi(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (kTwoPi - r < kAngleTol) r = 0; // wrapped all the way around
  return r;
}

} // namespace

int eps(double theta) {
  double r = reduce_mod_2pi(theta);
  for (int k = 0; k < 4; ++k) {
    if (std::fabs(r - k * kHalfPi) < kAngleTol) {
      static const int exceptional[4] = {1, -1, -1, 1};
      return exceptional[k];
    }
  }
  double v = std::sin(r) * std::sin(2 * r);
  return v > 0 ? 1 : -1;
}

Mat2D rotation(double phi) {
  double r = reduce_mod_2pi(phi);
  for (int k = 0; k < 4; ++k) {
    if (std::fabs(r - k * kHalfPi) < kAngleTol) {
      static const double cs[4] = {1, 0, -1, 0};
      static const double sn[4] = {0, 1, 0, -1};
      return Mat2D{cs[k], -sn[k], sn[k], cs[k]};
    }
  }
  double c = std::cos(r), s = std::sin(r);
  return Mat2D{c, -s, s, c};
}

CoverD exp_rotation(double phi) { return CoverD{rotation(phi), eps(phi / 2)}; }

std::complex<double> sigma_char(int n, const CoverD& k) {
  const Mat2D& m = k.mat;
  double tol = 1e-9;
  if (std::fabs(m.a - m.d) > tol || std::fabs(m.b + m.c) > tol ||
      std::fabs(m.a * m.a + m.c * m.c - 1) > tol)
    throw std::invalid_argument("sigma_char: matrix is not a rotation");
  double phi = std::atan2(m.c, m.a);
  std::complex<double> v = std::exp(std::complex<double>(0, n * phi / 2));
  if (k.sign != eps(phi / 2) && (n & 1)) v = -v;
  return v;
}

IwasawaData iwasawa(const CoverD& g) {
  const Mat2D& m = g.mat;
  // bottom row of n a r_phi is (sin(phi)/a, cos(phi)/a) with a > 0
  double inv_a = std::hypot(m.c, m.d);
  double a = 1.0 / inv_a;
  double phi = std::atan2(m.c, m.d);
  Mat2D k = rotation(phi);
  // n a = m k^T
  Mat2D kt{k.a, k.c, k.b, k.d};
  Mat2D na = m * kt;
  double n_param = na.b * a;

  CoverD q = mul(gen_x(n_param), gen_h(a));
  int sign = g.sign * q.sign * kubota(q.mat, k);
  return IwasawaData{n_param, a, CoverD{k, sign}};
}

} // namespace mtp
