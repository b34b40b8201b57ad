#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <type_traits>

#include "mtp/rational.hpp"
#include "mtp/torus.hpp"

namespace mtp {

/// 2x2 determinant-1 matrix over exact rationals (group-law tests) or
/// doubles (numeric path).
template <class T>
struct Mat2 {
  T a{}, b{}, c{}, d{};

  friend bool operator==(const Mat2&, const Mat2&) = default;

  static Mat2 identity() { return Mat2{T(1), T(0), T(0), T(1)}; }

  T det() const { return a * d - b * c; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

using Mat2Q = Mat2<Rat>;
using Mat2D = Mat2<double>;

/// Element of the double cover: (matrix, sign) under the Kubota cocycle.
template <class T>
struct Cover {
  Mat2<T> mat = Mat2<T>::identity();
  int sign = 1;
};

using CoverQ = Cover<Rat>;
using CoverD = Cover<double>;

namespace detail {
// x(g) = c if c != 0, else d. On the double path "zero" means within
// 1e-12 of the matrix scale (the cocycle is discontinuous exactly there).
inline bool entry_is_zero(const Rat& c, const Mat2Q&) { return c.is_zero(); }
inline bool entry_is_zero(double c, const Mat2D& m) {
  double scale = std::max({1.0, std::fabs(m.a), std::fabs(m.b), std::fabs(m.d)});
  return std::fabs(c) <= 1e-12 * scale;
}
inline int sign_of(const Rat& v) { return v.sign(); }
inline int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
} // namespace detail

template <class T>
T x_entry(const Mat2<T>& m) {
  return detail::entry_is_zero(m.c, m) ? m.d : m.c;
}

/// Kubota cocycle c(g,g') = (x(g),x(g')) (-x(g)x(g'), x(gg')) in {+-1}.
template <class T>
int kubota(const Mat2<T>& g, const Mat2<T>& h) {
  int xg = detail::sign_of(x_entry(g));
  int xh = detail::sign_of(x_entry(h));
  int xgh = detail::sign_of(x_entry(g * h));
  int s = (xg < 0 && xh < 0) ? -1 : 1;        // (x(g), x(g'))
  if (-xg * xh < 0 && xgh < 0) s = -s;        // (-x(g)x(g'), x(gg'))
  return s;
}

/// Group law (g,e)(g',e') = (gg', ee' c(g,g')).
template <class T>
Cover<T> mul(const Cover<T>& x, const Cover<T>& y) {
  return Cover<T>{x.mat * y.mat, x.sign * y.sign * kubota(x.mat, y.mat)};
}

template <class T>
Cover<T> inverse(const Cover<T>& x) {
  Mat2<T> inv{x.mat.d, T(0) - x.mat.b, T(0) - x.mat.c, x.mat.a};
  return Cover<T>{inv, x.sign * kubota(x.mat, inv)};
}

/// Steinberg lifts: x(t) = (x_(t),1), y(t) = (y_(t),1), w(t) = (w_(t),1),
/// h(t) = (h_(t), sgn t).
template <class T>
Cover<T> gen_x(const T& t) {
  return Cover<T>{Mat2<T>{T(1), t, T(0), T(1)}, 1};
}
template <class T>
Cover<T> gen_y(const T& t) {
  return Cover<T>{Mat2<T>{T(1), T(0), t, T(1)}, 1};
}
template <class T>
Cover<T> gen_w(const T& t) {
  if (detail::sign_of(t) == 0) throw std::domain_error("gen_w: zero parameter");
  T tinv = T(1) / t;
  return Cover<T>{Mat2<T>{T(0), t, T(0) - tinv, T(0)}, 1};
}
template <class T>
Cover<T> gen_h(const T& t) {
  if (detail::sign_of(t) == 0) throw std::domain_error("gen_h: zero parameter");
  return Cover<T>{Mat2<T>{t, T(0), T(0), T(1) / t}, detail::sign_of(t)};
}

/// e(phi) = (r_phi, eps(phi/2)): sign component of the lifted rotation
/// subgroup, eps(theta) = sgn(sin theta sin 2theta) away from the four
/// exceptional angles.
int eps(double theta);

/// Rotation matrix with entries snapped to exact {0,+-1} within 1e-12 of
/// multiples of pi/2, so cocycle signs on grid angles are exact.
Mat2D rotation(double phi);

/// The lifted one-parameter rotation subgroup e(phi) = exp(-phi Z).
CoverD exp_rotation(double phi);

/// sigma_{n/2} on the covered rotation group: (r_phi, eps(phi/2)) ->
/// e^{in phi/2}; the other preimage of r_phi picks up (-1)^n.
/// Throws std::invalid_argument if k.mat is not a rotation.
std::complex<double> sigma_char(int n, const CoverD& k);

/// Iwasawa data of g in the cover: g = x(n_param) h(a_param) k with the
/// k-sign solved exactly through the cocycle.
struct IwasawaData {
  double n_param = 0;
  double a_param = 1;
  CoverD k;
};

IwasawaData iwasawa(const CoverD& g);

} // namespace mtp
