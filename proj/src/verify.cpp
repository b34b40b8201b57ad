#include "mtp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "mtp/cfun.hpp"
#include "mtp/euclid.hpp"
#include "mtp/intertwine.hpp"
#include "mtp/quad.hpp"
#include "mtp/rootsys.hpp"
#include "mtp/sl2.hpp"
#include "mtp/torus.hpp"

namespace mtp::verify {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

const std::vector<std::string>& rank2_types() {
  static const std::vector<std::string> t = {"A2", "B2", "C2", "G2"};
  return t;
}
const std::vector<std::string>& rank3_types() {
  static const std::vector<std::string> t = {"A1", "A2", "A3", "B2", "B3",
                                             "C2", "C3", "D3", "G2"};
  return t;
}
const std::vector<std::string>& rank4_types() {
  static const std::vector<std::string> t = {"A1", "A2", "A3", "A4", "B2", "B3", "B4",
                                             "C2", "C3", "C4", "D3", "D4", "F4", "G2"};
  return t;
}

RootSystem rs_of(const std::string& name) {
  return RootSystem(RootSystemSpec::parse(name));
}

// random cover element as a word in gen_x/gen_y with rational parameters
// of bounded height (covers both Bruhat cells)
CoverQ random_cover(Rng& rng, int max_len = 12) {
  CoverQ g;
  int len = rng.uniform_int(0, max_len);
  for (int k = 0; k < len; ++k) {
    Rat t = rng.small_rat();
    g = rng.next() & 1 ? mul(g, gen_x(t)) : mul(g, gen_y(t));
  }
  if (rng.next() & 1) g.sign = -g.sign;
  return g;
}

// deliberate boundary elements: upper-triangular (c = 0) and off-diagonal
// matrices whose products also land on c = 0
std::vector<Mat2Q> boundary_matrices() {
  std::vector<Mat2Q> out;
  out.push_back(Mat2Q::identity());
  out.push_back(gen_x(Rat(2)).mat);
  out.push_back(gen_x(Rat(-1)).mat);
  out.push_back(gen_h(Rat(3)).mat);
  out.push_back(gen_h(Rat(-2)).mat);
  out.push_back(mul(gen_x(Rat(1)), gen_h(Rat(-3))).mat);
  out.push_back(gen_w(Rat(1)).mat);
  out.push_back(gen_w(Rat(-1)).mat);
  out.push_back(gen_y(Rat(2)).mat);
  out.push_back(gen_y(Rat(-1, 2)).mat);
  out.push_back(gen_h(Rat(-1)).mat);
  return out;
}

bool cocycle_identity_holds(const Mat2Q& g1, const Mat2Q& g2, const Mat2Q& g3) {
  int lhs = kubota(g1, g2) * kubota(g1 * g2, g3);
  int rhs = kubota(g1, g2 * g3) * kubota(g2, g3);
  return lhs == rhs;
}

double mat_dist(const Mat2D& a, const Mat2D& b) {
  return std::max({std::fabs(a.a - b.a), std::fabs(a.b - b.b), std::fabs(a.c - b.c),
                   std::fabs(a.d - b.d)});
}

bool covq_eq(const CoverQ& a, const CoverQ& b) {
  return a.sign == b.sign && a.mat == b.mat;
}

std::complex<double> cx(double re, double im) { return {re, im}; }

double rel_diff(Complex a, Complex b) {
  double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

CheckResult make_result(std::string name, bool pass, double measured, std::string detail) {
  return CheckResult{std::move(name), pass, measured, std::move(detail)};
}

SpectralParam random_param(Rng& rng, int rank) {
  SpectralParam s;
  for (int i = 0; i < rank; ++i)
    s.coords.push_back(cx(rng.uniform(0.3, 2.3), rng.uniform(0.1, 0.9)));
  return s;
}

} // namespace

// ---------------------------------------------------------------------------
// sl2 / Kubota
// ---------------------------------------------------------------------------

CheckResult kubota_cocycle_identity(std::uint64_t seed, int triples) {
  Rng rng(seed);
  int failures = 0, total = 0;
  for (int k = 0; k < triples; ++k) {
    Mat2Q g1 = random_cover(rng).mat, g2 = random_cover(rng).mat, g3 = random_cover(rng).mat;
    ++total;
    if (!cocycle_identity_holds(g1, g2, g3)) ++failures;
  }
  auto bd = boundary_matrices();
  for (const auto& g1 : bd)
    for (const auto& g2 : bd)
      for (const auto& g3 : bd) {
        ++total;
        if (!cocycle_identity_holds(g1, g2, g3)) ++failures;
      }
  return make_result("kubota cocycle identity", failures == 0, failures,
                     std::to_string(total) + " triples (incl. c=0 boundary set)");
}

CheckResult kubota_mul_associative(std::uint64_t seed, int triples) {
  Rng rng(seed);
  int failures = 0;
  for (int k = 0; k < triples; ++k) {
    CoverQ a = random_cover(rng), b = random_cover(rng), c = random_cover(rng);
    if (!covq_eq(mul(mul(a, b), c), mul(a, mul(b, c)))) ++failures;
  }
  return make_result("cover multiplication associative", failures == 0, failures,
                     std::to_string(triples) + " random triples");
}

CheckResult cover_h_relation(std::uint64_t seed, int pairs) {
  Rng rng(seed);
  int failures = 0;
  for (int k = 0; k < pairs; ++k) {
    // cycle through all four sign patterns
    Rat t = rng.small_rat(4, 3), u = rng.small_rat(4, 3);
    if (t.sign() < 0) t = -t;
    if (u.sign() < 0) u = -u;
    if (k % 4 == 1 || k % 4 == 3) t = -t;
    if (k % 4 >= 2) u = -u;
    CoverQ lhs = mul(gen_h(t), gen_h(u));
    CoverQ rhs = gen_h(t * u);
    rhs.sign *= hilbert(t, u);
    if (!covq_eq(lhs, rhs)) ++failures;
  }
  return make_result("h(t)h(u) = (t,u) h(tu)", failures == 0, failures,
                     std::to_string(pairs) + " rational pairs, all sign patterns");
}

CheckResult rotation_homomorphism_grid() {
  int failures = 0;
  double worst = 0;
  for (int k1 = 0; k1 < 48; ++k1)
    for (int k2 = 0; k2 < 48; ++k2) {
      double p1 = k1 * kPi / 12, p2 = k2 * kPi / 12;
      CoverD ab = mul(exp_rotation(p1), exp_rotation(p2));
      CoverD c = exp_rotation(p1 + p2);
      if (ab.sign != c.sign) ++failures;
      worst = std::max(worst, mat_dist(ab.mat, c.mat));
    }
  if (worst > 1e-12) ++failures;

  // exceptional values and the central element
  CoverD epi = exp_rotation(kPi);
  CoverD h_m1 = gen_h(-1.0);
  if (!(epi.sign == h_m1.sign && mat_dist(epi.mat, h_m1.mat) == 0.0)) ++failures;
  CoverD e2pi = exp_rotation(2 * kPi);
  if (!(e2pi.sign == -1 && mat_dist(e2pi.mat, Mat2D::identity()) == 0.0)) ++failures;
  CoverD e0 = exp_rotation(0.0);
  if (!(e0.sign == 1 && mat_dist(e0.mat, Mat2D::identity()) == 0.0)) ++failures;

  // sigma_{n/2} multiplicative on the same grid; sigma_{1/2}(e(pi)) = i
  for (int n = 1; n <= 3 && failures == 0; ++n)
    for (int k1 = 0; k1 < 48; k1 += 5)
      for (int k2 = 0; k2 < 48; k2 += 5) {
        CoverD a = exp_rotation(k1 * kPi / 12), b = exp_rotation(k2 * kPi / 12);
        double d = std::abs(sigma_char(n, mul(a, b)) - sigma_char(n, a) * sigma_char(n, b));
        worst = std::max(worst, d);
        if (d > 1e-12) ++failures;
      }
  if (std::abs(sigma_char(1, epi) - cx(0, 1)) > 1e-15) ++failures;
  if (std::abs(sigma_char(3, CoverD{Mat2D::identity(), -1}) - cx(-1, 0)) > 1e-15) ++failures;
  if (std::abs(sigma_char(2, CoverD{Mat2D::identity(), -1}) - cx(1, 0)) > 1e-15) ++failures;
  return make_result("lifted rotation subgroup e(phi)", failures == 0, worst,
                     "48x48 grid, exact signs");
}

CheckResult steinberg_relations(std::uint64_t seed, int samples) {
  Rng rng(seed);
  int failures = 0;
  // w(t) = x(t) y(-1/t) x(t)
  for (Rat t : {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(1, 3)}) {
    CoverQ rhs = mul(mul(gen_x(t), gen_y(-t.inverse())), gen_x(t));
    if (!covq_eq(gen_w(t), rhs)) ++failures;
  }
  for (int k = 0; k < samples; ++k) {
    Rat t = rng.small_rat(3, 3), u = rng.small_rat(3, 3);
    // (B'): w(t) x(u) w(-t) = y(-u/t^2)
    CoverQ lhs = mul(mul(gen_w(t), gen_x(u)), gen_w(-t));
    CoverQ rhs = gen_y(-u / (t * t));
    if (!covq_eq(lhs, rhs)) ++failures;
    // h(t) = w(t) w(-1)
    if (!covq_eq(gen_h(t), mul(gen_w(t), gen_w(Rat(-1))))) ++failures;
    // w(1) h(t) w(-1) = h(1/t)
    CoverQ conj = mul(mul(gen_w(Rat(1)), gen_h(t)), gen_w(Rat(-1)));
    if (!covq_eq(conj, gen_h(t.inverse()))) ++failures;
  }
  return make_result("Steinberg relations in the cover", failures == 0, failures,
                     std::to_string(samples) + " rational samples");
}

CheckResult iwasawa_recomposition(std::uint64_t seed, int samples, double tol) {
  Rng rng(seed);
  int failures = 0;
  double worst = 0;
  for (int k = 0; k < samples; ++k) {
    CoverQ q = random_cover(rng, 8);
    CoverD g{Mat2D{q.mat.a.to_double(), q.mat.b.to_double(), q.mat.c.to_double(),
                   q.mat.d.to_double()},
             q.sign};
    IwasawaData iw = iwasawa(g);
    CoverD re = mul(gen_x(iw.n_param), mul(gen_h(iw.a_param), iw.k));
    double scale = std::max({1.0, std::fabs(g.mat.a), std::fabs(g.mat.b),
                             std::fabs(g.mat.c), std::fabs(g.mat.d)});
    double d = mat_dist(re.mat, g.mat) / scale;
    worst = std::max(worst, d);
    if (d > tol || re.sign != g.sign) ++failures;
  }
  // spot checks
  IwasawaData y1 = iwasawa(gen_y(1.0));
  if (std::fabs(y1.a_param - 1 / std::sqrt(2.0)) > 1e-15 || y1.k.sign != 1 ||
      std::fabs(std::atan2(y1.k.mat.c, y1.k.mat.a) - kPi / 4) > 1e-15)
    ++failures;
  IwasawaData hm1 = iwasawa(gen_h(-1.0));
  if (std::fabs(hm1.n_param) != 0.0 || hm1.a_param != 1.0 || hm1.k.sign != -1) ++failures;
  IwasawaData idw = iwasawa(CoverD{});
  if (idw.n_param != 0.0 || idw.a_param != 1.0 || idw.k.sign != 1) ++failures;
  return make_result("Iwasawa recomposition", failures == 0, worst,
                     std::to_string(samples) + " random elements, exact signs");
}

// ---------------------------------------------------------------------------
// c-functions
// ---------------------------------------------------------------------------

CheckResult log_gamma_spots() {
  int failures = 0;
  double worst = 0;
  auto chk = [&](Complex z, Complex want) {
    double d = std::abs(log_gamma(z) - want);
    worst = std::max(worst, d);
    if (d > 1e-13) ++failures;
  };
  chk(1.0, 0.0);
  chk(0.5, 0.5 * std::log(kPi));
  chk(5.0, std::log(24.0));
  chk(2.0, 0.0);
  bool threw = false;
  try {
    log_gamma(cx(0, 0));
  } catch (const std::domain_error&) {
    threw = true;
  }
  if (!threw) ++failures;
  threw = false;
  try {
    log_gamma(cx(-3, 0));
  } catch (const std::domain_error&) {
    threw = true;
  }
  if (!threw) ++failures;
  return make_result("log-gamma spot values", failures == 0, worst, "");
}

CheckResult gamma_duplication(std::uint64_t seed, int samples, double tol) {
  Rng rng(seed);
  int failures = 0;
  double worst = 0;
  int done = 0;
  while (done < samples) {
    Complex s = cx(rng.uniform(-9, 9), rng.uniform(-9, 9));
    if (is_nonpositive_integer(s, 1e-3) || is_nonpositive_integer(s / 2.0, 1e-3) ||
        is_nonpositive_integer((s + 1.0) / 2.0, 1e-3))
      continue;
    ++done;
    Complex lhs = std::exp(log_gamma(s));
    Complex rhs = std::exp(-0.5 * std::log(kPi) + (s - 1.0) * std::log(2.0) +
                           log_gamma(s / 2.0) + log_gamma((s + 1.0) / 2.0));
    double d = rel_diff(lhs, rhs);
    worst = std::max(worst, d);
    if (d > tol) ++failures;
  }
  return make_result("Gamma duplication identity", failures == 0, worst,
                     std::to_string(samples) + " random s");
}

CheckResult cfun_spot_values(double tol) {
  int failures = 0;
  double worst = 0;
  auto chk = [&](CValue v, Complex want) {
    if (!v.is_finite()) {
      ++failures;
      return;
    }
    double d = std::abs(v.value - want);
    worst = std::max(worst, d);
    if (d > tol * std::max(1.0, std::abs(want))) ++failures;
  };
  chk(c0(1.0), kPi);
  chk(c_half(1.0), 2 * std::sqrt(2.0));
  chk(c_linear(1, 1.0), 2.0);
  chk(c_n_over_2(0, 1.0), kPi);
  chk(c_n_over_2(1, 1.0), 2 * std::sqrt(2.0));
  chk(c_n_over_2(2, 1.0), 2.0);
  return make_result("c-function spot values", failures == 0, worst,
                     "c0(1), c_{1/2}(1), c_linear(1,1), c_{n/2}(.,1)");
}

CheckResult cfun_symmetry(std::uint64_t seed, int samples, double tol) {
  Rng rng(seed);
  int failures = 0;
  double worst = 0;
  for (int k = 0; k < samples; ++k) {
    int n = rng.uniform_int(-6, 6);
    Complex s = cx(rng.uniform(0.2, 4.0), rng.uniform(-2.0, 2.0));
    CValue a = c_n_over_2(n, s), b = c_n_over_2(-n, s);
    if (a.is_finite() != b.is_finite()) {
      ++failures;
      continue;
    }
    if (!a.is_finite()) continue;
    double d = rel_diff(a.value, b.value);
    worst = std::max(worst, d);
    if (d > tol) ++failures;
    // c_half agrees with c_{n/2} at n = +-1
    CValue h = c_half(s);
    CValue p1 = c_n_over_2(1, s), m1 = c_n_over_2(-1, s);
    if (h.is_finite() && p1.is_finite()) {
      double d2 = std::max(rel_diff(h.value, p1.value), rel_diff(h.value, m1.value));
      worst = std::max(worst, d2);
      if (d2 > tol) ++failures;
    }
  }
  return make_result("c_{n/2}(s) = c_{-n/2}(s)", failures == 0, worst,
                     std::to_string(samples) + " random (n,s)");
}

CheckResult cfun_conjugation(std::uint64_t seed, int samples, double tol) {
  Rng rng(seed);
  int failures = 0;
  double worst = 0;
  for (int k = 0; k < samples; ++k) {
    int n = rng.uniform_int(-4, 4);
    Complex s = cx(rng.uniform(0.2, 4.0), rng.uniform(-2.0, 2.0));
    CValue a = c_n_over_2(n, s), b = c_n_over_2(n, std::conj(s));
    if (!a.is_finite() || !b.is_finite()) continue;
    double d = rel_diff(std::conj(a.value), b.value);
    worst = std::max(worst, d);
    if (d > tol) ++failures;
  }
  return make_result("c_{n/2}(conj s) = conj c_{n/2}(s)", failures == 0, worst,
                     std::to_string(samples) + " random (n,s)");
}

CheckResult cfun_positivity_unitary_axis(int points, double tol) {
  int failures = 0;
  double worst_neg = 0, worst_im = 0;
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k < points; ++k) {
      double y = -5.0 + 10.0 * (k + 0.5) / points;
      if (std::fabs(y) < 1e-9) continue;
      Complex s = cx(0, y);
      CValue a = c_n_over_2(n, s), b = c_n_over_2(n, -s);
      if (!a.is_finite() || !b.is_finite()) {
        ++failures;
        continue;
      }
      Complex prod = a.value * b.value;
      worst_im = std::max(worst_im, std::fabs(prod.imag()));
      if (prod.real() < -tol) {
        ++failures;
        worst_neg = std::max(worst_neg, -prod.real());
      }
      if (std::fabs(prod.imag()) > tol * std::max(1.0, std::abs(prod))) ++failures;
    }
  return make_result("c(s) c(-s) >= 0 on the unitary axis", failures == 0,
                     std::max(worst_neg, worst_im),
                     std::to_string(points) + " points, n in {0..3}");
}

namespace {

CheckResult oracle_grid(const std::string& name, double rel_tol, bool group_route) {
  int failures = 0;
  double worst = 0;
  int count = 0;
  for (int n : {0, 1, -1, 2, -2, 3, -3})
    for (double re : {0.5, 1.0, 1.7, 3.0})
      for (double im : {0.0, 0.5}) {
        Complex s = cx(re, im);
        CValue closed = c_n_over_2(n, s);
        if (!closed.is_finite()) {
          ++failures;
          continue;
        }
        Complex num = group_route ? intertwine_sl2_numeric(n, s) : quad_oracle(n, s);
        // at an exact zero of the closed form (e.g. n = +-3, s = 1/2) the
        // relative measure degenerates; both sides vanishing is agreement
        double scale = std::max(std::abs(closed.value), std::abs(num));
        double d = scale <= 1e-10 ? 0.0 : std::abs(closed.value - num) / scale;
        worst = std::max(worst, d);
        ++count;
        if (d > rel_tol) ++failures;
      }
  char tolbuf[32];
  std::snprintf(tolbuf, sizeof tolbuf, "%.0e", rel_tol);
  return make_result(name, failures == 0, worst,
                     std::to_string(count) + " grid points, rel tol " + tolbuf);
}

} // namespace

CheckResult cfun_vs_quadrature(double rel_tol) {
  return oracle_grid("closed form vs quadrature oracle", rel_tol, false);
}

CheckResult cfun_vs_group_integral(double rel_tol) {
  return oracle_grid("closed form vs cover integral (Iwasawa route)", rel_tol, true);
}

CheckResult cfun_pole_detection() {
  int failures = 0;
  if (!c_n_over_2(2, 0.0).is_pole()) ++failures;
  if (!c_n_over_2(0, 0.0).is_pole()) ++failures;
  if (!c_half(0.0).is_pole()) ++failures;
  if (!c0(0.0).is_pole()) ++failures;
  if (!c0(cx(-1, 0)).is_zero()) ++failures;          // denominator pole
  if (!c_half(cx(-0.5, 0)).is_zero()) ++failures;    // denominator pole
  if (!c_linear(0, cx(0, 0)).is_pole()) ++failures;  // even-n uncancelled
  if (!c_linear(2, cx(0, 0)).is_pole()) ++failures;
  // c_linear(n,.) is c_{n/2}(.) at doubled index, same literal arguments at n=0
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    Complex s = cx(rng.uniform(0.2, 3.0), rng.uniform(-1.0, 1.0));
    CValue a = c_linear(0, s), b = c_n_over_2(0, s);
    if (!a.is_finite() || !b.is_finite() || rel_diff(a.value, b.value) > 1e-12) ++failures;
    CValue c2 = c_linear(1, s), d2 = c_n_over_2(2, s);
    if (!c2.is_finite() || !d2.is_finite() || rel_diff(c2.value, d2.value) > 1e-12) ++failures;
  }
  bool threw = false;
  try {
    quad_oracle(0, cx(-0.5, 0));
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  if (!threw) ++failures;
  return make_result("pole bookkeeping", failures == 0, failures, "");
}

// ---------------------------------------------------------------------------
// root systems
// ---------------------------------------------------------------------------

CheckResult rootsys_structure() {
  int failures = 0;
  for (const auto& name : rank4_types()) {
    RootSystem rs = rs_of(name);
    int l = rs.rank();
    // reflection closure
    for (int i = 0; i < l; ++i)
      for (const Root& a : rs.roots())
        if (!rs.is_root(Root{rs.reflect(i, a.coords)})) ++failures;
    // Cartan integer constraints
    for (const Root& a : rs.roots()) {
      if (rs.cartan_int(a, a) != 2) ++failures;
      for (const Root& b : rs.roots()) {
        int prod = rs.cartan_int(a, b) * rs.cartan_int(b, a);
        Root neg_b = b;
        for (int& c : neg_b.coords) c = -c;
        if (a == b || a == neg_b) continue;
        if (prod < 0 || prod > 3) ++failures;
      }
    }
    // n_phi per family
    int want_nphi = (name[0] == 'G') ? 3 : (name[0] == 'B' || name[0] == 'C' || name[0] == 'F') ? 2 : 1;
    if (rs.n_phi() != want_nphi) ++failures;
    // |W| from enumeration vs the order formula
    if (weyl_enumerate(rs).size() != weyl_order(rs.spec())) ++failures;
    // Cartan matrix against the geometric model
    euclid::Model model(rs.spec());
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        if (model.cartan_int(rs.simple_root(i), rs.simple_root(j)) != Rat(rs.cartan(i, j)))
          ++failures;
  }
  // bad spec must throw
  bool threw = false;
  try {
    RootSystemSpec::parse("Z9");
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  if (!threw) ++failures;
  try {
    threw = false;
    RootSystemSpec::parse("E9");
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  if (!threw) ++failures;
  return make_result("root system structure (rank <= 4)", failures == 0, failures, "");
}

CheckResult rootsys_words() {
  int failures = 0;
  for (const auto& name : rank3_types()) {
    RootSystem rs = rs_of(name);
    auto elements = weyl_enumerate(rs);
    if (elements.size() != weyl_order(rs.spec())) ++failures;
    const WeylElement* longest = &elements.front();
    for (const WeylElement& w : elements) {
      auto inv = inversion_set(rs, w);
      if ((int)inv.size() != w.length()) ++failures;
      if (weyl_length(rs, w) != w.length()) ++failures;
      for (const auto& word : all_reduced_words(rs, w))
        if (!(weyl_element(rs, word).matrix == w.matrix) || word.size() != (std::size_t)w.length())
          ++failures;
      if (w.length() > longest->length()) longest = &w;
    }
    // longest element sends all of Phi+ negative
    if ((int)inversion_set(rs, *longest).size() != rs.num_positive()) ++failures;
    // simple reflection inverts exactly its own root
    for (int i = 0; i < rs.rank(); ++i) {
      auto inv = inversion_set(rs, weyl_element(rs, WeylWord{{i}}));
      if (inv.size() != 1 || !(inv[0] == rs.simple_root(i))) ++failures;
    }
  }
  // frozen small examples
  {
    RootSystem a2 = rs_of("A2");
    auto w0 = weyl_element(a2, WeylWord{{0, 1, 0}});
    auto words = all_reduced_words(a2, w0);
    if (!(words.size() == 2 && words[0] == WeylWord{{0, 1, 0}} && words[1] == WeylWord{{1, 0, 1}}))
      ++failures;
    RootSystem b2 = rs_of("B2");
    auto w0b = weyl_element(b2, WeylWord{{0, 1, 0, 1}});
    auto wordsb = all_reduced_words(b2, w0b);
    if (!(wordsb.size() == 2 && wordsb[0] == WeylWord{{0, 1, 0, 1}} &&
          wordsb[1] == WeylWord{{1, 0, 1, 0}}))
      ++failures;
  }
  return make_result("Weyl words and inversion sets (rank <= 3)", failures == 0, failures, "");
}

CheckResult coroot_oracle() {
  int failures = 0;
  for (const auto& name : rank4_types()) {
    RootSystem rs = rs_of(name);
    euclid::Model model(rs.spec());
    for (const Root& a : rs.roots())
      if (rs.coroot_coords(a) != model.coroot_coords(a)) ++failures;
  }
  return make_result("coroot coordinates vs geometric oracle (rank <= 4)", failures == 0,
                     failures, "");
}

CheckResult metaplectic_classification() {
  int failures = 0;
  for (const auto& name : rank4_types()) {
    RootSystem rs = rs_of(name);
    euclid::Model model(rs.spec());
    bool g2 = rs.spec().family == 'G';
    for (const Root& a : rs.roots()) {
      bool want = g2 || model.is_long(rs, a);
      if (rs.is_metaplectic(a) != want) ++failures;
      // independent length-ratio scan agrees with the internal lengths
      if (model.is_long(rs, a) != rs.is_long(a)) ++failures;
    }
  }
  return make_result("metaplectic = long (or G2), vs length-ratio scan", failures == 0,
                     failures, "rank <= 4");
}

// ---------------------------------------------------------------------------
// covered torus and M
// ---------------------------------------------------------------------------

CheckResult torus_associativity(std::uint64_t seed, int random_triples) {
  Rng rng(seed);
  int failures = 0;
  // exhaustive over M for rank <= 3
  for (const auto& name : rank3_types()) {
    RootSystem rs = rs_of(name);
    MGroup m(rs);
    for (std::size_t a = 0; a < m.order(); ++a)
      for (std::size_t b = 0; b < m.order(); ++b)
        for (std::size_t c = 0; c < m.order(); ++c)
          if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) ++failures;
  }
  // randomized rational triples in the full covered torus
  for (const auto& name : {"A2", "B2", "G2", "A3"}) {
    RootSystem rs = rs_of(name);
    auto rand_torus = [&]() {
      TorusElement t = torus_identity(rs);
      for (int i = 0; i < rs.rank(); ++i) t.params[i] = rng.small_rat(4, 3);
      if (rng.next() & 1) t.sign = -1;
      return t;
    };
    for (int k = 0; k < random_triples / 4; ++k) {
      TorusElement x = rand_torus(), y = rand_torus(), z = rand_torus();
      if (!(torus_mul(rs, torus_mul(rs, x, y), z) == torus_mul(rs, x, torus_mul(rs, y, z))))
        ++failures;
    }
  }
  return make_result("torus multiplication associative", failures == 0, failures,
                     "exhaustive over M (rank <= 3) + " + std::to_string(random_triples) +
                         " rational triples");
}

CheckResult torus_homomorphism(std::uint64_t seed, int pairs) {
  Rng rng(seed);
  int failures = 0;
  RootSystem rs = rs_of("B3");
  auto rand_torus = [&]() {
    TorusElement t = torus_identity(rs);
    for (int i = 0; i < rs.rank(); ++i) t.params[i] = rng.small_rat(4, 3);
    if (rng.next() & 1) t.sign = -1;
    return t;
  };
  for (int k = 0; k < pairs; ++k) {
    TorusElement x = rand_torus(), y = rand_torus();
    TorusElement xy = torus_mul(rs, x, y);
    for (int i = 0; i < rs.rank(); ++i)
      if (xy.params[i] != x.params[i] * y.params[i]) ++failures;
    if (xy.sign * xy.sign != 1) ++failures;
    if (!(torus_mul(rs, x, torus_inverse(rs, x)) == torus_identity(rs))) ++failures;
    if (!(torus_mul(rs, torus_inverse(rs, x), x) == torus_identity(rs))) ++failures;
  }
  // A1 inverses from the relations
  RootSystem a1 = rs_of("A1");
  TorusElement hm1 = torus_h(a1, 0, Rat(-1));
  TorusElement inv = torus_inverse(a1, hm1);
  if (!(inv.params[0] == Rat(-1) && inv.sign == -1)) ++failures;
  TorusElement h2 = torus_h(a1, 0, Rat(2));
  if (!(torus_inverse(a1, h2) == torus_h(a1, 0, Rat(1, 2)))) ++failures;
  return make_result("projection to the linear torus", failures == 0, failures,
                     std::to_string(pairs) + " random pairs + inverses");
}

CheckResult torus_central_element() {
  int failures = 0;
  for (const auto& name : rank3_types()) {
    RootSystem rs = rs_of(name);
    TorusElement z = torus_z(rs);
    if (!(torus_mul(rs, z, z) == torus_identity(rs))) ++failures;
    TorusElement x = torus_identity(rs);
    for (int i = 0; i < rs.rank(); ++i) x.params[i] = Rat(i % 2 ? -2 : 3);
    if (!(torus_mul(rs, z, x) == torus_mul(rs, x, z))) ++failures;
  }
  // A1: h(-1) h(-1) = -identity
  RootSystem a1 = rs_of("A1");
  TorusElement sq = torus_mul(a1, torus_h(a1, 0, Rat(-1)), torus_h(a1, 0, Rat(-1)));
  if (!(sq.params[0] == Rat(1) && sq.sign == -1)) ++failures;
  // A2: h_2(-1) h_1(-1) = - h_1(-1) h_2(-1)
  RootSystem a2 = rs_of("A2");
  TorusElement p = torus_mul(a2, torus_h(a2, 1, Rat(-1)), torus_h(a2, 0, Rat(-1)));
  if (!(p.sign == -1 && p.params[0] == Rat(-1) && p.params[1] == Rat(-1))) ++failures;
  return make_result("central element z", failures == 0, failures, "");
}

CheckResult m_structure() {
  int failures = 0;
  for (const auto& name : rank4_types()) {
    RootSystem rs = rs_of(name);
    MGroup m(rs);
    int l = rs.rank();
    if (m.order() != (1ULL << (l + 1))) ++failures;
    if (!m.is_central(m.z()) || !m.is_central(m.identity())) ++failures;
    if (m.mul(m.z(), m.z()) != m.identity()) ++failures;
    std::uint64_t dim = 0;
    try {
      dim = pseudospherical_dim(m);
    } catch (const std::logic_error&) {
      ++failures;
      continue;
    }
    auto chars = genuine_central_characters(m);
    if (chars.size() != m.center_order() / 2) ++failures;
    // sum of squares: (|Z|/2) dim^2 = |M|/2
    if (chars.size() * dim * dim != m.order() / 2) ++failures;
    for (const auto& chi : chars) {
      if (chi.exponent(m.z()) != 2) ++failures;
      // multiplicative on Z(M)
      for (std::size_t a : m.center())
        for (std::size_t b : m.center())
          if ((chi.exponent(a) + chi.exponent(b)) % 4 != chi.exponent(m.mul(a, b)))
            ++failures;
    }
  }
  // frozen structural examples
  {
    MGroup a1(rs_of("A1"));
    if (a1.order() != 4 || a1.center_order() != 4) ++failures; // C4 is abelian
    std::size_t mgen = a1.generator(0);
    if (a1.mul(mgen, mgen) != a1.z()) ++failures;               // m^2 = z
    if (a1.mul(a1.mul(mgen, mgen), a1.mul(mgen, mgen)) != 0) ++failures; // m^4 = 1
    if (pseudospherical_dim(a1) != 1) ++failures;

    MGroup a2(rs_of("A2"));
    if (a2.order() != 8 || a2.is_abelian() || a2.center_order() != 2) ++failures;
    for (int i : {0, 1}) {
      std::size_t g = a2.generator(i);
      if (a2.mul(g, g) != a2.z()) ++failures; // both generators of order 4
    }
    if (pseudospherical_dim(a2) != 2) ++failures;
    if (genuine_central_characters(a2).size() != 1) ++failures;

    MGroup b2(rs_of("B2"));
    if (b2.order() != 8 || !b2.is_abelian()) ++failures;
    if (pseudospherical_dim(b2) != 1) ++failures;
    if (genuine_central_characters(b2).size() != 4) ++failures;
  }
  return make_result("M-group structure (rank <= 4)", failures == 0, failures,
                     "orders, centers, characters, dimension");
}

CheckResult a1_pseudospherical() {
  int failures = 0;
  RootSystem rs = rs_of("A1");
  MGroup m(rs);
  auto chars = genuine_central_characters(m);
  if (chars.size() != 2) ++failures;
  int accepted = 0;
  for (const auto& chi : chars) {
    int e = chi.exponent(m.generator(0));
    if (e != 1 && e != 3) ++failures; // chi(m) in {i, -i}
    if (is_pseudospherical(rs, m, chi)) ++accepted;
  }
  if (accepted != 2) ++failures;
  // B2: a genuine character with chi(m_short) = -1 is not pseudospherical
  RootSystem b2 = rs_of("B2");
  MGroup mb(b2);
  int rejected = 0, ps = 0;
  for (const auto& chi : genuine_central_characters(mb)) {
    bool p = is_pseudospherical(b2, mb, chi);
    if (chi.exponent(mb.generator(1)) == 2 && p) ++failures;
    p ? ++ps : ++rejected;
  }
  if (rejected == 0 || ps == 0) ++failures;
  return make_result("pseudospherical character tests", failures == 0, failures,
                     "A1 accepts both genuine characters; B2 rejects chi(m_short) = -1");
}

// ---------------------------------------------------------------------------
// intertwining factors
// ---------------------------------------------------------------------------

CheckResult action_is_weyl_action(std::uint64_t seed, double tol) {
  Rng rng(seed);
  int failures = 0;
  double worst = 0;
  for (const auto& name : rank3_types()) {
    RootSystem rs = rs_of(name);
    auto elements = weyl_enumerate(rs);
    SpectralParam s = random_param(rng, rs.rank());
    for (const auto& w1 : elements)
      for (const auto& w2 : elements) {
        SpectralParam lhs = act_on_param(rs, weyl_mul(rs, w1, w2), s);
        SpectralParam rhs = act_on_param(rs, w1, act_on_param(rs, w2, s));
        for (int i = 0; i < rs.rank(); ++i) {
          double d = std::abs(lhs.coords[i] - rhs.coords[i]);
          worst = std::max(worst, d);
          if (d > tol) ++failures;
        }
      }
  }
  return make_result("act_on_param is a W-action (rank <= 3)", failures == 0, worst, "");
}

CheckResult action_examples(double tol) {
  int failures = 0;
  // A1: w s = -s
  RootSystem a1 = rs_of("A1");
  SpectralParam s1{{cx(0.7, 0.3)}};
  auto r1 = act_on_param(a1, weyl_element(a1, WeylWord{{0}}), s1);
  if (std::abs(r1.coords[0] + s1.coords[0]) > tol) ++failures;
  // A2, w = s_1: (s1, s2) -> (-s1, s1+s2)
  RootSystem a2 = rs_of("A2");
  SpectralParam s2{{cx(0.4, 0.1), cx(1.3, -0.2)}};
  auto r2 = act_on_param(a2, weyl_element(a2, WeylWord{{0}}), s2);
  if (std::abs(r2.coords[0] + s2.coords[0]) > tol ||
      std::abs(r2.coords[1] - (s2.coords[0] + s2.coords[1])) > tol)
    ++failures;
  // identity
  auto r3 = act_on_param(a2, weyl_identity(a2), s2);
  if (std::abs(r3.coords[0] - s2.coords[0]) + std::abs(r3.coords[1] - s2.coords[1]) > 0)
    ++failures;
  return make_result("spectral action examples", failures == 0, failures, "");
}

CheckResult rho_shift_identity() {
  int failures = 0;
  for (const auto& name : rank3_types()) {
    RootSystem rs = rs_of(name);
    // the weight with lambda(H_i) = 1 is rho: <2rho, alpha_i-vee> = 2
    auto tr = rs.two_rho();
    for (int i = 0; i < rs.rank(); ++i) {
      long long v = 0;
      for (int j = 0; j < rs.rank(); ++j) v += (long long)tr[j] * rs.cartan(j, i);
      if (v != 2) ++failures;
    }
  }
  return make_result("s = (1,...,1) corresponds to rho", failures == 0, failures, "");
}

CheckResult word_independence_rank2(std::uint64_t seed, int s_samples, double rel_tol) {
  Rng rng(seed);
  int failures = 0;
  double worst = 0;
  int words_checked = 0;
  for (const auto& name : {"A2", "B2", "G2"}) {
    RootSystem rs = rs_of(name);
    for (const auto& w : weyl_enumerate(rs)) {
      auto words = all_reduced_words(rs, w);
      for (int k = 0; k < s_samples; ++k) {
        SpectralParam s = random_param(rng, rs.rank());
        CValue first;
        bool have = false;
        for (const auto& word : words) {
          CValue v = c_factor(rs, word, s).value;
          ++words_checked;
          if (!v.is_finite()) {
            ++failures;
            continue;
          }
          if (!have) {
            first = v;
            have = true;
          } else {
            double d = rel_diff(first.value, v.value);
            worst = std::max(worst, d);
            if (d > rel_tol) ++failures;
          }
        }
      }
    }
  }
  return make_result("reduced-word independence of c(w,s)", failures == 0, worst,
                     "A2/B2/G2, all reduced words, " + std::to_string(s_samples) +
                         " generic s each (" + std::to_string(words_checked) + " evals)");
}

CheckResult cocycle_law_rank2(std::uint64_t seed, double rel_tol) {
  Rng rng(seed);
  int failures = 0, checked = 0;
  for (const auto& name : rank2_types()) {
    RootSystem rs = rs_of(name);
    auto elements = weyl_enumerate(rs);
    SpectralParam s = random_param(rng, rs.rank());
    for (const auto& w1 : elements)
      for (const auto& w2 : elements) {
        WeylElement w12 = weyl_mul(rs, w1, w2);
        if (weyl_length(rs, w12) != w1.length() + w2.length()) continue;
        ++checked;
        if (!cocycle_check(rs, w1, w2, s, rel_tol)) ++failures;
      }
  }
  return make_result("cocycle law (rank 2, exhaustive)", failures == 0, failures,
                     std::to_string(checked) + " length-additive pairs");
}

CheckResult cocycle_law_rank3(std::uint64_t seed, int pairs, double rel_tol) {
  Rng rng(seed);
  int failures = 0, checked = 0;
  for (const auto& name : {"A3", "B3"}) {
    RootSystem rs = rs_of(name);
    auto elements = weyl_enumerate(rs);
    int found = 0;
    long long guard = 0;
    while (found < pairs && ++guard < 400LL * pairs) {
      const auto& w1 = elements[rng.uniform_int(0, (int)elements.size() - 1)];
      const auto& w2 = elements[rng.uniform_int(0, (int)elements.size() - 1)];
      WeylElement w12 = weyl_mul(rs, w1, w2);
      if (weyl_length(rs, w12) != w1.length() + w2.length()) continue;
      ++found;
      ++checked;
      SpectralParam s = random_param(rng, rs.rank());
      if (!cocycle_check(rs, w1, w2, s, rel_tol)) ++failures;
    }
    if (found < pairs) ++failures;
  }
  return make_result("cocycle law (A3/B3, random pairs)", failures == 0, failures,
                     std::to_string(checked) + " length-additive pairs");
}

CheckResult delta_w_exhaustive() {
  int failures = 0, checked = 0;
  for (const auto& name : rank3_types()) {
    RootSystem rs = rs_of(name);
    for (const auto& w : weyl_enumerate(rs)) {
      ++checked;
      if (!delta_w_identity(rs, w)) ++failures;
    }
  }
  return make_result("rho - w rho = sum of inversion set (exact)", failures == 0, failures,
                     std::to_string(checked) + " elements over rank <= 3 types");
}

CheckResult a1_reduces_to_rank_one(std::uint64_t seed, double tol) {
  Rng rng(seed);
  int failures = 0;
  double worst = 0;
  RootSystem rs = rs_of("A1");
  for (int k = 0; k < 50; ++k) {
    SpectralParam s = random_param(rng, 1);
    CValue via_factor = c_factor(rs, WeylWord{{0}}, s).value;
    CValue direct = c_n_over_2(1, s.coords[0]);
    if (!via_factor.is_finite() || !direct.is_finite()) {
      ++failures;
      continue;
    }
    double d = rel_diff(via_factor.value, direct.value);
    worst = std::max(worst, d);
    if (d > tol) ++failures;
  }
  return make_result("A1 factor equals c_{1/2}(s_1)", failures == 0, worst, "");
}

CheckResult normalized_factor_diagnostics() {
  int failures = 0;
  RootSystem a2 = rs_of("A2");
  SpectralParam generic{{cx(0.8, 0.2), cx(1.1, 0.4)}};
  CValue v = normalized_factor(a2, WeylWord{{0, 1}}, generic);
  if (!v.is_finite() || std::abs(v.value - 1.0) != 0.0) ++failures;
  bool threw = false;
  try {
    normalized_factor(a2, WeylWord{{0}}, SpectralParam{{cx(0, 0), cx(1, 0)}});
  } catch (const std::domain_error&) {
    threw = true; // pole: c_half(0)
  }
  if (!threw) ++failures;
  threw = false;
  try {
    normalized_factor(a2, WeylWord{{0}}, SpectralParam{{cx(-0.5, 0), cx(1, 0)}});
  } catch (const std::domain_error&) {
    threw = true; // zero: c_half(-1/2) = 0
  }
  if (!threw) ++failures;
  return make_result("normalized factor diagnostics", failures == 0, failures, "");
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

std::vector<std::string> suite_names() {
  return {"rootsys", "torus", "kubota", "cfun", "intertwine", "all"};
}

std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed) {
  std::vector<CheckResult> out;
  auto add = [&out](CheckResult r) { out.push_back(std::move(r)); };
  if (name == "rootsys" || name == "all") {
    add(rootsys_structure());
    add(rootsys_words());
    add(coroot_oracle());
    add(metaplectic_classification());
  }
  if (name == "torus" || name == "all") {
    add(torus_associativity(seed, 10000));
    add(torus_homomorphism(seed + 1, 500));
    add(torus_central_element());
    add(m_structure());
    add(a1_pseudospherical());
  }
  if (name == "kubota" || name == "all") {
    add(kubota_cocycle_identity(seed, 10000));
    add(kubota_mul_associative(seed + 2, 10000));
    add(cover_h_relation(seed + 3, 1000));
    add(rotation_homomorphism_grid());
    add(steinberg_relations(seed + 4, 200));
    add(iwasawa_recomposition(seed + 5, 500, 1e-12));
  }
  if (name == "cfun" || name == "all") {
    add(log_gamma_spots());
    add(gamma_duplication(seed + 6, 500, 1e-11));
    add(cfun_spot_values(1e-10));
    add(cfun_symmetry(seed + 7, 1000, 1e-12));
    add(cfun_conjugation(seed + 8, 500, 1e-12));
    add(cfun_positivity_unitary_axis(100, 1e-10));
    add(cfun_vs_quadrature(1e-8));
    add(cfun_vs_group_integral(1e-6));
    add(cfun_pole_detection());
  }
  if (name == "intertwine" || name == "all") {
    add(action_is_weyl_action(seed + 9, 1e-12));
    add(action_examples(1e-14));
    add(rho_shift_identity());
    add(word_independence_rank2(seed + 10, 5, 1e-10));
    add(cocycle_law_rank2(seed + 11, 1e-10));
    add(cocycle_law_rank3(seed + 12, 1000, 1e-10));
    add(delta_w_exhaustive());
    add(a1_reduces_to_rank_one(seed + 13, 1e-12));
    add(normalized_factor_diagnostics());
  }
  if (out.empty()) throw std::invalid_argument("unknown verification suite: " + name);
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

} // namespace mtp::verify
