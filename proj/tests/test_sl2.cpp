#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mtp/sl2.hpp"
#include "mtp/verify.hpp"

using namespace mtp;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

bool covq_eq(const CoverQ& a, const CoverQ& b) { return a.sign == b.sign && a.mat == b.mat; }

double mat_dist(const Mat2D& a, const Mat2D& b) {
  return std::max({std::fabs(a.a - b.a), std::fabs(a.b - b.b), std::fabs(a.c - b.c),
                   std::fabs(a.d - b.d)});
}
} // namespace

TEST_CASE("x_entry") {
  CHECK(x_entry(Mat2Q::identity()) == Rat(1));           // c = 0 -> d
  CHECK(x_entry(gen_w(Rat(1)).mat) == Rat(-1));          // w_(1): c = -1
  CHECK(x_entry(gen_x(Rat(5)).mat) == Rat(1));           // upper unipotent: d = 1
  CHECK(x_entry(gen_h(Rat(-2)).mat) == Rat(-1, 2));      // diagonal: d
  CHECK(x_entry(Mat2D{1, 0, 1e-15, 1}) == 1.0);          // double path snaps tiny c
  CHECK(x_entry(Mat2D{1, 0, 1e-6, 1}) == 1e-6);
}

TEST_CASE("kubota cocycle values") {
  // c(I, g) = c(g, I) = 1
  verify::Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    Mat2Q g = mul(gen_x(rng.small_rat()), gen_y(rng.small_rat())).mat;
    CHECK(kubota(Mat2Q::identity(), g) == 1);
    CHECK(kubota(g, Mat2Q::identity()) == 1);
  }
  CHECK(kubota(gen_h(Rat(-1)).mat, gen_h(Rat(-1)).mat) == -1);
  CHECK(kubota(gen_w(Rat(1)).mat, gen_w(Rat(1)).mat) == 1);
}

TEST_CASE("cover multiplication") {
  // h(-1) h(-1) = (I, -1)
  CoverQ p = mul(gen_h(Rat(-1)), gen_h(Rat(-1)));
  CHECK(p.mat == Mat2Q::identity());
  CHECK(p.sign == -1);

  CoverQ g = mul(gen_y(Rat(2)), gen_x(Rat(-1, 3)));
  CHECK(covq_eq(mul(CoverQ{}, g), g));
  CHECK(covq_eq(mul(g, CoverQ{}), g));
  CHECK(covq_eq(mul(g, inverse(g)), CoverQ{}));

  // w(1) w(-1) = h(1) = identity with + sign
  CoverQ q = mul(gen_w(Rat(1)), gen_w(Rat(-1)));
  CHECK(q.mat == Mat2Q::identity());
  CHECK(q.sign == 1);
}

TEST_CASE("Steinberg generator lifts") {
  CoverQ h = gen_h(Rat(-1));
  CHECK(h.mat == Mat2Q{Rat(-1), Rat(0), Rat(0), Rat(-1)});
  CHECK(h.sign == -1);
  CHECK(covq_eq(gen_x(Rat(0)), CoverQ{}));
  for (Rat t : {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(1, 3)}) {
    CoverQ rhs = mul(mul(gen_x(t), gen_y(-t.inverse())), gen_x(t));
    CHECK(covq_eq(gen_w(t), rhs));
  }
  CHECK_THROWS_AS(gen_w(Rat(0)), std::domain_error);
  CHECK_THROWS_AS(gen_h(Rat(0)), std::domain_error);
}

TEST_CASE("eps") {
  CHECK(eps(0) == 1);
  CHECK(eps(kPi / 2) == -1);
  CHECK(eps(kPi) == -1);
  CHECK(eps(3 * kPi / 2) == 1);
  CHECK(eps(kPi / 6) == 1); // both sines positive
  CHECK(eps(kPi / 6 + 2 * kPi) == eps(kPi / 6));
  CHECK(eps(-kPi / 2) == eps(3 * kPi / 2));
  // sgn(sin sin2) on a generic angle in (pi/2, pi)
  CHECK(eps(2.0) == -1);
}

TEST_CASE("lifted rotation subgroup") {
  CHECK(exp_rotation(0.0).sign == 1);
  CHECK(mat_dist(exp_rotation(0.0).mat, Mat2D::identity()) == 0.0);

  // e(pi) = m_alpha = gen_h(-1)
  CoverD epi = exp_rotation(kPi);
  CoverD hm1 = gen_h(-1.0);
  CHECK(epi.sign == hm1.sign);
  CHECK(mat_dist(epi.mat, hm1.mat) == 0.0);

  // e(2 pi) is the nontrivial central element
  CoverD e2 = exp_rotation(2 * kPi);
  CHECK(e2.sign == -1);
  CHECK(mat_dist(e2.mat, Mat2D::identity()) == 0.0);

  // homomorphism on a few grid points
  for (int k1 : {1, 5, 11, 13, 23})
    for (int k2 : {2, 7, 12, 19}) {
      CoverD ab = mul(exp_rotation(k1 * kPi / 12), exp_rotation(k2 * kPi / 12));
      CoverD c = exp_rotation((k1 + k2) * kPi / 12);
      CHECK(ab.sign == c.sign);
      CHECK(mat_dist(ab.mat, c.mat) < 1e-12);
    }
}

TEST_CASE("sigma characters") {
  CHECK(std::abs(sigma_char(1, exp_rotation(kPi)) - std::complex<double>(0, 1)) < 1e-15);
  CHECK(std::abs(sigma_char(4, CoverD{}) - 1.0) < 1e-15);
  for (int n : {0, 1, 2, 3, -1}) {
    double want = (n % 2 == 0) ? 1.0 : -1.0;
    CHECK(std::abs(sigma_char(n, CoverD{Mat2D::identity(), -1}) - want) < 1e-15);
  }
  CHECK_THROWS_AS(sigma_char(1, gen_x(2.0)), std::invalid_argument);
}

TEST_CASE("iwasawa decomposition") {
  SUBCASE("identity") {
    IwasawaData iw = iwasawa(CoverD{});
    CHECK(iw.n_param == 0.0);
    CHECK(iw.a_param == 1.0);
    CHECK(iw.k.sign == 1);
  }
  SUBCASE("lower unipotent y(1)") {
    IwasawaData iw = iwasawa(gen_y(1.0));
    CHECK(iw.a_param == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(std::atan2(iw.k.mat.c, iw.k.mat.a) == doctest::Approx(kPi / 4).epsilon(1e-14));
    CHECK(iw.k.sign == 1);
  }
  SUBCASE("gen_h(-1) has k = (r_pi, -1)") {
    IwasawaData iw = iwasawa(gen_h(-1.0));
    CHECK(iw.n_param == 0.0);
    CHECK(iw.a_param == 1.0);
    CHECK(iw.k.sign == -1);
    CHECK(mat_dist(iw.k.mat, Mat2D{-1, 0, 0, -1}) == 0.0);
  }
  SUBCASE("recomposition on random elements") {
    verify::Rng rng(17);
    for (int k = 0; k < 200; ++k) {
      CoverD g{Mat2D::identity(), rng.next() & 1 ? 1 : -1};
      int len = rng.uniform_int(0, 8);
      for (int j = 0; j < len; ++j) {
        double t = rng.uniform(-3, 3);
        g = rng.next() & 1 ? mul(g, gen_x(t)) : mul(g, gen_y(t));
      }
      IwasawaData iw = iwasawa(g);
      CoverD re = mul(gen_x(iw.n_param), mul(gen_h(iw.a_param), iw.k));
      double scale = std::max({1.0, std::fabs(g.mat.a), std::fabs(g.mat.b),
                               std::fabs(g.mat.c), std::fabs(g.mat.d)});
      CHECK(mat_dist(re.mat, g.mat) / scale < 1e-12);
      CHECK(re.sign == g.sign);
    }
  }
}

TEST_CASE("cocycle identity (spot; the acceptance suite runs 10^4)") {
  auto r = verify::kubota_cocycle_identity(verify::kDefaultSeed, 500);
  CHECK(r.pass);
  auto r2 = verify::kubota_mul_associative(verify::kDefaultSeed, 500);
  CHECK(r2.pass);
}

TEST_CASE("relation (B') in the cover") {
  verify::Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    Rat t = rng.small_rat(3, 3), u = rng.small_rat(3, 3);
    CoverQ lhs = mul(mul(gen_w(t), gen_x(u)), gen_w(-t));
    CoverQ rhs = gen_y(-u / (t * t));
    CHECK(covq_eq(lhs, rhs));
  }
}
