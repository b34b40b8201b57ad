#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "mtp/euclid.hpp"
#include "mtp/rootsys.hpp"
#include "oracles.hpp"

using namespace mtp;

namespace {
RootSystem make(const char* name) { return RootSystem(RootSystemSpec::parse(name)); }
} // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(Rat(7).inverse() == Rat(1, 7));
  CHECK(Rat(-2, 3).sign() == -1);
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rat(0).inverse(), std::domain_error);
  CHECK(Rat(1, 3) < Rat(1, 2));
}

TEST_CASE("root system construction and counts") {
  CHECK(make("A2").roots().size() == 6);
  CHECK(make("A2").num_positive() == 3);
  CHECK(make("B2").roots().size() == 8);
  CHECK(make("G2").roots().size() == 12);
  CHECK(make("A1").roots().size() == 2);
  CHECK(make("F4").roots().size() == 48);
  CHECK(make("D4").roots().size() == 24);
  CHECK(make("E6").roots().size() == 72);

  // A1 is exactly {alpha, -alpha}
  RootSystem a1 = make("A1");
  CHECK(a1.roots()[0].coords == std::vector<int>{1});
  CHECK(a1.roots()[1].coords == std::vector<int>{-1});

  SUBCASE("counts agree with the independent Euclidean closure") {
    for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "F4", "G2"}) {
      RootSystem rs = make(t);
      CHECK((int)rs.roots().size() == oracles::euclid_root_count(rs.spec()));
    }
  }

  SUBCASE("invalid specs are rejected") {
    CHECK_THROWS_AS(RootSystemSpec::parse("Z9"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemSpec::parse("E9"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemSpec::parse("B1"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemSpec::parse("D2"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemSpec::parse("F3"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemSpec::parse("A0"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemSpec::parse("A"), std::invalid_argument);
  }
}

TEST_CASE("cartan integers") {
  RootSystem a2 = make("A2");
  for (const Root& r : a2.roots()) CHECK(a2.cartan_int(r, r) == 2);
  CHECK(a2.cartan_int(a2.simple_root(0), a2.simple_root(1)) == -1);

  RootSystem g2 = make("G2");
  int c01 = g2.cartan_int(g2.simple_root(0), g2.simple_root(1));
  int c10 = g2.cartan_int(g2.simple_root(1), g2.simple_root(0));
  CHECK(std::set<int>{c01, c10} == std::set<int>{-1, -3});

  CHECK_THROWS_AS(a2.cartan_int(Root{{2, 0}}, a2.simple_root(0)), std::invalid_argument);
}

TEST_CASE("n_phi by length-ratio scan") {
  CHECK(make("A3").n_phi() == 1);
  CHECK(make("B2").n_phi() == 2);
  CHECK(make("G2").n_phi() == 3);
  // scan squared lengths in the independent geometric model
  for (const char* t : {"A3", "B2", "G2", "F4"}) {
    RootSystem rs = make(t);
    euclid::Model model(rs.spec());
    Rat mx(0), mn(1000000);
    for (const Root& r : rs.roots()) {
      Rat ls = model.length_sq(r);
      if (mx < ls) mx = ls;
      if (ls < mn) mn = ls;
    }
    CHECK(mx / mn == Rat(rs.n_phi()));
  }
}

TEST_CASE("metaplectic classification") {
  RootSystem a2 = make("A2");
  for (const Root& r : a2.roots()) CHECK(a2.is_metaplectic(r));
  RootSystem b2 = make("B2");
  CHECK_FALSE(b2.is_metaplectic(b2.simple_root(1))); // short simple
  CHECK(b2.is_metaplectic(b2.simple_root(0)));       // long simple
  RootSystem g2 = make("G2");
  CHECK(g2.is_metaplectic(g2.simple_root(0))); // short, but G2
}

TEST_CASE("weyl_act on rational vectors") {
  RootSystem a2 = make("A2");
  std::vector<Rat> v{Rat(2, 3), Rat(-1, 2)};
  CHECK(a2.weyl_act(WeylWord{}, v) == v);

  // s_alpha(alpha) = -alpha
  std::vector<Rat> a{Rat(1), Rat(0)};
  CHECK(a2.weyl_act(WeylWord{{0}}, a) == std::vector<Rat>{Rat(-1), Rat(0)});

  // A2: s_1 s_2 (alpha_1) = alpha_2, applying the rightmost letter first
  CHECK(a2.weyl_act(WeylWord{{0, 1}}, a) == std::vector<Rat>{Rat(0), Rat(1)});
}

TEST_CASE("coroot coordinates") {
  RootSystem a2 = make("A2");
  CHECK(a2.coroot_coords(a2.simple_root(0)) == std::vector<int>{1, 0});
  CHECK(a2.coroot_coords(a2.simple_root(1)) == std::vector<int>{0, 1});
  CHECK(a2.coroot_coords(Root{{1, 1}}) == std::vector<int>{1, 1});

  // B2 long root alpha_long + 2 alpha_short (0-based: alpha_0 long)
  RootSystem b2 = make("B2");
  CHECK(b2.coroot_coords(Root{{1, 2}}) == std::vector<int>{1, 1});

  SUBCASE("agrees with the geometric oracle for every root, rank <= 4") {
    for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
                          "D3", "D4", "F4", "G2"}) {
      RootSystem rs = make(t);
      euclid::Model model(rs.spec());
      for (const Root& r : rs.roots()) CHECK(rs.coroot_coords(r) == model.coroot_coords(r));
    }
  }
}

TEST_CASE("inversion sets") {
  RootSystem b2 = make("B2");
  CHECK(inversion_set(b2, weyl_identity(b2)).empty());
  auto s0 = weyl_element(b2, WeylWord{{0}});
  auto inv = inversion_set(b2, s0);
  REQUIRE(inv.size() == 1);
  CHECK(inv[0] == b2.simple_root(0));
  auto w0 = weyl_element(b2, WeylWord{{0, 1, 0, 1}});
  CHECK((int)inversion_set(b2, w0).size() == b2.num_positive());
}

TEST_CASE("weyl enumeration") {
  CHECK(weyl_enumerate(make("A2")).size() == 6);
  CHECK(weyl_enumerate(make("B2")).size() == 8);
  CHECK(weyl_enumerate(make("G2")).size() == 12);
  CHECK(weyl_enumerate(make("A3")).size() == 24);
  CHECK_THROWS_AS(weyl_enumerate(make("E7")), std::runtime_error); // over the bound

  // canonical words are reduced and lexicographically least
  for (const auto& w : weyl_enumerate(make("B2"))) {
    CHECK(weyl_length(make("B2"), w) == w.length());
    auto words = all_reduced_words(make("B2"), w);
    CHECK(words.front() == w.canonical_word);
  }
}

TEST_CASE("all reduced words") {
  RootSystem a2 = make("A2");
  CHECK(all_reduced_words(a2, weyl_identity(a2)) == std::vector<WeylWord>{WeylWord{}});
  auto w0_a2 = weyl_element(a2, WeylWord{{0, 1, 0}});
  auto words = all_reduced_words(a2, w0_a2);
  REQUIRE(words.size() == 2);
  CHECK(words[0] == WeylWord{{0, 1, 0}});
  CHECK(words[1] == WeylWord{{1, 0, 1}});

  RootSystem b2 = make("B2");
  auto wordsb = all_reduced_words(b2, weyl_element(b2, WeylWord{{0, 1, 0, 1}}));
  REQUIRE(wordsb.size() == 2);
  CHECK(wordsb[0] == WeylWord{{0, 1, 0, 1}});
  CHECK(wordsb[1] == WeylWord{{1, 0, 1, 0}});

  // every reduced word of every element reproduces the same matrix
  for (const char* t : {"A3", "B3", "G2"}) {
    RootSystem rs = make(t);
    for (const auto& w : weyl_enumerate(rs))
      for (const auto& word : all_reduced_words(rs, w))
        CHECK(weyl_element(rs, word).matrix == w.matrix);
  }

  // the F4 longest element exceeds the default length bound
  RootSystem f4 = make("F4");
  auto elements = weyl_enumerate(f4);
  const WeylElement& longest = elements.back();
  CHECK(longest.length() == 24);
  CHECK_THROWS_AS(all_reduced_words(f4, longest), std::runtime_error);
}

TEST_CASE("word letters are range-checked") {
  RootSystem a2 = make("A2");
  CHECK_THROWS_AS(weyl_element(a2, WeylWord{{2}}), std::invalid_argument);
  CHECK_THROWS_AS(weyl_element(a2, WeylWord{{-1}}), std::invalid_argument);
}
