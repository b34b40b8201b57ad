// Test-only oracles, independent of the library's main computation paths.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "mtp/euclid.hpp"
#include "mtp/rational.hpp"
#include "mtp/rootsys.hpp"
#include "mtp/torus.hpp"

namespace oracles {

/// Count the roots of a type by closing the Euclidean simple roots under
/// the geometric reflections s_a(b) = b - 2(b,a)/(a,a) a. Never touches
/// the Cartan-matrix path.
inline int euclid_root_count(const mtp::RootSystemSpec& spec) {
  mtp::euclid::Model model(spec);
  using Vec = std::vector<mtp::Rat>;
  std::vector<Vec> simples;
  for (int i = 0; i < spec.rank; ++i)
    simples.push_back(model.embed(mtp::Root{[&] {
      std::vector<int> e(spec.rank, 0);
      e[i] = 1;
      return e;
    }()}));
  auto key = [](const Vec& v) {
    std::vector<std::pair<long long, long long>> k;
    for (const auto& r : v) k.emplace_back(r.num(), r.den());
    return k;
  };
  std::set<decltype(key(simples[0]))> seen;
  std::vector<Vec> queue = simples;
  for (const auto& s : simples) seen.insert(key(s));
  while (!queue.empty()) {
    Vec v = queue.back();
    queue.pop_back();
    for (const auto& a : simples) {
      mtp::Rat num = model.inner(v, a) * mtp::Rat(2);
      mtp::Rat den = model.inner(a, a);
      mtp::Rat coef = num / den;
      Vec w = v;
      for (std::size_t k = 0; k < w.size(); ++k) w[k] -= coef * a[k];
      if (seen.insert(key(w)).second) queue.push_back(w);
    }
  }
  return (int)seen.size();
}

/// Normal-form oracle for the covered torus: a product word of (index,
/// parameter) letters is sorted by adjacent transpositions using ONLY the
/// generator relations, one at a time. `leftmost` picks which reducible
/// pair is rewritten first, so two strategies can be compared
/// (confluence check).
struct TorusWord {
  std::vector<std::pair<int, mtp::Rat>> letters;
  int sign = 1;
};

inline mtp::TorusElement rewrite_to_normal_form(const mtp::RootSystem& rs, TorusWord w,
                                                bool leftmost) {
  auto reducible = [](const TorusWord& tw) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k + 1 < tw.letters.size(); ++k)
      if (tw.letters[k].first >= tw.letters[k + 1].first) out.push_back(k);
    return out;
  };
  for (auto hits = reducible(w); !hits.empty(); hits = reducible(w)) {
    std::size_t k = leftmost ? hits.front() : hits.back();
    auto [i, t] = w.letters[k];
    auto [j, u] = w.letters[k + 1];
    if (i == j) {
      // h_i(t) h_i(u) = (t,u)^{se(i)} h_i(tu)
      if (mtp::hilbert(t, u) < 0 && (mtp::square_exponent(rs, i) & 1)) w.sign = -w.sign;
      w.letters[k] = {i, t * u};
      w.letters.erase(w.letters.begin() + k + 1);
    } else {
      // h_i(t) h_j(u) = (t,u)^{ce(i,j)} h_j(u) h_i(t)
      if (mtp::hilbert(t, u) < 0 && (mtp::comm_exponent(rs, i, j) & 1)) w.sign = -w.sign;
      std::swap(w.letters[k], w.letters[k + 1]);
    }
  }
  mtp::TorusElement e = mtp::torus_identity(rs);
  e.sign = w.sign;
  for (auto& [i, t] : w.letters) e.params[i] = e.params[i] * t;
  return e;
}

/// Both strategies must agree (confluence), then the result is the oracle.
inline mtp::TorusElement torus_word_oracle(const mtp::RootSystem& rs, const TorusWord& w) {
  mtp::TorusElement a = rewrite_to_normal_form(rs, w, true);
  mtp::TorusElement b = rewrite_to_normal_form(rs, w, false);
  if (!(a == b)) throw std::logic_error("torus rewriting is not confluent");
  return a;
}

inline TorusWord word_of(const mtp::TorusElement& x) {
  TorusWord w;
  w.sign = x.sign;
  for (std::size_t i = 0; i < x.params.size(); ++i)
    if (!(x.params[i] == mtp::Rat(1))) w.letters.emplace_back((int)i, x.params[i]);
  return w;
}

inline TorusWord concat(const TorusWord& a, const TorusWord& b) {
  TorusWord w = a;
  w.sign *= b.sign;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

} // namespace oracles
