#include "mtp/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace mtp {

RootSystemSpec RootSystemSpec::parse(const std::string& name) {
  if (name.size() < 2)
    throw std::invalid_argument("root system name too short: '" + name + "'");
  char fam = (char)std::toupper((unsigned char)name[0]);
  for (std::size_t k = 1; k < name.size(); ++k)
    if (!std::isdigit((unsigned char)name[k]))
      throw std::invalid_argument("bad root system name: '" + name + "'");
  RootSystemSpec spec{fam, std::stoi(name.substr(1))};
  spec.validate();
  return spec;
}

void RootSystemSpec::validate() const {
  bool ok = false;
  switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok)
    throw std::invalid_argument("invalid family/rank combination: " + name());
}

namespace {

int classified_root_count(const RootSystemSpec& s) {
  int l = s.rank;
  switch (s.family) {
    case 'A': return l * (l + 1);
    case 'B':
    case 'C': return 2 * l * l;
    case 'D': return 2 * l * (l - 1);
    case 'E': return l == 6 ? 72 : (l == 7 ? 126 : 240);
    case 'F': return 48;
    case 'G': return 12;
  }
  return 0;
}

} // namespace

std::uint64_t weyl_order(const RootSystemSpec& spec) {
  unsigned __int128 v = 1;
  auto fact = [](int n) {
    unsigned __int128 f = 1;
    for (int k = 2; k <= n; ++k) f *= (unsigned)k;
    return f;
  };
  int l = spec.rank;
  switch (spec.family) {
    case 'A': v = fact(l + 1); break;
    case 'B':
    case 'C': v = fact(l) << l; break;
    case 'D': v = fact(l) << (l - 1); break;
    case 'E': v = l == 6 ? 51840ULL : (l == 7 ? 2903040ULL : 696729600ULL); break;
    case 'F': v = 1152ULL; break;
    case 'G': v = 12ULL; break;
  }
  if (v > UINT64_MAX) throw std::overflow_error("weyl_order: exceeds 64 bits");
  return (std::uint64_t)v;
}

RootSystem::RootSystem(RootSystemSpec spec) : spec_(spec) {
  spec_.validate();
  build_cartan();
  generate_roots();
}

void RootSystem::build_cartan() {
  int l = spec_.rank;
  cartan_.assign((std::size_t)l * l, 0);
  dsym_.assign(l, 1);
  auto C = [&](int i, int j) -> int& { return cartan_[i * l + j]; };
  for (int i = 0; i < l; ++i) C(i, i) = 2;

  auto chain = [&](int a, int b) { C(a, b) = -1; C(b, a) = -1; };

  switch (spec_.family) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      n_phi_ = 1;
      break;
    case 'B': // alpha_{l-1} short, the rest long
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      C(l - 2, l - 1) = -2;
      n_phi_ = 2;
      for (int i = 0; i < l - 1; ++i) dsym_[i] = 2;
      break;
    case 'C': // alpha_{l-1} long, the rest short
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      C(l - 1, l - 2) = -2;
      n_phi_ = 2;
      dsym_[l - 1] = 2;
      break;
    case 'D':
      for (int i = 0; i + 2 < l; ++i) chain(i, i + 1);
      chain(l - 3, l - 1);
      n_phi_ = 1;
      break;
    case 'E': // Bourbaki numbering: node 2 hangs off node 4
      chain(0, 2);
      chain(1, 3);
      for (int i = 2; i + 1 < l; ++i) chain(i, i + 1);
      n_phi_ = 1;
      break;
    case 'F': // alpha_1, alpha_2 long; alpha_3, alpha_4 short (1-based)
      chain(0, 1);
      chain(2, 3);
      C(1, 2) = -2;
      C(2, 1) = -1;
      n_phi_ = 2;
      dsym_[0] = dsym_[1] = 2;
      break;
    case 'G': // alpha_1 short, alpha_2 long (1-based)
      C(0, 1) = -1;
      C(1, 0) = -3;
      n_phi_ = 3;
      dsym_[1] = 3;
      break;
  }

  // (alpha_i, alpha_j) = d_j <alpha_i, alpha_j> must be symmetric
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (dsym_[j] * C(i, j) != dsym_[i] * C(j, i))
        throw std::logic_error("asymmetric length data for " + spec_.name());
}

long long RootSystem::pair_with_simple(const std::vector<int>& v, int i) const {
  long long s = 0;
  for (int j = 0; j < spec_.rank; ++j) s += (long long)v[j] * cartan(j, i);
  return s;
}

std::vector<int> RootSystem::reflect(int i, std::vector<int> v) const {
  long long p = pair_with_simple(v, i);
  v[i] -= (int)p;
  return v;
}

long long RootSystem::bilinear(const std::vector<int>& a, const std::vector<int>& b) const {
  long long s = 0;
  for (int i = 0; i < spec_.rank; ++i)
    for (int j = 0; j < spec_.rank; ++j)
      s += (long long)a[i] * b[j] * dsym_[j] * cartan(i, j);
  return s;
}

void RootSystem::generate_roots() {
  int l = spec_.rank;
  std::map<std::vector<int>, int> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    seen.emplace(e, 0);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (int i = 0; i < l; ++i) {
      auto w = reflect(i, v);
      if (seen.emplace(w, 0).second) queue.push_back(w);
    }
  }

  std::vector<Root> pos, neg;
  for (const auto& [coords, unused] : seen) {
    (void)unused;
    bool all_nonneg = std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
    bool all_nonpos = std::all_of(coords.begin(), coords.end(), [](int c) { return c <= 0; });
    if (!(all_nonneg || all_nonpos))
      throw std::logic_error("mixed-sign root generated for " + spec_.name());
    (all_nonneg ? pos : neg).push_back(Root{coords});
  }
  auto by_height = [](const Root& a, const Root& b) {
    int ha = std::accumulate(a.coords.begin(), a.coords.end(), 0);
    int hb = std::accumulate(b.coords.begin(), b.coords.end(), 0);
    return ha != hb ? ha < hb : a.coords < b.coords;
  };
  std::sort(pos.begin(), pos.end(), by_height);
  roots_ = pos;
  for (const Root& r : pos) {
    std::vector<int> m(r.coords);
    for (int& c : m) c = -c;
    roots_.push_back(Root{m});
  }

  if ((int)roots_.size() != classified_root_count(spec_))
    throw std::logic_error("root count mismatch for " + spec_.name());
  for (std::size_t k = 0; k < roots_.size(); ++k) root_index_.emplace(roots_[k].coords, (int)k);
}

Root RootSystem::simple_root(int i) const {
  std::vector<int> e(spec_.rank, 0);
  e.at(i) = 1;
  return Root{e};
}

bool RootSystem::is_root(const Root& a) const {
  return (int)a.coords.size() == spec_.rank && root_index_.count(a.coords) > 0;
}

int RootSystem::cartan_int(const Root& a, const Root& b) const {
  if (!is_root(a) || !is_root(b))
    throw std::invalid_argument("cartan_int: argument is not a root");
  long long num = 2 * bilinear(a.coords, b.coords);
  long long den = bilinear(b.coords, b.coords);
  if (num % den != 0) throw std::logic_error("cartan_int: non-integer value");
  return (int)(num / den);
}

long long RootSystem::lengthsq(const Root& a) const {
  if (!is_root(a)) throw std::invalid_argument("lengthsq: argument is not a root");
  return bilinear(a.coords, a.coords);
}

bool RootSystem::is_metaplectic(const Root& a) const {
  if (!is_root(a)) throw std::invalid_argument("is_metaplectic: argument is not a root");
  return spec_.family == 'G' || is_long(a);
}

std::vector<int> RootSystem::coroot_coords(const Root& a) const {
  if (!is_root(a)) throw std::invalid_argument("coroot_coords: argument is not a root");
  int l = spec_.rank;
  if (!a.is_positive()) {
    std::vector<int> m(a.coords);
    for (int& c : m) c = -c;
    auto cr = coroot_coords(Root{m});
    for (int& c : cr) c = -c;
    return cr;
  }
  // simple root: standard basis vector
  int height = std::accumulate(a.coords.begin(), a.coords.end(), 0);
  if (height == 1) {
    std::vector<int> e(l, 0);
    for (int i = 0; i < l; ++i)
      if (a.coords[i] == 1) e[i] = 1;
    return e;
  }
  // peel one reflection: a = s_j(b) with b positive of smaller height
  for (int j = 0; j < l; ++j) {
    if (pair_with_simple(a.coords, j) > 0) {
      Root b{reflect(j, a.coords)};
      auto c = coroot_coords(b);
      // dual reflection: c_j -= sum_i <alpha_j, alpha_i> c_i
      long long s = 0;
      for (int i = 0; i < l; ++i) s += (long long)cartan(j, i) * c[i];
      c[j] -= (int)s;
      return c;
    }
  }
  throw std::logic_error("coroot_coords: no descent found");
}

std::vector<Rat> RootSystem::weyl_act(const WeylWord& w, std::vector<Rat> v) const {
  if ((int)v.size() != spec_.rank)
    throw std::invalid_argument("weyl_act: vector length != rank");
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    int i = *it;
    Rat p;
    for (int j = 0; j < spec_.rank; ++j) p += v[j] * Rat(cartan(j, i));
    v[i] -= p;
  }
  return v;
}

std::vector<int> RootSystem::two_rho() const {
  std::vector<int> r(spec_.rank, 0);
  for (int k = 0; k < num_positive(); ++k)
    for (int i = 0; i < spec_.rank; ++i) r[i] += roots_[k].coords[i];
  return r;
}

RootSystem build_root_system(RootSystemSpec spec) { return RootSystem(spec); }

// ---------------------------------------------------------------------------
// Weyl elements
// ---------------------------------------------------------------------------

namespace {

std::vector<int> identity_matrix(int l) {
  std::vector<int> m((std::size_t)l * l, 0);
  for (int i = 0; i < l; ++i) m[i * l + i] = 1;
  return m;
}

std::vector<int> apply_matrix(const std::vector<int>& m, const std::vector<int>& v, int l) {
  std::vector<int> r(l, 0);
  for (int i = 0; i < l; ++i) {
    long long s = 0;
    for (int j = 0; j < l; ++j) s += (long long)m[i * l + j] * v[j];
    r[i] = (int)s;
  }
  return r;
}

std::vector<int> mat_mul(const std::vector<int>& a, const std::vector<int>& b, int l) {
  std::vector<int> r((std::size_t)l * l, 0);
  for (int i = 0; i < l; ++i)
    for (int k = 0; k < l; ++k) {
      long long aik = a[i * l + k];
      if (aik == 0) continue;
      for (int j = 0; j < l; ++j) r[i * l + j] += (int)(aik * b[k * l + j]);
    }
  return r;
}

// matrix of s_i: row i of the identity replaced using cartan data
std::vector<int> reflection_matrix(const RootSystem& rs, int i) {
  int l = rs.rank();
  auto m = identity_matrix(l);
  for (int j = 0; j < l; ++j) m[i * l + j] -= rs.cartan(j, i);
  return m;
}

bool negative_coords(const std::vector<int>& v) {
  for (int c : v)
    if (c > 0) return false;
  for (int c : v)
    if (c < 0) return true;
  return false;
}

// left descent test: (s_i w shorter than w) iff w^-1(alpha_i) < 0,
// i.e. column i of w^-1 is negative; we carry w^-1 explicitly.
std::vector<int> matrix_column(const std::vector<int>& m, int j, int l) {
  std::vector<int> c(l);
  for (int i = 0; i < l; ++i) c[i] = m[i * l + j];
  return c;
}

WeylWord canonical_word_of(const RootSystem& rs, std::vector<int> w, std::vector<int> winv) {
  int l = rs.rank();
  WeylWord word;
  auto id = identity_matrix(l);
  while (w != id) {
    int desc = -1;
    for (int i = 0; i < l; ++i) {
      if (negative_coords(matrix_column(winv, i, l))) {
        desc = i;
        break;
      }
    }
    if (desc < 0) throw std::logic_error("canonical_word_of: no descent");
    word.letters.push_back(desc);
    auto s = reflection_matrix(rs, desc);
    w = mat_mul(s, w, l);
    winv = mat_mul(winv, s, l);
  }
  return word;
}

} // namespace

WeylElement weyl_identity(const RootSystem& rs) {
  return WeylElement{rs.rank(), identity_matrix(rs.rank()), {}};
}

WeylElement weyl_element(const RootSystem& rs, const WeylWord& w) {
  int l = rs.rank();
  auto m = identity_matrix(l);
  auto minv = identity_matrix(l);
  for (int i : w.letters) {
    if (i < 0 || i >= l) throw std::invalid_argument("weyl_element: letter out of range");
    auto s = reflection_matrix(rs, i);
    m = mat_mul(m, s, l);
    minv = mat_mul(s, minv, l);
  }
  return WeylElement{l, m, canonical_word_of(rs, m, minv)};
}

WeylElement weyl_mul(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  WeylWord w;
  w.letters = a.canonical_word.letters;
  w.letters.insert(w.letters.end(), b.canonical_word.letters.begin(),
                   b.canonical_word.letters.end());
  return weyl_element(rs, w);
}

WeylElement weyl_inverse(const RootSystem& rs, const WeylElement& a) {
  WeylWord w;
  w.letters.assign(a.canonical_word.letters.rbegin(), a.canonical_word.letters.rend());
  return weyl_element(rs, w);
}

int weyl_length(const RootSystem& rs, const WeylElement& w) {
  int l = rs.rank();
  int count = 0;
  for (int k = 0; k < rs.num_positive(); ++k)
    if (negative_coords(apply_matrix(w.matrix, rs.roots()[k].coords, l))) ++count;
  return count;
}

std::vector<Root> inversion_set(const RootSystem& rs, const WeylElement& w) {
  int l = rs.rank();
  // matrix of w^-1 = product over the reversed canonical word
  auto winv = identity_matrix(l);
  for (auto it = w.canonical_word.letters.rbegin(); it != w.canonical_word.letters.rend(); ++it)
    winv = mat_mul(winv, reflection_matrix(rs, *it), l);
  std::vector<Root> out;
  for (int k = 0; k < rs.num_positive(); ++k) {
    const Root& a = rs.roots()[k];
    if (negative_coords(apply_matrix(winv, a.coords, l))) out.push_back(a);
  }
  return out;
}

std::vector<WeylElement> weyl_enumerate(const RootSystem& rs, std::size_t bound) {
  std::uint64_t order = UINT64_MAX;
  try {
    order = weyl_order(rs.spec());
  } catch (const std::overflow_error&) {
  }
  if (order > bound)
    throw std::runtime_error("weyl_enumerate: |W| exceeds bound for " + rs.spec().name());
  int l = rs.rank();
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> mats;
  std::vector<std::vector<int>> invs;
  std::deque<std::size_t> queue;
  mats.push_back(identity_matrix(l));
  invs.push_back(identity_matrix(l));
  seen.emplace(mats[0], 0);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    for (int i = 0; i < l; ++i) {
      auto s = reflection_matrix(rs, i);
      auto m = mat_mul(mats[idx], s, l);
      if (seen.emplace(m, (int)mats.size()).second) {
        mats.push_back(m);
        invs.push_back(mat_mul(s, invs[idx], l));
        queue.push_back(mats.size() - 1);
      }
    }
  }
  std::vector<WeylElement> out;
  out.reserve(mats.size());
  for (std::size_t k = 0; k < mats.size(); ++k)
    out.push_back(WeylElement{l, mats[k], canonical_word_of(rs, mats[k], invs[k])});
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.canonical_word.size() != b.canonical_word.size())
      return a.canonical_word.size() < b.canonical_word.size();
    return a.canonical_word.letters < b.canonical_word.letters;
  });
  return out;
}

namespace {

void reduced_words_rec(const RootSystem& rs, const std::vector<int>& w,
                       const std::vector<int>& winv, WeylWord& prefix,
                       std::vector<WeylWord>& out) {
  int l = rs.rank();
  bool any = false;
  for (int i = 0; i < l; ++i) {
    if (negative_coords(matrix_column(winv, i, l))) {
      any = true;
      prefix.letters.push_back(i);
      auto s = reflection_matrix(rs, i);
      reduced_words_rec(rs, mat_mul(s, w, l), mat_mul(winv, s, l), prefix, out);
      prefix.letters.pop_back();
    }
  }
  if (!any) out.push_back(prefix); // reached the identity
}

} // namespace

std::vector<WeylWord> all_reduced_words(const RootSystem& rs, const WeylElement& w,
                                        int length_bound) {
  if (weyl_length(rs, w) > length_bound)
    throw std::runtime_error("all_reduced_words: length exceeds bound");
  int l = rs.rank();
  auto winv = identity_matrix(l);
  for (auto it = w.canonical_word.letters.rbegin(); it != w.canonical_word.letters.rend(); ++it)
    winv = mat_mul(winv, reflection_matrix(rs, *it), l);
  WeylWord prefix;
  std::vector<WeylWord> out;
  reduced_words_rec(rs, w.matrix, winv, prefix, out);
  return out;
}

} // namespace mtp
