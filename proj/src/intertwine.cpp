#include "mtp/intertwine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mtp {

namespace {

void check_param(const RootSystem& rs, const SpectralParam& s) {
  if ((int)s.coords.size() != rs.rank())
    throw std::invalid_argument("spectral parameter length != rank");
}

Complex eval_at_coroot(const RootSystem& rs, const Root& r, const SpectralParam& s) {
  auto cr = rs.coroot_coords(r);
  Complex v{};
  for (int j = 0; j < rs.rank(); ++j) v += (double)cr[j] * s.coords[j];
  return v;
}

} // namespace

SpectralParam act_on_param(const RootSystem& rs, const WeylElement& w,
                           const SpectralParam& s) {
  check_param(rs, s);
  WeylElement winv = weyl_inverse(rs, w);
  int l = rs.rank();
  SpectralParam out;
  out.coords.resize(l);
  for (int i = 0; i < l; ++i) {
    // w^-1(alpha_i) is column i of the inverse matrix
    std::vector<int> col(l);
    for (int r = 0; r < l; ++r) col[r] = winv.matrix[r * l + i];
    out.coords[i] = eval_at_coroot(rs, Root{col}, s);
  }
  return out;
}

SpectralParam act_simple(const RootSystem& rs, int i, const SpectralParam& s) {
  check_param(rs, s);
  int l = rs.rank();
  SpectralParam out;
  out.coords.resize(l);
  for (int j = 0; j < l; ++j) {
    Root rj{rs.reflect(i, rs.simple_root(j).coords)};
    out.coords[j] = eval_at_coroot(rs, rj, s);
  }
  return out;
}

CValue simple_factor(const RootSystem& rs, int i, const SpectralParam& s) {
  check_param(rs, s);
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("simple_factor: bad index");
  return rs.is_metaplectic(rs.simple_root(i)) ? c_half(s.coords[i]) : c0(s.coords[i]);
}

CFactorResult c_factor(const RootSystem& rs, const WeylWord& word, const SpectralParam& s) {
  check_param(rs, s);
  WeylElement w = weyl_element(rs, word);
  if (weyl_length(rs, w) != (int)word.size())
    throw std::invalid_argument("c_factor: word is not reduced");

  CFactorResult res;
  SpectralParam cur = s;
  int poles = 0, zeros = 0;
  Complex product{1.0, 0.0};
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    int i = *it;
    CValue f = simple_factor(rs, i, cur);
    res.trace.push_back(FactorTraceEntry{i, cur.coords[i], f});
    if (f.is_pole())
      ++poles;
    else if (f.is_zero())
      ++zeros;
    else
      product *= f.value;
    cur = act_simple(rs, i, cur);
  }
  std::reverse(res.trace.begin(), res.trace.end());
  if (poles > 0 && zeros > 0)
    res.value = CValue::indeterminate();
  else if (poles > 0)
    res.value = CValue::pole();
  else if (zeros > 0)
    res.value = CValue::finite(0.0);
  else
    res.value = CValue::finite(product);
  return res;
}

bool cocycle_check(const RootSystem& rs, const WeylElement& w1, const WeylElement& w2,
                   const SpectralParam& s, double rel_tol) {
  WeylElement w12 = weyl_mul(rs, w1, w2);
  if (weyl_length(rs, w12) != weyl_length(rs, w1) + weyl_length(rs, w2))
    throw std::invalid_argument("cocycle_check: pair is not length-additive");
  CValue lhs = c_factor(rs, w12.canonical_word, s).value;
  CValue f2 = c_factor(rs, w2.canonical_word, s).value;
  CValue f1 = c_factor(rs, w1.canonical_word, act_on_param(rs, w2, s)).value;
  if (!lhs.is_finite() || !f1.is_finite() || !f2.is_finite()) return true;
  Complex rhs = f1.value * f2.value;
  double scale = std::max({std::abs(lhs.value), std::abs(rhs), 1e-300});
  return std::abs(lhs.value - rhs) <= rel_tol * scale;
}

bool delta_w_identity(const RootSystem& rs, const WeylElement& w) {
  int l = rs.rank();
  std::vector<int> two_rho = rs.two_rho();
  std::vector<int> w_two_rho(l, 0);
  for (int r = 0; r < l; ++r) {
    long long acc = 0;
    for (int j = 0; j < l; ++j) acc += (long long)w.matrix[r * l + j] * two_rho[j];
    w_two_rho[r] = (int)acc;
  }
  std::vector<long long> lhs(l), rhs(l, 0);
  for (int r = 0; r < l; ++r) lhs[r] = (long long)two_rho[r] - w_two_rho[r];
  for (const Root& a : inversion_set(rs, w))
    for (int r = 0; r < l; ++r) rhs[r] += 2LL * a.coords[r];
  return lhs == rhs;
}

CValue normalized_factor(const RootSystem& rs, const WeylWord& word, const SpectralParam& s) {
  CFactorResult r = c_factor(rs, word, s);
  if (r.value.is_pole() || r.value.kind == CValue::Kind::Indeterminate)
    throw std::domain_error("normalized_factor: pole of c(w,s)");
  if (r.value.is_zero()) throw std::domain_error("normalized_factor: zero of c(w,s)");
  return CValue::finite(1.0);
}

} // namespace mtp
