#include "mtp/torus.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtp {

int hilbert(const Rat& t, const Rat& u) {
  if (t.is_zero() || u.is_zero()) throw std::domain_error("hilbert: zero argument");
  return (t.sign() < 0 && u.sign() < 0) ? -1 : 1;
}

int hilbert(double t, double u) {
  if (t == 0.0 || u == 0.0) throw std::domain_error("hilbert: zero argument");
  return (t < 0 && u < 0) ? -1 : 1;
}

int square_exponent(const RootSystem& rs, int i) {
  return rs.is_long(rs.simple_root(i)) ? 1 : rs.n_phi();
}

int comm_exponent(const RootSystem& rs, int i, int j) {
  if (i == j) throw std::invalid_argument("comm_exponent: equal indices");
  bool li = rs.is_long(rs.simple_root(i));
  bool lj = rs.is_long(rs.simple_root(j));
  if (li) return rs.cartan(i, j);                 // long/long and long/short
  if (lj) return rs.cartan(j, i);                 // short/long
  return rs.n_phi() * rs.cartan(i, j);            // short/short
}

TorusElement torus_identity(const RootSystem& rs) {
  return TorusElement{std::vector<Rat>(rs.rank(), Rat(1)), 1};
}

TorusElement torus_h(const RootSystem& rs, int i, const Rat& t) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("torus_h: bad index");
  if (t.is_zero()) throw std::domain_error("torus_h: zero parameter");
  TorusElement e = torus_identity(rs);
  e.params[i] = t;
  return e;
}

TorusElement torus_z(const RootSystem& rs) {
  TorusElement e = torus_identity(rs);
  e.sign = -1;
  return e;
}

TorusElement torus_mul(const RootSystem& rs, const TorusElement& x, const TorusElement& y) {
  int l = rs.rank();
  if ((int)x.params.size() != l || (int)y.params.size() != l)
    throw std::invalid_argument("torus_mul: wrong rank");
  int sign = x.sign * y.sign;
  // move each h_j(u_j) left past h_i(t_i), i > j, then merge equal indices
  for (int j = 0; j < l; ++j)
    for (int i = j + 1; i < l; ++i)
      if (hilbert(x.params[i], y.params[j]) < 0 && (comm_exponent(rs, i, j) & 1)) sign = -sign;
  std::vector<Rat> params(l);
  for (int i = 0; i < l; ++i) {
    if (hilbert(x.params[i], y.params[i]) < 0 && (square_exponent(rs, i) & 1)) sign = -sign;
    params[i] = x.params[i] * y.params[i];
  }
  return TorusElement{std::move(params), sign};
}

TorusElement torus_inverse(const RootSystem& rs, const TorusElement& x) {
  TorusElement y;
  y.params.reserve(x.params.size());
  for (const Rat& t : x.params) y.params.push_back(t.inverse());
  y.sign = 1;
  TorusElement probe = torus_mul(rs, x, y);
  y.sign = probe.sign; // central sign correction so that x*y = 1
  return y;
}

// ---------------------------------------------------------------------------
// The finite group M
// ---------------------------------------------------------------------------

MGroup::MGroup(const RootSystem& rs) : rank_(rs.rank()) {
  if (rank_ > 16) throw std::invalid_argument("MGroup: rank > 16");
  comm_parity_.assign((std::size_t)rank_ * rank_, 0);
  square_parity_.assign(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    square_parity_[i] = square_exponent(rs, i) & 1;
    for (int j = 0; j < rank_; ++j)
      if (i != j) comm_parity_[i * rank_ + j] = comm_exponent(rs, i, j) & 1;
  }
  for (std::size_t mask = 0; mask < ((std::size_t)1 << rank_); ++mask) {
    bool central = true;
    for (int i = 0; i < rank_ && central; ++i) {
      int par = 0;
      for (int j = 0; j < rank_; ++j)
        if (mask >> j & 1) par ^= comm_parity_[j * rank_ + i];
      central = (par == 0);
    }
    if (central) {
      center_.push_back(mask);
      center_.push_back(mask | z());
    }
  }
  std::sort(center_.begin(), center_.end());
}

MElement MGroup::element(std::size_t code) const {
  MElement e;
  e.bits.resize(rank_);
  for (int i = 0; i < rank_; ++i) e.bits[i] = (int)(code >> i & 1);
  e.sign = (code >> rank_ & 1) ? -1 : 1;
  return e;
}

std::size_t MGroup::code(const MElement& e) const {
  if ((int)e.bits.size() != rank_) throw std::invalid_argument("MGroup::code: wrong rank");
  std::size_t c = 0;
  for (int i = 0; i < rank_; ++i)
    if (e.bits[i]) c |= (std::size_t)1 << i;
  if (e.sign < 0) c |= z();
  return c;
}

std::size_t MGroup::mul(std::size_t a, std::size_t b) const {
  // sign picks up (-1)^{ce(i,j)} for every i > j with a_i = b_j = 1
  // (commuting m_j leftward) and (-1)^{se(i)} for every merged pair.
  int par = (int)(a >> rank_ & 1) ^ (int)(b >> rank_ & 1);
  for (int j = 0; j < rank_; ++j) {
    if (!(b >> j & 1)) continue;
    for (int i = j + 1; i < rank_; ++i)
      if (a >> i & 1) par ^= comm_parity_[i * rank_ + j];
    if (a >> j & 1) par ^= square_parity_[j];
  }
  std::size_t mask = (a ^ b) & (((std::size_t)1 << rank_) - 1);
  return mask | ((std::size_t)par << rank_);
}

std::size_t MGroup::inverse(std::size_t a) const {
  std::size_t probe = mul(a, a & ~z()); // same mask, + sign
  // a * x = 1 with x of the same mask; flip the sign if the probe is -1
  return (a & ~z()) ^ (probe & z());
}

bool MGroup::is_central(std::size_t a) const {
  // the central sign never obstructs centrality; test the bitmask part
  return std::binary_search(center_.begin(), center_.end(), a & ~z());
}

bool MGroup::is_abelian() const { return center_.size() == order(); }

MGroup build_M(const RootSystem& rs) { return MGroup(rs); }

std::vector<MElement> center_of_M(const MGroup& M) {
  std::vector<MElement> out;
  out.reserve(M.center().size());
  for (std::size_t c : M.center()) out.push_back(M.element(c));
  return out;
}

int GenuineCentralCharacter::exponent(std::size_t code) const {
  auto it = exponents.find(code);
  if (it == exponents.end())
    throw std::invalid_argument("character: element not in Z(M)");
  return it->second;
}

std::complex<double> GenuineCentralCharacter::value(std::size_t code) const {
  static const std::complex<double> I4[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return I4[exponent(code) & 3];
}

namespace {

void extend_characters(const MGroup& M, const std::vector<std::size_t>& zs,
                       std::map<std::size_t, int> chi,
                       std::vector<GenuineCentralCharacter>& out) {
  std::size_t g = 0;
  bool found = false;
  for (std::size_t c : zs)
    if (!chi.count(c)) {
      g = c;
      found = true;
      break;
    }
  if (!found) {
    out.push_back(GenuineCentralCharacter{std::move(chi)});
    return;
  }
  // order k of g modulo the domain subgroup H (k in {1,2,4})
  std::size_t p = g;
  int k = 1;
  while (!chi.count(p)) {
    p = M.mul(p, g);
    ++k;
  }
  int e0 = chi.at(p);
  for (int e = 0; e < 4; ++e) {
    if ((k * e) % 4 != e0) continue;
    auto next = chi;
    std::size_t gj = g;
    for (int j = 1; j < k; ++j) {
      for (const auto& [h, eh] : chi) next[M.mul(gj, h)] = (e * j + eh) % 4;
      gj = M.mul(gj, g);
    }
    extend_characters(M, zs, std::move(next), out);
  }
}

} // namespace

std::vector<GenuineCentralCharacter> genuine_central_characters(const MGroup& M) {
  const auto& zs = M.center();
  if (zs.size() > 4096)
    throw std::runtime_error("genuine_central_characters: |Z(M)| too large to enumerate");
  std::map<std::size_t, int> seed;
  seed[M.identity()] = 0;
  std::vector<GenuineCentralCharacter> all;
  extend_characters(M, zs, std::move(seed), all);
  if (all.size() != zs.size())
    throw std::logic_error("character count != |Z(M)|");
  std::vector<GenuineCentralCharacter> genuine;
  for (auto& chi : all)
    if (chi.exponent(M.z()) == 2) genuine.push_back(std::move(chi));
  if (genuine.size() * 2 != zs.size())
    throw std::logic_error("genuine character count != |Z(M)|/2");
  // deterministic order: by exponent vector over sorted center codes
  std::sort(genuine.begin(), genuine.end(),
            [](const GenuineCentralCharacter& a, const GenuineCentralCharacter& b) {
              return a.exponents < b.exponents;
            });
  return genuine;
}

std::uint64_t pseudospherical_dim(const MGroup& M) {
  std::uint64_t index = M.order() / M.center_order();
  std::uint64_t r = 1;
  while (r * r < index) ++r;
  if (r * r != index)
    throw std::logic_error("pseudospherical_dim: |M/Z(M)| is not a perfect square");
  return r;
}

bool is_pseudospherical(const RootSystem& rs, const MGroup& M,
                        const GenuineCentralCharacter& chi) {
  for (int i = 0; i < rs.rank(); ++i) {
    std::size_t mi = M.generator(i);
    bool meta = rs.is_metaplectic(rs.simple_root(i));
    if (!meta) {
      if (!M.is_central(mi)) return false;
      if (chi.exponent(mi) != 0) return false;
    } else if (M.is_central(mi)) {
      if ((chi.exponent(mi) & 1) == 0)
        throw std::logic_error("genuine character with chi(m_i) not in {+-i}");
    }
  }
  return true;
}

} // namespace mtp
