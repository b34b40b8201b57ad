#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "mtp/rational.hpp"
#include "mtp/rootsys.hpp"

namespace mtp {

/// Real Hilbert quadratic symbol: -1 iff both arguments are negative.
/// Throws std::domain_error on a zero argument.
int hilbert(const Rat& t, const Rat& u);
int hilbert(double t, double u);

/// Exponent on the Hilbert symbol in h_i(t) h_i(u) = (t,u)^e h_i(tu):
/// 1 if alpha_i is long, n_phi if short.
int square_exponent(const RootSystem& rs, int i);

/// Exponent in the commutator (h_i(t), h_j(u)) = (t,u)^e, by the four
/// long/short cases. Only the parity matters downstream. Throws if i == j.
int comm_exponent(const RootSystem& rs, int i, int j);

/// Element of the covered torus in normal form:
/// sign * h_1(t_1) ... h_l(t_l), every t_i nonzero.
struct TorusElement {
  std::vector<Rat> params;
  int sign = 1;
  friend bool operator==(const TorusElement&, const TorusElement&) = default;
};

TorusElement torus_identity(const RootSystem& rs);
/// h_i(t) for a SIMPLE root index i (the relations do not pin down the
/// central sign of h_a(t) for non-simple a).
TorusElement torus_h(const RootSystem& rs, int i, const Rat& t);
/// The central element z = (params all 1, sign -1).
TorusElement torus_z(const RootSystem& rs);

TorusElement torus_mul(const RootSystem& rs, const TorusElement& x, const TorusElement& y);
TorusElement torus_inverse(const RootSystem& rs, const TorusElement& x);

/// Element of M = <h_i(-1)> in normal form sign * m_1^{b_1} ... m_l^{b_l}.
struct MElement {
  std::vector<int> bits; // values in {0,1}
  int sign = 1;
  friend bool operator==(const MElement&, const MElement&) = default;
};

/// The finite group M, |M| = 2^{l+1}. Elements are encoded as
/// code = (sign_bit << l) | bitmask so the group can be used without an
/// explicit table up to rank 16.
class MGroup {
public:
  explicit MGroup(const RootSystem& rs); // throws if rank > 16

  int rank() const { return rank_; }
  std::uint64_t order() const { return 1ULL << (rank_ + 1); }

  std::size_t identity() const { return 0; }
  std::size_t z() const { return (std::size_t)1 << rank_; }
  std::size_t generator(int i) const { return (std::size_t)1 << i; }

  MElement element(std::size_t code) const;
  std::size_t code(const MElement& e) const;

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;

  bool is_central(std::size_t a) const;
  bool is_abelian() const;
  /// Sorted codes of Z(M); always contains {1, z}.
  const std::vector<std::size_t>& center() const { return center_; }
  std::uint64_t center_order() const { return center_.size(); }

private:
  int rank_;
  std::vector<int> comm_parity_; // rank x rank, (m_i, m_j) sign exponent mod 2
  std::vector<int> square_parity_;
  std::vector<std::size_t> center_;
};

MGroup build_M(const RootSystem& rs);
std::vector<MElement> center_of_M(const MGroup& M);

/// A genuine character of Z(M): chi(z) = -1, values in 4th roots of unity.
/// Stored as the exponent e(g) with chi(g) = i^{e(g)} for every g in Z(M).
struct GenuineCentralCharacter {
  std::map<std::size_t, int> exponents; // code in Z(M) -> exponent mod 4

  int exponent(std::size_t code) const;
  std::complex<double> value(std::size_t code) const;
};

/// All characters of Z(M) with chi(z) = -1; count = |Z(M)|/2.
/// Throws std::runtime_error when |Z(M)| exceeds the enumeration cap.
std::vector<GenuineCentralCharacter> genuine_central_characters(const MGroup& M);

/// |M/Z(M)|^{1/2}; throws std::logic_error if the index is not a square.
std::uint64_t pseudospherical_dim(const MGroup& M);

/// Pseudospherical test on simple roots: a non-metaplectic m_i must be
/// central with chi(m_i) = 1; a central metaplectic m_i must take values
/// in {+-i} (automatic for genuine chi, checked).
bool is_pseudospherical(const RootSystem& rs, const MGroup& M,
                        const GenuineCentralCharacter& chi);

} // namespace mtp
