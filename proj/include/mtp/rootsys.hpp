#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mtp/rational.hpp"

namespace mtp {

/// Irreducible root-system type: one of the families A-G at a given rank.
struct RootSystemSpec {
  char family = 'A'; // 'A'..'G'
  int rank = 1;

  /// Parse strings like "A2", "B3", "G2". Throws std::invalid_argument.
  static RootSystemSpec parse(const std::string& name);
  /// Throws std::invalid_argument if the rank is not admissible for the family.
  void validate() const;
  std::string name() const { return std::string(1, family) + std::to_string(rank); }
};

/// A root, stored as integer coordinates in the simple-root basis.
/// Coordinates of a root are all >= 0 or all <= 0.
struct Root {
  std::vector<int> coords;

  friend bool operator==(const Root&, const Root&) = default;
  bool is_positive() const {
    for (int c : coords)
      if (c < 0) return false;
    return true;
  }
};

/// A word in simple reflections; letters are 0-based simple-root indices.
struct WeylWord {
  std::vector<int> letters;
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
  std::size_t size() const { return letters.size(); }
};

/// A Weyl-group element: its action matrix on simple-root coordinates
/// (column j = coordinates of w(alpha_j)) together with the
/// lexicographically least reduced word for it.
struct WeylElement {
  int rank = 0;
  std::vector<int> matrix; // rank x rank, row-major
  WeylWord canonical_word;

  int length() const { return (int)canonical_word.size(); }
  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rank == b.rank && a.matrix == b.matrix;
  }
};

/// An irreducible root system with the standard (Bourbaki) simple roots.
/// Cartan integers <a,b> = 2(a,b)/(b,b); squared lengths are normalized so
/// short roots have length^2 = 2 and long roots 2*n_phi.
class RootSystem {
public:
  explicit RootSystem(RootSystemSpec spec);

  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }

  /// All roots, positive system first (by height, then lexicographic).
  const std::vector<Root>& roots() const { return roots_; }
  int num_positive() const { return (int)roots_.size() / 2; }
  Root simple_root(int i) const;

  /// Cartan integer <alpha_i, alpha_j> between simple roots.
  int cartan(int i, int j) const { return cartan_[i * spec_.rank + j]; }

  /// Max ratio of squared root lengths: 1 (ADE), 2 (B,C,F), 3 (G).
  int n_phi() const { return n_phi_; }

  bool is_root(const Root& a) const;

  /// Cartan integer <a,b> for arbitrary roots. Throws if an argument
  /// is not a root.
  int cartan_int(const Root& a, const Root& b) const;

  /// Normalized squared length: 2 (short) or 2*n_phi (long).
  long long lengthsq(const Root& a) const;
  bool is_long(const Root& a) const { return lengthsq(a) == 2LL * n_phi_; }

  /// A root is metaplectic iff it is long, or the type is G2.
  bool is_metaplectic(const Root& a) const;

  /// Coordinates of the coroot H_a in the basis of simple coroots,
  /// computed by peeling a to a simple root through dual reflections.
  std::vector<int> coroot_coords(const Root& a) const;

  /// Apply the word to a rational vector in simple-root coordinates,
  /// rightmost letter first: s_a(v) = v - <v,a> a.
  std::vector<Rat> weyl_act(const WeylWord& w, std::vector<Rat> v) const;

  /// Simple reflection s_i on integer simple-root coordinates.
  std::vector<int> reflect(int i, std::vector<int> v) const;

  /// Pairing <v, alpha_i> extended linearly to integer coordinate vectors.
  long long pair_with_simple(const std::vector<int>& v, int i) const;

  /// Half-sum of positive roots, doubled to stay integral (coords of 2*rho).
  std::vector<int> two_rho() const;

private:
  RootSystemSpec spec_;
  std::vector<int> cartan_;     // rank x rank
  std::vector<long long> dsym_; // d_i = (alpha_i,alpha_i)/2 in {1, n_phi}
  int n_phi_ = 1;
  std::vector<Root> roots_;
  std::map<std::vector<int>, int> root_index_;

  long long bilinear(const std::vector<int>& a, const std::vector<int>& b) const;
  void build_cartan();
  void generate_roots();
};

/// Construct and fully validate a root system. Throws on a bad spec.
RootSystem build_root_system(RootSystemSpec spec);

/// |W| from the classified order formulas (no enumeration).
std::uint64_t weyl_order(const RootSystemSpec& spec);

/// The identity element of W.
WeylElement weyl_identity(const RootSystem& rs);

/// Element of W given by a (not necessarily reduced) word.
WeylElement weyl_element(const RootSystem& rs, const WeylWord& w);

/// Group operations on elements.
WeylElement weyl_mul(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement weyl_inverse(const RootSystem& rs, const WeylElement& a);

/// Length of w = number of positive roots sent negative by w.
int weyl_length(const RootSystem& rs, const WeylElement& w);

/// {a in Phi+ : w^-1 a in Phi-}; its size equals length(w).
std::vector<Root> inversion_set(const RootSystem& rs, const WeylElement& w);

/// Every element of W once, BFS order by length, canonical words attached.
/// Throws std::runtime_error if |W| exceeds the bound.
std::vector<WeylElement> weyl_enumerate(const RootSystem& rs,
                                        std::size_t bound = 1000000);

/// Every reduced word for w in lexicographic order.
/// Throws std::runtime_error if length(w) exceeds the bound.
std::vector<WeylWord> all_reduced_words(const RootSystem& rs, const WeylElement& w,
                                        int length_bound = 16);

} // namespace mtp
