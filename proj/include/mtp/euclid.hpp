#pragma once

#include <vector>

#include "mtp/rational.hpp"
#include "mtp/rootsys.hpp"

namespace mtp::euclid {

/// Independent geometric realization of the classical types at rank <= 4
/// (A, B, C, D, F4, G2): simple roots as exact rational vectors in the
/// standard coordinate models. Used only as a cross-validation path for
/// lengths, Cartan integers and coroot coordinates; never consulted by
/// the main arithmetic.
class Model {
public:
  explicit Model(const RootSystemSpec& spec); // throws if unsupported

  int rank() const { return (int)simples_.size(); }

  /// Euclidean vector of a root given by simple-root coordinates.
  std::vector<Rat> embed(const Root& a) const;

  Rat inner(const std::vector<Rat>& a, const std::vector<Rat>& b) const;

  /// (a,a) in the raw model (unnormalized; only ratios are meaningful).
  Rat length_sq(const Root& a) const;

  /// Cartan integer 2(a,b)/(b,b) computed in the model.
  Rat cartan_int(const Root& a, const Root& b) const;

  /// Coroot coordinates from a_vee = 2a/(a,a) expanded in simple coroots:
  /// c_i = a_i (alpha_i,alpha_i)/(a,a). Throws if not integral.
  std::vector<int> coroot_coords(const Root& a) const;

  /// Long iff (a,a) equals the maximal squared length over all roots of rs.
  bool is_long(const RootSystem& rs, const Root& a) const;

private:
  std::vector<std::vector<Rat>> simples_; // one vector per simple root
};

} // namespace mtp::euclid
