#include "mtp/euclid.hpp"

#include <stdexcept>

namespace mtp::euclid {

Model::Model(const RootSystemSpec& spec) {
  spec.validate();
  int l = spec.rank;
  if (spec.family != 'G' && spec.family != 'F' && l > 4)
    throw std::invalid_argument("euclid::Model: only rank <= 4 supported");

  auto basis = [](int dim, int i) {
    std::vector<Rat> v(dim, Rat(0));
    v[i] = Rat(1);
    return v;
  };
  auto diff = [&](int dim, int i, int j) {
    std::vector<Rat> v(dim, Rat(0));
    v[i] = Rat(1);
    v[j] = Rat(-1);
    return v;
  };

  switch (spec.family) {
    case 'A':
      for (int i = 0; i < l; ++i) simples_.push_back(diff(l + 1, i, i + 1));
      break;
    case 'B':
      for (int i = 0; i + 1 < l; ++i) simples_.push_back(diff(l, i, i + 1));
      simples_.push_back(basis(l, l - 1));
      break;
    case 'C': {
      for (int i = 0; i + 1 < l; ++i) simples_.push_back(diff(l, i, i + 1));
      auto v = basis(l, l - 1);
      v[l - 1] = Rat(2);
      simples_.push_back(v);
      break;
    }
    case 'D': {
      for (int i = 0; i + 1 < l; ++i) simples_.push_back(diff(l, i, i + 1));
      std::vector<Rat> v(l, Rat(0));
      v[l - 2] = Rat(1);
      v[l - 1] = Rat(1);
      simples_.push_back(v);
      break;
    }
    case 'F': {
      simples_.push_back(diff(4, 1, 2));
      simples_.push_back(diff(4, 2, 3));
      simples_.push_back(basis(4, 3));
      simples_.push_back({Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});
      break;
    }
    case 'G': {
      simples_.push_back(diff(3, 0, 1));
      simples_.push_back({Rat(-2), Rat(1), Rat(1)});
      break;
    }
    default:
      throw std::invalid_argument("euclid::Model: unsupported family");
  }
}

std::vector<Rat> Model::embed(const Root& a) const {
  if ((int)a.coords.size() != rank())
    throw std::invalid_argument("euclid::embed: wrong coordinate length");
  std::vector<Rat> v(simples_[0].size(), Rat(0));
  for (int i = 0; i < rank(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k)
      v[k] += Rat(a.coords[i]) * simples_[i][k];
  return v;
}

Rat Model::inner(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
  Rat s;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

Rat Model::length_sq(const Root& a) const {
  auto v = embed(a);
  return inner(v, v);
}

Rat Model::cartan_int(const Root& a, const Root& b) const {
  auto va = embed(a), vb = embed(b);
  return Rat(2) * inner(va, vb) / inner(vb, vb);
}

std::vector<int> Model::coroot_coords(const Root& a) const {
  Rat aa = length_sq(a);
  std::vector<int> out(rank());
  for (int i = 0; i < rank(); ++i) {
    Rat ci = Rat(a.coords[i]) * inner(simples_[i], simples_[i]) / aa;
    if (ci.den() != 1) throw std::logic_error("euclid::coroot_coords: non-integer");
    out[i] = (int)ci.num();
  }
  return out;
}

bool Model::is_long(const RootSystem& rs, const Root& a) const {
  Rat mx;
  for (const Root& r : rs.roots()) {
    Rat ls = length_sq(r);
    if (mx < ls) mx = ls;
  }
  return length_sq(a) == mx;
}

} // namespace mtp::euclid
