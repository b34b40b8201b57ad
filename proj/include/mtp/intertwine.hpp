#pragma once

#include <complex>
#include <vector>

#include "mtp/cfun.hpp"
#include "mtp/rootsys.hpp"

namespace mtp {

/// Spectral parameter s = (s_1,...,s_l) of an unramified character of A,
/// identified with the weight lambda satisfying lambda(H_i) = s_i.
struct SpectralParam {
  std::vector<Complex> coords;
};

/// (ws)_i = lambda(H_{w^-1 alpha_i}), an exact integer combination of the
/// coordinates through coroot coordinates. A left action of W.
SpectralParam act_on_param(const RootSystem& rs, const WeylElement& w,
                           const SpectralParam& s);

/// Transport by a single simple reflection.
SpectralParam act_simple(const RootSystem& rs, int i, const SpectralParam& s);

/// The factor of a simple reflection: c_{1/2}(s_i) for a metaplectic
/// alpha_i, c_0(s_i) otherwise.
CValue simple_factor(const RootSystem& rs, int i, const SpectralParam& s);

struct FactorTraceEntry {
  int letter;       // 0-based simple index
  Complex argument; // transported coordinate the factor was evaluated at
  CValue factor;
};

struct CFactorResult {
  CValue value;
  std::vector<FactorTraceEntry> trace; // in word order, leftmost letter first
};

/// c(w,s) over a reduced word as the right-to-left product
/// c(w_1, w_2...w_n s) ... c(w_n, s). A pole factor makes the product a
/// pole; a pole meeting a zero is reported as indeterminate.
/// Throws std::invalid_argument if the word is not reduced.
CFactorResult c_factor(const RootSystem& rs, const WeylWord& word, const SpectralParam& s);

/// Checks c(w1 w2, s) = c(w1, w2 s) c(w2, s) to rel_tol, for a
/// length-additive pair (throws otherwise). Non-finite values on either
/// side make the check vacuously true.
bool cocycle_check(const RootSystem& rs, const WeylElement& w1, const WeylElement& w2,
                   const SpectralParam& s, double rel_tol = 1e-10);

/// Exact integer identity 2rho - w(2rho) = 2 * sum of the inversion set.
bool delta_w_identity(const RootSystem& rs, const WeylElement& w);

/// The normalized scalar, identically 1 when c(w,s) is finite nonzero;
/// throws std::domain_error on a pole or a zero of c(w,s).
CValue normalized_factor(const RootSystem& rs, const WeylWord& word, const SpectralParam& s);

} // namespace mtp
