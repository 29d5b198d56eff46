#pragma once

#include <vector>

#include "orbicalc/matrix.hpp"

namespace orbicalc {

/// The quotient C^2/Z_m by (z1, z2) -> (xi z1, xi^r z2), xi = exp(2 pi i/m).
struct CyclicSingularity {
  Int m;
  Int r;

  CyclicSingularity(Int m_, Int r_);

  bool operator==(const CyclicSingularity&) const = default;
};

/// Negated self-intersections [b1,...,bl] of the exceptional chain; every
/// entry >= 2 in canonical form.
struct HJChain {
  std::vector<Int> b;

  bool operator==(const HJChain&) const = default;
};

/// The unique expansion m/r = [b1,...,bl] with all bi >= 2.
HJChain hj_expand(const CyclicSingularity& s);

/// b1 - 1/(b2 - 1/(...)) in lowest terms. Relaxed mode admits entries >= 1
/// (used only to audit degenerate chains); it may hit DivisionByZero.
Rat hj_eval(const HJChain& c, bool relaxed = false);

/// The dual chain [a1,...,a_l'] with eval = m/(m-r). Lengths of primal and
/// dual chains generally differ.
HJChain hj_dual(const CyclicSingularity& s);

/// Inverse of hj_expand: the (m, r) whose expansion is the given chain.
CyclicSingularity chain_recognize(const HJChain& c);

}  // namespace orbicalc
