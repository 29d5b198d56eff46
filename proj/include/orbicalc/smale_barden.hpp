#pragma once

#include <string>
#include <vector>

#include "orbicalc/seifert.hpp"

namespace orbicalc {

/// Barden invariant i(M): the classification only ever consumes 0 or
/// infinity here; other declared values are stored verbatim.
struct BardenInvariant {
  enum class Kind { Zero, Infinity, Other };
  Kind kind = Kind::Zero;
  Int value = 0;  // meaningful for Kind::Other

  static BardenInvariant zero() { return {Kind::Zero, 0}; }
  static BardenInvariant infinity() { return {Kind::Infinity, 0}; }
  static BardenInvariant other(Int j) { return {Kind::Other, std::move(j)}; }
  std::string to_string() const;
};

struct SmaleBardenInvariants {
  Int k = 0;  // free rank, b_2(M)

  struct CEntry {
    Int prime;
    unsigned exponent;
    unsigned c;  // c(p^exponent)
  };
  std::vector<CEntry> c_table;

  struct TEntry {
    Int prime;
    unsigned t;  // t(p) = #{ i | c(p^i) > 0 }
  };
  std::vector<TEntry> t_table;

  unsigned t_max = 0;       // t(M)
  unsigned c_max = 0;       // max c(p^i); c(M) is half of this
  bool c_max_even = true;   // false: c(M) is a half-integer, not Seifert-realizable
  bool spin = true;
  BardenInvariant barden;

  unsigned t_of(const Int& p) const;
  /// c(M) = max c(p^i) / 2 as an exact rational.
  Rat c_invariant() const { return Rat(c_max, 2); }
};

SmaleBardenInvariants invariants_from_group(const FgAbelianGroup& g, bool spin,
                                            BardenInvariant barden);

struct Verdict {
  bool pass = true;
  std::vector<std::string> reasons;
  void fail(std::string why) {
    pass = false;
    reasons.push_back(std::move(why));
  }
};

/// The G-K condition: t(p) <= k+1 for every prime, i(M) in {0, infinity},
/// and t(2) <= k when i(M) = infinity (non-spin).
Verdict gk_condition(const SmaleBardenInvariants& inv);

/// Null-Sasakian admissibility: torsion-free H_2, 2 <= b_2 <= 21, spin.
Verdict null_sasakian_constraints(const SmaleBardenInvariants& inv);

}  // namespace orbicalc
