#include "orbicalc/smale_barden.hpp"

#include <algorithm>

namespace orbicalc {

std::string BardenInvariant::to_string() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Infinity: return "inf";
    case Kind::Other: return value.str();
  }
  return "?";
}

unsigned SmaleBardenInvariants::t_of(const Int& p) const {
  for (const auto& t : t_table)
    if (t.prime == p) return t.t;
  return 0;
}

SmaleBardenInvariants invariants_from_group(const FgAbelianGroup& g, bool spin,
                                            BardenInvariant barden) {
  SmaleBardenInvariants inv;
  inv.k = g.free_rank;
  inv.spin = spin;
  inv.barden = barden;

  for (const auto& t : g.torsion) {
    inv.c_table.push_back({t.prime, t.exponent, t.count});
    inv.c_max = std::max(inv.c_max, t.count);
    if (t.count % 2 != 0) inv.c_max_even = false;
    bool found = false;
    for (auto& te : inv.t_table)
      if (te.prime == t.prime) {
        te.t += 1;
        found = true;
      }
    if (!found) inv.t_table.push_back({t.prime, 1});
  }
  for (const auto& te : inv.t_table) inv.t_max = std::max(inv.t_max, te.t);
  return inv;
}

Verdict gk_condition(const SmaleBardenInvariants& inv) {
  Verdict v;
  for (const auto& te : inv.t_table)
    if (te.t > inv.k + 1)
      v.fail("t(" + te.prime.str() + ") = " + std::to_string(te.t) + " exceeds k+1 = " +
             Int(inv.k + 1).str());
  if (inv.barden.kind == BardenInvariant::Kind::Other)
    v.fail("Barden invariant i(M) = " + inv.barden.to_string() + " is not in {0, inf}");
  if (inv.barden.kind == BardenInvariant::Kind::Infinity) {
    unsigned t2 = inv.t_of(2);
    if (Int(t2) > inv.k)
      v.fail("non-spin case needs t(2) <= k, but t(2) = " + std::to_string(t2));
  }
  return v;
}

Verdict null_sasakian_constraints(const SmaleBardenInvariants& inv) {
  Verdict v;
  if (!inv.c_table.empty())
    v.fail("H_2(M, Z) has torsion; a null structure forces Delta = 0 and torsion-free H_2");
  if (inv.k < 2) v.fail("b_2(M) = " + inv.k.str() + " < 2");
  if (inv.k > 21) v.fail("b_2(M) = " + inv.k.str() + " > 21");
  if (!inv.spin) v.fail("M is not spin");
  return v;
}

}  // namespace orbicalc
