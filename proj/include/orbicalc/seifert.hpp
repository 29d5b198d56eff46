#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "orbicalc/orbifold.hpp"

namespace orbicalc {

/// Isotropy divisor with its Seifert local invariant b (an inverse of the
/// local j mod m) and the divisor genus.
struct IsotropyDivisor {
  std::string name;
  Int m;        // multiplicity, > 1
  Int b_local;  // gcd(b_local, m) = 1
  Int genus;
};

/// Integral test classes of H^2(X - P, Z): their pairings against the
/// isotropy divisors, with the citation justifying the declared values.
struct TestClass {
  std::string name;
  IntVec pairings;  // one entry per isotropy divisor, in order
  std::string citation;
};

/// Finitely generated abelian group in prime-power canonical form.
struct FgAbelianGroup {
  struct TorsionPart {
    Int prime;
    unsigned exponent;  // the factor is Z_{prime^exponent}
    unsigned count;
    bool operator==(const TorsionPart&) const = default;
    bool operator<(const TorsionPart& o) const {
      return std::tie(prime, exponent, count) < std::tie(o.prime, o.exponent, o.count);
    }
  };

  Int free_rank = 0;
  std::vector<TorsionPart> torsion;  // sorted by (prime, exponent)

  void add_cyclic(const Int& order, unsigned copies);
  void normalize();
  Int torsion_order() const;
  std::string to_string() const;
  bool operator==(const FgAbelianGroup&) const = default;
};

/// Seifert bundle data over a cyclic orbifold.
struct SeifertData {
  OrbifoldSurface base;
  std::vector<IsotropyDivisor> isotropy;
  std::vector<TestClass> test_classes;
  /// Primitivity of c_1(M/m) imported as a declared fact (used when there
  /// are no isotropy divisors to compute it from).
  std::optional<std::string> primitivity_citation;

  Int m_lcm() const;
};

SeifertData make_seifert(const OrbifoldSurface& base,
                         const std::vector<std::pair<std::string, Int>>& local_invariants);

/// Coefficients of sum_i (b_i m / m_i) [D_i] over the isotropy divisors.
IntVec chern_class_numerator(const SeifertData& s);

struct H1Verdict {
  bool base_h1_zero = false;   // condition (1), a declared fact
  bool surjective = false;     // condition (2)
  bool primitive = false;      // condition (3)
  std::string detail;
  bool ok() const { return base_h1_zero && surjective && primitive; }
};

/// The three conditions for H_1(M, Z) = 0: (1) is consumed as a declared
/// fact; (2) is surjectivity of alpha -> (alpha . D_i mod m_i), decided
/// prime by prime over the declared test classes; (3) is primitivity of the
/// Chern-class numerator under the declared pairing.
H1Verdict check_h1_zero(const SeifertData& s, bool h1_base_zero_declared);

/// H_2(M, Z) = Z^k + sum_i Z_{m_i}^{2 g_i}, k + 1 = b_2(X); torsion split
/// into prime powers. Throws H1NotZero unless the verdict passed.
FgAbelianGroup h2_total_space(const SeifertData& s, const H1Verdict& verdict);

/// Prime-power factorization helper (trial division; inputs are small).
std::vector<std::pair<Int, unsigned>> factorize(Int n);

}  // namespace orbicalc
