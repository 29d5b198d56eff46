#include "orbicalc/seifert.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace orbicalc {

void FgAbelianGroup::add_cyclic(const Int& order, unsigned copies) {
  if (order <= 0) throw Error("cyclic factor order must be positive");
  if (order == 1 || copies == 0) return;
  for (const auto& [p, e] : factorize(order))
    torsion.push_back({p, e, copies});
  normalize();
}

void FgAbelianGroup::normalize() {
  std::sort(torsion.begin(), torsion.end());
  std::vector<TorsionPart> merged;
  for (const auto& t : torsion) {
    if (!merged.empty() && merged.back().prime == t.prime &&
        merged.back().exponent == t.exponent)
      merged.back().count += t.count;
    else
      merged.push_back(t);
  }
  torsion = std::move(merged);
}

Int FgAbelianGroup::torsion_order() const {
  Int o = 1;
  for (const auto& t : torsion)
    for (unsigned i = 0; i < t.count; ++i) o *= pow(t.prime, t.exponent);
  return o;
}

std::string FgAbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    first = false;
    os << "Z_" << pow(t.prime, t.exponent);
    if (t.count > 1) os << "^" << t.count;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
  if (n <= 0) throw Error("factorize wants a positive integer");
  std::vector<std::pair<Int, unsigned>> out;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Int SeifertData::m_lcm() const {
  Int m = 1;
  for (const auto& d : isotropy) m = lcm(m, d.m);
  return m;
}

SeifertData make_seifert(const OrbifoldSurface& base,
                         const std::vector<std::pair<std::string, Int>>& local_invariants) {
  SeifertData s;
  s.base = base;
  for (const auto& iso : base.isotropy()) {
    Int b_local = 1;
    for (const auto& [name, b] : local_invariants)
      if (name == iso.divisor) b_local = b;
    if (gcd(b_local, iso.multiplicity) != 1)
      throw BadLocalInvariant("local invariant b for " + iso.divisor +
                              " must be a unit mod " + iso.multiplicity.str());
    s.isotropy.push_back({iso.divisor, iso.multiplicity, b_local,
                          base.curve(iso.divisor).genus});
  }
  return s;
}

IntVec chern_class_numerator(const SeifertData& s) {
  const Int m = s.m_lcm();
  IntVec coeff(s.isotropy.size());
  for (std::size_t i = 0; i < s.isotropy.size(); ++i)
    coeff[i] = s.isotropy[i].b_local * (m / s.isotropy[i].m);
  return coeff;
}

H1Verdict check_h1_zero(const SeifertData& s, bool h1_base_zero_declared) {
  H1Verdict v;
  v.base_h1_zero = h1_base_zero_declared;
  std::ostringstream detail;

  if (s.isotropy.empty()) {
    // Condition (2) is vacuous; (3) has no numerator to test and must be
    // imported as a declared fact.
    v.surjective = true;
    v.primitive = s.primitivity_citation.has_value();
    detail << (v.primitive ? "no isotropy; primitivity declared: " + *s.primitivity_citation
                           : "no isotropy and no declared primitivity");
    v.detail = detail.str();
    return v;
  }

  if (s.test_classes.empty())
    throw MissingPairingData("no test classes declared for H^2(X, Z) pairings");
  for (const auto& t : s.test_classes)
    if (t.pairings.size() != s.isotropy.size())
      throw MissingPairingData("test class " + t.name + " has wrong pairing length");

  // Condition (2), prime by prime: for each prime p the pairing matrix of
  // test classes against the divisors with p | m_i must have full column
  // rank over F_p.
  v.surjective = true;
  std::vector<Int> primes;
  for (const auto& d : s.isotropy)
    for (const auto& [p, e] : factorize(d.m))
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  for (const Int& p : primes) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < s.isotropy.size(); ++i)
      if (s.isotropy[i].m % p == 0) cols.push_back(i);
    IntMatrix a(s.test_classes.size(), cols.size());
    for (std::size_t r = 0; r < s.test_classes.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        a.at(r, c) = s.test_classes[r].pairings[cols[c]];
    if (rank_mod_p(a, p) != cols.size()) {
      v.surjective = false;
      detail << "surjectivity fails at p = " << p << "; ";
    }
  }

  // Condition (3): the numerator's pairings with the test classes must not
  // all vanish mod p for any p | m. Restricting to primes dividing m keeps
  // the verdict independent of the unit representatives b_i.
  IntVec coeff = chern_class_numerator(s);
  IntVec w(s.test_classes.size());
  for (std::size_t r = 0; r < s.test_classes.size(); ++r)
    for (std::size_t i = 0; i < coeff.size(); ++i)
      w[r] += coeff[i] * s.test_classes[r].pairings[i];
  Int g = 0;
  for (const auto& x : w) g = gcd(g, x);
  v.primitive = (gcd(g, s.m_lcm()) == 1);
  if (!v.primitive)
    detail << "Chern numerator pairings all divisible by gcd(" << g << ", m); ";

  if (!v.base_h1_zero) detail << "H_1(X, Z) = 0 not declared; ";
  v.detail = detail.str();
  return v;
}

FgAbelianGroup h2_total_space(const SeifertData& s, const H1Verdict& verdict) {
  if (!verdict.ok()) throw H1NotZero("H_1(M, Z) = 0 conditions not satisfied: " + verdict.detail);
  FgAbelianGroup g;
  if (s.base.b2() == 0) throw Error("Seifert base must have b_2 >= 1");
  g.free_rank = Int(s.base.b2()) - 1;
  for (const auto& d : s.isotropy) {
    Int two_g = 2 * d.genus;
    if (two_g > 0) g.add_cyclic(d.m, static_cast<unsigned>(two_g));
  }
  return g;
}

}  // namespace orbicalc
