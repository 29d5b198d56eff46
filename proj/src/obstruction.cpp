#include "orbicalc/obstruction.hpp"

#include <array>
#include <map>
#include <numeric>

#include "orbicalc/errors.hpp"

namespace orbicalc {

namespace {

// Sparse polynomial in the four unknown coordinates (a, b) of D1 and
// (c, d) of D2; n enters as a fixed integer. Enough for the degree-2
// identities below.
using Mono = std::array<int, 4>;
using Poly = std::map<Mono, Int>;

void add_term(Poly& p, Mono m, const Int& coef) {
  if (coef == 0) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, coef);
  } else {
    it->second += coef;
    if (it->second == 0) p.erase(it);
  }
}

Poly add(const Poly& p, const Poly& q) {
  Poly r = p;
  for (const auto& [m, c] : q) add_term(r, m, c);
  return r;
}

Poly mul(const Poly& p, const Poly& q) {
  Poly r;
  for (const auto& [m1, c1] : p)
    for (const auto& [m2, c2] : q) {
      Mono m;
      for (int i = 0; i < 4; ++i) m[i] = m1[i] + m2[i];
      add_term(r, m, c1 * c2);
    }
  return r;
}

Poly constant(const Int& c) {
  Poly p;
  add_term(p, {0, 0, 0, 0}, c);
  return p;
}

Poly var(int i) {
  Poly p;
  Mono m{0, 0, 0, 0};
  m[i] = 1;
  add_term(p, m, 1);
  return p;
}

// Intersection pairing of x1*sigma + y1*f with x2*sigma + y2*f on H_n
// (sigma^2 = -n, sigma.f = 1, f^2 = 0), with polynomial coordinates.
Poly pair_on_hn(long long n, const Poly& x1, const Poly& y1, const Poly& x2,
                const Poly& y2) {
  Poly r = mul(constant(Int(-n)), mul(x1, x2));
  r = add(r, mul(x1, y2));
  r = add(r, mul(y1, x2));
  return r;
}

Poly negate(const Poly& p) { return mul(constant(-1), p); }

}  // namespace

SumRelationCheck derive_sum_relation(long long n, bool spanning_declared) {
  if (n < 0) throw InvalidIncidence("Hirzebruch index must be non-negative");
  SumRelationCheck out;
  out.n = n;
  out.spanning_declared = spanning_declared;

  const Poly a = var(0), b = var(1), c = var(2), d = var(3);
  // K = -2 sigma - (n+2) f
  const Poly kx = constant(-2), ky = constant(Int(-(n + 2)));
  const Poly sx = add(add(kx, a), c);  // sigma-coordinate of K + D1 + D2
  const Poly sy = add(add(ky, b), d);

  // Declared relations: both adjunctions and disjointness.
  const Poly adj1 =
      add(pair_on_hn(n, a, b, a, b), pair_on_hn(n, kx, ky, a, b));
  const Poly adj2 =
      add(pair_on_hn(n, c, d, c, d), pair_on_hn(n, kx, ky, c, d));
  const Poly disj = pair_on_hn(n, a, b, c, d);

  // (K + D1 + D2).D1 = (D1^2 + K.D1) + D1.D2, as polynomial identities.
  const Poly lhs1 = pair_on_hn(n, sx, sy, a, b);
  out.identity_d1 = add(lhs1, negate(add(adj1, disj))).empty();
  const Poly lhs2 = pair_on_hn(n, sx, sy, c, d);
  out.identity_d2 = add(lhs2, negate(add(adj2, disj))).empty();
  return out;
}

Int relation_polynomial(const TorusPairCandidate& c) {
  const Int a = c.a, b = c.b, n = c.n;
  return (a - 1) * (a * n - 2 * b) + 2 * a;
}

bool kahler_positivity_feasible(long long a1, long long b1, long long a2,
                                long long b2) {
  // Linear form s*t + u*x on the open quadrant t, x > 0 is somewhere
  // positive iff s > 0 or u > 0. Both forms must be positive at a common
  // point; for two forms the only obstruction beyond individual positivity
  // is the mixed case where each is positive on opposite sides of the
  // other's zero line.
  auto somewhere_positive = [](long long s, long long u) {
    return s > 0 || u > 0;
  };
  if (!somewhere_positive(a1, b1) || !somewhere_positive(a2, b2)) return false;
  // If either form is non-negative on the whole quadrant wherever the other
  // is positive, done. The only delicate case: coefficients of mixed sign
  // in opposite patterns, where feasibility reduces to comparing the slopes
  // of the two zero lines.
  const bool mixed1 = (a1 > 0) != (b1 > 0);
  const bool mixed2 = (a2 > 0) != (b2 > 0);
  if (!mixed1 || !mixed2) return true;
  if ((a1 > 0) == (a2 > 0)) return true;  // positive half-planes nested
  // Opposite orientations: need a point between the two zero lines.
  // Form i vanishes on t/x = -b_i/a_i. Exact cross-multiplied comparison,
  // arranged so the strict inequality is the feasibility condition.
  if (a1 > 0) {
    // form1 positive for t/x > -b1/a1, form2 positive for t/x < -b2/a2.
    return Int(-b1) * a2 > Int(-b2) * a1;  // dividing by a1>0, a2<0 flips once
  }
  return Int(-b2) * a1 > Int(-b1) * a2;
}

std::vector<TorusPairCandidate> exhaustive_search(const SearchOptions& opts) {
  std::vector<TorusPairCandidate> hits;
  const long long A = opts.coefficient_bound;
  for (long long n = 0; n <= opts.n_bound; ++n) {
    for (long long a = -A; a <= 1; ++a) {  // normalized: a <= 1 <= 2-a
      for (long long b = -A; b <= A; ++b) {
        TorusPairCandidate cand{n, a, b};
        if (relation_polynomial(cand) != 0) continue;
        // Adjunction genus 1 for both classes.
        const long long a2 = 2 - a, b2 = n + 2 - b;
        auto genus_one = [n](long long x, long long y) {
          // D^2 + K.D = (-n x^2 + 2 x y) + (-2 y - (n+2) x + 2 n x)
          const Int self = Int(-n) * x * x + Int(2) * x * y;
          const Int kd = Int(n - 2) * x - Int(2) * y;
          return self + kd == 0;
        };
        if (!genus_one(a, b) || !genus_one(a2, b2)) continue;
        // Disjointness, directly.
        if (Int(-n) * a * a2 + Int(a) * b2 + Int(b) * a2 != 0) continue;
        // Q-spanning: the two classes must be independent.
        if (Int(a) * b2 - Int(b) * a2 == 0) continue;
        if (opts.apply_positivity) {
          // Kahler classes are w = x sigma + y f with x > 0, y > n x.
          // Writing t = y - n x > 0: w.(p sigma + q f) = p t + q x.
          if (!kahler_positivity_feasible(a, b, a2, b2)) continue;
        }
        hits.push_back(cand);
      }
    }
  }
  return hits;
}

}  // namespace orbicalc
