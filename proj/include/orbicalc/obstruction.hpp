#pragma once

#include <string>
#include <vector>

#include "orbicalc/matrix.hpp"

namespace orbicalc {

/// Candidate pair of disjoint torus classes on the Hirzebruch surface H_n in
/// the sigma^2 = -n convention: D1 = a sigma + b f, D2 = -K - D1.
struct TorusPairCandidate {
  long long n;
  long long a;
  long long b;
  bool operator==(const TorusPairCandidate&) const = default;
};

/// Symbolic verification that D1.D2 = 0 plus the genus-1 adjunctions force
/// K + D1 + D2 = 0 on H_n.
struct SumRelationCheck {
  long long n;
  bool identity_d1 = false;  // (K+D1+D2).D1 reduces to the declared relations
  bool identity_d2 = false;
  bool spanning_declared = false;
  /// The relation K + D1 + D2 = 0 follows only when D1, D2 span over Q.
  bool concluded() const { return identity_d1 && identity_d2 && spanning_declared; }
};

SumRelationCheck derive_sum_relation(long long n, bool spanning_declared = true);

/// (a-1)(a n - 2 b) + 2 a; zero iff the disjointness relation holds for the
/// normalized candidate.
Int relation_polynomial(const TorusPairCandidate& c);

struct SearchOptions {
  long long coefficient_bound = 100;  // |a|, |b| <= bound
  long long n_bound = 100;            // 0 <= n <= n_bound
  bool apply_positivity = true;       // exact Kahler-cone sign test
};

/// Exhaustive scan over normalized candidates (a <= 1, so D1 carries the
/// smaller sigma-coefficient). Keeps those passing the disjointness
/// relation, both genus-1 adjunctions, Q-spanning and, unless disabled, the
/// existence of a Kahler class pairing positively with both classes.
std::vector<TorusPairCandidate> exhaustive_search(const SearchOptions& opts);

/// Exact feasibility of a1*t + b1*x > 0 and a2*t + b2*x > 0 for some
/// t, x > 0 (t = y - n x parametrizes the open Kahler cone).
bool kahler_positivity_feasible(long long a1, long long b1, long long a2, long long b2);

}  // namespace orbicalc
