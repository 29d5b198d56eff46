#pragma once

#include <string>
#include <vector>

#include "orbicalc/hj.hpp"
#include "orbicalc/matrix.hpp"
#include "orbicalc/surface.hpp"

namespace orbicalc {

/// A contracted chain: the cyclic singularity it produced, the chain data,
/// and which surviving curves pass through the point.
struct ChainIncidence {
  std::string curve;
  std::size_t position;  // index of the chain curve it meets (a tail)
};

struct SingularPointRecord {
  CyclicSingularity singularity;
  std::vector<Int> chain_b;  // canonical orientation
  std::vector<ChainIncidence> incidences;
  /// Total multiplicity d(x) * prod m_i over incident isotropy divisors;
  /// equals d(x) until isotropy is assigned.
  Int multiplicity;
};

/// Isotropy divisor assignment: multiplicity m > 1 on a surviving curve.
struct IsotropyData {
  std::string divisor;
  Int multiplicity;
};

namespace detail {
struct OrbifoldBuilder;
}

/// Surface with cyclic quotient singularities. The surviving named curves
/// serve as the (rational) basis; the orbifold pairing carries the
/// contraction correction v.w - u_v^T G^{-1} u_w.
class OrbifoldSurface {
 public:
  const std::vector<CurveClass>& curves() const { return curves_; }
  const RatMatrix& gram_q() const { return gram_q_; }
  const RatVec& canonical_pairings() const { return k_pair_; }
  std::size_t b2() const { return b2_; }
  const std::vector<SingularPointRecord>& singular_points() const { return points_; }
  const std::vector<IsotropyData>& isotropy() const { return isotropy_; }

  std::size_t curve_index(const std::string& name) const;
  const CurveClass& curve(const std::string& name) const;
  Rat pair(const std::string& a, const std::string& b) const;
  Rat k_pair(const std::string& a) const;

  /// curves whose names were declared to intersect even though the rational
  /// pairing vanishes (they can meet through singular points).
  const std::vector<std::pair<std::string, std::string>>& declared_intersections() const {
    return declared_intersections_;
  }
  void declare_intersection(const std::string& a, const std::string& b);

  friend OrbifoldSurface contract_chain(const SurfaceModel& s,
                                        const std::vector<std::string>& chain);
  friend OrbifoldSurface contract_chain(const OrbifoldSurface& s,
                                        const std::vector<std::string>& chain);
  friend OrbifoldSurface assign_isotropy(const OrbifoldSurface& x,
                                         const std::vector<IsotropyData>& data);
  friend struct detail::OrbifoldBuilder;

 private:
  std::vector<CurveClass> curves_;  // vectors kept in the original basis
  RatMatrix gram_q_;
  RatVec k_pair_;
  std::size_t b2_ = 0;
  std::vector<SingularPointRecord> points_;
  std::vector<IsotropyData> isotropy_;
  std::vector<std::pair<std::string, std::string>> declared_intersections_;
};

/// Contracts a chain of named curves (consecutive intersections 1, all
/// self-intersections <= -2, negative definite Gram) into a cyclic
/// singularity. Surviving curves must meet the chain at most once, at a
/// tail. The (m, r) label is canonicalized to the orientation with the
/// smaller action weight r.
OrbifoldSurface contract_chain(const SurfaceModel& s, const std::vector<std::string>& chain);

/// Second contraction on an already singular surface. The chain must have
/// integral pairings and stay clear of existing singular points.
OrbifoldSurface contract_chain(const OrbifoldSurface& s, const std::vector<std::string>& chain);

/// Records isotropy multiplicities m_i > 1 on surviving divisors, enforcing
/// gcd(m_i, m_j) = 1 on intersecting pairs, and updates singular-point
/// multiplicities m = d(x) * prod_{i in I_x} m_i.
OrbifoldSurface assign_isotropy(const OrbifoldSurface& x, const std::vector<IsotropyData>& data);

/// True iff K_X + sum (1 - 1/m_i) D_i pairs to zero with every surviving
/// basis class.
bool is_calabi_yau(const OrbifoldSurface& x);

/// Reconstructs the Gram matrix of the resolution at the given singular
/// point: basis ordered chain curves first, then the surviving curves.
/// Inverse to contract_chain on Gram data.
RatMatrix resolve_gram(const OrbifoldSurface& x, std::size_t point_index);

}  // namespace orbicalc
