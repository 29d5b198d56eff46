#include "orbicalc/orbifold.hpp"

#include <algorithm>
#include <functional>

namespace orbicalc {

std::size_t OrbifoldSurface::curve_index(const std::string& name) const {
  for (std::size_t i = 0; i < curves_.size(); ++i)
    if (curves_[i].name == name) return i;
  throw UnknownDivisor("unknown surviving curve: " + name);
}

const CurveClass& OrbifoldSurface::curve(const std::string& name) const {
  return curves_[curve_index(name)];
}

Rat OrbifoldSurface::pair(const std::string& a, const std::string& b) const {
  return gram_q_.at(curve_index(a), curve_index(b));
}

Rat OrbifoldSurface::k_pair(const std::string& a) const { return k_pair_[curve_index(a)]; }

void OrbifoldSurface::declare_intersection(const std::string& a, const std::string& b) {
  curve_index(a);
  curve_index(b);
  declared_intersections_.emplace_back(a, b);
}

namespace detail {

// Private access for the contraction kernel below.
struct OrbifoldBuilder {
  OrbifoldSurface out;
  std::vector<CurveClass>& curves() { return out.curves_; }
  RatMatrix& gram_q() { return out.gram_q_; }
  RatVec& k_pair() { return out.k_pair_; }
  std::size_t& b2() { return out.b2_; }
  std::vector<SingularPointRecord>& points() { return out.points_; }
  std::vector<std::pair<std::string, std::string>>& declared() {
    return out.declared_intersections_;
  }
};

}  // namespace detail

namespace {

struct ContractionInput {
  const std::vector<CurveClass>* curves;
  std::function<Rat(std::size_t, std::size_t)> pair;
  std::function<Rat(std::size_t)> k_pair;
  std::size_t rank;
};

Int as_int(const Rat& q, const char* what) {
  if (denominator(q) != 1) throw NotAChain(std::string(what) + " is not an integer");
  return numerator(q);
}

void check_negative_definite(const IntMatrix& g) {
  // Symmetric g is negative definite iff the leading principal minors
  // alternate sign starting negative.
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    IntMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = g.at(i, j);
    Int d = det(lead);
    bool ok = (k % 2 == 1) ? d < 0 : d > 0;
    if (!ok) throw NotNegativeDefinite("chain Gram matrix is not negative definite");
  }
}

OrbifoldSurface contract_impl(const ContractionInput& in,
                              const std::vector<std::string>& chain,
                              const std::vector<SingularPointRecord>& prior_points,
                              const std::vector<std::pair<std::string, std::string>>&
                                  prior_declared) {
  const auto& curves = *in.curves;
  if (chain.empty()) throw NotAChain("empty chain");

  std::vector<std::size_t> idx;
  for (const auto& name : chain) {
    auto it = std::find_if(curves.begin(), curves.end(),
                           [&](const CurveClass& c) { return c.name == name; });
    if (it == curves.end()) throw NotAChain("chain names unknown curve: " + name);
    std::size_t i = static_cast<std::size_t>(it - curves.begin());
    if (std::find(idx.begin(), idx.end(), i) != idx.end())
      throw NotAChain("chain repeats curve: " + name);
    idx.push_back(i);
  }
  const std::size_t l = idx.size();

  // Chain shape: self-intersections <= -2, consecutive intersections 1,
  // everything else 0.
  IntMatrix g(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      g.at(i, j) = as_int(in.pair(idx[i], idx[j]), "chain pairing");
      if (i == j) {
        if (g.at(i, j) > -2) throw NotAChain("chain curve " + chain[i] + " has square > -2");
      } else if (i + 1 == j || j + 1 == i) {
        if (g.at(i, j) != 1) throw NotAChain("consecutive chain curves must meet once");
      } else if (g.at(i, j) != 0) {
        throw NotAChain("non-consecutive chain curves must be disjoint");
      }
    }
  check_negative_definite(g);

  std::vector<Int> b(l);
  for (std::size_t i = 0; i < l; ++i) b[i] = -g.at(i, i);

  // Both orientations name the same singularity with action weights r and
  // r^{-1} mod m; canonicalize to the smaller weight.
  HJChain forward{b};
  HJChain backward{std::vector<Int>(b.rbegin(), b.rend())};
  CyclicSingularity s_fwd = chain_recognize(forward);
  CyclicSingularity s_bwd = chain_recognize(backward);
  bool reversed = s_bwd.r < s_fwd.r;
  if (reversed) {
    std::reverse(idx.begin(), idx.end());
    std::reverse(b.begin(), b.end());
    IntMatrix g2(l, l);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) g2.at(i, j) = g.at(l - 1 - i, l - 1 - j);
    g = g2;
  }
  CyclicSingularity sing = reversed ? s_bwd : s_fwd;

  RatMatrix ginv = invert(g);

  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) survivors.push_back(i);

  // Incidence vectors; surviving curves may only meet a tail of the chain,
  // transversally, once.
  std::vector<RatVec> u(survivors.size(), RatVec(l));
  std::vector<ChainIncidence> incidences;
  for (std::size_t a = 0; a < survivors.size(); ++a) {
    std::size_t hits = 0, hit_pos = 0;
    for (std::size_t j = 0; j < l; ++j) {
      u[a][j] = in.pair(survivors[a], idx[j]);
      if (u[a][j] == 0) continue;
      hits++;
      hit_pos = j;
      if (u[a][j] != 1)
        throw InvalidIncidence("curve " + curves[survivors[a]].name +
                               " must meet the chain transversally once");
    }
    if (hits > 1)
      throw InvalidIncidence("curve " + curves[survivors[a]].name +
                             " meets the chain more than once");
    if (hits == 1) {
      if (hit_pos != 0 && hit_pos != l - 1)
        throw InvalidIncidence("curve " + curves[survivors[a]].name +
                               " must meet a tail of the chain");
      incidences.push_back({curves[survivors[a]].name, hit_pos});
    }
  }

  auto correction = [&](const RatVec& x, const RatVec& y) {
    Rat s = 0;
    for (std::size_t i = 0; i < l; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < l; ++j) s += x[i] * ginv.at(i, j) * y[j];
    }
    return s;
  };

  detail::OrbifoldBuilder out;
  out.b2() = in.rank - l;
  out.gram_q() = RatMatrix(survivors.size(), survivors.size());
  out.k_pair().resize(survivors.size());

  RatVec u_k(l);
  for (std::size_t j = 0; j < l; ++j) u_k[j] = in.k_pair(idx[j]);

  for (std::size_t a = 0; a < survivors.size(); ++a) {
    out.curves().push_back(curves[survivors[a]]);
    out.k_pair()[a] = in.k_pair(survivors[a]) - correction(u_k, u[a]);
    for (std::size_t c = 0; c < survivors.size(); ++c)
      out.gram_q().at(a, c) = in.pair(survivors[a], survivors[c]) - correction(u[a], u[c]);
  }

  out.points() = prior_points;
  out.points().push_back({sing, b, incidences, sing.m});
  out.declared() = prior_declared;
  return out.out;
}

}  // namespace

OrbifoldSurface contract_chain(const SurfaceModel& s, const std::vector<std::string>& chain) {
  ContractionInput in;
  in.curves = &s.curves();
  in.pair = [&](std::size_t i, std::size_t j) {
    return Rat(s.pair(s.curves()[i].vec, s.curves()[j].vec));
  };
  in.k_pair = [&](std::size_t i) { return Rat(s.k_dot(s.curves()[i].vec)); };
  in.rank = s.rank();
  return contract_impl(in, chain, {}, {});
}

OrbifoldSurface contract_chain(const OrbifoldSurface& s, const std::vector<std::string>& chain) {
  for (const auto& name : chain)
    for (const auto& pt : s.singular_points())
      for (const auto& inc : pt.incidences)
        if (inc.curve == name)
          throw ChainTouchesSingularPoint("chain curve " + name +
                                          " passes through an existing singular point");
  ContractionInput in;
  in.curves = &s.curves();
  in.pair = [&](std::size_t i, std::size_t j) { return s.gram_q().at(i, j); };
  in.k_pair = [&](std::size_t i) { return s.canonical_pairings()[i]; };
  in.rank = s.b2();
  return contract_impl(in, chain, s.singular_points(), s.declared_intersections());
}

OrbifoldSurface assign_isotropy(const OrbifoldSurface& x, const std::vector<IsotropyData>& data) {
  OrbifoldSurface out = x;
  for (const auto& d : data) {
    if (d.multiplicity <= 1)
      throw MultiplicityNotGreaterThanOne("isotropy multiplicity on " + d.divisor +
                                          " must exceed 1");
    x.curve_index(d.divisor);
    for (const auto& prev : out.isotropy_)
      if (prev.divisor == d.divisor)
        throw UnknownDivisor("isotropy assigned twice to " + d.divisor);
    out.isotropy_.push_back(d);
  }

  auto intersects = [&](const std::string& a, const std::string& b) {
    if (x.pair(a, b) != 0) return true;
    for (const auto& [p, q] : x.declared_intersections())
      if ((p == a && q == b) || (p == b && q == a)) return true;
    return false;
  };
  for (std::size_t i = 0; i < out.isotropy_.size(); ++i)
    for (std::size_t j = i + 1; j < out.isotropy_.size(); ++j) {
      const auto& a = out.isotropy_[i];
      const auto& b = out.isotropy_[j];
      if (intersects(a.divisor, b.divisor) && gcd(a.multiplicity, b.multiplicity) != 1)
        throw CoprimalityViolation("intersecting divisors " + a.divisor + " and " + b.divisor +
                                   " have non-coprime multiplicities " +
                                   a.multiplicity.str() + ", " + b.multiplicity.str());
    }

  // m = d(x) * prod_{i in I_x} m_i over the divisors through each point.
  for (auto& pt : out.points_) {
    pt.multiplicity = pt.singularity.m;
    for (const auto& inc : pt.incidences)
      for (const auto& iso : out.isotropy_)
        if (iso.divisor == inc.curve) pt.multiplicity *= iso.multiplicity;
  }
  return out;
}

bool is_calabi_yau(const OrbifoldSurface& x) {
  for (std::size_t j = 0; j < x.curves().size(); ++j) {
    Rat val = x.canonical_pairings()[j];
    for (const auto& iso : x.isotropy()) {
      std::size_t i = x.curve_index(iso.divisor);
      val += (1 - Rat(1, iso.multiplicity)) * x.gram_q().at(i, j);
    }
    if (val != 0) return false;
  }
  return true;
}

RatMatrix resolve_gram(const OrbifoldSurface& x, std::size_t point_index) {
  const auto& pt = x.singular_points().at(point_index);
  const std::size_t l = pt.chain_b.size();
  const std::size_t n = x.curves().size();

  IntMatrix g(l, l);
  for (std::size_t i = 0; i < l; ++i) {
    g.at(i, i) = -pt.chain_b[i];
    if (i + 1 < l) g.at(i, i + 1) = g.at(i + 1, i) = 1;
  }
  RatMatrix ginv = invert(g);

  std::vector<RatVec> u(n, RatVec(l));
  for (const auto& inc : pt.incidences) u[x.curve_index(inc.curve)][inc.position] = 1;

  RatMatrix out(l + n, l + n);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) out.at(i, j) = Rat(g.at(i, j));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < l; ++j)
      out.at(l + a, j) = out.at(j, l + a) = u[a][j];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      Rat corr = 0;
      for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) corr += u[a][i] * ginv.at(i, j) * u[c][j];
      out.at(l + a, l + c) = x.gram_q().at(a, c) + corr;
    }
  return out;
}

}  // namespace orbicalc
