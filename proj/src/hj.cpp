#include "orbicalc/hj.hpp"

namespace orbicalc {

CyclicSingularity::CyclicSingularity(Int m_, Int r_) : m(std::move(m_)), r(std::move(r_)) {
  if (!(r > 0 && r < m))
    throw InvalidSingularity("cyclic singularity needs 0 < r < m");
  if (gcd(m, r) != 1)
    throw InvalidSingularity("cyclic singularity needs gcd(r, m) = 1");
}

HJChain hj_expand(const CyclicSingularity& s) {
  HJChain chain;
  Int m = s.m, r = s.r;
  while (r > 0) {
    // b = ceil(m/r); then m/r = b - 1/(r/r') with r' = b*r - m, 0 <= r' < r.
    Int b = (m + r - 1) / r;
    chain.b.push_back(b);
    Int next = b * r - m;
    m = r;
    r = next;
  }
  return chain;
}

Rat hj_eval(const HJChain& c, bool relaxed) {
  if (c.b.empty()) throw InvalidChainEntry("cannot evaluate an empty chain");
  const Int floor = relaxed ? 1 : 2;
  for (const Int& b : c.b)
    if (b < floor) throw InvalidChainEntry("chain entry below " + floor.str());
  Rat val = c.b.back();
  for (std::size_t i = c.b.size() - 1; i-- > 0;) {
    if (val == 0) throw DivisionByZero("trailing sub-fraction evaluates to 0");
    val = Rat(c.b[i]) - 1 / val;
  }
  return val;
}

HJChain hj_dual(const CyclicSingularity& s) {
  return hj_expand(CyclicSingularity(s.m, s.m - s.r));
}

CyclicSingularity chain_recognize(const HJChain& c) {
  if (c.b.empty()) throw InvalidChainEntry("cannot evaluate an empty chain");
  for (const Int& b : c.b)
    if (b < 2) throw InvalidChainEntry("chain entry below 2");
  // Integer continuant for b1 - 1/(b2 - 1/(...)) = m/r, back to front.
  Int m = c.b.back(), r = 1;
  for (std::size_t i = c.b.size() - 1; i-- > 0;) {
    Int next = c.b[i] * m - r;
    r = m;
    m = next;
  }
  return CyclicSingularity(m, r);
}

}  // namespace orbicalc
