#include "orbicalc/surface.hpp"

#include <algorithm>

namespace orbicalc {

SurfaceModel SurfaceModel::projective_plane() {
  SurfaceModel s;
  s.gram_ = IntMatrix{{1}};
  s.canonical_ = {-3};
  s.basis_labels_ = {"H"};
  return s;
}

SurfaceModel SurfaceModel::hirzebruch(const Int& n, HirzebruchConvention conv) {
  if (n < 0) throw Error("Hirzebruch index must be >= 0");
  SurfaceModel s;
  s.basis_labels_ = {"s", "f"};
  if (conv == HirzebruchConvention::NegativeSection) {
    // sigma^2 = -n, sigma.f = 1, f^2 = 0; K = -2 sigma - (n+2) f.
    s.gram_ = IntMatrix{{-n, 1}, {1, 0}};
    s.canonical_ = {-2, -(n + 2)};
  } else {
    // sigma^2 = +n; then K = -2 sigma + (n-2) f.
    s.gram_ = IntMatrix{{n, 1}, {1, 0}};
    s.canonical_ = {-2, n - 2};
  }
  return s;
}

SurfaceModel SurfaceModel::from_lattice(IntMatrix gram, IntVec canonical,
                                        std::vector<std::string> basis_labels) {
  if (!gram.is_symmetric()) throw Error("surface Gram matrix must be symmetric");
  if (gram.rows() != canonical.size() || gram.rows() != basis_labels.size())
    throw DimensionMismatch("surface lattice: shape mismatch");
  Int d = det(gram);
  if (d != 1 && d != -1)
    throw Error("surface Gram matrix must be unimodular, det = " + d.str());
  SurfaceModel s;
  s.gram_ = std::move(gram);
  s.canonical_ = std::move(canonical);
  s.basis_labels_ = std::move(basis_labels);
  return s;
}

const CurveClass& SurfaceModel::curve(const std::string& name) const {
  for (const auto& c : curves_)
    if (c.name == name) return c;
  throw InvalidIncidence("unknown curve class: " + name);
}

bool SurfaceModel::has_curve(const std::string& name) const {
  return std::any_of(curves_.begin(), curves_.end(),
                     [&](const CurveClass& c) { return c.name == name; });
}

Int SurfaceModel::pair(const IntVec& v, const IntVec& w) const {
  if (v.size() != rank() || w.size() != rank())
    throw DimensionMismatch("pairing: vector not in surface basis");
  Int s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) s += v[i] * gram_.at(i, j) * w[j];
  }
  return s;
}

Int SurfaceModel::adjunction_genus(const IntVec& v) const {
  Int q = self_intersection(v) + k_dot(v);
  if (q % 2 != 0)
    throw NonIntegralGenus("v^2 + K.v is odd; adjunction genus undefined");
  return 1 + q / 2;
}

void SurfaceModel::add_curve(const std::string& name, IntVec vec, const Int& genus) {
  if (has_curve(name)) throw InvalidIncidence("duplicate curve name: " + name);
  if (is_zero(vec)) throw NonRepresentableClass("zero class is not a curve: " + name);
  Int g = adjunction_genus(vec);
  if (g != genus)
    throw AdjunctionViolation("curve " + name + ": declared genus " + genus.str() +
                              " but adjunction gives " + g.str());
  if (g < 0)
    throw NonRepresentableClass("curve " + name + " has negative adjunction genus");
  curves_.push_back({name, std::move(vec), genus});
}

SurfaceModel SurfaceModel::blow_up(const BlowUpSpec& spec) const {
  for (const auto& name : spec.through)
    if (!has_curve(name)) throw InvalidIncidence("blow-up through unknown class: " + name);
  if (has_curve(spec.exceptional_name))
    throw InvalidIncidence("exceptional name already in use: " + spec.exceptional_name);

  const std::size_t n = rank();
  SurfaceModel s;
  s.gram_ = IntMatrix(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.gram_.at(i, j) = gram_.at(i, j);
  s.gram_.at(n, n) = -1;

  s.basis_labels_ = basis_labels_;
  s.basis_labels_.push_back(spec.exceptional_name);

  s.canonical_ = canonical_;
  s.canonical_.push_back(1);  // K <- K + E

  for (const auto& c : curves_) {
    IntVec v = c.vec;
    bool incident =
        std::find(spec.through.begin(), spec.through.end(), c.name) != spec.through.end();
    v.push_back(incident ? Int(-1) : Int(0));
    // Genus is stable under blowing up a multiplicity-1 point on the curve.
    s.add_curve(c.name, std::move(v), c.genus);
  }
  IntVec e(n + 1);
  e[n] = 1;
  s.add_curve(spec.exceptional_name, std::move(e), 0);
  return s;
}

SurfaceModel SurfaceModel::blow_down(const std::string& curve_name) const {
  const CurveClass& c = curve(curve_name);
  if (self_intersection(c.vec) != -1 || c.genus != 0)
    throw InvalidIncidence("blow_down requires a rational (-1)-curve");
  // Only pure-basis exceptional classes contract; undo blow-ups in reverse.
  std::size_t k = rank();
  for (std::size_t i = 0; i < rank(); ++i) {
    if (c.vec[i] == 0) continue;
    if (c.vec[i] != 1 || k != rank()) throw InvalidIncidence("curve is not a basis exceptional class");
    k = i;
  }
  for (std::size_t j = 0; j < rank(); ++j)
    if (j != k && gram_.at(k, j) != 0)
      throw InvalidIncidence("exceptional basis class is not orthogonal to the rest");

  auto project = [&](const IntVec& v) {
    // v -> v + (v.E) E kills the E coordinate; remaining coordinates stay.
    IntVec w;
    w.reserve(rank() - 1);
    for (std::size_t i = 0; i < rank(); ++i)
      if (i != k) w.push_back(v[i]);
    return w;
  };

  SurfaceModel s;
  s.gram_ = IntMatrix(rank() - 1, rank() - 1);
  for (std::size_t i = 0, ii = 0; i < rank(); ++i) {
    if (i == k) continue;
    for (std::size_t j = 0, jj = 0; j < rank(); ++j) {
      if (j == k) continue;
      s.gram_.at(ii, jj) = gram_.at(i, j);
      ++jj;
    }
    ++ii;
  }
  s.canonical_ = project(canonical_);
  for (std::size_t i = 0; i < rank(); ++i)
    if (i != k) s.basis_labels_.push_back(basis_labels_[i]);
  for (const auto& cur : curves_) {
    if (cur.name == curve_name) continue;
    s.add_curve(cur.name, project(cur.vec), cur.genus);
  }
  return s;
}

std::string to_string(KodairaDim k) {
  switch (k) {
    case KodairaDim::MinusInfinity: return "-infinity";
    case KodairaDim::Zero: return "0";
    case KodairaDim::One: return "1";
    case KodairaDim::Two: return "2";
  }
  return "?";
}

KodairaDim kodaira_dimension(int sign_k_dot_omega, int sign_k_squared) {
  if (sign_k_dot_omega < 0 || sign_k_squared < 0) return KodairaDim::MinusInfinity;
  if (sign_k_dot_omega == 0 && sign_k_squared == 0) return KodairaDim::Zero;
  if (sign_k_dot_omega > 0 && sign_k_squared == 0) return KodairaDim::One;
  if (sign_k_dot_omega > 0 && sign_k_squared > 0) return KodairaDim::Two;
  // Only K.[omega] = 0, K^2 > 0 remains; the sign table does not cover it.
  throw UndefinedCase("Kodaira dimension undefined for K.[omega] = 0, K^2 > 0");
}

Int multiplication_degree(const Int& k) { return k * k; }

}  // namespace orbicalc
