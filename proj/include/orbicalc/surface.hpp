#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbicalc/matrix.hpp"

namespace orbicalc {

/// Named integer class in the surface basis, with its (adjunction-checked)
/// genus.
struct CurveClass {
  std::string name;
  IntVec vec;
  Int genus;
};

/// Which section of the Hirzebruch surface H_n serves as the basis class
/// sigma: the zero section with sigma^2 = +n, or the one with sigma^2 = -n.
enum class HirzebruchConvention { PositiveSection, NegativeSection };

struct BlowUpSpec {
  std::string exceptional_name;
  /// Curve classes passing through the blown-up point, each with
  /// multiplicity 1, transverse. Listing the previous exceptional curve
  /// declares an infinitely-near point.
  std::vector<std::string> through;
};

/// Smooth surface as an intersection lattice: unimodular Gram matrix on a
/// chosen basis of H^2, canonical class, and named curve classes.
class SurfaceModel {
 public:
  static SurfaceModel projective_plane();
  static SurfaceModel hirzebruch(const Int& n, HirzebruchConvention conv);
  static SurfaceModel from_lattice(IntMatrix gram, IntVec canonical,
                                   std::vector<std::string> basis_labels);

  const IntMatrix& gram() const { return gram_; }
  const IntVec& canonical() const { return canonical_; }
  const std::vector<std::string>& basis_labels() const { return basis_labels_; }
  const std::vector<CurveClass>& curves() const { return curves_; }
  std::size_t rank() const { return gram_.rows(); }

  const CurveClass& curve(const std::string& name) const;
  bool has_curve(const std::string& name) const;

  Int pair(const IntVec& v, const IntVec& w) const;
  Int self_intersection(const IntVec& v) const { return pair(v, v); }
  Int k_dot(const IntVec& v) const { return pair(canonical_, v); }
  Int k_squared() const { return pair(canonical_, canonical_); }

  /// 1 + (v^2 + K.v)/2; throws NonIntegralGenus on parity failure.
  Int adjunction_genus(const IntVec& v) const;

  /// Registers a named class after checking the adjunction identity against
  /// the declared genus. Zero classes are rejected as non-representable.
  void add_curve(const std::string& name, IntVec vec, const Int& genus);

  /// Lattice blow-up: rank grows by one, E^2 = -1, K <- K + E, and every
  /// incident class C <- C - E. The exceptional class is stored as a genus-0
  /// curve under spec.exceptional_name.
  SurfaceModel blow_up(const BlowUpSpec& spec) const;

  /// Inverse of a final blow-up: contracts a stored (-1)-curve whose class
  /// is a pure basis vector, projecting all classes onto its complement.
  SurfaceModel blow_down(const std::string& curve_name) const;

 private:
  SurfaceModel() = default;

  IntMatrix gram_;
  IntVec canonical_;
  std::vector<std::string> basis_labels_;
  std::vector<CurveClass> curves_;
};

enum class KodairaDim { MinusInfinity, Zero, One, Two };

std::string to_string(KodairaDim k);

/// Def-5.1 sign table; signs are -1/0/+1. Combinations outside the table
/// throw UndefinedCase.
KodairaDim kodaira_dimension(int sign_k_dot_omega, int sign_k_squared);

/// Degree of multiplication by k on the degree-0 divisor group of an
/// elliptic curve: k^2 (81 preimages for k = 9).
Int multiplication_degree(const Int& k);

}  // namespace orbicalc
