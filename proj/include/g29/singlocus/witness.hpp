#pragma once

#include "g29/exactfield/extension.hpp"
#include "g29/refgroup/projective.hpp"
#include "g29/singlocus/surface.hpp"

#include <array>
#include <string>
#include <vector>

namespace g29 {

/// Rational hyperplane a.v = 0 of P^3. The last coordinate with a nonzero
/// coefficient is solved for; the other three (in order) are the slice
/// coordinates u0, u1, u2.
struct Slice {
  std::array<Rational, 4> a;

  static Slice coordinate(int k);  // x_k = 0
  int pivot() const;
  std::array<int, 3> free_coordinates() const;
  bool contains(const ProjectivePoint& p) const;
  std::string to_string() const;
  friend bool operator==(const Slice& s, const Slice& t) { return s.a == t.a; }
};

/// One Galois class (over the surface field K) of singular points on a slice.
/// Chart 0: u0 = 1 and factor(u2 + shift*u1) = 0, where w = u2 + shift*u1
/// separates the singular points of the chart.
/// Chart 1: u0 = 0, u1 = 1, factor(u2) = 0. Chart 2: the point u = [0 : 0 : 1].
struct WitnessClass {
  Slice slice;
  int chart = 0;
  int shift = 0;
  UPolyK factor;  // monic irreducible over K
  ProjectivePoint point;       // representative in `field`
  FieldPtr field;
  FieldEmbedding embedding;    // K -> field
  int size() const { return factor.degree(); }
};

/// All singular points of Z(F) on the slice, one representative per Galois class.
/// Throws std::domain_error when the singular locus meets the slice in a curve.
std::vector<WitnessClass> witness_points(const SurfaceSpec& s, const Slice& slice, const GBBudget& budget = {});
std::vector<WitnessClass> witness_points_t0(const SurfaceSpec& s, const GBBudget& budget = {});

/// True when the singular point p (coordinates in a field M reached from K by
/// `k_to_m`) lies in the class. Only meaningful for singular points.
bool in_class(const WitnessClass& c, const ProjectivePoint& p, const FieldEmbedding& k_to_m);

/// Chart index (0, 1, 2 as above) of a point on the slice; -1 when off the slice.
int chart_on_slice(const Slice& s, const ProjectivePoint& p);

}  // namespace g29
