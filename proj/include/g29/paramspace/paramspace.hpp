#pragma once

#include "g29/exactfield/extension.hpp"
#include "g29/groebner/groebner.hpp"
#include "g29/singlocus/certificate.hpp"
#include "g29/singlocus/surface.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace g29 {

/// Ring Q(i)[l, m] of the parameter plane (l = lambda, m = mu).
RingPtr parameter_ring();

SurfaceSpec pencil(const std::string& id, const AlgNum& lambda, const AlgNum& mu);

struct PlaneCurve {
  std::string name;  // "L1", ..., "L5+", "L5-", "A", "B"
  Poly poly;         // in parameter_ring()
  int degree() const { return poly.total_degree(); }
};

/// L1, L2, L3, L4, L5+, L5-, A, B in that order.
const std::vector<PlaneCurve>& curve_registry();
const PlaneCurve& curve(const std::string& name);

/// A point of the plane with coordinates in `field`. When the point came out
/// of a computation over Q(i), `gaussian` fixes where i goes; otherwise any
/// embedding of Q(i) next to `field` is used.
struct ParameterPoint {
  std::string name;
  AlgNum lambda, mu;
  FieldPtr field;
  std::optional<FieldEmbedding> gaussian;  // Q(i) -> field

  static ParameterPoint make(std::string name, const std::string& lambda, const std::string& mu,
                             const FieldPtr& field);
};

AlgNum evaluate_at(const PlaneCurve& c, const ParameterPoint& p);
bool on_curve(const ParameterPoint& p, const PlaneCurve& c);
/// Names of the registry curves through p.
std::vector<std::string> curves_through(const ParameterPoint& p);

/// Galois class over Q(i) of points of the plane; `size` conjugates.
struct PointClass {
  ParameterPoint point;
  int size = 1;
};

/// Zeros of a zero-dimensional system in l, m, one representative per class.
std::vector<PointClass> solve_plane_system(const std::vector<Poly>& gens);

/// Common zeros of C and its two partials.
std::vector<PointClass> plane_curve_singular_points(const PlaneCurve& c);

/// Length of the local algebra of (C1, C2) at p. Throws std::invalid_argument
/// when p is off one of the curves, NonIsolated when they share a component.
int intersection_multiplicity(const PlaneCurve& c1, const PlaneCurve& c2, const ParameterPoint& p);
int intersection_multiplicity(const Poly& c1, const Poly& c2, const ParameterPoint& p);

/// A point lying on two or more registry curves.
struct IntersectionClass {
  PointClass cls;
  std::vector<std::string> curves;
  int multiplicity = 0;  // of the first two curves; meaningful when exactly two
  bool transversal() const { return curves.size() == 2 && multiplicity == 1; }
};

/// All points on at least two registry curves. Each is taken from the pair of
/// the two first curves through it, so no point is listed twice.
std::vector<IntersectionClass> pairwise_intersections();

struct IntersectionSummary {
  std::size_t points = 0, transversal = 0;
};
IntersectionSummary summarize(const std::vector<IntersectionClass>& v);

/// Expected singularities of a pencil member.
struct ExpectedProfile {
  std::map<std::string, std::size_t> types;  // {"A1": 160, "T444": 20}
  std::vector<std::size_t> orbit_sizes;      // sorted, empty when not stated
  std::int64_t tjurina_degree = 0;
  int dimension = 0;       // 1 for the surface with singular lines
  std::size_t lines = 0;   // number of singular lines when dimension 1
  std::array<int, 3> record{0, 0, 0};  // (mult, mu, tau) when a single unnamed type
  std::optional<bool> tangent_cone_smooth;
};

/// What a certificate says, in the terms of ExpectedProfile.
struct CertifiedProfile {
  CertStatus status = CertStatus::Incomplete;
  std::map<std::string, std::size_t> types;
  std::vector<std::size_t> orbit_sizes;  // one entry per G-orbit, sorted
  std::optional<std::int64_t> tjurina_degree;
  std::size_t lines = 0;
  std::vector<std::array<int, 3>> records;  // (mult, mu, tau) per orbit
  std::vector<std::optional<bool>> tangent_cone_smooth;
};
CertifiedProfile certified_profile(const Certificate& c);

struct DistinguishedPoint {
  ParameterPoint point;
  std::string surface;  // name used for the surface, e.g. "club", "generic-A"
  ExpectedProfile expected;
  std::vector<std::string> stated_curves;  // curves containing the point as stated
  bool generic_sample = false;
};

/// Named special parameters followed by one generic sample per curve.
const std::vector<DistinguishedPoint>& distinguished_points();
const DistinguishedPoint& distinguished(const std::string& surface);

/// True when the curves computed through p differ from the stated ones.
bool membership_discrepancy(const DistinguishedPoint& d);

/// Human-readable differences between a certificate and an expected profile;
/// empty when they agree. A certificate that is not SUCCESS (or
/// POSITIVE_DIMENSIONAL where a line locus is expected) always differs.
std::vector<std::string> profile_mismatches(const CertifiedProfile& c, const ExpectedProfile& e);
std::vector<std::string> profile_mismatches(const Certificate& c, const ExpectedProfile& e);

/// "160 A1 + 20 T444", "30 singular lines", or the status when not SUCCESS.
std::string describe(const ExpectedProfile& e);
std::string describe(const CertifiedProfile& c);

/// [x:y:z:t] -> [x^k:y^k:z^k:t^k] pulled back: every variable to its k-th power.
Poly lift(const Poly& F, int k);

struct LiftCount {
  int k = 1;
  std::size_t literal = 0;  // preimages of the singular points in the given coordinates
  std::size_t general = 0;  // same after the change of coordinates below
  std::array<std::array<Rational, 4>, 4> change;  // rows: new coordinates y = change * x
  bool all_nonzero = false;  // every transformed point has four nonzero coordinates
};

/// Preimage count of the certified singular points under the k-th power map.
/// A point with n nonzero coordinates has k^(n-1) preimages, each of the same
/// analytic type since the map is étale there when n = 4.
LiftCount lift_count(const Certificate& c, int k);

/// F(change^-1 y), the equation in the coordinates chosen by lift_count.
Poly change_coordinates(const Poly& F, const std::array<std::array<Rational, 4>, 4>& change);

/// Elimination of x, y, z from the t = 0 singular system of the generic
/// member; the generator is the product of the curves met so far. Budgeted.
struct DiscoveryResult {
  bool complete = false;
  std::optional<Poly> generator;  // in parameter_ring()
  std::map<std::string, bool> divisible;
  std::string note;
};
DiscoveryResult discover_curves_t0(const GBBudget& budget);

}  // namespace g29
