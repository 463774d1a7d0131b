#pragma once

#include "g29/localsing/local.hpp"
#include "g29/singlocus/surface.hpp"
#include "g29/singlocus/witness.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace g29 {

enum class CertStatus { Success, Incomplete, BudgetExceeded, PositiveDimensional, NotSquarefree };
std::string to_string(CertStatus s);
CertStatus parse_status(const std::string& s);

/// Galois class of witness points as recorded in a certificate.
struct ClassEntry {
  Slice slice;
  int chart = 0;
  int shift = 0;
  UPolyK factor;
};

/// One Galois-closed union of G-orbits: `galois_orbits` conjugate orbits of
/// `orbit_size` points each, all analytically alike.
struct OrbitEntry {
  ProjectivePoint point;  // representative, coordinates in `field`
  FieldPtr field;         // contains K and i
  AlgNum k_image;         // image of K's generator in `field`
  AlgNum i_image;         // image of i in `field`
  std::size_t orbit_size = 0;
  std::size_t galois_orbits = 0;
  std::size_t slice_points = 0;  // orbit points on the representative's slice
  std::vector<int> classes;      // indices into Certificate::classes touched by the orbit
  SingularityRecord record;

  std::size_t points() const { return orbit_size * galois_orbits; }
};

struct LineEntry {
  ProjectiveLine line;
  std::size_t orbit_size = 0;
};

struct Certificate {
  std::string surface_id;
  AlgNum lambda, mu;
  FieldPtr field;
  Poly F{Ring::make({"x", "y", "z", "t"})};
  int dimension = -1;
  std::optional<std::int64_t> jacobian_degree;  // upper bound unless jacobian_exact
  bool jacobian_exact = false;
  std::string method;
  std::uint64_t prime = 0, generator_image = 0;
  std::vector<ClassEntry> classes;
  std::vector<OrbitEntry> orbits;
  std::int64_t tjurina_sum = 0;
  std::vector<LineEntry> lines;
  CertStatus status = CertStatus::Incomplete;
  std::string note;

  std::size_t singular_points() const;
  int max_field_degree() const;
  /// Number of singular points per type label, e.g. {"A2": 320}.
  std::map<std::string, std::size_t> profile() const;
};

struct CertifyOptions {
  bool exact_jacobian = false;  // exact grevlex basis besides the modular bound
  GBBudget budget;
  std::vector<Slice> slices{Slice::coordinate(3), Slice::coordinate(0), Slice::coordinate(1), Slice::coordinate(2)};
  int local_degree_cap = 40;
};

/// F lies in the span of f3, f2 f1, f1^3, the invariants of degree 12.
bool is_g29_invariant_dodecic(const Poly& F);

/// Singular locus of Z(F) with a completeness proof. The modular Jacobian
/// scheme bounds dimension and degree from above; witness orbits times local
/// Tjurina numbers bound the degree from below. SUCCESS when the two meet.
/// Throws std::invalid_argument unless F is a G29-invariant dodecic.
Certificate certify_surface(const SurfaceSpec& s, const CertifyOptions& opt = {});

/// Q(i) -> field, for moving group matrices next to a point.
FieldEmbedding gaussian_embedding(const FieldPtr& field, const AlgNum& i_image);

}  // namespace g29
