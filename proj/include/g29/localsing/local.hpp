#pragma once

#include "g29/multipoly/poly.hpp"
#include "g29/refgroup/projective.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g29 {

struct NotOnSurface : std::invalid_argument {
  NotOnSurface() : std::invalid_argument("point does not lie on the surface") {}
};

/// The local algebra is not finite up to the degree cap.
struct NonIsolated : std::runtime_error {
  explicit NonIsolated(int cap)
      : std::runtime_error("local algebra not finite up to degree " + std::to_string(cap)) {}
};

/// Affine germ with g(0) = 0.
struct LocalGerm {
  Poly g;
  int chart = -1;  // homogeneous coordinate set to 1, -1 when built directly
};

LocalGerm germ_from_poly(Poly g);

/// Dehomogenize F at the first coordinate where p is nonzero and translate p
/// to the origin. F must have p's field or Q as coefficient field.
LocalGerm make_germ(const Poly& F, const ProjectivePoint& p);

int multiplicity(const Poly& g);
int multiplicity(const LocalGerm& g);
int hessian_corank(const LocalGerm& g);

/// Dimension of the local algebra at the origin modulo the generators.
/// Mora standard basis of I + m^(D+1) for growing D; the value is certified
/// once no standard monomial has degree D, since then m^D lies in I locally.
struct LocalLength {
  int value = 0;
  int truncation = 0;  // the D that certified it
};
LocalLength local_length(const std::vector<Poly>& gens, int degree_cap = 40);

/// Same count by plain linear algebra on I + m^(D+1) at a fixed D (an
/// independent check; exact only when m^D lies in I locally).
int truncated_length(const std::vector<Poly>& gens, int D);

int milnor_number(const LocalGerm& g, int degree_cap = 40);
int tjurina_number(const LocalGerm& g, int degree_cap = 40);

struct TypeLabel {
  enum class Kind { A, D4, T444, Unrecognized };
  Kind kind = Kind::Unrecognized;
  int k = 0;  // for A_k

  std::string to_string() const;  // "A2", "D4", "T444", "X"
  static TypeLabel parse(const std::string& s);
  friend bool operator==(const TypeLabel& a, const TypeLabel& b) { return a.kind == b.kind && a.k == b.k; }
};

struct SingularityRecord {
  int multiplicity = 0;
  int corank = 0;
  int milnor = 0;
  int tjurina = 0;
  TypeLabel type;
  std::optional<bool> tangent_cone_smooth;
};

TypeLabel classify(const SingularityRecord& rec, const LocalGerm& g);

/// The lowest-degree form of g defines a smooth plane curve.
bool tangent_cone_smooth(const LocalGerm& g);

/// All invariants and the type; the tangent cone is examined for
/// unrecognized germs.
SingularityRecord analyze(const LocalGerm& g, int degree_cap = 40);

/// Ternary cubic that factors as three linearly independent linear forms.
bool is_triangle_cubic(const Poly& c);
/// Binary cubic with three distinct roots on P^1.
bool binary_cubic_nondegenerate(const AlgNum& a, const AlgNum& b, const AlgNum& c, const AlgNum& d);

}  // namespace g29
