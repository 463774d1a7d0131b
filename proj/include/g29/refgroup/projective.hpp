#pragma once

#include "g29/refgroup/group.hpp"

#include <vector>

namespace g29 {

/// Point of P^3 normalized so the first nonzero coordinate is 1.
struct ProjectivePoint {
  std::vector<AlgNum> x;

  static ProjectivePoint normalized(std::vector<AlgNum> v);
  const FieldPtr& field() const { return x[0].field(); }
  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.x == b.x; }
  std::size_t hash() const;
  std::string to_string() const;
};

struct PointHash {
  std::size_t operator()(const ProjectivePoint& p) const { return p.hash(); }
};

/// Line of P^3 by normalized Plücker coordinates p01 p02 p03 p12 p13 p23.
struct ProjectiveLine {
  std::array<AlgNum, 6> p;

  static ProjectiveLine through(const std::vector<AlgNum>& u, const std::vector<AlgNum>& v);
  /// Two points spanning the line.
  std::pair<std::vector<AlgNum>, std::vector<AlgNum>> span() const;
  bool plucker_relation_holds() const;
  friend bool operator==(const ProjectiveLine& a, const ProjectiveLine& b) { return a.p == b.p; }
  std::size_t hash() const;
};

struct LineHash {
  std::size_t operator()(const ProjectiveLine& l) const { return l.hash(); }
};

/// Group matrices brought into the field of the point; needs an embedding of
/// the group's field when that field is not Q.
std::vector<Matrix4> generators_in(const Group& g, const FieldPtr& target, const FieldEmbedding* emb);

/// Orbit by closure under the generators (equal to the group orbit).
std::vector<ProjectivePoint> orbit_point(const Group& g, const ProjectivePoint& p,
                                         const FieldEmbedding* emb = nullptr);
std::vector<ProjectiveLine> orbit_line(const Group& g, const ProjectiveLine& l,
                                       const FieldEmbedding* emb = nullptr);
/// Elements fixing p, found by filtering all elements.
std::size_t stabilizer_order(const Group& g, const ProjectivePoint& p, const FieldEmbedding* emb = nullptr);
std::size_t stabilizer_order(const Group& g, const ProjectiveLine& l, const FieldEmbedding* emb = nullptr);

ProjectivePoint act(const Matrix4& m, const ProjectivePoint& p);
ProjectiveLine act(const Matrix4& m, const ProjectiveLine& l);

}  // namespace g29
