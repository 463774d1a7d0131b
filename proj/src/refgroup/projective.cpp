#include "g29/refgroup/projective.hpp"

#include <deque>
#include <unordered_set>

namespace g29 {

ProjectivePoint ProjectivePoint::normalized(std::vector<AlgNum> v) {
  if (v.size() != 4) throw std::invalid_argument("projective points need 4 coordinates");
  FieldPtr f = v[0].field();
  for (const auto& c : v) f = common_field(f, c.field());
  int lead = 0;
  while (lead < 4 && v[lead].is_zero()) ++lead;
  if (lead == 4) throw std::invalid_argument("all coordinates are zero");
  AlgNum inv = v[lead].inverse();
  for (auto& c : v) c = (c * inv).in_field(f);
  return ProjectivePoint{std::move(v)};
}

std::size_t ProjectivePoint::hash() const {
  std::size_t h = 17;
  for (const auto& c : x) h = h * 1000003u ^ c.hash();
  return h;
}

std::string ProjectivePoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? " : " : "") + x[i].to_string();
  return s + "]";
}

namespace {
constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
}

ProjectiveLine ProjectiveLine::through(const std::vector<AlgNum>& u, const std::vector<AlgNum>& v) {
  std::vector<AlgNum> p;
  for (const auto& ij : kPairs) p.push_back(u[ij[0]] * v[ij[1]] - u[ij[1]] * v[ij[0]]);
  int lead = 0;
  while (lead < 6 && p[lead].is_zero()) ++lead;
  if (lead == 6) throw std::invalid_argument("points do not span a line");
  AlgNum inv = p[lead].inverse();
  ProjectiveLine l;
  for (int k = 0; k < 6; ++k) l.p[k] = p[k] * inv;
  return l;
}

std::pair<std::vector<AlgNum>, std::vector<AlgNum>> ProjectiveLine::span() const {
  // rows of the Plücker matrix: point_i = sum_j p_ij e_j, nonzero ones span the line
  FieldPtr f = p[0].field();
  auto P = [&](int i, int j) -> AlgNum {
    if (i == j) return AlgNum(f, Rational(0));
    for (int k = 0; k < 6; ++k) {
      if (kPairs[k][0] == i && kPairs[k][1] == j) return p[k];
      if (kPairs[k][0] == j && kPairs[k][1] == i) return -p[k];
    }
    return AlgNum(f, Rational(0));
  };
  // For the line spanned by u, v: sum_j P(i,j) w_j = u_i (v.w) - v_i (u.w);
  // applying to basis vectors e_j gives points on the line.
  std::vector<std::vector<AlgNum>> pts;
  for (int j = 0; j < 4; ++j) {
    std::vector<AlgNum> col;
    bool nz = false;
    for (int i = 0; i < 4; ++i) {
      col.push_back(P(i, j));
      nz = nz || !col.back().is_zero();
    }
    if (nz) pts.push_back(col);
  }
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      bool independent = false;
      for (const auto& ij : kPairs)
        if (!(pts[a][ij[0]] * pts[b][ij[1]] - pts[a][ij[1]] * pts[b][ij[0]]).is_zero()) independent = true;
      if (independent) return {pts[a], pts[b]};
    }
  throw std::logic_error("degenerate Plücker coordinates");
}

bool ProjectiveLine::plucker_relation_holds() const {
  return (p[0] * p[5] - p[1] * p[4] + p[2] * p[3]).is_zero();
}

std::size_t ProjectiveLine::hash() const {
  std::size_t h = 29;
  for (const auto& c : p) h = h * 1000003u ^ c.hash();
  return h;
}

std::vector<Matrix4> generators_in(const Group& g, const FieldPtr& target, const FieldEmbedding* emb) {
  std::vector<Matrix4> out;
  for (const auto& m : g.generators()) {
    if (g.field() == target || g.field()->same_as(*target)) {
      out.push_back(m);
    } else if (emb) {
      out.push_back(m.mapped(*emb));
    } else {
      Matrix4 r;
      for (int i = 0; i < 16; ++i) r.a[i] = m.a[i].in_field(target);
      out.push_back(r);
    }
  }
  return out;
}

ProjectivePoint act(const Matrix4& m, const ProjectivePoint& p) { return ProjectivePoint::normalized(m.apply(p.x)); }

ProjectiveLine act(const Matrix4& m, const ProjectiveLine& l) {
  auto [u, v] = l.span();
  return ProjectiveLine::through(m.apply(u), m.apply(v));
}

namespace {

template <class T, class H>
std::vector<T> bfs_orbit(const std::vector<Matrix4>& gens, const T& start) {
  std::vector<T> orbit{start};
  std::unordered_set<T, H> seen{start};
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (const auto& s : gens) {
      T q = act(s, orbit[head]);
      if (seen.insert(q).second) orbit.push_back(std::move(q));
    }
  return orbit;
}

FieldPtr field_of(const ProjectiveLine& l) {
  FieldPtr f = l.p[0].field();
  for (const auto& c : l.p) f = common_field(f, c.field());
  return f;
}

}  // namespace

std::vector<ProjectivePoint> orbit_point(const Group& g, const ProjectivePoint& p, const FieldEmbedding* emb) {
  FieldPtr f = p.field();
  if (!emb && !g.field()->is_rationals()) f = common_field(f, g.field());
  ProjectivePoint start = ProjectivePoint::normalized(p.x);
  for (auto& c : start.x) c = c.in_field(f);
  return bfs_orbit<ProjectivePoint, PointHash>(generators_in(g, f, emb), start);
}

std::vector<ProjectiveLine> orbit_line(const Group& g, const ProjectiveLine& l, const FieldEmbedding* emb) {
  FieldPtr f = field_of(l);
  if (!emb && !g.field()->is_rationals()) f = common_field(f, g.field());
  ProjectiveLine start = l;
  for (auto& c : start.p) c = c.in_field(f);
  return bfs_orbit<ProjectiveLine, LineHash>(generators_in(g, f, emb), start);
}

namespace {

template <class T>
std::size_t stabilizer_impl(const Group& g, const T& x, const FieldPtr& f, const FieldEmbedding* emb) {
  std::size_t n = 0;
  for (const auto& m : g.elements()) {
    Matrix4 mm = m;
    if (!(g.field() == f || g.field()->same_as(*f))) {
      if (emb)
        mm = m.mapped(*emb);
      else
        for (auto& e : mm.a) e = e.in_field(f);
    }
    if (act(mm, x) == x) ++n;
  }
  return n;
}

}  // namespace

std::size_t stabilizer_order(const Group& g, const ProjectivePoint& p, const FieldEmbedding* emb) {
  FieldPtr f = p.field();
  if (!emb && !g.field()->is_rationals()) f = common_field(f, g.field());
  ProjectivePoint start = ProjectivePoint::normalized(p.x);
  for (auto& c : start.x) c = c.in_field(f);
  return stabilizer_impl(g, start, f, emb);
}

std::size_t stabilizer_order(const Group& g, const ProjectiveLine& l, const FieldEmbedding* emb) {
  FieldPtr f = field_of(l);
  if (!emb && !g.field()->is_rationals()) f = common_field(f, g.field());
  ProjectiveLine start = l;
  for (auto& c : start.p) c = c.in_field(f);
  return stabilizer_impl(g, start, f, emb);
}

}  // namespace g29
