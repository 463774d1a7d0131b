#include "g29/cli/mesh.hpp"

#include "g29/exactfield/complex_ball.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace g29::cli {

namespace {

struct RealTerm {
  std::array<int, 4> e;
  BigFloat c;
};

int real_root_index(const FieldPtr& k, long prec) {
  if (k->degree() == 1) return 0;
  auto roots = isolate_roots(k->minimal_polynomial(), prec);
  for (std::size_t r = 0; r < roots.size(); ++r)
    if (mpfr_cmpabs(roots[r].im().get(), roots[r].rad().get()) <= 0) return static_cast<int>(r);
  throw std::invalid_argument("field " + k->symbol() + " has no real embedding");
}

std::vector<RealTerm> real_terms(const Poly& F, long prec) {
  const FieldPtr& k = F.ring()->field;
  bool rational = std::all_of(F.terms().begin(), F.terms().end(), [](const Term& t) { return t.c.is_rational(); });
  int root = rational ? 0 : real_root_index(k, prec);
  std::vector<RealTerm> out;
  for (auto& t : F.terms()) {
    RealTerm r{{t.m[0], t.m[1], t.m[2], t.m[3]}, BigFloat(prec)};
    if (t.c.is_rational()) {
      mpfr_set_q(r.c.get(), t.c.rational().get_mpq_t(), MPFR_RNDN);
    } else {
      ComplexBall b = embed_complex(t.c, root, prec);
      if (mpfr_cmpabs(b.im().get(), b.rad().get()) > 0)
        throw std::invalid_argument("coefficient " + t.c.to_string() + " is not real");
      mpfr_set(r.c.get(), b.re().get(), MPFR_RNDN);
    }
    out.push_back(std::move(r));
  }
  return out;
}

// F restricted to the grid: values[(i * n1 + j) * n1 + k] at axis values g[i], g[j], g[k]
std::vector<double> grid_values(const std::vector<RealTerm>& terms, const std::array<int, 3>& axes,
                                const std::vector<double>& g, long prec) {
  const std::size_t n1 = g.size();
  int deg = 0;
  for (auto& t : terms)
    for (int a = 0; a < 4; ++a) deg = std::max(deg, t.e[a]);
  std::vector<double> values(n1 * n1 * n1);
  if (prec <= 53) {
    std::vector<std::vector<double>> pw(n1, std::vector<double>(deg + 1, 1.0));
    for (std::size_t i = 0; i < n1; ++i)
      for (int e = 1; e <= deg; ++e) pw[i][e] = pw[i][e - 1] * g[i];
    std::vector<double> coef;
    for (auto& t : terms) coef.push_back(mpfr_get_d(t.c.get(), MPFR_RNDN));
    std::vector<double> col(deg + 1);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n1; ++j) {
        std::fill(col.begin(), col.end(), 0.0);
        for (std::size_t q = 0; q < terms.size(); ++q)
          col[terms[q].e[axes[2]]] += coef[q] * pw[i][terms[q].e[axes[0]]] * pw[j][terms[q].e[axes[1]]];
        for (std::size_t k = 0; k < n1; ++k) {
          double v = 0;
          for (int e = deg; e >= 0; --e) v = v * g[k] + col[e];
          values[(i * n1 + j) * n1 + k] = v;
        }
      }
    return values;
  }
  std::vector<std::vector<BigFloat>> pw(n1, std::vector<BigFloat>(deg + 1, BigFloat(prec)));
  for (std::size_t i = 0; i < n1; ++i) {
    mpfr_set_ui(pw[i][0].get(), 1, MPFR_RNDN);
    for (int e = 1; e <= deg; ++e) mpfr_mul_d(pw[i][e].get(), pw[i][e - 1].get(), g[i], MPFR_RNDN);
  }
  std::vector<BigFloat> col(deg + 1, BigFloat(prec));
  BigFloat tmp(prec), v(prec);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      for (auto& c : col) mpfr_set_zero(c.get(), 1);
      for (auto& t : terms) {
        mpfr_mul(tmp.get(), t.c.get(), pw[i][t.e[axes[0]]].get(), MPFR_RNDN);
        mpfr_mul(tmp.get(), tmp.get(), pw[j][t.e[axes[1]]].get(), MPFR_RNDN);
        mpfr_add(col[t.e[axes[2]]].get(), col[t.e[axes[2]]].get(), tmp.get(), MPFR_RNDN);
      }
      for (std::size_t k = 0; k < n1; ++k) {
        mpfr_set_zero(v.get(), 1);
        for (int e = deg; e >= 0; --e) {
          mpfr_mul_d(v.get(), v.get(), g[k], MPFR_RNDN);
          mpfr_add(v.get(), v.get(), col[e].get(), MPFR_RNDN);
        }
        values[(i * n1 + j) * n1 + k] = mpfr_get_d(v.get(), MPFR_RNDN);
      }
    }
  return values;
}

// the six tetrahedra of a cube sharing the diagonal 0-7; corners indexed by bits (i, j, k)
constexpr int kTets[6][4] = {{0, 1, 3, 7}, {0, 3, 2, 7}, {0, 2, 6, 7}, {0, 6, 4, 7}, {0, 4, 5, 7}, {0, 5, 1, 7}};

}  // namespace

std::vector<std::pair<std::array<int, 4>, double>> real_coefficients(const Poly& F, long precision) {
  std::vector<std::pair<std::array<int, 4>, double>> out;
  for (auto& t : real_terms(F, precision)) out.push_back({t.e, mpfr_get_d(t.c.get(), MPFR_RNDN)});
  return out;
}

Mesh mesh_surface(const SurfaceSpec& s, const MeshOptions& o) {
  if (o.resolution < 1) throw std::invalid_argument("mesh resolution must be at least 1");
  if (o.chart < 0 || o.chart > 3) throw std::invalid_argument("chart must be 0..3");
  if (!(o.half_width > 0)) throw std::invalid_argument("box half-width must be positive");
  if (o.precision < 2) throw std::invalid_argument("precision must be at least 2 bits");
  Mesh m;
  std::array<int, 3> axes{};
  for (int v = 0, a = 0; v < 4; ++v)
    if (v != o.chart) {
      axes[a] = v;
      m.axes[a++] = s.F.ring()->vars[v];
    }
  auto terms = real_terms(s.F, std::max<long>(o.precision, 64));
  const std::size_t n = static_cast<std::size_t>(o.resolution), n1 = n + 1;
  std::vector<double> g(n1);
  for (std::size_t i = 0; i < n1; ++i) g[i] = -o.half_width + 2 * o.half_width * static_cast<double>(i) / n;
  auto val = grid_values(terms, axes, g, o.precision);
  auto idx = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * n1 + j) * n1 + k; };

  std::unordered_map<std::uint64_t, int> edge_vertex;
  auto vertex_on = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    std::uint64_t key = static_cast<std::uint64_t>(a) * n1 * n1 * n1 + b;
    auto it = edge_vertex.find(key);
    if (it != edge_vertex.end()) return it->second;
    double fa = val[a], fb = val[b], t = fa / (fa - fb);
    auto coord = [&](std::size_t p) {
      return std::array<double, 3>{g[p / (n1 * n1)], g[(p / n1) % n1], g[p % n1]};
    };
    auto pa = coord(a), pb = coord(b);
    std::array<double, 3> x;
    for (int c = 0; c < 3; ++c) x[c] = pa[c] + t * (pb[c] - pa[c]);
    m.vertices.push_back(x);
    int id = static_cast<int>(m.vertices.size()) - 1;
    edge_vertex.emplace(key, id);
    return id;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::array<std::size_t, 8> corner;
        for (int c = 0; c < 8; ++c) corner[c] = idx(i + ((c >> 2) & 1), j + ((c >> 1) & 1), k + (c & 1));
        for (auto& tet : kTets) {
          std::array<std::size_t, 4> p{corner[tet[0]], corner[tet[1]], corner[tet[2]], corner[tet[3]]};
          std::vector<std::size_t> in, out;
          for (auto q : p) (val[q] < 0 ? in : out).push_back(q);
          if (in.empty() || out.empty()) continue;
          if (in.size() == 1 || out.size() == 1) {
            auto& lone = in.size() == 1 ? in : out;
            auto& rest = in.size() == 1 ? out : in;
            m.faces.push_back({vertex_on(lone[0], rest[0]), vertex_on(lone[0], rest[1]), vertex_on(lone[0], rest[2])});
          } else {
            int a = vertex_on(in[0], out[0]), b = vertex_on(in[0], out[1]);
            int c = vertex_on(in[1], out[1]), d = vertex_on(in[1], out[0]);
            m.faces.push_back({a, b, c});
            m.faces.push_back({a, c, d});
          }
        }
      }
  if (m.faces.empty()) m.warnings.push_back("no real points of the surface in the box; mesh is empty");
  return m;
}

void write_obj(std::ostream& out, const Mesh& m, const std::string& comment) {
  out << "# " << comment << "\n";
  out << "# axes " << m.axes[0] << " " << m.axes[1] << " " << m.axes[2] << "\n";
  out.precision(9);
  for (auto& v : m.vertices) out << "v " << v[0] << " " << v[1] << " " << v[2] << "\n";
  for (auto& f : m.faces) out << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
}

}  // namespace g29::cli
