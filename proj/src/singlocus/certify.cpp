#include "g29/singlocus/certificate.hpp"

#include "g29/multipoly/invariants.hpp"
#include "g29/multipoly/ops.hpp"
#include "g29/refgroup/group.hpp"

#include <stdexcept>

namespace g29 {

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Success:
      return "SUCCESS";
    case CertStatus::Incomplete:
      return "INCOMPLETE";
    case CertStatus::BudgetExceeded:
      return "BUDGET_EXCEEDED";
    case CertStatus::PositiveDimensional:
      return "POSITIVE_DIMENSIONAL";
    case CertStatus::NotSquarefree:
      return "NOT_SQUAREFREE";
  }
  return "INCOMPLETE";
}

CertStatus parse_status(const std::string& s) {
  for (auto st : {CertStatus::Success, CertStatus::Incomplete, CertStatus::BudgetExceeded,
                  CertStatus::PositiveDimensional, CertStatus::NotSquarefree})
    if (to_string(st) == s) return st;
  throw std::invalid_argument("unknown certificate status " + s);
}

std::size_t Certificate::singular_points() const {
  std::size_t n = 0;
  for (auto& o : orbits) n += o.points();
  return n;
}

int Certificate::max_field_degree() const {
  int d = field->degree();
  for (auto& o : orbits) d = std::max(d, o.field->degree());
  return d;
}

std::map<std::string, std::size_t> Certificate::profile() const {
  std::map<std::string, std::size_t> out;
  for (auto& o : orbits) out[o.record.type.to_string()] += o.points();
  return out;
}

FieldEmbedding gaussian_embedding(const FieldPtr& field, const AlgNum& i_image) {
  return FieldEmbedding{gaussian_field(), field, i_image};
}

namespace {

struct WithI {
  FieldPtr field;
  FieldEmbedding from_l;
  AlgNum i;
};

// smallest field containing L and a square root of -1
WithI adjoin_i(const FieldPtr& L) {
  UPolyK x2p1(L, std::vector<AlgNum>{AlgNum(L, Rational(1)), AlgNum(L, Rational(0)), AlgNum(L, Rational(1))});
  for (auto& [q, m] : factor_over_field(x2p1))
    if (q.degree() == 1) return {L, FieldEmbedding::identity(L), -q.coeff(0)};
  auto adj = adjoin_root(x2p1, "b");
  return {adj.field, adj.embedding, adj.root};
}

ProjectivePoint map_point(const ProjectivePoint& p, const FieldEmbedding& e) {
  std::vector<AlgNum> x;
  for (auto& c : p.x) x.push_back(e.apply(c));
  return ProjectivePoint::normalized(std::move(x));
}

struct Closure {
  std::vector<ProjectivePoint> points;
  FieldEmbedding k_to_m;
};

void find_lines(Certificate& c) {
  const FieldPtr& K = c.field;
  auto partials = jacobian_ideal(c.F).generators;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      std::vector<AlgNum> u(4, AlgNum(K, Rational(0))), v = u;
      u[a] = AlgNum(K, Rational(1));
      v[b] = AlgNum(K, Rational(1));
      bool inside = true;
      for (auto& p : partials) inside = inside && restrict_to_line(p, u, v).is_zero();
      if (!inside) continue;
      LineEntry e;
      e.line = ProjectiveLine::through(u, v);
      e.orbit_size = orbit_line(g29_invariant_frame(), e.line).size();
      bool seen = false;
      for (auto& l : c.lines)
        for (auto& m : orbit_line(g29_invariant_frame(), l.line))
          if (m == e.line) seen = true;
      if (!seen) c.lines.push_back(e);
    }
}

}  // namespace

bool is_g29_invariant_dodecic(const Poly& F) {
  if (F.ring()->nvars() != 4 || !F.is_homogeneous() || F.total_degree() != 12) return false;
  const FieldPtr& K = F.ring()->field;
  const auto& inv = invariants_q();
  std::vector<Poly> basis;
  for (const Poly& b : {inv.f3, inv.f2 * inv.f1, inv.f1.pow(3)}) basis.push_back(change_ring(b, F.ring()));
  // Gaussian elimination on the coefficient equations sum_k c_k basis_k = F
  std::vector<std::vector<AlgNum>> rows;
  std::map<std::uint64_t, Monomial> support;
  for (auto& b : basis)
    for (auto& t : b.terms()) support.emplace(t.m.key(), t.m);
  for (auto& t : F.terms())
    if (!support.count(t.m.key())) return false;
  for (auto& [key, m] : support) {
    std::vector<AlgNum> r;
    for (auto& b : basis) r.push_back(b.coefficient(m).in_field(K));
    r.push_back(F.coefficient(m).in_field(K));
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (int col = 0; col < 3 && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    AlgNum inv_p = rows[rank][col].inverse();
    for (auto& a : rows[rank]) a *= inv_p;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && !rows[i][col].is_zero()) {
        AlgNum f = rows[i][col];
        for (int k = 0; k < 4; ++k) rows[i][k] -= f * rows[rank][k];
      }
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (!rows[i][3].is_zero()) return false;
  return true;
}

Certificate certify_surface(const SurfaceSpec& s, const CertifyOptions& opt) {
  if (!is_g29_invariant_dodecic(s.F)) throw std::invalid_argument("certification needs a G29-invariant form of degree 12");
  Certificate c;
  c.surface_id = s.id;
  c.lambda = s.lambda;
  c.mu = s.mu;
  c.field = s.field;
  c.F = s.F;
  try {
    auto js = jacobian_scheme_modular(s.F, opt.budget);
    c.dimension = js.dimension;
    c.jacobian_degree = js.degree;
    c.method = js.method;
    c.prime = js.prime;
    c.generator_image = js.generator_image;
    if (opt.exact_jacobian || js.dimension >= 2) {
      auto ex = jacobian_scheme_exact(s.F, opt.budget);
      c.dimension = ex.dimension;
      c.jacobian_degree = ex.degree;
      c.jacobian_exact = true;
      c.method = opt.exact_jacobian ? "modular+exact-groebner" : "exact-groebner";
    }
    if (c.dimension < 0) {
      c.jacobian_degree = 0;
      c.status = CertStatus::Success;
      c.note = "smooth";
      return c;
    }
    if (c.dimension >= 2) {
      // a surface singular along a surface has a multiple component
      c.status = CertStatus::NotSquarefree;
      return c;
    }
    if (c.dimension == 1) {
      find_lines(c);
      c.status = c.lines.empty() ? CertStatus::Incomplete : CertStatus::PositiveDimensional;
      if (c.lines.empty()) c.note = "one-dimensional singular locus without a coordinate line";
      return c;
    }

    const Group& G = g29_invariant_frame();
    std::vector<WitnessClass> all;
    std::vector<Closure> closures;
    for (const Slice& slice : opt.slices) {
      auto W = witness_points(s, slice, opt.budget);
      const int base = static_cast<int>(all.size());
      for (auto& w : W) {
        c.classes.push_back(ClassEntry{w.slice, w.chart, w.shift, w.factor});
        all.push_back(w);
      }
      std::vector<bool> touched(W.size(), false);
      for (std::size_t u = 0; u < closures.size(); ++u)
        for (std::size_t j = 0; j < W.size(); ++j)
          for (auto& p : closures[u].points)
            if (in_class(W[j], p, closures[u].k_to_m)) {
              c.orbits[u].classes.push_back(base + static_cast<int>(j));
              touched[j] = true;
              break;
            }
      for (std::size_t j = 0; j < W.size(); ++j) {
        if (touched[j]) continue;
        const WitnessClass& w = W[j];
        auto ext = adjoin_i(w.field);
        FieldEmbedding k_to_m = w.embedding.then(ext.from_l);
        FieldEmbedding gi = gaussian_embedding(ext.field, ext.i);
        Closure cl{orbit_point(G, map_point(w.point, ext.from_l), &gi), k_to_m};

        OrbitEntry e;
        e.point = map_point(w.point, ext.from_l);
        e.field = ext.field;
        e.k_image = k_to_m.apply(AlgNum::generator(c.field));
        e.i_image = ext.i;
        e.orbit_size = cl.points.size();
        std::size_t on_slice = 0, class_points = 0;
        for (auto& p : cl.points)
          if (w.slice.contains(p)) ++on_slice;
        for (std::size_t k = 0; k < all.size(); ++k)
          for (auto& p : cl.points)
            if (in_class(all[k], p, k_to_m)) {
              e.classes.push_back(static_cast<int>(k));
              if (all[k].slice == w.slice) class_points += static_cast<std::size_t>(all[k].size());
              if (k >= static_cast<std::size_t>(base)) touched[k - base] = true;
              break;
            }
        if (on_slice == 0 || class_points % on_slice) throw std::logic_error("inconsistent Galois closure count");
        e.slice_points = on_slice;
        e.galois_orbits = class_points / on_slice;

        Poly FL = map_coefficients(s.F, w.embedding, s.F.ring()->with_field(w.field));
        e.record = analyze(make_germ(FL, w.point), opt.local_degree_cap);
        c.tjurina_sum += static_cast<std::int64_t>(e.points()) * e.record.tjurina;
        c.orbits.push_back(std::move(e));
        closures.push_back(std::move(cl));
      }
      if (c.jacobian_degree && c.tjurina_sum >= *c.jacobian_degree) break;
    }
    if (!c.jacobian_degree) {
      c.status = CertStatus::Incomplete;
    } else if (c.tjurina_sum == *c.jacobian_degree) {
      c.status = CertStatus::Success;
    } else {
      c.status = CertStatus::Incomplete;
      c.note = "witness orbits account for degree " + std::to_string(c.tjurina_sum) + " of " +
               std::to_string(*c.jacobian_degree);
    }
  } catch (const BudgetExceeded& e) {
    c.status = CertStatus::BudgetExceeded;
    c.note = e.what();
  }
  return c;
}

}  // namespace g29
