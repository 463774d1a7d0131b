#include "g29/singlocus/certificate_io.hpp"

#include "g29/multipoly/invariants.hpp"
#include "g29/multipoly/ops.hpp"
#include "g29/refgroup/group.hpp"

#include <set>
#include <stdexcept>

namespace g29 {

using nlohmann::json;

namespace {

json field_json(const FieldPtr& f) {
  json c = json::array();
  for (auto& q : f->minimal_polynomial().coeffs()) c.push_back(to_string(q));
  return json{{"minpoly", c}, {"symbol", f->symbol()}};
}

FieldPtr field_from(const json& j) {
  std::vector<Rational> c;
  for (auto& q : j.at("minpoly")) c.push_back(parse_rational(q.get<std::string>()));
  if (c.size() <= 2) return NumberField::rationals();
  return NumberField::create(UPolyQ(c), j.at("symbol").get<std::string>());
}

json point_json(const std::vector<AlgNum>& x) {
  json a = json::array();
  for (auto& c : x) a.push_back(c.to_string());
  return a;
}

json record_json(const SingularityRecord& r) {
  json j{{"multiplicity", r.multiplicity}, {"corank", r.corank},   {"milnor", r.milnor},
         {"tjurina", r.tjurina},           {"type", r.type.to_string()}, {"tangent_cone_smooth", nullptr}};
  if (r.tangent_cone_smooth) j["tangent_cone_smooth"] = *r.tangent_cone_smooth;
  return j;
}

json slice_json(const Slice& s) {
  json a = json::array();
  for (auto& q : s.a) a.push_back(to_string(q));
  return a;
}

Slice slice_from(const json& j) {
  Slice s;
  for (int k = 0; k < 4; ++k) s.a[k] = parse_rational(j.at(k).get<std::string>());
  return s;
}

bool pencil_member(const Certificate& c) {
  try {
    return c.F == pencil_polynomial(c.lambda, c.mu, c.field);
  } catch (const std::exception&) {
    return false;
  }
}

// structural agreement of the type label with the recorded invariants
bool label_consistent(const SingularityRecord& r) {
  switch (r.type.kind) {
    case TypeLabel::Kind::A:
      return r.multiplicity == 2 && r.corank <= 1 && r.milnor == r.type.k && r.tjurina == r.type.k;
    case TypeLabel::Kind::D4:
      return r.multiplicity == 2 && r.corank == 2 && r.milnor == 4 && r.tjurina == 4;
    case TypeLabel::Kind::T444:
      return r.multiplicity == 3 && r.corank == 3 && r.milnor == 11 && r.tjurina == 10;
    case TypeLabel::Kind::Unrecognized:
      return r.multiplicity >= 2 && r.milnor >= r.tjurina && r.tjurina >= 1;
  }
  return false;
}

using Vec3 = std::array<AlgNum, 3>;

AlgNum eval3(const Poly& p, const Vec3& v) { return evaluate(p, {v[0], v[1], v[2]}); }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero_vec(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

// The type label against the jets of the germ, by evaluating derivatives at
// the origin only: A1 has corank 0; for corank 1 the cubic term on the
// Hessian kernel is nonzero exactly for A2; D4 has a cubic with three distinct
// roots on the kernel plane; T444 has a triangle as tangent cone.
std::optional<std::string> jet_disagreement(const LocalGerm& g, const SingularityRecord& sr) {
  const Poly& f = g.g;
  if (f.ring()->nvars() != 3) return std::nullopt;
  const FieldPtr& M = f.ring()->field;
  AlgNum zero(M, Rational(0));
  std::array<Vec3, 3> H;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      H[a][b] = evaluate(partial_derivative(partial_derivative(f, a), b), {zero, zero, zero});
  Poly cubic = f.homogeneous_part(3);
  switch (sr.type.kind) {
    case TypeLabel::Kind::A: {
      if ((sr.type.k == 1) != (sr.corank == 0)) return "A" + std::to_string(sr.type.k) + " with corank " +
                                                       std::to_string(sr.corank);
      if (sr.type.k == 1) return std::nullopt;
      Vec3 v{};
      for (int a = 0; a < 3 && is_zero_vec(v); ++a)
        for (int b = a + 1; b < 3 && is_zero_vec(v); ++b) v = cross(H[a], H[b]);
      if (is_zero_vec(v)) return "corank-one Hessian without a kernel line";
      bool cusp = !eval3(cubic, v).is_zero();
      if (cusp != (sr.type.k == 2)) return std::string("cubic term on the Hessian kernel is ") +
                                           (cusp ? "nonzero (A2)" : "zero (not A2)");
      return std::nullopt;
    }
    case TypeLabel::Kind::D4: {
      const Vec3* row = nullptr;
      for (auto& r : H)
        if (!is_zero_vec(r)) row = &r;
      if (!row) return "D4 with zero Hessian";
      std::vector<Vec3> basis;
      for (int e = 0; e < 3 && basis.size() < 2; ++e) {
        Vec3 unit{zero, zero, zero};
        unit[e] = AlgNum(M, Rational(1));
        Vec3 w = cross(*row, unit);
        if (is_zero_vec(w)) continue;
        if (basis.size() == 1 && is_zero_vec(cross(basis[0], w))) continue;
        basis.push_back(w);
      }
      if (basis.size() < 2) return "D4 kernel plane not found";
      auto at = [&](long s, long t) {
        Vec3 v;
        for (int k = 0; k < 3; ++k) v[k] = basis[0][k] * AlgNum(s) + basis[1][k] * AlgNum(t);
        return eval3(cubic, v);
      };
      AlgNum a = at(1, 0), d = at(0, 1), p = at(1, 1) - a - d, q = at(1, -1) - a + d;
      AlgNum half(M, Rational(1, 2));
      AlgNum b = (p + q) * half, c = (p - q) * half;
      if (!binary_cubic_nondegenerate(a, b, c, d)) return "D4 cubic on the kernel plane is degenerate";
      return std::nullopt;
    }
    case TypeLabel::Kind::T444:
      if (!is_triangle_cubic(cubic)) return "T444 whose tangent cone is not a triangle";
      return std::nullopt;
    case TypeLabel::Kind::Unrecognized:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

json certificate_to_json(const Certificate& c) {
  json j;
  j["schema"] = kCertificateSchema;
  j["surface"] = c.surface_id;
  j["field"] = field_json(c.field);
  j["lambda"] = c.lambda.in_field(c.field).to_string();
  j["mu"] = c.mu.in_field(c.field).to_string();
  j["pencil"] = pencil_member(c);
  j["equation"] = c.F.to_string();
  j["squarefree"] = c.dimension <= 1;
  j["singular_scheme_dimension"] = c.dimension;
  j["global_tjurina_degree"] = c.jacobian_degree ? json(*c.jacobian_degree) : json(nullptr);
  j["jacobian"] = {{"method", c.method}, {"exact", c.jacobian_exact}, {"prime", c.prime},
                   {"generator_image", c.generator_image}};
  json classes = json::array();
  for (auto& e : c.classes) {
    json f = json::array();
    for (auto& a : e.factor.coeffs()) f.push_back(a.in_field(c.field).to_string());
    classes.push_back({{"slice", slice_json(e.slice)}, {"chart", e.chart}, {"shift", e.shift}, {"factor", f}});
  }
  j["classes"] = classes;
  json orbits = json::array();
  for (auto& o : c.orbits) {
    orbits.push_back({{"field", field_json(o.field)},
                      {"k_image", o.k_image.to_string()},
                      {"i_image", o.i_image.to_string()},
                      {"point", point_json(o.point.x)},
                      {"orbit_size", o.orbit_size},
                      {"galois_orbits", o.galois_orbits},
                      {"slice_points", o.slice_points},
                      {"classes", o.classes},
                      {"record", record_json(o.record)}});
  }
  j["orbits"] = orbits;
  j["tjurina_sum"] = c.tjurina_sum;
  json lines = json::array();
  for (auto& l : c.lines) {
    json p = json::array();
    for (auto& a : l.line.p) p.push_back(a.to_string());
    lines.push_back({{"plucker", p}, {"orbit_size", l.orbit_size}});
  }
  j["singular_lines"] = lines;
  json prof = json::object();
  for (auto& [t, n] : c.profile()) prof[t] = n;
  j["profile"] = prof;
  j["singular_points"] = c.singular_points();
  j["field_degree_max"] = c.max_field_degree();
  j["status"] = to_string(c.status);
  j["note"] = c.note;
  return j;
}

CheckResult check_certificate(const json& j) {
  CheckResult r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.problems.push_back(std::move(msg));
  };
  try {
    if (j.at("schema").get<std::string>() != kCertificateSchema) fail("unknown schema");
    CertStatus status = parse_status(j.at("status").get<std::string>());
    FieldPtr K = field_from(j.at("field"));
    auto R = xyzt_ring(K);
    AlgNum lambda = parse_algnum(j.at("lambda").get<std::string>(), K);
    AlgNum mu = parse_algnum(j.at("mu").get<std::string>(), K);
    Poly F = j.at("pencil").get<bool>() ? pencil_polynomial(lambda, mu, K)
                                        : parse_poly(j.at("equation").get<std::string>(), R);
    if (F.total_degree() <= 0 || !F.is_homogeneous()) fail("equation is not a homogeneous form");
    auto partials = jacobian_ideal(F).generators;
    const Group& G = g29_invariant_frame();

    for (auto& l : j.at("singular_lines")) {
      ProjectiveLine line;
      for (int k = 0; k < 6; ++k) line.p[k] = parse_algnum(l.at("plucker").at(k).get<std::string>(), K);
      if (!line.plucker_relation_holds()) fail("singular line violates the Plücker relation");
      auto [u, v] = line.span();
      for (auto& p : partials)
        if (!restrict_to_line(p, u, v).is_zero()) fail("a partial does not vanish on a singular line");
      if (orbit_line(G, line).size() != l.at("orbit_size").get<std::size_t>()) fail("line orbit size differs");
    }
    if (status == CertStatus::PositiveDimensional) {
      if (j.at("singular_lines").empty()) fail("positive-dimensional certificate without lines");
      return r;
    }
    if (status != CertStatus::Success) {
      fail("status " + to_string(status) + " is not a completeness claim");
      return r;
    }
    const json& deg = j.at("global_tjurina_degree");
    if (deg.is_null()) {
      fail("no global Tjurina degree");
      return r;
    }
    if (j.at("singular_scheme_dimension").get<int>() > 0) fail("SUCCESS with a positive-dimensional scheme");

    std::vector<WitnessClass> classes;
    for (auto& e : j.at("classes")) {
      WitnessClass w;
      w.slice = slice_from(e.at("slice"));
      w.chart = e.at("chart").get<int>();
      w.shift = e.at("shift").get<int>();
      std::vector<AlgNum> f;
      for (auto& a : e.at("factor")) f.push_back(parse_algnum(a.get<std::string>(), K));
      w.factor = UPolyK(K, f);
      if (w.factor.degree() < 1 || !is_irreducible_over_field(w.factor)) fail("class factor is not irreducible");
      classes.push_back(std::move(w));
    }

    std::int64_t sum = 0;
    std::set<int> used;
    for (auto& o : j.at("orbits")) {
      FieldPtr M = field_from(o.at("field"));
      AlgNum k_image = parse_algnum(o.at("k_image").get<std::string>(), M);
      AlgNum i_image = parse_algnum(o.at("i_image").get<std::string>(), M);
      if (!(i_image * i_image + AlgNum(M, Rational(1))).is_zero()) fail("i_image is not a square root of -1");
      FieldEmbedding k_to_m{K, M, K->is_rationals() ? AlgNum(M, Rational(0)) : k_image};
      if (!K->is_rationals() && !UPolyK::from_rational(M, K->minimal_polynomial()).eval(k_image).is_zero())
        fail("k_image is not a root of the field's minimal polynomial");
      std::vector<AlgNum> x;
      for (auto& c : o.at("point")) x.push_back(parse_algnum(c.get<std::string>(), M));
      if (x.size() != 4) throw std::invalid_argument("point needs four coordinates");
      ProjectivePoint p = ProjectivePoint::normalized(x);

      auto RM = R->with_field(M);
      std::vector<Poly> pm;
      for (auto& d : partials) pm.push_back(map_coefficients(d, k_to_m, RM));
      FieldEmbedding gi = gaussian_embedding(M, i_image);
      auto pts = orbit_point(G, p, &gi);
      if (pts.size() != o.at("orbit_size").get<std::size_t>()) fail("orbit size differs from the recomputed closure");
      for (auto& q : pts) {
        for (auto& d : pm)
          if (!evaluate(d, q.x).is_zero()) {
            fail("a partial does not vanish at an orbit point");
            break;
          }
        ++r.points_checked;
      }

      // Galois closure count from the slice classes the orbit touches
      std::set<int> touched;
      for (std::size_t k = 0; k < classes.size(); ++k)
        for (auto& q : pts)
          if (in_class(classes[k], q, k_to_m)) {
            touched.insert(static_cast<int>(k));
            break;
          }
      std::set<int> listed;
      for (auto& c : o.at("classes")) listed.insert(c.get<int>());
      if (touched != listed) fail("touched classes differ from the recorded ones");
      for (int k : touched)
        if (!used.insert(k).second) fail("a class is shared between two orbit entries");
      std::size_t galois = o.at("galois_orbits").get<std::size_t>();
      bool counted = false;
      for (int k : touched) {
        const Slice& s = classes[k].slice;
        std::size_t on = 0, pts_in = 0;
        for (auto& q : pts)
          if (s.contains(q)) ++on;
        for (int m : touched)
          if (classes[m].slice == s) pts_in += static_cast<std::size_t>(classes[m].size());
        if (on == 0 || pts_in != galois * on) fail("Galois closure count does not recompute");
        counted = true;
        break;
      }
      if (!counted) fail("orbit touches no witness class");

      const json& rec = o.at("record");
      SingularityRecord sr;
      sr.multiplicity = rec.at("multiplicity").get<int>();
      sr.corank = rec.at("corank").get<int>();
      sr.milnor = rec.at("milnor").get<int>();
      sr.tjurina = rec.at("tjurina").get<int>();
      sr.type = TypeLabel::parse(rec.at("type").get<std::string>());
      if (!label_consistent(sr)) fail("type label disagrees with the recorded invariants");
      LocalGerm g = make_germ(map_coefficients(F, k_to_m, RM), p);
      if (multiplicity(g) != sr.multiplicity) fail("multiplicity does not recompute");
      if (hessian_corank(g) != sr.corank) fail("Hessian corank does not recompute");
      if (auto why = jet_disagreement(g, sr)) fail("type label: " + *why);
      sum += static_cast<std::int64_t>(pts.size() * galois) * sr.tjurina;
    }
    if (sum != j.at("tjurina_sum").get<std::int64_t>()) fail("Tjurina sum does not re-add");
    if (sum != deg.get<std::int64_t>()) fail("Tjurina sum differs from the global degree");
  } catch (const std::exception& e) {
    fail(std::string("malformed certificate: ") + e.what());
  }
  return r;
}

}  // namespace g29
