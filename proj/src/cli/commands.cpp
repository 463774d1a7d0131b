#include "g29/cli/commands.hpp"

#include "g29/multipoly/invariants.hpp"
#include "g29/multipoly/ops.hpp"
#include "g29/refgroup/group.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace g29::cli {

using nlohmann::json;

Tier parse_tier(const std::string& s) {
  if (s == "desk") return Tier::Desk;
  if (s == "extended") return Tier::Extended;
  throw InputError("unknown tier '" + s + "' (desk|extended)");
}

std::string to_string(Tier t) { return t == Tier::Desk ? "desk" : "extended"; }

CertifyOptions certify_options(const RunConfig& cfg) {
  CertifyOptions o;
  o.exact_jacobian = cfg.exact || cfg.tier == Tier::Extended;
  o.budget.seconds = cfg.tier == Tier::Desk ? 1800 : 12 * 3600;
  return o;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next++) < n;) {
        try {
          fn(k);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

json cmd_verify_group() {
  const Group& g = g29();
  auto gens = g29_generators();
  bool stable = gens[2].conjugate() == gens[0] * gens[2] * gens[0];
  bool closed = std::all_of(gens.begin(), gens.end(), [&](const Matrix4& s) { return g.contains(s.conjugate()); });
  json gen = json::array();
  for (auto& s : gens) gen.push_back(s.serialize());
  return json{{"schema", kReportSchema},
              {"order", g.order()},
              {"center_order", center(g).order()},
              {"reflections", reflections(g).size()},
              {"hyperplanes", reflecting_hyperplanes(g).size()},
              {"conj_s3_equals_s1_s3_s1", stable},
              {"conjugates_of_generators_in_group", closed},
              {"generators", gen}};
}

json cmd_verify_invariants() {
  const auto& inv = invariants_q();
  auto check = [&](const std::vector<Matrix4>& gens) {
    json r = json::object();
    std::vector<std::pair<std::string, const Poly*>> fs{{"f1", &inv.f1}, {"f2", &inv.f2}, {"f3", &inv.f3}};
    for (auto& [name, f] : fs) {
      RingPtr R = xyzt_ring(gaussian_field());
      Poly F = change_ring(*f, R);
      bool ok = true;
      for (auto& s : gens) ok = ok && act(s, F) == F;
      r[name] = ok;
    }
    return r;
  };
  json j{{"schema", kReportSchema}};
  j["frame"] = "H s_i H, H = Hadamard/2";
  j["invariant"] = check(g29_generators_invariant_frame());
  j["invariant_under_displayed_generators"] = check(g29_generators());
  Poly h = hessian_det(inv.f1);
  auto c = try_divide(h, inv.f2);
  j["hessian_proportional"] = c.has_value() && c->is_constant() && !c->is_zero();
  j["hessian_scalar"] = c && c->is_constant() && !c->is_zero() ? json(c->terms()[0].c.to_string()) : json(nullptr);
  j["degree_x_f3"] = inv.f3.degree_in(0);
  j["degrees"] = {inv.f1.total_degree(), inv.f2.total_degree(), inv.f3.total_degree()};
  return j;
}

namespace {

FieldPtr field_from_text(const std::string& minpoly, const std::string& symbol) {
  RingPtr R = Ring::make({symbol});
  Poly p = parse_poly(minpoly, R);
  int d = p.total_degree();
  if (d < 1) throw InputError("minimal polynomial must have positive degree");
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (auto& t : p.terms()) {
    if (!t.c.is_rational()) throw InputError("minimal polynomial needs rational coefficients");
    c[static_cast<std::size_t>(t.m[0])] = t.c.rational();
  }
  Rational lead = c.back();
  for (auto& q : c) q /= lead;
  try {
    return NumberField::create(UPolyQ(c), symbol);
  } catch (const std::exception& e) {
    throw InputError(std::string("bad field: ") + e.what());
  }
}

std::optional<ParameterPoint> try_point(const SurfaceRequest& r, const FieldPtr& f) {
  try {
    return ParameterPoint::make("custom", r.lambda, r.mu, f);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

SurfaceSpec resolve_surface(const SurfaceRequest& r, const DistinguishedPoint** expected) {
  if (expected) *expected = nullptr;
  if (!r.name.empty()) {
    for (auto& d : distinguished_points())
      if (d.surface == r.name) {
        if (expected) *expected = &d;
        return pencil(d.surface, d.point.lambda, d.point.mu);
      }
    throw InputError("unknown surface '" + r.name + "'");
  }
  if (r.lambda.empty() || r.mu.empty()) throw InputError("give a surface name or both --lambda and --mu");
  std::optional<ParameterPoint> p;
  if (!r.minpoly.empty()) {
    p = try_point(r, field_from_text(r.minpoly, r.symbol));
  } else {
    for (FieldPtr f : {NumberField::rationals(), gaussian_field(), NumberField::create(UPolyQ{-3, 0, 1}, "r")})
      if ((p = try_point(r, f))) break;
  }
  if (!p) throw InputError("cannot parse lambda='" + r.lambda + "', mu='" + r.mu + "'");
  std::string id = "lambda=" + r.lambda + ",mu=" + r.mu;
  // a custom point equal to a registered one inherits its expectation
  for (auto& d : distinguished_points()) {
    auto same = [](const AlgNum& a, const AlgNum& b) {
      try {
        FieldPtr k = common_field(a.field(), b.field());
        return a.in_field(k) == b.in_field(k);
      } catch (const std::exception&) {
        return false;
      }
    };
    if (same(d.point.lambda, p->lambda) && same(d.point.mu, p->mu)) {
      if (expected) *expected = &d;
      break;
    }
  }
  return pencil(id, p->lambda, p->mu);
}

int exit_code_for(const Certificate& c, const std::vector<std::string>& mismatches) {
  if (c.status == CertStatus::BudgetExceeded) return kBudget;
  if (!mismatches.empty()) return kMismatch;
  if (c.status == CertStatus::Success || c.status == CertStatus::PositiveDimensional) return kOk;
  return kMismatch;
}

CertifyOutcome cmd_certify(const SurfaceRequest& r, const RunConfig& cfg) {
  CertifyOutcome out;
  SurfaceSpec s = resolve_surface(r, &out.expected);
  out.certificate = certify_surface(s, certify_options(cfg));
  if (out.expected) out.mismatches = profile_mismatches(out.certificate, out.expected->expected);
  out.exit_code = exit_code_for(out.certificate, out.mismatches);
  return out;
}

CheckResult cmd_check_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(std::string("not JSON: ") + e.what());
  }
  return check_certificate(j);
}

json cmd_curves() {
  json j{{"schema", kReportSchema}};
  json curves = json::array();
  for (auto& c : curve_registry())
    curves.push_back({{"name", c.name}, {"degree", c.degree()}, {"equation", c.poly.to_string()}});
  j["curves"] = curves;
  json pts = json::array();
  auto inter = pairwise_intersections();
  for (auto& ic : inter) {
    const auto& p = ic.cls.point;
    json f = json::array();
    for (auto& q : p.field->minimal_polynomial().coeffs()) f.push_back(g29::to_string(q));
    pts.push_back({{"lambda", p.lambda.to_string()},
                   {"mu", p.mu.to_string()},
                   {"field", {{"minpoly", f}, {"symbol", p.field->symbol()}}},
                   {"conjugates", ic.cls.size},
                   {"curves", ic.curves},
                   {"multiplicity", ic.multiplicity},
                   {"transversal", ic.transversal()}});
  }
  j["intersections"] = pts;
  auto s = summarize(inter);
  j["summary"] = {{"points", s.points}, {"transversal", s.transversal}};
  json named = json::array();
  for (auto& d : distinguished_points()) {
    if (d.generic_sample) continue;
    named.push_back({{"surface", d.surface},
                     {"lambda", d.point.lambda.to_string()},
                     {"mu", d.point.mu.to_string()},
                     {"stated_curves", d.stated_curves},
                     {"computed_curves", curves_through(d.point)},
                     {"discrepancy", membership_discrepancy(d)}});
  }
  j["named_points"] = named;
  return j;
}

CertifiedProfile certified_profile(const json& j) {
  CertifiedProfile p;
  p.status = parse_status(j.at("status").get<std::string>());
  for (auto& [k, v] : j.at("profile").items()) p.types[k] = v.get<std::size_t>();
  for (auto& o : j.at("orbits")) {
    for (std::size_t k = 0; k < o.at("galois_orbits").get<std::size_t>(); ++k)
      p.orbit_sizes.push_back(o.at("orbit_size").get<std::size_t>());
    const json& r = o.at("record");
    p.records.push_back({r.at("multiplicity").get<int>(), r.at("milnor").get<int>(), r.at("tjurina").get<int>()});
    const json& t = r.at("tangent_cone_smooth");
    p.tangent_cone_smooth.push_back(t.is_null() ? std::nullopt : std::optional<bool>(t.get<bool>()));
  }
  std::sort(p.orbit_sizes.begin(), p.orbit_sizes.end());
  const json& deg = j.at("global_tjurina_degree");
  if (!deg.is_null()) p.tjurina_degree = deg.get<std::int64_t>();
  for (auto& l : j.at("singular_lines")) p.lines += l.at("orbit_size").get<std::size_t>();
  return p;
}

std::vector<json> obtain_certificates(const std::vector<std::string>& names, const RunConfig& cfg,
                                      std::vector<std::string>* provenance) {
  std::vector<json> out(names.size());
  std::vector<std::string> prov(names.size(), "computed");
  std::vector<std::size_t> todo;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (!cfg.fixtures.empty()) {
      std::filesystem::path p = std::filesystem::path(cfg.fixtures) / (names[k] + ".json");
      std::ifstream in(p);
      if (in) {
        try {
          json j = json::parse(in);
          if (check_certificate(j).ok) {
            out[k] = std::move(j);
            prov[k] = "fixture";
            continue;
          }
        } catch (const json::exception&) {
        }
      }
    }
    todo.push_back(k);
  }
  parallel_for(todo.size(), cfg.threads, [&](std::size_t t) {
    std::size_t k = todo[t];
    SurfaceRequest r;
    r.name = names[k];
    out[k] = certificate_to_json(cmd_certify(r, cfg).certificate);
  });
  if (provenance) *provenance = prov;
  return out;
}

namespace {

std::vector<TableRow> build_rows(const std::vector<std::pair<std::string, std::vector<std::string>>>& spec,
                                 const RunConfig& cfg) {
  std::vector<std::string> names;
  for (auto& [label, surfaces] : spec) names.insert(names.end(), surfaces.begin(), surfaces.end());
  std::vector<std::string> prov;
  auto certs = obtain_certificates(names, cfg, &prov);
  std::vector<TableRow> rows;
  std::size_t k = 0;
  for (auto& [label, surfaces] : spec) {
    TableRow row;
    row.label = label;
    row.surfaces = surfaces;
    row.match = true;
    std::vector<std::string> got;
    for (auto& s : surfaces) {
      const auto& d = distinguished(s);
      row.expected = describe(d.expected);
      if (d.expected.record[0] != 0)
        row.expected += " (" + std::to_string(d.expected.record[0]) + ", " + std::to_string(d.expected.record[1]) +
                        ", " + std::to_string(d.expected.record[2]) + ")";
      CertifiedProfile p = certified_profile(certs[k]);
      std::string g = describe(p);
      if (p.status == CertStatus::Success && !p.records.empty() && d.expected.record[0] != 0)
        g += " (" + std::to_string(p.records[0][0]) + ", " + std::to_string(p.records[0][1]) + ", " +
             std::to_string(p.records[0][2]) + ")";
      if (std::find(got.begin(), got.end(), g) == got.end()) got.push_back(g);
      for (auto& m : profile_mismatches(p, d.expected)) {
        row.match = false;
        row.notes.push_back(s + ": " + m);
      }
      if (membership_discrepancy(d)) {
        std::string c;
        for (auto& n : curves_through(d.point)) c += (c.empty() ? "" : ",") + n;
        std::string st;
        for (auto& n : d.stated_curves) st += (st.empty() ? "" : ",") + n;
        row.notes.push_back(s + ": lies on {" + c + "}, stated {" + st + "}");
      }
      if (prov[k] == "fixture") row.notes.push_back(s + ": pinned certificate");
      ++k;
    }
    for (auto& g : got) row.certified += (row.certified.empty() ? "" : " | ") + g;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<TableRow> cmd_report(const RunConfig& cfg) {
  return build_rows({{"S12±", {"plus", "minus"}},
                     {"S12^♣", {"club"}},
                     {"S12^♦", {"diamond"}},
                     {"S12^♥", {"heart"}},
                     {"S12^♠±", {"spade+", "spade-"}}},
                    cfg);
}

std::vector<TableRow> cmd_table(const RunConfig& cfg) {
  std::vector<std::pair<std::string, std::vector<std::string>>> spec;
  for (auto& d : distinguished_points()) {
    std::string label = d.generic_sample ? "generic " + d.stated_curves.front() : "S12^" + d.point.name;
    spec.push_back({label, {d.surface}});
  }
  return build_rows(spec, cfg);
}

std::string render_rows(const std::vector<TableRow>& rows) {
  // widths count code points so the suit symbols line up
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  };
  std::size_t w0 = 7, w1 = 8, w2 = 9;
  for (auto& r : rows) {
    w0 = std::max(w0, width(r.label));
    w1 = std::max(w1, width(r.expected));
    w2 = std::max(w2, width(r.certified));
  }
  auto pad = [&](const std::string& s, std::size_t w) { return s + std::string(w - width(s), ' '); };
  std::ostringstream o;
  o << pad("surface", w0) << "  " << pad("expected", w1) << "  " << pad("certified", w2) << "  match\n";
  for (auto& r : rows) {
    o << pad(r.label, w0) << "  " << pad(r.expected, w1) << "  " << pad(r.certified, w2) << "  "
      << (r.match ? "yes" : "NO") << "\n";
    for (auto& n : r.notes) o << "    " << n << "\n";
  }
  return o.str();
}

json rows_json(const std::vector<TableRow>& rows) {
  json a = json::array();
  for (auto& r : rows)
    a.push_back({{"label", r.label},
                 {"surfaces", r.surfaces},
                 {"expected", r.expected},
                 {"certified", r.certified},
                 {"match", r.match},
                 {"notes", r.notes}});
  return json{{"schema", kReportSchema}, {"rows", a}};
}

}  // namespace g29::cli
