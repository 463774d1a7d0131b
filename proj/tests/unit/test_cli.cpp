#include "doctest.h"

#include "g29/cli/commands.hpp"
#include "g29/cli/mesh.hpp"
#include "g29/multipoly/invariants.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

using namespace g29;
using namespace g29::cli;
using nlohmann::json;

namespace {

SurfaceSpec quadric(const std::string& eq) { return surface_from_poly("quadric", parse_poly(eq, xyzt_ring())); }

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("g29_cli_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

CertifiedProfile mock(CertStatus st, std::map<std::string, std::size_t> types, std::vector<std::size_t> orbits,
                      std::int64_t degree) {
  CertifiedProfile p;
  p.status = st;
  p.types = std::move(types);
  p.orbit_sizes = std::move(orbits);
  p.tjurina_degree = degree;
  return p;
}

}  // namespace

TEST_CASE("tiers and options") {
  CHECK(parse_tier("desk") == Tier::Desk);
  CHECK(parse_tier("extended") == Tier::Extended);
  CHECK_THROWS_AS(parse_tier("laptop"), InputError);
  RunConfig cfg;
  CHECK_FALSE(certify_options(cfg).exact_jacobian);
  cfg.tier = Tier::Extended;
  CHECK(certify_options(cfg).exact_jacobian);
  CHECK(certify_options(cfg).budget.seconds > certify_options(RunConfig{}).budget.seconds);
}

TEST_CASE("parallel_for keeps index order and rethrows") {
  for (int threads : {1, 2, 5}) {
    std::vector<int> out(37, -1);
    parallel_for(out.size(), threads, [&](std::size_t k) { out[k] = static_cast<int>(k * k); });
    for (std::size_t k = 0; k < out.size(); ++k) CHECK(out[k] == static_cast<int>(k * k));
  }
  CHECK_THROWS_AS(parallel_for(4, 2, [](std::size_t k) { if (k == 3) throw std::runtime_error("x"); }),
                  std::runtime_error);
}

TEST_CASE("profile comparison") {
  ExpectedProfile e;
  e.types = {{"A1", 560}};
  e.orbit_sizes = {80, 480};
  e.tjurina_degree = 560;
  CHECK(profile_mismatches(mock(CertStatus::Success, {{"A1", 560}}, {80, 480}, 560), e).empty());
  // each disagreement is reported on its own
  CHECK(profile_mismatches(mock(CertStatus::Success, {{"A1", 560}}, {560}, 560), e).size() == 1);
  CHECK(profile_mismatches(mock(CertStatus::Success, {{"A2", 560}}, {80, 480}, 1120), e).size() == 2);
  CHECK(profile_mismatches(mock(CertStatus::BudgetExceeded, {}, {}, 0), e).size() == 1);

  ExpectedProfile lines;
  lines.dimension = 1;
  lines.lines = 30;
  auto p = mock(CertStatus::PositiveDimensional, {}, {}, 0);
  p.lines = 30;
  CHECK(profile_mismatches(p, lines).empty());
  p.lines = 29;
  CHECK_FALSE(profile_mismatches(p, lines).empty());

  ExpectedProfile x;
  x.types = {{"X", 20}};
  x.tjurina_degree = 520;
  x.record = {4, 27, 26};
  x.tangent_cone_smooth = true;
  auto h = mock(CertStatus::Success, {{"X", 20}}, {20}, 520);
  h.records = {{4, 27, 26}};
  h.tangent_cone_smooth = {true};
  CHECK(profile_mismatches(h, x).empty());
  h.tangent_cone_smooth = {false};
  CHECK(profile_mismatches(h, x).size() == 1);
  h.records = {{4, 27, 27}};
  CHECK(profile_mismatches(h, x).size() == 2);
}

TEST_CASE("exit codes") {
  Certificate c;
  c.status = CertStatus::Success;
  CHECK(exit_code_for(c, {}) == kOk);
  CHECK(exit_code_for(c, {"types"}) == kMismatch);
  c.status = CertStatus::PositiveDimensional;
  CHECK(exit_code_for(c, {}) == kOk);
  c.status = CertStatus::Incomplete;
  CHECK(exit_code_for(c, {}) == kMismatch);
  c.status = CertStatus::BudgetExceeded;
  CHECK(exit_code_for(c, {"status"}) == kBudget);
}

TEST_CASE("surface requests") {
  const DistinguishedPoint* e = nullptr;
  SurfaceSpec s = resolve_surface(SurfaceRequest{"club", "", "", "", "a"}, &e);
  REQUIRE(e != nullptr);
  CHECK(e->surface == "club");
  CHECK(s.F == pencil_polynomial(s.lambda, s.mu, s.field));

  // the same parameters typed in inherit the registered expectation
  SurfaceSpec t = resolve_surface(SurfaceRequest{"", "1/40", "1/5400", "", "a"}, &e);
  REQUIRE(e != nullptr);
  CHECK(e->surface == "club");
  CHECK(t.F == s.F);

  resolve_surface(SurfaceRequest{"", "(3+r)/384", "(-5+3*r)/6912", "", "a"}, &e);
  REQUIRE(e != nullptr);
  CHECK(e->surface == "plus");
  resolve_surface(SurfaceRequest{"", "(3+i)/640", "(-7+i)/6400", "", "a"}, &e);
  REQUIRE(e != nullptr);
  CHECK(e->surface == "spade+");

  SurfaceSpec u = resolve_surface(SurfaceRequest{"", "a/5", "1/3", "a^2-5", "a"}, &e);
  CHECK(e == nullptr);
  CHECK(u.field->degree() == 2);

  CHECK_THROWS_AS(resolve_surface(SurfaceRequest{"nowhere", "", "", "", "a"}), InputError);
  CHECK_THROWS_AS(resolve_surface(SurfaceRequest{"", "1/2", "", "", "a"}), InputError);
  CHECK_THROWS_AS(resolve_surface(SurfaceRequest{"", "1/2+q", "0", "", "a"}), InputError);
  CHECK_THROWS_AS(resolve_surface(SurfaceRequest{"", "a", "0", "a^2-4", "a"}), InputError);
}

TEST_CASE("check-certificate input errors") {
  CHECK_THROWS_AS(cmd_check_certificate("/nonexistent/cert.json"), InputError);
  auto dir = scratch("bad");
  std::ofstream(dir / "x.json") << "{ not json";
  CHECK_THROWS_AS(cmd_check_certificate((dir / "x.json").string()), InputError);
}

TEST_CASE("certificates from fixtures, deterministic across thread counts") {
  std::vector<std::string> names{"club", "heart", "diamond"};
  RunConfig one, three;
  three.threads = 3;
  std::vector<std::string> prov;
  auto a = obtain_certificates(names, one, &prov);
  CHECK(prov == std::vector<std::string>(3, "computed"));
  auto b = obtain_certificates(names, three);
  for (std::size_t k = 0; k < names.size(); ++k) CHECK(a[k].dump() == b[k].dump());

  // profile read back from JSON agrees with the in-memory one
  auto club = cmd_certify(SurfaceRequest{"club", "", "", "", "a"}, one);
  CHECK(club.exit_code == kOk);
  auto pj = certified_profile(a[0]), pc = certified_profile(club.certificate);
  CHECK(pj.types == pc.types);
  CHECK(pj.orbit_sizes == pc.orbit_sizes);
  CHECK(pj.tjurina_degree == pc.tjurina_degree);
  CHECK(pj.records == pc.records);

  auto dir = scratch("fixtures");
  std::ofstream(dir / "club.json") << a[0].dump();
  json bad = a[1];
  bad["orbits"][0]["orbit_size"] = 21;
  std::ofstream(dir / "heart.json") << bad.dump();
  RunConfig pinned;
  pinned.fixtures = dir.string();
  auto c = obtain_certificates(names, pinned, &prov);
  CHECK(prov == std::vector<std::string>{"fixture", "computed", "computed"});
  CHECK(c[1].dump() == a[1].dump());
}

TEST_CASE("rendered rows") {
  TableRow r{"S12^♣", {"club"}, "160 A3", "160 A3", true, {}};
  TableRow s{"generic L2", {"generic-L2"}, "120 A1", "120 A2", false, {"generic-L2: types: got 120 A2"}};
  std::string out = render_rows({r, s});
  CHECK(out.find("S12^♣") != std::string::npos);
  CHECK(out.find("NO") != std::string::npos);
  CHECK(out.find("    generic-L2: types") != std::string::npos);
  json j = rows_json({r, s});
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["rows"][1]["match"] == false);
}

TEST_CASE("mesh of a sphere") {
  MeshOptions o;
  o.resolution = 24;
  o.half_width = 1.3;  // no grid node exactly on the sphere
  Mesh m = mesh_surface(quadric("x^2+y^2+z^2-t^2"), o);
  REQUIRE_FALSE(m.faces.empty());
  CHECK(m.warnings.empty());
  // vertices interpolate linearly along edges of length h; the radial error is O(h^2)
  const double h = 2 * o.half_width / o.resolution, tol = h * h;
  for (auto& v : m.vertices) CHECK(std::abs(std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]) - 1) < tol);
  // closed surface of genus 0
  std::set<std::pair<int, int>> edges;
  for (auto& f : m.faces)
    for (int k = 0; k < 3; ++k) edges.insert(std::minmax(f[k], f[(k + 1) % 3]));
  long chi = static_cast<long>(m.vertices.size()) - static_cast<long>(edges.size()) + static_cast<long>(m.faces.size());
  CHECK(chi == 2);
  // every face index is in range
  for (auto& f : m.faces)
    for (int k : f) CHECK((k >= 0 && k < static_cast<int>(m.vertices.size())));
  // a higher working precision moves no sign on this grid
  o.precision = 128;
  Mesh p = mesh_surface(quadric("x^2+y^2+z^2-t^2"), o);
  CHECK(p.faces.size() == m.faces.size());
}

TEST_CASE("mesh errors and empty loci") {
  MeshOptions o;
  o.resolution = 0;
  CHECK_THROWS_AS(mesh_surface(quadric("x^2+y^2+z^2-t^2"), o), std::invalid_argument);
  o.resolution = 8;
  o.chart = 4;
  CHECK_THROWS_AS(mesh_surface(quadric("x^2+y^2+z^2-t^2"), o), std::invalid_argument);
  o.chart = 3;
  Mesh empty = mesh_surface(quadric("x^2+y^2+z^2+t^2"), o);
  CHECK(empty.faces.empty());
  CHECK(empty.warnings.size() == 1);
  FieldPtr K = NumberField::create(UPolyQ{1, 0, 1}, "i");
  SurfaceSpec c = surface_from_poly("complex", parse_poly("x^2+i*y^2-t^2", xyzt_ring(K)));
  CHECK_THROWS_AS(mesh_surface(c, o), std::invalid_argument);
  // real coefficients in a real quadratic field, under the embedding r -> +sqrt 3
  FieldPtr R = NumberField::create(UPolyQ{-3, 0, 1}, "r");
  auto coef = real_coefficients(parse_poly("r*x^2-t^2", xyzt_ring(R)));
  bool found = false;
  for (auto& [e, v] : coef)
    if (e[0] == 2) {
      CHECK(std::abs(v - std::sqrt(3.0)) < 1e-15);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("OBJ output") {
  Mesh m;
  m.axes = {"x", "y", "z"};
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  m.faces = {{0, 1, 2}};
  std::ostringstream o;
  write_obj(o, m, "triangle");
  CHECK(o.str() == "# triangle\n# axes x y z\nv 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n");
}
