#include "g29/cli/commands.hpp"
#include "g29/cli/mesh.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace g29;
using namespace g29::cli;
using nlohmann::json;

namespace {

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw InputError("cannot write " + cfg.out);
  f << text;
}

int run(CLI::App& app, RunConfig& cfg, SurfaceRequest& req, std::string& tier, std::string& cert_path,
        MeshOptions& mesh) {
  cfg.tier = parse_tier(tier);
  if (cfg.threads < 1) throw InputError("--threads must be positive");
  if (cfg.fixtures.empty())
    if (const char* env = std::getenv("G29_FIXTURES")) cfg.fixtures = env;
  const std::string& sub = cfg.subcommand;

  if (sub == "verify-group") {
    json j = cmd_verify_group();
    emit(cfg, j.dump(2) + "\n");
    bool ok = j["order"] == 7680 && j["center_order"] == 4 && j["hyperplanes"] == 40 &&
              j["conj_s3_equals_s1_s3_s1"] == true;
    return ok ? kOk : kMismatch;
  }
  if (sub == "verify-invariants") {
    json j = cmd_verify_invariants();
    emit(cfg, j.dump(2) + "\n");
    bool ok = j["invariant"]["f1"] == true && j["invariant"]["f2"] == true && j["invariant"]["f3"] == true &&
              j["hessian_proportional"] == true && j["degree_x_f3"] == 8;
    return ok ? kOk : kMismatch;
  }
  if (sub == "certify") {
    auto r = cmd_certify(req, cfg);
    json cert = certificate_to_json(r.certificate);
    json summary{{"schema", kReportSchema},
                 {"surface", r.certificate.surface_id},
                 {"status", cert["status"]},
                 {"profile", cert["profile"]},
                 {"global_tjurina_degree", cert["global_tjurina_degree"]},
                 {"expected", r.expected ? json(describe(r.expected->expected)) : json(nullptr)},
                 {"mismatches", r.mismatches},
                 {"exit_code", r.exit_code}};
    if (cfg.out.empty()) {
      std::cout << (cfg.json ? json{{"summary", summary}, {"certificate", cert}}.dump(2) : cert.dump(2)) << "\n";
    } else {
      emit(cfg, cert.dump(2) + "\n");
      if (cfg.json) {
        std::cout << summary.dump(2) << "\n";
      } else {
        std::cout << r.certificate.surface_id << ": " << to_string(r.certificate.status) << ", "
                  << describe(certified_profile(r.certificate));
        if (r.certificate.jacobian_degree) std::cout << ", global Tjurina degree " << *r.certificate.jacobian_degree;
        std::cout << "\n";
      }
    }
    for (auto& m : r.mismatches) std::cerr << "mismatch: " << m << "\n";
    return r.exit_code;
  }
  if (sub == "check-certificate") {
    auto r = cmd_check_certificate(cert_path);
    json j{{"schema", kReportSchema}, {"ok", r.ok}, {"points_checked", r.points_checked}, {"problems", r.problems}};
    if (cfg.json) {
      emit(cfg, j.dump(2) + "\n");
    } else {
      std::string s = std::string(r.ok ? "accepted" : "rejected") + " (" + std::to_string(r.points_checked) +
                      " points evaluated)\n";
      for (auto& p : r.problems) s += "  " + p + "\n";
      emit(cfg, s);
    }
    return r.ok ? kOk : kMismatch;
  }
  if (sub == "mesh") {
    SurfaceSpec s = resolve_surface(req);
    mesh.precision = cfg.precision;
    Mesh m;
    try {
      m = mesh_surface(s, mesh);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    for (auto& w : m.warnings) std::cerr << "warning: " << w << "\n";
    std::ostringstream o;
    write_obj(o, m, s.id + ", chart " + std::to_string(mesh.chart) + " = 1, resolution " +
                        std::to_string(mesh.resolution));
    emit(cfg, o.str());
    if (cfg.json)
      std::cerr << json{{"vertices", m.vertices.size()}, {"faces", m.faces.size()}, {"warnings", m.warnings}}.dump()
                << "\n";
    return kOk;
  }
  if (sub == "report" || sub == "table") {
    auto rows = sub == "report" ? cmd_report(cfg) : cmd_table(cfg);
    emit(cfg, cfg.json ? rows_json(rows).dump(2) + "\n" : render_rows(rows));
    bool all = std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.match; });
    return all ? kOk : kMismatch;
  }
  if (sub == "curves") {
    json j = cmd_curves();
    emit(cfg, j.dump(2) + "\n");
    bool ok = j["summary"]["points"] == 39 && j["summary"]["transversal"] == 33;
    return ok ? kOk : kMismatch;
  }
  std::cerr << app.help();
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G29-invariant dodecic surfaces: group, invariants, singularity certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  SurfaceRequest req;
  std::string tier = "desk", cert_path;
  MeshOptions mesh;

  app.add_option("--tier", tier, "desk or extended (adds the exact Jacobian basis)")->check(
      CLI::IsMember({"desk", "extended"}));
  app.add_option("--threads", cfg.threads, "surfaces certified concurrently by report/table");
  app.add_option("--precision", cfg.precision, "bits for floating evaluation (mesh)");
  app.add_option("--out", cfg.out, "output file instead of stdout");
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_flag("--exact", cfg.exact, "also compute the exact Jacobian basis");
  app.add_option("--fixtures", cfg.fixtures, "directory of pinned certificates <name>.json (default $G29_FIXTURES)");

  app.add_subcommand("verify-group", "order, center, reflections, hyperplanes of G29");
  app.add_subcommand("verify-invariants", "invariance of f1, f2, f3 and the Hessian relation");
  auto surface_opts = [&](CLI::App* s) {
    s->add_option("surface", req.name, "registered surface name (plus, club, generic-A, ...)");
    s->add_option("--lambda", req.lambda, "lambda in text syntax, e.g. (3+r)/384");
    s->add_option("--mu", req.mu, "mu in text syntax");
    s->add_option("--minpoly", req.minpoly, "minimal polynomial of the parameter field, e.g. a^2-5");
    s->add_option("--symbol", req.symbol, "generator symbol of --minpoly");
  };
  surface_opts(app.add_subcommand("certify", "certify the singular locus of a pencil member"));
  app.add_subcommand("check-certificate", "re-verify a certificate by evaluation only")
      ->add_option("path", cert_path, "certificate JSON")
      ->required();
  auto* m = app.add_subcommand("mesh", "OBJ mesh of the real zero set in an affine chart");
  surface_opts(m);
  m->add_option("--chart", mesh.chart, "variable set to 1: 0=x 1=y 2=z 3=t");
  m->add_option("--resolution", mesh.resolution, "cells per axis");
  m->add_option("--box", mesh.half_width, "half-width of the cube");
  app.add_subcommand("report", "five-row summary of certified vs expected singularities");
  app.add_subcommand("table", "certified vs expected for every registered parameter");
  app.add_subcommand("curves", "curve registry and pairwise intersections as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  try {
    return run(app, cfg, req, tier, cert_path, mesh);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
