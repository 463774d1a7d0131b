#pragma once

#include "g29/paramspace/paramspace.hpp"
#include "g29/singlocus/certificate_io.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace g29::cli {

inline constexpr const char* kReportSchema = "g29-report/1";

enum class Tier { Desk, Extended };
Tier parse_tier(const std::string& s);
std::string to_string(Tier t);

/// Exit codes shared by every subcommand.
enum Exit : int { kOk = 0, kMismatch = 2, kBudget = 3, kInputError = 4 };

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string subcommand;
  Tier tier = Tier::Desk;
  std::string out;         // empty: stdout
  long precision = 53;     // bits, floating evaluation in mesh
  int threads = 1;         // surfaces certified concurrently by report/table
  bool json = false;
  bool exact = false;      // exact Jacobian basis besides the modular bound
  std::string fixtures;    // directory with pinned certificates, from --fixtures or G29_FIXTURES
};

/// Desk: modular Jacobian bound, 30 min per basis. Extended: adds the exact
/// basis over the surface field and allows 12 h.
CertifyOptions certify_options(const RunConfig& cfg);

/// Runs fn(0..n-1) on up to `threads` workers; results keep index order.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

nlohmann::json cmd_verify_group();
nlohmann::json cmd_verify_invariants();

/// A registered surface name, or a pencil member from parameter strings.
/// Parameters are read in Q, then Q(i) ("i"), then Q(sqrt 3) ("r") unless a
/// minimal polynomial is given. Throws InputError.
struct SurfaceRequest {
  std::string name;
  std::string lambda, mu;
  std::string minpoly, symbol = "a";  // optional field for the parameters
};
SurfaceSpec resolve_surface(const SurfaceRequest& r, const DistinguishedPoint** expected = nullptr);

struct CertifyOutcome {
  Certificate certificate;
  const DistinguishedPoint* expected = nullptr;
  std::vector<std::string> mismatches;
  int exit_code = kOk;
};
CertifyOutcome cmd_certify(const SurfaceRequest& r, const RunConfig& cfg);
int exit_code_for(const Certificate& c, const std::vector<std::string>& mismatches);

CheckResult cmd_check_certificate(const std::string& path);

/// Registry equations, the intersection table and point memberships.
nlohmann::json cmd_curves();

struct TableRow {
  std::string label;                  // e.g. "S12±"
  std::vector<std::string> surfaces;  // registry names summarized by the row
  std::string expected;               // e.g. "320 A2"
  std::string certified;              // rendered from the certificates
  bool match = false;
  std::vector<std::string> notes;
};

/// Certificates for the named surfaces, read from cfg.fixtures when a valid
/// "<name>.json" is there and computed otherwise.
/// Provenance is "fixture" or "computed" per name.
std::vector<nlohmann::json> obtain_certificates(const std::vector<std::string>& names, const RunConfig& cfg,
                                                std::vector<std::string>* provenance = nullptr);

/// The five-row summary: S12±, ♣, ♦, ♥, ♠±.
std::vector<TableRow> cmd_report(const RunConfig& cfg);
/// Every registered parameter, named and generic samples.
std::vector<TableRow> cmd_table(const RunConfig& cfg);

std::string render_rows(const std::vector<TableRow>& rows);
nlohmann::json rows_json(const std::vector<TableRow>& rows);

/// The profile part of a certificate JSON.
CertifiedProfile certified_profile(const nlohmann::json& j);

}  // namespace g29::cli
