#pragma once

#include "g29/singlocus/certificate.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace g29 {

inline constexpr const char* kCertificateSchema = "g29-certificate/1";

/// Field elements and polynomials appear in their text syntax, e.g. "(3+r)/384".
nlohmann::json certificate_to_json(const Certificate& c);

struct CheckResult {
  bool ok = true;
  std::vector<std::string> problems;
  std::size_t points_checked = 0;
};

/// Re-verification by evaluation only: representatives and every orbit point
/// annihilate all partials, orbits close at the recorded sizes, class
/// memberships and Galois counts recompute, and the Tjurina sum closes
/// against the recorded global degree.
CheckResult check_certificate(const nlohmann::json& j);

}  // namespace g29
