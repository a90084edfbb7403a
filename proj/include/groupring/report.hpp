#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "groupring/harness.hpp"

namespace groupring {

inline constexpr const char* kReportSchema = "groupring-report/1";

nlohmann::ordered_json to_json(const WitnessRecord& w);
nlohmann::ordered_json to_json(const TheoremReport& r, bool include_timings = false);

/// {"schema", "command": "verify", "seed", "reports": [...]}.
nlohmann::ordered_json verify_document(const std::vector<TheoremReport>& reports, std::uint64_t seed,
                                       bool include_timings = false);

inline const std::vector<std::string>& analyze_predicates() {
  static const std::vector<std::string> names{"units", "idempotents", "radical", "local", "abelian",
                                              "clean", "two-units", "z2-factor", "sr1"};
  return names;
}

struct AnalyzeOptions {
  bool witnesses = false;  // full witness tables in the document
  bool sample = false;
  std::uint64_t seed = 0;
  std::size_t stable_range_cap = Limits::global().stable_range_cap;
};

/// Runs the requested predicates on `ring`. Result:
/// {"schema", "command": "analyze", "ring", "size", "commutative",
///  "results": {name: {...}}, "witnesses": [...]}.
nlohmann::ordered_json analyze_ring(const std::string& spec, const FiniteRing& ring,
                                    const std::vector<std::string>& predicates, const AnalyzeOptions& opt = {});

/// Tab-aligned summary of an analyze document.
std::string format_analysis(const nlohmann::ordered_json& doc);
/// One line per report plus its conclusions.
std::string format_reports(const std::vector<TheoremReport>& reports);

}  // namespace groupring
