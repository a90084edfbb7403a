#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "groupring/predicates.hpp"
#include "groupring/spec_string.hpp"

namespace groupring {

enum class Status { Pass, Skipped, Fail };

std::string to_string(Status s);

struct Hypothesis {
  std::string name;
  bool holds;
  std::string detail;
};

struct Conclusion {
  std::string name;
  bool value;
};

/// One serialized witness: {property, element_index, witness_indices, verified}.
struct WitnessRecord {
  std::string property;
  Elem element_index;
  std::vector<Elem> witness_indices;
  bool verified;
};

/// Outcome of one theorem on one instance. PASS requires every hypothesis
/// and every conclusion; a failed hypothesis gives SKIPPED.
struct TheoremReport {
  std::string theorem;  // T4, T5, L3.1, L6, L7, T8, T9
  std::string base;
  std::string group;
  std::optional<std::uint32_t> p;
  std::vector<Hypothesis> hypotheses;
  std::vector<Conclusion> conclusions;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  std::vector<std::string> notes;
  std::vector<WitnessRecord> witnesses;
  Status status = Status::Fail;
  std::string skip_reason;
  double wall_time_ms = 0;

  /// Derives status from hypotheses and conclusions.
  void finalize();
};

struct HarnessOptions {
  bool keep_witnesses = false;  // attach witness tables to reports
  bool sample = false;          // allow sampled stable range above the cap
  std::uint64_t seed = 0;
  std::size_t size_cap = Limits::global().size_cap;
  std::size_t stable_range_cap = Limits::global().stable_range_cap;
};

/// R[C2] and R[S3] are clean; exercises the order-2 splitting when 2 is a
/// unit and locality of R[C2] when 2 lies in J(R) of a local R.
std::vector<TheoremReport> check_theorem4(const RingSpec& base, const HarnessOptions& opt = {});
/// R[C_p] is clean whenever p*1 lies in J(R).
TheoremReport check_theorem5(const RingSpec& base, std::uint32_t p, const HarnessOptions& opt = {});
/// Local R, p-group G, p*1 in J(R) imply R[G] local.
TheoremReport check_lemma3_local(const RingSpec& base, std::uint32_t p, const GroupSpec& group,
                                 const HarnessOptions& opt = {});
/// J(R)G lies in J(RG).
TheoremReport check_lemma6(const RingSpec& base, const GroupSpec& group, const HarnessOptions& opt = {});
/// No Z2 factor of R implies none of R[G], via the scalar embedding.
TheoremReport check_lemma7(const RingSpec& base, const GroupSpec& group, const HarnessOptions& opt = {});
/// The four sum-of-two-units conditions agree.
TheoremReport check_theorem8(const RingSpec& base, const GroupSpec& group, const HarnessOptions& opt = {});
/// R[G] has stable range one.
TheoremReport check_theorem9(const RingSpec& base, const GroupSpec& group, const HarnessOptions& opt = {});

// ---- suites -----------------------------------------------------------------

struct SuiteEntry {
  std::string theorem;  // T4, T5, L3, L6, L7, T8, T9
  std::string base;
  std::string group;    // "-" when unused
  std::optional<std::uint32_t> p;
  std::size_t line = 0;
};

class SuiteError : public Error {
 public:
  using Error::Error;
};

/// Lines "<theorem-id> <base-spec> <group-spec> [p=<prime>]"; '#' comments.
std::vector<SuiteEntry> parse_suite(const std::string& text);
std::vector<SuiteEntry> load_suite(const std::string& path);

bool is_theorem_id(const std::string& id);

/// Runs one entry; T4 yields two reports.
std::vector<TheoremReport> run_entry(const SuiteEntry& entry, const HarnessOptions& opt = {});

/// Runs entries (possibly concurrently) and returns reports in declaration order.
std::vector<TheoremReport> run_suite(const std::vector<SuiteEntry>& entries, const HarnessOptions& opt = {},
                                     unsigned threads = 1);

}  // namespace groupring
