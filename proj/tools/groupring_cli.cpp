// groupring: analyze finite group rings and verify theorem suites.
//
// Exit codes: 0 success, 1 a theorem instance FAILed (or internal error),
// 2 usage or parse error, 3 size cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "groupring/harness.hpp"
#include "groupring/report.hpp"

namespace {

using namespace groupring;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

void write_json(const std::string& path, const nlohmann::ordered_json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

struct CommonFlags {
  std::string json_path;
  bool witnesses = false;
  std::size_t cap = 0;
  std::size_t sr1_cap = 0;
  bool sample = false;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  void attach(CLI::App& cmd) {
    cmd.add_option("--json", json_path, "Write the machine-readable report to this path");
    cmd.add_flag("--witnesses", witnesses, "Include full witness tables");
    cmd.add_option("--cap", cap, "Ring size cap (default 65536, or GROUPRING_CAP)");
    cmd.add_option("--sr1-cap", sr1_cap, "Stable range enumeration cap (default 1024)");
    cmd.add_flag("--sample", sample, "Sample pairs when stable range exceeds its cap");
    cmd.add_option("--seed", seed, "Seed for sampling modes")->default_val(0);
    cmd.add_option("--threads", threads, "Worker threads")->default_val(1)->check(CLI::Range(1u, 256u));
  }

  void apply() const {
    auto& limits = Limits::global();
    if (cap) limits.size_cap = cap;
    if (sr1_cap) limits.stable_range_cap = sr1_cap;
    limits.threads = threads;
  }
};

int run_analyze(const std::string& spec_text, const std::string& predicate_list, const CommonFlags& flags) {
  const RingSpec spec = parse_ring_spec(spec_text);
  const RingInstance inst = build_ring(spec);
  std::vector<std::string> predicates = split_list(predicate_list);
  if (predicates.empty()) {
    for (const auto& p : analyze_predicates())
      if (p != "sr1" || inst.ring().size() <= Limits::global().stable_range_cap) predicates.push_back(p);
  }
  AnalyzeOptions opt;
  opt.witnesses = flags.witnesses || !flags.json_path.empty();
  opt.sample = flags.sample;
  opt.seed = flags.seed;
  opt.stable_range_cap = Limits::global().stable_range_cap;
  const auto doc = analyze_ring(spec.canonical(), inst.ring(), predicates, opt);
  std::cout << format_analysis(doc);
  if (!flags.json_path.empty()) write_json(flags.json_path, doc);
  return 0;
}

int run_verify(const std::string& theorem, const std::string& base, const std::string& group,
               std::optional<std::uint32_t> p, const std::string& suite, bool timings, const CommonFlags& flags) {
  std::vector<SuiteEntry> entries;
  if (!suite.empty()) {
    if (!theorem.empty()) throw SuiteError("give either a theorem id or --suite, not both");
    entries = load_suite(suite);
  } else {
    if (theorem.empty()) throw SuiteError("verify needs a theorem id or --suite");
    if (!is_theorem_id(theorem)) throw SuiteError("unknown theorem id '" + theorem + "'");
    if (base.empty()) throw SuiteError("verify " + theorem + " needs --base");
    std::string line = theorem + " " + base + " " + (group.empty() ? "-" : group);
    if (p) line += " p=" + std::to_string(*p);
    entries = parse_suite(line);
  }
  HarnessOptions opt;
  opt.keep_witnesses = flags.witnesses;
  opt.sample = flags.sample;
  opt.seed = flags.seed;
  opt.size_cap = Limits::global().size_cap;
  opt.stable_range_cap = Limits::global().stable_range_cap;
  const auto reports = run_suite(entries, opt, flags.threads);
  std::cout << format_reports(reports);
  if (!flags.json_path.empty()) write_json(flags.json_path, verify_document(reports, flags.seed, timings));
  for (const auto& r : reports)
    if (r.status == Status::Fail) return kExitFail;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive verification of finite group ring properties"};
  app.require_subcommand(1);

  CommonFlags analyze_flags, verify_flags;
  std::string spec_text, predicate_list;
  auto* analyze = app.add_subcommand("analyze", "Compute structure and predicates of one ring");
  analyze->add_option("spec", spec_text, "Ring spec, e.g. Z4[C2], Z2xZ6[C2], Z9")->required();
  analyze->add_option("--predicates", predicate_list,
                      "Comma list of units,idempotents,radical,local,abelian,clean,two-units,z2-factor,sr1");
  analyze_flags.attach(*analyze);

  std::string theorem, base, group, suite;
  std::optional<std::uint32_t> p;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "Verify a theorem on an instance or a whole suite");
  verify->add_option("theorem", theorem, "T4, T5, L3, L6, L7, T8 or T9");
  verify->add_option("--base", base, "Base ring spec, e.g. Z4");
  verify->add_option("--group", group, "Group spec, e.g. C2, S3, C2xC2");
  verify->add_option("--p", p, "Prime for T5 and L3");
  verify->add_option("--suite", suite, "Suite config file");
  verify->add_flag("--timings", timings, "Include wall times in the JSON report");
  verify_flags.attach(*verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      analyze_flags.apply();
      return run_analyze(spec_text, predicate_list, analyze_flags);
    }
    verify_flags.apply();
    return run_verify(theorem, base, group, p, suite, timings, verify_flags);
  } catch (const SpecParseError& e) {
    std::cerr << e.annotated() << "\n";
    return kExitUsage;
  } catch (const SuiteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
}
