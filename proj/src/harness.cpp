#include "groupring/harness.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <sstream>

namespace groupring {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Skipped: return "SKIPPED";
    case Status::Fail: return "FAIL";
  }
  return "FAIL";
}

void TheoremReport::finalize() {
  for (const auto& h : hypotheses)
    if (!h.holds) {
      status = Status::Skipped;
      skip_reason = "hypothesis failed: " + h.name;
      return;
    }
  for (const auto& c : conclusions)
    if (!c.value) {
      status = Status::Fail;
      return;
    }
  status = Status::Pass;
}

namespace {

constexpr const char* kFinitenessCaveat =
    "every finite ring is semiperfect, so this conclusion already follows from finiteness; "
    "the run is an end-to-end check of the enumeration kernel";
constexpr const char* kExchangeNote = "exchange hypothesis is automatic for finite rings (clean implies exchange)";

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

TheoremReport new_report(const std::string& id, const RingSpec& base, const std::string& group,
                         std::optional<std::uint32_t> p = std::nullopt) {
  TheoremReport r;
  r.theorem = id;
  r.base = base.canonical();
  r.group = group;
  r.p = p;
  return r;
}

/// Commutative, Abelian, exchange: each computed on the base.
void add_base_hypotheses(TheoremReport& rep, const FiniteRing& base) {
  rep.hypotheses.push_back({"base commutative", base.is_commutative(), "checked on additive generators"});
  rep.hypotheses.push_back({"base Abelian", is_abelian_ring(base), "all idempotents central"});
  rep.hypotheses.push_back({"base exchange", is_clean_ring(base).clean, "base is clean; finite rings are exchange"});
}

Elem p_times_one(const FiniteRing& r, std::uint32_t p) { return r.from_int(p); }

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
}

std::size_t clean_records(const FiniteRing& ring, const CleanTable& table, TheoremReport& rep, bool keep) {
  std::size_t verified = 0;
  for (const auto& w : table.witnesses) {
    if (!w) continue;
    const bool ok = verify_certificate(ring, *w);
    verified += ok;
    if (keep) rep.witnesses.push_back({"clean", w->element, {w->idempotent, w->unit, w->unit_inverse}, ok});
  }
  return verified;
}

std::size_t two_units_records(const FiniteRing& ring, const TwoUnitsTable& table, TheoremReport& rep, bool keep) {
  std::size_t verified = 0;
  for (const auto& w : table.witnesses) {
    if (!w) continue;
    const bool ok = verify_certificate(ring, *w);
    verified += ok;
    if (keep)
      rep.witnesses.push_back(
          {"two-units", w->element, {w->first, w->second, w->first_inverse, w->second_inverse}, ok});
  }
  return verified;
}

}  // namespace

// ---- T4 ------------------------------------------------------------------------

std::vector<TheoremReport> check_theorem4(const RingSpec& base_spec, const HarnessOptions& opt) {
  const FiniteRing base = build_base(base_spec, opt.size_cap);
  std::vector<TheoremReport> out;
  for (const char* gname : {"C2", "S3"}) {
    Stopwatch clock;
    TheoremReport rep = new_report("T4", base_spec, gname);
    add_base_hypotheses(rep, base);
    const GroupRing rg(base, build_group(parse_group_spec(gname)), opt.size_cap);
    const CleanTable table = is_clean_ring(rg.ring());
    const std::size_t witnessed =
        static_cast<std::size_t>(std::count_if(table.witnesses.begin(), table.witnesses.end(),
                                               [](const auto& w) { return w.has_value(); }));
    const std::size_t verified = clean_records(rg.ring(), table, rep, opt.keep_witnesses);
    rep.conclusions.push_back({"group ring clean", table.clean});
    rep.conclusions.push_back({"clean witnesses verified", verified == witnessed});
    rep.summary["size"] = rg.size();
    rep.summary["witnessed"] = witnessed;
    rep.summary["idempotents"] = rg.ring().idempotents().count();
    rep.summary["units"] = rg.ring().units().count();
    if (table.first_unclean) rep.summary["counterexample"] = *table.first_unclean;

    if (std::string(gname) == "C2") {
      const Elem two = base.add(base.one(), base.one());
      const bool two_unit = base.is_unit(two);
      const bool two_radical = base.jacobson_radical().contains(two);
      if (two_unit) {
        const SplittingReport split = verify_splitting_iso(rg);
        rep.conclusions.push_back({"splitting isomorphism verified", split.ok()});
        rep.summary["branch"] = "2 is a unit";
        rep.summary["splitting_pairs_checked"] = split.homomorphism.pairs_checked;
      } else if (two_radical && is_local(base)) {
        rep.conclusions.push_back({"group ring local", is_local(rg.ring())});
        rep.summary["branch"] = "2 in J(R), R local";
      } else {
        rep.summary["branch"] = "none";
        rep.notes.emplace_back(two_radical ? "2 lies in J(R) but R is not local; no proof branch applies globally"
                                           : "2 is neither a unit nor in J(R); no proof branch applies globally");
      }
    }
    rep.notes.emplace_back(kExchangeNote);
    rep.notes.emplace_back(kFinitenessCaveat);
    rep.finalize();
    rep.wall_time_ms = clock.ms();
    out.push_back(std::move(rep));
  }
  return out;
}

// ---- T5 ------------------------------------------------------------------------

TheoremReport check_theorem5(const RingSpec& base_spec, std::uint32_t p, const HarnessOptions& opt) {
  require_prime(p);
  Stopwatch clock;
  const FiniteRing base = build_base(base_spec, opt.size_cap);
  TheoremReport rep = new_report("T5", base_spec, "C" + std::to_string(p), p);
  add_base_hypotheses(rep, base);
  const Elem pe = p_times_one(base, p);
  rep.hypotheses.push_back({"p*1 in J(R)", base.jacobson_radical().contains(pe),
                            "p*1 = " + base.describe(pe) + ", |J(R)| = " +
                                std::to_string(base.jacobson_radical().size())});
  rep.notes.emplace_back(kExchangeNote);
  rep.notes.emplace_back(kFinitenessCaveat);
  if (!rep.hypotheses.back().holds) {
    rep.finalize();
    rep.wall_time_ms = clock.ms();
    return rep;
  }
  const GroupRing rg(base, make_cyclic(p), opt.size_cap);
  const CleanTable table = is_clean_ring(rg.ring());
  const std::size_t verified = clean_records(rg.ring(), table, rep, opt.keep_witnesses);
  rep.conclusions.push_back({"group ring clean", table.clean});
  rep.conclusions.push_back({"clean witnesses verified", verified == rg.size()});
  rep.summary["size"] = rg.size();
  rep.summary["witnessed"] = verified;
  rep.finalize();
  rep.wall_time_ms = clock.ms();
  return rep;
}

// ---- L3.1 ----------------------------------------------------------------------

TheoremReport check_lemma3_local(const RingSpec& base_spec, std::uint32_t p, const GroupSpec& group_spec,
                                 const HarnessOptions& opt) {
  require_prime(p);
  Stopwatch clock;
  const FiniteRing base = build_base(base_spec, opt.size_cap);
  const FiniteGroup group = build_group(group_spec);
  TheoremReport rep = new_report("L3.1", base_spec, group_spec.canonical(), p);
  const Elem pe = p_times_one(base, p);
  rep.hypotheses.push_back({"base local", is_local(base), ""});
  rep.hypotheses.push_back({"group is a p-group", is_p_group(group, p), "order " + std::to_string(group.order())});
  rep.hypotheses.push_back({"p*1 in J(R)", base.jacobson_radical().contains(pe), "p*1 = " + base.describe(pe)});
  bool all = true;
  for (const auto& h : rep.hypotheses) all = all && h.holds;
  if (all) {
    const GroupRing rg(base, group, opt.size_cap);
    const FiniteRing& r = rg.ring();
    rep.conclusions.push_back({"group ring local", is_local(r)});
    bool equal = true;
    for (std::size_t x = 0; x < r.size(); ++x)
      equal = equal && (!r.is_unit(static_cast<Elem>(x)) == r.jacobson_radical().contains(static_cast<Elem>(x)));
    rep.conclusions.push_back({"nonunits equal J(RG)", equal});
    rep.summary["size"] = r.size();
    rep.summary["units"] = r.units().count();
    rep.summary["radical"] = r.jacobson_radical().size();
  }
  rep.finalize();
  rep.wall_time_ms = clock.ms();
  return rep;
}

// ---- L6 ------------------------------------------------------------------------

TheoremReport check_lemma6(const RingSpec& base_spec, const GroupSpec& group_spec, const HarnessOptions& opt) {
  Stopwatch clock;
  const FiniteRing base = build_base(base_spec, opt.size_cap);
  TheoremReport rep = new_report("L6", base_spec, group_spec.canonical());
  const GroupRing rg(base, build_group(group_spec), opt.size_cap);
  const RadicalInclusion inc = radical_inclusion_check(rg);
  rep.conclusions.push_back({"J(R)G contained in J(RG)", inc.holds});
  rep.summary["size"] = rg.size();
  rep.summary["base_radical"] = inc.base_radical_size;
  rep.summary["group_ring_radical"] = inc.ring_radical_size;
  rep.summary["coefficient_vectors"] = inc.coefficient_vectors;
  if (inc.violator) rep.summary["counterexample"] = *inc.violator;
  rep.finalize();
  rep.wall_time_ms = clock.ms();
  return rep;
}

// ---- L7 ------------------------------------------------------------------------

TheoremReport check_lemma7(const RingSpec& base_spec, const GroupSpec& group_spec, const HarnessOptions& opt) {
  Stopwatch clock;
  const FiniteRing base = build_base(base_spec, opt.size_cap);
  TheoremReport rep = new_report("L7", base_spec, group_spec.canonical());
  const GroupRing rg(base, build_group(group_spec), opt.size_cap);

  bool embedding_ok = rg.embed(base.one()) == rg.ring().one();
  for (std::size_t a = 0; a < base.size() && embedding_ok; ++a)
    for (std::size_t b = 0; b < base.size() && embedding_ok; ++b) {
      const Elem ea = rg.embed(static_cast<Elem>(a)), eb = rg.embed(static_cast<Elem>(b));
      embedding_ok = rg.ring().add(ea, eb) == rg.embed(base.add(static_cast<Elem>(a), static_cast<Elem>(b))) &&
                     rg.ring().mul(ea, eb) == rg.embed(base.mul(static_cast<Elem>(a), static_cast<Elem>(b)));
    }
  rep.hypotheses.push_back({"scalar embedding is a unital monomorphism", embedding_ok, "R -> RG, r -> r*1"});

  const auto base_cert = has_factor_z2(base);
  const auto ring_cert = has_factor_z2(rg.ring());
  rep.conclusions.push_back({"no Z2 factor of R implies none of RG", base_cert.has_value() || !ring_cert.has_value()});

  bool restriction_ok = true;
  if (ring_cert) {
    ElementSet restricted(base.size());
    for (std::size_t r = 0; r < base.size(); ++r)
      if (ring_cert->value(rg.embed(static_cast<Elem>(r)))) restricted.insert(static_cast<Elem>(r));
    restriction_ok = verify_certificate(base, Z2FactorCertificate{restricted});
    rep.summary["restricted_certificate_size"] = restricted.count();
  }
  rep.conclusions.push_back({"restricted RG certificate is a base certificate", restriction_ok});

  const bool base_oracle = index_two_ideals(base).empty() == !base_cert.has_value();
  rep.conclusions.push_back({"base agrees with index-2 ideal oracle", base_oracle});
  if (rg.size() <= 4096) {
    const bool ring_oracle = index_two_ideals(rg.ring()).empty() == !ring_cert.has_value();
    rep.conclusions.push_back({"group ring agrees with index-2 ideal oracle", ring_oracle});
  }
  if (ring_cert) rep.conclusions.push_back({"group ring certificate verified", verify_certificate(rg.ring(), *ring_cert)});
  if (base_cert) rep.conclusions.push_back({"base certificate verified", verify_certificate(base, *base_cert)});

  rep.summary["size"] = rg.size();
  rep.summary["base_has_z2_factor"] = base_cert.has_value();
  rep.summary["group_ring_has_z2_factor"] = ring_cert.has_value();
  if (!base_cert) rep.notes.emplace_back("implication checked directly");
  else rep.notes.emplace_back("base has a Z2 factor; implication vacuous, restriction checked instead");
  if (opt.keep_witnesses && ring_cert)
    rep.witnesses.push_back({"z2-factor", rg.ring().one(), ring_cert->preimage_of_one.to_vector(), true});
  rep.finalize();
  rep.wall_time_ms = clock.ms();
  return rep;
}

// ---- T8 ------------------------------------------------------------------------

TheoremReport check_theorem8(const RingSpec& base_spec, const GroupSpec& group_spec, const HarnessOptions& opt) {
  Stopwatch clock;
  const FiniteRing base = build_base(base_spec, opt.size_cap);
  if (!base.is_commutative()) throw InvalidArgument("T8 requires a commutative base");
  TheoremReport rep = new_report("T8", base_spec, group_spec.canonical());
  add_base_hypotheses(rep, base);
  const GroupRing rg(base, build_group(group_spec), opt.size_cap);

  const bool c1 = identity_two_units(rg.ring());
  const bool c2 = identity_two_units(base);
  const auto base_cert = has_factor_z2(base);
  const bool c3 = !base_cert.has_value();
  const TwoUnitsTable table = all_two_units(rg.ring());
  const bool c4 = table.all;
  const bool oracle_c3 = index_two_ideals(base).empty();

  std::size_t witnessed = 0;
  for (const auto& w : table.witnesses) witnessed += w.has_value();
  const std::size_t verified = two_units_records(rg.ring(), table, rep, opt.keep_witnesses);

  rep.conclusions.push_back({"conditions agree", c1 == c2 && c2 == c3 && c3 == c4});
  rep.conclusions.push_back({"(iii) confirmed by index-2 ideal oracle", oracle_c3 == c3});
  rep.conclusions.push_back({"two-unit witnesses verified", verified == witnessed});
  if (base_cert) rep.conclusions.push_back({"base Z2 certificate verified", verify_certificate(base, *base_cert)});
  rep.summary["size"] = rg.size();
  rep.summary["conditions"] = {{"i", c1}, {"ii", c2}, {"iii", c3}, {"iv", c4}};
  rep.summary["witnessed"] = witnessed;
  if (table.first_missing) rep.summary["first_without_two_units"] = *table.first_missing;
  rep.notes.emplace_back(kExchangeNote);
  if (opt.keep_witnesses && base_cert)
    rep.witnesses.push_back({"z2-factor", base.one(), base_cert->preimage_of_one.to_vector(), true});
  rep.finalize();
  rep.wall_time_ms = clock.ms();
  return rep;
}

// ---- T9 ------------------------------------------------------------------------

TheoremReport check_theorem9(const RingSpec& base_spec, const GroupSpec& group_spec, const HarnessOptions& opt) {
  Stopwatch clock;
  const FiniteRing base = build_base(base_spec, opt.size_cap);
  if (!base.is_commutative()) throw InvalidArgument("T9 requires a commutative base");
  TheoremReport rep = new_report("T9", base_spec, group_spec.canonical());
  add_base_hypotheses(rep, base);
  const GroupRing rg(base, build_group(group_spec), opt.size_cap);
  StableRangeOptions so;
  so.cap = opt.stable_range_cap;
  so.sample = opt.sample;
  so.seed = opt.seed;
  so.collect_witnesses = true;
  const StableRangeResult res = stable_range_one(rg.ring(), so);
  std::size_t verified = 0;
  for (const auto& w : res.witnesses) {
    const bool ok = verify_certificate(rg.ring(), w);
    verified += ok;
    if (opt.keep_witnesses) rep.witnesses.push_back({"sr1", w.a, {w.b, w.x, w.x1, w.y1, w.unit_inverse}, ok});
  }
  rep.conclusions.push_back({"stable range one", res.holds});
  rep.conclusions.push_back({"stable range witnesses verified", verified == res.witnesses.size()});
  rep.summary["size"] = rg.size();
  rep.summary["mode"] = res.exhaustive ? "exhaustive" : "sampled";
  rep.summary["pairs_checked"] = res.pairs_checked;
  rep.summary["unimodular_pairs"] = res.unimodular_pairs;
  if (res.counterexample) rep.summary["counterexample"] = {res.counterexample->first, res.counterexample->second};
  rep.notes.emplace_back(kExchangeNote);
  rep.notes.emplace_back(kFinitenessCaveat);
  if (!res.exhaustive) rep.notes.emplace_back("sampled, not exhaustively verified");
  rep.finalize();
  rep.wall_time_ms = clock.ms();
  return rep;
}

// ---- suites -----------------------------------------------------------------

bool is_theorem_id(const std::string& id) {
  for (const char* t : {"T4", "T5", "L3", "L6", "L7", "T8", "T9"})
    if (id == t) return true;
  return false;
}

std::vector<SuiteEntry> parse_suite(const std::string& text) {
  std::vector<SuiteEntry> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& msg) -> SuiteError {
      return SuiteError("suite line " + std::to_string(lineno) + ": " + msg);
    };
    if (tok.size() < 3 || tok.size() > 4) throw fail("expected '<theorem-id> <base-spec> <group-spec> [p=<prime>]'");
    SuiteEntry e;
    e.line = lineno;
    e.theorem = tok[0];
    if (!is_theorem_id(e.theorem)) throw fail("unknown theorem id '" + e.theorem + "'");
    try {
      e.base = parse_base_spec(tok[1]).canonical();
      e.group = tok[2] == "-" ? "-" : parse_group_spec(tok[2]).canonical();
    } catch (const SpecParseError& err) {
      throw fail(err.what());
    }
    if (tok.size() == 4) {
      if (tok[3].rfind("p=", 0) != 0) throw fail("expected p=<prime>, got '" + tok[3] + "'");
      try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(tok[3].substr(2), &used);
        if (used != tok[3].size() - 2) throw std::invalid_argument("trailing");
        e.p = static_cast<std::uint32_t>(v);
      } catch (const std::exception&) {
        throw fail("bad prime '" + tok[3] + "'");
      }
      if (!is_prime(*e.p)) throw fail(std::to_string(*e.p) + " is not prime");
    }
    const bool needs_group = e.theorem != "T4" && e.theorem != "T5";
    if (needs_group && e.group == "-") throw fail(e.theorem + " needs a group spec");
    if (e.theorem == "T5" && !e.p && e.group == "-") throw fail("T5 needs p=<prime> or a group C<p>");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<SuiteEntry> load_suite(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SuiteError("cannot open suite file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_suite(buf.str());
}

namespace {

std::optional<std::uint32_t> prime_of_p_group_order(std::size_t order) {
  for (std::uint32_t p = 2; p <= order; ++p)
    if (order % p == 0) {
      std::size_t n = order;
      while (n % p == 0) n /= p;
      return n == 1 ? std::optional<std::uint32_t>(p) : std::nullopt;
    }
  return std::nullopt;
}

}  // namespace

std::vector<TheoremReport> run_entry(const SuiteEntry& e, const HarnessOptions& opt) {
  const RingSpec base = parse_base_spec(e.base);
  const std::optional<GroupSpec> group =
      e.group == "-" ? std::nullopt : std::optional<GroupSpec>(parse_group_spec(e.group));
  if (e.theorem == "T4") return check_theorem4(base, opt);
  if (e.theorem == "T5") {
    std::uint32_t p = 0;
    if (group) {
      const FiniteGroup g = build_group(*group);
      if (!is_prime(g.order()) || !g.is_abelian())
        throw InvalidArgument("T5 needs a group of prime order, got " + group->canonical());
      if (e.p && *e.p != g.order()) throw InvalidArgument("p does not match the group order");
      p = static_cast<std::uint32_t>(g.order());
    } else {
      p = *e.p;
    }
    return {check_theorem5(base, p, opt)};
  }
  if (e.theorem == "L3") {
    std::uint32_t p = 0;
    if (e.p) {
      p = *e.p;
    } else if (auto inferred = prime_of_p_group_order(build_group(*group).order())) {
      p = *inferred;
    } else {
      throw InvalidArgument("L3 needs p=<prime> when the group is not a p-group");
    }
    return {check_lemma3_local(base, p, *group, opt)};
  }
  if (e.theorem == "L6") return {check_lemma6(base, *group, opt)};
  if (e.theorem == "L7") return {check_lemma7(base, *group, opt)};
  if (e.theorem == "T8") return {check_theorem8(base, *group, opt)};
  if (e.theorem == "T9") return {check_theorem9(base, *group, opt)};
  throw InvalidArgument("unknown theorem id '" + e.theorem + "'");
}

std::vector<TheoremReport> run_suite(const std::vector<SuiteEntry>& entries, const HarnessOptions& opt,
                                     unsigned threads) {
  std::vector<std::vector<TheoremReport>> results(entries.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) results[i] = run_entry(entries[i], opt);
  } else {
    for (std::size_t start = 0; start < entries.size(); start += threads) {
      std::vector<std::future<std::vector<TheoremReport>>> batch;
      for (std::size_t i = start; i < std::min(entries.size(), start + threads); ++i)
        batch.push_back(std::async(std::launch::async, [&, i] { return run_entry(entries[i], opt); }));
      for (std::size_t k = 0; k < batch.size(); ++k) results[start + k] = batch[k].get();
    }
  }
  std::vector<TheoremReport> out;
  for (auto& r : results)
    for (auto& rep : r) out.push_back(std::move(rep));
  return out;
}

}  // namespace groupring
