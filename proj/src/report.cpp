#include "groupring/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace groupring {

using ojson = nlohmann::ordered_json;

ojson to_json(const WitnessRecord& w) {
  ojson j;
  j["property"] = w.property;
  j["element_index"] = w.element_index;
  j["witness_indices"] = w.witness_indices;
  j["verified"] = w.verified;
  return j;
}

ojson to_json(const TheoremReport& r, bool include_timings) {
  ojson j;
  j["theorem"] = r.theorem;
  j["instance"] = {{"base", r.base}, {"group", r.group}, {"p", r.p ? ojson(*r.p) : ojson(nullptr)}};
  j["status"] = to_string(r.status);
  if (r.status == Status::Skipped) j["skip_reason"] = r.skip_reason;
  j["hypotheses"] = ojson::array();
  for (const auto& h : r.hypotheses) j["hypotheses"].push_back({{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}});
  j["conclusions"] = ojson::array();
  for (const auto& c : r.conclusions) j["conclusions"].push_back({{"name", c.name}, {"value", c.value}});
  j["summary"] = r.summary;
  j["notes"] = r.notes;
  if (!r.witnesses.empty()) {
    j["witnesses"] = ojson::array();
    for (const auto& w : r.witnesses) j["witnesses"].push_back(to_json(w));
  }
  if (include_timings) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

ojson verify_document(const std::vector<TheoremReport>& reports, std::uint64_t seed, bool include_timings) {
  ojson doc;
  doc["schema"] = kReportSchema;
  doc["command"] = "verify";
  doc["seed"] = seed;
  std::size_t pass = 0, skipped = 0, fail = 0;
  doc["reports"] = ojson::array();
  for (const auto& r : reports) {
    doc["reports"].push_back(to_json(r, include_timings));
    pass += r.status == Status::Pass;
    skipped += r.status == Status::Skipped;
    fail += r.status == Status::Fail;
  }
  doc["totals"] = {{"pass", pass}, {"skipped", skipped}, {"fail", fail}};
  return doc;
}

namespace {

ojson element_list(const ElementSet& s) { return s.to_vector(); }

}  // namespace

ojson analyze_ring(const std::string& spec, const FiniteRing& ring, const std::vector<std::string>& predicates,
                   const AnalyzeOptions& opt) {
  for (const auto& p : predicates)
    if (std::find(analyze_predicates().begin(), analyze_predicates().end(), p) == analyze_predicates().end())
      throw InvalidArgument("unknown predicate '" + p + "'");
  ojson doc;
  doc["schema"] = kReportSchema;
  doc["command"] = "analyze";
  doc["ring"] = spec;
  doc["size"] = ring.size();
  doc["commutative"] = ring.is_commutative();
  ojson results = ojson::object();
  ojson witnesses = ojson::array();
  auto add_witness = [&](const WitnessRecord& w) {
    if (opt.witnesses) witnesses.push_back(to_json(w));
  };

  for (const auto& name : predicates) {
    ojson r;
    if (name == "units") {
      r["count"] = ring.units().count();
      r["members"] = element_list(ring.units());
    } else if (name == "idempotents") {
      r["count"] = ring.idempotents().count();
      r["members"] = element_list(ring.idempotents());
    } else if (name == "radical") {
      r["count"] = ring.jacobson_radical().size();
      r["members"] = element_list(ring.jacobson_radical().members());
    } else if (name == "local") {
      r["value"] = is_local(ring);
    } else if (name == "abelian") {
      r["value"] = is_abelian_ring(ring);
    } else if (name == "clean") {
      const CleanTable t = is_clean_ring(ring);
      std::size_t witnessed = 0, verified = 0;
      for (const auto& w : t.witnesses) {
        if (!w) continue;
        ++witnessed;
        const bool ok = verify_certificate(ring, *w);
        verified += ok;
        add_witness({"clean", w->element, {w->idempotent, w->unit, w->unit_inverse}, ok});
      }
      r["value"] = t.clean;
      r["witnessed"] = witnessed;
      r["verified"] = verified;
      r["total"] = ring.size();
    } else if (name == "two-units") {
      const TwoUnitsTable t = all_two_units(ring);
      std::size_t witnessed = 0, verified = 0;
      for (const auto& w : t.witnesses) {
        if (!w) continue;
        ++witnessed;
        const bool ok = verify_certificate(ring, *w);
        verified += ok;
        add_witness({"two-units", w->element, {w->first, w->second, w->first_inverse, w->second_inverse}, ok});
      }
      r["value"] = t.all;
      r["identity"] = identity_two_units(ring);
      r["witnessed"] = witnessed;
      r["verified"] = verified;
      r["total"] = ring.size();
    } else if (name == "z2-factor") {
      const auto cert = has_factor_z2(ring);
      r["value"] = cert.has_value();
      if (cert) {
        const bool ok = verify_certificate(ring, *cert);
        r["verified"] = ok;
        r["kernel_size"] = ring.size() - cert->preimage_of_one.count();
        add_witness({"z2-factor", ring.one(), cert->preimage_of_one.to_vector(), ok});
      }
    } else if (name == "sr1") {
      StableRangeOptions so;
      so.cap = opt.stable_range_cap;
      so.sample = opt.sample;
      so.seed = opt.seed;
      so.collect_witnesses = true;
      const StableRangeResult s = stable_range_one(ring, so);
      std::size_t verified = 0;
      for (const auto& w : s.witnesses) {
        const bool ok = verify_certificate(ring, w);
        verified += ok;
        add_witness({"sr1", w.a, {w.b, w.x, w.x1, w.y1, w.unit_inverse}, ok});
      }
      r["value"] = s.holds;
      r["mode"] = s.exhaustive ? "exhaustive" : "sampled";
      r["pairs_checked"] = s.pairs_checked;
      r["unimodular_pairs"] = s.unimodular_pairs;
      r["verified"] = verified;
      if (s.counterexample) r["counterexample"] = {s.counterexample->first, s.counterexample->second};
    }
    results[name] = std::move(r);
  }
  doc["results"] = std::move(results);
  if (opt.witnesses) doc["witnesses"] = std::move(witnesses);
  return doc;
}

namespace {

std::string render_value(const ojson& r) {
  std::ostringstream os;
  if (r.contains("value")) os << (r["value"].get<bool>() ? "true" : "false");
  if (r.contains("witnessed"))
    os << " (" << r["witnessed"].get<std::size_t>() << "/" << r["total"].get<std::size_t>() << " witnesses)";
  if (r.contains("mode"))
    os << " (" << r["mode"].get<std::string>() << ", " << r["unimodular_pairs"].get<std::uint64_t>() << "/"
       << r["pairs_checked"].get<std::uint64_t>() << " unimodular pairs)";
  if (r.contains("counterexample")) os << " counterexample " << r["counterexample"].dump();
  if (r.contains("members")) {
    os << r["count"].get<std::size_t>() << " ";
    const auto& m = r["members"];
    if (m.size() <= 16) {
      os << "{";
      for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i].get<Elem>();
      os << "}";
    } else {
      os << "elements";
    }
  }
  return os.str();
}

}  // namespace

std::string format_analysis(const ojson& doc) {
  std::ostringstream os;
  os << doc["ring"].get<std::string>() << "  size " << doc["size"].get<std::size_t>()
     << (doc["commutative"].get<bool>() ? "  commutative" : "  noncommutative") << "\n";
  for (const auto& [name, r] : doc["results"].items())
    os << "  " << std::left << std::setw(12) << name << render_value(r) << "\n";
  return os.str();
}

std::string format_reports(const std::vector<TheoremReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    std::string inst = r.base + (r.group == "-" ? "" : "[" + r.group + "]");
    if (r.p) inst += " p=" + std::to_string(*r.p);
    os << std::left << std::setw(6) << r.theorem << std::setw(18) << inst << to_string(r.status);
    if (r.status == Status::Skipped) os << "  (" << r.skip_reason << ")";
    os << "\n";
    for (const auto& c : r.conclusions) os << "        " << (c.value ? "[x] " : "[ ] ") << c.name << "\n";
    if (r.summary.contains("conditions")) os << "        conditions " << r.summary["conditions"].dump() << "\n";
  }
  return os.str();
}

}  // namespace groupring
