#include <gtest/gtest.h>

#include "groupring/harness.hpp"
#include "groupring/report.hpp"
#include "oracles.hpp"

using namespace groupring;

namespace {

RingSpec base(const char* s) { return parse_base_spec(s); }
GroupSpec group(const char* s) { return parse_group_spec(s); }

bool conclusion(const TheoremReport& r, const std::string& name) {
  for (const auto& c : r.conclusions)
    if (c.name == name) return c.value;
  throw std::runtime_error("missing conclusion " + name);
}

}  // namespace

TEST(CleanC2S3, Z3UsesSplittingBranch) {
  const auto reps = check_theorem4(base("Z3"));
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_EQ(reps[0].group, "C2");
  EXPECT_EQ(reps[0].status, Status::Pass);
  EXPECT_EQ(reps[0].summary["branch"], "2 is a unit");
  EXPECT_TRUE(conclusion(reps[0], "splitting isomorphism verified"));
  EXPECT_EQ(reps[1].group, "S3");
  EXPECT_EQ(reps[1].status, Status::Pass);
  EXPECT_EQ(reps[1].summary["witnessed"], 729);
}

TEST(CleanC2S3, Z4UsesLocalBranch) {
  const auto reps = check_theorem4(base("Z4"));
  EXPECT_EQ(reps[0].status, Status::Pass);
  EXPECT_EQ(reps[0].summary["branch"], "2 in J(R), R local");
  EXPECT_TRUE(conclusion(reps[0], "group ring local"));
  EXPECT_EQ(reps[1].status, Status::Pass);
  EXPECT_EQ(reps[1].summary["witnessed"], 4096);
}

TEST(CleanC2S3, Z6HasNoBranchButIsClean) {
  const auto reps = check_theorem4(base("Z6"));
  EXPECT_EQ(reps[0].status, Status::Pass);
  EXPECT_EQ(reps[0].summary["branch"], "none");
  bool caveat = false;
  for (const auto& n : reps[0].notes) caveat = caveat || n.find("finite") != std::string::npos;
  EXPECT_TRUE(caveat);
}

TEST(CleanCyclicP, Examples) {
  EXPECT_EQ(check_theorem5(base("Z4"), 2).status, Status::Pass);
  EXPECT_EQ(check_theorem5(base("Z9"), 3).status, Status::Pass);
  const auto skipped = check_theorem5(base("Z3"), 2);
  EXPECT_EQ(skipped.status, Status::Skipped);
  EXPECT_FALSE(skipped.skip_reason.empty());
  EXPECT_THROW(check_theorem5(base("Z4"), 4), InvalidArgument);
}

TEST(LocalPGroup, Examples) {
  for (const auto& [b, p, g] : std::vector<std::tuple<const char*, std::uint32_t, const char*>>{
           {"Z4", 2, "C2"}, {"Z2", 2, "C2xC2"}, {"Z9", 3, "C3"}, {"Z2", 2, "C2"}, {"Z4", 2, "C2xC2"}}) {
    const auto r = check_lemma3_local(base(b), p, group(g));
    EXPECT_EQ(r.status, Status::Pass) << b << " " << g;
    EXPECT_TRUE(conclusion(r, "group ring local"));
    EXPECT_TRUE(conclusion(r, "nonunits equal J(RG)"));
  }
  EXPECT_EQ(check_lemma3_local(base("Z6"), 2, group("C2")).status, Status::Skipped);
  EXPECT_EQ(check_lemma3_local(base("Z4"), 2, group("S3")).status, Status::Skipped);
  EXPECT_EQ(check_lemma3_local(base("Z3"), 2, group("C2")).status, Status::Skipped);
}

TEST(LocalPGroup, NonunitsEqualOracleRadical) {
  const GroupRing rg(make_base_ring({4}), group_direct_product(make_cyclic(2), make_cyclic(2)));
  const auto u = oracle::units(rg.ring());
  const auto j = oracle::radical(rg.ring());
  EXPECT_EQ(u.size() + j.size(), rg.size());
  for (Elem x = 0; x < rg.size(); ++x) EXPECT_NE(u.count(x), j.count(x));
}

TEST(RadicalInclusionReport, Examples) {
  const auto a = check_lemma6(base("Z4"), group("S3"));
  EXPECT_EQ(a.status, Status::Pass);
  EXPECT_EQ(a.summary["coefficient_vectors"], 64);
  EXPECT_EQ(check_lemma6(base("Z9"), group("C3")).status, Status::Pass);
  const auto c = check_lemma6(base("Z3"), group("C2"));
  EXPECT_EQ(c.status, Status::Pass);
  EXPECT_EQ(c.summary["base_radical"], 1);
}

TEST(Z2FactorLift, Examples) {
  const auto a = check_lemma7(base("Z3"), group("S3"));
  EXPECT_EQ(a.status, Status::Pass);
  EXPECT_EQ(a.summary["base_has_z2_factor"], false);
  EXPECT_EQ(a.summary["group_ring_has_z2_factor"], false);
  const auto b = check_lemma7(base("Z2"), group("C2"));
  EXPECT_EQ(b.status, Status::Pass);
  EXPECT_EQ(b.summary["base_has_z2_factor"], true);
  EXPECT_TRUE(conclusion(b, "restricted RG certificate is a base certificate"));
  const auto c = check_lemma7(base("Z5"), group("C2"));
  EXPECT_EQ(c.status, Status::Pass);
  EXPECT_EQ(c.summary["group_ring_has_z2_factor"], false);
}

TEST(TwoUnitsEquivalence, Vectors) {
  const std::vector<std::tuple<const char*, const char*, bool>> cases{
      {"Z3", "S3", true}, {"Z5", "C2", true}, {"Z2", "C2", false}, {"Z4", "C2", false}, {"Z6", "C2", false}};
  for (const auto& [b, g, v] : cases) {
    const auto r = check_theorem8(base(b), group(g));
    EXPECT_EQ(r.status, Status::Pass) << b << g;
    for (const char* k : {"i", "ii", "iii", "iv"}) EXPECT_EQ(r.summary["conditions"][k], v) << b << g << k;
    EXPECT_TRUE(conclusion(r, "(iii) confirmed by index-2 ideal oracle"));
  }
}

TEST(TwoUnitsEquivalence, VectorMatchesBruteForce) {
  // (ii) and (i) recomputed from the oracle unit sets.
  for (const auto& [b, g] : std::vector<std::pair<std::uint32_t, const char*>>{{3, "C2"}, {4, "C2"}, {5, "C2"}}) {
    const GroupRing rg(make_base_ring({b}), build_group(group(g)));
    const auto ub = oracle::units(rg.base());
    const auto ur = oracle::units(rg.ring());
    bool ii = false, i = false;
    for (Elem u : ub) ii = ii || ub.count(rg.base().sub(1, u));
    for (Elem u : ur) i = i || ur.count(rg.ring().sub(1, u));
    const auto r = check_theorem8(base(("Z" + std::to_string(b)).c_str()), group(g));
    EXPECT_EQ(r.summary["conditions"]["i"], i);
    EXPECT_EQ(r.summary["conditions"]["ii"], ii);
  }
}

TEST(StableRangeReport, Examples) {
  for (const auto& [b, g] : std::vector<std::pair<const char*, const char*>>{{"Z2", "S3"}, {"Z3", "C2"}, {"Z3", "S3"}}) {
    const auto r = check_theorem9(base(b), group(g));
    EXPECT_EQ(r.status, Status::Pass) << b << g;
    EXPECT_EQ(r.summary["mode"], "exhaustive");
  }
  EXPECT_EQ(check_theorem9(base("Z2"), group("S3")).summary["pairs_checked"], 4096);
  EXPECT_THROW(check_theorem9(base("Z4"), group("S3")), CapExceeded);
  HarnessOptions opt;
  opt.sample = true;
  EXPECT_EQ(check_theorem9(base("Z4"), group("S3"), opt).summary["mode"], "sampled");
}

TEST(Reports, WitnessesReverifyFromSerializedForm) {
  HarnessOptions opt;
  opt.keep_witnesses = true;
  const auto r = check_theorem8(base("Z3"), group("C2"), opt);
  const GroupRing rg(make_base_ring({3}), make_cyclic(2));
  ASSERT_FALSE(r.witnesses.empty());
  for (const auto& w : r.witnesses) {
    const auto j = to_json(w);
    if (j["property"] != "two-units") continue;
    const Elem x = j["element_index"];
    const auto ws = j["witness_indices"].get<std::vector<Elem>>();
    ASSERT_EQ(ws.size(), 4u);
    const auto& R = rg.ring();
    EXPECT_EQ(R.add(ws[0], ws[1]), x);
    EXPECT_EQ(R.mul(ws[0], ws[2]), R.one());
    EXPECT_EQ(R.mul(ws[1], ws[3]), R.one());
  }
}

TEST(Reports, Deterministic) {
  const auto a = to_json(check_theorem9(base("Z3"), group("C2"))).dump();
  const auto b = to_json(check_theorem9(base("Z3"), group("C2"))).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("wall_time"), std::string::npos);
}

TEST(Suite, Parse) {
  const auto entries = parse_suite("# comment\nT4 Z4 -\nT5 Z9 - p=3\n\nT8 Z3 S3  # trailing\nL3 Z4 C2xC2 p=2\n");
  ASSERT_EQ(entries.size(), 4u);
  EXPECT_EQ(entries[0].theorem, "T4");
  EXPECT_EQ(entries[1].p, 3u);
  EXPECT_EQ(entries[2].group, "S3");
  EXPECT_EQ(entries[3].line, 6u);
}

TEST(Suite, ParseErrors) {
  EXPECT_THROW(parse_suite("T10 Z4 C2\n"), SuiteError);
  EXPECT_THROW(parse_suite("T8 Z4\n"), SuiteError);
  EXPECT_THROW(parse_suite("T8 Z4[ C2\n"), SuiteError);
  EXPECT_THROW(parse_suite("T8 Z4 C2 q=3\n"), SuiteError);
  EXPECT_THROW(parse_suite("T8 Z4 -\n"), SuiteError);
  EXPECT_THROW(load_suite("/nonexistent/suite"), SuiteError);
}

TEST(Suite, RunKeepsDeclarationOrderAcrossThreads) {
  const auto entries = parse_suite("T9 Z3 C2\nT8 Z2 C2\nT5 Z3 - p=2\nL6 Z3 C2\nT4 Z2 -\n");
  const auto one = run_suite(entries, {}, 1);
  const auto four = run_suite(entries, {}, 4);
  ASSERT_EQ(one.size(), 6u);
  ASSERT_EQ(four.size(), 6u);
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(to_json(one[i]).dump(), to_json(four[i]).dump());
  EXPECT_EQ(one[0].theorem, "T9");
  EXPECT_EQ(one[2].status, Status::Skipped);
}
