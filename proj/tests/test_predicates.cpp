#include <gtest/gtest.h>

#include "groupring/predicates.hpp"
#include "oracles.hpp"

using namespace groupring;

namespace {

GroupRing gr(std::uint32_t n, const FiniteGroup& g) { return GroupRing(make_base_ring({n}), g); }

/// Every map R -> {0,1} tested on all pairs; R of at most 16 elements.
std::size_t brute_z2_epimorphisms(const FiniteRing& r) {
  if (r.size() > 16) throw std::logic_error("brute force limited to 16 elements");
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << r.size()); ++mask) {
    auto phi = [&](Elem x) { return (mask >> x) & 1u; };
    bool ok = phi(r.one()) == 1 && phi(r.zero()) == 0;
    for (Elem a = 0; a < r.size() && ok; ++a)
      for (Elem b = 0; b < r.size() && ok; ++b)
        ok = phi(r.add(a, b)) == (phi(a) ^ phi(b)) && phi(r.mul(a, b)) == (phi(a) & phi(b));
    count += ok;
  }
  return count;
}

}  // namespace

// =============================================================================
// clean
// =============================================================================

TEST(Clean, WitnessExamples) {
  const auto z4 = make_base_ring({4});
  const auto w0 = clean_witness(z4, 0);
  ASSERT_TRUE(w0);
  EXPECT_EQ(w0->idempotent, 1u);
  EXPECT_EQ(w0->unit, 3u);

  const GroupRing z4c2 = gr(4, make_cyclic(2));
  const auto w2 = clean_witness(z4c2.ring(), 2);
  ASSERT_TRUE(w2);
  EXPECT_EQ(w2->idempotent, 1u);
  EXPECT_EQ(w2->unit, 1u);

  const GroupRing z2c2 = gr(2, make_cyclic(2));
  const auto w = clean_witness(z2c2.ring(), 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->idempotent, 1u);
  EXPECT_EQ(w->unit, 2u);
}

TEST(Clean, RingExamples) {
  for (const auto& rg : {gr(4, make_cyclic(2)), gr(2, make_symmetric(3))}) {
    const auto t = is_clean_ring(rg.ring());
    EXPECT_TRUE(t.clean);
    std::size_t verified = 0;
    for (const auto& w : t.witnesses) verified += w && verify_certificate(rg.ring(), *w);
    EXPECT_EQ(verified, rg.size());
  }
  EXPECT_TRUE(is_clean_ring(make_base_ring({3})).clean);
}

TEST(Clean, WitnessIsSmallestIdempotent) {
  const GroupRing rg = gr(2, make_symmetric(3));
  const auto& r = rg.ring();
  const auto idem = oracle::idempotents(r);
  const auto u = oracle::units(r);
  for (Elem x = 0; x < r.size(); ++x) {
    Elem expected = 0;
    for (Elem e : idem)
      if (u.count(r.sub(x, e))) {
        expected = e;
        break;
      }
    EXPECT_EQ(clean_witness(r, x)->idempotent, expected);
  }
}

TEST(Clean, VerifierRejectsForgery) {
  const auto z4 = make_base_ring({4});
  EXPECT_FALSE(verify_certificate(z4, CleanWitness{0, 1, 3, 1}));
  EXPECT_FALSE(verify_certificate(z4, CleanWitness{0, 2, 2, 2}));
  EXPECT_TRUE(verify_certificate(z4, CleanWitness{1, 0, 1, 1}));
}

// =============================================================================
// two units
// =============================================================================

TEST(TwoUnits, Examples) {
  const auto z3 = make_base_ring({3});
  const auto w = two_units_witness(z3, 0);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->first, 1u);
  EXPECT_EQ(w->second, 2u);
  EXPECT_FALSE(two_units_witness(make_base_ring({2}), 1).has_value());
  EXPECT_FALSE(two_units_witness(gr(2, make_cyclic(2)).ring(), 1).has_value());

  EXPECT_TRUE(identity_two_units(z3));
  EXPECT_FALSE(identity_two_units(make_base_ring({4})));
  EXPECT_TRUE(identity_two_units(gr(5, make_cyclic(2)).ring()));
}

TEST(TwoUnits, TableMatchesBruteForce) {
  for (const auto& rg : {gr(3, make_cyclic(2)), gr(2, make_symmetric(3)), gr(6, make_cyclic(2))}) {
    const auto& r = rg.ring();
    const auto u = oracle::units(r);
    const auto t = all_two_units(r);
    bool all = true;
    for (Elem x = 0; x < r.size(); ++x) {
      bool has = false;
      for (Elem a : u) has = has || u.count(r.sub(x, a));
      all = all && has;
      EXPECT_EQ(t.witnesses[x].has_value(), has);
      if (t.witnesses[x]) EXPECT_TRUE(verify_certificate(r, *t.witnesses[x]));
    }
    EXPECT_EQ(t.all, all);
  }
}

// =============================================================================
// factor Z2
// =============================================================================

TEST(Z2Factor, Examples) {
  const auto z4 = make_base_ring({4});
  const auto c = has_factor_z2(z4);
  ASSERT_TRUE(c);
  EXPECT_EQ(oracle::to_set(c->preimage_of_one.to_vector()), (std::set<Elem>{1, 3}));
  EXPECT_TRUE(verify_certificate(z4, *c));

  EXPECT_FALSE(has_factor_z2(make_base_ring({3})).has_value());

  const GroupRing z2c2 = gr(2, make_cyclic(2));
  const auto a = has_factor_z2(z2c2.ring());
  ASSERT_TRUE(a);
  EXPECT_EQ(oracle::to_set(a->preimage_of_one.to_vector()), (std::set<Elem>{1, 2}));
  for (Elem x = 0; x < 4; ++x) EXPECT_EQ(a->value(x), z2c2.augmentation(x) == 1);
}

TEST(Z2Factor, CountsMatchBruteForce) {
  const std::vector<FiniteRing> rings{make_base_ring({4}), make_base_ring({6}), make_base_ring({2, 2}), make_base_ring({2, 2, 2}),
                                      make_base_ring({3, 5}), make_base_ring({16}), gr(2, make_cyclic(2)).ring(),
                                      gr(4, make_cyclic(2)).ring(), gr(2, group_direct_product(make_cyclic(2), make_cyclic(2))).ring()};
  for (const auto& r : rings) {
    const std::size_t brute = brute_z2_epimorphisms(r);
    EXPECT_EQ(z2_characters(r).size(), brute) << r.label();
    EXPECT_EQ(index_two_ideals(r).size(), brute) << r.label();
  }
}

TEST(Z2Factor, CharacterAndIdealRoutesAgree) {
  for (const auto& r : {gr(2, make_symmetric(3)).ring(), gr(3, make_symmetric(3)).ring(), gr(4, make_symmetric(3)).ring(),
                        GroupRing(make_base_ring({2, 3}), make_cyclic(2)).ring(), make_base_ring({2, 2, 3})}) {
    const auto chars = z2_characters(r);
    const auto kernels = index_two_ideals(r);
    ASSERT_EQ(chars.size(), kernels.size()) << r.label();
    std::set<std::vector<Elem>> a, b;
    for (const auto& c : chars) {
      EXPECT_TRUE(verify_certificate(r, c));
      std::vector<Elem> kernel;
      for (Elem x = 0; x < r.size(); ++x)
        if (!c.value(x)) kernel.push_back(x);
      a.insert(kernel);
    }
    for (const auto& k : kernels) b.insert(k.to_vector());
    EXPECT_EQ(a, b) << r.label();
  }
}

TEST(Z2Factor, VerifierRejectsNonHomomorphism) {
  const auto z4 = make_base_ring({4});
  EXPECT_FALSE(verify_certificate(z4, Z2FactorCertificate{ElementSet(4, {1, 2})}));
  EXPECT_FALSE(verify_certificate(make_base_ring({3}), Z2FactorCertificate{ElementSet(3, {1})}));
}

// =============================================================================
// stable range one
// =============================================================================

TEST(StableRange, Z4Witnesses) {
  StableRangeOptions opt;
  opt.collect_witnesses = true;
  const auto res = stable_range_one(make_base_ring({4}), opt);
  EXPECT_TRUE(res.holds);
  auto find = [&](Elem a, Elem b) {
    for (const auto& w : res.witnesses)
      if (w.a == a && w.b == b) return std::optional<StableRangeWitness>(w);
    return std::optional<StableRangeWitness>();
  };
  const auto w21 = find(2, 1);
  ASSERT_TRUE(w21);
  EXPECT_EQ(w21->x, 1u);
  const auto w10 = find(1, 0);
  ASSERT_TRUE(w10);
  EXPECT_EQ(w10->x, 0u);
  EXPECT_FALSE(find(2, 2).has_value());
  for (const auto& w : res.witnesses) EXPECT_TRUE(verify_certificate(make_base_ring({4}), w));
}

TEST(StableRange, Z2S3Exhaustive) {
  const GroupRing rg = gr(2, make_symmetric(3));
  const auto res = stable_range_one(rg.ring());
  EXPECT_TRUE(res.holds);
  EXPECT_TRUE(res.exhaustive);
  EXPECT_EQ(res.pairs_checked, 4096u);
}

TEST(StableRange, UnimodularCountMatchesBruteForce) {
  for (const auto& r : {gr(2, make_symmetric(3)).ring(), make_base_ring({12}), gr(4, make_cyclic(2)).ring()}) {
    std::uint64_t brute = 0;
    for (Elem a = 0; a < r.size(); ++a)
      for (Elem b = 0; b < r.size(); ++b) {
        bool uni = false;
        for (Elem x = 0; x < r.size() && !uni; ++x)
          for (Elem y = 0; y < r.size() && !uni; ++y) uni = r.add(r.mul(a, x), r.mul(b, y)) == r.one();
        brute += uni;
      }
    EXPECT_EQ(stable_range_one(r).unimodular_pairs, brute) << r.label();
  }
}

TEST(StableRange, ReverseSearchKeepsVerdict) {
  for (const auto& r : {gr(3, make_cyclic(2)).ring(), gr(2, make_symmetric(3)).ring(), make_base_ring({2, 6})}) {
    StableRangeOptions fwd, rev;
    fwd.collect_witnesses = rev.collect_witnesses = true;
    rev.reverse_search = true;
    const auto a = stable_range_one(r, fwd);
    const auto b = stable_range_one(r, rev);
    EXPECT_EQ(a.holds, b.holds);
    EXPECT_EQ(a.unimodular_pairs, b.unimodular_pairs);
    for (const auto& w : b.witnesses) EXPECT_TRUE(verify_certificate(r, w));
  }
}

TEST(StableRange, CapAndSampling) {
  const GroupRing rg = gr(4, make_symmetric(3));
  EXPECT_THROW(stable_range_one(rg.ring()), CapExceeded);
  StableRangeOptions opt;
  opt.sample = true;
  opt.samples = 2000;
  opt.seed = 3;
  const auto res = stable_range_one(rg.ring(), opt);
  EXPECT_FALSE(res.exhaustive);
  EXPECT_EQ(res.pairs_checked, 2000u);
  EXPECT_TRUE(res.holds);
  EXPECT_EQ(stable_range_one(rg.ring(), opt).unimodular_pairs, res.unimodular_pairs);
}

TEST(StableRange, VerifierRejectsForgery) {
  const auto z4 = make_base_ring({4});
  EXPECT_FALSE(verify_certificate(z4, StableRangeWitness{2, 2, 1, 0, 1, 1}));
  EXPECT_FALSE(verify_certificate(z4, StableRangeWitness{2, 1, 0, 1, 0, 1}));
}

// =============================================================================
// radical inclusion
// =============================================================================

TEST(RadicalInclusion, Examples) {
  const auto a = radical_inclusion_check(gr(4, make_symmetric(3)));
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.coefficient_vectors, 64u);
  EXPECT_EQ(a.base_radical_size, 2u);
  const auto b = radical_inclusion_check(gr(3, make_cyclic(2)));
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(b.coefficient_vectors, 1u);
  EXPECT_TRUE(radical_inclusion_check(gr(9, make_cyclic(3))).holds);
}

TEST(RadicalInclusion, MatchesOracleRadical) {
  const GroupRing rg = gr(4, make_cyclic(2));
  const auto j = oracle::radical(rg.ring());
  for (Elem a : {0u, 2u})
    for (Elem b : {0u, 2u}) EXPECT_TRUE(j.count(rg.encode(std::vector<Elem>{a, b})));
}
