#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "groupring/finite_ring.hpp"
#include "groupring/group_ring.hpp"

namespace groupring {

/// x = e + u with e idempotent and u a unit. Carries u^{-1} so it can be
/// re-checked without a unit table.
struct CleanWitness {
  Elem element;
  Elem idempotent;
  Elem unit;
  Elem unit_inverse;
};

/// x = u1 + u2 with both units.
struct TwoUnitsWitness {
  Elem element;
  Elem first;
  Elem second;
  Elem first_inverse;
  Elem second_inverse;
};

/// a*x1 + b*y1 = 1 and a + b*x is a unit.
struct StableRangeWitness {
  Elem a;
  Elem b;
  Elem x1;
  Elem y1;
  Elem x;
  Elem unit_inverse;  // (a + b*x)^{-1}
};

/// Ring epimorphism onto Z2, given by the preimage of 1.
struct Z2FactorCertificate {
  ElementSet preimage_of_one;

  bool value(Elem x) const { return preimage_of_one.contains(x); }
};

// ---- cleanness --------------------------------------------------------------

/// Smallest-index idempotent e with x - e a unit.
std::optional<CleanWitness> clean_witness(const FiniteRing& ring, Elem x);

struct CleanTable {
  bool clean = true;
  std::vector<std::optional<CleanWitness>> witnesses;  // indexed by element
  std::optional<Elem> first_unclean;
};

CleanTable is_clean_ring(const FiniteRing& ring);

// ---- sums of two units ------------------------------------------------------

/// Smallest-index unit u1 with x - u1 a unit.
std::optional<TwoUnitsWitness> two_units_witness(const FiniteRing& ring, Elem x);

bool identity_two_units(const FiniteRing& ring);

struct TwoUnitsTable {
  bool all = true;
  std::vector<std::optional<TwoUnitsWitness>> witnesses;
  std::optional<Elem> first_missing;
};

TwoUnitsTable all_two_units(const FiniteRing& ring);

// ---- factor rings isomorphic to Z2 --------------------------------------------

/// All ring epimorphisms R -> Z2, found by enumerating additive characters
/// of R/2R over a greedy F2-basis and filtering by unitality and
/// multiplicativity on basis pairs. Ordered by character mask.
std::vector<Z2FactorCertificate> z2_characters(const FiniteRing& ring);

/// First certificate of z2_characters, if any.
std::optional<Z2FactorCertificate> has_factor_z2(const FiniteRing& ring);

/// Independent route: enumerates index-2 additive subgroups by branching on
/// membership, keeps the two-sided ideals that miss 1. Returns the kernels.
std::vector<ElementSet> index_two_ideals(const FiniteRing& ring);

// ---- stable range one ---------------------------------------------------------

struct StableRangeOptions {
  std::size_t cap = Limits::global().stable_range_cap;
  bool sample = false;           // allow sampling above cap
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0;
  bool collect_witnesses = false;
  bool reverse_search = false;   // scan x from the top index down
};

struct StableRangeResult {
  bool holds = true;
  bool exhaustive = true;
  std::uint64_t pairs_checked = 0;
  std::uint64_t unimodular_pairs = 0;
  std::optional<std::pair<Elem, Elem>> counterexample;
  std::vector<StableRangeWitness> witnesses;  // unimodular pairs, (a,b) order
};

/// Right-sided stable range one: aR + bR = R implies a + bx is a unit.
/// Throws CapExceeded above `cap` unless sampling is enabled.
StableRangeResult stable_range_one(const FiniteRing& ring, const StableRangeOptions& options = {});

// ---- radical of a group ring ----------------------------------------------------

struct RadicalInclusion {
  bool holds = true;
  std::size_t base_radical_size = 0;
  std::size_t ring_radical_size = 0;
  std::size_t coefficient_vectors = 0;  // |J(R)|^|G|
  std::optional<Elem> violator;
};

/// Checks that every coefficient vector with entries in J(R) lies in J(RG).
RadicalInclusion radical_inclusion_check(const GroupRing& ring);

// ---- certificate verification -------------------------------------------------
//
// These use only add/mul/neg/one/zero of the ring. No unit or idempotent
// tables, no search code.

bool verify_certificate(const FiniteRing& ring, const CleanWitness& w);
bool verify_certificate(const FiniteRing& ring, const TwoUnitsWitness& w);
bool verify_certificate(const FiniteRing& ring, const StableRangeWitness& w);
/// Exhaustive over all pairs up to 4096 elements, 10^6 sampled pairs above.
bool verify_certificate(const FiniteRing& ring, const Z2FactorCertificate& c);

}  // namespace groupring
