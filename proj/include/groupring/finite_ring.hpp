#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "groupring/common.hpp"
#include "groupring/element_set.hpp"

namespace groupring {

enum class Provenance { Base, GroupRing, Quotient, Product };

std::string to_string(Provenance p);

/// Element arithmetic over canonical indices 0..size-1.
class RingArithmetic {
 public:
  virtual ~RingArithmetic() = default;
  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual std::string describe(Elem a) const { return std::to_string(a); }
};

/// Componentwise Z/n1 x ... x Z/nk, indexed in mixed radix with the first
/// modulus most significant.
class BaseRingDescriptor {
 public:
  explicit BaseRingDescriptor(std::vector<std::uint32_t> moduli);

  const std::vector<std::uint32_t>& moduli() const { return moduli_; }
  std::size_t size() const { return size_; }

  std::vector<std::uint32_t> to_tuple(Elem index) const;
  Elem to_index(const std::vector<std::uint32_t>& residues) const;

  /// Residue of `index` in component `k`.
  std::uint32_t component(Elem index, std::size_t k) const {
    return static_cast<std::uint32_t>((index / strides_[k]) % moduli_[k]);
  }
  std::size_t stride(std::size_t k) const { return strides_[k]; }

 private:
  std::vector<std::uint32_t> moduli_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

class IdealSet;
struct RingState;

/// Optional hooks a construction can attach to a ring.
struct RingOptions {
  /// Independent unit-membership test. When present, units() uses it and
  /// derives inverses as x^(|U|-1) instead of scanning.
  std::function<bool(Elem)> unit_predicate;
  std::optional<BaseRingDescriptor> base_descriptor;
};

/// Immutable handle to a finite unital ring. Copies share arithmetic and
/// caches. Derived sets (units, idempotents, radical) are computed once.
class FiniteRing {
 public:
  static constexpr std::size_t kDenseTableLimit = 1024;

  FiniteRing(std::shared_ptr<const RingArithmetic> arithmetic, std::size_t size, Elem zero,
             Elem one, Provenance provenance, std::string label, RingOptions options = {});

  std::size_t size() const;
  Elem zero() const;
  Elem one() const;
  Provenance provenance() const;
  const std::string& label() const;
  const BaseRingDescriptor* base_descriptor() const;

  Elem add(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::uint64_t k) const;
  /// k * 1 via repeated addition (negative k negates).
  Elem from_int(long long k) const;
  std::string describe(Elem a) const;

  /// Exhaustive over an additive generating set; commutativity is bilinear.
  bool is_commutative() const;
  /// Greedy additive generating set in ascending index order.
  const std::vector<Elem>& additive_generators() const;

  const ElementSet& units() const;
  bool is_unit(Elem a) const { return units().contains(a); }
  /// Two-sided inverse of a unit; throws InvalidArgument for nonunits.
  Elem inverse(Elem a) const;
  const ElementSet& idempotents() const;
  const IdealSet& jacobson_radical() const;

  /// Identity token for checking that sets belong to this ring.
  const void* identity() const;

  bool operator==(const FiniteRing& o) const { return identity() == o.identity(); }

 private:
  std::shared_ptr<RingState> state_;
};

/// Two-sided ideal of a specific ring, by member set.
class IdealSet {
 public:
  IdealSet(const FiniteRing& ambient, ElementSet members);

  const ElementSet& members() const { return members_; }
  std::size_t size() const { return members_.count(); }
  bool contains(Elem e) const { return members_.contains(e); }
  const void* ambient_identity() const { return ambient_; }
  bool belongs_to(const FiniteRing& ring) const { return ring.identity() == ambient_; }

 private:
  const void* ambient_;
  ElementSet members_;
};

/// Validates the ideal invariants; returns a description of the first
/// violation or std::nullopt.
std::optional<std::string> ideal_violation(const FiniteRing& ring, const ElementSet& members);

/// Subgroup of (R,+) generated by `seeds`, with the greedy generators used.
ElementSet additive_span(const FiniteRing& ring, const std::vector<Elem>& seeds,
                         std::vector<Elem>* generators_out = nullptr);

// ---- constructions ----------------------------------------------------------

FiniteRing make_base_ring(const std::vector<std::uint32_t>& moduli,
                          std::size_t size_cap = Limits::global().size_cap);

FiniteRing direct_product(const FiniteRing& r1, const FiniteRing& r2,
                          std::size_t size_cap = Limits::global().size_cap);

/// R/I together with its quotient map.
struct QuotientRing {
  FiniteRing ring;
  /// ambient index -> quotient index
  std::vector<Elem> projection;
  /// quotient index -> smallest ambient representative
  std::vector<Elem> representatives;

  Elem project(Elem a) const { return projection[a]; }
};

QuotientRing quotient_ring(const FiniteRing& ring, const IdealSet& ideal);

// ---- structure --------------------------------------------------------------

const ElementSet& units(const FiniteRing& ring);
const ElementSet& idempotents(const FiniteRing& ring);
const IdealSet& jacobson_radical(const FiniteRing& ring);
bool is_abelian_ring(const FiniteRing& ring);
/// Throws std::logic_error if the two locality characterizations disagree.
bool is_local(const FiniteRing& ring);
IdealSet ideal_closure(const FiniteRing& ring, const std::vector<Elem>& generators);

/// Units by exhaustive two-sided inverse search, ignoring any installed
/// unit predicate. O(size^2).
ElementSet units_by_inverse_search(const FiniteRing& ring);

// ---- verification helpers ---------------------------------------------------

struct AxiomReport {
  bool ok = true;
  bool exhaustive = false;
  std::uint64_t triples_checked = 0;
  std::string failure;
};

/// Ring axioms: exhaustive for size <= 256, otherwise `samples` uniform
/// triples drawn with `seed`.
AxiomReport check_ring_axioms(const FiniteRing& ring, std::uint64_t samples = 1'000'000,
                              std::uint64_t seed = 0);

struct HomomorphismReport {
  bool additive = true;
  bool multiplicative = true;
  bool unital = true;
  bool surjective = true;
  bool injective = true;
  bool exhaustive = true;
  std::uint64_t pairs_checked = 0;

  bool is_homomorphism() const { return additive && multiplicative && unital; }
  bool is_isomorphism() const { return is_homomorphism() && surjective && injective; }
};

/// Checks `map` (indexed by source element) against source/target
/// arithmetic. Pairs are exhaustive up to `exhaustive_limit` source elements,
/// sampled beyond.
HomomorphismReport check_homomorphism(const FiniteRing& source, const FiniteRing& target,
                                      const std::vector<Elem>& map,
                                      std::size_t exhaustive_limit = 4096,
                                      std::uint64_t samples = 1'000'000, std::uint64_t seed = 0);

/// Searches for a ring isomorphism by backtracking over additive generators.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b);

}  // namespace groupring
