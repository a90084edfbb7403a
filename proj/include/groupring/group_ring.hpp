#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "groupring/finite_group.hpp"
#include "groupring/finite_ring.hpp"

namespace groupring {

class GroupRingArithmetic;

/// Coefficient vector of a group-ring element; position k is the
/// coefficient of group element k.
struct GroupRingElement {
  std::vector<Elem> coefficients;
  const void* parent = nullptr;
};

/// R[G] for a commutative finite base R and a finite group G.
///
/// Elements are indexed by the mixed-radix encoding of their coefficient
/// vector with the identity coefficient least significant, so the scalar
/// r*1_G has index r. Multiplication is convolution computed on demand.
/// The induced ring's unit set uses the regular-representation determinant.
class GroupRing {
 public:
  GroupRing(FiniteRing base, FiniteGroup group, std::size_t size_cap = Limits::global().size_cap);

  const FiniteRing& ring() const { return ring_; }
  const FiniteRing& base() const { return base_; }
  const FiniteGroup& group() const { return group_; }
  std::size_t size() const { return ring_.size(); }

  GroupRingElement element(Elem index) const;
  Elem index(const GroupRingElement& x) const;
  std::vector<Elem> coefficients(Elem index) const;
  Elem encode(std::span<const Elem> coefficients) const;

  /// r -> r * 1_G
  Elem embed(Elem r) const { return r; }
  /// g -> 1_R * g
  Elem group_element(Elem g) const;

  /// Sum of coefficients.
  Elem augmentation(Elem x) const;

  /// Determinant over the base of the |G| x |G| left-multiplication matrix.
  Elem regular_rep_determinant(Elem x) const;
  /// x is a unit iff its regular-representation determinant is a base unit.
  bool unit_test_regular_rep(Elem x) const;

 private:
  FiniteRing base_;
  FiniteGroup group_;
  std::shared_ptr<const GroupRingArithmetic> arith_;
  FiniteRing ring_;
};

GroupRing make_group_ring(const FiniteRing& base, const FiniteGroup& group,
                          std::size_t size_cap = Limits::global().size_cap);

/// Convolution: coefficient of k in x*y is the sum over g*h = k of a_g b_h.
GroupRingElement convolve(const GroupRing& ring, const GroupRingElement& x, const GroupRingElement& y);

Elem augmentation(const GroupRing& ring, const GroupRingElement& x);

bool unit_test_regular_rep(const GroupRing& ring, const GroupRingElement& x);

/// Determinant of a square matrix over a commutative finite ring. Integer
/// Bareiss per component for Z/n products, division-free subset expansion
/// otherwise (dimension <= 16).
Elem ring_determinant(const FiniteRing& ring, const std::vector<std::vector<Elem>>& matrix);

/// Integer determinant by fraction-free Bareiss elimination, reduced mod m.
std::uint32_t bareiss_determinant_mod(const std::vector<std::vector<std::int64_t>>& matrix,
                                      std::uint32_t modulus);

// ---- order-2 splitting ------------------------------------------------------

/// a + b g -> (a + b, a - b). Requires |G| = 2 and 2 a unit of the base.
std::pair<Elem, Elem> splitting_iso(const GroupRing& ring, Elem x);
/// (s, t) -> (s + t)/2 + ((s - t)/2) g
Elem splitting_inverse(const GroupRing& ring, Elem s, Elem t);

struct SplittingReport {
  HomomorphismReport homomorphism;
  bool round_trips = true;
  std::size_t elements = 0;
  bool ok() const { return homomorphism.is_isomorphism() && round_trips; }
};

/// Exhaustively checks that R[C2] -> R x R is a bijective unital ring
/// homomorphism with the stated inverse.
SplittingReport verify_splitting_iso(const GroupRing& ring);

// ---- RG/IG ~ (R/I)G -----------------------------------------------------------

struct CoefficientQuotient {
  QuotientRing base_quotient;       // R/I
  GroupRing reduced;                // (R/I)[G]
  IdealSet augmented_ideal;         // IG inside R[G]
  QuotientRing ring_quotient;       // R[G]/IG
  std::vector<Elem> isomorphism;    // R[G]/IG index -> (R/I)[G] index
  bool ideal_matches_coefficientwise = false;
  bool maps_commute = false;
  HomomorphismReport homomorphism;

  bool verified() const {
    return ideal_matches_coefficientwise && maps_commute && homomorphism.is_isomorphism();
  }
};

/// Builds IG as the ideal closure of the embedded base ideal, forms both
/// quotients and checks the coefficientwise reduction is an isomorphism.
CoefficientQuotient coefficient_ideal_quotient(const GroupRing& ring, const IdealSet& base_ideal);

}  // namespace groupring
