#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupring/common.hpp"

namespace groupring {

/// Finite group by Cayley table. Index 0 is the identity.
class FiniteGroup {
 public:
  /// Validates the Latin-square property, identity at 0, inverses and
  /// associativity; throws InvalidArgument otherwise.
  FiniteGroup(std::size_t order, std::vector<std::uint8_t> table, std::string label,
              std::vector<std::string> element_names = {});

  std::size_t order() const { return order_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[a * order_ + b]; }
  Elem inverse(Elem a) const { return inverse_[a]; }
  const std::string& label() const { return label_; }
  const std::string& element_name(Elem a) const { return names_[a]; }
  bool is_abelian() const;
  /// Order of the element a.
  std::size_t element_order(Elem a) const;

 private:
  std::size_t order_;
  std::vector<std::uint8_t> table_;
  std::vector<Elem> inverse_;
  std::string label_;
  std::vector<std::string> names_;
};

/// Cyclic group; element k is g^k.
FiniteGroup make_cyclic(std::size_t n);

/// Symmetric group on n letters, elements in lexicographic one-line order.
/// Product convention: (s*t)(i) = s(t(i)).
FiniteGroup make_symmetric(std::size_t n);

/// Pairs (a,b) indexed row-major: a * |g2| + b.
FiniteGroup group_direct_product(const FiniteGroup& g1, const FiniteGroup& g2);

bool is_p_group(const FiniteGroup& g, std::uint64_t p);

/// Exhaustive backtracking search for a group isomorphism a -> b.
std::optional<std::vector<Elem>> find_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace groupring
