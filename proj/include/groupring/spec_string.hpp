#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "groupring/finite_group.hpp"
#include "groupring/group_ring.hpp"

namespace groupring {

/// Malformed spec string; `position` is the 0-based offending column.
class SpecParseError : public Error {
 public:
  SpecParseError(std::string input, std::size_t position, const std::string& message);

  std::size_t position() const { return position_; }
  const std::string& input() const { return input_; }
  /// Input line plus a caret under the offending column.
  std::string annotated() const;

 private:
  std::string input_;
  std::size_t position_;
};

struct GroupFactor {
  char kind;  // 'C' or 'S'
  std::uint32_t n;
};

struct GroupSpec {
  std::vector<GroupFactor> factors;
  std::string canonical() const;
};

struct RingSpec {
  std::vector<std::uint32_t> moduli;
  std::optional<GroupSpec> group;
  std::string canonical() const;
  std::string base_canonical() const;
};

/// base ::= "Z"<n> ("x" "Z"<n>)* ; ring ::= base | base "[" group "]"
RingSpec parse_ring_spec(std::string_view text);
/// group ::= ("C"<n> | "S"<n>) ("x" group)?
GroupSpec parse_group_spec(std::string_view text);
/// A ring spec that must not carry a group.
RingSpec parse_base_spec(std::string_view text);

FiniteGroup build_group(const GroupSpec& spec);
FiniteRing build_base(const RingSpec& spec, std::size_t size_cap = Limits::global().size_cap);

/// A parsed ring: the base, and the group ring when a group is present.
struct RingInstance {
  FiniteRing base;
  std::optional<GroupRing> group_ring;

  const FiniteRing& ring() const { return group_ring ? group_ring->ring() : base; }
};

RingInstance build_ring(const RingSpec& spec, std::size_t size_cap = Limits::global().size_cap);

}  // namespace groupring
