#pragma once

#include <boost/dynamic_bitset.hpp>

#include <initializer_list>
#include <vector>

#include "groupring/common.hpp"

namespace groupring {

/// Subset of a ring's element indices with bitset semantics.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}
  ElementSet(std::size_t universe, std::initializer_list<Elem> members) : bits_(universe) {
    for (Elem e : members) insert(e);
  }

  static ElementSet from_indices(std::size_t universe, const std::vector<Elem>& members) {
    ElementSet s(universe);
    for (Elem e : members) s.insert(e);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(Elem e) const { return e < bits_.size() && bits_.test(e); }
  void insert(Elem e) { bits_.set(e); }
  void erase(Elem e) { bits_.reset(e); }

  /// Smallest member, or universe() when empty.
  std::size_t first() const {
    const auto p = bits_.find_first();
    return p == boost::dynamic_bitset<>::npos ? bits_.size() : p;
  }
  std::size_t next(std::size_t after) const {
    const auto p = bits_.find_next(after);
    return p == boost::dynamic_bitset<>::npos ? bits_.size() : p;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (auto p = bits_.find_first(); p != boost::dynamic_bitset<>::npos; p = bits_.find_next(p))
      fn(static_cast<Elem>(p));
  }

  std::vector<Elem> to_vector() const {
    std::vector<Elem> out;
    out.reserve(count());
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  bool intersects(const ElementSet& other) const { return bits_.intersects(other.bits_); }
  bool is_subset_of(const ElementSet& other) const { return bits_.is_subset_of(other.bits_); }

  ElementSet& operator|=(const ElementSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    bits_ &= o.bits_;
    return *this;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }

  const boost::dynamic_bitset<>& bits() const { return bits_; }

 private:
  boost::dynamic_bitset<> bits_;
};

}  // namespace groupring
