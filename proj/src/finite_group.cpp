#include "groupring/finite_group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace groupring {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::uint8_t> table, std::string label,
                         std::vector<std::string> element_names)
    : order_(order), table_(std::move(table)), label_(std::move(label)), names_(std::move(element_names)) {
  if (order_ < 1 || order_ > kMaxGroupOrder)
    throw InvalidArgument("group order must be in 1.." + std::to_string(kMaxGroupOrder));
  if (table_.size() != order_ * order_) throw InvalidArgument("group table has wrong size");
  for (std::size_t a = 0; a < order_; ++a) {
    std::vector<char> row(order_, 0), col(order_, 0);
    for (std::size_t b = 0; b < order_; ++b) {
      const auto r = table_[a * order_ + b];
      const auto c = table_[b * order_ + a];
      if (r >= order_ || c >= order_ || row[r] || col[c])
        throw InvalidArgument(label_ + ": table is not a Latin square");
      row[r] = col[c] = 1;
    }
    if (mul(0, static_cast<Elem>(a)) != a || mul(static_cast<Elem>(a), 0) != a)
      throw InvalidArgument(label_ + ": index 0 is not the identity");
  }
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      for (std::size_t c = 0; c < order_; ++c)
        if (mul(mul(static_cast<Elem>(a), static_cast<Elem>(b)), static_cast<Elem>(c)) !=
            mul(static_cast<Elem>(a), mul(static_cast<Elem>(b), static_cast<Elem>(c))))
          throw InvalidArgument(label_ + ": table is not associative");
  inverse_.resize(order_);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 0) inverse_[a] = static_cast<Elem>(b);
  if (names_.empty())
    for (std::size_t a = 0; a < order_; ++a) names_.push_back("g" + std::to_string(a));
  if (names_.size() != order_) throw InvalidArgument("wrong number of element names");
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) != mul(static_cast<Elem>(b), static_cast<Elem>(a)))
        return false;
  return true;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

FiniteGroup make_cyclic(std::size_t n) {
  if (n < 1 || n > kMaxGroupOrder)
    throw InvalidArgument("cyclic group order must be in 1.." + std::to_string(kMaxGroupOrder));
  std::vector<std::uint8_t> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<std::uint8_t>((a + b) % n);
  }
  return FiniteGroup(n, std::move(table), "C" + std::to_string(n), std::move(names));
}

FiniteGroup make_symmetric(std::size_t n) {
  if (n < 2 || n > 4) throw InvalidArgument("symmetric group degree must be in 2..4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::uint8_t> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::string name = "[";
    for (int v : perms[a]) name += std::to_string(v + 1);
    names[a] = name + "]";
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a * order + b] = static_cast<std::uint8_t>(index_of(c));
    }
  }
  return FiniteGroup(order, std::move(table), "S" + std::to_string(n), std::move(names));
}

FiniteGroup group_direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const std::size_t order = g1.order() * g2.order();
  if (order > kMaxGroupOrder)
    throw CapExceeded("group " + g1.label() + "x" + g2.label(), order, kMaxGroupOrder);
  const std::size_t m = g2.order();
  std::vector<std::uint8_t> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    names[x] = "(" + g1.element_name(static_cast<Elem>(x / m)) + "," +
               g2.element_name(static_cast<Elem>(x % m)) + ")";
    for (std::size_t y = 0; y < order; ++y) {
      const auto a = g1.mul(static_cast<Elem>(x / m), static_cast<Elem>(y / m));
      const auto b = g2.mul(static_cast<Elem>(x % m), static_cast<Elem>(y % m));
      table[x * order + y] = static_cast<std::uint8_t>(a * m + b);
    }
  }
  return FiniteGroup(order, std::move(table), g1.label() + "x" + g2.label(), std::move(names));
}

bool is_p_group(const FiniteGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  std::size_t n = g.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

std::optional<std::vector<Elem>> find_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order();
  if (n != b.order()) return std::nullopt;
  std::vector<Elem> map(n, 0);
  std::vector<char> used(n, 0);
  map[0] = 0;
  used[0] = 1;
  // Assign images in index order; check the homomorphism law on assigned pairs.
  std::function<bool(std::size_t)> search = [&](std::size_t x) -> bool {
    if (x == n) return true;
    for (std::size_t y = 1; y < n; ++y) {
      if (used[y] || a.element_order(static_cast<Elem>(x)) != b.element_order(static_cast<Elem>(y)))
        continue;
      map[x] = static_cast<Elem>(y);
      bool ok = true;
      for (std::size_t u = 0; u <= x && ok; ++u)
        for (std::size_t v = 0; v <= x && ok; ++v) {
          const Elem w = a.mul(static_cast<Elem>(u), static_cast<Elem>(v));
          if (w <= x) ok = map[w] == b.mul(map[u], map[v]);
        }
      if (!ok) continue;
      used[y] = 1;
      if (search(x + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  if (n == 1 || search(1)) return map;
  return std::nullopt;
}

}  // namespace groupring
