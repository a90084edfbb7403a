#include "groupring/group_ring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <sstream>

namespace groupring {

class GroupRingArithmetic final : public RingArithmetic {
 public:
  GroupRingArithmetic(FiniteRing base, FiniteGroup group)
      : base_(std::move(base)), group_(std::move(group)), radix_(base_.size()), degree_(group_.order()) {}

  void decode(Elem x, Elem* out) const {
    for (std::size_t k = 0; k < degree_; ++k) {
      out[k] = static_cast<Elem>(x % radix_);
      x = static_cast<Elem>(x / radix_);
    }
  }
  Elem encode(const Elem* c) const {
    std::size_t idx = 0;
    for (std::size_t k = degree_; k-- > 0;) idx = idx * radix_ + c[k];
    return static_cast<Elem>(idx);
  }

  Elem add(Elem x, Elem y) const override {
    std::array<Elem, kMaxGroupOrder> a{}, b{};
    decode(x, a.data());
    decode(y, b.data());
    for (std::size_t k = 0; k < degree_; ++k) a[k] = base_.add(a[k], b[k]);
    return encode(a.data());
  }

  Elem mul(Elem x, Elem y) const override {
    std::array<Elem, kMaxGroupOrder> a{}, b{}, c{};
    decode(x, a.data());
    decode(y, b.data());
    c.fill(base_.zero());
    for (std::size_t g = 0; g < degree_; ++g) {
      if (a[g] == base_.zero()) continue;
      for (std::size_t h = 0; h < degree_; ++h) {
        if (b[h] == base_.zero()) continue;
        const Elem k = group_.mul(static_cast<Elem>(g), static_cast<Elem>(h));
        c[k] = base_.add(c[k], base_.mul(a[g], b[h]));
      }
    }
    return encode(c.data());
  }

  Elem neg(Elem x) const override {
    std::array<Elem, kMaxGroupOrder> a{};
    decode(x, a.data());
    for (std::size_t k = 0; k < degree_; ++k) a[k] = base_.neg(a[k]);
    return encode(a.data());
  }

  std::string describe(Elem x) const override {
    std::array<Elem, kMaxGroupOrder> a{};
    decode(x, a.data());
    std::string out;
    for (std::size_t k = 0; k < degree_; ++k) {
      if (a[k] == base_.zero()) continue;
      if (!out.empty()) out += "+";
      const bool unit_coeff = a[k] == base_.one();
      if (k == 0) {
        out += base_.describe(a[k]);
      } else {
        if (!unit_coeff) out += base_.describe(a[k]);
        out += group_.element_name(static_cast<Elem>(k));
      }
    }
    return out.empty() ? "0" : out;
  }

  /// Left-multiplication matrix: column h holds x*h, so entry (k, h) is the
  /// coefficient of g = k h^{-1}.
  std::vector<std::vector<Elem>> regular_matrix(Elem x) const {
    std::array<Elem, kMaxGroupOrder> a{};
    decode(x, a.data());
    std::vector<std::vector<Elem>> m(degree_, std::vector<Elem>(degree_));
    for (std::size_t k = 0; k < degree_; ++k)
      for (std::size_t h = 0; h < degree_; ++h)
        m[k][h] = a[group_.mul(static_cast<Elem>(k), group_.inverse(static_cast<Elem>(h)))];
    return m;
  }

  std::size_t degree() const { return degree_; }
  const FiniteRing& base() const { return base_; }

 private:
  FiniteRing base_;
  FiniteGroup group_;
  std::size_t radix_;
  std::size_t degree_;
};

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap, const std::string& what) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > cap / base) {
      // Report the true size when it fits, otherwise the saturated bound.
      long double exact = 1;
      for (std::size_t j = 0; j < exp; ++j) exact *= static_cast<long double>(base);
      const auto requested = exact > 1e18L ? std::size_t(-1) : static_cast<std::size_t>(exact);
      throw CapExceeded(what, requested, cap);
    }
    out *= base;
  }
  return out;
}

std::string group_ring_label(const FiniteRing& base, const FiniteGroup& group) {
  return base.label() + "[" + group.label() + "]";
}

}  // namespace

GroupRing::GroupRing(FiniteRing base, FiniteGroup group, std::size_t size_cap)
    : base_(std::move(base)), group_(std::move(group)), ring_([&] {
        if (!base_.is_commutative())
          throw InvalidArgument("group ring base must be commutative: " + base_.label());
        const std::string label = group_ring_label(base_, group_);
        const std::size_t size = checked_power(base_.size(), group_.order(), size_cap, "group ring " + label);
        arith_ = std::make_shared<const GroupRingArithmetic>(base_, group_);
        RingOptions opts;
        opts.unit_predicate = [arith = arith_](Elem x) {
          return arith->base().is_unit(ring_determinant(arith->base(), arith->regular_matrix(x)));
        };
        return FiniteRing(arith_, size, 0, base_.one(), Provenance::GroupRing, label, std::move(opts));
      }()) {}

GroupRingElement GroupRing::element(Elem index) const {
  if (index >= size()) throw InvalidArgument("group ring index out of range");
  return GroupRingElement{coefficients(index), ring_.identity()};
}

Elem GroupRing::index(const GroupRingElement& x) const {
  if (x.parent != ring_.identity()) throw InvalidArgument("element belongs to a different group ring");
  return encode(x.coefficients);
}

std::vector<Elem> GroupRing::coefficients(Elem index) const {
  std::vector<Elem> out(group_.order());
  arith_->decode(index, out.data());
  return out;
}

Elem GroupRing::encode(std::span<const Elem> coefficients) const {
  if (coefficients.size() != group_.order()) throw InvalidArgument("coefficient vector has wrong length");
  for (Elem c : coefficients)
    if (c >= base_.size()) throw InvalidArgument("coefficient out of range");
  return arith_->encode(coefficients.data());
}

Elem GroupRing::group_element(Elem g) const {
  std::vector<Elem> c(group_.order(), base_.zero());
  c.at(g) = base_.one();
  return encode(c);
}

Elem GroupRing::augmentation(Elem x) const {
  Elem sum = base_.zero();
  for (Elem c : coefficients(x)) sum = base_.add(sum, c);
  return sum;
}

Elem GroupRing::regular_rep_determinant(Elem x) const {
  return ring_determinant(base_, arith_->regular_matrix(x));
}

bool GroupRing::unit_test_regular_rep(Elem x) const { return base_.is_unit(regular_rep_determinant(x)); }

GroupRing make_group_ring(const FiniteRing& base, const FiniteGroup& group, std::size_t size_cap) {
  return GroupRing(base, group, size_cap);
}

GroupRingElement convolve(const GroupRing& ring, const GroupRingElement& x, const GroupRingElement& y) {
  return ring.element(ring.ring().mul(ring.index(x), ring.index(y)));
}

Elem augmentation(const GroupRing& ring, const GroupRingElement& x) {
  return ring.augmentation(ring.index(x));
}

bool unit_test_regular_rep(const GroupRing& ring, const GroupRingElement& x) {
  return ring.unit_test_regular_rep(ring.index(x));
}

// ---- determinants -------------------------------------------------------------

std::uint32_t bareiss_determinant_mod(const std::vector<std::vector<std::int64_t>>& matrix,
                                      std::uint32_t modulus) {
  using boost::multiprecision::cpp_int;
  const std::size_t n = matrix.size();
  if (n == 0) return 1 % modulus;
  std::vector<std::vector<cpp_int>> m(n, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw InvalidArgument("determinant of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) m[i][j] = matrix[i][j];
  }
  int sign = 1;
  cpp_int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  cpp_int det = m[n - 1][n - 1] * sign;
  cpp_int r = det % modulus;
  if (r < 0) r += modulus;
  return r.convert_to<std::uint32_t>();
}

Elem ring_determinant(const FiniteRing& ring, const std::vector<std::vector<Elem>>& matrix) {
  const std::size_t n = matrix.size();
  if (const auto* d = ring.base_descriptor()) {
    std::vector<std::uint32_t> residues(d->moduli().size());
    std::vector<std::vector<std::int64_t>> lifted(n, std::vector<std::int64_t>(n));
    for (std::size_t c = 0; c < residues.size(); ++c) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) lifted[i][j] = d->component(matrix[i][j], c);
      residues[c] = bareiss_determinant_mod(lifted, d->moduli()[c]);
    }
    return d->to_index(residues);
  }
  if (n > 16) throw InvalidArgument("generic determinant limited to dimension 16");
  // Row-by-row expansion over subsets of used columns. Choosing column c
  // for the next row contributes the sign (-1)^(#used columns above c).
  std::vector<Elem> acc(std::size_t{1} << n, ring.zero());
  acc[0] = ring.one();
  for (std::size_t mask = 0; mask + 1 < acc.size(); ++mask) {
    if (acc[mask] == ring.zero()) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      const int above = __builtin_popcountll(mask >> c);
      Elem term = ring.mul(acc[mask], matrix[row][c]);
      if (above & 1) term = ring.neg(term);
      const std::size_t next = mask | (std::size_t{1} << c);
      acc[next] = ring.add(acc[next], term);
    }
  }
  return acc.back();
}

// ---- order-2 splitting --------------------------------------------------------

namespace {

void require_splittable(const GroupRing& ring) {
  if (ring.group().order() != 2)
    throw InvalidArgument("splitting isomorphism needs a group of order 2, got " + ring.group().label());
  const FiniteRing& r = ring.base();
  if (!r.is_unit(r.add(r.one(), r.one())))
    throw InvalidArgument("splitting isomorphism needs 2 to be a unit in " + r.label());
}

}  // namespace

std::pair<Elem, Elem> splitting_iso(const GroupRing& ring, Elem x) {
  require_splittable(ring);
  const FiniteRing& r = ring.base();
  const auto c = ring.coefficients(x);
  return {r.add(c[0], c[1]), r.sub(c[0], c[1])};
}

Elem splitting_inverse(const GroupRing& ring, Elem s, Elem t) {
  require_splittable(ring);
  const FiniteRing& r = ring.base();
  const Elem half = r.inverse(r.add(r.one(), r.one()));
  const std::vector<Elem> c{r.mul(r.add(s, t), half), r.mul(r.sub(s, t), half)};
  return ring.encode(c);
}

SplittingReport verify_splitting_iso(const GroupRing& ring) {
  require_splittable(ring);
  const FiniteRing& r = ring.base();
  const FiniteRing target = direct_product(r, r);
  SplittingReport rep;
  rep.elements = ring.size();
  std::vector<Elem> map(ring.size());
  for (std::size_t x = 0; x < ring.size(); ++x) {
    const auto [s, t] = splitting_iso(ring, static_cast<Elem>(x));
    map[x] = static_cast<Elem>(s * r.size() + t);
    if (splitting_inverse(ring, s, t) != x) rep.round_trips = false;
  }
  for (std::size_t s = 0; s < r.size(); ++s)
    for (std::size_t t = 0; t < r.size(); ++t) {
      const Elem back = splitting_inverse(ring, static_cast<Elem>(s), static_cast<Elem>(t));
      if (map[back] != s * r.size() + t) rep.round_trips = false;
    }
  rep.homomorphism = check_homomorphism(ring.ring(), target, map, ring.size());
  return rep;
}

// ---- RG/IG ~ (R/I)G -----------------------------------------------------------

CoefficientQuotient coefficient_ideal_quotient(const GroupRing& ring, const IdealSet& base_ideal) {
  if (!base_ideal.belongs_to(ring.base())) throw InvalidArgument("ideal is not an ideal of the base ring");
  if (auto bad = ideal_violation(ring.base(), base_ideal.members()))
    throw InvalidArgument("invalid base ideal: " + *bad);

  QuotientRing base_q = quotient_ring(ring.base(), base_ideal);
  GroupRing reduced(base_q.ring, ring.group(), std::numeric_limits<std::size_t>::max());

  std::vector<Elem> gens;
  base_ideal.members().for_each([&](Elem i) { gens.push_back(ring.embed(i)); });
  IdealSet ig = ideal_closure(ring.ring(), gens);

  bool coefficientwise = true;
  for (std::size_t x = 0; x < ring.size(); ++x) {
    bool all_in = true;
    for (Elem c : ring.coefficients(static_cast<Elem>(x))) all_in = all_in && base_ideal.contains(c);
    if (all_in != ig.contains(static_cast<Elem>(x))) coefficientwise = false;
  }

  QuotientRing ring_q = quotient_ring(ring.ring(), ig);
  auto reduce = [&](Elem x) {
    auto c = ring.coefficients(x);
    for (Elem& v : c) v = base_q.project(v);
    return reduced.encode(c);
  };
  std::vector<Elem> iso(ring_q.ring.size());
  for (std::size_t q = 0; q < iso.size(); ++q) iso[q] = reduce(ring_q.representatives[q]);
  bool commute = true;
  for (std::size_t x = 0; x < ring.size() && commute; ++x)
    commute = iso[ring_q.project(static_cast<Elem>(x))] == reduce(static_cast<Elem>(x));
  HomomorphismReport hom = check_homomorphism(ring_q.ring, reduced.ring(), iso);

  return CoefficientQuotient{std::move(base_q), std::move(reduced), std::move(ig), std::move(ring_q),
                             std::move(iso), coefficientwise, commute, hom};
}

}  // namespace groupring
