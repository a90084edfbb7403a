#include "groupring/finite_ring.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

namespace groupring {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Base: return "base";
    case Provenance::GroupRing: return "group-ring";
    case Provenance::Quotient: return "quotient";
    case Provenance::Product: return "product";
  }
  return "unknown";
}

// ---- BaseRingDescriptor -----------------------------------------------------

BaseRingDescriptor::BaseRingDescriptor(std::vector<std::uint32_t> moduli)
    : moduli_(std::move(moduli)), strides_(moduli_.size()) {
  if (moduli_.empty()) throw InvalidArgument("base ring needs at least one modulus");
  for (std::size_t k = moduli_.size(); k-- > 0;) {
    if (moduli_[k] < 2)
      throw InvalidArgument("modulus must be >= 2, got " + std::to_string(moduli_[k]));
    strides_[k] = size_;
    size_ *= moduli_[k];
    if (size_ > (std::size_t{1} << 32)) throw InvalidArgument("base ring too large");
  }
}

std::vector<std::uint32_t> BaseRingDescriptor::to_tuple(Elem index) const {
  std::vector<std::uint32_t> out(moduli_.size());
  for (std::size_t k = 0; k < moduli_.size(); ++k) out[k] = component(index, k);
  return out;
}

Elem BaseRingDescriptor::to_index(const std::vector<std::uint32_t>& residues) const {
  if (residues.size() != moduli_.size()) throw InvalidArgument("residue tuple has wrong length");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < moduli_.size(); ++k) idx += (residues[k] % moduli_[k]) * strides_[k];
  return static_cast<Elem>(idx);
}

// ---- RingState --------------------------------------------------------------

struct RingState {
  std::shared_ptr<const RingArithmetic> arith;
  std::size_t size;
  Elem zero;
  Elem one;
  Provenance provenance;
  std::string label;
  RingOptions options;

  // Dense tables for small rings.
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
  std::vector<std::uint16_t> neg_table;
  bool dense = false;

  std::once_flag generators_once;
  std::vector<Elem> generators;
  std::once_flag commutative_once;
  bool commutative = false;
  std::once_flag units_once;
  ElementSet unit_set;
  std::vector<Elem> inverse_table;
  std::once_flag idempotents_once;
  ElementSet idempotent_set;
  std::once_flag radical_once;
  std::optional<IdealSet> radical;

  Elem add(Elem a, Elem b) const {
    return dense ? add_table[static_cast<std::size_t>(a) * size + b] : arith->add(a, b);
  }
  Elem mul(Elem a, Elem b) const {
    return dense ? mul_table[static_cast<std::size_t>(a) * size + b] : arith->mul(a, b);
  }
  Elem neg(Elem a) const { return dense ? neg_table[a] : arith->neg(a); }
};

namespace {
constexpr Elem kNoInverse = ~Elem{0};
}

FiniteRing::FiniteRing(std::shared_ptr<const RingArithmetic> arithmetic, std::size_t size,
                       Elem zero, Elem one, Provenance provenance, std::string label,
                       RingOptions options)
    : state_(std::make_shared<RingState>()) {
  if (size < 2) throw InvalidArgument("zero ring is not supported");
  if (zero >= size || one >= size) throw InvalidArgument("zero/one index out of range");
  if (zero == one) throw InvalidArgument("ring must satisfy 1 != 0");
  auto& s = *state_;
  s.arith = std::move(arithmetic);
  s.size = size;
  s.zero = zero;
  s.one = one;
  s.provenance = provenance;
  s.label = std::move(label);
  s.options = std::move(options);
  if (size <= kDenseTableLimit) {
    s.add_table.resize(size * size);
    s.mul_table.resize(size * size);
    s.neg_table.resize(size);
    parallel_for(0, size, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t a = lo; a < hi; ++a) {
        s.neg_table[a] = static_cast<std::uint16_t>(s.arith->neg(static_cast<Elem>(a)));
        for (std::size_t b = 0; b < size; ++b) {
          s.add_table[a * size + b] =
              static_cast<std::uint16_t>(s.arith->add(static_cast<Elem>(a), static_cast<Elem>(b)));
          s.mul_table[a * size + b] =
              static_cast<std::uint16_t>(s.arith->mul(static_cast<Elem>(a), static_cast<Elem>(b)));
        }
      }
    });
    s.dense = true;
  }
}

std::size_t FiniteRing::size() const { return state_->size; }
Elem FiniteRing::zero() const { return state_->zero; }
Elem FiniteRing::one() const { return state_->one; }
Provenance FiniteRing::provenance() const { return state_->provenance; }
const std::string& FiniteRing::label() const { return state_->label; }
const void* FiniteRing::identity() const { return state_.get(); }

const BaseRingDescriptor* FiniteRing::base_descriptor() const {
  return state_->options.base_descriptor ? &*state_->options.base_descriptor : nullptr;
}

Elem FiniteRing::add(Elem a, Elem b) const { return state_->add(a, b); }
Elem FiniteRing::mul(Elem a, Elem b) const { return state_->mul(a, b); }
Elem FiniteRing::neg(Elem a) const { return state_->neg(a); }
std::string FiniteRing::describe(Elem a) const { return state_->arith->describe(a); }

Elem FiniteRing::pow(Elem a, std::uint64_t k) const {
  Elem result = one();
  Elem base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

Elem FiniteRing::from_int(long long k) const {
  Elem acc = zero();
  const long long m = k < 0 ? -k : k;
  for (long long i = 0; i < m; ++i) acc = add(acc, one());
  return k < 0 ? neg(acc) : acc;
}

const std::vector<Elem>& FiniteRing::additive_generators() const {
  std::call_once(state_->generators_once, [this] {
    std::vector<Elem> all(size());
    std::iota(all.begin(), all.end(), Elem{0});
    additive_span(*this, all, &state_->generators);
  });
  return state_->generators;
}

bool FiniteRing::is_commutative() const {
  std::call_once(state_->commutative_once, [this] {
    const auto& gens = additive_generators();
    bool comm = true;
    for (std::size_t i = 0; i < gens.size() && comm; ++i)
      for (std::size_t j = i + 1; j < gens.size() && comm; ++j)
        comm = mul(gens[i], gens[j]) == mul(gens[j], gens[i]);
    state_->commutative = comm;
  });
  return state_->commutative;
}

const ElementSet& FiniteRing::units() const {
  std::call_once(state_->units_once, [this] {
    auto& s = *state_;
    const std::size_t n = size();
    s.inverse_table.assign(n, kNoInverse);
    if (s.options.unit_predicate) {
      std::vector<char> flag(n, 0);
      parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t x = lo; x < hi; ++x) flag[x] = s.options.unit_predicate(static_cast<Elem>(x));
      });
      s.unit_set = ElementSet(n);
      std::uint64_t order = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (flag[x]) {
          s.unit_set.insert(static_cast<Elem>(x));
          ++order;
        }
      // Lagrange in the unit group: u^|U| = 1.
      std::vector<char> bad(n, 0);
      parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t x = lo; x < hi; ++x) {
          if (!flag[x]) continue;
          const Elem inv = pow(static_cast<Elem>(x), order - 1);
          if (mul(static_cast<Elem>(x), inv) != one() || mul(inv, static_cast<Elem>(x)) != one())
            bad[x] = 1;
          else
            s.inverse_table[x] = inv;
        }
      });
      if (std::find(bad.begin(), bad.end(), 1) != bad.end())
        throw std::logic_error("unit predicate accepted a nonunit in " + label());
    } else {
      parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t x = lo; x < hi; ++x)
          for (std::size_t y = 0; y < n; ++y)
            if (mul(static_cast<Elem>(x), static_cast<Elem>(y)) == one() &&
                mul(static_cast<Elem>(y), static_cast<Elem>(x)) == one()) {
              s.inverse_table[x] = static_cast<Elem>(y);
              break;
            }
      });
      s.unit_set = ElementSet(n);
      for (std::size_t x = 0; x < n; ++x)
        if (s.inverse_table[x] != kNoInverse) s.unit_set.insert(static_cast<Elem>(x));
    }
  });
  return state_->unit_set;
}

Elem FiniteRing::inverse(Elem a) const {
  units();
  if (a >= size() || state_->inverse_table[a] == kNoInverse)
    throw InvalidArgument("element " + describe(a) + " is not a unit of " + label());
  return state_->inverse_table[a];
}

const ElementSet& FiniteRing::idempotents() const {
  std::call_once(state_->idempotents_once, [this] {
    const std::size_t n = size();
    std::vector<char> flag(n, 0);
    parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t x = lo; x < hi; ++x)
        flag[x] = mul(static_cast<Elem>(x), static_cast<Elem>(x)) == x;
    });
    state_->idempotent_set = ElementSet(n);
    for (std::size_t x = 0; x < n; ++x)
      if (flag[x]) state_->idempotent_set.insert(static_cast<Elem>(x));
  });
  return state_->idempotent_set;
}

const IdealSet& FiniteRing::jacobson_radical() const {
  std::call_once(state_->radical_once, [this] {
    const auto& u = units();
    const std::size_t n = size();
    std::vector<char> flag(n, 0);
    // J consists of x with 1 - yx a unit for every y; units never qualify.
    parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t x = lo; x < hi; ++x) {
        if (u.contains(static_cast<Elem>(x))) continue;
        bool in = true;
        for (std::size_t y = 0; y < n && in; ++y)
          in = u.contains(sub(one(), mul(static_cast<Elem>(y), static_cast<Elem>(x))));
        flag[x] = in;
      }
    });
    ElementSet members(n);
    for (std::size_t x = 0; x < n; ++x)
      if (flag[x]) members.insert(static_cast<Elem>(x));
    if (auto bad = ideal_violation(*this, members))
      throw std::logic_error("computed radical is not an ideal: " + *bad);
    state_->radical.emplace(*this, std::move(members));
  });
  return *state_->radical;
}

// ---- IdealSet ---------------------------------------------------------------

IdealSet::IdealSet(const FiniteRing& ambient, ElementSet members)
    : ambient_(ambient.identity()), members_(std::move(members)) {
  if (members_.universe() != ambient.size())
    throw InvalidArgument("ideal member set has wrong universe");
}

ElementSet additive_span(const FiniteRing& ring, const std::vector<Elem>& seeds,
                         std::vector<Elem>* generators_out) {
  ElementSet span(ring.size());
  std::vector<Elem> members{ring.zero()};
  span.insert(ring.zero());
  if (generators_out) generators_out->clear();
  for (Elem g : seeds) {
    if (span.contains(g)) continue;
    if (generators_out) generators_out->push_back(g);
    // span <- span + <g>: add cosets span + k*g until k*g falls back into span.
    const std::size_t old = members.size();
    Elem step = g;
    while (!span.contains(step)) {
      for (std::size_t i = 0; i < old; ++i) {
        const Elem e = ring.add(members[i], step);
        span.insert(e);
        members.push_back(e);
      }
      step = ring.add(step, g);
    }
  }
  return span;
}

std::optional<std::string> ideal_violation(const FiniteRing& ring, const ElementSet& members) {
  if (members.universe() != ring.size()) return "member set has wrong universe";
  if (!members.contains(ring.zero())) return "does not contain zero";
  std::vector<Elem> gens;
  const ElementSet span = additive_span(ring, members.to_vector(), &gens);
  if (!(span == members)) return "not closed under addition";
  // Additive subgroup of a finite group: closed under negation. Checked anyway.
  for (Elem g : gens)
    if (!members.contains(ring.neg(g))) return "not closed under negation";
  for (Elem r : ring.additive_generators())
    for (Elem g : gens) {
      if (!members.contains(ring.mul(r, g)))
        return "not closed under left multiplication by " + ring.describe(r);
      if (!members.contains(ring.mul(g, r)))
        return "not closed under right multiplication by " + ring.describe(r);
    }
  return std::nullopt;
}

// ---- constructions ----------------------------------------------------------

namespace {

class BaseArithmetic final : public RingArithmetic {
 public:
  explicit BaseArithmetic(BaseRingDescriptor d) : d_(std::move(d)) {}

  Elem add(Elem a, Elem b) const override {
    return combine(a, b, [](std::uint64_t x, std::uint64_t y, std::uint64_t) { return x + y; });
  }
  Elem mul(Elem a, Elem b) const override {
    return combine(a, b, [](std::uint64_t x, std::uint64_t y, std::uint64_t) { return x * y; });
  }
  Elem neg(Elem a) const override {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < d_.moduli().size(); ++k) {
      const std::uint32_t m = d_.moduli()[k];
      idx += ((m - d_.component(a, k)) % m) * d_.stride(k);
    }
    return static_cast<Elem>(idx);
  }
  std::string describe(Elem a) const override {
    if (d_.moduli().size() == 1) return std::to_string(a);
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < d_.moduli().size(); ++k) os << (k ? "," : "") << d_.component(a, k);
    os << ')';
    return os.str();
  }

 private:
  template <class Op>
  Elem combine(Elem a, Elem b, Op op) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < d_.moduli().size(); ++k) {
      const std::uint64_t m = d_.moduli()[k];
      idx += (op(d_.component(a, k), d_.component(b, k), m) % m) * d_.stride(k);
    }
    return static_cast<Elem>(idx);
  }

  BaseRingDescriptor d_;
};

class ProductArithmetic final : public RingArithmetic {
 public:
  ProductArithmetic(FiniteRing a, FiniteRing b) : a_(std::move(a)), b_(std::move(b)) {}

  Elem add(Elem x, Elem y) const override {
    return pack(a_.add(first(x), first(y)), b_.add(second(x), second(y)));
  }
  Elem mul(Elem x, Elem y) const override {
    return pack(a_.mul(first(x), first(y)), b_.mul(second(x), second(y)));
  }
  Elem neg(Elem x) const override { return pack(a_.neg(first(x)), b_.neg(second(x))); }
  std::string describe(Elem x) const override {
    return "(" + a_.describe(first(x)) + "," + b_.describe(second(x)) + ")";
  }

  Elem first(Elem x) const { return static_cast<Elem>(x / b_.size()); }
  Elem second(Elem x) const { return static_cast<Elem>(x % b_.size()); }
  Elem pack(Elem x, Elem y) const { return static_cast<Elem>(x * b_.size() + y); }

 private:
  FiniteRing a_;
  FiniteRing b_;
};

class QuotientArithmetic final : public RingArithmetic {
 public:
  QuotientArithmetic(FiniteRing parent, std::vector<Elem> projection,
                     std::vector<Elem> representatives)
      : parent_(std::move(parent)),
        projection_(std::move(projection)),
        reps_(std::move(representatives)) {}

  Elem add(Elem x, Elem y) const override { return projection_[parent_.add(reps_[x], reps_[y])]; }
  Elem mul(Elem x, Elem y) const override { return projection_[parent_.mul(reps_[x], reps_[y])]; }
  Elem neg(Elem x) const override { return projection_[parent_.neg(reps_[x])]; }
  std::string describe(Elem x) const override { return "[" + parent_.describe(reps_[x]) + "]"; }

 private:
  FiniteRing parent_;
  std::vector<Elem> projection_;
  std::vector<Elem> reps_;
};

std::string base_label(const std::vector<std::uint32_t>& moduli) {
  std::string out;
  for (std::size_t k = 0; k < moduli.size(); ++k) out += (k ? "xZ" : "Z") + std::to_string(moduli[k]);
  return out;
}

}  // namespace

FiniteRing make_base_ring(const std::vector<std::uint32_t>& moduli, std::size_t size_cap) {
  if (moduli.empty()) throw InvalidArgument("base ring needs at least one modulus");
  std::size_t size = 1;
  for (auto m : moduli) {
    if (m < 2) throw InvalidArgument("modulus must be >= 2, got " + std::to_string(m));
    size *= m;
    if (size > size_cap) throw CapExceeded("base ring " + base_label(moduli), size, size_cap);
  }
  BaseRingDescriptor d(moduli);
  std::vector<std::uint32_t> ones(moduli.size(), 1);
  const Elem one = d.to_index(ones);
  RingOptions opts;
  opts.base_descriptor = d;
  return FiniteRing(std::make_shared<BaseArithmetic>(d), size, 0, one, Provenance::Base,
                    base_label(moduli), std::move(opts));
}

FiniteRing direct_product(const FiniteRing& r1, const FiniteRing& r2, std::size_t size_cap) {
  const std::size_t size = r1.size() * r2.size();
  const std::string label = "(" + r1.label() + ")x(" + r2.label() + ")";
  if (size > size_cap) throw CapExceeded("direct product " + label, size, size_cap);
  auto arith = std::make_shared<ProductArithmetic>(r1, r2);
  return FiniteRing(arith, size, arith->pack(r1.zero(), r2.zero()), arith->pack(r1.one(), r2.one()),
                    Provenance::Product, label);
}

QuotientRing quotient_ring(const FiniteRing& ring, const IdealSet& ideal) {
  if (!ideal.belongs_to(ring)) throw InvalidArgument("ideal belongs to a different ring");
  if (auto bad = ideal_violation(ring, ideal.members()))
    throw InvalidArgument("not an ideal of " + ring.label() + ": " + *bad);
  if (ideal.size() == ring.size())
    throw InvalidArgument("quotient by the whole ring is the zero ring");
  const std::size_t n = ring.size();
  constexpr Elem kUnassigned = ~Elem{0};
  std::vector<Elem> projection(n, kUnassigned);
  std::vector<Elem> reps;
  const auto members = ideal.members().to_vector();
  for (std::size_t x = 0; x < n; ++x) {
    if (projection[x] != kUnassigned) continue;
    const Elem q = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(x));
    for (Elem i : members) projection[ring.add(static_cast<Elem>(x), i)] = q;
  }
  const std::size_t qsize = reps.size();
  std::string label = ring.label() + "/I" + std::to_string(ideal.size());
  auto arith = std::make_shared<QuotientArithmetic>(ring, projection, reps);
  FiniteRing q(arith, qsize, projection[ring.zero()], projection[ring.one()], Provenance::Quotient,
               std::move(label));
  return QuotientRing{std::move(q), std::move(projection), std::move(reps)};
}

// ---- structure --------------------------------------------------------------

const ElementSet& units(const FiniteRing& ring) { return ring.units(); }
const ElementSet& idempotents(const FiniteRing& ring) { return ring.idempotents(); }
const IdealSet& jacobson_radical(const FiniteRing& ring) { return ring.jacobson_radical(); }

bool is_abelian_ring(const FiniteRing& ring) {
  if (ring.is_commutative()) return true;
  bool central = true;
  // Centrality is linear in the other factor: test against additive generators.
  ring.idempotents().for_each([&](Elem e) {
    if (!central) return;
    for (Elem x : ring.additive_generators())
      if (ring.mul(e, x) != ring.mul(x, e)) {
        central = false;
        return;
      }
  });
  return central;
}

bool is_local(const FiniteRing& ring) {
  const auto& u = ring.units();
  bool by_elements = true;
  for (std::size_t x = 0; x < ring.size() && by_elements; ++x)
    by_elements = u.contains(static_cast<Elem>(x)) || u.contains(ring.sub(ring.one(), static_cast<Elem>(x)));
  const auto& j = ring.jacobson_radical().members();
  bool by_radical = true;
  for (std::size_t x = 0; x < ring.size() && by_radical; ++x)
    by_radical = u.contains(static_cast<Elem>(x)) != j.contains(static_cast<Elem>(x));
  if (by_elements != by_radical)
    throw std::logic_error("locality characterizations disagree on " + ring.label());
  return by_elements;
}

IdealSet ideal_closure(const FiniteRing& ring, const std::vector<Elem>& generators) {
  for (Elem g : generators)
    if (g >= ring.size()) throw InvalidArgument("generator index out of range");
  std::vector<Elem> seeds = generators;
  std::vector<Elem> gens;
  ElementSet span = additive_span(ring, seeds, &gens);
  // Bilinearity: closure under multiplication by ring generators on both
  // sides of the span's generators is enough.
  for (;;) {
    std::vector<Elem> extra;
    for (Elem r : ring.additive_generators())
      for (Elem g : gens) {
        for (Elem p : {ring.mul(r, g), ring.mul(g, r)})
          if (!span.contains(p)) extra.push_back(p);
      }
    if (extra.empty()) break;
    seeds = gens;
    seeds.insert(seeds.end(), extra.begin(), extra.end());
    span = additive_span(ring, seeds, &gens);
  }
  return IdealSet(ring, std::move(span));
}

ElementSet units_by_inverse_search(const FiniteRing& ring) {
  const std::size_t n = ring.size();
  std::vector<char> flag(n, 0);
  parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t x = lo; x < hi; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (ring.mul(static_cast<Elem>(x), static_cast<Elem>(y)) == ring.one() &&
            ring.mul(static_cast<Elem>(y), static_cast<Elem>(x)) == ring.one()) {
          flag[x] = 1;
          break;
        }
  });
  ElementSet out(n);
  for (std::size_t x = 0; x < n; ++x)
    if (flag[x]) out.insert(static_cast<Elem>(x));
  return out;
}

// ---- verification helpers ---------------------------------------------------

namespace {

std::optional<std::string> axiom_failure(const FiniteRing& r, Elem a, Elem b, Elem c) {
  auto triple = [&] {
    return " at (" + r.describe(a) + ", " + r.describe(b) + ", " + r.describe(c) + ")";
  };
  if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return "additive associativity" + triple();
  if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return "multiplicative associativity" + triple();
  if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return "left distributivity" + triple();
  if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return "right distributivity" + triple();
  return std::nullopt;
}

std::optional<std::string> unary_failure(const FiniteRing& r, Elem a, Elem b) {
  const std::string at = " at " + r.describe(a);
  if (a >= r.size() || b >= r.size()) return "index out of range" + at;
  if (r.add(a, b) != r.add(b, a)) return "additive commutativity" + at;
  if (r.add(a, r.zero()) != a) return "additive identity" + at;
  if (r.add(a, r.neg(a)) != r.zero()) return "additive inverse" + at;
  if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a) return "multiplicative identity" + at;
  if (r.add(a, b) >= r.size() || r.mul(a, b) >= r.size()) return "closure" + at;
  return std::nullopt;
}

}  // namespace

AxiomReport check_ring_axioms(const FiniteRing& ring, std::uint64_t samples, std::uint64_t seed) {
  AxiomReport rep;
  const std::size_t n = ring.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (auto f = unary_failure(ring, static_cast<Elem>(a), static_cast<Elem>((a * 7 + 3) % n))) {
      rep.ok = false;
      rep.failure = *f;
      return rep;
    }
  }
  if (n <= 256) {
    rep.exhaustive = true;
    std::vector<std::string> failures(n);
    parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t a = lo; a < hi; ++a)
        for (std::size_t b = 0; b < n && failures[a].empty(); ++b)
          for (std::size_t c = 0; c < n; ++c)
            if (auto f = axiom_failure(ring, static_cast<Elem>(a), static_cast<Elem>(b),
                                       static_cast<Elem>(c))) {
              failures[a] = *f;
              break;
            }
    });
    rep.triples_checked = static_cast<std::uint64_t>(n) * n * n;
    for (auto& f : failures)
      if (!f.empty()) {
        rep.ok = false;
        rep.failure = f;
        break;
      }
    return rep;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (std::uint64_t t = 0; t < samples; ++t) {
    const Elem a = pick(rng), b = pick(rng), c = pick(rng);
    if (auto f = axiom_failure(ring, a, b, c)) {
      rep.ok = false;
      rep.failure = *f;
      return rep;
    }
    ++rep.triples_checked;
  }
  return rep;
}

HomomorphismReport check_homomorphism(const FiniteRing& source, const FiniteRing& target,
                                      const std::vector<Elem>& map, std::size_t exhaustive_limit,
                                      std::uint64_t samples, std::uint64_t seed) {
  if (map.size() != source.size()) throw InvalidArgument("map has wrong domain size");
  HomomorphismReport rep;
  std::vector<char> hit(target.size(), 0);
  for (Elem img : map) {
    if (img >= target.size()) throw InvalidArgument("map image out of range");
    if (hit[img]) rep.injective = false;
    hit[img] = 1;
  }
  rep.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  rep.unital = map[source.one()] == target.one();
  auto check = [&](Elem x, Elem y) {
    if (map[source.add(x, y)] != target.add(map[x], map[y])) rep.additive = false;
    if (map[source.mul(x, y)] != target.mul(map[x], map[y])) rep.multiplicative = false;
    ++rep.pairs_checked;
  };
  const std::size_t n = source.size();
  if (n <= exhaustive_limit) {
    for (std::size_t x = 0; x < n && rep.is_homomorphism(); ++x)
      for (std::size_t y = 0; y < n; ++y) check(static_cast<Elem>(x), static_cast<Elem>(y));
  } else {
    rep.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::uint64_t t = 0; t < samples && rep.is_homomorphism(); ++t) check(pick(rng), pick(rng));
  }
  return rep;
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  if (a.size() != b.size()) return std::nullopt;
  const auto& gens = a.additive_generators();
  const std::size_t n = a.size();
  std::vector<Elem> images(gens.size());
  constexpr Elem kUnset = ~Elem{0};

  // Extends the generator assignment additively; fails on inconsistency.
  auto extend = [&](std::vector<Elem>& map) {
    map.assign(n, kUnset);
    map[a.zero()] = b.zero();
    std::vector<Elem> frontier{a.zero()};
    while (!frontier.empty()) {
      std::vector<Elem> next;
      for (Elem s : frontier)
        for (std::size_t i = 0; i < gens.size(); ++i) {
          const Elem t = a.add(s, gens[i]);
          const Elem img = b.add(map[s], images[i]);
          if (map[t] == kUnset) {
            map[t] = img;
            next.push_back(t);
          } else if (map[t] != img) {
            return false;
          }
        }
      frontier = std::move(next);
    }
    return true;
  };

  double combos = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) combos *= static_cast<double>(n);
  if (combos > 1e7) throw CapExceeded("isomorphism search", static_cast<std::size_t>(combos), 10'000'000);
  std::vector<Elem> map;
  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == gens.size()) {
      if (!extend(map)) return false;
      return check_homomorphism(a, b, map, n).is_isomorphism();
    }
    for (std::size_t cand = 0; cand < n; ++cand) {
      images[depth] = static_cast<Elem>(cand);
      if (search(depth + 1)) return true;
    }
    return false;
  };
  if (search(0)) return map;
  return std::nullopt;
}

}  // namespace groupring
