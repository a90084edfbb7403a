#include "groupring/predicates.hpp"

#include <functional>
#include <limits>
#include <random>

namespace groupring {

// ---- cleanness --------------------------------------------------------------

std::optional<CleanWitness> clean_witness(const FiniteRing& ring, Elem x) {
  const auto& units = ring.units();
  std::optional<CleanWitness> out;
  const auto& idem = ring.idempotents();
  for (std::size_t e = idem.first(); e < idem.universe(); e = idem.next(e)) {
    const Elem u = ring.sub(x, static_cast<Elem>(e));
    if (units.contains(u)) {
      out = CleanWitness{x, static_cast<Elem>(e), u, ring.inverse(u)};
      break;
    }
  }
  return out;
}

CleanTable is_clean_ring(const FiniteRing& ring) {
  CleanTable table;
  const std::size_t n = ring.size();
  ring.units();
  ring.idempotents();
  table.witnesses.resize(n);
  parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t x = lo; x < hi; ++x) table.witnesses[x] = clean_witness(ring, static_cast<Elem>(x));
  });
  for (std::size_t x = 0; x < n; ++x)
    if (!table.witnesses[x]) {
      table.clean = false;
      table.first_unclean = static_cast<Elem>(x);
      break;
    }
  return table;
}

// ---- sums of two units ------------------------------------------------------

std::optional<TwoUnitsWitness> two_units_witness(const FiniteRing& ring, Elem x) {
  const auto& units = ring.units();
  for (std::size_t u = units.first(); u < units.universe(); u = units.next(u)) {
    const Elem v = ring.sub(x, static_cast<Elem>(u));
    if (units.contains(v))
      return TwoUnitsWitness{x, static_cast<Elem>(u), v, ring.inverse(static_cast<Elem>(u)), ring.inverse(v)};
  }
  return std::nullopt;
}

bool identity_two_units(const FiniteRing& ring) { return two_units_witness(ring, ring.one()).has_value(); }

TwoUnitsTable all_two_units(const FiniteRing& ring) {
  TwoUnitsTable table;
  const std::size_t n = ring.size();
  ring.units();
  table.witnesses.resize(n);
  parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t x = lo; x < hi; ++x) table.witnesses[x] = two_units_witness(ring, static_cast<Elem>(x));
  });
  for (std::size_t x = 0; x < n; ++x)
    if (!table.witnesses[x]) {
      table.all = false;
      table.first_missing = static_cast<Elem>(x);
      break;
    }
  return table;
}

// ---- factor rings isomorphic to Z2 --------------------------------------------

std::vector<Z2FactorCertificate> z2_characters(const FiniteRing& ring) {
  const std::size_t n = ring.size();
  std::vector<Z2FactorCertificate> out;
  if (n % 2 == 1) return out;

  // Coordinates of R/2R over a greedy basis; 2R elements get coordinate 0.
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> coord(n, kUnset);
  std::vector<Elem> span;
  for (std::size_t x = 0; x < n; ++x) {
    const Elem d = ring.add(static_cast<Elem>(x), static_cast<Elem>(x));
    if (coord[d] == kUnset) {
      coord[d] = 0;
      span.push_back(d);
    }
  }
  std::vector<Elem> basis;
  for (std::size_t x = 0; x < n; ++x) {
    if (coord[x] != kUnset) continue;
    if (basis.size() >= 31) throw CapExceeded("F2-dimension of R/2R", basis.size() + 1, 31);
    const std::uint32_t bit = std::uint32_t{1} << basis.size();
    basis.push_back(static_cast<Elem>(x));
    const std::size_t old = span.size();
    for (std::size_t i = 0; i < old; ++i) {
      const Elem t = ring.add(span[i], static_cast<Elem>(x));
      coord[t] = coord[span[i]] | bit;
      span.push_back(t);
    }
  }
  const std::size_t k = basis.size();
  if (k == 0) return out;
  if (k > 20) throw CapExceeded("F2-dimension of R/2R", k, 20);

  std::vector<std::uint32_t> products(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) products[i * k + j] = coord[ring.mul(basis[i], basis[j])];
  const std::uint32_t one_coord = coord[ring.one()];
  auto phi = [](std::uint32_t c, std::uint32_t mask) { return static_cast<std::uint32_t>(__builtin_popcount(c & mask) & 1); };

  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    if (phi(one_coord, mask) != 1) continue;
    bool multiplicative = true;
    for (std::size_t i = 0; i < k && multiplicative; ++i)
      for (std::size_t j = 0; j < k && multiplicative; ++j)
        multiplicative = phi(products[i * k + j], mask) == ((mask >> i) & (mask >> j) & 1U);
    if (!multiplicative) continue;
    ElementSet pre(n);
    for (std::size_t x = 0; x < n; ++x)
      if (phi(coord[x], mask)) pre.insert(static_cast<Elem>(x));
    out.push_back(Z2FactorCertificate{std::move(pre)});
  }
  return out;
}

std::optional<Z2FactorCertificate> has_factor_z2(const FiniteRing& ring) {
  auto all = z2_characters(ring);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::vector<ElementSet> index_two_ideals(const FiniteRing& ring) {
  const std::size_t n = ring.size();
  std::vector<ElementSet> subgroups;
  if (n % 2 == 1) return subgroups;

  std::function<void(const std::vector<Elem>&, const ElementSet&, std::vector<Elem>&)> search =
      [&](const std::vector<Elem>& gens, const ElementSet& a, std::vector<Elem>& excluded) {
        const std::size_t size = a.count();
        if (2 * size == n) {
          for (Elem e : excluded)
            if (a.contains(e)) return;
          subgroups.push_back(a);
          return;
        }
        if (2 * size > n) return;
        std::size_t pick = n;
        for (std::size_t x = 0; x < n && pick == n; ++x) {
          if (a.contains(static_cast<Elem>(x))) continue;
          bool in_excluded_coset = false;
          for (Elem e : excluded)
            if (a.contains(ring.sub(static_cast<Elem>(x), e))) {
              in_excluded_coset = true;
              break;
            }
          if (!in_excluded_coset) pick = x;
        }
        if (pick == n) return;
        const Elem x = static_cast<Elem>(pick);

        std::vector<Elem> grown_gens = gens;
        grown_gens.push_back(x);
        const ElementSet grown = additive_span(ring, grown_gens);
        bool clash = false;
        for (Elem e : excluded) clash = clash || grown.contains(e);
        if (!clash) search(grown_gens, grown, excluded);

        excluded.push_back(x);
        search(gens, a, excluded);
        excluded.pop_back();
      };
  // Every index-2 subgroup contains 2R; a kernel must also miss 1.
  std::vector<Elem> doubles;
  for (Elem x : ring.additive_generators()) doubles.push_back(ring.add(x, x));
  std::vector<Elem> excluded{ring.one()};
  const ElementSet start = additive_span(ring, doubles);
  if (!start.contains(ring.one())) search(doubles, start, excluded);

  // Two-sided closure against additive generators of R suffices by bilinearity.
  const auto& gens = ring.additive_generators();
  std::vector<ElementSet> ideals;
  for (auto& h : subgroups) {
    bool ideal = true;
    h.for_each([&](Elem m) {
      for (Elem r : gens)
        if (ideal && (!h.contains(ring.mul(r, m)) || !h.contains(ring.mul(m, r)))) ideal = false;
    });
    if (ideal) ideals.push_back(std::move(h));
  }
  return ideals;
}

// ---- stable range one ---------------------------------------------------------

namespace {

struct PairOutcome {
  bool unimodular = false;
  bool has_witness = false;
  StableRangeWitness witness{};
};

}  // namespace

StableRangeResult stable_range_one(const FiniteRing& ring, const StableRangeOptions& options) {
  const std::size_t n = ring.size();
  const auto& units = ring.units();
  StableRangeResult result;
  if (n > options.cap && !options.sample) throw CapExceeded("stable range one on " + ring.label(), n, options.cap);

  auto find_x = [&](Elem a, Elem b, StableRangeWitness& w) {
    for (std::size_t i = 0; i < n; ++i) {
      const Elem x = static_cast<Elem>(options.reverse_search ? n - 1 - i : i);
      const Elem v = ring.add(a, ring.mul(b, x));
      if (units.contains(v)) {
        w.x = x;
        w.unit_inverse = ring.inverse(v);
        return true;
      }
    }
    return false;
  };

  if (n > options.cap) {
    // Sampling mode: right ideals per pair on the fly.
    result.exhaustive = false;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    constexpr Elem kNone = std::numeric_limits<Elem>::max();
    std::vector<Elem> pre_a(n), pre_b(n);
    for (std::uint64_t t = 0; t < options.samples; ++t) {
      const Elem a = pick(rng), b = pick(rng);
      std::fill(pre_a.begin(), pre_a.end(), kNone);
      std::fill(pre_b.begin(), pre_b.end(), kNone);
      for (std::size_t x = n; x-- > 0;) {
        pre_a[ring.mul(a, static_cast<Elem>(x))] = static_cast<Elem>(x);
        pre_b[ring.mul(b, static_cast<Elem>(x))] = static_cast<Elem>(x);
      }
      ++result.pairs_checked;
      std::optional<Elem> w;
      for (std::size_t u = 0; u < n && !w; ++u)
        if (pre_a[u] != kNone && pre_b[ring.sub(ring.one(), static_cast<Elem>(u))] != kNone) w = static_cast<Elem>(u);
      if (!w) continue;
      ++result.unimodular_pairs;
      StableRangeWitness sw{a, b, pre_a[*w], pre_b[ring.sub(ring.one(), *w)], 0, 0};
      if (!find_x(a, b, sw)) {
        result.holds = false;
        result.counterexample = std::make_pair(a, b);
        break;
      }
      if (options.collect_witnesses) result.witnesses.push_back(sw);
    }
    return result;
  }

  // Exhaustive mode. first_pre[a*n + u] = smallest x with a*x = u.
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> first_pre(n * n, kNone);
  std::vector<ElementSet> right_ideal(n, ElementSet(n));
  std::vector<ElementSet> one_minus(n, ElementSet(n));  // {1 - u : u in aR}
  parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t a = lo; a < hi; ++a)
      for (std::size_t x = n; x-- > 0;) {
        const Elem u = ring.mul(static_cast<Elem>(a), static_cast<Elem>(x));
        first_pre[a * n + u] = static_cast<std::uint32_t>(x);
        right_ideal[a].insert(u);
        one_minus[a].insert(ring.sub(ring.one(), u));
      }
  });

  std::vector<std::vector<PairOutcome>> rows(n);
  parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t a = lo; a < hi; ++a) {
      rows[a].resize(n);
      for (std::size_t b = 0; b < n; ++b) {
        PairOutcome& out = rows[a][b];
        // w in (1 - aR) and in bR: a*x1 = 1 - w, b*y1 = w.
        ElementSet both = one_minus[a];
        both &= right_ideal[b];
        const std::size_t w = both.first();
        if (w >= n) continue;
        out.unimodular = true;
        out.witness.a = static_cast<Elem>(a);
        out.witness.b = static_cast<Elem>(b);
        out.witness.y1 = first_pre[b * n + w];
        out.witness.x1 = first_pre[a * n + ring.sub(ring.one(), static_cast<Elem>(w))];
        out.has_witness = find_x(static_cast<Elem>(a), static_cast<Elem>(b), out.witness);
      }
    }
  });

  result.pairs_checked = static_cast<std::uint64_t>(n) * n;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const PairOutcome& out = rows[a][b];
      if (!out.unimodular) continue;
      ++result.unimodular_pairs;
      if (!out.has_witness) {
        if (result.holds) result.counterexample = std::make_pair(static_cast<Elem>(a), static_cast<Elem>(b));
        result.holds = false;
      } else if (options.collect_witnesses) {
        result.witnesses.push_back(out.witness);
      }
    }
    std::vector<PairOutcome>().swap(rows[a]);
  }
  return result;
}

// ---- radical of a group ring ----------------------------------------------------

RadicalInclusion radical_inclusion_check(const GroupRing& ring) {
  RadicalInclusion out;
  const auto base_j = ring.base().jacobson_radical().members().to_vector();
  const auto& ring_j = ring.ring().jacobson_radical();
  out.base_radical_size = base_j.size();
  out.ring_radical_size = ring_j.size();
  const std::size_t degree = ring.group().order();
  std::vector<std::size_t> digit(degree, 0);
  std::vector<Elem> coeffs(degree);
  for (;;) {
    for (std::size_t k = 0; k < degree; ++k) coeffs[k] = base_j[digit[k]];
    const Elem x = ring.encode(coeffs);
    ++out.coefficient_vectors;
    if (!ring_j.contains(x) && out.holds) {
      out.holds = false;
      out.violator = x;
    }
    std::size_t k = 0;
    while (k < degree && ++digit[k] == base_j.size()) digit[k++] = 0;
    if (k == degree) break;
  }
  return out;
}

// ---- certificate verification -------------------------------------------------

namespace {

bool two_sided_inverse(const FiniteRing& r, Elem u, Elem v) {
  return u < r.size() && v < r.size() && r.mul(u, v) == r.one() && r.mul(v, u) == r.one();
}

}  // namespace

bool verify_certificate(const FiniteRing& r, const CleanWitness& w) {
  if (w.element >= r.size() || w.idempotent >= r.size()) return false;
  return r.mul(w.idempotent, w.idempotent) == w.idempotent && two_sided_inverse(r, w.unit, w.unit_inverse) &&
         r.add(w.idempotent, w.unit) == w.element;
}

bool verify_certificate(const FiniteRing& r, const TwoUnitsWitness& w) {
  if (w.element >= r.size()) return false;
  return two_sided_inverse(r, w.first, w.first_inverse) && two_sided_inverse(r, w.second, w.second_inverse) &&
         r.add(w.first, w.second) == w.element;
}

bool verify_certificate(const FiniteRing& r, const StableRangeWitness& w) {
  for (Elem e : {w.a, w.b, w.x1, w.y1, w.x})
    if (e >= r.size()) return false;
  if (r.add(r.mul(w.a, w.x1), r.mul(w.b, w.y1)) != r.one()) return false;
  return two_sided_inverse(r, r.add(w.a, r.mul(w.b, w.x)), w.unit_inverse);
}

bool verify_certificate(const FiniteRing& r, const Z2FactorCertificate& c) {
  const std::size_t n = r.size();
  if (c.preimage_of_one.universe() != n) return false;
  if (c.value(r.zero()) || !c.value(r.one())) return false;
  auto pair_ok = [&](Elem x, Elem y) {
    return c.value(r.add(x, y)) == (c.value(x) != c.value(y)) &&
           c.value(r.mul(x, y)) == (c.value(x) && c.value(y));
  };
  if (n <= 4096) {
    std::vector<char> ok(n, 1);
    parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t x = lo; x < hi; ++x)
        for (std::size_t y = 0; y < n && ok[x]; ++y) ok[x] = pair_ok(static_cast<Elem>(x), static_cast<Elem>(y));
    });
    return std::all_of(ok.begin(), ok.end(), [](char v) { return v != 0; });
  }
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (int t = 0; t < 1'000'000; ++t)
    if (!pair_ok(pick(rng), pick(rng))) return false;
  return true;
}

}  // namespace groupring
