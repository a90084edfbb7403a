#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace groupring {

/// Canonical element index inside a finite ring or group.
using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultSizeCap = 65536;
inline constexpr std::size_t kDefaultStableRangeCap = 1024;
inline constexpr std::size_t kMaxGroupOrder = 24;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An instance would exceed a configured enumeration budget.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t requested, std::size_t cap)
      : Error(what + ": size " + std::to_string(requested) + " exceeds cap " +
              std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const { return requested_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Process-wide execution knobs. Reads GROUPRING_CAP once at startup.
struct Limits {
  std::size_t size_cap = kDefaultSizeCap;
  std::size_t stable_range_cap = kDefaultStableRangeCap;
  unsigned threads = 1;

  static Limits& global();
};

/// Splits [begin, end) into contiguous chunks, one per worker. `fn(lo, hi)`
/// must only write state owned by its own chunk.
inline void parallel_for(std::size_t begin, std::size_t end,
                         const std::function<void(std::size_t, std::size_t)>& fn,
                         unsigned threads = Limits::global().threads) {
  if (end <= begin) return;
  const std::size_t n = end - begin;
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, n / 64 + 1));
  if (workers == 1) {
    fn(begin, end);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = begin + w * chunk;
    const std::size_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

bool is_prime(std::uint64_t p);

}  // namespace groupring
