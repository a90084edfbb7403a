#include "groupring/common.hpp"

#include <cstdlib>

namespace groupring {

Limits& Limits::global() {
  static Limits limits = [] {
    Limits l;
    if (const char* env = std::getenv("GROUPRING_CAP"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) l.size_cap = static_cast<std::size_t>(v);
    }
    return l;
  }();
  return limits;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace groupring
