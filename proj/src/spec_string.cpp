#include "groupring/spec_string.hpp"

#include <cctype>

namespace groupring {

SpecParseError::SpecParseError(std::string input, std::size_t position, const std::string& message)
    : Error("spec parse error at column " + std::to_string(position + 1) + ": " + message),
      input_(std::move(input)),
      position_(position) {}

std::string SpecParseError::annotated() const {
  return input_ + "\n" + std::string(position_, ' ') + "^ " + what();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw SpecParseError(std::string(text_), pos_, message);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint32_t number() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > 0xFFFFFFFFu) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<std::uint32_t>(v);
  }

  std::vector<std::uint32_t> base() {
    std::vector<std::uint32_t> moduli;
    for (;;) {
      expect('Z');
      const std::size_t at = pos_;
      const auto m = number();
      if (m < 2) {
        pos_ = at;
        fail("modulus must be >= 2");
      }
      moduli.push_back(m);
      if (peek() != 'x') break;
      ++pos_;
    }
    return moduli;
  }

  GroupSpec group() {
    GroupSpec g;
    for (;;) {
      const char kind = peek();
      if (kind != 'C' && kind != 'S') fail("expected 'C' or 'S'");
      ++pos_;
      const std::size_t at = pos_;
      const auto n = number();
      if (kind == 'C' && (n < 1 || n > kMaxGroupOrder)) {
        pos_ = at;
        fail("cyclic order must be in 1.." + std::to_string(kMaxGroupOrder));
      }
      if (kind == 'S' && (n < 2 || n > 4)) {
        pos_ = at;
        fail("symmetric degree must be in 2..4");
      }
      g.factors.push_back({kind, n});
      if (peek() != 'x') break;
      ++pos_;
    }
    return g;
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

  std::size_t pos_ = 0;

 private:
  std::string_view text_;
};

}  // namespace

std::string GroupSpec::canonical() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i)
    out += (i ? "x" : "") + std::string(1, factors[i].kind) + std::to_string(factors[i].n);
  return out;
}

std::string RingSpec::base_canonical() const {
  std::string out;
  for (std::size_t i = 0; i < moduli.size(); ++i) out += (i ? "xZ" : "Z") + std::to_string(moduli[i]);
  return out;
}

std::string RingSpec::canonical() const {
  return group ? base_canonical() + "[" + group->canonical() + "]" : base_canonical();
}

RingSpec parse_ring_spec(std::string_view text) {
  Parser p(text);
  RingSpec spec;
  spec.moduli = p.base();
  if (p.peek() == '[') {
    ++p.pos_;
    spec.group = p.group();
    if (p.at_end()) p.fail("missing ']'");
    p.expect(']');
  }
  p.finish();
  return spec;
}

GroupSpec parse_group_spec(std::string_view text) {
  Parser p(text);
  GroupSpec g = p.group();
  p.finish();
  return g;
}

RingSpec parse_base_spec(std::string_view text) {
  RingSpec spec = parse_ring_spec(text);
  if (spec.group) {
    const auto at = text.find('[');
    throw SpecParseError(std::string(text), at, "expected a base ring without a group");
  }
  return spec;
}

FiniteGroup build_group(const GroupSpec& spec) {
  auto one = [](const GroupFactor& f) { return f.kind == 'C' ? make_cyclic(f.n) : make_symmetric(f.n); };
  FiniteGroup g = one(spec.factors.at(0));
  for (std::size_t i = 1; i < spec.factors.size(); ++i) g = group_direct_product(g, one(spec.factors[i]));
  return g;
}

FiniteRing build_base(const RingSpec& spec, std::size_t size_cap) { return make_base_ring(spec.moduli, size_cap); }

RingInstance build_ring(const RingSpec& spec, std::size_t size_cap) {
  RingInstance inst{build_base(spec, size_cap), std::nullopt};
  if (spec.group) inst.group_ring.emplace(inst.base, build_group(*spec.group), size_cap);
  return inst;
}

}  // namespace groupring
