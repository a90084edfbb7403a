#include <gtest/gtest.h>

#include "groupring/spec_string.hpp"

using namespace groupring;

TEST(SpecString, RoundTrip) {
  for (const char* s : {"Z4", "Z2xZ6", "Z4[C2]", "Z2[S3]", "Z4[C2xC2]", "Z2xZ3[S3xC2]", "Z9[C3]"})
    EXPECT_EQ(parse_ring_spec(s).canonical(), s);
  EXPECT_EQ(parse_group_spec("S3xC2").canonical(), "S3xC2");
  EXPECT_EQ(parse_ring_spec("Z4[C2]").base_canonical(), "Z4");
}

TEST(SpecString, ParsedStructure) {
  const auto s = parse_ring_spec("Z2xZ6[C2xS3]");
  EXPECT_EQ(s.moduli, (std::vector<std::uint32_t>{2, 6}));
  ASSERT_TRUE(s.group);
  ASSERT_EQ(s.group->factors.size(), 2u);
  EXPECT_EQ(s.group->factors[1].kind, 'S');
  EXPECT_EQ(s.group->factors[1].n, 3u);
}

TEST(SpecString, ErrorsCarryPosition) {
  auto pos = [](const char* s) {
    try {
      parse_ring_spec(s);
    } catch (const SpecParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  EXPECT_EQ(pos("Z4[C2"), 5);
  EXPECT_EQ(pos("Q4"), 0);
  EXPECT_EQ(pos("Z"), 1);
  EXPECT_EQ(pos("Z4[D4]"), 3);
  EXPECT_EQ(pos("Z4[C2]x"), 6);
  EXPECT_EQ(pos(""), 0);
  EXPECT_GE(pos("Z1"), 0);
  EXPECT_GE(pos("Z4[S5]"), 0);
  EXPECT_GE(pos("Z4[C0]"), 0);
  EXPECT_GE(pos("Z99999999999"), 0);
}

TEST(SpecString, AnnotatedCaret) {
  try {
    parse_ring_spec("Z4[C2");
    FAIL();
  } catch (const SpecParseError& e) {
    const std::string a = e.annotated();
    EXPECT_NE(a.find("Z4[C2\n     ^"), std::string::npos) << a;
  }
}

TEST(SpecString, BaseSpecRejectsGroup) { EXPECT_THROW(parse_base_spec("Z4[C2]"), SpecParseError); }

TEST(SpecString, BuildRing) {
  const auto inst = build_ring(parse_ring_spec("Z2xZ3[C2]"));
  EXPECT_EQ(inst.base.size(), 6u);
  ASSERT_TRUE(inst.group_ring);
  EXPECT_EQ(inst.ring().size(), 36u);
  EXPECT_EQ(build_group(parse_group_spec("C2xS3")).order(), 12u);
  EXPECT_EQ(build_ring(parse_ring_spec("Z9")).ring().size(), 9u);
  EXPECT_THROW(build_ring(parse_ring_spec("Z4[S4]")), CapExceeded);
  EXPECT_THROW(build_ring(parse_ring_spec("Z4[S3]"), 100), CapExceeded);
}
