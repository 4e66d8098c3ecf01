#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "support.hpp"

namespace polymath::testing {
namespace {

template <class N>
class TextTest : public ::testing::Test {};
TYPED_TEST_SUITE(TextTest, Interpretations, ReprNames);

std::string bij2_of_oracle(std::uint64_t n) {
  std::string out = "[";
  const auto digits = oracle::bijective_digits_of_nat(n);
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (k) out += ',';
    out += char('0' + digits[k]);
  }
  return out + "]";
}

// --- brace notation ---------------------------------------------------------

TEST(HfsText, Examples) {
  EXPECT_EQ(parse_hfs("{}"), Hfs::empty());
  EXPECT_EQ(print_hfs(Hfs::empty()), "{}");
  EXPECT_EQ(oracle::nat_of_hfs(parse_hfs("{{},{{{}}}}")), 5u);
  const Hfs three = parse_hfs("{{{}},{}}");
  EXPECT_EQ(print_hfs(three), "{{},{{}}}");
  EXPECT_EQ(oracle::nat_of_hfs(three), 3u);
}

TEST(HfsText, WhitespaceIsIgnored) {
  EXPECT_EQ(parse_hfs(" { {} ,\n\t{ { } } }\r\n"), parse_hfs("{{},{{}}}"));
}

TEST(HfsText, DuplicateSiblingsAreRejected) {
  EXPECT_THROW(parse_hfs("{{},{}}"), DuplicateElementError);
  EXPECT_THROW(parse_hfs("{{{}},{{}}}"), DuplicateElementError);
  EXPECT_THROW(parse_hfs("{{{},{{}}},{{{}},{}}}"), DuplicateElementError);
}

TEST(HfsText, SyntaxErrorsReportPositions) {
  const auto offset_of = [](const char* text) -> std::size_t {
    try {
      parse_hfs(text);
    } catch (const SyntaxError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no syntax error for " << text;
    return 0;
  };
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of("{"), 1u);
  EXPECT_EQ(offset_of("{}}"), 2u);
  EXPECT_EQ(offset_of("{{},}"), 4u);
  EXPECT_EQ(offset_of("{x}"), 1u);
  EXPECT_EQ(offset_of("{} {}"), 3u);
}

TEST(HfsText, DepthGuard) {
  const std::string deep = std::string(20000, '{') + std::string(20000, '}');
  EXPECT_THROW(parse_hfs(deep), SyntaxError);
  const std::string ok = std::string(5000, '{') + std::string(5000, '}');
  EXPECT_EQ(parse_hfs(ok), singleton_chain(4999));
  EXPECT_THROW(parse_hfs("{{{{}}}}", 2), SyntaxError);
  EXPECT_NO_THROW(parse_hfs("{{{{}}}}", 3));
}

TEST(HfsText, PrintParseRoundTrip) {
  for (std::uint64_t n = 0; n <= 2048; ++n) {
    const Hfs t = oracle::hfs_of_nat(n);
    const std::string text = print_hfs(t);
    ASSERT_EQ(parse_hfs(text), t) << n;
    ASSERT_EQ(print_hfs(parse_hfs(text)), text) << n;
  }
}

/// Rebuilds brace text with every sibling list shuffled.
std::string shuffled_text(const Hfs& t, std::mt19937_64& gen) {
  std::vector<std::string> parts;
  for (const Hfs& c : t.children()) parts.push_back(shuffled_text(c, gen));
  std::shuffle(parts.begin(), parts.end(), gen);
  std::string out = "{";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ", ";
    out += parts[k];
  }
  return out + "}";
}

TEST(HfsText, SiblingPermutationsParseToTheSameValue) {
  std::mt19937_64 gen(11);
  for (std::uint64_t n = 0; n <= 2048; n += 3) {
    const Hfs t = oracle::hfs_of_nat(n);
    for (int k = 0; k < 3; ++k) {
      const std::string text = shuffled_text(t, gen);
      ASSERT_EQ(parse_hfs(text), t) << text;
    }
  }
}

// --- bijective digits -------------------------------------------------------

TYPED_TEST(TextTest, Bij2Examples) {
  using N = TypeParam;
  EXPECT_EQ(print_bij2(N::empty()), "[]");
  EXPECT_EQ(parse_bij2<N>("[]"), N::empty());
  EXPECT_EQ(print_bij2(nat<N>(6)), "[1,1]");
  EXPECT_EQ(word(parse_bij2<N>("[1,1]")), 6u);
  EXPECT_EQ(print_bij2(nat<N>(8)), bij2_of_oracle(8));
  EXPECT_EQ(print_bij2(nat<N>(8)), "[1,0,0]");
  EXPECT_EQ(word(parse_bij2<N>(" [ 1 , 0 , 0 ] ")), 8u);
}

TYPED_TEST(TextTest, Bij2Table) {
  using N = TypeParam;
  const std::vector<std::string> table{"[]", "[0]", "[1]", "[0,0]", "[1,0]", "[0,1]", "[1,1]"};
  for (std::uint64_t n = 0; n < table.size(); ++n) {
    EXPECT_EQ(print_bij2(nat<N>(n)), table[n]);
    EXPECT_EQ(word(parse_bij2<N>(table[n])), n);
  }
}

TYPED_TEST(TextTest, Bij2Errors) {
  using N = TypeParam;
  EXPECT_THROW(parse_bij2<N>(""), SyntaxError);
  EXPECT_THROW(parse_bij2<N>("[2]"), SyntaxError);
  EXPECT_THROW(parse_bij2<N>("[0,]"), SyntaxError);
  EXPECT_THROW(parse_bij2<N>("[0"), SyntaxError);
  EXPECT_THROW(parse_bij2<N>("[0]x"), SyntaxError);
}

// --- decimal ----------------------------------------------------------------

TYPED_TEST(TextTest, DecimalExamples) {
  using N = TypeParam;
  EXPECT_EQ(parse_decimal<N>("0"), N::empty());
  EXPECT_EQ(words<N>(decode_set(parse_decimal<N>("2059"))),
            (std::vector<std::uint64_t>{0, 1, 3, 11}));
  EXPECT_EQ(print_decimal(parse_decimal<N>(" 2059\n")), "2059");
  EXPECT_THROW(parse_decimal<N>(""), SyntaxError);
  EXPECT_THROW(parse_decimal<N>("+1"), SyntaxError);
  EXPECT_THROW(parse_decimal<N>("1 2"), SyntaxError);
}

TEST(DecimalText, LargeValuesRoundTrip) {
  EXPECT_EQ(print_decimal(parse_decimal<BigNat>("84215045")), "84215045");
  EXPECT_EQ(print_decimal(parse_decimal<BitStack>("84215045")), "84215045");
  EXPECT_EQ(print_decimal(parse_decimal<Hfs>("84215045")), "84215045");
}

TEST(DecimalText, UnaryGuard) {
  EXPECT_THROW(parse_decimal<Peano>("84215045"), ResourceLimitError);
  EXPECT_THROW(parse_value<Peano>("[1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1]", TextFormat::bij2),
               ResourceLimitError);
  EXPECT_EQ(parse_decimal<Peano>("65536").depth(), 65536u);
}

TEST(DecimalText, TowerValuesAreNotMaterialized) {
  EXPECT_THROW(print_decimal(singleton_chain(9)), ResourceLimitError);
  EXPECT_THROW(print_bij2(singleton_chain(9)), ResourceLimitError);
  EXPECT_THROW(parse_value<BigNat>(print_hfs(singleton_chain(9)), TextFormat::hfs),
               ResourceLimitError);
}

// --- all formats ------------------------------------------------------------

TYPED_TEST(TextTest, RoundTripsAcrossFormats) {
  using N = TypeParam;
  for (std::uint64_t n = 0; n <= cap<N>(2048); ++n) {
    const N x = nat<N>(n);
    for (TextFormat f : {TextFormat::decimal, TextFormat::bij2, TextFormat::hfs}) {
      const std::string text = print_value(x, f);
      ASSERT_EQ(parse_value<N>(text, f), x) << n << " " << text;
      ASSERT_EQ(print_value(parse_value<N>(text, f), f), text) << n;
      ASSERT_EQ(sniff_text_format(text), f) << text;
    }
    ASSERT_EQ(print_decimal(x), std::to_string(n));
    ASSERT_EQ(print_bij2(x), bij2_of_oracle(n));
    ASSERT_EQ(print_value(x, TextFormat::hfs), print_hfs(oracle::hfs_of_nat(n)));
  }
}

TEST(Formats, Names) {
  EXPECT_EQ(parse_repr_tag("hfs"), ReprTag::hfs);
  EXPECT_EQ(parse_repr_tag("integer"), std::nullopt);
  EXPECT_EQ(to_string(ReprTag::bitstack), "bitstack");
  EXPECT_EQ(parse_text_format("bij2"), TextFormat::bij2);
  EXPECT_EQ(parse_text_format("binary"), std::nullopt);
  EXPECT_EQ(sniff_text_format("  {}"), TextFormat::hfs);
  EXPECT_EQ(sniff_text_format("x"), std::nullopt);
  EXPECT_EQ(sniff_text_format(""), std::nullopt);
}

}  // namespace
}  // namespace polymath::testing
