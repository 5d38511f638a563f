#include <gtest/gtest.h>

#include "abext/abelian_group.hpp"
#include "abext/error.hpp"
#include "support.hpp"

using abext::AbelianGroup;
using abext::Partition;
using abext::format_group;
using abext::parse_group;
namespace t = abext::testing;

namespace {

  AbelianGroup G(AbelianGroup::type_map m) {
    return AbelianGroup(std::move(m));
  }

}  // namespace

TEST(ParseGroup, Examples) {
  EXPECT_EQ(parse_group("Z/8^2 x Z/4 x Z/2"), G({{2, {3, 3, 2, 1}}}));
  EXPECT_EQ(parse_group("Z/6^2 x Z/3^2"), G({{2, {1, 1}}, {3, {1, 1, 1, 1}}}));
  EXPECT_EQ(parse_group("1"), AbelianGroup{});
  EXPECT_TRUE(parse_group("1").is_trivial());
}

TEST(ParseGroup, GrammarVariants) {
  auto const g = G({{2, {2, 1}}, {3, {1}}});
  EXPECT_EQ(parse_group("Z/12 x Z/2"), g);
  EXPECT_EQ(parse_group("C12 * C2"), g);
  EXPECT_EQ(parse_group("Z/4 × Z/6"), g);
  EXPECT_EQ(parse_group("  Z/3x Z/4xZ/2 "), g);
  EXPECT_EQ(parse_group("(Z/2)^2 x Z/1"), G({{2, {1, 1}}}));
  EXPECT_EQ(parse_group("Z/1"), AbelianGroup{});
  EXPECT_EQ(parse_group("Z/30"), G({{2, {1}}, {3, {1}}, {5, {1}}}));
}

TEST(ParseGroup, Errors) {
  EXPECT_THROW(parse_group("Z/0"), abext::InvalidInput);
  EXPECT_THROW(parse_group(""), abext::SyntaxError);
  EXPECT_THROW(parse_group("Z/"), abext::SyntaxError);
  EXPECT_THROW(parse_group("Z/4 x"), abext::SyntaxError);
  EXPECT_THROW(parse_group("Q/4"), abext::SyntaxError);
  EXPECT_THROW(parse_group("Z/4^0"), abext::SyntaxError);
  EXPECT_THROW(parse_group("Z/-3"), abext::SyntaxError);
}

TEST(FormatGroup, Examples) {
  EXPECT_EQ(format_group(G({{2, {2, 2, 2, 2, 2}}})), "Z/4^5");
  EXPECT_EQ(format_group(AbelianGroup{}), "1");
  EXPECT_EQ(format_group(G({{2, {1, 1}}, {3, {1, 1, 1, 1}}})), "Z/6^2 x Z/3^2");
  EXPECT_EQ(format_group(parse_group("Z/6^3 x Z/2")), "Z/6^3 x Z/2");
  EXPECT_EQ(format_group(parse_group("Z/4 x Z/8 x Z/2")), "Z/8 x Z/4 x Z/2");
}

TEST(AbelianGroup, PPart) {
  EXPECT_EQ(G({{2, {3, 3, 2, 1}}}).p_part(2), Partition({3, 3, 2, 1}));
  EXPECT_EQ(G({{2, {1, 1}}}).p_part(3), Partition{});
  EXPECT_EQ(parse_group("Z/6^3 x Z/2").p_part(3), Partition({1, 1, 1}));
  EXPECT_THROW((void) G({{2, {1}}}).p_part(4), abext::InvalidInput);
}

TEST(AbelianGroup, NonPrimeKeyRejected) {
  EXPECT_THROW(G({{6, {1}}}), abext::InvalidInput);
}

TEST(AbelianGroup, Rank) {
  EXPECT_EQ(parse_group("Z/4^4").rank(), 4u);
  EXPECT_EQ(parse_group("Z/6^2 x Z/3^2").rank(), 4u);
  EXPECT_EQ(parse_group("1").rank(), 0u);
}

TEST(AbelianGroup, Order) {
  EXPECT_EQ(parse_group("Z/4^5").order(), 1024u);
  EXPECT_EQ(parse_group("1").order(), 1u);
  EXPECT_EQ(parse_group("Z/3^6").order(), 729u);
}

TEST(AbelianGroup, OrderOverflowIsReported) {
  EXPECT_THROW((void) parse_group("Z/2^200").order(), abext::OverflowError);
  EXPECT_NO_THROW((void) parse_group("Z/2^127").order());
}

TEST(AbelianGroup, DirectProduct) {
  EXPECT_EQ(direct_product(parse_group("Z/4 x Z/2"), parse_group("Z/2^2")),
            G({{2, {2, 1, 1, 1}}}));
  auto const g = parse_group("Z/12 x Z/5");
  EXPECT_EQ(direct_product(g, AbelianGroup{}), g);
  auto const h = parse_group("Z/4^2 x Z/2");
  EXPECT_EQ(direct_product(h, h), G({{2, {2, 2, 2, 2, 1, 1}}}));
  EXPECT_EQ(format_group(direct_product(h, h)), "Z/4^4 x Z/2^2");
}

TEST(AbelianGroup, InvariantFactors) {
  auto const f = parse_group("Z/6^2 x Z/3^2").invariant_factors();
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[0], 6u);
  EXPECT_EQ(f[1], 6u);
  EXPECT_EQ(f[2], 3u);
  EXPECT_EQ(f[3], 3u);
}

TEST(AbelianGroup, JsonRoundTrip) {
  auto const g = parse_group("Z/8^2 x Z/4 x Z/2 x Z/3^2");
  auto const j = to_json(g);
  EXPECT_EQ(j.dump(), R"({"primes":{"2":[3,3,2,1],"3":[1,1]}})");
  EXPECT_EQ(abext::group_from_json(j), g);
  EXPECT_THROW(abext::group_from_json(nlohmann::json::array()), abext::InvalidInput);
}

TEST(Factorize, Basics) {
  using F = std::vector<std::pair<abext::Prime, int>>;
  EXPECT_EQ(abext::factorize(1), F{});
  EXPECT_EQ(abext::factorize(360), (F{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_TRUE(abext::is_prime(97));
  EXPECT_FALSE(abext::is_prime(91));
  EXPECT_FALSE(abext::is_prime(1));
}

// Invariants over every group of order at most 720.

TEST(AbelianProperty, TextRoundTrip) {
  for (auto const& g : t::groups_up_to(720)) {
    auto const text = format_group(g);
    ASSERT_EQ(parse_group(text), g) << text;
    EXPECT_EQ(format_group(parse_group(text)), text);
  }
}

TEST(AbelianProperty, ProductLaws) {
  auto const all = t::groups_up_to(48);
  for (auto const& g : all) {
    for (auto const& h : all) {
      auto const gh = direct_product(g, h);
      EXPECT_EQ(gh.order(), g.order() * h.order());
      EXPECT_LE(gh.rank(), g.rank() + h.rank());
      EXPECT_GE(gh.rank(), std::max(g.rank(), h.rank()));
      EXPECT_EQ(gh, direct_product(h, g));
    }
  }
  // Same-prime p-groups: rank is additive.
  for (std::size_t a = 1; a <= 5; ++a) {
    for (std::size_t b = 1; b <= 5; ++b) {
      for (auto const& x : abext::partitions_of(a)) {
        for (auto const& y : abext::partitions_of(b)) {
          auto const gx = AbelianGroup::p_group(3, x);
          auto const gy = AbelianGroup::p_group(3, y);
          EXPECT_EQ(direct_product(gx, gy).rank(), gx.rank() + gy.rank());
        }
      }
    }
  }
}

TEST(AbelianProperty, RankIsLongestType) {
  for (auto const& g : t::groups_up_to(720)) {
    std::size_t longest = 0;
    for (auto const& [p, type] : g.types()) {
      longest = std::max(longest, type.length());
    }
    EXPECT_EQ(g.rank(), longest);
    EXPECT_EQ(g.invariant_factors().size(), g.rank());
  }
}

TEST(AbelianProperty, OrderMatchesCount) {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (auto const& g : t::groups_of_order(n)) {
      EXPECT_EQ(g.order(), n);
    }
  }
  // Number of abelian groups of order 2^6 and of 72 = 2^3 3^2.
  EXPECT_EQ(t::groups_of_order(64).size(), 11u);
  EXPECT_EQ(t::groups_of_order(72).size(), 6u);
}
