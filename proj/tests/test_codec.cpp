#include <gtest/gtest.h>

#include <set>
#include <string>

#include "pdcolor/codec.hpp"

using namespace pdcolor;

namespace {

ColoredComposition colored(const char* text, std::int64_t d) { return parse_colored(text, d); }
Composition comp(const char* text) { return parse_composition(text); }

}  // namespace

TEST(UnrankWord, Examples) {
    EXPECT_EQ(unrank_word(2, 3, 2).text(), "101");
    EXPECT_EQ(unrank_word(6, 4, 2).text(), "1100");
    // 23 = C(6,3) + C(3,2) + C(0,1)
    EXPECT_EQ(unrank_word(24, 8, 3).text(), "01001001");
    EXPECT_EQ(unrank_word(1, 3, 2).text(), "011");
    EXPECT_EQ(unrank_word(1, 4, 2).text(), "0011");
    EXPECT_EQ(unrank_word(1, 7, 3).text(), "0000111");
}

TEST(UnrankWord, Errors) {
    EXPECT_THROW(unrank_word(0, 4, 2), domain_error);
    EXPECT_THROW(unrank_word(7, 4, 2), domain_error);
    EXPECT_THROW(unrank_word(1, 2, 3), domain_error);
}

TEST(RankWord, Examples) {
    EXPECT_EQ(rank_word(BinaryWord::from_text("110"), 2), 3);
    EXPECT_EQ(rank_word(BinaryWord::from_text("000111"), 3), 1);
    EXPECT_EQ(rank_word(BinaryWord::from_text("01001001"), 3), 24);
    EXPECT_THROW(rank_word(BinaryWord::from_text("0111"), 2), input_error);
}

TEST(BinaryWord, PositionsRunRightToLeft) {
    const auto w = BinaryWord::from_text("100");
    EXPECT_TRUE(w.bit(2));
    EXPECT_FALSE(w.bit(0));
    EXPECT_EQ(w.value(), 4u);
    EXPECT_THROW(BinaryWord::from_text("10a"), input_error);
    EXPECT_THROW(BinaryWord::from_text(""), input_error);
}

TEST(RankCodec, BijectiveAndOrderPreserving) {
    for (std::int64_t n = 1; n <= 12; ++n) {
        for (std::int64_t d = 1; d <= n; ++d) {
            const auto total = binomial(n, d).convert_to<std::int64_t>();
            std::uint64_t previous = 0;
            for (std::int64_t m = 1; m <= total; ++m) {
                const auto w = unrank_word(m, n, d);
                ASSERT_EQ(w.ones(), static_cast<std::size_t>(d));
                ASSERT_EQ(rank_word(w, d), m);
                if (m > 1) {
                    ASSERT_GT(w.value(), previous);
                }
                previous = w.value();
            }
        }
    }
}

TEST(ToBinary, Examples) {
    EXPECT_EQ(to_binary(colored("2^3,1^1", 2)).text(), "110111");
    EXPECT_EQ(to_binary(colored("3^5", 2)).text(), "1010");
    for (int d = 1; d <= 5; ++d) EXPECT_EQ(to_binary(colored("1^1", d)).text(), std::string(d, '1'));
    EXPECT_THROW(to_binary(colored("2^4", 2)), input_error);
    EXPECT_THROW(to_binary(colored("2^0", 2)), input_error);
}

TEST(ToBinary, LengthAndOnes) {
    for (std::int64_t d = 1; d <= 3; ++d) {
        for (const auto& alpha : enum_colored(6, d)) {
            const auto k = static_cast<std::int64_t>(alpha.parts.size());
            const auto beta = to_binary(alpha);
            EXPECT_EQ(static_cast<std::int64_t>(beta.size()), 6 + d * k - 1);
            EXPECT_EQ(static_cast<std::int64_t>(beta.ones()), (d + 1) * k - 1);
        }
    }
}

TEST(FromBinary, Examples) {
    EXPECT_EQ(format_colored(from_binary(BinaryWord::from_text("101111"), 2)), "2^2,1^1");
    EXPECT_EQ(format_colored(from_binary(BinaryWord::from_text("11111111"), 2)), "1^1,1^1,1^1");
    EXPECT_EQ(format_colored(from_binary(BinaryWord::from_text("110111"), 2)), "2^3,1^1");
    for (int d = 1; d <= 4; ++d) {
        EXPECT_EQ(format_colored(from_binary(BinaryWord::from_text(std::string(d, '1')), d)), "1^1");
    }
}

TEST(FromBinary, MalformedInput) {
    EXPECT_THROW(from_binary(BinaryWord::from_text("1111"), 2), input_error);   // 4 ones, not 3k-1
    EXPECT_THROW(from_binary(BinaryWord::from_text("0000"), 2), input_error);   // no ones
    EXPECT_THROW(from_binary(BinaryWord::from_text("11011"), 0), domain_error);
    try {
        // 111 separator then "00" has no ones
        from_binary(BinaryWord::from_text("11100"), 2);
        FAIL() << "expected input_error";
    } catch (const input_error& e) {
        EXPECT_NE(std::string(e.what()).find("segment 2"), std::string::npos) << e.what();
    }
}

TEST(FamilyMaps, Examples) {
    EXPECT_EQ(format_composition(map_ones_m(colored("3^2", 2))), "3,1,3,1");
    EXPECT_EQ(format_composition(map_ones_m(colored("1^1", 2))), "1,1");
    EXPECT_EQ(format_composition(map_ones_m(colored("2^1,1^1", 2))), "3,1,1,1,1,1");

    EXPECT_EQ(format_composition(map_mod_m(colored("3^4", 2))), "1,7,1");
    EXPECT_EQ(format_composition(map_mod_m(colored("1^1", 2))), "1,1,1");
    EXPECT_EQ(format_composition(map_mod_m(colored("2^2,1^1", 2))), "1,4,1,1,1,1");

    EXPECT_EQ(format_composition(map_ge_m(colored("3^1", 2))), "3,3,5");
    EXPECT_EQ(format_composition(map_ge_m(colored("1^1,1^1,1^1", 2))), "11");
    for (int d = 1; d <= 5; ++d) EXPECT_EQ(map_ge_m(colored("1^1", d)).parts, std::vector<std::int64_t>{2 * d + 1});
}

TEST(FamilyMaps, Inverses) {
    EXPECT_EQ(format_colored(unmap_ones_m(comp("1,3,1,1,1,1"), 2)), "2^2,1^1");
    EXPECT_EQ(format_colored(unmap_mod_m(comp("1,7,1"), 2)), "3^4");
    EXPECT_EQ(format_colored(unmap_ge_m(comp("11"), 2)), "1^1,1^1,1^1");
}

TEST(FamilyMaps, InverseRejectsForeignCompositions) {
    EXPECT_THROW(unmap_ones_m(comp("2,1,1,1,1,1,1"), 2), input_error);  // part 2 not in {1,3}
    EXPECT_THROW(unmap_ones_m(comp("1,1,1"), 2), input_error);          // total 3 is not 3nu-1
    EXPECT_THROW(unmap_mod_m(comp("2,7"), 2), input_error);             // 2 is not 1 mod 3
    EXPECT_THROW(unmap_mod_m(comp("1,7"), 2), input_error);             // total 8
}

TEST(FamilyMaps, GeInverseRejections) {
    EXPECT_THROW(unmap_ge_m(comp("2,9"), 2), input_error);  // part below 3
    EXPECT_THROW(unmap_ge_m(comp("12"), 2), input_error);   // total 12 is not 3nu+2
}

TEST(FamilyMaps, RoundTripsAndImages) {
    for (std::int64_t nu = 1; nu <= 6; ++nu) {
        for (std::int64_t d = 1; d <= 3; ++d) {
            for (auto target : {MapTarget::OnesAndM, MapTarget::OneModM, MapTarget::AtLeastM}) {
                const auto [family, n] = map_codomain(target, nu, d);
                std::set<Composition> image;
                for (const auto& alpha : enum_colored(nu, d)) {
                    auto c = map_to(target, alpha);
                    EXPECT_EQ(c.total(), n);
                    for (auto p : c.parts) EXPECT_TRUE(family.allows(p));
                    EXPECT_EQ(map_from(target, c, d), alpha);
                    image.insert(std::move(c));
                }
                std::set<Composition> listed;
                for (const auto& c : enum_family(family, n)) listed.insert(c);
                EXPECT_EQ(image, listed) << "nu=" << nu << " d=" << d;
            }
        }
    }
}

TEST(TextForms, ToleratesWhitespace) {
    const auto alpha = parse_colored(" 3 ^ 2 , 1^1 ", 2);
    EXPECT_EQ(format_colored(alpha), "3^2,1^1");
    EXPECT_EQ(format_composition(parse_composition("1, 3 ,1")), "1,3,1");
    EXPECT_THROW(parse_colored("3", 2), input_error);
    EXPECT_THROW(parse_colored("3^x", 2), input_error);
    EXPECT_THROW(parse_composition("1,,2"), input_error);
    EXPECT_THROW(parse_composition("1,0"), input_error);
}
