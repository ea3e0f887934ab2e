#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pdcolor/bellcore.hpp"
#include "pdcolor/closedform.hpp"

using namespace pdcolor;

TEST(CountPdK, Examples) {
    EXPECT_EQ(count_pd_k(3, 2, 1), 6);
    EXPECT_EQ(count_pd_k(3, 2, 2), 6);
    EXPECT_EQ(count_pd_k(3, 2, 3), 1);
    for (int nu = 1; nu <= 10; ++nu) {
        for (int d = 1; d <= 5; ++d) EXPECT_EQ(count_pd_k(nu, d, nu), 1);
    }
    EXPECT_EQ(count_pd_k(3, 2, 4), 0);
    EXPECT_THROW(count_pd_k(3, 0, 1), domain_error);
}

TEST(CountPd, Examples) {
    EXPECT_EQ(count_pd(3, 2), 13);
    for (int d = 1; d <= 6; ++d) EXPECT_EQ(count_pd(1, d), 1);
    EXPECT_EQ(oracle::colored_count(3, [](auto p) { return static_cast<std::uint64_t>(p); }), 8u);
    EXPECT_EQ(count_pd(3, 1), 8);
}

TEST(CountPd, MatchesBruteForce) {
    for (int d = 1; d <= 4; ++d) {
        for (int nu = 1; nu <= 10; ++nu) {
            const auto w = [d](auto p) { return oracle::polytopic(p, d); };
            EXPECT_EQ(count_pd(nu, d), oracle::colored_count(nu, w)) << nu << "," << d;
            for (int k = 1; k <= nu; ++k) EXPECT_EQ(count_pd_k(nu, d, k), oracle::colored_count(nu, w, k));
        }
    }
}

TEST(CountPd, NColorCaseIsEvenFibonacci) {
    for (int nu = 1; nu <= 20; ++nu) EXPECT_EQ(count_pd(nu, 1), oracle::fibonacci(2 * nu)) << nu;
}

TEST(CountPdK, EqualsScaledBellPolynomial) {
    for (int d = 1; d <= 4; ++d) {
        std::vector<Count> x;
        for (int j = 1; j <= 20; ++j) x.push_back(factorial(j) * binomial(j + d - 1, d));
        for (int nu = 1; nu <= 20; ++nu) {
            for (int k = 1; k <= nu; ++k) {
                EXPECT_EQ(count_pd_k(nu, d, k) * factorial(nu), factorial(k) * partial_bell(nu, k, x));
            }
        }
    }
}

TEST(CountFamily, Examples) {
    EXPECT_EQ(count_family(FamilyId::ones_and(3), 8), 13);
    EXPECT_EQ(count_family(FamilyId::one_mod(3), 9), 13);
    EXPECT_EQ(count_family(FamilyId::at_least(3), 2), 0);
    EXPECT_EQ(count_family(FamilyId::at_least(3), 11), 13);
}

TEST(CountFamily, RejectsSmallModulus) {
    EXPECT_THROW(FamilyId::at_least(1), domain_error);
    EXPECT_THROW(count_family(FamilyId::one_mod(2), 0), domain_error);
}

TEST(CountFamily, MatchesBruteForceIncludingNBelowM) {
    for (int m = 2; m <= 6; ++m) {
        for (int n = 1; n <= 16; ++n) {
            for (auto kind : {FamilyKind::OnesAndM, FamilyKind::OneModM, FamilyKind::AtLeastM}) {
                const FamilyId f(kind, m);
                const auto listed = oracle::restricted(n, [&](auto p) { return f.allows(p); }).size();
                EXPECT_EQ(count_family(f, n), listed) << kind_name(kind) << " m=" << m << " n=" << n;
            }
        }
    }
}

TEST(CountFamily, FourWayIdentity) {
    for (int nu = 1; nu <= 12; ++nu) {
        for (int d = 1; d <= 5; ++d) {
            const auto p = count_pd(nu, d);
            EXPECT_EQ(count_family(FamilyId::ones_and(d + 1), (d + 1) * nu - 1), p);
            EXPECT_EQ(count_family(FamilyId::one_mod(d + 1), (d + 1) * nu), p);
            EXPECT_EQ(count_family(FamilyId::at_least(d + 1), (d + 1) * nu + d), p);
        }
    }
}

TEST(FamilyId, KindNamesRoundTrip) {
    for (auto kind : {FamilyKind::OnesAndM, FamilyKind::OneModM, FamilyKind::AtLeastM}) {
        EXPECT_EQ(parse_kind(kind_name(kind)), kind);
    }
    EXPECT_FALSE(parse_kind("odd").has_value());
}
