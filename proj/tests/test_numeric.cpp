#include "modann/error.hpp"
#include "modann/numeric.hpp"

#include <gtest/gtest.h>

#include <limits>

using namespace modann;

TEST(Factorize, SmallValues) {
    EXPECT_TRUE(factorize(1).factors().empty());
    EXPECT_TRUE(factorize(1).isOne());
    EXPECT_EQ(factorize(12).factors(), (std::vector<PrimePower>{{2, 2}, {3, 1}}));
    EXPECT_EQ(factorize(360).factors(), (std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}}));
    EXPECT_EQ(factorize(97).factors(), (std::vector<PrimePower>{{97, 1}}));
}

TEST(Factorize, RejectsNonPositive) {
    EXPECT_THROW(factorize(0), InvalidInput);
    EXPECT_THROW(factorize(-4), InvalidInput);
}

TEST(Factorize, ReconstructsEveryValueUpToOneMillion) {
    for (Int n = 1; n <= 1'000'000; ++n) {
        const auto f = factorize(n);
        Int product = 1;
        Int lastPrime = 1;
        for (const auto& [p, e] : f.factors()) {
            ASSERT_GT(p, lastPrime);
            ASSERT_GE(e, 1);
            lastPrime = p;
            for (int i = 0; i < e; ++i) product *= p;
        }
        ASSERT_EQ(product, n);
    }
}

TEST(Factorize, PrimesAreReportedPrime) {
    for (Int n = 2; n <= 5000; ++n)
        for (Int p : factorize(n).primes()) ASSERT_TRUE(isPrime(p)) << n;
}

TEST(Valuation, Examples) {
    EXPECT_EQ(valuation(2, 12), 2);
    EXPECT_EQ(valuation(3, 12), 1);
    EXPECT_EQ(valuation(5, 12), 0);
}

TEST(Valuation, RejectsCompositeBaseAndZero) {
    EXPECT_THROW(valuation(4, 12), InvalidInput);
    EXPECT_THROW(valuation(1, 12), InvalidInput);
    EXPECT_THROW(valuation(2, 0), InvalidInput);
}

TEST(Valuation, AgreesWithRepeatedDivision) {
    for (Int n = 1; n <= 20000; ++n)
        for (Int p : {2, 3, 5, 7, 11}) {
            int k = 0;
            Int m = n;
            while (m % p == 0) {
                m /= p;
                ++k;
            }
            ASSERT_EQ(valuation(p, n), k) << p << " " << n;
        }
}

TEST(Divisors, Examples) {
    EXPECT_EQ(divisorsOf(1), (std::vector<Int>{1}));
    EXPECT_EQ(divisorsOf(12), (std::vector<Int>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(divisorsOf(8), (std::vector<Int>{1, 2, 4, 8}));
}

TEST(Divisors, CountMatchesExponentFormulaAndTrialDivision) {
    for (Int n = 1; n <= 20000; ++n) {
        std::size_t expected = 1;
        for (const auto& [p, e] : factorize(n).factors()) expected *= static_cast<std::size_t>(e + 1);
        const auto divs = divisorsOf(n);
        ASSERT_EQ(divs.size(), expected);
        ASSERT_TRUE(std::is_sorted(divs.begin(), divs.end()));
        for (Int d : divs) ASSERT_EQ(n % d, 0);
    }
}

TEST(Arithmetic, GcdLcm) {
    EXPECT_EQ(gcd(12, 18), 6);
    EXPECT_EQ(gcd(0, 5), 5);
    EXPECT_EQ(gcd(-4, 6), 2);
    EXPECT_EQ(lcm(4, 6), 12);
    EXPECT_EQ(lcm(4, 0), 0);
}

TEST(Arithmetic, OverflowIsReported) {
    const Int big = std::numeric_limits<Int>::max() / 2 + 1;
    EXPECT_THROW(checkedMul(big, 2), BoundExceeded);
    EXPECT_THROW(checkedPow(10, 19), BoundExceeded);
    EXPECT_EQ(checkedPow(2, 10), 1024);
    EXPECT_EQ(checkedMul(-3, 4), -12);
}

TEST(Arithmetic, ModAndMulMod) {
    EXPECT_EQ(mod(-1, 12), 11);
    EXPECT_EQ(mod(25, 12), 1);
    const Int m = 1'000'000'007;
    EXPECT_EQ(mulMod(m - 1, m - 1, m), 1);
}

TEST(Arithmetic, RadicalAndSquarefree) {
    EXPECT_EQ(radical(1), 1);
    EXPECT_EQ(radical(12), 6);
    EXPECT_EQ(radical(49), 7);
    EXPECT_TRUE(isSquarefree(30));
    EXPECT_FALSE(isSquarefree(12));
    EXPECT_TRUE(factorize(30).isSquarefree());
    EXPECT_EQ(factorize(360).radical(), 30);
}

TEST(Primality, MatchesTrialDivision) {
    for (Int n = -5; n <= 10000; ++n) {
        bool prime = n >= 2;
        for (Int d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
        ASSERT_EQ(isPrime(n), prime) << n;
    }
}
