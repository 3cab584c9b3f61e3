#include <gtest/gtest.h>

#include "bpfib/errors.hpp"
#include "bpfib/oracle.hpp"
#include "bpfib/sequences.hpp"
#include "generators.hpp"

using namespace bpfib;

namespace {

const ParamSet p23(Rational{2}, Rational{3});
const ParamSet p11(Rational{1}, Rational{1});

} // namespace

TEST(Params, Validation) {
    EXPECT_THROW(ParamSet(Rational{0}, Rational{1}), InvalidParameter);
    EXPECT_THROW(ParamSet(Rational{1}, Rational{0}), InvalidParameter);
    ParamSet degenerate(Rational{-2}, Rational{2});
    EXPECT_TRUE(degenerate.degenerate());
    EXPECT_THROW(cassini_l(1, degenerate), DegenerateParameter);
    EXPECT_EQ(p23.ratio(), Rational(3, 2));
}

TEST(Parity, EpsAndFloorHalf) {
    EXPECT_EQ(parity_eps(4), 0);
    EXPECT_EQ(parity_eps(7), 1);
    EXPECT_EQ(parity_eps(-3), 1);
    EXPECT_EQ(floor_half(5), 2);
    EXPECT_EQ(floor_half(-5), -3);
    EXPECT_EQ(floor_half(-4), -2);
}

TEST(Fib, KnownValues) {
    EXPECT_EQ(bp_fib(0, p23), Rational{0});
    EXPECT_EQ(bp_fib(1, p23), Rational{1});
    const int want[] = {2, 7, 16, 55, 126};
    for (int n = 2; n <= 6; ++n) EXPECT_EQ(bp_fib(n, p23), Rational{want[n - 2]}) << n;
    EXPECT_EQ(bp_fib(10, p11), Rational{55});
    EXPECT_EQ(bp_fib(-4, p23), Rational{-16});
}

TEST(Lucas, KnownValues) {
    EXPECT_EQ(bp_lucas(0, p23), Rational{2});
    EXPECT_EQ(bp_lucas(1, p23), Rational{2});
    const int want[] = {8, 18, 62, 142};
    for (int n = 2; n <= 5; ++n) EXPECT_EQ(bp_lucas(n, p23), Rational{want[n - 2]}) << n;
    EXPECT_EQ(bp_lucas(5, p11), Rational{11});
}

TEST(FibPoly, KnownValues) {
    EXPECT_TRUE(bp_fib_poly(0, p23).is_zero());
    EXPECT_EQ(bp_fib_poly(1, p23), Poly(Rational{1}));
    EXPECT_EQ(bp_fib_poly(4, p23).to_pretty(), "12x^3 + 4x");
    EXPECT_EQ(bp_fib_poly(5, p11).to_pretty(), "x^4 + 3x^2 + 1");
    EXPECT_THROW(bp_fib_poly(-1, p23), ContractViolation);
}

TEST(Identities, Examples) {
    EXPECT_EQ(bridge_residuals(3, p23), std::make_pair(Rational{0}, Rational{0}));
    EXPECT_EQ(bridge_residuals(2, p11), std::make_pair(Rational{0}, Rational{0}));
    EXPECT_EQ(bridge_residuals(-2, p23), std::make_pair(Rational{0}, Rational{0}));
    EXPECT_EQ(cassini_q(2, p23), Rational{2});
    EXPECT_EQ(cassini_q(3, p23), Rational{-2});
    EXPECT_EQ(cassini_q(4, p11), Rational{1});
    EXPECT_EQ(cassini_l(1, p11), Rational{5});
    EXPECT_EQ(cassini_l(2, p23), Rational{-10});
    EXPECT_EQ(cassini_l(2, p11), Rational{-5});
}

TEST(Addition, Examples) {
    EXPECT_EQ(fib_add(1, 2, p23), Rational{7});
    EXPECT_EQ(fib_add(2, 2, p23), Rational{16});
    EXPECT_EQ(fib_add(5, 5, p11), Rational{55});
    EXPECT_EQ(fib_sub(3, 1, p23), Rational{2});
    EXPECT_EQ(fib_sub(2, 1, p23), Rational{1});
    EXPECT_EQ(fib_sub(4, 4, p23), Rational{0});
    EXPECT_THROW(fib_add(0, 1, p23), ContractViolation);
    EXPECT_THROW(fib_sub(1, 2, p23), ContractViolation);
}

TEST(Sequences, TermTablesMatchSingleTerms) {
    auto q = bp_fib_terms(30, p23);
    auto l = bp_lucas_terms(30, p23);
    ASSERT_EQ(q.size(), 30u);
    for (std::int64_t n = 0; n < 30; ++n) {
        EXPECT_EQ(q[n], bp_fib(n, p23));
        EXPECT_EQ(l[n], bp_lucas(n, p23));
    }
}

TEST(Specializations, ClassicalSequences) {
    const int fib[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    const int lucas[] = {2, 1, 3, 4, 7, 11};
    const int pell[] = {0, 1, 2, 5, 12, 29, 70};
    const int k3[] = {0, 1, 3, 10, 33, 109};
    for (int n = 0; n < 11; ++n) EXPECT_EQ(bp_fib(n, p11), Rational{fib[n]});
    for (int n = 0; n < 6; ++n) EXPECT_EQ(bp_lucas(n, p11), Rational{lucas[n]});
    ParamSet p22(Rational{2}, Rational{2}), p33(Rational{3}, Rational{3});
    for (int n = 0; n < 7; ++n) EXPECT_EQ(bp_fib(n, p22), Rational{pell[n]});
    for (int n = 0; n < 6; ++n) EXPECT_EQ(bp_fib(n, p33), Rational{k3[n]});
}

TEST(SequencesProperty, AgreeWithOracleIncludingNegativeIndices) {
    for (int i = 0; i < 60; ++i) {
        ParamSet p = gen::params();
        for (std::int64_t n = -25; n <= 25; ++n) {
            ASSERT_EQ(bp_fib(n, p), oracle::naive_fib(n, p.a(), p.b())) << p.to_string() << " n=" << n;
            ASSERT_EQ(bp_lucas(n, p), oracle::naive_lucas(n, p.a(), p.b())) << p.to_string() << " n=" << n;
            const Rational sign = n % 2 == 0 ? Rational{-1} : Rational{1};
            ASSERT_EQ(bp_fib(-n, p), sign * bp_fib(n, p));
            ASSERT_EQ(bp_lucas(-n, p), -sign * bp_lucas(n, p));
        }
    }
}

TEST(SequencesProperty, PolynomialMatchesOracleAndNumbersAtOne) {
    for (int i = 0; i < 40; ++i) {
        ParamSet p = gen::params();
        Rational x0 = gen::rational(5);
        for (std::int64_t n = 0; n <= 20; ++n) {
            Poly q = bp_fib_poly(n, p);
            ASSERT_EQ(q, oracle::naive_fib_poly(n, p.a(), p.b()));
            ASSERT_EQ(q.eval(Rational{1}), bp_fib(n, p));
            ASSERT_EQ(q.eval(x0), oracle::naive_fib_at(n, p.a(), p.b(), x0));
            ASSERT_EQ(bp_fib_at(n, p, x0), q.eval(x0));
            if (n >= 1) {
                ASSERT_EQ(q.degree(), n - 1);
            }
        }
    }
}

TEST(SequencesProperty, CassiniBridgeAndAddition) {
    for (int i = 0; i < 40; ++i) {
        ParamSet p = gen::params();
        for (std::int64_t n = 1; n <= 30; ++n) {
            const Rational sign = n % 2 == 0 ? Rational{1} : Rational{-1};
            ASSERT_EQ(cassini_q(n, p), p.a() * sign);
            if (!p.degenerate()) {
                ASSERT_EQ(cassini_l(n, p), -p.ab_plus_4() * sign);
            }
        }
        for (std::int64_t n = -20; n <= 20; ++n) {
            auto [r1, r2] = bridge_residuals(n, p);
            ASSERT_TRUE(r1.is_zero() && r2.is_zero());
        }
        // All four expansion variants across every parity combination.
        for (std::int64_t m = 1; m <= 12; ++m)
            for (std::int64_t n = 1; n <= m; ++n)
                for (Expansion form : {Expansion::upper, Expansion::lower}) {
                    ASSERT_EQ(fib_add(m, n, p, form), oracle::naive_fib(m + n, p.a(), p.b()));
                    ASSERT_EQ(fib_sub(m, n, p, form), oracle::naive_fib(m - n, p.a(), p.b()));
                }
    }
}

TEST(Oracle, ModularAgreesWithExact) {
    for (int i = 0; i < 30; ++i) {
        ParamSet p = gen::params(9);
        const std::uint64_t mod = 2305843009213693951ULL;
        for (std::uint64_t n : {0ULL, 1ULL, 2ULL, 17ULL, 60ULL})
            ASSERT_EQ(oracle::naive_fib_mod(n, p.a(), p.b(), mod),
                      oracle::reduce_mod(oracle::naive_fib(static_cast<std::int64_t>(n), p.a(), p.b()), mod));
    }
}
