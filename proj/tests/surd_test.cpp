#include "dunamis/errors.hpp"
#include "dunamis/surd.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace dunamis {
namespace {

Surd random_surd(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> coeff(1, 60);
    std::uniform_int_distribution<std::uint64_t> radicand(1, 400);
    return Surd::canonical(reduce(coeff(rng), coeff(rng)), radicand(rng));
}

TEST(Surd, CanonicalForm) {
    EXPECT_THROW(Surd(Ratio{}, 8), DomainError);
    EXPECT_EQ(Surd::canonical(Ratio{}, 8), Surd(Ratio(2, 1), 2));
    EXPECT_EQ(Surd::canonical(Ratio(1, 6), 72), Surd(Ratio(1, 1), 2));
    EXPECT_EQ(Surd(Ratio(3, 2), 5).to_string(), "(3/2)·√5");
}

TEST(Surd, ParseAcceptsBothSpellings) {
    EXPECT_EQ(Surd::parse("(3/2)·√5"), Surd(Ratio(3, 2), 5));
    EXPECT_EQ(Surd::parse(" ( 3 / 2 ) · √ 5 "), Surd(Ratio(3, 2), 5));
    EXPECT_EQ(Surd::parse("(3/2)*sqrt(5)"), Surd(Ratio(3, 2), 5));
    EXPECT_EQ(Surd::parse("(6/4)*sqrt(20)"), Surd(Ratio(3, 1), 5));
    for (const char* bad : {"", "3/2·√5", "(3/2)√5", "(3/2)·5", "(3/2)·√", "(0/2)·√5", "(3/2)·√5 x", "(3/2)*sqrt 5"}) {
        EXPECT_THROW(Surd::parse(bad), Error) << bad;
    }
}

TEST(Surd, TextRoundTrip) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 2000; ++i) {
        const Surd s = random_surd(rng);
        ASSERT_EQ(Surd::parse(s.to_string()), s);
    }
}

TEST(Surd, Display) {
    EXPECT_EQ(display(Surd(Ratio(3, 1), 1)), "3");
    EXPECT_EQ(display(Surd(Ratio(3, 2), 1)), "3/2");
    EXPECT_EQ(display(Surd(Ratio(1, 1), 3)), "√3");
    EXPECT_EQ(display(Surd(Ratio(1, 2), 2)), "(1/2)·√2");
}

TEST(SqrtOfInteger, Examples) {
    EXPECT_EQ(sqrt_of_integer(18), Surd(Ratio(3, 1), 2));
    EXPECT_EQ(sqrt_of_integer(9), Surd(Ratio(3, 1), 1));
    EXPECT_EQ(sqrt_of_integer(2), Surd(Ratio(1, 1), 2));
}

TEST(SqrtOfInteger, SquaresBackExactly) {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        ASSERT_EQ(square(sqrt_of_integer(n)), Ratio::of(n)) << n;
    }
}

TEST(SqrtOfRatio, Examples) {
    EXPECT_EQ(sqrt_of_ratio(Ratio(9, 4)), Surd(Ratio(3, 2), 1));
    EXPECT_EQ(sqrt_of_ratio(Ratio(1, 1)), Surd(Ratio(1, 1), 1));
    EXPECT_EQ(sqrt_of_ratio(Ratio(1, 2)), Surd(Ratio(1, 2), 2));
    EXPECT_EQ(square(sqrt_of_ratio(Ratio(1, 2))), Ratio(1, 2));
}

TEST(SqrtOfRatio, SquaresBackExactly) {
    for (std::uint64_t p = 1; p <= 60; ++p) {
        for (std::uint64_t q = 1; q <= 60; ++q) {
            const Ratio r = reduce(p, q);
            ASSERT_EQ(square(sqrt_of_ratio(r)), r);
        }
    }
}

TEST(IsRational, Examples) {
    EXPECT_EQ(is_rational(Surd(Ratio(3, 2), 1)), Ratio(3, 2));
    EXPECT_FALSE(is_rational(Surd(Ratio(1, 1), 2)).has_value());
    EXPECT_EQ(is_rational(Surd{}), Ratio(1, 1));
}

TEST(IsRational, ThreeRoutesAgree) {
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        const bool by_kernel = is_rational(sqrt_of_integer(n)).has_value();
        ASSERT_EQ(by_kernel, is_perfect_square(n)) << n;
        ASSERT_EQ(by_kernel, oracle::all_exponents_even(n)) << n;
    }
}

TEST(Square, Examples) {
    EXPECT_EQ(square(Surd(Ratio{}, 17)), Ratio(17, 1));
    EXPECT_EQ(square(Surd(Ratio(3, 2), 1)), Ratio(9, 4));
    EXPECT_EQ(square(Surd(Ratio(1, 2), 2)), Ratio(1, 2));
}

TEST(Commensurable, Examples) {
    EXPECT_EQ(commensurable(sqrt_of_integer(18), sqrt_of_integer(8)), CommensurabilityResult(Commensurable{Ratio(3, 2)}));
    EXPECT_EQ(commensurable(sqrt_of_integer(2), sqrt_of_integer(2)), CommensurabilityResult(Commensurable{Ratio(1, 1)}));
    EXPECT_FALSE(oracle::is_square(2 * 3));
    EXPECT_EQ(commensurable(sqrt_of_integer(2), sqrt_of_integer(3)),
              CommensurabilityResult(Incommensurable{Ratio(2, 3)}));
}

TEST(Commensurable, SquareToSquareBiconditional) {
    std::mt19937_64 rng(29);
    int both = 0;
    for (int i = 0; i < 10000; ++i) {
        const Surd a = random_surd(rng);
        const Surd b = random_surd(rng);
        const auto r = commensurable(a, b);
        const Ratio sq = square(a) / square(b);
        const bool in_length = std::holds_alternative<Commensurable>(r);
        ASSERT_EQ(in_length, is_square_to_square(sq)) << a << " vs " << b;
        if (in_length) {
            ++both;
            const Ratio q = std::get<Commensurable>(r).ratio;
            ASSERT_EQ(q * b, a);
        } else {
            ASSERT_EQ(std::get<Incommensurable>(r).square_ratio, sq);
        }
    }
    EXPECT_GT(both, 0);
}

TEST(Commensurable, ScalingInvariance) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::uint64_t> dist(1, 1000);
    for (int i = 0; i < 2000; ++i) {
        const Surd a = random_surd(rng);
        const Surd b = random_surd(rng);
        const Ratio c = reduce(dist(rng), dist(rng));
        ASSERT_EQ(commensurable(c * a, c * b).index(), commensurable(a, b).index());
    }
}

TEST(Surd, ProductCanonicalizes) {
    EXPECT_EQ(sqrt_of_integer(2) * sqrt_of_integer(8), Surd(Ratio(4, 1), 1));
    EXPECT_EQ(sqrt_of_integer(6) * sqrt_of_integer(10), Surd(Ratio(2, 1), 15));
}

}  // namespace
}  // namespace dunamis
