#include "dunamis/errors.hpp"
#include "dunamis/propositions.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

namespace dunamis {
namespace {

std::vector<Tag> tags(const ProofTrace& t) { return t.tags(); }

TEST(PropADecide, Examples) {
    const auto nine = prop_a_decide(9);
    ASSERT_TRUE(nine.is_rational());
    EXPECT_EQ(nine.root(), Ratio(3, 1));
    EXPECT_TRUE(nine.trace.contains(Tag::Dichotomy));

    EXPECT_FALSE(isqrt(Natural(2)).exact);
    const auto two = prop_a_decide(2);
    EXPECT_FALSE(two.is_rational());
    EXPECT_THROW((void)two.root(), PreconditionError);
    EXPECT_EQ(tags(two.trace), (std::vector<Tag>{Tag::Dichotomy, Tag::Integrality, Tag::PropA}));

    const auto one = prop_a_decide(1);
    ASSERT_TRUE(one.is_rational());
    EXPECT_EQ(one.root(), Ratio(1, 1));
}

TEST(PropADecide, AgreesWithFactorizationOracle) {
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        const auto d = prop_a_decide(n);
        ASSERT_EQ(d.is_rational(), oracle::all_exponents_even(n)) << n;
        ASSERT_TRUE(d.trace.valid());
        if (d.is_rational()) {
            ASSERT_EQ(d.root().num() * d.root().num(), Natural(n));
            ASSERT_TRUE(d.root().is_whole());
        }
    }
}

TEST(IntegralityLemma, Examples) {
    const auto a = integrality_lemma(3, 1);
    EXPECT_TRUE(a.integral);
    ASSERT_FALSE(a.trace.empty());
    const std::string& last = a.trace.steps().back().statement;
    EXPECT_EQ(last.substr(last.size() - 5), "n²=1");
    EXPECT_EQ(tags(a.trace), (std::vector<Tag>{Tag::VII_22, Tag::VII_24, Tag::VII_20, Tag::Integrality}));

    const auto b = integrality_lemma(3, 2);
    EXPECT_FALSE(b.integral);
    EXPECT_EQ(b.trace.steps()[1].witnesses[0].value, ExactValue(Natural(9)));
    EXPECT_EQ(b.trace.steps()[1].witnesses[1].value, ExactValue(Natural(4)));

    EXPECT_EQ(std::gcd(144, 25), 1);
    EXPECT_FALSE(integrality_lemma(12, 5).integral);
}

TEST(IntegralityLemma, RejectsNonCoprime) { EXPECT_THROW(integrality_lemma(6, 4), PreconditionError); }

TEST(IntegralityLemma, ExhaustiveTrueIffDenominatorIsOne) {
    for (std::uint64_t m = 1; m <= 200; ++m) {
        for (std::uint64_t n = 1; n <= 200; ++n) {
            if (std::gcd(m, n) != 1) continue;
            const auto r = integrality_lemma(m, n);
            ASSERT_EQ(r.integral, n == 1);
            ASSERT_EQ(r.integral, (m * m) % (n * n) == 0);
            ASSERT_TRUE(r.trace.valid());
        }
    }
}

TEST(PropACertify, Examples) {
    const auto t = prop_a_certify(9, 3, 1);
    EXPECT_EQ(tags(t), (std::vector<Tag>{Tag::VII_22, Tag::VII_24, Tag::VII_20, Tag::PropA}));

    const auto reduced = prop_a_certify(9, 6, 2);
    EXPECT_EQ(reduced.steps().front().tag, Tag::VII_22);
    const auto& w = reduced.steps().front().witnesses;
    EXPECT_EQ(w[2].value, ExactValue(Natural(2)));  // gcd
    EXPECT_EQ(w[3].value, ExactValue(Natural(3)));  // m
    EXPECT_EQ(w[4].value, ExactValue(Natural(1)));  // n

    try {
        prop_a_certify(2, 3, 2);
        FAIL() << "false claim accepted";
    } catch (const FalseClaim& e) {
        EXPECT_STREQ(e.what(), "claim false: 9 ≠ 8");
    }
}

TEST(PropACertify, AcceptsExactlyTrueClaims) {
    for (std::uint64_t r = 1; r <= 400; ++r) {
        for (std::uint64_t num = 1; num <= 40; ++num) {
            for (std::uint64_t den = 1; den <= 40; ++den) {
                const bool truth = num * num == r * den * den;
                if (truth) {
                    const ProofTrace t = prop_a_certify(r, num, den);
                    ASSERT_TRUE(t.valid());
                    ASSERT_EQ(t.steps().back().tag, Tag::PropA);
                } else {
                    ASSERT_THROW(prop_a_certify(r, num, den), FalseClaim) << r << " " << num << "/" << den;
                }
            }
        }
    }
}

TEST(PropBDecide, Examples) {
    const auto a = prop_b_decide(Ratio(9, 4));
    ASSERT_TRUE(a.is_rational());
    EXPECT_EQ(a.root(), Ratio(3, 2));
    EXPECT_TRUE(a.trace.contains(Tag::X_9));

    const auto b = prop_b_decide(reduce(18, 8));
    ASSERT_TRUE(b.is_rational());
    EXPECT_EQ(b.root(), Ratio(3, 2));

    const auto c = prop_b_decide(Ratio(2, 1));
    EXPECT_FALSE(c.is_rational());
    EXPECT_TRUE(c.trace.contains(Tag::X_9));
    EXPECT_TRUE(c.trace.contains(Tag::Integrality));
}

TEST(PropBDecide, AgreesWithPropAOnIntegers) {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        const auto a = prop_a_decide(n);
        const auto b = prop_b_decide(Ratio::of(n));
        ASSERT_EQ(a.is_rational(), b.is_rational()) << n;
        if (!oracle::is_square(n)) ASSERT_TRUE(b.trace.contains(Tag::Integrality)) << n;
        if (a.is_rational()) ASSERT_EQ(a.root(), b.root());
        ASSERT_TRUE(b.trace.valid());
    }
}

TEST(PropBDecide, RatiosAgainstCrossProductOracle) {
    for (std::uint64_t p = 1; p <= 120; ++p) {
        for (std::uint64_t q = 1; q <= 120; ++q) {
            const auto d = prop_b_decide(reduce(p, q));
            ASSERT_EQ(d.is_rational(), oracle::is_square(p * q)) << p << "/" << q;
            if (d.is_rational()) {
                ASSERT_EQ(d.root() * d.root(), reduce(p, q));
            }
        }
    }
}

TEST(PropAPrime, Examples) {
    EXPECT_TRUE(prop_a_prime(16));
    EXPECT_FALSE(prop_a_prime(15));
    EXPECT_TRUE(prop_a_prime(9));
    for (std::uint64_t n = 1; n <= 5000; ++n) ASSERT_EQ(prop_a_prime(n), is_perfect_square(n));
}

TEST(GapWitness, Examples) {
    const auto nine = gap_witness(9);
    EXPECT_EQ(nine.prop_b_root, Ratio(3, 1));
    EXPECT_TRUE(nine.prop_a_square);
    EXPECT_EQ(nine.bridge, Tag::Integrality);
    EXPECT_NE(nine.report.find("square of rational 3/1"), std::string::npos);
    EXPECT_NE(nine.report.find("perfect square true"), std::string::npos);
    EXPECT_NE(nine.report.find("INTEGRALITY"), std::string::npos);

    const auto two = gap_witness(2);
    EXPECT_FALSE(two.prop_b_root.has_value());
    EXPECT_FALSE(two.prop_a_square);
    EXPECT_NE(two.report.find("not square of a rational"), std::string::npos);
    EXPECT_NE(two.report.find("INTEGRALITY"), std::string::npos);

    const auto one = gap_witness(1);
    EXPECT_EQ(one.prop_b_root, Ratio(1, 1));
    EXPECT_TRUE(one.prop_a_square);
}

TEST(TheodorusLesson, SevenEntriesOneRational) {
    std::vector<unsigned> odd;
    for (unsigned k = 3; k < 17; ++k)
        if (k % 2 == 1) odd.push_back(k);
    ASSERT_EQ(odd.size(), 7u);

    const auto report = theodorus_lesson();
    ASSERT_EQ(report.entries.size(), 7u);
    int rational = 0;
    for (std::size_t i = 0; i < odd.size(); ++i) {
        const auto& e = report.entries[i];
        ASSERT_EQ(e.n, Natural(odd[i]));
        const bool whole = std::holds_alternative<WholeRoot>(e.verdict);
        ASSERT_EQ(whole, is_rational(sqrt_of_integer(e.n)).has_value());
        rational += whole;
    }
    EXPECT_EQ(rational, 1);
    EXPECT_EQ(report.entries[3].n, Natural(9));
    EXPECT_EQ(std::get<WholeRoot>(report.entries[3].verdict).root, Natural(3));
    EXPECT_EQ(std::get<Power>(report.entries[0].verdict).surd, Surd(Ratio{}, 3));
}

TEST(PartitionIntegers, Examples) {
    const auto ten = partition_integers(10);
    EXPECT_EQ(ten.squares, (std::vector<Natural>{1, 4, 9}));
    EXPECT_EQ(ten.oblongs, (std::vector<Natural>{2, 3, 5, 6, 7, 8, 10}));
    const auto one = partition_integers(1);
    EXPECT_EQ(one.squares, (std::vector<Natural>{1}));
    EXPECT_TRUE(one.oblongs.empty());
    EXPECT_EQ(partition_integers(17).squares, (std::vector<Natural>{1, 4, 9, 16}));
}

TEST(PartitionIntegers, CoversRangeAndImagesSplitByRationality) {
    for (std::uint64_t limit : {1u, 2u, 50u, 99u, 100u, 2025u}) {
        const auto p = partition_integers(limit);
        ASSERT_EQ(p.squares.size(), oracle::floor_sqrt(limit));
        ASSERT_EQ(p.squares.size() + p.oblongs.size(), limit);
        std::vector<Natural> all(p.squares);
        all.insert(all.end(), p.oblongs.begin(), p.oblongs.end());
        std::sort(all.begin(), all.end());
        for (std::uint64_t n = 1; n <= limit; ++n) ASSERT_EQ(all[n - 1], Natural(n));
        for (const auto& s : p.squares) ASSERT_TRUE(is_rational(sqrt_of_integer(s)));
        for (const auto& r : p.oblongs) ASSERT_FALSE(is_rational(sqrt_of_integer(r)));
    }
}

}  // namespace
}  // namespace dunamis
