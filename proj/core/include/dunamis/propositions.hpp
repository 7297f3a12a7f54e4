#pragma once

#include "dunamis/surd.hpp"
#include "dunamis/trace.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dunamis {

struct RationalRoot {
    Ratio root;
    friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

struct Irrational {
    friend bool operator==(const Irrational&, const Irrational&) = default;
};

using Verdict = std::variant<RationalRoot, Irrational>;

struct Decision {
    Verdict verdict;
    ProofTrace trace;

    bool is_rational() const noexcept { return std::holds_alternative<RationalRoot>(verdict); }
    /// The rational root; throws PreconditionError on an irrational verdict.
    const Ratio& root() const;
};

/// Is sqrt(n) rational? Rational{p/1} exactly when n = p^2.
///
/// The trace opens with the square/oblong dichotomy. For an oblong n it
/// adds the integrality step ruling out a root m/k with k > 1, then the
/// conclusion.
Decision prop_a_decide(const Natural& n);

struct LemmaResult {
    bool integral = false;
    ProofTrace trace;
};

/// For coprime m, n: m^2/n^2 is a whole number iff n = 1. The trace walks
/// VII.22, VII.24, VII.20 with witnesses and ends with INTEGRALITY. Throws
/// PreconditionError when gcd(m, n) != 1.
LemmaResult integrality_lemma(const Natural& m, const Natural& n);

/// Certifies a true claim (claim_num / claim_den)^2 = r by the Euclidean
/// chain VII.22, VII.24, VII.20, concluding that r is a perfect square.
/// Throws FalseClaim ("claim false: X ≠ Y") when claim_num^2 != r*claim_den^2.
ProofTrace prop_a_certify(const Natural& r, const Natural& claim_num, const Natural& claim_den);

/// Is sqrt(r) rational, decided by whether r is as a square number to a
/// square number. Irrational verdicts carry the integrality step that pins
/// a hypothetical root to the least pair.
Decision prop_b_decide(const Ratio& r);

/// Whether sqrt(n) is a whole number.
bool prop_a_prime(const Natural& n);

struct GapWitness {
    std::string report;
    std::optional<Ratio> prop_b_root;  // set iff n/1 is the square of a rational
    bool prop_a_square = false;        // n is a perfect square
    Tag bridge = Tag::Integrality;
};

/// Runs both deciders on n and reports their conclusions side by side,
/// naming the step that makes them coincide for whole numbers.
GapWitness gap_witness(const Natural& n);

/// The lesson covers the odd numbers from 3 up to, but excluding, 17.
inline constexpr unsigned kLessonFirst = 3;
inline constexpr unsigned kLessonEnd = 17;
inline constexpr unsigned kLessonStep = 2;

struct WholeRoot {
    Natural root;
    friend bool operator==(const WholeRoot&, const WholeRoot&) = default;
};

struct Power {
    Surd surd;
    friend bool operator==(const Power&, const Power&) = default;
};

struct LessonEntry {
    Natural n;
    std::variant<WholeRoot, Power> verdict;
};

struct LessonReport {
    std::vector<LessonEntry> entries;
};

LessonReport theodorus_lesson();

struct IntegerPartition {
    std::vector<Natural> squares;  // P
    std::vector<Natural> oblongs;  // R
};

/// Splits 1..limit into perfect squares and the rest.
IntegerPartition partition_integers(const Natural& limit);

}  // namespace dunamis
