#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dunamis {

using BigInt = boost::multiprecision::cpp_int;

/// A counting number, 1, 2, 3, ...
///
/// The unit counts as a number; zero does not exist. Any attempt to build a
/// Natural from a value below one throws DomainError, so every function
/// taking a Natural can rely on n >= 1.
class Natural {
public:
    Natural() = default;  // the unit
    template <std::integral T>
    Natural(T value)  // NOLINT(google-explicit-constructor)
    {
        if (value < T{1}) {
            throw_not_natural(std::to_string(value));
        }
        value_ = BigInt(value);
    }
    explicit Natural(BigInt value);

    /// Decimal digits only, no sign, no leading '+', not zero.
    static Natural parse(std::string_view text);

    const BigInt& value() const noexcept { return value_; }
    bool is_unit() const noexcept { return value_ == 1; }
    bool fits_u64() const noexcept;
    std::uint64_t to_u64() const;  // throws DomainError when it does not fit

    std::string to_string() const;

    friend Natural operator+(const Natural& a, const Natural& b) { return Natural(BigInt(a.value_ + b.value_)); }
    friend Natural operator*(const Natural& a, const Natural& b) { return Natural(BigInt(a.value_ * b.value_)); }
    Natural& operator+=(const Natural& other);
    Natural& operator*=(const Natural& other);

    friend bool operator==(const Natural& a, const Natural& b) noexcept { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept;

private:
    [[noreturn]] static void throw_not_natural(const std::string& shown);

    BigInt value_{1};
};

std::ostream& operator<<(std::ostream& os, const Natural& n);

/// True iff d divides n.
bool divides(const Natural& d, const Natural& n);

/// Exact quotient n / d. Throws DomainError unless d divides n.
Natural exact_quotient(const Natural& n, const Natural& d);

struct IntegerSquareRoot {
    Natural root;
    bool exact = false;
};

/// Floor square root: root^2 <= n < (root+1)^2.
IntegerSquareRoot isqrt(const Natural& n);

bool is_perfect_square(const Natural& n);

struct Square {
    Natural side;
    friend bool operator==(const Square&, const Square&) = default;
};

struct Oblong {
    Natural small;
    Natural large;
    friend bool operator==(const Oblong&, const Oblong&) = default;
};

/// Every number is either the product of an equal number by itself, or of a
/// greater and a less.
using IntegerClass = std::variant<Square, Oblong>;

/// Square{p} when n = p^2, otherwise the divisor pair a < b closest to a
/// square, i.e. the pair minimizing b - a. Primes come out as Oblong{1, n}.
IntegerClass classify(const Natural& n);

struct RectRep {
    Natural a;
    Natural b;
    friend bool operator==(const RectRep&, const RectRep&) = default;
};

/// All rectangles a x b with a <= b and area n, sorted by a.
std::vector<RectRep> rectangle_representations(const Natural& n);

Natural gcd(const Natural& a, const Natural& b);

struct PrimePower {
    Natural prime;
    unsigned exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization by trial division, primes ascending. factorize(1) is
/// empty.
std::vector<PrimePower> factorize(const Natural& n);

/// n = square_part^2 * kernel with kernel squarefree.
struct SquarefreeDecomposition {
    Natural square_part;
    Natural kernel;
    friend bool operator==(const SquarefreeDecomposition&, const SquarefreeDecomposition&) = default;
};

/// Strips square divisors d^2 directly; does not go through factorize(), so
/// the two remain independent routes to the same information.
SquarefreeDecomposition squarefree_decompose(const Natural& n);

bool is_squarefree(const Natural& n);

}  // namespace dunamis
