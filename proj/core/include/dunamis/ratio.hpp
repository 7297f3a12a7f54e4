#pragma once

#include "dunamis/integers.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace dunamis {

/// A ratio of two numbers, always held as the least pair in that ratio.
///
/// A ratio is not a number: there is no arithmetic mixing Ratio and
/// Natural. Ratio-by-ratio products and quotients are provided, plus sums
/// for laying out construction coordinates. Use Ratio::of(n) to view a
/// number n as the ratio n : 1.
class Ratio {
public:
    Ratio() = default;  // 1 : 1

    /// Accepts only a pair already in lowest terms; throws DomainError
    /// otherwise. Use reduce() to canonicalize an arbitrary pair.
    Ratio(Natural num, Natural den);

    static Ratio of(const Natural& n) { return Ratio(n, Natural{}); }

    /// "p/q" or "p" (meaning p/1). The pair is reduced.
    static Ratio parse(std::string_view text);

    const Natural& num() const noexcept { return num_; }
    const Natural& den() const noexcept { return den_; }
    bool is_whole() const noexcept { return den_.is_unit(); }

    /// Always "p/q", including "p/1".
    std::string to_string() const;

    friend bool operator==(const Ratio&, const Ratio&) = default;

    friend Ratio operator*(const Ratio& a, const Ratio& b);
    friend Ratio operator/(const Ratio& a, const Ratio& b);
    friend Ratio operator+(const Ratio& a, const Ratio& b);

private:
    struct Trusted {};
    Ratio(Trusted, Natural num, Natural den) : num_(std::move(num)), den_(std::move(den)) {}

    friend Ratio reduce(const Natural& a, const Natural& b);
    friend Ratio square_ratio(const Ratio& r);

    Natural num_;
    Natural den_;
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

/// The least pair (m, n) with m : n = a : b.
Ratio reduce(const Natural& a, const Natural& b);

/// a : b = c : d, decided by a*d = b*c.
bool same_ratio(const Natural& a, const Natural& b, const Natural& c, const Natural& d);

/// Alternando: from a : b = c : d conclude a : c = b : d. Throws
/// PreconditionError when the given proportion is false; returns the
/// (always true) same-ratio test of the alternated proportion otherwise.
bool alternate(const Natural& a, const Natural& b, const Natural& c, const Natural& d);

/// The common multiple q with a = q*m and b = q*n, where (m, n) is the least
/// pair in the ratio a : b.
Natural vii20_divides(const Natural& a, const Natural& b);

/// (m^2, n^2) for a least pair (m, n). The result is checked, not reduced:
/// squares of coprime numbers are coprime, and a violation throws
/// InvariantViolation.
Ratio square_ratio(const Ratio& r);

/// Whether a : b is as a square number to a square number, i.e. both terms of
/// the least pair are squares.
bool is_square_to_square(const Natural& a, const Natural& b);
bool is_square_to_square(const Ratio& r);

}  // namespace dunamis
