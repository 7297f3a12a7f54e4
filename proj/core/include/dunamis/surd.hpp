#pragma once

#include "dunamis/ratio.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace dunamis {

/// A positive quadratic surd coeff * sqrt(kernel), kernel squarefree.
///
/// This is the canonical form of a "power": a length whose square is
/// rational. Two surds are equal iff their coefficients and kernels are.
/// The surd is rational iff kernel == 1.
class Surd {
public:
    Surd() = default;  // (1/1)·√1

    /// Requires a squarefree kernel; throws DomainError otherwise.
    Surd(Ratio coeff, Natural kernel);

    /// coeff * sqrt(radicand) for any radicand; square factors are moved
    /// into the coefficient.
    static Surd canonical(const Ratio& coeff, const Natural& radicand);

    /// Parses the text form produced by to_string(), "(p/q)·√k". The ASCII
    /// spelling "(p/q)*sqrt(k)" is accepted too, as are non-squarefree
    /// radicands, which are canonicalized.
    static Surd parse(std::string_view text);

    const Ratio& coeff() const noexcept { return coeff_; }
    const Natural& kernel() const noexcept { return kernel_; }

    /// "(p/q)·√k", always with both parts, e.g. "(3/1)·√1".
    std::string to_string() const;

    friend bool operator==(const Surd&, const Surd&) = default;

    friend Surd operator*(const Ratio& c, const Surd& s) { return Surd(c * s.coeff_, s.kernel_); }
    friend Surd operator*(const Surd& a, const Surd& b);

private:
    Ratio coeff_;
    Natural kernel_;
};

std::ostream& operator<<(std::ostream& os, const Surd& s);

/// Short human form: "3", "3/2" for rational surds, "√3" for unit
/// coefficients, the full text form otherwise.
std::string display(const Surd& s);

/// The surd equal to sqrt(n).
Surd sqrt_of_integer(const Natural& n);

/// The surd equal to sqrt(num/den), via sqrt(p/q) = sqrt(p*q)/q.
Surd sqrt_of_ratio(const Ratio& r);

/// The coefficient when the kernel is 1.
std::optional<Ratio> is_rational(const Surd& s);

/// coeff^2 * kernel, always rational.
Ratio square(const Surd& s);

struct Commensurable {
    Ratio ratio;  // s1 / s2
    friend bool operator==(const Commensurable&, const Commensurable&) = default;
};

struct Incommensurable {
    Ratio square_ratio;  // s1^2 / s2^2
    friend bool operator==(const Incommensurable&, const Incommensurable&) = default;
};

using CommensurabilityResult = std::variant<Commensurable, Incommensurable>;

/// Commensurable in length iff the kernels agree; otherwise only
/// commensurable in square.
CommensurabilityResult commensurable(const Surd& s1, const Surd& s2);

}  // namespace dunamis
