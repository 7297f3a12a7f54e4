#include "dunamis/ratio.hpp"

#include "dunamis/errors.hpp"

#include <ostream>

namespace dunamis {

Ratio::Ratio(Natural num, Natural den) : num_(std::move(num)), den_(std::move(den)) {
    if (!gcd(num_, den_).is_unit()) {
        throw DomainError("ratio " + num_.to_string() + "/" + den_.to_string() + " is not in lowest terms");
    }
}

Ratio Ratio::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Ratio::of(Natural::parse(text));
    }
    return reduce(Natural::parse(text.substr(0, slash)), Natural::parse(text.substr(slash + 1)));
}

std::string Ratio::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.num() << '/' << r.den(); }

Ratio operator*(const Ratio& a, const Ratio& b) { return reduce(a.num_ * b.num_, a.den_ * b.den_); }

Ratio operator/(const Ratio& a, const Ratio& b) { return reduce(a.num_ * b.den_, a.den_ * b.num_); }

Ratio operator+(const Ratio& a, const Ratio& b) {
    return reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Ratio reduce(const Natural& a, const Natural& b) {
    const Natural g = gcd(a, b);
    if (g.is_unit()) {
        return Ratio(Ratio::Trusted{}, a, b);
    }
    return Ratio(Ratio::Trusted{}, exact_quotient(a, g), exact_quotient(b, g));
}

bool same_ratio(const Natural& a, const Natural& b, const Natural& c, const Natural& d) { return a * d == b * c; }

bool alternate(const Natural& a, const Natural& b, const Natural& c, const Natural& d) {
    if (!same_ratio(a, b, c, d)) {
        throw PreconditionError("not a proportion: " + a.to_string() + ":" + b.to_string() +
                                " != " + c.to_string() + ":" + d.to_string());
    }
    return same_ratio(a, c, b, d);
}

Natural vii20_divides(const Natural& a, const Natural& b) {
    const Ratio least = reduce(a, b);
    const Natural q = exact_quotient(a, least.num());
    if (exact_quotient(b, least.den()) != q) {
        throw InvariantViolation("least pair of " + a.to_string() + ":" + b.to_string() +
                                 " does not measure both terms the same number of times");
    }
    return q;
}

Ratio square_ratio(const Ratio& r) {
    Natural num = r.num() * r.num();
    Natural den = r.den() * r.den();
    if (!gcd(num, den).is_unit()) {
        throw InvariantViolation("squares of the coprime pair " + r.to_string() + " share a factor");
    }
    return Ratio(Ratio::Trusted{}, std::move(num), std::move(den));
}

bool is_square_to_square(const Ratio& r) { return is_perfect_square(r.num()) && is_perfect_square(r.den()); }

bool is_square_to_square(const Natural& a, const Natural& b) { return is_square_to_square(reduce(a, b)); }

}  // namespace dunamis
