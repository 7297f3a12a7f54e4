#include "dunamis/integers.hpp"

#include "dunamis/errors.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace dunamis {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t isqrt_u64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    // The floating estimate can be off by one in either direction near 2^64.
    while (r > 0 && (r > n / r)) {
        --r;
    }
    while ((r + 1) <= n / (r + 1)) {
        ++r;
    }
    return r;
}

}  // namespace

void Natural::throw_not_natural(const std::string& shown) {
    throw DomainError("not a natural number (must be >= 1): " + shown);
}

Natural::Natural(BigInt value) : value_(std::move(value)) {
    if (value_ < 1) {
        throw_not_natural(value_.str());
    }
}

Natural Natural::parse(std::string_view text) {
    if (text.empty()) {
        throw ParseError("expected a positive integer, got empty text");
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw ParseError("expected a positive integer, got '" + std::string(text) + "'");
        }
    }
    BigInt v{std::string(text)};
    if (v == 0) {
        throw DomainError("zero is not a number here: '" + std::string(text) + "'");
    }
    return Natural(std::move(v));
}

bool Natural::fits_u64() const noexcept { return value_ <= kU64Max; }

std::uint64_t Natural::to_u64() const {
    if (!fits_u64()) {
        throw DomainError("value does not fit in 64 bits: " + to_string());
    }
    return static_cast<std::uint64_t>(value_);
}

std::string Natural::to_string() const { return value_.str(); }

Natural& Natural::operator+=(const Natural& other) {
    value_ += other.value_;
    return *this;
}

Natural& Natural::operator*=(const Natural& other) {
    value_ *= other.value_;
    return *this;
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
    int c = a.value_.compare(b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.value(); }

bool divides(const Natural& d, const Natural& n) {
    if (d.fits_u64() && n.fits_u64()) {
        return n.to_u64() % d.to_u64() == 0;
    }
    return n.value() % d.value() == 0;
}

Natural exact_quotient(const Natural& n, const Natural& d) {
    if (!divides(d, n)) {
        throw DomainError(d.to_string() + " does not divide " + n.to_string());
    }
    return Natural(BigInt(n.value() / d.value()));
}

IntegerSquareRoot isqrt(const Natural& n) {
    if (n.fits_u64()) {
        const std::uint64_t v = n.to_u64();
        const std::uint64_t r = isqrt_u64(v);
        return {Natural(r), r * r == v};
    }
    // Newton iteration from above; converges monotonically to the floor.
    const BigInt& v = n.value();
    BigInt x = BigInt(1) << ((boost::multiprecision::msb(v) / 2) + 1);
    for (;;) {
        BigInt y = (x + v / x) >> 1;
        if (y >= x) break;
        x = std::move(y);
    }
    const bool exact = x * x == v;
    return {Natural(std::move(x)), exact};
}

bool is_perfect_square(const Natural& n) { return isqrt(n).exact; }

IntegerClass classify(const Natural& n) {
    const auto [root, exact] = isqrt(n);
    if (exact) {
        return Square{root};
    }
    // Largest divisor not exceeding the floor root gives the most square
    // rectangle. The search always ends at 1.
    BigInt a = root.value();
    const BigInt& v = n.value();
    while (v % a != 0) {
        --a;
    }
    return Oblong{Natural(a), Natural(BigInt(v / a))};
}

std::vector<RectRep> rectangle_representations(const Natural& n) {
    std::vector<RectRep> reps;
    const BigInt& v = n.value();
    const BigInt limit = isqrt(n).root.value();
    for (BigInt a = 1; a <= limit; ++a) {
        if (v % a == 0) {
            reps.push_back({Natural(a), Natural(BigInt(v / a))});
        }
    }
    return reps;
}

Natural gcd(const Natural& a, const Natural& b) {
    if (a.fits_u64() && b.fits_u64()) {
        std::uint64_t x = a.to_u64();
        std::uint64_t y = b.to_u64();
        while (y != 0) {
            std::uint64_t t = x % y;
            x = y;
            y = t;
        }
        return Natural(x);
    }
    BigInt x = a.value();
    BigInt y = b.value();
    while (y != 0) {
        BigInt t = x % y;
        x = std::move(y);
        y = std::move(t);
    }
    return Natural(std::move(x));
}

std::vector<PrimePower> factorize(const Natural& n) {
    std::vector<PrimePower> out;
    if (n.fits_u64()) {
        std::uint64_t m = n.to_u64();
        auto strip = [&](std::uint64_t p) {
            unsigned e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (e > 0) out.push_back({Natural(p), e});
        };
        strip(2);
        for (std::uint64_t p = 3; p <= m / p; p += 2) {
            strip(p);
        }
        if (m > 1) out.push_back({Natural(m), 1});
        return out;
    }
    BigInt m = n.value();
    for (BigInt p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) out.push_back({Natural(p), e});
    }
    if (m > 1) out.push_back({Natural(std::move(m)), 1});
    return out;
}

SquarefreeDecomposition squarefree_decompose(const Natural& n) {
    // When d reaches a prime p with p^2 | m, every smaller prime has already
    // been reduced to exponent <= 1, so composite d never divide twice.
    if (n.fits_u64()) {
        std::uint64_t m = n.to_u64();
        std::uint64_t s = 1;
        for (std::uint64_t d = 2; d <= m / d; ++d) {
            while (m % (d * d) == 0) {
                m /= d * d;
                s *= d;
            }
        }
        return {Natural(s), Natural(m)};
    }
    BigInt m = n.value();
    BigInt s = 1;
    for (BigInt d = 2; d * d <= m; ++d) {
        const BigInt dd = d * d;
        while (m % dd == 0) {
            m /= dd;
            s *= d;
        }
    }
    return {Natural(std::move(s)), Natural(std::move(m))};
}

bool is_squarefree(const Natural& n) { return squarefree_decompose(n).square_part.is_unit(); }

}  // namespace dunamis
