#include "dunamis/surd.hpp"

#include "dunamis/errors.hpp"

#include <cctype>
#include <ostream>

namespace dunamis {

namespace {

constexpr std::string_view kDot = "·";
constexpr std::string_view kRoot = "√";

void skip_spaces(std::string_view& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
}

bool consume(std::string_view& s, std::string_view token) {
    skip_spaces(s);
    if (s.substr(0, token.size()) == token) {
        s.remove_prefix(token.size());
        return true;
    }
    return false;
}

std::string_view take_digits(std::string_view& s) {
    skip_spaces(s);
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
    }
    auto digits = s.substr(0, i);
    s.remove_prefix(i);
    return digits;
}

[[noreturn]] void bad_surd(std::string_view text) {
    throw ParseError("expected a surd of the form (p/q)·√k, got '" + std::string(text) + "'");
}

}  // namespace

Surd::Surd(Ratio coeff, Natural kernel) : coeff_(std::move(coeff)), kernel_(std::move(kernel)) {
    if (!is_squarefree(kernel_)) {
        throw DomainError("surd kernel " + kernel_.to_string() + " is not squarefree");
    }
}

Surd Surd::canonical(const Ratio& coeff, const Natural& radicand) {
    const auto [square_part, kernel] = squarefree_decompose(radicand);
    return Surd(coeff * Ratio::of(square_part), kernel);
}

Surd Surd::parse(std::string_view text) {
    std::string_view s = text;
    if (!consume(s, "(")) bad_surd(text);
    const auto p = take_digits(s);
    if (!consume(s, "/")) bad_surd(text);
    const auto q = take_digits(s);
    if (!consume(s, ")")) bad_surd(text);
    const bool unicode = consume(s, kDot);
    if (!unicode && !consume(s, "*")) bad_surd(text);
    std::string_view k;
    if (unicode) {
        if (!consume(s, kRoot)) bad_surd(text);
        k = take_digits(s);
    } else {
        if (!consume(s, "sqrt") || !consume(s, "(")) bad_surd(text);
        k = take_digits(s);
        if (!consume(s, ")")) bad_surd(text);
    }
    skip_spaces(s);
    if (!s.empty() || p.empty() || q.empty() || k.empty()) bad_surd(text);
    return canonical(reduce(Natural::parse(p), Natural::parse(q)), Natural::parse(k));
}

std::string Surd::to_string() const {
    std::string out = "(" + coeff_.to_string() + ")";
    out += kDot;
    out += kRoot;
    out += kernel_.to_string();
    return out;
}

Surd operator*(const Surd& a, const Surd& b) {
    return Surd::canonical(a.coeff_ * b.coeff_, a.kernel_ * b.kernel_);
}

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.to_string(); }

std::string display(const Surd& s) {
    if (s.kernel().is_unit()) {
        return s.coeff().is_whole() ? s.coeff().num().to_string() : s.coeff().to_string();
    }
    if (s.coeff() == Ratio{}) {
        return std::string(kRoot) + s.kernel().to_string();
    }
    return s.to_string();
}

Surd sqrt_of_integer(const Natural& n) {
    const auto [square_part, kernel] = squarefree_decompose(n);
    return Surd(Ratio::of(square_part), kernel);
}

Surd sqrt_of_ratio(const Ratio& r) { return Surd::canonical(reduce(Natural{}, r.den()), r.num() * r.den()); }

std::optional<Ratio> is_rational(const Surd& s) {
    if (s.kernel().is_unit()) {
        return s.coeff();
    }
    return std::nullopt;
}

Ratio square(const Surd& s) { return s.coeff() * s.coeff() * Ratio::of(s.kernel()); }

CommensurabilityResult commensurable(const Surd& s1, const Surd& s2) {
    if (s1.kernel() == s2.kernel()) {
        return Commensurable{s1.coeff() / s2.coeff()};
    }
    return Incommensurable{square(s1) / square(s2)};
}

}  // namespace dunamis
