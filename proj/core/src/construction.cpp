#include "dunamis/construction.hpp"

#include "dunamis/errors.hpp"
#include "dunamis/propositions.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

namespace dunamis {

namespace {

using boost::multiprecision::cpp_rational;

cpp_rational to_q(const Ratio& r) { return cpp_rational(r.num().value()) / cpp_rational(r.den().value()); }

// Signed coefficient of the coordinate (value = coeff * sqrt(kernel)).
cpp_rational signed_coeff(const Coordinate& c) {
    const cpp_rational q = to_q(c.magnitude().coeff());
    return c.negative() ? cpp_rational(-q) : q;
}

cpp_rational axis_square_diff(const Coordinate& c1, const Coordinate& c2, const Segment& s) {
    if (c1.is_zero() && c2.is_zero()) return 0;
    if (c1.is_zero() || c2.is_zero()) {
        const Surd& m = c1.is_zero() ? c2.magnitude() : c1.magnitude();
        return to_q(square(m));
    }
    if (c1.magnitude().kernel() != c2.magnitude().kernel()) {
        throw MalformedFigure("squared length of " + s.from + s.to + " is not rational (coordinates " +
                              c1.to_string() + " and " + c2.to_string() + ")");
    }
    const cpp_rational d = signed_coeff(c1) - signed_coeff(c2);
    return d * d * cpp_rational(c1.magnitude().kernel().value());
}

const Point& point_at(const Figure& f, const std::string& label) {
    auto it = f.points.find(label);
    if (it == f.points.end()) {
        throw MalformedFigure("undefined point '" + label + "'");
    }
    return it->second;
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Coordinate::Coordinate(Surd magnitude, bool negative) : magnitude_(std::move(magnitude)), negative_(negative) {}

const Surd& Coordinate::magnitude() const {
    if (!magnitude_) throw DomainError("zero coordinate has no magnitude");
    return *magnitude_;
}

std::string Coordinate::to_string() const {
    if (!magnitude_) return "0";
    return (negative_ ? "-" : "") + magnitude_->to_string();
}

Coordinate Coordinate::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text == "0") return {};
    bool neg = false;
    if (!text.empty() && text.front() == '-') {
        neg = true;
        text.remove_prefix(1);
    }
    return Coordinate(Surd::parse(text), neg);
}

Coordinate Coordinate::operator-() const {
    if (!magnitude_) return *this;
    return Coordinate(*magnitude_, !negative_);
}

double Coordinate::approx() const {
    if (!magnitude_) return 0.0;
    const auto& c = magnitude_->coeff();
    const long double q = c.num().value().convert_to<long double>() / c.den().value().convert_to<long double>();
    const long double v = q * std::sqrt(magnitude_->kernel().value().convert_to<long double>());
    return static_cast<double>(negative_ ? -v : v);
}

void check_well_formed(const Figure& f) {
    for (const auto& s : f.segments) {
        point_at(f, s.from);
        point_at(f, s.to);
    }
    for (const auto& c : f.circles) point_at(f, c.center);
    for (const auto& claim : f.claims) {
        std::visit(overloaded{
                       [&](const SquareEqualsRectangle& c) {
                           for (const auto* s : {&c.square_side, &c.rect_a, &c.rect_b}) {
                               point_at(f, s->from);
                               point_at(f, s->to);
                           }
                       },
                       [&](const SegmentHasValue& c) {
                           point_at(f, c.side.from);
                           point_at(f, c.side.to);
                       },
                       [&](const RightAngle& c) {
                           point_at(f, c.vertex);
                           point_at(f, c.a);
                           point_at(f, c.b);
                       },
                   },
                   claim);
    }
}

Ratio squared_length(const Figure& f, const Segment& s) {
    const Point& p = point_at(f, s.from);
    const Point& q = point_at(f, s.to);
    const cpp_rational total = axis_square_diff(p.x, q.x, s) + axis_square_diff(p.y, q.y, s);
    if (total == 0) {
        throw MalformedFigure("segment " + s.from + s.to + " has coincident endpoints");
    }
    return Ratio(Natural(BigInt(numerator(total))), Natural(BigInt(denominator(total))));
}

Surd length(const Figure& f, const Segment& s) { return sqrt_of_ratio(squared_length(f, s)); }

Figure geometric_mean_figure(const Ratio& a, const Ratio& b) {
    Figure f;
    const Ratio diameter = a + b;
    const Ratio radius = diameter / Ratio::of(2);
    const Surd mean = sqrt_of_ratio(a * b);
    f.caption = "mean proportional of " + a.to_string() + " and " + b.to_string() + ": " + display(mean);
    f.points["O"] = {Coordinate::zero(), Coordinate::zero()};
    f.points["H"] = {Coordinate(a), Coordinate::zero()};
    f.points["B"] = {Coordinate(diameter), Coordinate::zero()};
    f.points["C"] = {Coordinate(radius), Coordinate::zero()};
    f.points["D"] = {Coordinate(a), Coordinate(mean)};
    f.segments = {{"O", "H"}, {"H", "B"}, kMeanSegment, {"O", "D"}, {"D", "B"}};
    f.circles = {{"C", Surd(radius, Natural{}), true}};
    f.claims = {
        SegmentHasValue{{"O", "H"}, Surd(a, Natural{})},
        SegmentHasValue{{"H", "B"}, Surd(b, Natural{})},
        SegmentHasValue{kMeanSegment, mean},
        SegmentHasValue{{"C", "D"}, Surd(radius, Natural{})},
        SquareEqualsRectangle{kMeanSegment, {"O", "H"}, {"H", "B"}},
        RightAngle{"D", "O", "B"},
    };
    return f;
}

Figure square_the_rectangle(const Natural& n) {
    Figure f = geometric_mean_figure(Ratio::of(n), Ratio{});
    const Surd side = sqrt_of_integer(n);
    f.caption = "square of side " + display(side) + " equal to the rectangle " + n.to_string() + "×1";
    f.points["E"] = {Coordinate(side), Coordinate::zero()};
    f.points["F"] = {Coordinate(side), -Coordinate(side)};
    f.points["G"] = {Coordinate::zero(), -Coordinate(side)};
    f.segments.insert(f.segments.end(), {kSquareSide, {"E", "F"}, {"F", "G"}, {"G", "O"}});
    f.claims.insert(f.claims.end(), {
                                        SegmentHasValue{kSquareSide, side},
                                        SegmentHasValue{{"E", "F"}, side},
                                        RightAngle{"E", "O", "F"},
                                        SquareEqualsRectangle{kSquareSide, {"O", "H"}, {"H", "B"}},
                                    });
    return f;
}

bool verify_figure(const Figure& f) {
    check_well_formed(f);
    bool ok = true;
    for (const auto& claim : f.claims) {
        ok = ok && std::visit(overloaded{
                                  [&](const SquareEqualsRectangle& c) {
                                      const Ratio side2 = squared_length(f, c.square_side);
                                      return side2 * side2 == squared_length(f, c.rect_a) * squared_length(f, c.rect_b);
                                  },
                                  [&](const SegmentHasValue& c) { return squared_length(f, c.side) == square(c.value); },
                                  [&](const RightAngle& c) {
                                      return squared_length(f, {c.vertex, c.a}) + squared_length(f, {c.vertex, c.b}) ==
                                             squared_length(f, {c.a, c.b});
                                  },
                              },
                              claim);
    }
    return ok;
}

std::optional<Surd> claimed_value(const Figure& f, const Segment& s) {
    for (const auto& claim : f.claims) {
        if (const auto* c = std::get_if<SegmentHasValue>(&claim); c && c->side == s) {
            return c->value;
        }
    }
    return std::nullopt;
}

std::vector<Figure> theodorus_sequence() {
    std::vector<Figure> out;
    for (const auto& entry : theodorus_lesson().entries) {
        out.push_back(square_the_rectangle(entry.n));
    }
    return out;
}

}  // namespace dunamis
