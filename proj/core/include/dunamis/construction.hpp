#pragma once

#include "dunamis/surd.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dunamis {

/// An exact coordinate: zero, or a signed quadratic surd.
class Coordinate {
public:
    Coordinate() = default;  // zero
    Coordinate(Surd magnitude, bool negative = false);  // NOLINT(google-explicit-constructor)
    Coordinate(const Ratio& r) : Coordinate(Surd(r, Natural{})) {}  // NOLINT(google-explicit-constructor)

    static Coordinate zero() { return {}; }

    bool is_zero() const noexcept { return !magnitude_.has_value(); }
    bool negative() const noexcept { return negative_; }
    /// Throws DomainError on zero.
    const Surd& magnitude() const;

    /// "0", "(p/q)·√k" or "-(p/q)·√k".
    std::string to_string() const;
    static Coordinate parse(std::string_view text);

    Coordinate operator-() const;

    double approx() const;

    friend bool operator==(const Coordinate&, const Coordinate&) = default;

private:
    std::optional<Surd> magnitude_;
    bool negative_ = false;
};

struct Point {
    Coordinate x;
    Coordinate y;
    friend bool operator==(const Point&, const Point&) = default;
};

struct Segment {
    std::string from;
    std::string to;
    friend bool operator==(const Segment&, const Segment&) = default;
};

struct Circle {
    std::string center;
    Surd radius;
    bool upper_half_only = false;  // rendering hint for semicircles
};

/// |square_side|^2 equals |rect_a| * |rect_b|.
struct SquareEqualsRectangle {
    Segment square_side;
    Segment rect_a;
    Segment rect_b;
};

/// |side| equals value.
struct SegmentHasValue {
    Segment side;
    Surd value;
};

/// The angle at vertex between the rays to a and b is right:
/// |vertex a|^2 + |vertex b|^2 = |a b|^2.
struct RightAngle {
    std::string vertex;
    std::string a;
    std::string b;
};

using LengthClaim = std::variant<SquareEqualsRectangle, SegmentHasValue, RightAngle>;

struct Figure {
    std::string caption;
    std::map<std::string, Point> points;
    std::vector<Segment> segments;
    std::vector<Circle> circles;
    std::vector<LengthClaim> claims;
};

/// The segment whose length is the geometric mean in every construction.
inline const Segment kMeanSegment{"H", "D"};
/// Side of the square erected by square_the_rectangle().
inline const Segment kSquareSide{"O", "E"};

/// Throws MalformedFigure when a segment, circle or claim names an undefined
/// point.
void check_well_formed(const Figure& f);

/// Exact |from to|^2. Throws MalformedFigure for undefined labels, for
/// coincident endpoints, and where the squared length leaves Q (the two
/// coordinates on one axis carry different nonzero kernels).
Ratio squared_length(const Figure& f, const Segment& s);

/// Exact length, i.e. sqrt(squared_length).
Surd length(const Figure& f, const Segment& s);

/// O, H, B on the horizontal axis with |OH| = a and |HB| = b, the semicircle
/// on OB about its midpoint C, and D on it above H. HD is the mean
/// proportional: |HD|^2 = |OH| * |HB|, and the angle at D is right.
Figure geometric_mean_figure(const Ratio& a, const Ratio& b);

/// geometric_mean_figure(n, 1) plus the square OEFG of side sqrt(n), hung
/// below the diameter from O, equal in area to the n x 1 rectangle.
Figure square_the_rectangle(const Natural& n);

/// True iff every claim holds exactly. Throws MalformedFigure on dangling
/// labels or non-rational squared lengths.
bool verify_figure(const Figure& f);

/// The value claimed for a segment by a SegmentHasValue claim, if any.
std::optional<Surd> claimed_value(const Figure& f, const Segment& s);

/// One squared rectangle per lesson number, in lesson order.
std::vector<Figure> theodorus_sequence();

}  // namespace dunamis
