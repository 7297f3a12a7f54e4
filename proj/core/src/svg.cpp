#include "dunamis/svg.hpp"

#include "dunamis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <locale>
#include <sstream>

namespace dunamis {

namespace {

constexpr double kMargin = 30.0;

std::string escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Canvas {
    double min_x = 0, max_y = 0, scale = 1;
    double x(double v) const { return kMargin + (v - min_x) * scale; }
    double y(double v) const { return kMargin + (max_y - v) * scale; }
};

}  // namespace

std::string figure_to_svg(const Figure& f, double scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw DomainError("scale must be a positive number");
    }
    check_well_formed(f);

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    auto extend = [&](double x, double y) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    };
    for (const auto& [label, p] : f.points) extend(p.x.approx(), p.y.approx());
    for (const auto& c : f.circles) {
        const Point& ctr = f.points.at(c.center);
        const double r = Coordinate(c.radius).approx();
        extend(ctr.x.approx() - r, ctr.y.approx() + r);
        extend(ctr.x.approx() + r, c.upper_half_only ? ctr.y.approx() : ctr.y.approx() - r);
    }
    const Canvas cv{min_x, max_y, scale};

    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::fixed << std::setprecision(3);
    const double width = (max_x - min_x) * scale + 2 * kMargin;
    const double height = (max_y - min_y) * scale + 2 * kMargin;

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
       << "  <title>" << escape(f.caption) << "</title>\n";

    os << "  <g class=\"circles\" fill=\"none\" stroke=\"#888\">\n";
    for (const auto& c : f.circles) {
        const Point& ctr = f.points.at(c.center);
        const double cx = ctr.x.approx();
        const double cy = ctr.y.approx();
        const double r = Coordinate(c.radius).approx();
        const std::string meta = "data-center=\"" + escape(c.center) + "\" data-exact=\"" + escape(c.radius.to_string()) + "\"";
        if (c.upper_half_only) {
            os << "    <path class=\"semicircle\" d=\"M " << cv.x(cx - r) << ' ' << cv.y(cy) << " A " << r * scale << ' '
               << r * scale << " 0 0 1 " << cv.x(cx + r) << ' ' << cv.y(cy) << "\" " << meta << "/>\n";
        } else {
            os << "    <circle cx=\"" << cv.x(cx) << "\" cy=\"" << cv.y(cy) << "\" r=\"" << r * scale << "\" " << meta
               << "/>\n";
        }
    }
    os << "  </g>\n";

    os << "  <g class=\"segments\" stroke=\"#000\" stroke-width=\"1.5\">\n";
    for (const auto& s : f.segments) {
        const Point& p = f.points.at(s.from);
        const Point& q = f.points.at(s.to);
        os << "    <line x1=\"" << cv.x(p.x.approx()) << "\" y1=\"" << cv.y(p.y.approx()) << "\" x2=\"" << cv.x(q.x.approx())
           << "\" y2=\"" << cv.y(q.y.approx()) << "\" data-from=\"" << escape(s.from) << "\" data-to=\"" << escape(s.to)
           << "\" data-exact=\"" << escape(length(f, s).to_string()) << "\"/>\n";
    }
    os << "  </g>\n";

    os << "  <g class=\"points\" font-family=\"serif\" font-size=\"14\">\n";
    for (const auto& [label, p] : f.points) {
        const double px = cv.x(p.x.approx());
        const double py = cv.y(p.y.approx());
        os << "    <circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"2.5\" data-label=\"" << escape(label)
           << "\" data-exact-x=\"" << escape(p.x.to_string()) << "\" data-exact-y=\"" << escape(p.y.to_string())
           << "\"/>\n"
           << "    <text x=\"" << px + 4 << "\" y=\"" << py - 4 << "\" data-label=\"" << escape(label) << "\">"
           << escape(label) << "</text>\n";
    }
    os << "  </g>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace dunamis
