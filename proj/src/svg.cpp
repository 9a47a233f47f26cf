#include "ldp/svg.hpp"

#include "ldp/fan.hpp"
#include "ldp/identity.hpp"

#include <algorithm>
#include <sstream>

namespace ldp {

namespace {

constexpr long kScale = 48;  // pixels per lattice unit

// Pixel coordinate of a rational lattice position, rounded to 1/1000 by
// integer division. SVG y grows downward.
std::string px(const Rat& v, bool flip) {
    Rat scaled = (flip ? -v : v) * kScale;
    Int milli = floor_div(Int(scaled.get_num() * 1000), scaled.get_den());
    bool neg = milli < 0;
    Int absv = abs(milli);
    std::string digits = absv.get_str();
    while (digits.size() < 4) digits.insert(digits.begin(), '0');
    std::string out = digits.substr(0, digits.size() - 3) + "." + digits.substr(digits.size() - 3);
    return neg ? "-" + out : out;
}

std::string px_x(const Rat& v) { return px(v, false); }
std::string px_y(const Rat& v) { return px(v, true); }
std::string px_x(const Int& v) { return px(Rat(v), false); }
std::string px_y(const Int& v) { return px(Rat(v), true); }

class Canvas {
public:
    void include_point(const Rat& x, const Rat& y) {
        Int fx = floor_rat(x), cy = -floor_rat(-y);
        Int fy = floor_rat(y), cx = -floor_rat(-x);
        if (first_) {
            xmin_ = fx;
            xmax_ = cx;
            ymin_ = fy;
            ymax_ = cy;
            first_ = false;
            return;
        }
        xmin_ = std::min(xmin_, fx);
        xmax_ = std::max(xmax_, cx);
        ymin_ = std::min(ymin_, fy);
        ymax_ = std::max(ymax_, cy);
    }

    void include_point(const LatticePoint& p) { include_point(Rat(p.x), Rat(p.y)); }
    void include_point(const RationalPoint& p) { include_point(p.x, p.y); }

    void add(const std::string& element) { body_ += "  " + element + "\n"; }

    void line(const RationalPoint& a, const RationalPoint& b, const std::string& attrs) {
        add("<line x1=\"" + px_x(a.x) + "\" y1=\"" + px_y(a.y) + "\" x2=\"" + px_x(b.x) +
            "\" y2=\"" + px_y(b.y) + "\" " + attrs + "/>");
    }

    void circle(const RationalPoint& c, const std::string& r, const std::string& attrs) {
        add("<circle cx=\"" + px_x(c.x) + "\" cy=\"" + px_y(c.y) + "\" r=\"" + r + "\" " + attrs +
            "/>");
    }

    std::string path_of(const std::vector<RationalPoint>& pts, bool close) const {
        std::string d;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            d += (i == 0 ? "M " : "L ");
            d += px_x(pts[i].x) + " " + px_y(pts[i].y) + " ";
        }
        if (close) d += "Z";
        return d;
    }

    std::string finish() const {
        Int x0 = (xmin_ - 1) * kScale;
        Int y0 = -(ymax_ + 1) * kScale;
        Int w = (xmax_ - xmin_ + 2) * kScale;
        Int h = (ymax_ - ymin_ + 2) * kScale;
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << " " << y0 << " "
            << w << " " << h << "\">\n";
        // lattice grid and axes
        for (Int x = xmin_ - 1; x <= xmax_ + 1; ++x) {
            out << "  <line class=\"grid\" x1=\"" << Int(x * kScale) << "\" y1=\"" << y0
                << "\" x2=\"" << Int(x * kScale) << "\" y2=\"" << Int(y0 + h)
                << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
        }
        for (Int y = ymin_ - 1; y <= ymax_ + 1; ++y) {
            out << "  <line class=\"grid\" x1=\"" << x0 << "\" y1=\"" << Int(-y * kScale)
                << "\" x2=\"" << Int(x0 + w) << "\" y2=\"" << Int(-y * kScale)
                << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
        }
        out << "  <line class=\"axis\" x1=\"" << x0 << "\" y1=\"0\" x2=\"" << Int(x0 + w)
            << "\" y2=\"0\" stroke=\"#999\" stroke-width=\"1\"/>\n";
        out << "  <line class=\"axis\" x1=\"0\" y1=\"" << y0 << "\" x2=\"0\" y2=\""
            << Int(y0 + h) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
        out << body_;
        out << "</svg>\n";
        return out.str();
    }

private:
    bool first_ = true;
    Int xmin_{0}, xmax_{0}, ymin_{0}, ymax_{0};
    std::string body_;
};

std::vector<RationalPoint> rational_cycle(const LatticePolygon& p) {
    std::vector<RationalPoint> out;
    out.reserve(p.vertices.size());
    for (const LatticePoint& v : p.vertices) out.push_back(to_rational(v));
    return out;
}

void draw_polygon_outline(Canvas& canvas, const std::vector<RationalPoint>& cycle,
                          const std::string& cls, const std::string& fill,
                          const std::string& stroke) {
    for (const RationalPoint& v : cycle) canvas.include_point(v);
    canvas.add("<path class=\"" + cls + "\" d=\"" + canvas.path_of(cycle, true) + "\" fill=\"" +
               fill + "\" stroke=\"" + stroke + "\" stroke-width=\"2\"/>");
}

void draw_lattice_dots(Canvas& canvas, const LatticePolygon& p) {
    for (const LatticePoint& n : lattice_points(p)) {
        bool origin = is_zero(n);
        canvas.circle(to_rational(n), origin ? "6" : "4",
                      origin ? "class=\"lattice-point origin\" fill=\"#444\""
                             : "class=\"lattice-point\" fill=\"#777\"");
    }
}

}  // namespace

std::string render_svg(const LatticePolygon& p, SvgKind kind) {
    Canvas canvas;
    std::vector<RationalPoint> outline = rational_cycle(p);

    switch (kind) {
        case SvgKind::Polygon: {
            draw_polygon_outline(canvas, outline, "polygon", "#cfe2f3", "#3d6fb4");
            draw_lattice_dots(canvas, p);
            break;
        }
        case SvgKind::Dual: {
            draw_polygon_outline(canvas, outline, "polygon", "none", "#bbb");
            RationalPolygon d = dual(p);
            draw_polygon_outline(canvas, d.vertices, "dual", "#d9ead3", "#38761d");
            for (const RationalPoint& v : d.vertices) {
                bool integral = is_integer(v.x) && is_integer(v.y);
                canvas.circle(v, "5",
                              integral ? "class=\"dual-vertex\" fill=\"#38761d\""
                                       : "class=\"dual-vertex fractional\" fill=\"#1155cc\"");
            }
            break;
        }
        case SvgKind::Sails: {
            draw_polygon_outline(canvas, outline, "polygon", "none", "#bbb");
            RationalPoint origin;
            for (const Cone& c : spanning_fan(p)) {
                Sail s = sail_of(c);
                std::vector<RationalPoint> region{origin};
                for (const LatticePoint& b : s.boundary) region.push_back(to_rational(b));
                for (const RationalPoint& v : region) canvas.include_point(v);
                canvas.add("<path class=\"sail\" d=\"" + canvas.path_of(region, true) +
                           "\" fill=\"#9fc5e8\" fill-opacity=\"0.6\" stroke=\"none\"/>");
            }
            for (const LatticePoint& r : refined_fan(p).rays) {
                canvas.line(origin, to_rational(r),
                            "class=\"ray\" stroke=\"#cc0000\" stroke-width=\"2\"");
            }
            draw_lattice_dots(canvas, p);
            break;
        }
        case SvgKind::DualChain: {
            RationalPolygon d = dual(p);
            draw_polygon_outline(canvas, d.vertices, "dual", "none", "#bbb");
            CompleteUnimodularFan fan = refined_fan(p);
            std::size_t n = fan.rays.size();
            std::vector<RationalPoint> functionals;
            for (std::size_t j = 0; j < n; ++j) {
                functionals.push_back(edge_functional(fan.rays[j], fan.rays[(j + 1) % n]));
            }
            DualChain chain = dual_chain_sum(p);
            for (std::size_t j = 0; j < n; ++j) {
                const RationalPoint& from = functionals[(j + n - 1) % n];
                const RationalPoint& to = functionals[j];
                canvas.include_point(from);
                canvas.include_point(to);
                if (chain.dets[j] == 0) {
                    canvas.circle(from, "5",
                                  "class=\"dual-edge-degenerate\" fill=\"none\" "
                                  "stroke=\"#999\" stroke-width=\"2\"");
                } else {
                    bool pos = chain.dets[j] > 0;
                    canvas.line(from, to,
                                std::string("class=\"dual-edge ") + (pos ? "positive" : "negative") +
                                    "\" stroke=\"" + (pos ? "#1155cc" : "#38761d") +
                                    "\" stroke-width=\"3\"");
                }
            }
            break;
        }
    }
    return canvas.finish();
}

}  // namespace ldp
