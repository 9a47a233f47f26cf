#include "ldp/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldp {

namespace {

// Twice the signed area of the triangle (o, a, b); > 0 iff (o, a, b) turns left.
Int cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return det2(a - o, b - o);
}

Rat cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
    return det2(a - o, b - o);
}

template <typename Poly>
void rotate_to_lex_min(Poly& poly) {
    auto min_it = std::min_element(poly.vertices.begin(), poly.vertices.end(),
                                   [](const auto& a, const auto& b) { return lex_less(a, b); });
    std::rotate(poly.vertices.begin(), min_it, poly.vertices.end());
}

// Primitive integer direction of the segment a -> b.
LatticePoint direction_of(const RationalPoint& a, const RationalPoint& b) {
    Rat dx = b.x - a.x;
    Rat dy = b.y - a.y;
    LatticePoint d{Int(dx.get_num() * dy.get_den()), Int(dy.get_num() * dx.get_den())};
    return primitive_of(d);
}

// Number of times the cyclic sequence of directions wraps past angle zero.
// A strictly convex CCW vertex cycle has winding one.
int winding_of_cycle(const std::vector<LatticePoint>& dirs) {
    int wraps = 0;
    std::size_t n = dirs.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!angle_less(dirs[i], dirs[(i + 1) % n])) ++wraps;
    }
    return wraps;
}

}  // namespace

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end(),
              [](const LatticePoint& a, const LatticePoint& b) { return lex_less(a, b); });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::size_t n = points.size();
    if (n < 3) return points;

    std::vector<LatticePoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
        while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);  // last point equals the first
    return hull;
}

LatticePolygon polygon_from_points(const std::vector<LatticePoint>& points) {
    std::vector<LatticePoint> hull = convex_hull(points);
    if (hull.size() < 3) throw std::invalid_argument("degenerate polygon");
    LatticePolygon poly{std::move(hull)};
    rotate_to_lex_min(poly);
    return poly;
}

RationalPolygon rational_polygon_from_cycle(std::vector<RationalPoint> vertices) {
    std::size_t n = vertices.size();
    if (n < 3) throw std::invalid_argument("degenerate polygon");
    std::vector<LatticePoint> dirs;
    dirs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const RationalPoint& a = vertices[i];
        const RationalPoint& b = vertices[(i + 1) % n];
        const RationalPoint& c = vertices[(i + 2) % n];
        if (cross(a, b, c) <= 0) throw std::invalid_argument("vertex cycle is not strictly convex CCW");
        dirs.push_back(direction_of(a, b));
    }
    if (winding_of_cycle(dirs) != 1) throw std::invalid_argument("vertex cycle winds more than once");
    RationalPolygon poly{std::move(vertices)};
    rotate_to_lex_min(poly);
    return poly;
}

Position locate(const LatticePolygon& p, const LatticePoint& n) {
    bool on_edge = false;
    std::size_t vc = p.vertices.size();
    for (std::size_t i = 0; i < vc; ++i) {
        Int side = cross(p.vertices[i], p.vertices[(i + 1) % vc], n);
        if (side < 0) return Position::Outside;
        if (side == 0) on_edge = true;
    }
    return on_edge ? Position::Boundary : Position::Interior;
}

bool contains_origin_interior(const LatticePolygon& p) {
    return locate(p, LatticePoint{}) == Position::Interior;
}

bool contains_origin_interior(const RationalPolygon& p) {
    RationalPoint origin;
    std::size_t vc = p.vertices.size();
    for (std::size_t i = 0; i < vc; ++i) {
        if (cross(p.vertices[i], p.vertices[(i + 1) % vc], origin) <= 0) return false;
    }
    return true;
}

bool is_ldp(const LatticePolygon& p) {
    if (!contains_origin_interior(p)) return false;
    for (const LatticePoint& v : p.vertices) {
        if (!is_primitive(v)) return false;
    }
    return true;
}

RationalPolygon dual(const LatticePolygon& p) {
    if (!contains_origin_interior(p)) throw std::invalid_argument("dual undefined");
    std::vector<RationalPoint> verts;
    std::size_t vc = p.vertices.size();
    verts.reserve(vc);
    for (std::size_t i = 0; i < vc; ++i) {
        verts.push_back(edge_functional(p.vertices[i], p.vertices[(i + 1) % vc]));
    }
    return rational_polygon_from_cycle(std::move(verts));
}

RationalPolygon dual(const RationalPolygon& p) {
    if (!contains_origin_interior(p)) throw std::invalid_argument("dual undefined");
    std::vector<RationalPoint> verts;
    std::size_t vc = p.vertices.size();
    verts.reserve(vc);
    for (std::size_t i = 0; i < vc; ++i) {
        verts.push_back(edge_functional(p.vertices[i], p.vertices[(i + 1) % vc]));
    }
    return rational_polygon_from_cycle(std::move(verts));
}

Int normalized_volume(const LatticePolygon& p) {
    Int sum = 0;
    std::size_t vc = p.vertices.size();
    for (std::size_t i = 0; i < vc; ++i) {
        sum += det2(p.vertices[i], p.vertices[(i + 1) % vc]);
    }
    return sum;
}

Rat normalized_volume(const RationalPolygon& p) {
    Rat sum = 0;
    std::size_t vc = p.vertices.size();
    for (std::size_t i = 0; i < vc; ++i) {
        sum += det2(p.vertices[i], p.vertices[(i + 1) % vc]);
    }
    return sum;
}

std::vector<LatticePoint> lattice_points(const LatticePolygon& p) {
    Int xmin = p.vertices[0].x, xmax = xmin, ymin = p.vertices[0].y, ymax = ymin;
    for (const LatticePoint& v : p.vertices) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    std::vector<LatticePoint> result;
    for (Int x = xmin; x <= xmax; ++x) {
        for (Int y = ymin; y <= ymax; ++y) {
            LatticePoint n{x, y};
            if (locate(p, n) != Position::Outside) result.push_back(n);
        }
    }
    return result;  // scan order is already lexicographic
}

Rat kappa(const LatticePolygon& p, const LatticePoint& n) {
    if (!contains_origin_interior(p)) throw std::invalid_argument("kappa undefined: origin not interior");
    if (is_zero(n)) return Rat(0);
    std::size_t vc = p.vertices.size();
    for (std::size_t i = 0; i < vc; ++i) {
        const LatticePoint& u1 = p.vertices[i];
        const LatticePoint& u2 = p.vertices[(i + 1) % vc];
        if (det2(u1, n) >= 0 && det2(n, u2) >= 0) {
            return dot(edge_functional(u1, u2), n);
        }
    }
    throw std::logic_error("spanning fan does not cover the plane");
}

bool is_reflexive(const LatticePolygon& p) {
    if (!contains_origin_interior(p)) return false;
    RationalPolygon d = dual(p);
    for (const RationalPoint& m : d.vertices) {
        if (!is_integer(m.x) || !is_integer(m.y)) return false;
    }
    return true;
}

RationalPolygon to_rational(const LatticePolygon& p) {
    std::vector<RationalPoint> verts;
    verts.reserve(p.vertices.size());
    for (const LatticePoint& v : p.vertices) verts.push_back(to_rational(v));
    return RationalPolygon{std::move(verts)};
}

bool is_lattice(const RationalPolygon& p) {
    for (const RationalPoint& v : p.vertices) {
        if (!is_integer(v.x) || !is_integer(v.y)) return false;
    }
    return true;
}

LatticePolygon to_lattice(const RationalPolygon& p) {
    if (!is_lattice(p)) throw std::invalid_argument("polygon has non-integral vertices");
    std::vector<LatticePoint> verts;
    verts.reserve(p.vertices.size());
    for (const RationalPoint& v : p.vertices) verts.push_back({v.x.get_num(), v.y.get_num()});
    return LatticePolygon{std::move(verts)};
}

LatticePolygon apply_unimodular(const Mat2& m, const LatticePolygon& p) {
    Int d = det(m);
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
    std::vector<LatticePoint> verts;
    verts.reserve(p.vertices.size());
    for (const LatticePoint& v : p.vertices) verts.push_back(apply(m, v));
    // Re-hull: an orientation-reversing map flips the vertex order.
    return polygon_from_points(verts);
}

}  // namespace ldp
