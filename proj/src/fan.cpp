#include "ldp/fan.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldp {

namespace {

constexpr long kSailHullThreshold = 24;

Int cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return det2(a - o, b - o);
}

// Exact division (a*u1 + i*u2) / V, valid whenever the result is integral.
LatticePoint scaled_combination(const Int& a, const LatticePoint& u1, const Int& i,
                                const LatticePoint& u2, const Int& V) {
    Int x = a * u1.x + i * u2.x;
    Int y = a * u1.y + i * u2.y;
    if (x % V != 0 || y % V != 0) throw std::logic_error("combination is not a lattice point");
    return {x / V, y / V};
}

// Builds a cone from generators and already-known invariants (V, a).
Cone make_cone(const LatticePoint& u1, const LatticePoint& u2, Int V, Int a) {
    LatticePoint w = (V == 1) ? u2 : scaled_combination(a, u1, 1, u2, V);
    return Cone{u1, u2, std::move(V), std::move(a), w};
}

// Lattice points of conv(0, u1, u2) except the origin.
std::vector<LatticePoint> triangle_points_nonzero(const LatticePoint& u1, const LatticePoint& u2) {
    LatticePoint zero{};
    Int xmin = std::min(Int(0), std::min(u1.x, u2.x));
    Int xmax = std::max(Int(0), std::max(u1.x, u2.x));
    Int ymin = std::min(Int(0), std::min(u1.y, u2.y));
    Int ymax = std::max(Int(0), std::max(u1.y, u2.y));
    std::vector<LatticePoint> pts;
    for (Int x = xmin; x <= xmax; ++x) {
        for (Int y = ymin; y <= ymax; ++y) {
            LatticePoint p{x, y};
            if (is_zero(p)) continue;
            if (cross(zero, u1, p) >= 0 && cross(u1, u2, p) >= 0 && cross(u2, zero, p) >= 0) {
                pts.push_back(p);
            }
        }
    }
    return pts;
}

// Inserts the lattice points interior to the segment p -> q.
void append_segment_points(std::vector<LatticePoint>& out, const LatticePoint& p,
                           const LatticePoint& q) {
    LatticePoint d = q - p;
    Int g = gcd(d.x, d.y);
    LatticePoint step{d.x / g, d.y / g};
    LatticePoint cur = p;
    for (Int i = 1; i < g; ++i) {
        cur = cur + step;
        out.push_back(cur);
    }
    out.push_back(q);
}

void check_chain(const std::vector<LatticePoint>& chain, const Cone& c) {
    if (chain.size() < 2 || chain.front() != c.u2 || chain.back() != c.u1) {
        throw std::logic_error("sail chain does not run from u2 to u1");
    }
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (det2(chain[i], chain[i - 1]) != 1) {
            throw std::logic_error("sail chain step is not unimodular");
        }
    }
}

}  // namespace

Cone cone_params(const LatticePoint& u1, const LatticePoint& u2) {
    if (is_zero(u1) || is_zero(u2)) throw std::invalid_argument("zero cone generator");
    if (!is_primitive(u1) || !is_primitive(u2)) {
        throw std::invalid_argument("cone generator not primitive");
    }
    Int V = det2(u1, u2);
    if (V <= 0) throw std::invalid_argument("cone generators not positively oriented");
    if (V == 1) return Cone{u1, u2, 1, 0, u2};
    for (Int a = 0; a < V; ++a) {
        if (mod_floor(a * u1.x + u2.x, V) == 0 && mod_floor(a * u1.y + u2.y, V) == 0) {
            Cone c = make_cone(u1, u2, V, a);
            if (gcd(c.a, c.V) != 1) throw std::logic_error("cone residue not coprime to volume");
            return c;
        }
    }
    throw std::logic_error("no residue makes (a*u1 + u2)/V integral");
}

std::vector<Cone> spanning_fan(const LatticePolygon& p) {
    if (!is_ldp(p)) throw std::invalid_argument("polygon is not LDP");
    std::vector<Cone> fan;
    std::size_t vc = p.vertices.size();
    fan.reserve(vc);
    for (std::size_t i = 0; i < vc; ++i) {
        fan.push_back(cone_params(p.vertices[i], p.vertices[(i + 1) % vc]));
    }
    return fan;
}

std::vector<LatticePoint> parallelogram_points(const Cone& c) {
    std::vector<LatticePoint> pts;
    for (Int i = 0; i < c.V; ++i) {
        pts.push_back(scaled_combination(mod_floor(i * c.a, c.V), c.u1, i, c.u2, c.V));
    }
    return pts;
}

namespace detail {

std::vector<LatticePoint> sail_chain_hull(const Cone& c) {
    std::vector<LatticePoint> pts = triangle_points_nonzero(c.u1, c.u2);
    std::vector<LatticePoint> hull = convex_hull(pts);
    std::vector<LatticePoint> chain;
    if (hull.size() <= 2) {
        // Everything sits on the segment from u2 to u1.
        chain = std::move(pts);
        LatticePoint dir = c.u1 - c.u2;
        std::sort(chain.begin(), chain.end(), [&](const LatticePoint& a, const LatticePoint& b) {
            return dot(a - c.u2, dir) < dot(b - c.u2, dir);
        });
        return chain;
    }
    // The CCW walk of the hull from u2 reaches u1 along the side facing the
    // origin; lattice points interior to the outer edge [u1, u2] are not
    // hull vertices and are never visited.
    std::size_t n = hull.size();
    std::size_t iu2 = n, iu1 = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (hull[i] == c.u2) iu2 = i;
        if (hull[i] == c.u1) iu1 = i;
    }
    if (iu2 == n || iu1 == n) throw std::logic_error("cone generators missing from sail hull");
    chain.push_back(c.u2);
    for (std::size_t i = iu2; i != iu1;) {
        std::size_t j = (i + 1) % n;
        append_segment_points(chain, hull[i], hull[j]);
        i = j;
    }
    return chain;
}

std::vector<LatticePoint> sail_chain_recursive(const Cone& c) {
    // Walk down to a unimodular cone; each step keeps u2 and shrinks V.
    // 2a < V undoes operation I (u1 -> u1 - w), otherwise operation II
    // (u1 -> w). Rebuilding the chain inverts the steps: operation I
    // replaced the chain endpoint, operation II appended one.
    std::vector<std::pair<LatticePoint, bool>> steps;  // (u1 of the cone, was case I)
    Cone cur = c;
    while (cur.V > 1) {
        bool case_one = 2 * cur.a < cur.V;
        steps.emplace_back(cur.u1, case_one);
        if (case_one) {
            cur = make_cone(cur.u1 - cur.w, cur.u2, Int(cur.V - cur.a), cur.a);
        } else {
            cur = make_cone(cur.w, cur.u2, cur.a, Int(2 * cur.a - cur.V));
        }
    }
    std::vector<LatticePoint> chain{cur.u2, cur.u1};
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (it->second) {
            chain.back() = it->first;
        } else {
            chain.push_back(it->first);
        }
    }
    return chain;
}

}  // namespace detail

Sail sail_of(const Cone& c) {
    std::vector<LatticePoint> chain = (c.V <= kSailHullThreshold)
                                          ? detail::sail_chain_hull(c)
                                          : detail::sail_chain_recursive(c);
    check_chain(chain, c);
    Sail sail;
    sail.boundary = std::move(chain);
    sail.m_sigma = edge_functional(c.u1, c.u2);
    sail.functionals.reserve(sail.boundary.size() - 1);
    for (std::size_t i = 1; i < sail.boundary.size(); ++i) {
        RationalPoint f = edge_functional(sail.boundary[i - 1], sail.boundary[i]);
        if (!is_integer(f.x) || !is_integer(f.y)) {
            throw std::logic_error("sail edge functional is not integral");
        }
        sail.functionals.push_back({f.x.get_num(), f.y.get_num()});
    }
    return sail;
}

Int sail_complement_volume(const Cone& c) { return sail_complement_volume(c, sail_of(c)); }

Int sail_complement_volume(const Cone&, const Sail& s) {
    const std::vector<LatticePoint>& b = s.boundary;
    Int sum = 0;
    std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i) {
        sum += det2(b[i], b[(i + 1) % n]);
    }
    return sum;
}

CompleteUnimodularFan refined_fan(const LatticePolygon& p) {
    std::vector<Cone> fan = spanning_fan(p);
    CompleteUnimodularFan result;
    for (const Cone& c : fan) {
        Sail s = sail_of(c);
        // Chain runs u2 -> u1 (clockwise); emit it reversed, dropping u2,
        // which opens the next edge's chain.
        for (std::size_t i = s.boundary.size(); i-- > 1;) {
            result.rays.push_back(s.boundary[i]);
        }
    }
    std::size_t n = result.rays.size();
    int wraps = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const LatticePoint& v = result.rays[j];
        const LatticePoint& next = result.rays[(j + 1) % n];
        if (det2(v, next) != 1) throw std::logic_error("refined fan is not unimodular");
        if (!angle_less(v, next)) ++wraps;
        LatticePoint sum = result.rays[(j + n - 1) % n] + next;
        Int a = (v.x != 0) ? Int(sum.x / v.x) : Int(sum.y / v.y);
        if (a * v.x != sum.x || a * v.y != sum.y) {
            throw std::logic_error("neighbor sum is not a multiple of the ray");
        }
        result.a_values.push_back(a);
    }
    if (wraps != 1) throw std::logic_error("refined fan does not cover the plane once");
    return result;
}

}  // namespace ldp
