#pragma once

#include "ldp/fan.hpp"
#include "ldp/polygon.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace ldp::testutil {

inline LatticePoint mk(long x, long y) { return {Int(x), Int(y)}; }

inline LatticePolygon poly(std::initializer_list<std::pair<long, long>> pts) {
    std::vector<LatticePoint> v;
    for (const auto& [x, y] : pts) v.push_back(mk(x, y));
    return polygon_from_points(v);
}

// conv((0,-1), (3,2), (-1,2)): the running LDP triangle of the test suite,
// with nvol 12 and dual nvol 6.
inline LatticePolygon sample_triangle() { return poly({{0, -1}, {3, 2}, {-1, 2}}); }

inline Rat rq(const char* s) { return parse_rat(s); }

// Nonzero lattice points of conv(0, u1, u2), by exhaustive scan.
inline std::vector<LatticePoint> oracle_triangle_points(const LatticePoint& u1,
                                                        const LatticePoint& u2) {
    auto side = [](const LatticePoint& a, const LatticePoint& b, const LatticePoint& p) {
        return det2(b - a, p - a);
    };
    LatticePoint zero{};
    long xmin = std::min({0L, u1.x.get_si(), u2.x.get_si()});
    long xmax = std::max({0L, u1.x.get_si(), u2.x.get_si()});
    long ymin = std::min({0L, u1.y.get_si(), u2.y.get_si()});
    long ymax = std::max({0L, u1.y.get_si(), u2.y.get_si()});
    std::vector<LatticePoint> pts;
    for (long x = xmin; x <= xmax; ++x) {
        for (long y = ymin; y <= ymax; ++y) {
            LatticePoint p = mk(x, y);
            if (is_zero(p)) continue;
            if (side(zero, u1, p) >= 0 && side(u1, u2, p) >= 0 && side(u2, zero, p) >= 0) {
                pts.push_back(p);
            }
        }
    }
    return pts;
}

// Independent route to the sail chain: gift-wrap the boundary of the hull
// of the nonzero triangle points from u2 toward u1, keeping every point on
// the left of each step and preferring the nearest point on ties, which
// walks through collinear chain points.
inline std::vector<LatticePoint> oracle_sail_chain(const Cone& c) {
    std::vector<LatticePoint> pts = oracle_triangle_points(c.u1, c.u2);
    std::vector<LatticePoint> chain{c.u2};
    LatticePoint cur = c.u2;
    while (!(cur == c.u1)) {
        bool have = false;
        LatticePoint best;
        for (const LatticePoint& cand : pts) {
            if (std::find(chain.begin(), chain.end(), cand) != chain.end()) continue;
            if (!have) {
                best = cand;
                have = true;
                continue;
            }
            Int turn = det2(best - cur, cand - cur);
            if (turn < 0) {
                best = cand;
            } else if (turn == 0) {
                LatticePoint db = best - cur, dc = cand - cur;
                if (dot(dc, db) > 0 && dot(dc, dc) < dot(db, db)) best = cand;
            }
        }
        chain.push_back(best);
        cur = best;
    }
    return chain;
}

// Lattice points of the half-open parallelogram {s*u1 + t*u2 : 0 <= s,t < 1},
// by exhaustive scan with exact barycentric bounds.
inline std::vector<LatticePoint> oracle_parallelogram_points(const Cone& c) {
    long xs[4] = {0, c.u1.x.get_si(), c.u2.x.get_si(), (c.u1.x + c.u2.x).get_si()};
    long ys[4] = {0, c.u1.y.get_si(), c.u2.y.get_si(), (c.u1.y + c.u2.y).get_si()};
    std::vector<LatticePoint> pts;
    for (long x = *std::min_element(xs, xs + 4); x <= *std::max_element(xs, xs + 4); ++x) {
        for (long y = *std::min_element(ys, ys + 4); y <= *std::max_element(ys, ys + 4); ++y) {
            LatticePoint p = mk(x, y);
            Int beta = det2(c.u1, p);   // V * t
            Int alpha = det2(p, c.u2);  // V * s
            if (alpha >= 0 && alpha < c.V && beta >= 0 && beta < c.V) pts.push_back(p);
        }
    }
    return pts;
}

// Normal-form cone with the given invariants: ((1,0), (-a mod V, V)).
inline Cone normal_form_cone(long v, long a) {
    return cone_params(mk(1, 0), {mod_floor(Int(-a), Int(v)), Int(v)});
}

// Deterministic SL(2,Z) element, a short word in rotation and shear.
inline Mat2 random_sl2(std::mt19937_64& eng, int max_word = 5) {
    Mat2 rot{0, -1, 1, 0};
    Mat2 rot_inv{0, 1, -1, 0};
    Mat2 shear{1, 1, 0, 1};
    Mat2 shear_inv{1, -1, 0, 1};
    const Mat2 gens[] = {rot, rot_inv, shear, shear_inv};
    Mat2 m;
    auto word = eng() % static_cast<std::uint64_t>(max_word + 1);
    for (std::uint64_t i = 0; i < word; ++i) m = m * gens[eng() % 4];
    return m;
}

inline LatticePoint random_point(std::mt19937_64& eng, long bound) {
    auto range = static_cast<std::uint64_t>(2 * bound + 1);
    return mk(static_cast<long>(eng() % range) - bound, static_cast<long>(eng() % range) - bound);
}

inline std::size_t count_interior(const LatticePolygon& p) {
    std::size_t n = 0;
    for (const LatticePoint& q : lattice_points(p)) {
        if (locate(p, q) == Position::Interior) ++n;
    }
    return n;
}

inline std::size_t count_boundary(const LatticePolygon& p) {
    std::size_t n = 0;
    for (const LatticePoint& q : lattice_points(p)) {
        if (locate(p, q) == Position::Boundary) ++n;
    }
    return n;
}

}  // namespace ldp::testutil
