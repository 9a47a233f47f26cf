#include "ldp/corpus.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ldp {

namespace {

// mt19937_64 plus rejection sampling; std::uniform_int_distribution is not
// reproducible across standard libraries, this is.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long uniform(long lo, long hi) {
        std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range + 1) % range;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v > limit);
        return lo + static_cast<long>(v % range);
    }

private:
    std::mt19937_64 eng_;
};

Int cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return det2(a - o, b - o);
}

LatticePoint sample_primitive(Rng& rng, int bound) {
    for (;;) {
        LatticePoint p{rng.uniform(-bound, bound), rng.uniform(-bound, bound)};
        if (!is_zero(p) && is_primitive(p)) return p;
    }
}

// True if some nonzero lattice point lies strictly inside the hull of pts.
bool has_nonzero_interior_point(const std::vector<LatticePoint>& pts) {
    std::vector<LatticePoint> hull = convex_hull(pts);
    if (hull.size() < 3) return false;
    LatticePolygon poly{hull};
    for (const LatticePoint& n : lattice_points(poly)) {
        if (!is_zero(n) && locate(poly, n) == Position::Interior) return true;
    }
    return false;
}

// Lattice points strictly inside p.
std::vector<LatticePoint> interior_points(const LatticePolygon& p) {
    std::vector<LatticePoint> result;
    for (const LatticePoint& n : lattice_points(p)) {
        if (locate(p, n) == Position::Interior) result.push_back(n);
    }
    return result;
}

bool polygon_less(const LatticePolygon& a, const LatticePolygon& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        if (a.vertices[i] != b.vertices[i]) return lex_less(a.vertices[i], b.vertices[i]);
    }
    return false;
}

// Depth-first enumeration of strictly convex CCW vertex cycles whose
// lexicographically smallest vertex is fixed, over a fixed candidate set.
// Chains whose hull already traps a nonzero lattice point are cut off;
// closed cycles are kept when their only interior lattice point is the
// origin.
class ReflexiveSearch {
public:
    ReflexiveSearch(std::vector<LatticePoint> candidates, std::vector<LatticePolygon>& out)
        : candidates_(std::move(candidates)), out_(out) {}

    void run() {
        for (const LatticePoint& v0 : candidates_) {
            chain_ = {v0};
            extend();
        }
    }

private:
    void extend() {
        LatticePoint v0 = chain_.front();
        if (chain_.size() >= 3) try_close();
        for (const LatticePoint& q : candidates_) {
            if (!lex_less(v0, q)) continue;
            if (std::find(chain_.begin(), chain_.end(), q) != chain_.end()) continue;
            if (chain_.size() >= 2 &&
                cross(chain_[chain_.size() - 2], chain_.back(), q) <= 0) {
                continue;
            }
            chain_.push_back(q);
            if (!has_nonzero_interior_point(chain_)) extend();
            chain_.pop_back();
        }
    }

    void try_close() {
        std::size_t n = chain_.size();
        if (cross(chain_[n - 2], chain_[n - 1], chain_[0]) <= 0) return;
        if (cross(chain_[n - 1], chain_[0], chain_[1]) <= 0) return;
        int wraps = 0;
        for (std::size_t i = 0; i < n; ++i) {
            LatticePoint d1 = chain_[(i + 1) % n] - chain_[i];
            LatticePoint d2 = chain_[(i + 2) % n] - chain_[(i + 1) % n];
            if (!angle_less(d1, d2)) ++wraps;
        }
        if (wraps != 1) return;
        LatticePolygon poly{chain_};
        std::vector<LatticePoint> inner = interior_points(poly);
        if (inner.size() == 1 && is_zero(inner[0])) out_.push_back(poly);
    }

    std::vector<LatticePoint> candidates_;
    std::vector<LatticePoint> chain_;
    std::vector<LatticePolygon>& out_;
};

}  // namespace

LatticePolygon random_ldp(std::uint64_t seed, int coordinate_bound, int max_vertices) {
    if (coordinate_bound < 1) throw std::invalid_argument("coordinate bound must be positive");
    if (max_vertices < 3) throw std::invalid_argument("need at least three vertices");
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        long count = rng.uniform(3, max_vertices);
        std::vector<LatticePoint> pts;
        pts.reserve(static_cast<std::size_t>(count));
        for (long i = 0; i < count; ++i) pts.push_back(sample_primitive(rng, coordinate_bound));
        try {
            LatticePolygon poly = polygon_from_points(pts);
            if (contains_origin_interior(poly)) return poly;
        } catch (const std::invalid_argument&) {
            // degenerate sample, retry
        }
    }
    throw std::runtime_error("random_ldp: retry budget exhausted");
}

Cone random_cone(std::uint64_t seed, int max_v) {
    if (max_v < 1) throw std::invalid_argument("max volume must be positive");
    Rng rng(seed);
    long vl = rng.uniform(1, max_v);
    Int V = vl;
    Int a = 0;
    if (vl > 1) {
        long al;
        do {
            al = rng.uniform(1, vl - 1);
        } while (gcd(Int(al), V) != 1);
        a = al;
    }
    LatticePoint u1{1, 0};
    LatticePoint u2{mod_floor(Int(-a), V), V};
    // Scramble by a short word in the standard SL(2,Z) generators.
    Mat2 rot{0, -1, 1, 0};
    Mat2 rot_inv{0, 1, -1, 0};
    Mat2 shear{1, 1, 0, 1};
    Mat2 shear_inv{1, -1, 0, 1};
    const Mat2 gens[] = {rot, rot_inv, shear, shear_inv};
    long word = rng.uniform(0, 4);
    Mat2 m;
    for (long i = 0; i < word; ++i) m = m * gens[rng.uniform(0, 3)];
    return cone_params(apply(m, u1), apply(m, u2));
}

LatticePolygon canonical_form(const LatticePolygon& p) {
    CompleteUnimodularFan fan = refined_fan(p);
    std::size_t n = fan.rays.size();
    bool have_best = false;
    LatticePolygon best;
    for (std::size_t j = 0; j < n; ++j) {
        const LatticePoint& r = fan.rays[j];
        const LatticePoint& s = fan.rays[(j + 1) % n];
        for (const Mat2& m : {inverse_of_columns(r, s), inverse_of_columns(s, r)}) {
            LatticePolygon image = apply_unimodular(m, p);
            if (!have_best || polygon_less(image, best)) {
                best = std::move(image);
                have_best = true;
            }
        }
    }
    return best;
}

std::vector<LatticePolygon> reflexive_catalogue() {
    constexpr int kBox = 3;
    std::vector<LatticePoint> candidates;
    for (int x = -kBox; x <= kBox; ++x) {
        for (int y = -kBox; y <= kBox; ++y) {
            LatticePoint p{x, y};
            // A polygon whose only interior lattice point is the origin has
            // only primitive nonzero lattice points.
            if (!is_zero(p) && is_primitive(p)) candidates.push_back(p);
        }
    }
    std::vector<LatticePolygon> found;
    ReflexiveSearch(std::move(candidates), found).run();

    std::vector<LatticePolygon> classes;
    for (const LatticePolygon& poly : found) {
        LatticePolygon canon = canonical_form(poly);
        bool known = std::any_of(classes.begin(), classes.end(),
                                 [&](const LatticePolygon& c) { return c == canon; });
        if (!known) classes.push_back(std::move(canon));
    }
    std::sort(classes.begin(), classes.end(), polygon_less);
    return classes;
}

}  // namespace ldp
