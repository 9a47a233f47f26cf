#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ldp/polygon.hpp"
#include "test_util.hpp"

#include <random>

using namespace ldp;
using testutil::mk;
using testutil::poly;

TEST_CASE("polygon_from_points canonicalizes") {
    LatticePolygon t = testutil::sample_triangle();
    CHECK(t.vertices == std::vector<LatticePoint>{mk(-1, 2), mk(0, -1), mk(3, 2)});

    // duplicates and edge midpoints are dropped
    LatticePolygon square = polygon_from_points(
        {mk(0, 0), mk(1, 0), mk(0, 1), mk(1, 1), mk(1, 0), mk(0, 0)});
    CHECK(square.vertices == std::vector<LatticePoint>{mk(0, 0), mk(0, 1), mk(1, 1), mk(1, 0)});

    // interior points are dropped
    LatticePolygon tri = polygon_from_points({mk(2, 0), mk(-2, 0), mk(0, 1), mk(0, 0)});
    CHECK(tri.vertices.size() == 3);
    CHECK(locate(tri, mk(0, 0)) == Position::Interior);

    CHECK_THROWS_AS((void)polygon_from_points({mk(0, 0), mk(1, 1), mk(2, 2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)polygon_from_points({mk(0, 0), mk(1, 1)}), std::invalid_argument);
}

TEST_CASE("vertex order is independent of input order") {
    LatticePolygon a = poly({{0, -1}, {3, 2}, {-1, 2}});
    LatticePolygon b = poly({{3, 2}, {-1, 2}, {0, -1}});
    LatticePolygon c = poly({{-1, 2}, {3, 2}, {0, -1}});
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("is_ldp") {
    CHECK(is_ldp(testutil::sample_triangle()));
    CHECK(is_ldp(poly({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}})));
    CHECK_FALSE(is_ldp(poly({{2, 0}, {0, 2}, {-1, -1}})));       // (2,0) not primitive
    CHECK_FALSE(is_ldp(poly({{0, 1}, {1, 1}, {1, 0}, {0, 0}})));  // origin on boundary
    CHECK_FALSE(is_ldp(poly({{1, 1}, {2, 1}, {1, 2}})));          // origin outside
}

TEST_CASE("dual of the sample triangle") {
    RationalPolygon d = dual(testutil::sample_triangle());
    REQUIRE(d.vertices.size() == 3);
    CHECK(d.vertices[0] == RationalPoint{Rat(-1), Rat(1)});
    CHECK(d.vertices[1] == RationalPoint{Rat(0), testutil::rq("-1/2")});
    CHECK(d.vertices[2] == RationalPoint{Rat(3), Rat(1)});
}

TEST_CASE("dual of the square is the cross-polytope") {
    RationalPolygon d = dual(poly({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
    LatticePolygon cross = poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    REQUIRE(is_lattice(d));
    CHECK(to_lattice(d) == cross);
    // every vertex constraint <m, v> >= -1 holds with equality on each edge
    for (const RationalPoint& m : d.vertices) {
        for (const LatticePoint& v : cross.vertices) {
            CHECK(dot(m, v) >= -1);
        }
    }
}

TEST_CASE("dual requires the origin strictly inside") {
    CHECK_THROWS_AS((void)dual(poly({{1, 1}, {2, 1}, {1, 2}})), std::invalid_argument);
}

TEST_CASE("biduality") {
    for (const LatticePolygon& p :
         {testutil::sample_triangle(), poly({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}),
          poly({{1, 0}, {0, 1}, {-1, -1}}), poly({{2, 1}, {-1, 2}, {-1, -3}})}) {
        CHECK(dual(dual(p)) == to_rational(p));
    }
}

TEST_CASE("normalized volume") {
    CHECK(normalized_volume(testutil::sample_triangle()) == 12);
    CHECK(normalized_volume(dual(testutil::sample_triangle())) == 6);
    // translation invariance of the shoelace value
    CHECK(normalized_volume(poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}})) == 2);
    CHECK(normalized_volume(poly({{7, -3}, {8, -3}, {8, -2}, {7, -2}})) == 2);
}

TEST_CASE("lattice point enumeration") {
    std::vector<LatticePoint> pts = lattice_points(testutil::sample_triangle());
    // nvol 12, 8 boundary points, hence 3 interior by Pick: 11 in total
    CHECK(pts.size() == 11);
    for (const LatticePoint& expect : {mk(0, 0), mk(0, 1), mk(1, 1)}) {
        CHECK(std::find(pts.begin(), pts.end(), expect) != pts.end());
    }
    CHECK(std::is_sorted(pts.begin(), pts.end(),
                         [](const LatticePoint& a, const LatticePoint& b) { return lex_less(a, b); }));

    CHECK(lattice_points(poly({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}})).size() == 9);
    CHECK(lattice_points(poly({{0, 0}, {1, 0}, {0, 1}})).size() == 3);
}

TEST_CASE("Pick consistency on random polygons") {
    std::mt19937_64 eng(2024);
    int done = 0;
    while (done < 50) {
        std::vector<LatticePoint> pts;
        for (int i = 0; i < 6; ++i) pts.push_back(testutil::random_point(eng, 7));
        LatticePolygon p;
        try {
            p = polygon_from_points(pts);
        } catch (const std::invalid_argument&) {
            continue;
        }
        Int nvol = normalized_volume(p);
        Int interior = Int(testutil::count_interior(p));
        Int boundary = Int(testutil::count_boundary(p));
        CHECK(nvol == 2 * interior + boundary - 2);
        ++done;
    }
}

TEST_CASE("kappa on the sample triangle") {
    LatticePolygon t = testutil::sample_triangle();
    CHECK(kappa(t, mk(0, 0)) == 0);
    CHECK(kappa(t, mk(3, 2)) == -1);
    CHECK(kappa(t, mk(0, 1)) == testutil::rq("-1/2"));
    CHECK(kappa(t, mk(1, 1)) == testutil::rq("-1/2"));
    CHECK(kappa(t, mk(0, -1)) == -1);
    CHECK(kappa(t, mk(1, 0)) == -1);  // boundary lattice point inside an edge
}

TEST_CASE("kappa is piecewise linear along rays") {
    LatticePolygon t = testutil::sample_triangle();
    std::mt19937_64 eng(5);
    for (int i = 0; i < 100; ++i) {
        LatticePoint n = testutil::random_point(eng, 6);
        if (is_zero(n)) continue;
        Rat base = kappa(t, n);
        for (long s = 2; s <= 4; ++s) {
            CHECK(kappa(t, Int(s) * n) == s * base);
        }
        CHECK(base <= 0);
        if (locate(t, n) != Position::Outside) {
            CHECK(base >= -1);
            CHECK((locate(t, n) == Position::Boundary) == (base == -1));
        } else {
            CHECK(base < -1);
        }
    }
}

TEST_CASE("is_reflexive") {
    CHECK(is_reflexive(poly({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}})));
    CHECK(is_reflexive(poly({{1, 0}, {0, 1}, {-1, -1}})));
    CHECK_FALSE(is_reflexive(testutil::sample_triangle()));
    CHECK_FALSE(is_reflexive(poly({{1, 1}, {2, 1}, {1, 2}})));  // origin outside
}

TEST_CASE("GL(2,Z) equivariance") {
    std::mt19937_64 eng(11);
    LatticePolygon t = testutil::sample_triangle();
    for (int i = 0; i < 50; ++i) {
        Mat2 m = testutil::random_sl2(eng);
        LatticePolygon image = apply_unimodular(m, t);
        CHECK(normalized_volume(image) == normalized_volume(t));

        // lattice points map to lattice points
        std::vector<LatticePoint> mapped;
        for (const LatticePoint& n : lattice_points(t)) mapped.push_back(apply(m, n));
        std::sort(mapped.begin(), mapped.end(),
                  [](const LatticePoint& a, const LatticePoint& b) { return lex_less(a, b); });
        CHECK(mapped == lattice_points(image));

        // kappa commutes with the map
        for (const LatticePoint& n : lattice_points(t)) {
            CHECK(kappa(image, apply(m, n)) == kappa(t, n));
        }

        // dual transforms by the inverse transpose
        Mat2 inv_t{m.d, -m.c, -m.b, m.a};  // (M^T)^{-1} for det 1
        std::vector<RationalPoint> dual_mapped;
        for (const RationalPoint& q : dual(t).vertices) {
            dual_mapped.push_back({Rat(inv_t.a * q.x + inv_t.b * q.y),
                                   Rat(inv_t.c * q.x + inv_t.d * q.y)});
        }
        CHECK(rational_polygon_from_cycle(dual_mapped) == dual(image));
    }
}
