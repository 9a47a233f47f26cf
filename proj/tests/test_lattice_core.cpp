#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ldp/point.hpp"
#include "test_util.hpp"

#include <random>

using namespace ldp;
using testutil::mk;

TEST_CASE("det2 on pinned pairs") {
    CHECK(det2(mk(1, 0), mk(0, 1)) == 1);
    CHECK(det2(mk(3, 2), mk(-1, 2)) == 8);
    CHECK(det2(mk(3, 1), mk(-1, 1)) == 4);
}

TEST_CASE("det2 is antisymmetric and bilinear") {
    std::mt19937_64 eng(42);
    for (int i = 0; i < 200; ++i) {
        LatticePoint a = testutil::random_point(eng, 50);
        LatticePoint b = testutil::random_point(eng, 50);
        LatticePoint c = testutil::random_point(eng, 50);
        CHECK(det2(a, b) == -det2(b, a));
        CHECK(det2(a + c, b) == det2(a, b) + det2(c, b));
        Int s = static_cast<long>(eng() % 19) - 9;
        CHECK(det2(s * a, b) == s * det2(a, b));
    }
}

TEST_CASE("det2 scales with the determinant under linear maps") {
    std::mt19937_64 eng(7);
    for (int i = 0; i < 100; ++i) {
        Mat2 m = testutil::random_sl2(eng);
        LatticePoint a = testutil::random_point(eng, 30);
        LatticePoint b = testutil::random_point(eng, 30);
        CHECK(det2(apply(m, a), apply(m, b)) == det(m) * det2(a, b));
    }
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(mk(3, 2)));
    CHECK_FALSE(is_primitive(mk(2, 4)));
    CHECK(is_primitive(mk(0, -1)));
    CHECK_THROWS_AS((void)is_primitive(mk(0, 0)), std::domain_error);
}

TEST_CASE("primitive_of") {
    CHECK(primitive_of(mk(2, 4)) == mk(1, 2));
    CHECK(primitive_of(mk(0, -3)) == mk(0, -1));
    CHECK(primitive_of(mk(3, 2)) == mk(3, 2));
    CHECK_THROWS_AS((void)primitive_of(mk(0, 0)), std::domain_error);

    std::mt19937_64 eng(3);
    for (int i = 0; i < 200; ++i) {
        LatticePoint v = testutil::random_point(eng, 40);
        if (is_zero(v)) continue;
        LatticePoint p = primitive_of(v);
        CHECK(is_primitive(p));
        CHECK(primitive_of(p) == p);
        // p is a positive multiple of v
        CHECK(det2(p, v) == 0);
        CHECK(dot(p, v) > 0);
    }
}

TEST_CASE("apply_unimodular") {
    Mat2 identity;
    CHECK(apply_unimodular(identity, mk(5, 7)) == mk(5, 7));
    Mat2 shear{1, 1, 0, 1};
    CHECK(apply_unimodular(shear, mk(1, 0)) == mk(1, 0));
    Mat2 rot{0, -1, 1, 0};
    CHECK(apply_unimodular(rot, mk(3, 2)) == mk(-2, 3));
    Mat2 doubling{2, 0, 0, 1};
    CHECK_THROWS_AS((void)apply_unimodular(doubling, mk(1, 1)), std::invalid_argument);
}

TEST_CASE("rational serialization is p/q in lowest terms") {
    CHECK(to_string(make_rat(1, 2)) == "1/2");
    CHECK(to_string(make_rat(2, 4)) == "1/2");
    CHECK(to_string(make_rat(3, -6)) == "-1/2");
    CHECK(to_string(make_rat(8, 4)) == "2");
    CHECK(to_string(Rat(0)) == "0");
    CHECK(parse_rat("9/12") == make_rat(3, 4));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK_THROWS_AS((void)make_rat(1, 0), std::domain_error);
    CHECK_THROWS_AS((void)parse_rat("x/2"), std::invalid_argument);
}

TEST_CASE("floor helpers") {
    CHECK(floor_div(Int(-7), Int(2)) == -4);
    CHECK(mod_floor(Int(-7), Int(2)) == 1);
    CHECK(floor_rat(make_rat(9, 8)) == 1);
    CHECK(floor_rat(make_rat(-9, 8)) == -2);
}

TEST_CASE("angle comparison orders rays counterclockwise from the x-axis") {
    std::vector<LatticePoint> ordered = {mk(1, 0),  mk(2, 1),  mk(0, 1), mk(-1, 1),
                                         mk(-1, 0), mk(-1, -2), mk(0, -1), mk(1, -1)};
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        for (std::size_t j = 0; j < ordered.size(); ++j) {
            CHECK(angle_less(ordered[i], ordered[j]) == (i < j));
        }
    }
    CHECK_FALSE(angle_less(mk(1, 1), mk(2, 2)));
    CHECK_FALSE(angle_less(mk(2, 2), mk(1, 1)));
}
