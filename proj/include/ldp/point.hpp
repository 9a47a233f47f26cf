#pragma once

#include "ldp/numeric.hpp"

#include <stdexcept>

namespace ldp {

// Point of the lattice Z^2. The same type carries integral linear
// functionals on the dual side; the pairing between the two sides is dot().
struct LatticePoint {
    Int x{0}, y{0};

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Point of Q^2 (rational duals, edge functionals).
struct RationalPoint {
    Rat x{0}, y{0};

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

inline bool lex_less(const LatticePoint& a, const LatticePoint& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return a.y < b.y;
}

inline bool lex_less(const RationalPoint& a, const RationalPoint& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return a.y < b.y;
}

inline LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) { return {a.x + b.x, a.y + b.y}; }
inline LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) { return {a.x - b.x, a.y - b.y}; }
inline LatticePoint operator-(const LatticePoint& a) { return {-a.x, -a.y}; }
inline LatticePoint operator*(const Int& s, const LatticePoint& a) { return {s * a.x, s * a.y}; }

inline RationalPoint operator+(const RationalPoint& a, const RationalPoint& b) { return {a.x + b.x, a.y + b.y}; }
inline RationalPoint operator-(const RationalPoint& a, const RationalPoint& b) { return {a.x - b.x, a.y - b.y}; }
inline RationalPoint operator*(const Rat& s, const RationalPoint& a) { return {s * a.x, s * a.y}; }

inline RationalPoint to_rational(const LatticePoint& p) { return {Rat(p.x), Rat(p.y)}; }

inline Int det2(const LatticePoint& a, const LatticePoint& b) { return Int(a.x * b.y - a.y * b.x); }
inline Rat det2(const RationalPoint& a, const RationalPoint& b) { return Rat(a.x * b.y - a.y * b.x); }

inline Int dot(const LatticePoint& a, const LatticePoint& b) { return Int(a.x * b.x + a.y * b.y); }
inline Rat dot(const RationalPoint& a, const RationalPoint& b) { return Rat(a.x * b.x + a.y * b.y); }
inline Rat dot(const RationalPoint& m, const LatticePoint& n) { return Rat(m.x * n.x + m.y * n.y); }

inline bool is_zero(const LatticePoint& p) { return p.x == 0 && p.y == 0; }

// True iff gcd(|x|, |y|) = 1. Primitivity of the zero vector is undefined.
inline bool is_primitive(const LatticePoint& v) {
    if (is_zero(v)) throw std::domain_error("zero vector has no primitivity");
    return gcd(v.x, v.y) == 1;
}

// v divided by gcd(|x|, |y|); a primitive positive multiple of v.
inline LatticePoint primitive_of(const LatticePoint& v) {
    if (is_zero(v)) throw std::domain_error("zero vector has no primitivity");
    Int g = gcd(v.x, v.y);
    return {v.x / g, v.y / g};
}

// Row-major 2x2 integer matrix [[a, b], [c, d]].
struct Mat2 {
    Int a{1}, b{0}, c{0}, d{1};

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Int det(const Mat2& m) { return Int(m.a * m.d - m.b * m.c); }

inline Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

inline LatticePoint apply(const Mat2& m, const LatticePoint& p) {
    return {m.a * p.x + m.b * p.y, m.c * p.x + m.d * p.y};
}

inline LatticePoint apply_unimodular(const Mat2& m, const LatticePoint& p) {
    Int d = det(m);
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
    return apply(m, p);
}

// Inverse of the matrix with columns (p, q); requires det2(p, q) = +-1.
inline Mat2 inverse_of_columns(const LatticePoint& p, const LatticePoint& q) {
    Int d = det2(p, q);
    if (d != 1 && d != -1) throw std::invalid_argument("columns do not form a lattice basis");
    Mat2 adj{Int(q.y), Int(-q.x), Int(-p.y), Int(p.x)};
    if (d == -1) {
        adj.a = -adj.a;
        adj.b = -adj.b;
        adj.c = -adj.c;
        adj.d = -adj.d;
    }
    return adj;
}

// The unique functional m with <m, s> = <m, e> = -1; defined whenever s and
// e are linearly independent.
inline RationalPoint edge_functional(const LatticePoint& s, const LatticePoint& e) {
    Int d = det2(s, e);
    if (d == 0) throw std::invalid_argument("edge functional of collinear generators");
    return {make_rat(s.y - e.y, d), make_rat(e.x - s.x, d)};
}

inline RationalPoint edge_functional(const RationalPoint& s, const RationalPoint& e) {
    Rat d = det2(s, e);
    if (d == 0) throw std::invalid_argument("edge functional of collinear generators");
    return {Rat((s.y - e.y) / d), Rat((e.x - s.x) / d)};
}

// Exact comparison of ray angles in [0, 2*pi), measured from the positive
// x-axis. Parallel rays compare equal.
inline bool angle_less(const LatticePoint& u, const LatticePoint& v) {
    auto lower = [](const LatticePoint& p) { return p.y < 0 || (p.y == 0 && p.x < 0); };
    bool lu = lower(u), lv = lower(v);
    if (lu != lv) return lv;
    return det2(u, v) > 0;
}

}  // namespace ldp
