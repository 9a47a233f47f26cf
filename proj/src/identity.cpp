#include "ldp/identity.hpp"

#include "ldp/dedekind.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldp {

namespace {

Int cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return det2(a - o, b - o);
}

// Functional of a unimodular refined-fan cone; integral by construction.
LatticePoint unimodular_cone_functional(const LatticePoint& r1, const LatticePoint& r2) {
    RationalPoint f = edge_functional(r1, r2);
    if (!is_integer(f.x) || !is_integer(f.y)) {
        throw std::logic_error("unimodular cone functional is not integral");
    }
    return {f.x.get_num(), f.y.get_num()};
}

}  // namespace

Rat cone_lhs_direct(const Cone& c) {
    LatticePoint zero{};
    RationalPoint m = edge_functional(c.u1, c.u2);
    Int xmin = std::min(Int(0), std::min(c.u1.x, c.u2.x));
    Int xmax = std::max(Int(0), std::max(c.u1.x, c.u2.x));
    Int ymin = std::min(Int(0), std::min(c.u1.y, c.u2.y));
    Int ymax = std::max(Int(0), std::max(c.u1.y, c.u2.y));
    Rat sum = 0;
    for (Int x = xmin; x <= xmax; ++x) {
        for (Int y = ymin; y <= ymax; ++y) {
            LatticePoint n{x, y};
            if (cross(zero, c.u1, n) > 0 && cross(c.u1, c.u2, n) > 0 && cross(c.u2, zero, n) > 0) {
                Rat t = dot(m, n) + 1;
                sum += t * t;
            }
        }
    }
    return Rat(12 * sum);
}

Rat sail_triangle_total(const Sail& s) {
    Rat total = 0;
    for (std::size_t i = 1; i < s.functionals.size(); ++i) {
        RationalPoint a = to_rational(s.functionals[i - 1]) - s.m_sigma;
        RationalPoint b = to_rational(s.functionals[i]) - s.m_sigma;
        total += abs(det2(a, b));
    }
    return total;
}

Rat cone_rhs(const Cone& c) {
    Sail s = sail_of(c);
    return Rat(sail_complement_volume(c, s) + sail_triangle_total(s));
}

ConeCheck verify_cone(const Cone& c) {
    ConeCheck check;
    check.cone = c;
    check.lhs_direct = cone_lhs_direct(c);
    check.lhs_closed = cone_lhs_closed_form(c.V, c.a);
    check.rhs = cone_rhs(c);
    check.ok = check.lhs_direct == check.lhs_closed && check.lhs_direct == check.rhs;
    return check;
}

Rat global_lhs(const LatticePolygon& p) {
    if (!is_ldp(p)) throw std::invalid_argument("polygon is not LDP");
    Rat sum = 0;
    for (const LatticePoint& n : lattice_points(p)) {
        Rat t = kappa(p, n) + 1;
        sum += t * t;
    }
    return Rat(12 * sum);
}

Rat global_rhs(const LatticePolygon& p) {
    if (!is_ldp(p)) throw std::invalid_argument("polygon is not LDP");
    return Rat(normalized_volume(p) + normalized_volume(dual(p)));
}

Int twelve_theorem_sum(const CompleteUnimodularFan& fan) {
    Int sum = 0;
    for (const Int& a : fan.a_values) sum += 3 - a;
    return sum;
}

DualChain dual_chain_sum(const LatticePolygon& p) {
    if (!is_ldp(p)) throw std::invalid_argument("polygon is not LDP");
    CompleteUnimodularFan fan = refined_fan(p);
    std::size_t n = fan.rays.size();
    std::vector<LatticePoint> functionals;
    functionals.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        functionals.push_back(unimodular_cone_functional(fan.rays[j], fan.rays[(j + 1) % n]));
    }
    DualChain chain;
    chain.dets.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Int d = det2(functionals[(j + n - 1) % n], functionals[j]);
        chain.total += d;
        chain.dets.push_back(std::move(d));
    }
    return chain;
}

DecompositionCheck verify_decomposition(const LatticePolygon& p) {
    if (!is_ldp(p)) throw std::invalid_argument("polygon is not LDP");
    DecompositionCheck check;
    check.dual_volume = normalized_volume(dual(p));
    check.triangle_total = 0;
    for (const Cone& c : spanning_fan(p)) {
        Sail s = sail_of(c);
        check.sails_volume += c.V - sail_complement_volume(c, s);
        check.triangle_total += sail_triangle_total(s);
    }
    check.ray_count = Int(refined_fan(p).rays.size());
    check.chain_total = dual_chain_sum(p).total;
    check.diff_identity_ok =
        Rat(check.dual_volume + check.sails_volume - check.triangle_total) == 12;
    check.dual_chain_identity_ok =
        Rat(check.dual_volume - check.triangle_total) == check.chain_total;
    check.sails_match_rays = check.sails_volume == check.ray_count;
    return check;
}

VerificationReport verify_polygon(const LatticePolygon& p, bool per_cone) {
    VerificationReport report;
    report.polygon = p;
    report.reflexive = is_reflexive(p);
    report.lhs = global_lhs(p);
    report.rhs = global_rhs(p);
    report.nvol = normalized_volume(p);
    report.nvol_dual = normalized_volume(dual(p));
    report.global_identity_ok = report.lhs == report.rhs;
    report.cone_identity_ok = true;
    for (const Cone& c : spanning_fan(p)) {
        ConeCheck check = verify_cone(c);
        report.cone_identity_ok = report.cone_identity_ok && check.ok;
        if (per_cone) report.cones.push_back(std::move(check));
    }
    report.twelve_sum = twelve_theorem_sum(refined_fan(p));
    report.twelve_ok = report.twelve_sum == 12;
    report.decomposition = verify_decomposition(p);
    report.dual_chain = dual_chain_sum(p);
    return report;
}

}  // namespace ldp
