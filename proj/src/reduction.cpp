#include "ldp/reduction.hpp"

#include "ldp/dedekind.hpp"
#include "ldp/identity.hpp"

#include <stdexcept>

namespace ldp {

namespace {

// Solves s = lambda * w for integral lambda; w is primitive and nonzero.
Int solve_multiple(const LatticePoint& s, const LatticePoint& w) {
    Int lambda = (w.x != 0) ? Int(s.x / w.x) : Int(s.y / w.y);
    if (lambda * w.x != s.x || lambda * w.y != s.y) {
        throw std::logic_error("chain points do not satisfy u1 + v = lambda * w");
    }
    return lambda;
}

}  // namespace

ReductionStep reduce_once(const Cone& c) {
    if (c.V <= 1) throw std::domain_error("already reduced");
    Sail s = sail_of(c);
    std::size_t k = s.boundary.size() - 1;  // >= 2 for V > 1
    const LatticePoint& u1 = s.boundary[k];
    const LatticePoint& w = s.boundary[k - 1];
    const LatticePoint& v = s.boundary[k - 2];
    if (w != c.w) throw std::logic_error("chain point before u1 differs from w");

    ReductionStep step;
    step.lambda = solve_multiple(u1 + v, w);
    if (step.lambda < 2) throw std::logic_error("lambda below 2");
    step.case_tag = (step.lambda > 2) ? ReductionCase::I : ReductionCase::II;
    step.before = c;
    step.after = cone_params((step.case_tag == ReductionCase::I) ? u1 - w : w, c.u2);
    step.delta_lhs = delta_lhs_formula(step.case_tag, step.after.V, step.after.a);
    step.delta_rhs = Rat(delta_rhs_volume_part(step.case_tag, step.after.V, step.after.a) +
                         delta_rhs_triangle_part(step.case_tag, step.after.V, step.after.a));
    return step;
}

std::vector<ReductionStep> reduction_chain(const Cone& c) {
    std::vector<ReductionStep> chain;
    Cone cur = c;
    while (cur.V > 1) {
        chain.push_back(reduce_once(cur));
        cur = chain.back().after;
    }
    return chain;
}

Rat delta_lhs_formula(ReductionCase c, const Int& v_hat, const Int& a_hat) {
    if (c == ReductionCase::I) {
        Int coef = a_hat + 1;
        return Rat(coef * (Rat(1) - make_rat(coef, Int(v_hat * (v_hat + a_hat)))));
    }
    Int coef = v_hat - a_hat - 1;
    return Rat(coef * (Rat(1) + make_rat(coef, Int(v_hat * (2 * v_hat - a_hat)))));
}

Rat delta_rhs_volume_part(ReductionCase c, const Int& v_hat, const Int& a_hat) {
    if (c == ReductionCase::I) return Rat(a_hat);
    return Rat(Int(v_hat - a_hat - 1));
}

Rat delta_rhs_triangle_part(ReductionCase c, const Int& v_hat, const Int& a_hat) {
    if (c == ReductionCase::I) {
        Int num = a_hat + 1;
        return Rat(Rat(1) - make_rat(Int(num * num), Int(v_hat * (v_hat + a_hat))));
    }
    Int num = v_hat - a_hat - 1;
    return make_rat(Int(num * num), Int(v_hat * (2 * v_hat - a_hat)));
}

StepCheck verify_step(const ReductionStep& s) {
    StepCheck check;
    check.lhs_formula = delta_lhs_formula(s.case_tag, s.after.V, s.after.a);
    check.lhs_closed_diff = Rat(cone_lhs_closed_form(s.before.V, s.before.a) -
                                cone_lhs_closed_form(s.after.V, s.after.a));
    check.rhs_parts = Rat(delta_rhs_volume_part(s.case_tag, s.after.V, s.after.a) +
                          delta_rhs_triangle_part(s.case_tag, s.after.V, s.after.a));
    check.rhs_direct_diff = Rat(cone_rhs(s.before) - cone_rhs(s.after));

    if (s.case_tag == ReductionCase::I) {
        check.parameter_laws_ok = s.before.V == s.after.V + s.after.a &&
                                  s.before.a == s.after.a && s.before.w == s.after.w;
    } else {
        check.parameter_laws_ok = s.before.V == 2 * s.after.V - s.after.a &&
                                  s.before.a == s.after.V && s.before.w == s.after.u1;
    }
    check.ok = check.parameter_laws_ok && check.lhs_formula == check.lhs_closed_diff &&
               check.lhs_formula == check.rhs_parts && check.lhs_formula == check.rhs_direct_diff;
    return check;
}

}  // namespace ldp
