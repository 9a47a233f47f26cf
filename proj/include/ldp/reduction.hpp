#pragma once

#include "ldp/fan.hpp"

#include <vector>

namespace ldp {

// A non-unimodular cone arises from a smaller cone by one of two
// operations, read off the last three sail chain points u1, w, v through
// u1 + v = lambda * w:
//   I  (lambda > 2): u1 = u1_hat + w_hat, so V = V_hat + a_hat, a = a_hat,
//                    w = w_hat;
//   II (lambda = 2): u1 = 2*u1_hat - w_hat, so V = 2*V_hat - a_hat,
//                    a = V_hat, w = u1_hat.
enum class ReductionCase { I, II };

struct ReductionStep {
    ReductionCase case_tag = ReductionCase::I;
    Cone before, after;
    Int lambda{0};
    Rat delta_lhs, delta_rhs;
};

// One volume-reducing step; requires V > 1.
ReductionStep reduce_once(const Cone& c);

// Repeats reduce_once until the cone is unimodular. Empty for unimodular
// input; V strictly decreases along the chain.
std::vector<ReductionStep> reduction_chain(const Cone& c);

// Change of the cone LHS across one step, as a closed formula in the
// reduced parameters:
//   I:  (a_hat+1) * (1 - (a_hat+1) / (V_hat * (V_hat+a_hat)))
//   II: (V_hat-a_hat-1) * (1 + (V_hat-a_hat-1) / (V_hat * (2*V_hat-a_hat)))
Rat delta_lhs_formula(ReductionCase c, const Int& v_hat, const Int& a_hat);

// Change of the two RHS summands across one step.
//   I:  volume part a_hat,          triangles 1 - (a_hat+1)^2 / (V_hat*(V_hat+a_hat))
//   II: volume part V_hat-a_hat-1,  triangles (V_hat-a_hat-1)^2 / (V_hat*(2*V_hat-a_hat))
Rat delta_rhs_volume_part(ReductionCase c, const Int& v_hat, const Int& a_hat);
Rat delta_rhs_triangle_part(ReductionCase c, const Int& v_hat, const Int& a_hat);

struct StepCheck {
    Rat lhs_formula;      // delta_lhs_formula
    Rat lhs_closed_diff;  // difference of the closed forms
    Rat rhs_parts;        // volume part + triangle part
    Rat rhs_direct_diff;  // difference of directly evaluated cone RHS
    bool parameter_laws_ok = false;
    bool ok = false;
};

// Recomputes the step deltas by two independent routes per side and checks
// the case laws on (V, a, w).
StepCheck verify_step(const ReductionStep& s);

}  // namespace ldp
