#pragma once

#include "ldp/numeric.hpp"

namespace ldp {

// Sawtooth function of period 1: x - [x] - 1/2 for non-integral x, 0 on
// integers. Odd, with values in (-1/2, 1/2).
Rat sawtooth(const Rat& x);

// Dedekind sum s(h, k) = sum_{i=1}^{k} ((h*i/k)) ((i/k)) for gcd(h, k) = 1,
// k >= 1, evaluated term by term.
Rat dedekind_sum(const Int& h, const Int& k);

// Same value as dedekind_sum, computed by Euclidean descent through the
// reciprocity law s(h,k) + s(k,h) = -1/4 + (h/k + 1/(hk) + k/h)/12 and
// periodicity s(h - mk, k) = s(h, k). O(log k) arithmetic steps.
Rat dedekind_sum_fast(const Int& h, const Int& k);

// Closed form of the cone left-hand side:
// 12 * sum (kappa(n)+1)^2 over interior lattice points of conv(0, u1, u2)
// equals (V-1)(V-2)/V + 12*s(a, V). Accepts (1, 0) and returns 0.
Rat cone_lhs_closed_form(const Int& V, const Int& a);

}  // namespace ldp
