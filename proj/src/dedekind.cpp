#include "ldp/dedekind.hpp"

#include <stdexcept>

namespace ldp {

namespace {

void check_pair(const Int& h, const Int& k) {
    if (k < 1) throw std::domain_error("dedekind sum needs k >= 1");
    if (gcd(h, k) != 1) throw std::domain_error("dedekind sum needs gcd(h, k) = 1");
}

// s(h, k) for 0 <= h < k, gcd(h, k) = 1.
Rat fast_reduced(Int h, Int k) {
    if (h == 0) return Rat(0);  // k == 1
    Rat rec = Rat(-1, 4) + make_rat(Int(h * h + k * k + 1), Int(12 * h * k));
    Int next = mod_floor(k, h);
    return Rat(rec - fast_reduced(std::move(next), std::move(h)));
}

}  // namespace

Rat sawtooth(const Rat& x) {
    if (is_integer(x)) return Rat(0);
    return Rat(x - floor_rat(x) - Rat(1, 2));
}

Rat dedekind_sum(const Int& h, const Int& k) {
    check_pair(h, k);
    // Over the common denominator 2k each nonzero factor is (2r - k)/(2k)
    // with r the residue of h*i resp. i mod k; the i = k term vanishes.
    // This keeps the whole sum in one integer accumulator.
    Int hr = mod_floor(h, k);
    Int r = 0;
    Int acc = 0;
    Int term = 0;
    for (Int i = 1; i < k; ++i) {
        r += hr;
        if (r >= k) r -= k;
        term = 2 * r - k;
        term *= 2 * i - k;
        acc += term;
    }
    return make_rat(acc, Int(4 * k * k));
}

Rat dedekind_sum_fast(const Int& h, const Int& k) {
    check_pair(h, k);
    return fast_reduced(mod_floor(h, k), k);
}

Rat cone_lhs_closed_form(const Int& V, const Int& a) {
    if (V < 1) throw std::domain_error("cone volume must be positive");
    if (V == 1) {
        if (a != 0) throw std::domain_error("unimodular cone carries a = 0");
        return Rat(0);
    }
    if (gcd(a, V) != 1) throw std::domain_error("cone residue must be coprime to volume");
    return Rat(make_rat(Int((V - 1) * (V - 2)), V) + 12 * dedekind_sum_fast(a, V));
}

}  // namespace ldp
