#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace ldp {

// Exact arithmetic kernel. Integers are arbitrary precision; rationals are
// kept canonical (lowest terms, positive denominator), so equality is
// structural and serialization is unambiguous. Floating point is not used
// anywhere in this project.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// mpz `%` truncates toward zero; these round toward minus infinity.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Greatest integer not exceeding x.
inline Int floor_rat(const Rat& x) { return floor_div(x.get_num(), x.get_den()); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// "p/q" in lowest terms, plain "p" when the denominator is 1.
inline std::string to_string(const Rat& x) { return x.get_str(); }
inline std::string to_string(const Int& x) { return x.get_str(); }

inline Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace ldp
