#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace hypercross {

// All geometry in this library is exact. Coordinates, LP tableaus and Gale
// vectors are arbitrary-precision rationals; nothing is ever rounded.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline int sgn(const Rat& x) { return x.sign(); }
inline int sgn(const Int& x) { return x.sign(); }

// Builds a rational in lowest terms with positive denominator. The raw
// mpq constructors neither canonicalize nor accept negative denominators.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    Rat r(num, den);
    mpq_canonicalize(r.backend().data());
    return r;
}

// Parses "a" or "a/b" (optional leading minus on either part).
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
    }
}

inline std::string rat_str(const Rat& x) { return x.str(); }

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return r;
}

// binomial() for counts known to fit a machine word.
inline long long binomial_ll(int n, int k) {
    return static_cast<long long>(binomial(n, k));
}

}  // namespace hypercross
