#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace mldeg {

using BigInt = mpz_class;
using BigRat = mpq_class;

// C(a,b), zero outside 0 <= b <= a.
inline BigInt binom(long a, long b) {
    if (a < 0) throw DomainError("binom: negative top argument " + std::to_string(a));
    if (b < 0 || b > a) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

inline BigInt pow2(long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

inline BigRat make_rat(const BigInt& p, const BigInt& q = 1) {
    BigRat r(p, q);
    r.canonicalize();
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// "p" for integers, "p/q" otherwise; q > 0 always.
inline std::string to_string(const BigRat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline BigRat parse_rational(const std::string& s) {
    BigRat r(s, 10);
    r.canonicalize();
    return r;
}

// Throws unless v is an integer; used wherever a rational route must land on Z.
inline BigInt require_integer(const BigRat& v, const char* what) {
    if (v.get_den() != 1) throw ConsistencyError(std::string(what) + ": expected an integer, got " + to_string(v));
    return v.get_num();
}

inline BigInt exact_quotient(const BigInt& a, const BigInt& b, const char* what) {
    if (b == 0 || a % b != 0)
        throw ConsistencyError(std::string(what) + ": " + a.get_str() + " is not divisible by " + b.get_str());
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace mldeg
