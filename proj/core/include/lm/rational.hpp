#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace lm {

using Int = mpz_class;
using Rational = mpq_class;

// Canonical rational: lowest terms, positive denominator, zero is 0/1.
// mpq canonicalization already enforces exactly this.
inline Rational rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational(long num, long den = 1) { return rational(Int(num), Int(den)); }

// Parses "p/q" or "p". Throws on malformed input or zero denominator.
inline Rational rational_from_string(std::string_view text) {
    Rational q;
    if (q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
    q.canonicalize();
    return q;
}

// Canonical text form: "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

inline Int int_from_string(std::string_view text) {
    Int n;
    if (n.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("integer: cannot parse '" + std::string(text) + "'");
    return n;
}

// n^e for e >= 0.
inline Int ipow(const Int& n, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), n.get_mpz_t(), e);
    return r;
}

inline Int pow2(unsigned long e) { return ipow(Int(2), e); }

}  // namespace lm
