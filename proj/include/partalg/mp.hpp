#ifndef PARTALG_MP_HPP
#define PARTALG_MP_HPP

#include <gmpxx.h>

#include <string>

namespace partalg {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline std::string dec_string(const Int& v) { return v.get_str(); }

// Rationals serialize as "p" or "p/q".
inline std::string dec_string(const Rat& v) { return v.get_str(); }

inline bool is_integer(const Rat& v) { return v.get_den() == 1; }

Rat parse_rational(const std::string& text);  // accepts "p", "p/q", throws DomainError

}  // namespace partalg

#endif
