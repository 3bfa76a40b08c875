#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace toric::geom {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator, which the certificate serialization relies on.
// No floating point is used anywhere in the kernel.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int floor_int(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_int(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int factorial(unsigned k) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// Serialized as "p" or "p/q"; never as a decimal.
inline std::string to_string(const Rat& q) { return q.get_str(); }

// Accepts optionally signed "p" or "p/q" with q > 0 after canonicalization.
std::optional<Rat> parse_rat(const std::string& s);

} // namespace toric::geom
