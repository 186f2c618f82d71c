#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kummer {

// Arbitrary-precision nonnegative integer. All counts, bounds, orders and
// exponents in this library are Nat; comparisons are exact, never rounded.
using Nat = mpz_class;

inline Nat nat_pow(const Nat& base, unsigned long e) {
    Nat r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Nat nat_pow(unsigned long base, unsigned long e) {
    Nat r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline std::string nat_str(const Nat& v) { return v.get_str(); }

// Number of significant bits; 0 for v == 0.
inline std::size_t nat_bits(const Nat& v) {
    return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline bool nat_bit(const Nat& v, std::size_t i) {
    return mpz_tstbit(v.get_mpz_t(), i) != 0;
}

// Conversion to double rounds toward zero, so exact > double conclusions
// drawn from the result are conservative.
inline double nat_to_double(const Nat& v) { return v.get_d(); }

}  // namespace kummer
