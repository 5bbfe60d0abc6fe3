#pragma once

#include <gmpxx.h>

#include <string>

namespace torsec {

using Rat = mpq_class;
using Int = mpz_class;

// Exact rational num/den, canonicalized.
inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Largest integer <= q.
inline Int rat_floor(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Canonical "num/den" form; plain "num" when the denominator is 1.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Accepts "num" or "num/den"; throws std::invalid_argument on garbage.
Rat rat_from_string(const std::string& s);

}  // namespace torsec
