#ifndef SYMPORB_FP_HPP_
#define SYMPORB_FP_HPP_

#include <cstdint>
#include <string>

#include "symporb/errors.hpp"

namespace symporb {

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Rank and characteristic shared by everything downstream.  p must be an
// odd prime; operations that use exp/ln additionally require p >= 2n so
// that all needed factorials are invertible.
struct Context {
    int n;
    long p;

    Context(int n_, long p_) : n(n_), p(p_) {
        if (n < 1) throw precondition_error("Context: rank must be >= 1");
        if (!is_prime(p) || p == 2)
            throw precondition_error("Context: p = " + std::to_string(p) + " is not an odd prime");
    }

    void require_exp_log() const {
        if (p < 2 * n)
            throw precondition_error("Context: p = " + std::to_string(p) +
                                     " < 2n = " + std::to_string(2 * n) +
                                     ", exp/ln are not defined");
    }

    int dim_u() const { return n * n; }
    friend bool operator==(const Context&, const Context&) = default;
};

// Arithmetic mod p on canonical representatives in [0, p).
inline long fp_norm(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}
inline long fp_add(long a, long b, long p) { return (a + b) % p; }
inline long fp_sub(long a, long b, long p) { return fp_norm(a - b, p); }
inline long fp_mul(long a, long b, long p) { return (a * b) % p; }

inline long fp_pow(long a, long e, long p) {
    long r = 1;
    a %= p;
    while (e > 0) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

inline long fp_inv(long a, long p) {
    a = fp_norm(a, p);
    if (a == 0) throw validation_error("fp_inv: zero is not invertible");
    return fp_pow(a, p - 2, p);
}

inline long fp_div(long a, long b, long p) { return fp_mul(fp_norm(a, p), fp_inv(b, p), p); }

// Quadratic character of F_p^x, extended by eta(0) = 0.
inline int eta(long c, long p) {
    c = fp_norm(c, p);
    if (c == 0) return 0;
    long e = fp_pow(c, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

}  // namespace symporb

#endif
