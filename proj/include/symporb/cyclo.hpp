#ifndef SYMPORB_CYCLO_HPP_
#define SYMPORB_CYCLO_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

#include "symporb/errors.hpp"
#include "symporb/fp.hpp"

namespace symporb {

// Exact element of Q(zeta_p), stored as p-1 rational coordinates over the
// basis 1, zeta, ..., zeta^(p-2); zeta^(p-1) reduces via the minimal
// polynomial 1 + zeta + ... + zeta^(p-1) = 0.
class CycloNum {
  public:
    CycloNum() : p_(0) {}
    explicit CycloNum(long p) : p_(p), c_(static_cast<size_t>(p - 1)) {
        if (!is_prime(p) || p == 2) throw precondition_error("CycloNum: p must be an odd prime");
    }
    CycloNum(long p, const mpq_class& rational) : CycloNum(p) { c_[0] = rational; }

    static CycloNum zeta_power(long p, long k) {
        CycloNum z(p);
        k = fp_norm(k, p);
        if (k < p - 1) {
            z.c_[static_cast<size_t>(k)] = 1;
        } else {
            for (auto& q : z.c_) q = -1;
        }
        return z;
    }

    long p() const { return p_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& q : c_)
            if (q != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t k = 1; k < c_.size(); ++k)
            if (c_[k] != 0) return false;
        return true;
    }
    // Rational part; valid only when is_rational().
    mpq_class rational_value() const {
        if (!is_rational()) throw validation_error("CycloNum: value is not rational");
        return c_[0];
    }

    CycloNum& operator+=(const CycloNum& o) {
        match(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    CycloNum& operator-=(const CycloNum& o) {
        match(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator-(const CycloNum& a) {
        CycloNum r(a.p_);
        for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = -a.c_[k];
        return r;
    }

    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        a.match(b);
        const long p = a.p_;
        // convolve exponents mod p, then fold zeta^(p-1).
        std::vector<mpq_class> full(static_cast<size_t>(p), 0);
        for (size_t x = 0; x < a.c_.size(); ++x) {
            if (a.c_[x] == 0) continue;
            for (size_t y = 0; y < b.c_.size(); ++y) {
                if (b.c_[y] == 0) continue;
                full[(x + y) % static_cast<size_t>(p)] += a.c_[x] * b.c_[y];
            }
        }
        CycloNum r(p);
        const mpq_class& top = full[static_cast<size_t>(p - 1)];
        for (size_t k = 0; k + 1 < full.size(); ++k) r.c_[k] = full[k] - top;
        return r;
    }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

    CycloNum& scale(const mpq_class& q) {
        for (auto& x : c_) x *= q;
        return *this;
    }

    // Complex conjugation: zeta -> zeta^(p-1).
    CycloNum conj() const {
        std::vector<mpq_class> full(static_cast<size_t>(p_), 0);
        for (size_t k = 0; k < c_.size(); ++k)
            full[static_cast<size_t>(fp_norm(-static_cast<long>(k), p_))] = c_[k];
        CycloNum r(p_);
        const mpq_class& top = full[static_cast<size_t>(p_ - 1)];
        for (size_t k = 0; k + 1 < full.size(); ++k) r.c_[k] = full[k] - top;
        return r;
    }

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        if (a.p_ != b.p_)
            throw validation_error("CycloNum: comparing values from different fields");
        return a.c_ == b.c_;
    }

    std::string str() const {
        std::string s = "[";
        for (size_t k = 0; k < c_.size(); ++k) {
            if (k) s += ", ";
            s += c_[k].get_str();
        }
        return s + "]";
    }

  private:
    void match(const CycloNum& o) const {
        if (p_ != o.p_) throw validation_error("CycloNum: mixed cyclotomic fields");
    }

    long p_;
    std::vector<mpq_class> c_;
};

inline bool cyclo_eq(const CycloNum& a, const CycloNum& b) { return a == b; }

// The fixed nontrivial additive character theta(c) = zeta_p^c.
inline CycloNum theta(long c, long p) { return CycloNum::zeta_power(p, fp_norm(c, p)); }

// Gauss sum of the quadratic character against theta.
inline CycloNum gauss_sum(long p) {
    CycloNum g(p);
    for (long c = 1; c < p; ++c) {
        CycloNum t = theta(c, p);
        if (eta(c, p) == 1)
            g += t;
        else
            g -= t;
    }
    return g;
}

// zeta-power counting vector: an exact (and cheap) stand-in for sums of
// theta values.  counts[c] is the multiplicity of zeta^c.
inline CycloNum from_zeta_counts(long p, const std::vector<long>& counts,
                                 const mpq_class& scale = 1) {
    CycloNum r(p);
    for (long c = 0; c < p; ++c) {
        if (counts[static_cast<size_t>(c)] == 0) continue;
        CycloNum t = CycloNum::zeta_power(p, c);
        t.scale(mpq_class(counts[static_cast<size_t>(c)]));
        r += t;
    }
    r.scale(scale);
    return r;
}

}  // namespace symporb

#endif
