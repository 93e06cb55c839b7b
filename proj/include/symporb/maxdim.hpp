#ifndef SYMPORB_MAXDIM_HPP_
#define SYMPORB_MAXDIM_HPP_

#include <cstdint>
#include <vector>

#include "symporb/characters.hpp"
#include "symporb/cyclo.hpp"
#include "symporb/errors.hpp"
#include "symporb/orbits.hpp"
#include "symporb/roots.hpp"

namespace symporb {

// D_reg: all long roots plus the adjacent sums e_i + e_{i+1}.
inline std::vector<Root> d_reg(int n) {
    if (n < 1) throw precondition_error("d_reg: rank must be >= 1");
    std::vector<Root> out;
    for (int i = 1; i <= n; ++i) out.push_back(Root::long_root(i));
    for (int i = 1; i < n; ++i) out.push_back(Root::sum(i, i + 1));
    return out;
}

// Maximal orthogonal subsets of D_reg.  These are exactly the
// monomer/domino tilings of {1..n}; there are Fibonacci(n+1) of them.
inline std::vector<RookPlacement> maximal_orthogonal_subsets_of_dreg(int n) {
    if (n < 1) throw precondition_error("maximal subsets: rank must be >= 1");
    if (n > 12) throw resource_error("maximal subsets: rank above 12 is not supported");
    std::vector<RookPlacement> out;
    std::vector<Root> cur;
    auto fill = [&](auto&& self, int from) -> void {
        if (from > n) {
            out.emplace_back(n, cur);
            return;
        }
        cur.push_back(Root::long_root(from));
        self(self, from + 1);
        cur.pop_back();
        if (from < n) {
            cur.push_back(Root::sum(from, from + 1));
            self(self, from + 2);
            cur.pop_back();
        }
    };
    fill(fill, 1);
    return out;
}

// Number of maximal-dimension coadjoint orbits, from the recurrence
// S_0 = 1, S_1 = p, S_n = v S_{n-1} + v S_{n-2} with v = p - 1.
inline long long count_maxdim(int n, long p) {
    if (n == 0) return 1;
    long long prev = 1, cur = p;
    const long long v = p - 1;
    for (int k = 2; k <= n; ++k) {
        long long nxt = v * cur + v * prev;
        prev = cur;
        cur = nxt;
    }
    return cur;
}

// (D, xi) with D a tiling and xi nonzero except possibly at 2e_n.
struct MaxDimDatum {
    RookPlacement D;
    RootMap<long> xi;
    LinearForm form;
};

inline MaxDimDatum make_maxdim_datum(const Context& ctx, const RookPlacement& D,
                                     const RootMap<long>& xi) {
    const Root relax = Root::long_root(ctx.n);
    for (const Root& b : D.roots()) {
        long v = fp_norm(xi.at(b), ctx.p);
        if (v == 0 && !(b == relax))
            throw validation_error("maxdim datum: zero coefficient at " + root_name(b));
    }
    LinearForm f(ctx);
    const auto phi = positive_roots(ctx.n);
    for (const Root& b : D.roots())
        for (size_t k = 0; k < phi.size(); ++k)
            if (phi[k] == b) f.set_coeff(k, xi.at(b));
    return MaxDimDatum{D, xi, f};
}

// The section of the maximal-dimension orbits: one canonical form per
// orbit, xi running over nonzero values with the 2e_n relaxation.
inline std::vector<MaxDimDatum> maxdim_section(const Context& ctx) {
    std::vector<MaxDimDatum> out;
    const Root relax = Root::long_root(ctx.n);
    for (const RookPlacement& D : maximal_orthogonal_subsets_of_dreg(ctx.n)) {
        const auto& roots = D.roots();
        std::vector<long> v(roots.size());
        auto emit = [&](auto&& self, size_t k) -> void {
            if (k == roots.size()) {
                RootMap<long> xi;
                for (size_t j = 0; j < roots.size(); ++j) xi[roots[j]] = v[j];
                out.push_back(make_maxdim_datum(ctx, D, xi));
                return;
            }
            long from = roots[k] == relax ? 0 : 1;
            for (long t = from; t < ctx.p; ++t) {
                v[k] = t;
                self(self, k + 1);
            }
        };
        emit(emit, 0);
    }
    return out;
}

inline long long maxdim_section_size(int n, long p) {
    long long total = 0;
    for (const RookPlacement& D : maximal_orthogonal_subsets_of_dreg(n)) {
        long long w = 1;
        for (const Root& b : D.roots()) w *= (b == Root::long_root(n)) ? p : (p - 1);
        total += w;
    }
    return total;
}

// D' = D plus the long roots 2e_i for every column i carrying a sum root.
inline std::vector<Root> d_prime(const RookPlacement& D) {
    std::vector<Root> out = D.roots();
    for (const Root& b : D.roots())
        if (b.kind == RootKind::Sum) out.push_back(Root::long_root(b.i));
    std::sort(out.begin(), out.end(), prec_prime);
    return out;
}

inline UMatrix x_of(const Context& ctx, const std::vector<Root>& roots,
                    const RootMap<long>& phi) {
    const auto all = positive_roots(ctx.n);
    std::vector<long> c(all.size(), 0);
    for (const Root& b : roots)
        for (size_t k = 0; k < all.size(); ++k)
            if (all[k] == b) c[k] = fp_norm(phi.at(b), ctx.p);
    return UMatrix::from_coeffs(ctx, c);
}

// S(D) = union over a in D of (a + Phi+), the roots reachable from D by
// adding one positive root; R(D) is its complement in Phi+.
inline RootSet upward_set(int n, const std::vector<Root>& D) {
    RootSet s;
    const auto phi = positive_roots(n);
    for (const Root& a : D)
        for (const Root& g : phi)
            if (auto sum = root_add(n, a, g)) s.insert(*sum);
    return s;
}

inline std::vector<Root> pinned_set(int n, const std::vector<Root>& D) {
    RootSet s = upward_set(n, D);
    std::vector<Root> r;
    for (const Root& a : positive_roots(n))
        if (!s.count(a)) r.push_back(a);
    return r;
}

// Minor Delta_beta^D: rows are the rows of the D-roots strictly up-left of
// beta (mirror order) plus row(beta); columns analogously.  A short root
// occupies two matrix positions, and a participating one must contribute
// both, or the minor fails to be constant under conjugation.
inline long minor_delta(const UMatrix& x, const Root& beta, const std::vector<Root>& D) {
    const Context& ctx = x.context();
    std::vector<int> rows{row(beta)}, cols{col(beta)};
    auto push_positions = [&](const Root& a) {
        rows.push_back(row(a));
        cols.push_back(col(a));
        switch (a.kind) {
            case RootKind::Sum:  // also e_{-i, j}
                rows.push_back(-a.i);
                cols.push_back(a.j);
                break;
            case RootKind::Diff:  // also e_{-i, -j}
                rows.push_back(-a.i);
                cols.push_back(-a.j);
                break;
            case RootKind::Long:
                break;
        }
    };
    for (const Root& a : D)
        if (mirror_less(row(a), row(beta)) && mirror_less(col(beta), col(a)))
            push_positions(a);
    auto mirror_cmp = [](int a, int b) { return mirror_less(a, b); };
    std::sort(rows.begin(), rows.end(), mirror_cmp);
    std::sort(cols.begin(), cols.end(), mirror_cmp);
    if (std::adjacent_find(rows.begin(), rows.end()) != rows.end() ||
        std::adjacent_find(cols.begin(), cols.end()) != cols.end())
        throw internal_error("minor_delta: degenerate row or column selection");
    FpMat sub(static_cast<int>(rows.size()), ctx.p);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            sub(static_cast<int>(r), static_cast<int>(c)) =
                x.matrix()(mat_index(ctx.n, rows[r]), mat_index(ctx.n, cols[c]));
    return det_mod_p(sub);
}

// k_D(phi) = { x : Delta_beta^D(x) = Delta_beta^D(x_D(phi)) for beta in R(D) },
// materialized by solving for the pinned coordinates in increasing
// prec_prime order; each equation is affine in its leading coordinate.
inline std::vector<std::uint64_t> k_variety(const Context& ctx, const std::vector<Root>& Dstar,
                                            const RootMap<long>& phi,
                                            std::uint64_t cap = kDefaultOrbitCap) {
    const auto all = positive_roots(ctx.n);
    const UMatrix ref = x_of(ctx, Dstar, phi);
    RootSet free_set = upward_set(ctx.n, Dstar);
    std::vector<size_t> free_idx;
    std::vector<long> targets(all.size(), 0);
    for (size_t k = 0; k < all.size(); ++k) {
        if (free_set.count(all[k]))
            free_idx.push_back(k);
        else
            targets[k] = minor_delta(ref, all[k], Dstar);
    }
    const std::uint64_t count = checked_pow(ctx.p, static_cast<int>(free_idx.size()), cap);
    std::vector<std::uint64_t> out;
    out.reserve(count);
    std::vector<long> freev(free_idx.size(), 0);
    for (std::uint64_t it = 0; it < count; ++it) {
        std::vector<long> c(all.size(), 0);
        for (size_t k = 0; k < free_idx.size(); ++k) c[free_idx[k]] = freev[k];
        // pinned coordinates, smallest root first
        for (size_t k = 0; k < all.size(); ++k) {
            if (free_set.count(all[k])) continue;
            c[k] = 0;
            long base = minor_delta(UMatrix::from_coeffs(ctx, c), all[k], Dstar);
            c[k] = 1;
            long lead = fp_sub(minor_delta(UMatrix::from_coeffs(ctx, c), all[k], Dstar), base,
                               ctx.p);
            if (lead == 0)
                throw internal_error("k_variety: minor is not affine-invertible at " +
                                     root_name(all[k]));
            c[k] = fp_div(fp_sub(targets[k], base, ctx.p), lead, ctx.p);
        }
        out.push_back(encode_coeffs(ctx, c));
        for (size_t k = 0; k < freev.size(); ++k) {
            if (++freev[k] < ctx.p) break;
            freev[k] = 0;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct TCounters {
    int t = 0;
    int t0 = 0;
    int t1 = 0;
};

// Counting scheme of the character-value theorem.  D*_j(a) filters D* by
// kind (0 = long, 1 = adjacent sum) and prec_prime-smallness against a;
// t0 uses the starred sets throughout so that the Gauss-sum exponent
// matches the number of eta factors.
inline TCounters t_counters(const RookPlacement& D, const std::vector<Root>& Dstar) {
    auto star_count = [&](const Root& a, RootKind kind) {
        int c = 0;
        for (const Root& b : Dstar)
            if (b.kind == kind && prec_prime(b, a)) ++c;
        return c;
    };
    TCounters out;
    for (const Root& a : D.roots()) {
        int c0 = star_count(a, RootKind::Long);
        int c1 = star_count(a, RootKind::Sum);
        out.t += c0 + c1;
        if (a.kind == RootKind::Long) out.t0 += c0;
        if (a.kind == RootKind::Sum) out.t1 += c1;
    }
    return out;
}

// chi(K_{D*}(phi)) = q^(n(n-1)/2 - t - t1) G^t0
//                    prod_{a in D0, b in D*0(a)} eta(xi_a phi_b)
//                    prod_{a in D* cap D} theta(xi_a phi_a).
inline CycloNum char_value_closed_form(const Context& ctx, const MaxDimDatum& datum,
                                       const std::vector<Root>& Dstar,
                                       const RootMap<long>& phi) {
    const long p = ctx.p;
    TCounters tc = t_counters(datum.D, Dstar);
    int qexp = ctx.n * (ctx.n - 1) / 2 - tc.t - tc.t1;
    mpq_class qfactor(1);
    for (int k = 0; k < qexp; ++k) qfactor *= p;
    for (int k = 0; k > qexp; --k) qfactor /= p;
    CycloNum value(p, qfactor);
    CycloNum g = gauss_sum(p);
    for (int k = 0; k < tc.t0; ++k) value *= g;
    long sign = 1;
    for (const Root& a : datum.D.roots()) {
        if (a.kind != RootKind::Long) continue;
        for (const Root& b : Dstar)
            if (b.kind == RootKind::Long && prec_prime(b, a))
                sign *= eta(fp_mul(fp_norm(datum.xi.at(a), p), phi.at(b), p), p);
    }
    if (sign == 0) throw internal_error("char_value_closed_form: eta factor at zero");
    if (sign < 0) value = -value;
    for (const Root& a : Dstar) {
        if (!datum.D.contains(a)) continue;
        value *= theta(fp_mul(fp_norm(datum.xi.at(a), p), phi.at(a), p), p);
    }
    return value;
}

// One conjugacy class K_{D*}(phi) of the support decomposition.
struct SupportClass {
    std::vector<Root> Dstar;
    RootMap<long> phi;
    ConjClass cls;
};

// Every orthogonal rook placement D* inside D', with phi running over all
// maps D* -> F_p^x; classes are materialized through the adjoint BFS.
inline std::vector<SupportClass> support_classes(const OrbitEngine& eng,
                                                 const MaxDimDatum& datum,
                                                 std::uint64_t cap = kDefaultOrbitCap,
                                                 bool materialize = true) {
    const Context& ctx = eng.context();
    std::vector<Root> dp = d_prime(datum.D);
    std::vector<SupportClass> out;
    const size_t m = dp.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<Root> dstar;
        for (size_t k = 0; k < m; ++k)
            if (mask & (std::uint64_t{1} << k)) dstar.push_back(dp[k]);
        if (!is_orthogonal_placement(ctx.n, dstar)) continue;
        std::vector<long> v(dstar.size(), 1);
        auto emit = [&](auto&& self, size_t k) -> void {
            if (k == dstar.size()) {
                RootMap<long> phi;
                for (size_t j = 0; j < dstar.size(); ++j) phi[dstar[j]] = v[j];
                ConjClass cls =
                    eng.conjugacy_class_of(x_of(ctx, dstar, phi), cap, materialize);
                out.push_back(SupportClass{dstar, phi, std::move(cls)});
                return;
            }
            for (long t = 1; t < ctx.p; ++t) {
                v[k] = t;
                self(self, k + 1);
            }
        };
        emit(emit, 0);
    }
    return out;
}

}  // namespace symporb

#endif
