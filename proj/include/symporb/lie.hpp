#ifndef SYMPORB_LIE_HPP_
#define SYMPORB_LIE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "symporb/errors.hpp"
#include "symporb/fp.hpp"
#include "symporb/roots.hpp"

namespace symporb {

// Dense square matrix over F_p; entries are canonical representatives.
class FpMat {
  public:
    FpMat() : dim_(0), p_(0) {}
    FpMat(int dim, long p) : dim_(dim), p_(p), a_(static_cast<size_t>(dim) * dim, 0) {}

    static FpMat identity(int dim, long p) {
        FpMat m(dim, p);
        for (int k = 0; k < dim; ++k) m(k, k) = 1;
        return m;
    }

    int dim() const { return dim_; }
    long p() const { return p_; }

    long& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    long operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

    FpMat& operator+=(const FpMat& o) {
        for (size_t k = 0; k < a_.size(); ++k) a_[k] = fp_add(a_[k], o.a_[k], p_);
        return *this;
    }
    FpMat& operator-=(const FpMat& o) {
        for (size_t k = 0; k < a_.size(); ++k) a_[k] = fp_sub(a_[k], o.a_[k], p_);
        return *this;
    }
    friend FpMat operator+(FpMat a, const FpMat& b) { return a += b; }
    friend FpMat operator-(FpMat a, const FpMat& b) { return a -= b; }

    FpMat& scale(long t) {
        t = fp_norm(t, p_);
        for (auto& x : a_) x = x * t % p_;
        return *this;
    }

    friend FpMat operator*(const FpMat& a, const FpMat& b) {
        FpMat r(a.dim_, a.p_);
        for (int i = 0; i < a.dim_; ++i)
            for (int k = 0; k < a.dim_; ++k) {
                long v = a(i, k);
                if (!v) continue;
                for (int j = 0; j < a.dim_; ++j) {
                    if (!b(k, j)) continue;
                    r(i, j) = (r(i, j) + v * b(k, j)) % a.p_;
                }
            }
        return r;
    }

    FpMat transpose() const {
        FpMat r(dim_, p_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    long trace_of_product(const FpMat& o) const {
        long t = 0;
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) t = (t + (*this)(i, k) * o(k, i)) % p_;
        return t;
    }

    bool is_zero() const {
        for (long x : a_)
            if (x) return false;
        return true;
    }

    void add_scaled_row(int dst, int src, long factor) {
        factor = fp_norm(factor, p_);
        if (!factor) return;
        long* d = a_.data() + static_cast<size_t>(dst) * dim_;
        const long* s = a_.data() + static_cast<size_t>(src) * dim_;
        for (int j = 0; j < dim_; ++j) d[j] = (d[j] + factor * s[j]) % p_;
    }

    void add_scaled_col(int dst, int src, long factor) {
        factor = fp_norm(factor, p_);
        if (!factor) return;
        for (int i = 0; i < dim_; ++i)
            (*this)(i, dst) = ((*this)(i, dst) + factor * (*this)(i, src)) % p_;
    }

    friend bool operator==(const FpMat&, const FpMat&) = default;

  private:
    int dim_;
    long p_;
    std::vector<long> a_;
};

inline long det_mod_p(FpMat m) {
    const long p = m.p();
    long det = 1;
    int dim = m.dim();
    for (int c = 0, r = 0; c < dim && r < dim; ++c) {
        int piv = -1;
        for (int k = r; k < dim; ++k)
            if (m(k, c)) {
                piv = k;
                break;
            }
        if (piv < 0) return 0;
        if (piv != r) {
            for (int j = 0; j < dim; ++j) std::swap(m(piv, j), m(r, j));
            det = fp_norm(-det, p);
        }
        det = det * m(r, c) % p;
        long inv = fp_inv(m(r, c), p);
        for (int k = r + 1; k < dim; ++k) {
            if (!m(k, c)) continue;
            long f = m(k, c) * inv % p;
            for (int j = c; j < dim; ++j) m(k, j) = fp_norm(m(k, j) - f * m(r, j), p);
        }
        ++r;
    }
    return det;
}

inline int rank_mod_p(FpMat m) {
    const long p = m.p();
    int dim = m.dim();
    int rank = 0;
    for (int c = 0, r = 0; c < dim && r < dim; ++c) {
        int piv = -1;
        for (int k = r; k < dim; ++k)
            if (m(k, c)) {
                piv = k;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < dim; ++j) std::swap(m(piv, j), m(r, j));
        long inv = fp_inv(m(r, c), p);
        for (int k = r + 1; k < dim; ++k) {
            if (!m(k, c)) continue;
            long f = m(k, c) * inv % p;
            for (int j = c; j < dim; ++j) m(k, j) = fp_norm(m(k, j) - f * m(r, j), p);
        }
        ++r;
        ++rank;
    }
    return rank;
}

// Rows and columns of the 2n x 2n realization carry the indices
// 1, ..., n, -n, ..., -1; this maps them to machine indices 0..2n-1,
// order-preservingly for the mirror order.
inline int mat_index(int n, int idx) { return idx > 0 ? idx - 1 : 2 * n + idx; }

// e_{2e_i} = e_{-i,i};  e_{e_i-e_j} = e_{j,i} - e_{-i,-j};
// e_{e_i+e_j} = e_{-j,i} + e_{-i,j}.
inline FpMat basis_matrix(const Context& ctx, const Root& a) {
    FpMat m(2 * ctx.n, ctx.p);
    const int n = ctx.n;
    switch (a.kind) {
        case RootKind::Long:
            m(mat_index(n, -a.i), mat_index(n, a.i)) = 1;
            break;
        case RootKind::Diff:
            m(mat_index(n, a.j), mat_index(n, a.i)) = 1;
            m(mat_index(n, -a.i), mat_index(n, -a.j)) = fp_norm(-1, ctx.p);
            break;
        case RootKind::Sum:
            m(mat_index(n, -a.j), mat_index(n, a.i)) = 1;
            m(mat_index(n, -a.i), mat_index(n, a.j)) = 1;
            break;
    }
    return m;
}

// Entry position that determines the coefficient of e_a in a u-matrix.
inline std::pair<int, int> primary_position(int n, const Root& a) {
    return {mat_index(n, row(a)), mat_index(n, col(a))};
}

// Element of u = u(C_n): a matrix in the span of the basis vectors e_a.
class UMatrix {
  public:
    UMatrix(const Context& ctx) : ctx_(ctx), m_(2 * ctx.n, ctx.p) {}

    // From coefficients over positive_roots(n) order.
    static UMatrix from_coeffs(const Context& ctx, const std::vector<long>& c) {
        const auto phi = positive_roots(ctx.n);
        if (c.size() != phi.size()) throw validation_error("UMatrix: coefficient count mismatch");
        UMatrix x(ctx);
        for (size_t k = 0; k < phi.size(); ++k) {
            if (fp_norm(c[k], ctx.p) == 0) continue;
            FpMat b = basis_matrix(ctx, phi[k]);
            b.scale(c[k]);
            x.m_ += b;
        }
        return x;
    }

    // From an arbitrary matrix; rejected if it is not in the span of the e_a.
    static UMatrix from_matrix(const Context& ctx, const FpMat& m) {
        UMatrix x(ctx);
        x.m_ = m;
        UMatrix rebuilt = from_coeffs(ctx, x.coeffs());
        if (!(rebuilt.m_ == m)) throw validation_error("UMatrix: matrix is not in u");
        return x;
    }

    const Context& context() const { return ctx_; }
    const FpMat& matrix() const { return m_; }

    long coeff(const Root& a) const {
        auto [r, c] = primary_position(ctx_.n, a);
        return m_(r, c);
    }
    std::vector<long> coeffs() const {
        const auto phi = positive_roots(ctx_.n);
        std::vector<long> out(phi.size());
        for (size_t k = 0; k < phi.size(); ++k) out[k] = coeff(phi[k]);
        return out;
    }

    bool is_zero() const { return m_.is_zero(); }

    friend UMatrix operator+(const UMatrix& a, const UMatrix& b) {
        a.match(b);
        UMatrix r(a.ctx_);
        r.m_ = a.m_ + b.m_;
        return r;
    }
    friend UMatrix operator-(const UMatrix& a, const UMatrix& b) {
        a.match(b);
        UMatrix r(a.ctx_);
        r.m_ = a.m_ - b.m_;
        return r;
    }
    UMatrix& scale(long t) {
        m_.scale(t);
        return *this;
    }

    friend bool operator==(const UMatrix& a, const UMatrix& b) {
        return a.ctx_ == b.ctx_ && a.m_ == b.m_;
    }

    static UMatrix raw(const Context& ctx, FpMat m) {
        UMatrix x(ctx);
        x.m_ = std::move(m);
        return x;
    }

  private:
    void match(const UMatrix& o) const {
        if (!(ctx_ == o.ctx_)) throw validation_error("UMatrix: mixed contexts");
    }

    Context ctx_;
    FpMat m_;
};

inline UMatrix bracket(const UMatrix& x, const UMatrix& y) {
    return UMatrix::raw(x.context(), x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

// Element of U = exp(u): a unipotent matrix.
class GroupElement {
  public:
    explicit GroupElement(const Context& ctx)
        : ctx_(ctx), m_(FpMat::identity(2 * ctx.n, ctx.p)) {}
    GroupElement(const Context& ctx, FpMat m) : ctx_(ctx), m_(std::move(m)) {}

    const Context& context() const { return ctx_; }
    const FpMat& matrix() const { return m_; }

    bool is_identity() const { return m_ == FpMat::identity(2 * ctx_.n, ctx_.p); }

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
        if (!(a.ctx_ == b.ctx_)) throw validation_error("GroupElement: mixed contexts");
        return GroupElement(a.ctx_, a.m_ * b.m_);
    }

    GroupElement inverse() const {
        // (1 + N)^-1 = sum (-N)^k, N nilpotent of index <= 2n.
        const FpMat one = FpMat::identity(2 * ctx_.n, ctx_.p);
        FpMat nmat = m_ - one;
        FpMat acc = one, pw = one;
        for (int k = 1; k < 2 * ctx_.n; ++k) {
            pw = pw * nmat;
            if (pw.is_zero()) break;
            FpMat term = pw;
            if (k % 2) term.scale(-1);
            acc += term;
        }
        return GroupElement(ctx_, acc);
    }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.ctx_ == b.ctx_ && a.m_ == b.m_;
    }

  private:
    Context ctx_;
    FpMat m_;
};

// Truncated exponential sum_{i<2n} x^i / i!; a bijection u -> U for p >= 2n.
inline GroupElement exp_u(const UMatrix& x) {
    const Context& ctx = x.context();
    ctx.require_exp_log();
    const int m = 2 * ctx.n;
    FpMat acc = FpMat::identity(m, ctx.p);
    FpMat pw = FpMat::identity(m, ctx.p);
    long fact_inv = 1;
    for (int i = 1; i < m; ++i) {
        pw = pw * x.matrix();
        if (pw.is_zero()) break;
        fact_inv = fact_inv * fp_inv(i, ctx.p) % ctx.p;
        FpMat term = pw;
        term.scale(fact_inv);
        acc += term;
    }
    return GroupElement(ctx, acc);
}

inline UMatrix log_u(const GroupElement& g) {
    const Context& ctx = g.context();
    ctx.require_exp_log();
    const int m = 2 * ctx.n;
    FpMat nmat = g.matrix() - FpMat::identity(m, ctx.p);
    FpMat acc(m, ctx.p);
    FpMat pw = FpMat::identity(m, ctx.p);
    for (int i = 1; i < m; ++i) {
        pw = pw * nmat;
        if (pw.is_zero()) break;
        FpMat term = pw;
        term.scale(i % 2 ? fp_inv(i, ctx.p) : fp_norm(-fp_inv(i, ctx.p), ctx.p));
        acc += term;
    }
    return UMatrix::from_matrix(ctx, acc);
}

// Internal positions and values of the (at most two) entries of e_a.
struct RootEntry {
    int row, col;
    long val;  // +1 or -1 before reduction
};

inline int root_entries(const Context& ctx, const Root& a, RootEntry out[2]) {
    const int n = ctx.n;
    switch (a.kind) {
        case RootKind::Long:
            out[0] = {mat_index(n, -a.i), mat_index(n, a.i), 1};
            return 1;
        case RootKind::Diff:
            out[0] = {mat_index(n, a.j), mat_index(n, a.i), 1};
            out[1] = {mat_index(n, -a.i), mat_index(n, -a.j), ctx.p - 1};
            return 2;
        default:
            out[0] = {mat_index(n, -a.j), mat_index(n, a.i), 1};
            out[1] = {mat_index(n, -a.i), mat_index(n, a.j), 1};
            return 2;
    }
}

// One-parameter root subgroup element; e_a^2 = 0, so this is exact.
inline GroupElement x_root(const Context& ctx, const Root& a, long t) {
    FpMat m = basis_matrix(ctx, a);
    m.scale(t);
    return GroupElement(ctx, FpMat::identity(2 * ctx.n, ctx.p) + m);
}

// In-place m <- x_a(t) m and m <- m x_a(t); row and column operations,
// since the two entries of e_a never alias.
inline void left_mul_xroot(const Context& ctx, FpMat& m, const Root& a, long t) {
    RootEntry e[2];
    int k = root_entries(ctx, a, e);
    for (int i = 0; i < k; ++i) m.add_scaled_row(e[i].row, e[i].col, t * e[i].val);
}

inline void right_mul_xroot(const Context& ctx, FpMat& m, const Root& a, long t) {
    RootEntry e[2];
    int k = root_entries(ctx, a, e);
    for (int i = 0; i < k; ++i) m.add_scaled_col(e[i].col, e[i].row, t * e[i].val);
}

// Element of u*, stored as coordinates over the dual basis e*_a,
// in positive_roots(n) order.
class LinearForm {
  public:
    explicit LinearForm(const Context& ctx)
        : ctx_(ctx), c_(static_cast<size_t>(ctx.dim_u()), 0) {}
    LinearForm(const Context& ctx, std::vector<long> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
        if (c_.size() != static_cast<size_t>(ctx.dim_u()))
            throw validation_error("LinearForm: coefficient count mismatch");
        for (auto& v : c_) v = fp_norm(v, ctx.p);
    }

    const Context& context() const { return ctx_; }
    const std::vector<long>& coeffs() const { return c_; }
    long coeff(size_t idx) const { return c_[idx]; }
    void set_coeff(size_t idx, long v) { c_[idx] = fp_norm(v, ctx_.p); }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](long v) { return v == 0; });
    }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

  private:
    Context ctx_;
    std::vector<long> c_;
};

// Shared per-context tables: the root list, index lookups, bracket
// coefficient tables.  Everything downstream evaluates through this.
class RootTable {
  public:
    explicit RootTable(const Context& ctx) : ctx_(ctx), roots_(positive_roots(ctx.n)) {
        const size_t nn = roots_.size();
        basis_.reserve(nn);
        for (const Root& a : roots_) basis_.push_back(basis_matrix(ctx_, a));
        // bracket_coeff_[a][b]: ([e_a, e_b] as coefficient vector), sparse as
        // (index, value) with at most one entry since root sums are unique.
        bracket_root_.assign(nn, std::vector<int>(nn, -1));
        bracket_val_.assign(nn, std::vector<long>(nn, 0));
        for (size_t a = 0; a < nn; ++a)
            for (size_t b = 0; b < nn; ++b) {
                if (a == b) continue;
                auto sum = root_add(ctx_.n, roots_[a], roots_[b]);
                if (!sum) continue;
                FpMat br = basis_[a] * basis_[b] - basis_[b] * basis_[a];
                int si = index_of(*sum);
                auto [r, c] = primary_position(ctx_.n, *sum);
                bracket_root_[a][b] = si;
                bracket_val_[a][b] = br(r, c);
            }
    }

    const Context& context() const { return ctx_; }
    const std::vector<Root>& roots() const { return roots_; }
    size_t size() const { return roots_.size(); }
    const FpMat& basis(size_t k) const { return basis_[k]; }

    int index_of(const Root& a) const {
        for (size_t k = 0; k < roots_.size(); ++k)
            if (roots_[k] == a) return static_cast<int>(k);
        throw validation_error("RootTable: root " + root_name(a) + " is not in C_" +
                               std::to_string(ctx_.n));
    }

    // f([e_a, e_b]) for index pairs, through the bracket table.
    long form_on_bracket(const LinearForm& f, size_t a, size_t b) const {
        int s = bracket_root_[a][b];
        if (s < 0) return 0;
        return fp_mul(bracket_val_[a][b], f.coeff(static_cast<size_t>(s)), ctx_.p);
    }

    // Gram matrix B_f[a][b] = f([e_a, e_b]) over all positive-root pairs.
    FpMat gram(const LinearForm& f) const {
        FpMat g(static_cast<int>(size()), ctx_.p);
        for (size_t a = 0; a < size(); ++a)
            for (size_t b = 0; b < size(); ++b)
                g(static_cast<int>(a), static_cast<int>(b)) = form_on_bracket(f, a, b);
        return g;
    }

  private:
    Context ctx_;
    std::vector<Root> roots_;
    std::vector<FpMat> basis_;
    std::vector<std::vector<int>> bracket_root_;
    std::vector<std::vector<long>> bracket_val_;
};

// f(x) through the dual-basis coordinates.
inline long eval_form(const LinearForm& f, const UMatrix& x) {
    if (!(f.context() == x.context())) throw validation_error("eval_form: mixed contexts");
    const auto phi = positive_roots(f.context().n);
    long acc = 0;
    for (size_t k = 0; k < phi.size(); ++k) acc = (acc + f.coeff(k) * x.coeff(phi[k])) % f.context().p;
    return acc;
}

// The same value through the trace pairing, with F = sum c_a e*_a where
// e*_a = e_a^T for long roots and e_a^T / 2 otherwise.
inline long eval_form_by_trace(const LinearForm& f, const UMatrix& x) {
    const Context& ctx = f.context();
    const auto phi = positive_roots(ctx.n);
    FpMat dual(2 * ctx.n, ctx.p);
    const long half = fp_inv(2, ctx.p);
    for (size_t k = 0; k < phi.size(); ++k) {
        if (!f.coeff(k)) continue;
        FpMat t = basis_matrix(ctx, phi[k]).transpose();
        t.scale(phi[k].kind == RootKind::Long ? f.coeff(k) : fp_mul(f.coeff(k), half, ctx.p));
        dual += t;
    }
    return dual.trace_of_product(x.matrix());
}

// Coadjoint action, basis-free contract: (g.f)(y) = f(g^-1 y g).
inline LinearForm coadjoint_act(const GroupElement& g, const LinearForm& f) {
    const Context& ctx = f.context();
    if (!(g.context() == ctx)) throw validation_error("coadjoint_act: mixed contexts");
    const auto phi = positive_roots(ctx.n);
    GroupElement gi = g.inverse();
    LinearForm out(ctx);
    for (size_t k = 0; k < phi.size(); ++k) {
        FpMat conj = gi.matrix() * basis_matrix(ctx, phi[k]) * g.matrix();
        UMatrix y = UMatrix::from_matrix(ctx, conj);
        out.set_coeff(k, eval_form(f, y));
    }
    return out;
}

// Second route to the same action: conjugate the dual matrix and read the
// e*-coordinates back off through the trace pairing.  Kept as a
// cross-check, since the projection convention is easy to get wrong.
inline LinearForm coadjoint_act_by_projection(const GroupElement& g, const LinearForm& f) {
    const Context& ctx = f.context();
    const auto phi = positive_roots(ctx.n);
    FpMat dual(2 * ctx.n, ctx.p);
    const long half = fp_inv(2, ctx.p);
    for (size_t k = 0; k < phi.size(); ++k) {
        if (!f.coeff(k)) continue;
        FpMat t = basis_matrix(ctx, phi[k]).transpose();
        t.scale(phi[k].kind == RootKind::Long ? f.coeff(k) : fp_mul(f.coeff(k), half, ctx.p));
        dual += t;
    }
    FpMat moved = g.matrix() * dual * g.inverse().matrix();
    LinearForm out(ctx);
    for (size_t k = 0; k < phi.size(); ++k)
        out.set_coeff(k, moved.trace_of_product(basis_matrix(ctx, phi[k])));
    return out;
}

inline UMatrix adjoint_act(const GroupElement& g, const UMatrix& x) {
    if (!(g.context() == x.context())) throw validation_error("adjoint_act: mixed contexts");
    return UMatrix::from_matrix(x.context(), g.matrix() * x.matrix() * g.inverse().matrix());
}

// Canonical coordinates of the second kind: g = prod x_{g_k}(t_k) with the
// roots taken in increasing prec_prime order.  Works because a positive
// root never decomposes as a sum of prec_prime-larger ones, so each
// coefficient can be read off the matrix once all smaller roots are
// stripped.  `subset` restricts the peeled roots; the residual is returned.
struct PeelResult {
    std::vector<std::pair<size_t, long>> coords;  // (root index, coefficient)
    GroupElement residual;
};

inline PeelResult peel_coordinates(const RootTable& tab, const GroupElement& g,
                                   const std::vector<size_t>& subset) {
    const Context& ctx = tab.context();
    std::vector<size_t> order = subset;
    std::sort(order.begin(), order.end());  // root list is prec_prime-ascending
    FpMat residual = g.matrix();
    std::vector<std::pair<size_t, long>> coords;
    coords.reserve(order.size());
    for (size_t idx : order) {
        auto [r, c] = primary_position(ctx.n, tab.roots()[idx]);
        long t = residual(r, c);
        if (t) left_mul_xroot(ctx, residual, tab.roots()[idx], fp_norm(-t, ctx.p));
        coords.emplace_back(idx, t);
    }
    return PeelResult{std::move(coords), GroupElement(ctx, std::move(residual))};
}

inline std::vector<long> normal_coordinates(const RootTable& tab, const GroupElement& g) {
    std::vector<size_t> all(tab.size());
    std::iota(all.begin(), all.end(), size_t{0});
    PeelResult r = peel_coordinates(tab, g, all);
    if (!r.residual.is_identity())
        throw internal_error("normal_coordinates: element is not in U");
    std::vector<long> out(tab.size(), 0);
    for (auto [idx, t] : r.coords) out[idx] = t;
    return out;
}

// Is g in exp(span of the given roots)?  The root set must be closed under
// root addition (a subalgebra), which makes the peel conclusive.
inline bool in_subgroup(const RootTable& tab, const GroupElement& g,
                        const std::vector<size_t>& subset) {
    return peel_coordinates(tab, g, subset).residual.is_identity();
}

// Unique factorization g = a * b with a in exp(span A), b in exp(span B),
// where span A is an ideal of span(A + B).  Returns nullopt when g is not
// in the product set.
inline std::optional<std::pair<GroupElement, GroupElement>> semidirect_project(
    const RootTable& tab, const GroupElement& g, const std::vector<size_t>& a_roots,
    const std::vector<size_t>& b_roots) {
    const Context& ctx = tab.context();
    std::vector<size_t> all = a_roots;
    all.insert(all.end(), b_roots.begin(), b_roots.end());
    std::sort(all.begin(), all.end());
    PeelResult r = peel_coordinates(tab, g, all);
    if (!r.residual.is_identity()) return std::nullopt;
    // Dropping the A-factors of the mixed normal form is exactly the
    // homomorphism G -> B, since A is normal.
    FpMat bm = FpMat::identity(2 * ctx.n, ctx.p);
    for (auto [idx, t] : r.coords)
        if (t && std::find(b_roots.begin(), b_roots.end(), idx) != b_roots.end())
            right_mul_xroot(ctx, bm, tab.roots()[idx], t);
    FpMat binv = FpMat::identity(2 * ctx.n, ctx.p);
    for (auto it = r.coords.rbegin(); it != r.coords.rend(); ++it)
        if (it->second &&
            std::find(b_roots.begin(), b_roots.end(), it->first) != b_roots.end())
            right_mul_xroot(ctx, binv, tab.roots()[it->first], fp_norm(-it->second, ctx.p));
    GroupElement a(ctx, g.matrix() * binv);
    GroupElement b(ctx, std::move(bm));
    if (!in_subgroup(tab, a, a_roots))
        throw internal_error("semidirect_project: A-part escaped span(A); A is not an ideal here");
    return std::make_pair(a, b);
}

}  // namespace symporb

#endif
