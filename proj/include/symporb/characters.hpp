#ifndef SYMPORB_CHARACTERS_HPP_
#define SYMPORB_CHARACTERS_HPP_

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "symporb/cyclo.hpp"
#include "symporb/errors.hpp"
#include "symporb/orbits.hpp"
#include "symporb/polarization.hpp"

namespace symporb {

struct ClassFunction {
    Context ctx;
    std::string method;
    std::function<CycloNum(const GroupElement&)> eval;

    CycloNum operator()(const GroupElement& g) const { return eval(g); }
};

inline ClassFunction trivial_character(const Context& ctx) {
    return ClassFunction{ctx, "trivial",
                         [p = ctx.p](const GroupElement&) { return CycloNum(p, 1); }};
}

// chi(g) = p^(-dim/2) sum_{f in orbit} theta(f(ln g)).  The orbit must be
// materialized; values are assembled from zeta-power counts.
inline ClassFunction kirillov_character(const Orbit& orbit) {
    if (!orbit.elements) throw validation_error("kirillov_character: orbit is not materialized");
    const Context ctx = orbit.ctx;
    const long p = ctx.p;
    // flat coefficient table, one row per orbit element
    auto flat = std::make_shared<std::vector<long>>();
    const size_t nn = static_cast<size_t>(ctx.dim_u());
    flat->reserve(orbit.elements->size() * nn);
    for (std::uint64_t code : *orbit.elements) {
        auto c = decode_coeffs(ctx, code);
        flat->insert(flat->end(), c.begin(), c.end());
    }
    mpq_class scale(1);
    for (int k = 0; k < orbit.dimension / 2; ++k) scale /= p;
    return ClassFunction{
        ctx, "kirillov", [ctx, p, nn, flat, scale](const GroupElement& g) {
            const std::vector<long> x = log_u(g).coeffs();
            std::vector<long> counts(static_cast<size_t>(p), 0);
            const long* row = flat->data();
            const size_t rows = flat->size() / nn;
            for (size_t r = 0; r < rows; ++r, row += nn) {
                long acc = 0;
                for (size_t k = 0; k < nn; ++k) acc += row[k] * x[k];
                ++counts[static_cast<size_t>(acc % p)];
            }
            return from_zeta_counts(p, counts, scale);
        }};
}

// One-dimensional character h -> theta(f(ln h)) of exp(span of carrier).
// Multiplicativity needs f to vanish on brackets of the carrier.
struct SubgroupChar {
    Context ctx;
    std::vector<size_t> carrier;  // root indices
    LinearForm f;

    CycloNum operator()(const GroupElement& h) const {
        return theta(eval_form(f, log_u(h)), ctx.p);
    }
};

inline SubgroupChar make_subgroup_char(const RootTable& tab, std::vector<size_t> carrier,
                                       const LinearForm& f) {
    for (size_t a : carrier)
        for (size_t b : carrier)
            if (tab.form_on_bracket(f, a, b) != 0)
                throw validation_error("subgroup character: f does not kill [a, a]");
    return SubgroupChar{tab.context(), std::move(carrier), f};
}

// Standard induced-character formula over an explicit transversal:
// Ind(lambda)(g) = sum over reps h with h^-1 g h in H of lambda(h^-1 g h).
class InducedCharacter {
  public:
    InducedCharacter(std::shared_ptr<const RootTable> tab, std::vector<size_t> h_roots,
                     std::vector<GroupElement> reps,
                     std::function<CycloNum(const GroupElement&)> lambda)
        : tab_(std::move(tab)),
          h_roots_(std::move(h_roots)),
          reps_(std::move(reps)),
          lambda_(std::move(lambda)) {
        const Context& ctx = tab_->context();
        unsigned __int128 covered = 1;
        for (size_t k = 0; k < h_roots_.size(); ++k) covered *= static_cast<unsigned>(ctx.p);
        covered *= reps_.size();
        unsigned __int128 group = 1;
        for (int k = 0; k < ctx.dim_u(); ++k) group *= static_cast<unsigned>(ctx.p);
        if (covered != group)
            throw validation_error("induced character: |reps| * |H| != |U|");
    }

    CycloNum operator()(const GroupElement& g) const {
        const Context& ctx = tab_->context();
        CycloNum total(ctx.p);
        for (const GroupElement& h : reps_) {
            GroupElement y = h.inverse() * g * h;
            if (!in_subgroup(*tab_, y, h_roots_)) continue;
            total += lambda_(y);
        }
        return total;
    }

  private:
    std::shared_ptr<const RootTable> tab_;
    std::vector<size_t> h_roots_;
    std::vector<GroupElement> reps_;
    std::function<CycloNum(const GroupElement&)> lambda_;
};

// All exp(sum t_k e_{roots[k]}) over tuples t in F_p^k.
inline std::vector<GroupElement> exp_span_elements(const RootTable& tab,
                                                   const std::vector<size_t>& roots,
                                                   std::uint64_t cap = kDefaultOrbitCap) {
    const Context& ctx = tab.context();
    std::uint64_t count = checked_pow(ctx.p, static_cast<int>(roots.size()), cap);
    std::vector<GroupElement> out;
    out.reserve(count);
    std::vector<long> t(roots.size(), 0);
    for (std::uint64_t it = 0; it < count; ++it) {
        std::vector<long> coeffs(static_cast<size_t>(ctx.dim_u()), 0);
        for (size_t k = 0; k < roots.size(); ++k) coeffs[roots[k]] = t[k];
        out.push_back(exp_u(UMatrix::from_coeffs(ctx, coeffs)));
        for (size_t k = 0; k < t.size(); ++k) {
            if (++t[k] < ctx.p) break;
            t[k] = 0;
        }
    }
    return out;
}

// chi = Ind_{exp(p)}^U (theta . f . ln) for the polarization P of f_{D,xi};
// the transversal runs over the complementary coordinates M_D.
inline ClassFunction induced_from_polarization(const OrbitEngine& eng, const RookPlacement& D,
                                               const RootMap<long>& xi,
                                               std::uint64_t cap = kDefaultOrbitCap) {
    auto tab = std::make_shared<RootTable>(eng.context());
    const Context& ctx = eng.context();
    CanonicalForm cf = canonical_form(ctx, D, xi);
    RootSet m = m_set(D);
    std::vector<size_t> p_roots, m_roots;
    for (size_t k = 0; k < tab->size(); ++k) {
        if (m.count(tab->roots()[k]))
            m_roots.push_back(k);
        else
            p_roots.push_back(k);
    }
    auto reps = exp_span_elements(*tab, m_roots, cap);
    LinearForm f = cf.form;
    auto lambda = [tab, f](const GroupElement& y) { return theta(eval_form(f, log_u(y)), f.context().p); };
    auto ind = std::make_shared<InducedCharacter>(tab, p_roots, std::move(reps), lambda);
    return ClassFunction{ctx, "induced", [ind](const GroupElement& g) { return (*ind)(g); }};
}

// ---------------------------------------------------------------------------
// The psi / V' tower behind the Mackey-type decomposition.

struct MackeyTower {
    explicit MackeyTower(const Context& c) : ctx(c) {}

    Context ctx;
    bool has_col1 = false;       // does D meet column 1?
    std::optional<Root> beta1;   // prec-largest root of D (when nonempty)
    long xi_beta1 = 0;
    std::vector<size_t> u1_roots;    // C' (carrier of psi)
    std::vector<size_t> v_roots;     // Phi+ minus C_1
    std::vector<size_t> vprime_roots;  // Phi_1^+
    std::vector<size_t> v1_roots;      // Phi_1^+ minus Phi_2^+
    std::vector<size_t> utilde_roots;  // Phi_2^+
    std::vector<size_t> m_coords;      // coordinates spanning the transversal M
    int n_tilde = 0;
    std::vector<int> index_map;  // 1..n -> 1..n_tilde, 0 when dropped
    std::vector<Root> d_tilde;
    RootMap<long> xi_tilde;
};

inline Root relabel_root(const std::vector<int>& index_map, const Root& a) {
    switch (a.kind) {
        case RootKind::Diff: return Root::diff(index_map[a.i], index_map[a.j]);
        case RootKind::Sum: return Root::sum(index_map[a.i], index_map[a.j]);
        default: return Root::long_root(index_map[a.i]);
    }
}

inline MackeyTower build_mackey_tower(const RootTable& tab, const RookPlacement& D,
                                      const RootMap<long>& xi) {
    const Context& ctx = tab.context();
    const int n = ctx.n;
    MackeyTower t(ctx);
    std::optional<Root> beta1;
    if (!D.empty()) beta1 = D.leading_root();
    t.beta1 = beta1;
    t.has_col1 = beta1 && col(*beta1) == 1;
    if (t.has_col1) t.xi_beta1 = xi.at(*beta1);

    const bool long_case = t.has_col1 && beta1->kind == RootKind::Long;
    const bool short_case = t.has_col1 && beta1->kind != RootKind::Long;

    RootSet sminus_beta1, sminus_mirror;
    if (t.has_col1) sminus_beta1 = singular_roots(n, *beta1).minus;
    if (short_case) {
        Root mirror = beta1->kind == RootKind::Diff ? Root::sum(1, beta1->j)
                                                    : Root::diff(1, beta1->j);
        sminus_mirror = singular_roots(n, mirror).minus;
    }

    for (size_t k = 0; k < tab.size(); ++k) {
        const Root& a = tab.roots()[k];
        const bool in_c1 = col(a) == 1;
        if (in_c1) {
            // C' drops the differences e_1 - e_k exactly when beta_1 = 2e_1.
            if (!(long_case && a.kind == RootKind::Diff)) t.u1_roots.push_back(k);
            if (long_case && a.kind == RootKind::Diff) t.m_coords.push_back(k);
            continue;
        }
        t.v_roots.push_back(k);
        if (t.has_col1 && sminus_beta1.count(a)) {
            t.m_coords.push_back(k);
            continue;
        }
        t.vprime_roots.push_back(k);
        if (short_case && sminus_mirror.count(a))
            t.v1_roots.push_back(k);
        else
            t.utilde_roots.push_back(k);
    }

    t.n_tilde = short_case ? n - 2 : n - 1;
    t.index_map.assign(static_cast<size_t>(n) + 1, 0);
    int next = 1;
    for (int i = 2; i <= n; ++i) {
        if (short_case && i == beta1->j) continue;
        t.index_map[i] = next++;
    }
    for (const Root& a : D.roots()) {
        if (col(a) == 1) continue;
        t.d_tilde.push_back(relabel_root(t.index_map, a));
        t.xi_tilde[t.d_tilde.back()] = xi.at(a);
    }
    return t;
}

// psi on U_1 per the two-case display: theta(xi_{b1} x_{row(b1),1}) when
// column 1 is occupied, constant 1 otherwise.
inline CycloNum psi_value(const MackeyTower& t, const GroupElement& h) {
    if (!t.has_col1) return CycloNum(t.ctx.p, 1);
    int r = mat_index(t.ctx.n, row(*t.beta1));
    int c = mat_index(t.ctx.n, 1);
    return theta(fp_mul(t.xi_beta1, h.matrix()(r, c), t.ctx.p), t.ctx.p);
}

// psi as theta(f(ln .)) on the carrier, for cross-checks.
inline CycloNum psi_value_by_form(const RootTable& tab, const RookPlacement& D,
                                  const RootMap<long>& xi, const GroupElement& h) {
    LinearForm f = form_of(tab.context(), D, xi);
    return theta(eval_form(f, log_u(h)), tab.context().p);
}

// psi as a one-dimensional subgroup character of U_1 = exp(span C');
// multiplicativity on the carrier is validated in the constructor.
inline SubgroupChar psi_char(const RootTable& tab, const RookPlacement& D,
                             const RootMap<long>& xi) {
    const Context& ctx = tab.context();
    MackeyTower t = build_mackey_tower(tab, D, xi);
    LinearForm f(ctx);
    if (t.beta1 && t.has_col1) {
        const auto phi = positive_roots(ctx.n);
        for (size_t k = 0; k < phi.size(); ++k)
            if (phi[k] == *t.beta1) f.set_coeff(k, t.xi_beta1);
    }
    return make_subgroup_char(tab, t.u1_roots, f);
}

// Brute-force centralizer of psi inside V: v is kept iff conjugation by v
// fixes psi on the generators of U_1 (psi and its twist are both
// multiplicative, so generator agreement is equivalent to agreement on U_1).
// Returned as sorted normal-coordinate codes; optionally checks every h.
inline std::vector<std::uint64_t> centralizer_of_psi(const RootTable& tab, const RookPlacement& D,
                                                     const RootMap<long>& xi,
                                                     bool exhaustive_h = false,
                                                     std::uint64_t cap = kDefaultOrbitCap) {
    const Context& ctx = tab.context();
    MackeyTower t = build_mackey_tower(tab, D, xi);
    std::vector<GroupElement> vs = exp_span_elements(tab, t.v_roots, cap);
    std::vector<GroupElement> hs;
    if (exhaustive_h) {
        hs = exp_span_elements(tab, t.u1_roots, cap);
    } else {
        for (size_t k : t.u1_roots)
            for (long s = 1; s < ctx.p; ++s) hs.push_back(x_root(ctx, tab.roots()[k], s));
    }
    std::vector<std::uint64_t> out;
    for (const GroupElement& v : vs) {
        GroupElement vi = v.inverse();
        bool fixes = true;
        for (const GroupElement& h : hs) {
            if (!(psi_value(t, v * h * vi) == psi_value(t, h))) {
                fixes = false;
                break;
            }
        }
        if (fixes) out.push_back(encode_coeffs(ctx, normal_coordinates(tab, v)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The subgroup V' = prod of X_a over Phi_1^+, materialized the same way.
inline std::vector<std::uint64_t> vprime_elements(const RootTable& tab, const RookPlacement& D,
                                                  const RootMap<long>& xi,
                                                  std::uint64_t cap = kDefaultOrbitCap) {
    const Context& ctx = tab.context();
    MackeyTower t = build_mackey_tower(tab, D, xi);
    std::vector<std::uint64_t> out;
    for (const GroupElement& g : exp_span_elements(tab, t.vprime_roots, cap))
        out.push_back(encode_coeffs(ctx, normal_coordinates(tab, g)));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// The recursive Mackey-type decomposition
//   chi = Ind_{U_1 x| V'}^U ( (psi . pi_{U_1}) * (chi~ . pi_{U~}) ).
// The recursion descends to C_{n-1} or C_{n-2} and bottoms out at rank <= 1
// or an empty placement.

class MackeyCharacter {
  public:
    MackeyCharacter(std::shared_ptr<const RootTable> tab, const RookPlacement& D,
                    const RootMap<long>& xi, std::uint64_t cap = kDefaultOrbitCap)
        : tab_(std::move(tab)), D_(D), tower_(build_mackey_tower(*tab_, D, xi)) {
        const Context& ctx = tab_->context();
        if (D.empty()) return;  // trivial character
        reps_ = exp_span_elements(*tab_, tower_.m_coords, cap);
        rep_invs_.reserve(reps_.size());
        for (const GroupElement& h : reps_) rep_invs_.push_back(h.inverse());
        if (tower_.n_tilde >= 1) {
            small_tab_ = std::make_shared<RootTable>(Context(tower_.n_tilde, ctx.p));
            RookPlacement d_tilde(tower_.n_tilde, tower_.d_tilde);
            chi_tilde_ = std::make_unique<MackeyCharacter>(small_tab_, d_tilde, tower_.xi_tilde,
                                                           cap);
        }
    }

    const MackeyTower& tower() const { return tower_; }

    CycloNum operator()(const GroupElement& g) const {
        const Context& ctx = tab_->context();
        if (D_.empty()) return CycloNum(ctx.p, 1);
        // Abelian shortcut: at rank 1 the character is theta . f . ln.
        if (ctx.n == 1) {
            LinearForm f(ctx, {tower_.xi_beta1});
            return theta(eval_form(f, log_u(g)), ctx.p);
        }
        CycloNum total(ctx.p);
        for (size_t r = 0; r < reps_.size(); ++r) {
            GroupElement y = rep_invs_[r] * g * reps_[r];
            auto split = semidirect_project(*tab_, y, tower_.u1_roots, tower_.vprime_roots);
            if (!split) continue;
            const auto& [u1_part, vprime_part] = *split;
            CycloNum term = psi_value(tower_, u1_part);
            if (chi_tilde_) {
                auto split2 =
                    semidirect_project(*tab_, vprime_part, tower_.v1_roots, tower_.utilde_roots);
                if (!split2) throw internal_error("mackey: V' element failed the V_1 x U~ split");
                term *= (*chi_tilde_)(relabel(split2->second));
            }
            total += term;
        }
        return total;
    }

  private:
    GroupElement relabel(const GroupElement& g) const {
        PeelResult r = peel_coordinates(*tab_, g, tower_.utilde_roots);
        if (!r.residual.is_identity())
            throw internal_error("mackey: U~ element is not supported on Phi_2^+");
        const Context& small = small_tab_->context();
        FpMat out = FpMat::identity(2 * small.n, small.p);
        for (auto [idx, t] : r.coords)
            if (t) right_mul_xroot(small, out, relabel_root(tower_.index_map, tab_->roots()[idx]), t);
        return GroupElement(small, std::move(out));
    }

    std::shared_ptr<const RootTable> tab_;
    RookPlacement D_;
    MackeyTower tower_;
    std::vector<GroupElement> reps_;
    std::vector<GroupElement> rep_invs_;
    std::shared_ptr<const RootTable> small_tab_;
    std::unique_ptr<MackeyCharacter> chi_tilde_;
};

inline ClassFunction mackey_decomposition(const OrbitEngine& eng, const RookPlacement& D,
                                          const RootMap<long>& xi,
                                          std::uint64_t cap = kDefaultOrbitCap) {
    auto tab = std::make_shared<RootTable>(eng.context());
    auto mc = std::make_shared<MackeyCharacter>(tab, D, xi, cap);
    return ClassFunction{eng.context(), "mackey",
                         [mc](const GroupElement& g) { return (*mc)(g); }};
}

// Exact (1/|U|) sum over the group of chi1 conj(chi2).
inline CycloNum inner_product(const ClassFunction& chi1, const ClassFunction& chi2,
                              std::uint64_t cap = kDefaultOrbitCap) {
    if (!(chi1.ctx == chi2.ctx)) throw validation_error("inner_product: mixed contexts");
    const Context& ctx = chi1.ctx;
    const std::uint64_t total = checked_pow(ctx.p, ctx.dim_u(), cap);
    CycloNum acc(ctx.p);
    for (std::uint64_t code = 0; code < total; ++code) {
        GroupElement g = exp_u(UMatrix::from_coeffs(ctx, decode_coeffs(ctx, code)));
        acc += chi1(g) * chi2(g).conj();
    }
    mpq_class scale(1);
    for (int k = 0; k < ctx.dim_u(); ++k) scale /= ctx.p;
    acc.scale(scale);
    return acc;
}

}  // namespace symporb

#endif
