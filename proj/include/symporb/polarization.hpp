#ifndef SYMPORB_POLARIZATION_HPP_
#define SYMPORB_POLARIZATION_HPP_

#include <vector>

#include "symporb/errors.hpp"
#include "symporb/lie.hpp"
#include "symporb/orbits.hpp"
#include "symporb/roots.hpp"

namespace symporb {

// f_{D,xi} = sum xi_b e*_b with every xi_b nonzero.  (The maximal-dimension
// section relaxes the nonzero condition at 2e_n; that variant lives in
// maxdim and does not go through this type.)
struct CanonicalForm {
    RookPlacement D;
    RootMap<long> xi;
    LinearForm form;
};

inline LinearForm form_of(const Context& ctx, const RookPlacement& D, const RootMap<long>& xi) {
    const auto phi = positive_roots(ctx.n);
    LinearForm f(ctx);
    for (const Root& b : D.roots()) {
        auto it = xi.find(b);
        if (it == xi.end()) throw validation_error("canonical form: xi not defined on " + root_name(b));
        for (size_t k = 0; k < phi.size(); ++k)
            if (phi[k] == b) f.set_coeff(k, it->second);
    }
    return f;
}

inline CanonicalForm canonical_form(const Context& ctx, const RookPlacement& D,
                                    const RootMap<long>& xi) {
    if (D.rank() != ctx.n) throw validation_error("canonical form: placement rank mismatch");
    if (xi.size() != D.size()) throw validation_error("canonical form: xi domain is not D");
    for (const auto& [root, value] : xi) {
        if (!D.contains(root))
            throw validation_error("canonical form: xi defined off D at " + root_name(root));
        if (fp_norm(value, ctx.p) == 0)
            throw validation_error("canonical form: zero coefficient at " + root_name(root));
    }
    return CanonicalForm{D, xi, form_of(ctx, D, xi)};
}

struct Polarization {
    RootSet roots;  // P, with span p = sum of the root lines
};

// The three polarization axioms, checked computationally: isotropy of f on
// span(P), closure of P under root addition, and root-line maximality
// (adjoining any missing root line breaks isotropy).
inline bool verify_polarization(const RootTable& tab, const LinearForm& f, const RootSet& P) {
    const Context& ctx = tab.context();
    std::vector<size_t> idx;
    for (const Root& a : P) idx.push_back(static_cast<size_t>(tab.index_of(a)));
    for (size_t x : idx)
        for (size_t y : idx)
            if (tab.form_on_bracket(f, x, y) != 0) return false;
    for (const Root& a : P)
        for (const Root& b : P) {
            auto s = root_add(ctx.n, a, b);
            if (s && !P.count(*s)) return false;
        }
    for (const Root& a : tab.roots()) {
        if (P.count(a)) continue;
        size_t ai = static_cast<size_t>(tab.index_of(a));
        bool breaks = false;
        for (size_t y : idx)
            if (tab.form_on_bracket(f, ai, y) != 0) {
                breaks = true;
                break;
            }
        if (!breaks) return false;  // P u {a} would still be isotropic
    }
    return true;
}

// P = Phi+ minus M_D; the axioms and the dimension identity
// dim Omega = 2 |M_D| are verified, not assumed.
inline Polarization polarization(const RootTable& tab, const RookPlacement& D,
                                 const RootMap<long>& xi) {
    const Context& ctx = tab.context();
    CanonicalForm cf = canonical_form(ctx, D, xi);
    RootSet m = m_set(D);
    RootSet P;
    for (const Root& a : tab.roots())
        if (!m.count(a)) P.insert(a);
    if (!verify_polarization(tab, cf.form, P))
        throw internal_error("polarization axioms failed for the constructed P");
    if (orbit_dimension(tab, cf.form) != 2 * static_cast<int>(m.size()))
        throw internal_error("orbit dimension disagrees with 2 |M_D|");
    return Polarization{std::move(P)};
}

}  // namespace symporb

#endif
