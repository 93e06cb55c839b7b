#ifndef SYMPORB_ORBITS_HPP_
#define SYMPORB_ORBITS_HPP_

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <unordered_set>
#include <vector>

#include "symporb/errors.hpp"
#include "symporb/lie.hpp"

namespace symporb {

inline constexpr std::uint64_t kDefaultOrbitCap = 10'000'000;

// Forms and u-elements are encoded as base-p integers over the canonical
// (prec_prime-ascending) root order, first root most significant; numeric
// order on codes is then the prec_prime-lexicographic order on vectors.
inline std::uint64_t encode_coeffs(const Context& ctx, const std::vector<long>& c) {
    std::uint64_t v = 0;
    for (long x : c) v = v * static_cast<std::uint64_t>(ctx.p) + static_cast<std::uint64_t>(x);
    return v;
}

inline std::vector<long> decode_coeffs(const Context& ctx, std::uint64_t v) {
    std::vector<long> c(static_cast<size_t>(ctx.dim_u()));
    for (size_t k = c.size(); k-- > 0;) {
        c[k] = static_cast<long>(v % static_cast<std::uint64_t>(ctx.p));
        v /= static_cast<std::uint64_t>(ctx.p);
    }
    return c;
}

// p^e, guarded against overflow past `limit`.
inline std::uint64_t checked_pow(long p, int e, std::uint64_t limit) {
    unsigned __int128 v = 1;
    for (int k = 0; k < e; ++k) {
        v *= static_cast<unsigned>(p);
        if (v > limit) throw resource_error("p^" + std::to_string(e) + " exceeds the cap");
    }
    return static_cast<std::uint64_t>(v);
}

inline std::vector<Root> simple_roots(int n) {
    std::vector<Root> d;
    for (int i = 1; i < n; ++i) d.push_back(Root::diff(i, i + 1));
    d.push_back(Root::long_root(n));
    return d;
}

// Linear action of one group element on coefficient vectors; row b lists
// the expansion of the image of e_b.
struct ActionMatrix {
    std::vector<std::vector<long>> a;

    std::vector<long> apply(const Context& ctx, const std::vector<long>& c) const {
        const size_t nn = c.size();
        std::vector<long> out(nn, 0);
        for (size_t b = 0; b < nn; ++b) {
            long acc = 0;
            const auto& rowv = a[b];
            for (size_t g = 0; g < nn; ++g) acc += rowv[g] * c[g];
            out[b] = fp_norm(acc, ctx.p);
        }
        return out;
    }
};

// Generator tables for the simple root subgroups x_a(t), t in F_p^x.
// Coadjoint rows: (g.f)(e_b) = f(g^-1 e_b g); adjoint rows: coefficients
// of g e_b g^-1.
class GeneratorTables {
  public:
    GeneratorTables(std::shared_ptr<const RootTable> tab, bool adjoint) : tab_(std::move(tab)) {
        const Context& ctx = tab_->context();
        for (const Root& a : simple_roots(ctx.n)) {
            for (long t = 1; t < ctx.p; ++t) {
                GroupElement g = x_root(ctx, a, t);
                GroupElement gi = g.inverse();
                ActionMatrix m;
                m.a.assign(tab_->size(), std::vector<long>(tab_->size(), 0));
                for (size_t b = 0; b < tab_->size(); ++b) {
                    FpMat moved = adjoint ? g.matrix() * tab_->basis(b) * gi.matrix()
                                          : gi.matrix() * tab_->basis(b) * g.matrix();
                    UMatrix u = UMatrix::from_matrix(ctx, moved);
                    std::vector<long> img = u.coeffs();
                    if (adjoint) {
                        // x = sum c_b e_b maps to sum_b c_b (g e_b g^-1):
                        // coefficient vectors transform by the transpose.
                        for (size_t r = 0; r < img.size(); ++r) m.a[r][b] = img[r];
                    } else {
                        // (g.f)(e_b) = f(g^-1 e_b g) reads the image rows directly.
                        m.a[b] = std::move(img);
                    }
                }
                mats_.push_back(std::move(m));
            }
        }
    }

    const RootTable& table() const { return *tab_; }
    const std::vector<ActionMatrix>& generators() const { return mats_; }

  private:
    std::shared_ptr<const RootTable> tab_;
    std::vector<ActionMatrix> mats_;
};

struct Orbit {
    Context ctx;
    LinearForm representative;  // prec_prime-lexicographically minimal member
    std::uint64_t size = 0;
    int dimension = 0;
    std::optional<std::vector<std::uint64_t>> elements;  // encoded, sorted
};

struct ConjClass {
    Context ctx;
    UMatrix log_representative;  // minimal encoded log coefficient vector
    std::uint64_t size = 0;
    std::optional<std::vector<std::uint64_t>> elements;  // encoded logs, sorted
};

namespace detail {

// Closure of `start` under the generator action on coefficient vectors.
inline std::vector<std::uint64_t> bfs_closure(const GeneratorTables& gens,
                                              const std::vector<long>& start,
                                              std::uint64_t cap) {
    const Context& ctx = gens.table().context();
    std::unordered_set<std::uint64_t> seen;
    std::deque<std::vector<long>> frontier;
    seen.insert(encode_coeffs(ctx, start));
    frontier.push_back(start);
    while (!frontier.empty()) {
        std::vector<long> cur = std::move(frontier.front());
        frontier.pop_front();
        for (const ActionMatrix& m : gens.generators()) {
            std::vector<long> nxt = m.apply(ctx, cur);
            std::uint64_t code = encode_coeffs(ctx, nxt);
            if (seen.insert(code).second) {
                if (seen.size() > cap) throw resource_error("orbit closure exceeded the cap");
                frontier.push_back(std::move(nxt));
            }
        }
    }
    std::vector<std::uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline int size_to_dimension(const Context& ctx, std::uint64_t size) {
    int d = 0;
    std::uint64_t v = 1;
    while (v < size) {
        v *= static_cast<std::uint64_t>(ctx.p);
        ++d;
    }
    if (v != size) throw internal_error("orbit size is not a power of p");
    return d;
}

}  // namespace detail

// Rank of the alternating form f([.,.]) on u; equals the orbit dimension.
inline int orbit_dimension(const RootTable& tab, const LinearForm& f) {
    return rank_mod_p(tab.gram(f));
}

// Orbit shared state: tables are expensive enough to want reuse across
// many orbit computations in one (n, p) context.
class OrbitEngine {
  public:
    explicit OrbitEngine(const Context& ctx)
        : tab_(std::make_shared<RootTable>(ctx)),
          coad_(tab_, /*adjoint=*/false),
          ad_(tab_, /*adjoint=*/true) {}

    const Context& context() const { return tab_->context(); }
    const RootTable& table() const { return *tab_; }

    Orbit orbit_of(const LinearForm& f, std::uint64_t cap = kDefaultOrbitCap,
                   bool materialize = true) const {
        const Context& ctx = context();
        int dim = orbit_dimension(*tab_, f);
        std::uint64_t est = checked_pow(ctx.p, dim, cap);
        (void)est;  // checked_pow throws past the cap, naming the size
        auto elements = detail::bfs_closure(coad_, f.coeffs(), cap);
        Orbit orb{ctx, LinearForm(ctx, decode_coeffs(ctx, elements.front())),
                  elements.size(), dim, std::nullopt};
        if (orb.size != checked_pow(ctx.p, dim, UINT64_MAX))
            throw internal_error("orbit size disagrees with the Gram rank");
        if (materialize) orb.elements = std::move(elements);
        return orb;
    }

    ConjClass conjugacy_class_of(const UMatrix& x, std::uint64_t cap = kDefaultOrbitCap,
                                 bool materialize = true) const {
        const Context& ctx = context();
        auto elements = detail::bfs_closure(ad_, x.coeffs(), cap);
        ConjClass cls{ctx, UMatrix::from_coeffs(ctx, decode_coeffs(ctx, elements.front())),
                      elements.size(), std::nullopt};
        if (materialize) cls.elements = std::move(elements);
        return cls;
    }

    std::uint64_t stabilizer_size(const LinearForm& f, std::uint64_t cap = kDefaultOrbitCap) const {
        const Context& ctx = context();
        std::uint64_t group = checked_pow(ctx.p, ctx.dim_u(), UINT64_MAX);
        return group / orbit_of(f, cap, /*materialize=*/false).size;
    }

    // Full partition of u* into coadjoint orbits; needs p^(n^2) <= cap.
    // Orbits come out ordered by their canonical representative, which is
    // also the BFS seed (forms are visited in increasing code order).
    std::vector<Orbit> enumerate_all_orbits(std::uint64_t cap = kDefaultOrbitCap) const {
        const Context& ctx = context();
        const std::uint64_t total = checked_pow(ctx.p, ctx.dim_u(), cap);
        std::vector<bool> visited(total, false);
        std::vector<Orbit> out;
        for (std::uint64_t start = 0; start < total; ++start) {
            if (visited[start]) continue;
            auto elements =
                detail::bfs_closure(coad_, decode_coeffs(ctx, start), total);
            for (std::uint64_t e : elements) visited[e] = true;
            Orbit orb{ctx, LinearForm(ctx, decode_coeffs(ctx, start)), elements.size(),
                      detail::size_to_dimension(ctx, elements.size()), std::nullopt};
            out.push_back(std::move(orb));
        }
        return out;
    }

    const GeneratorTables& coadjoint_generators() const { return coad_; }
    const GeneratorTables& adjoint_generators() const { return ad_; }

  private:
    std::shared_ptr<RootTable> tab_;
    GeneratorTables coad_;
    GeneratorTables ad_;
};

}  // namespace symporb

#endif
