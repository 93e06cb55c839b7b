#include <catch2/catch.hpp>

#include <random>

#include "symporb/maxdim.hpp"
#include "symporb/orbits.hpp"

using namespace symporb;

namespace {

LinearForm form_on(const Context& ctx, std::initializer_list<std::pair<Root, long>> entries) {
    const auto phi = positive_roots(ctx.n);
    LinearForm f(ctx);
    for (const auto& [root, value] : entries)
        for (size_t k = 0; k < phi.size(); ++k)
            if (phi[k] == root) f.set_coeff(k, value);
    return f;
}

}  // namespace

TEST_CASE("orbit of a single form") {
    Context ctx(2, 5);
    OrbitEngine eng(ctx);

    SECTION("zero form is a fixed point") {
        Orbit orb = eng.orbit_of(LinearForm(ctx));
        CHECK(orb.size == 1);
        CHECK(orb.dimension == 0);
        REQUIRE(orb.elements);
        CHECK(orb.elements->size() == 1);
    }
    SECTION("f_{2e1} has a 25-point orbit of dimension 2") {
        LinearForm f = form_on(ctx, {{Root::long_root(1), 1}});
        Orbit orb = eng.orbit_of(f);
        CHECK(orb.size == 25);
        CHECK(orb.dimension == 2);
        RookPlacement d(2, {Root::long_root(1)});
        CHECK(orb.dimension == 2 * static_cast<int>(m_set(d).size()));
    }
    SECTION("the simple-root form is fixed") {
        LinearForm f = form_on(ctx, {{Root::diff(1, 2), 1}});
        CHECK(orbit_dimension(eng.table(), f) == 0);
        CHECK(eng.orbit_of(f).size == 1);
    }
    SECTION("representative is canonical across the orbit") {
        std::mt19937 rng(3);
        LinearForm f = form_on(ctx, {{Root::long_root(1), 2}});
        Orbit orb = eng.orbit_of(f);
        std::uniform_int_distribution<long> pick(0, ctx.p - 1);
        for (int iter = 0; iter < 10; ++iter) {
            std::vector<long> c(static_cast<size_t>(ctx.dim_u()));
            for (auto& v : c) v = pick(rng);
            GroupElement g = exp_u(UMatrix::from_coeffs(ctx, c));
            Orbit moved = eng.orbit_of(coadjoint_act(g, f));
            CHECK(moved.representative == orb.representative);
            CHECK(*moved.elements == *orb.elements);
        }
    }
    SECTION("cap exceeded names a resource error") {
        LinearForm f = form_on(ctx, {{Root::long_root(1), 1}});
        CHECK_THROWS_AS(eng.orbit_of(f, 10), resource_error);
    }
}

TEST_CASE("orbit dimension by Gram rank") {
    Context ctx(2, 5);
    OrbitEngine eng(ctx);
    CHECK(orbit_dimension(eng.table(), LinearForm(ctx)) == 0);
    LinearForm f = form_on(ctx, {{Root::long_root(1), 1}, {Root::long_root(2), 1}});
    CHECK(orbit_dimension(eng.table(), f) == 2);

    std::mt19937 rng(5);
    std::uniform_int_distribution<long> pick(0, ctx.p - 1);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<long> c(static_cast<size_t>(ctx.dim_u()));
        for (auto& v : c) v = pick(rng);
        CHECK(orbit_dimension(eng.table(), LinearForm(ctx, c)) % 2 == 0);
    }
}

TEST_CASE("full orbit partitions") {
    SECTION("rank 1 is abelian") {
        OrbitEngine eng(Context(1, 5));
        auto orbits = eng.enumerate_all_orbits();
        CHECK(orbits.size() == 5);
        for (const Orbit& o : orbits) CHECK(o.size == 1);
    }
    SECTION("(2,5): 625 forms, 24 orbits of dimension 2") {
        OrbitEngine eng(Context(2, 5));
        auto orbits = eng.enumerate_all_orbits();
        std::uint64_t total = 0;
        int maxdim_count = 0;
        for (const Orbit& o : orbits) {
            total += o.size;
            if (o.dimension == 2) ++maxdim_count;
            CHECK(o.size == checked_pow(5, o.dimension, UINT64_MAX));
        }
        CHECK(total == 625);
        CHECK(maxdim_count == 24);
        CHECK(orbits.size() == 49);
    }
    SECTION("(2,7): 48 orbits of maximal dimension") {
        OrbitEngine eng(Context(2, 7));
        auto orbits = eng.enumerate_all_orbits();
        std::uint64_t total = 0;
        int maxdim_count = 0;
        for (const Orbit& o : orbits) {
            total += o.size;
            if (o.dimension == 2) ++maxdim_count;
        }
        CHECK(total == 2401);
        CHECK(maxdim_count == 48);
    }
}

TEST_CASE("conjugacy classes") {
    Context ctx(2, 5);
    OrbitEngine eng(ctx);
    const auto phi = positive_roots(2);

    auto coeffs_for = [&](const Root& r, long v) {
        std::vector<long> c(phi.size(), 0);
        for (size_t k = 0; k < phi.size(); ++k)
            if (phi[k] == r) c[k] = v;
        return UMatrix::from_coeffs(ctx, c);
    };

    SECTION("zero gives the identity class") {
        ConjClass cls = eng.conjugacy_class_of(UMatrix(ctx));
        CHECK(cls.size == 1);
    }
    SECTION("class sizes follow p^|S(D)| with S(D) = union of a + Phi+") {
        // 2e1 is the highest root, so its class is a single point.
        CHECK(eng.conjugacy_class_of(coeffs_for(Root::long_root(1), 1)).size == 1);
        // S({2e2}) = {e1+e2}, S({e1+e2}) = {2e1}: five-point classes.
        CHECK(eng.conjugacy_class_of(coeffs_for(Root::long_root(2), 1)).size == 5);
        CHECK(eng.conjugacy_class_of(coeffs_for(Root::sum(1, 2), 1)).size == 5);
        CHECK(upward_set(2, {Root::long_root(1)}).empty());
        CHECK(upward_set(2, {Root::long_root(2)}) == RootSet{Root::sum(1, 2)});
        CHECK(upward_set(2, {Root::sum(1, 2)}) == RootSet{Root::long_root(1)});
    }
    SECTION("the class of exp(x) is exp of the adjoint orbit of x") {
        std::mt19937 rng(9);
        std::uniform_int_distribution<long> pick(0, ctx.p - 1);
        UMatrix x = coeffs_for(Root::long_root(2), 2);
        ConjClass cls = eng.conjugacy_class_of(x);
        REQUIRE(cls.elements);
        for (int iter = 0; iter < 50; ++iter) {
            std::vector<long> c(phi.size());
            for (auto& v : c) v = pick(rng);
            GroupElement g = exp_u(UMatrix::from_coeffs(ctx, c));
            GroupElement conj = g * exp_u(x) * g.inverse();
            std::uint64_t code = encode_coeffs(ctx, log_u(conj).coeffs());
            CHECK(std::binary_search(cls.elements->begin(), cls.elements->end(), code));
        }
    }
}

TEST_CASE("stabilizer sizes") {
    Context ctx(2, 5);
    OrbitEngine eng(ctx);
    CHECK(eng.stabilizer_size(LinearForm(ctx)) == 625);
    LinearForm f = form_on(ctx, {{Root::long_root(1), 1}, {Root::long_root(2), 1}});
    CHECK(eng.stabilizer_size(f) == 25);

    // orbit-stabilizer over the whole partition
    for (const Orbit& o : eng.enumerate_all_orbits())
        CHECK(eng.stabilizer_size(o.representative) * o.size == 625);
}
