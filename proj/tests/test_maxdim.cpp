#include <catch2/catch.hpp>

#include <random>
#include <set>

#include "symporb/maxdim.hpp"

using namespace symporb;

namespace {

long long fib(int k) {  // F_1 = F_2 = 1
    long long a = 1, b = 1;
    for (int i = 3; i <= k; ++i) {
        long long c = a + b;
        a = b;
        b = c;
    }
    return b;
}

GroupElement random_element(std::mt19937& rng, const Context& ctx) {
    std::uniform_int_distribution<long> pick(0, ctx.p - 1);
    std::vector<long> c(static_cast<size_t>(ctx.dim_u()));
    for (auto& v : c) v = pick(rng);
    return exp_u(UMatrix::from_coeffs(ctx, c));
}

}  // namespace

TEST_CASE("D_reg") {
    CHECK(d_reg(1) == std::vector<Root>{Root::long_root(1)});
    auto d2 = d_reg(2);
    REQUIRE(d2.size() == 3);
    for (const Root& r : {Root::long_root(1), Root::long_root(2), Root::sum(1, 2)})
        CHECK(std::count(d2.begin(), d2.end(), r) == 1);
    CHECK(d_reg(4).size() == 7);
}

TEST_CASE("maximal orthogonal subsets are the tilings") {
    auto t2 = maximal_orthogonal_subsets_of_dreg(2);
    CHECK(t2.size() == 2);
    auto t3 = maximal_orthogonal_subsets_of_dreg(3);
    REQUIRE(t3.size() == 3);

    for (int n = 1; n <= 12; ++n)
        CHECK(maximal_orthogonal_subsets_of_dreg(n).size() ==
              static_cast<size_t>(fib(n + 1)));
    CHECK_THROWS_AS(maximal_orthogonal_subsets_of_dreg(13), resource_error);

    SECTION("each output is maximal inside D_reg") {
        for (int n : {2, 3, 4}) {
            for (const RookPlacement& d : maximal_orthogonal_subsets_of_dreg(n)) {
                for (const Root& extra : d_reg(n)) {
                    if (d.contains(extra)) continue;
                    std::vector<Root> bigger = d.roots();
                    bigger.push_back(extra);
                    CHECK_FALSE(is_orthogonal_placement(n, bigger));
                }
            }
        }
    }
}

TEST_CASE("counting maximal-dimension orbits") {
    CHECK(count_maxdim(0, 5) == 1);
    CHECK(count_maxdim(1, 5) == 5);
    CHECK(count_maxdim(2, 5) == 24);
    for (long p : {5L, 7L, 11L}) CHECK(count_maxdim(2, p) == p * p - 1);
    for (int n = 1; n <= 6; ++n)
        for (long p : {5L, 7L, 11L, 13L})
            CHECK(count_maxdim(n, p) == maxdim_section_size(n, p));
}

TEST_CASE("the maximal-dimension section") {
    SECTION("(2,5): 24 data, 20 + 4 by tiling") {
        Context ctx(2, 5);
        auto data = maxdim_section(ctx);
        CHECK(data.size() == 24);
        int with_sum = 0;
        for (const MaxDimDatum& d : data)
            if (d.D.contains(Root::sum(1, 2))) ++with_sum;
        CHECK(with_sum == 4);
    }
    SECTION("(1,5): 5 data") { CHECK(maxdim_section(Context(1, 5)).size() == 5); }
    SECTION("every datum has a maximal-dimension orbit") {
        for (int n : {2, 3}) {
            Context ctx(n, 7);
            RootTable tab(ctx);
            for (const MaxDimDatum& d : maxdim_section(ctx))
                CHECK(orbit_dimension(tab, d.form) == n * (n - 1));
        }
    }
    SECTION("validation honors the 2e_n relaxation only") {
        Context ctx(2, 5);
        RookPlacement d(2, {Root::long_root(1), Root::long_root(2)});
        RootMap<long> xi{{Root::long_root(1), 1}, {Root::long_root(2), 0}};
        CHECK_NOTHROW(make_maxdim_datum(ctx, d, xi));
        RootMap<long> bad{{Root::long_root(1), 0}, {Root::long_root(2), 1}};
        CHECK_THROWS_AS(make_maxdim_datum(ctx, d, bad), validation_error);
    }
}

TEST_CASE("D prime") {
    RookPlacement a(3, {Root::sum(1, 2), Root::long_root(3)});
    auto dp = d_prime(a);
    CHECK(dp.size() == 3);
    CHECK(std::count(dp.begin(), dp.end(), Root::long_root(1)) == 1);

    RookPlacement b(2, {Root::long_root(1), Root::long_root(2)});
    CHECK(d_prime(b) == b.roots());

    RookPlacement c(4, {Root::sum(1, 2), Root::sum(3, 4)});
    auto dp4 = d_prime(c);
    CHECK(dp4.size() == 4);
    CHECK(std::count(dp4.begin(), dp4.end(), Root::long_root(1)) == 1);
    CHECK(std::count(dp4.begin(), dp4.end(), Root::long_root(3)) == 1);
}

TEST_CASE("x_D(phi) and the staircase minors") {
    Context ctx(3, 7);
    SECTION("empty support") {
        CHECK(x_of(ctx, {}, {}).is_zero());
    }
    SECTION("a single long root") {
        RootMap<long> phi{{Root::long_root(1), 1}};
        UMatrix x = x_of(ctx, {Root::long_root(1)}, phi);
        CHECK(x == UMatrix::raw(ctx, basis_matrix(ctx, Root::long_root(1))));
    }
    SECTION("trivial minors read single entries") {
        RootMap<long> phi{{Root::long_root(2), 3}};
        UMatrix x = x_of(ctx, {Root::long_root(2)}, phi);
        CHECK(minor_delta(x, Root::long_root(2), {}) == 3);
        CHECK(minor_delta(x, Root::sum(1, 2), {}) == 0);
    }
    SECTION("on x_D(phi), the minor at beta in D is +- a product of phis") {
        std::mt19937 rng(19);
        for (int n : {2, 3}) {
            Context c(n, 7);
            std::uniform_int_distribution<long> pick(1, c.p - 1);
            for (const RookPlacement& d : maximal_orthogonal_subsets_of_dreg(n)) {
                auto dp = d_prime(d);
                for (std::uint64_t mask = 0; mask < (1u << dp.size()); ++mask) {
                    std::vector<Root> dstar;
                    for (size_t k = 0; k < dp.size(); ++k)
                        if (mask & (1u << k)) dstar.push_back(dp[k]);
                    if (dstar.empty() || !is_orthogonal_placement(n, dstar)) continue;
                    RootMap<long> phi;
                    for (const Root& b : dstar) phi[b] = pick(rng);
                    UMatrix x = x_of(c, dstar, phi);
                    for (const Root& beta : dstar) {
                        // short participants enter through both positions
                        long expect = phi[beta];
                        for (const Root& a : dstar)
                            if (mirror_less(row(a), row(beta)) &&
                                mirror_less(col(beta), col(a))) {
                                expect = fp_mul(expect, phi[a], c.p);
                                if (a.kind != RootKind::Long)
                                    expect = fp_mul(expect, phi[a], c.p);
                            }
                        long got = minor_delta(x, beta, dstar);
                        CHECK((got == expect || got == fp_norm(-expect, c.p)));
                    }
                }
            }
        }
    }
    SECTION("minors over R(D*) are conjugation invariant on the class") {
        Context c(3, 7);
        std::mt19937 rng(23);
        std::vector<Root> dstar{Root::long_root(2), Root::long_root(3)};
        RootMap<long> phi{{Root::long_root(2), 2}, {Root::long_root(3), 5}};
        UMatrix x = x_of(c, dstar, phi);
        for (int iter = 0; iter < 40; ++iter) {
            GroupElement g = random_element(rng, c);
            UMatrix moved = adjoint_act(g, x);
            for (const Root& beta : pinned_set(c.n, dstar))
                CHECK(minor_delta(moved, beta, dstar) == minor_delta(x, beta, dstar));
        }
    }
}

TEST_CASE("k varieties") {
    SECTION("empty placement pins everything to zero") {
        Context ctx(2, 5);
        auto k = k_variety(ctx, {}, {});
        REQUIRE(k.size() == 1);
        CHECK(k.front() == 0);
    }
    SECTION("hand-solved instance: D* = {2e2} at (2,5)") {
        Context ctx(2, 5);
        RootMap<long> phi{{Root::long_root(2), 2}};
        auto k = k_variety(ctx, {Root::long_root(2)}, phi);
        REQUIRE(k.size() == 5);
        const auto roots = positive_roots(2);
        for (std::uint64_t code : k) {
            auto c = decode_coeffs(ctx, code);
            long s = 0, l1 = 0, l2 = 0, d12 = 0;
            for (size_t i = 0; i < roots.size(); ++i) {
                if (roots[i] == Root::sum(1, 2)) s = c[i];
                if (roots[i] == Root::long_root(1)) l1 = c[i];
                if (roots[i] == Root::long_root(2)) l2 = c[i];
                if (roots[i] == Root::diff(1, 2)) d12 = c[i];
            }
            CHECK(d12 == 0);
            CHECK(l2 == 2);
            CHECK(l1 == fp_div(fp_mul(s, s, 5), 2, 5));
        }
    }
    SECTION("class-size law and coincidence with the adjoint orbit") {
        for (int n : {2, 3}) {
            Context ctx(n, 7);
            OrbitEngine eng(ctx);
            std::mt19937 rng(29);
            std::uniform_int_distribution<long> pick(1, ctx.p - 1);
            for (const RookPlacement& d : maximal_orthogonal_subsets_of_dreg(n)) {
                auto dp = d_prime(d);
                for (std::uint64_t mask = 0; mask < (1u << dp.size()); ++mask) {
                    std::vector<Root> dstar;
                    for (size_t k = 0; k < dp.size(); ++k)
                        if (mask & (1u << k)) dstar.push_back(dp[k]);
                    if (!is_orthogonal_placement(n, dstar)) continue;
                    RootMap<long> phi;
                    for (const Root& b : dstar) phi[b] = pick(rng);
                    auto k = k_variety(ctx, dstar, phi);
                    CHECK(k.size() == checked_pow(ctx.p,
                                                  static_cast<int>(upward_set(n, dstar).size()),
                                                  UINT64_MAX));
                    ConjClass cls = eng.conjugacy_class_of(x_of(ctx, dstar, phi));
                    REQUIRE(cls.elements);
                    CHECK(k == *cls.elements);
                }
            }
        }
    }
}

TEST_CASE("t counters") {
    RookPlacement both(2, {Root::long_root(1), Root::long_root(2)});
    RookPlacement sum(2, {Root::sum(1, 2)});

    TCounters empty = t_counters(both, {});
    CHECK((empty.t == 0 && empty.t0 == 0 && empty.t1 == 0));

    // 2e2 <' 2e1 and nothing else
    TCounters a = t_counters(both, {Root::long_root(2)});
    CHECK((a.t == 1 && a.t0 == 1 && a.t1 == 0));

    // e1+e2 <' 2e1, never conversely
    TCounters b = t_counters(sum, {Root::long_root(1)});
    CHECK((b.t == 0 && b.t0 == 0 && b.t1 == 0));

    TCounters c = t_counters(both, {Root::long_root(1), Root::long_root(2)});
    CHECK((c.t == 1 && c.t0 == 1 && c.t1 == 0));
}

TEST_CASE("closed-form character values at (2,5)") {
    Context ctx(2, 5);
    OrbitEngine eng(ctx);
    RookPlacement both(2, {Root::long_root(1), Root::long_root(2)});
    RootMap<long> xi{{Root::long_root(1), 2}, {Root::long_root(2), 3}};
    MaxDimDatum datum = make_maxdim_datum(ctx, both, xi);

    SECTION("the empty class carries the degree") {
        CHECK(char_value_closed_form(ctx, datum, {}, {}) == CycloNum(ctx.p, 5));
    }
    SECTION("base-case displays") {
        const long p = 5;
        for (long phi1 = 1; phi1 < p; ++phi1) {
            RootMap<long> phi{{Root::long_root(1), phi1}};
            CycloNum got = char_value_closed_form(ctx, datum, {Root::long_root(1)}, phi);
            CycloNum expect = theta(fp_mul(2, phi1, p), p);
            expect.scale(mpq_class(p));
            CHECK(got == expect);  // q theta(xi_1 phi_1) when 2e2 is absent
        }
        for (long phi2 = 1; phi2 < p; ++phi2) {
            RootMap<long> phi{{Root::long_root(2), phi2}};
            CycloNum got = char_value_closed_form(ctx, datum, {Root::long_root(2)}, phi);
            CycloNum expect = gauss_sum(p) * theta(fp_mul(3, phi2, p), p);
            if (eta(fp_mul(2, phi2, p), p) < 0) expect = -expect;
            CHECK(got == expect);  // eta(xi_1 phi_2) G theta(xi_2 phi_2)
        }
    }
    SECTION("matches the kirillov character on every support class, all data") {
        for (const MaxDimDatum& datum2 : maxdim_section(ctx)) {
            ClassFunction kir = kirillov_character(eng.orbit_of(datum2.form));
            for (const SupportClass& sc : support_classes(eng, datum2)) {
                GroupElement rep = exp_u(x_of(ctx, sc.Dstar, sc.phi));
                CycloNum direct = kir(rep);
                CycloNum closed = char_value_closed_form(ctx, datum2, sc.Dstar, sc.phi);
                CHECK(direct == closed);
            }
        }
    }
}

TEST_CASE("sampled support exactness at rank 3") {
    Context ctx(3, 7);
    OrbitEngine eng(ctx);
    RookPlacement d(3, {Root::sum(1, 2), Root::long_root(3)});
    RootMap<long> xi{{Root::sum(1, 2), 1}, {Root::long_root(3), 1}};
    MaxDimDatum datum = make_maxdim_datum(ctx, d, xi);
    ClassFunction kir = kirillov_character(eng.orbit_of(datum.form));
    std::set<std::uint64_t> support;
    for (const SupportClass& sc : support_classes(eng, datum)) {
        REQUIRE(sc.cls.elements);
        for (std::uint64_t code : *sc.cls.elements) CHECK(support.insert(code).second);
        // nonzero on every class representative
        CHECK_FALSE(kir(exp_u(x_of(ctx, sc.Dstar, sc.phi))).is_zero());
    }
    std::mt19937 rng(37);
    std::uniform_int_distribution<long> pick(0, ctx.p - 1);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<long> c(static_cast<size_t>(ctx.dim_u()));
        for (auto& v : c) v = pick(rng);
        GroupElement g = exp_u(UMatrix::from_coeffs(ctx, c));
        std::uint64_t code = encode_coeffs(ctx, log_u(g).coeffs());
        CHECK((!kir(g).is_zero()) == (support.count(code) == 1));
    }
}

TEST_CASE("support classes") {
    Context ctx(2, 5);
    OrbitEngine eng(ctx);

    SECTION("never both e1+e2 and 2e1") {
        RookPlacement d(2, {Root::sum(1, 2)});
        RootMap<long> xi{{Root::sum(1, 2), 1}};
        MaxDimDatum datum = make_maxdim_datum(ctx, d, xi);
        auto classes = support_classes(eng, datum);
        // D* in {empty, {e1+e2}, {2e1}} with 4 phi choices on the singletons
        CHECK(classes.size() == 9);
        for (const SupportClass& sc : classes) {
            bool has_sum = std::count(sc.Dstar.begin(), sc.Dstar.end(), Root::sum(1, 2)) > 0;
            bool has_long = std::count(sc.Dstar.begin(), sc.Dstar.end(), Root::long_root(1)) > 0;
            CHECK_FALSE((has_sum && has_long));
        }
    }
    SECTION("classes are pairwise disjoint and exactly cover the support") {
        RookPlacement d(2, {Root::long_root(1), Root::long_root(2)});
        RootMap<long> xi{{Root::long_root(1), 1}, {Root::long_root(2), 1}};
        MaxDimDatum datum = make_maxdim_datum(ctx, d, xi);
        auto classes = support_classes(eng, datum);

        std::set<std::uint64_t> support_set;
        std::uint64_t covered = 0;
        for (const SupportClass& sc : classes) {
            REQUIRE(sc.cls.elements);
            for (std::uint64_t code : *sc.cls.elements) {
                CHECK(support_set.insert(code).second);  // disjointness
                ++covered;
            }
        }
        CHECK(covered == 1 + 4 * 1 + 4 * 5 + 16 * 5);  // 105 elements

        ClassFunction kir = kirillov_character(eng.orbit_of(datum.form));
        const std::uint64_t total = checked_pow(ctx.p, ctx.dim_u(), UINT64_MAX);
        for (std::uint64_t code = 0; code < total; ++code) {
            GroupElement g = exp_u(UMatrix::from_coeffs(ctx, decode_coeffs(ctx, code)));
            bool in_support = !kir(g).is_zero();
            CHECK(in_support == (support_set.count(code) == 1));
        }
    }
}
