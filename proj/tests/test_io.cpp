#include <catch2/catch.hpp>

#include <filesystem>

#include "symporb/io.hpp"

using namespace symporb;

TEST_CASE("cyclotomic JSON round trip") {
    CycloNum g = gauss_sum(7);
    g.scale(mpq_class(-3, 2));
    json j = cyclo_to_json(g);
    CHECK(j.at("coeffs").size() == 6);
    CHECK(cyclo_from_json(j) == g);
}

TEST_CASE("linear form JSON") {
    Context ctx(2, 5);
    const auto phi = positive_roots(2);
    LinearForm f(ctx);
    for (size_t k = 0; k < phi.size(); ++k)
        if (phi[k] == Root::long_root(1)) f.set_coeff(k, 3);
    json j = form_to_json(f);
    CHECK(j.at("coeffs").size() == 1);  // zeros omitted
    CHECK(j.at("coeffs").at("2e1") == 3);
    CHECK(form_from_json(j) == f);
    json bad = j;
    bad["coeffs"]["2e7"] = 1;
    CHECK_THROWS_AS(form_from_json(bad), validation_error);
}

TEST_CASE("orbit partition serialization and the cache") {
    Context ctx(2, 5);
    OrbitEngine eng(ctx);
    auto orbits = eng.enumerate_all_orbits();
    json j = orbit_partition_to_json(ctx, orbits);
    CHECK(j.at("format_version") == kCacheFormatVersion);
    CHECK(j.at("orbits").size() == 49);

    auto dir = std::filesystem::temp_directory_path() / "symporb_cache_test";
    std::filesystem::remove_all(dir);
    Cache cache(dir);
    cache.write(ctx, "orbits", j);
    CHECK(cache.read(ctx, "orbits") == j);

    // byte-identical on rebuild
    std::string raw1 = cache.read_raw(ctx, "orbits");
    cache.write(ctx, "orbits", orbit_partition_to_json(ctx, eng.enumerate_all_orbits()));
    CHECK(cache.read_raw(ctx, "orbits") == raw1);

    CHECK_THROWS_AS(cache.read(ctx, "missing"), missing_artifact_error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("canonical form JSON") {
    Context ctx(3, 7);
    RookPlacement d(3, {Root::sum(1, 2), Root::long_root(3)});
    RootMap<long> xi{{Root::sum(1, 2), 2}, {Root::long_root(3), 5}};
    json j = canonical_form_to_json(canonical_form(ctx, d, xi));
    CHECK(j.at("D").size() == 2);
    CHECK(j.at("xi").at("e1+e2") == 2);
    CHECK(j.at("xi").at("2e3") == 5);
}

TEST_CASE("coefficient list grammar") {
    auto m = parse_coeff_list("2e1=2,e1+e2=3");
    CHECK(m.size() == 2);
    CHECK(m.at(Root::long_root(1)) == 2);
    CHECK(m.at(Root::sum(1, 2)) == 3);

    auto defaulted = parse_coeff_list("2e1,2e2");
    CHECK(defaulted.at(Root::long_root(1)) == 1);
    CHECK(defaulted.at(Root::long_root(2)) == 1);

    CHECK(parse_coeff_list("").empty());
    CHECK(parse_root_list("2e1,e1-e2").size() == 2);
    CHECK_THROWS_AS(parse_coeff_list("nope=1"), validation_error);
}
