// Command-line front end: orbit partitions, character tables, theorem
// verification suites, and cache export.
#include <CLI11.hpp>

#include <atomic>
#include <iostream>
#include <set>
#include <random>
#include <thread>

#include "symporb/symporb.hpp"

using namespace symporb;

namespace {

struct JobConfig {
    int n = 2;
    long p = 5;
    std::uint64_t cap = kDefaultOrbitCap;
    int jobs = 1;
    std::string cache_dir = "symporb-cache";
    bool strict = false;

    Context context() const {
        Context ctx(n, p);
        ctx.require_exp_log();
        if (cap < 1) throw validation_error("cap must be >= 1");
        return ctx;
    }
};

// Deterministic work splitting; results land in caller-indexed slots.
void parallel_for(int jobs, size_t count, const std::function<void(size_t)>& body) {
    if (jobs <= 1 || count < 2) {
        for (size_t k = 0; k < count; ++k) body(k);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    int width = std::min<int>(jobs, static_cast<int>(count));
    for (int t = 0; t < width; ++t)
        pool.emplace_back([&]() {
            for (size_t k = next++; k < count; k = next++) body(k);
        });
    for (auto& th : pool) th.join();
}

RootMap<long> ones(const RookPlacement& D) {
    RootMap<long> xi;
    for (const Root& b : D.roots()) xi[b] = 1;
    return xi;
}

GroupElement random_element(std::mt19937& rng, const Context& ctx) {
    std::uniform_int_distribution<long> pick(0, ctx.p - 1);
    std::vector<long> c(static_cast<size_t>(ctx.dim_u()));
    for (auto& v : c) v = pick(rng);
    return exp_u(UMatrix::from_coeffs(ctx, c));
}

// --- orbits ---------------------------------------------------------------

int cmd_orbits(const JobConfig& cfg, bool full) {
    Context ctx = cfg.context();
    OrbitEngine eng(ctx);
    Cache cache(cfg.cache_dir);
    json out;
    if (full) {
        auto orbits = eng.enumerate_all_orbits(cfg.cap);
        std::map<int, int> by_dim;
        std::uint64_t total = 0;
        for (const Orbit& o : orbits) {
            ++by_dim[o.dimension];
            total += o.size;
        }
        json payload = orbit_partition_to_json(ctx, orbits);
        cache.write(ctx, "orbits_full", payload);
        out["mode"] = "full";
        out["forms"] = total;
        out["orbit_count"] = orbits.size();
        json dims = json::object();
        for (auto [dim, count] : by_dim) dims[std::to_string(dim)] = count;
        out["orbits_by_dimension"] = dims;
    } else {
        std::vector<Orbit> orbits;
        for (const RookPlacement& d : enumerate_orthogonal_placements(ctx.n)) {
            LinearForm f = form_of(ctx, d, ones(d));
            orbits.push_back(eng.orbit_of(f, cfg.cap, /*materialize=*/false));
        }
        json payload = orbit_partition_to_json(ctx, orbits);
        cache.write(ctx, "orbits_rook", payload);
        out["mode"] = "rook-only";
        out["orbit_count"] = orbits.size();
    }
    out["n"] = ctx.n;
    out["p"] = ctx.p;
    std::cout << out.dump(2) << "\n";
    return 0;
}

// --- character ------------------------------------------------------------

// Conjugacy classes of the whole group: adjoint partition of u.
std::vector<ConjClass> all_conjugacy_classes(const OrbitEngine& eng, std::uint64_t cap) {
    const Context& ctx = eng.context();
    const std::uint64_t total = checked_pow(ctx.p, ctx.dim_u(), cap);
    std::vector<bool> visited(total, false);
    std::vector<ConjClass> out;
    for (std::uint64_t start = 0; start < total; ++start) {
        if (visited[start]) continue;
        ConjClass cls =
            eng.conjugacy_class_of(UMatrix::from_coeffs(ctx, decode_coeffs(ctx, start)), total);
        for (std::uint64_t e : *cls.elements) visited[e] = true;
        out.push_back(std::move(cls));
    }
    return out;
}

int cmd_character(const JobConfig& cfg, const std::string& d_arg, const std::string& xi_arg,
                  const std::string& methods_arg, const std::string& phi_arg) {
    Context ctx = cfg.context();
    std::vector<Root> d_roots = parse_root_list(d_arg);
    if (!is_orthogonal_placement(ctx.n, d_roots))
        throw validation_error("-D is not an orthogonal rook placement");
    RookPlacement D(ctx.n, d_roots);
    RootMap<long> xi = xi_arg.empty() ? ones(D) : parse_coeff_list(xi_arg);

    std::vector<std::string> methods;
    {
        std::stringstream ss(methods_arg);
        std::string item;
        while (std::getline(ss, item, ',')) methods.push_back(item);
    }
    if (methods.empty()) methods = {"kirillov"};

    OrbitEngine eng(ctx);
    bool closed_form = std::count(methods.begin(), methods.end(), "closed-form") > 0;

    std::optional<MaxDimDatum> datum;
    if (closed_form) {
        bool tiling = false;
        for (const RookPlacement& t : maximal_orthogonal_subsets_of_dreg(ctx.n))
            if (t == D) tiling = true;
        if (!tiling)
            throw inapplicable_error(
                "closed-form needs D to be a maximal orthogonal subset of D_reg");
        datum = make_maxdim_datum(ctx, D, xi);
    }

    std::vector<std::function<CycloNum(const GroupElement&)>> evals;
    for (const std::string& m : methods) {
        if (m == "kirillov") {
            evals.push_back(kirillov_character(eng.orbit_of(form_of(ctx, D, xi), cfg.cap)).eval);
        } else if (m == "induced") {
            evals.push_back(induced_from_polarization(eng, D, xi, cfg.cap).eval);
        } else if (m == "mackey") {
            evals.push_back(mackey_decomposition(eng, D, xi, cfg.cap).eval);
        } else if (m == "closed-form") {
            // handled per support class below
        } else {
            throw validation_error("unknown method: " + m);
        }
    }

    json rows = json::array();
    if (closed_form) {
        std::vector<SupportClass> classes;
        if (phi_arg.empty()) {
            classes = support_classes(eng, *datum, cfg.cap);
        } else {
            // a single class K_{D*}(phi), named by its phi assignment
            RootMap<long> phi = parse_coeff_list(phi_arg);
            std::vector<Root> dstar;
            auto dp = d_prime(D);
            for (const auto& [root, value] : phi) {
                if (!std::count(dp.begin(), dp.end(), root))
                    throw validation_error("--phi names " + root_name(root) +
                                           " outside D'");
                if (fp_norm(value, ctx.p) == 0)
                    throw validation_error("--phi values must be nonzero");
                dstar.push_back(root);
            }
            if (!is_orthogonal_placement(ctx.n, dstar))
                throw validation_error("--phi support is not an orthogonal placement");
            ConjClass cls = eng.conjugacy_class_of(x_of(ctx, dstar, phi), cfg.cap);
            classes.push_back(SupportClass{dstar, phi, std::move(cls)});
        }
        for (const SupportClass& sc : classes) {
            CycloNum value = char_value_closed_form(ctx, *datum, sc.Dstar, sc.phi);
            GroupElement rep = exp_u(x_of(ctx, sc.Dstar, sc.phi));
            for (const auto& eval : evals)
                if (!(eval(rep) == value))
                    throw internal_error("methods disagree on a support class");
            json row;
            row["class_rep"] = umatrix_to_json(sc.cls.log_representative);
            row["class_size"] = sc.cls.size;
            row["value"] = cyclo_to_json(value);
            row["oracle_checked"] = !evals.empty();
            rows.push_back(std::move(row));
        }
    } else {
        if (evals.empty()) throw validation_error("no usable method requested");
        for (const ConjClass& cls : all_conjugacy_classes(eng, cfg.cap)) {
            GroupElement rep = exp_u(cls.log_representative);
            CycloNum value = evals.front()(rep);
            for (size_t k = 1; k < evals.size(); ++k)
                if (!(evals[k](rep) == value))
                    throw internal_error("methods disagree on a conjugacy class");
            json row;
            row["class_rep"] = umatrix_to_json(cls.log_representative);
            row["class_size"] = cls.size;
            row["value"] = cyclo_to_json(value);
            rows.push_back(std::move(row));
        }
    }

    json out;
    out["n"] = ctx.n;
    out["p"] = ctx.p;
    out["D"] = placement_to_json(D);
    json xi_json = json::object();
    for (const auto& [root, value] : xi) xi_json[root_name(root)] = value;
    out["xi"] = xi_json;
    out["method"] = methods_arg;
    out["values"] = rows;
    std::cout << out.dump(2) << "\n";
    return 0;
}

// --- verify ---------------------------------------------------------------

struct SuiteReport {
    explicit SuiteReport(std::string suite) : name(std::move(suite)) {}

    std::string name;
    long checks_run = 0;
    std::vector<std::string> failures;
    bool skipped = false;
    std::string skip_reason;
};

void check(SuiteReport& r, bool ok, const std::string& what) {
    ++r.checks_run;
    if (!ok) r.failures.push_back(what);
}

SuiteReport suite_gauss(const JobConfig&) {
    SuiteReport r("gauss");
    for (long p : {5L, 7L, 11L, 13L}) {
        CycloNum g = gauss_sum(p);
        check(r, g * g == CycloNum(p, eta(p - 1, p) * mpq_class(p)),
              "G^2 = eta(-1) p at p=" + std::to_string(p));
        check(r, g.conj() * g == CycloNum(p, p), "conj(G) G = p at p=" + std::to_string(p));
        CycloNum total(p);
        for (long c = 0; c < p; ++c) total += theta(c, p);
        check(r, total.is_zero(), "sum of theta over F_p vanishes at p=" + std::to_string(p));
    }
    return r;
}

SuiteReport suite_count(const JobConfig& cfg) {
    SuiteReport r("count");
    for (int k = 1; k <= std::max(cfg.n, 6); ++k)
        for (long p : {5L, 7L, 11L, 13L})
            check(r, count_maxdim(k, p) == maxdim_section_size(k, p),
                  "recurrence vs section at n=" + std::to_string(k) + ", p=" + std::to_string(p));
    Context ctx = cfg.context();
    std::uint64_t forms = 1;
    bool capped = false;
    for (int k = 0; k < ctx.dim_u(); ++k) {
        forms *= static_cast<std::uint64_t>(ctx.p);
        if (forms > cfg.cap) {
            capped = true;
            break;
        }
    }
    if (!capped) {
        OrbitEngine eng(ctx);
        long long found = 0;
        for (const Orbit& o : eng.enumerate_all_orbits(cfg.cap))
            if (o.dimension == ctx.n * (ctx.n - 1)) ++found;
        check(r, found == count_maxdim(ctx.n, ctx.p), "brute-force count at the configured (n,p)");
    }
    return r;
}

SuiteReport suite_polarization(const JobConfig& cfg) {
    SuiteReport r("polarization");
    Context ctx = cfg.context();
    if (ctx.n > 4) {
        r.skipped = true;
        r.skip_reason = "rank above the placement-enumeration bound";
        return r;
    }
    RootTable tab(ctx);
    std::mt19937 rng(97);
    std::uniform_int_distribution<long> pick(1, ctx.p - 1);
    for (const RookPlacement& d : enumerate_orthogonal_placements(ctx.n)) {
        for (int trial = 0; trial < 4; ++trial) {
            RootMap<long> xi;
            for (const Root& b : d.roots()) xi[b] = trial == 0 ? 1 : pick(rng);
            bool ok = true;
            std::string why;
            try {
                polarization(tab, d, xi);
            } catch (const error& e) {
                ok = false;
                why = e.what();
            }
            check(r, ok, "polarization axioms for a placement of size " +
                             std::to_string(d.size()) + (why.empty() ? "" : ": " + why));
        }
    }
    return r;
}

std::vector<RookPlacement> sample_placements(int n, size_t want) {
    auto tilings = maximal_orthogonal_subsets_of_dreg(n);
    std::vector<RookPlacement> out(tilings.begin(), tilings.end());
    for (const RookPlacement& d : enumerate_orthogonal_placements(std::min(n, 4))) {
        if (out.size() >= want) break;
        if (d.empty()) continue;
        if (std::count(out.begin(), out.end(), d)) continue;
        out.push_back(d);
    }
    if (out.size() > want) out.resize(want);
    return out;
}

SuiteReport suite_mackey(const JobConfig& cfg, long samples) {
    SuiteReport r("mackey");
    Context ctx = cfg.context();
    OrbitEngine eng(ctx);
    std::uint64_t group = 1;
    bool small = true;
    for (int k = 0; k < ctx.dim_u(); ++k) {
        group *= static_cast<std::uint64_t>(ctx.p);
        if (group > cfg.cap) {
            small = false;
            break;
        }
    }
    if (checked_pow(ctx.p, ctx.n * (ctx.n - 1), UINT64_MAX) > cfg.cap) {
        r.skipped = true;
        r.skip_reason = "maximal orbit size exceeds the cap";
        return r;
    }
    auto run_placement = [&](const RookPlacement& d) {
        RootMap<long> xi = ones(d);
        ClassFunction mack = mackey_decomposition(eng, d, xi, cfg.cap);
        ClassFunction kir = kirillov_character(eng.orbit_of(form_of(ctx, d, xi), cfg.cap));
        std::atomic<long> bad{0};
        if (small) {
            parallel_for(cfg.jobs, group, [&](size_t code) {
                GroupElement g = exp_u(UMatrix::from_coeffs(
                    ctx, decode_coeffs(ctx, static_cast<std::uint64_t>(code))));
                if (!(mack(g) == kir(g))) ++bad;
            });
            check(r, bad == 0, "mackey vs kirillov, full group, |D|=" + std::to_string(d.size()));
        } else {
            std::vector<GroupElement> pts;
            std::mt19937 rng(101);
            for (long k = 0; k < samples; ++k) pts.push_back(random_element(rng, ctx));
            parallel_for(cfg.jobs, pts.size(), [&](size_t k) {
                if (!(mack(pts[k]) == kir(pts[k]))) ++bad;
            });
            check(r, bad == 0, "mackey vs kirillov, sampled, |D|=" + std::to_string(d.size()));
        }
    };
    if (small) {
        for (const RookPlacement& d : enumerate_orthogonal_placements(ctx.n)) run_placement(d);
    } else {
        for (const RookPlacement& d : sample_placements(ctx.n, 5)) run_placement(d);
    }
    return r;
}

SuiteReport suite_support(const JobConfig& cfg, long samples) {
    SuiteReport r("support");
    Context ctx = cfg.context();
    OrbitEngine eng(ctx);
    std::uint64_t group = 1;
    bool small = true;
    for (int k = 0; k < ctx.dim_u(); ++k) {
        group *= static_cast<std::uint64_t>(ctx.p);
        if (group > cfg.cap) {
            small = false;
            break;
        }
    }
    if (checked_pow(ctx.p, ctx.n * (ctx.n - 1), UINT64_MAX) > cfg.cap) {
        r.skipped = true;
        r.skip_reason = "maximal orbit size exceeds the cap";
        return r;
    }
    std::mt19937 rng(103);
    std::vector<MaxDimDatum> data;
    if (small) {
        data = maxdim_section(ctx);
    } else {
        for (const RookPlacement& d : maximal_orthogonal_subsets_of_dreg(ctx.n))
            data.push_back(make_maxdim_datum(ctx, d, ones(d)));
    }
    for (const MaxDimDatum& datum : data) {
        ClassFunction kir = kirillov_character(eng.orbit_of(datum.form, cfg.cap));
        std::set<std::uint64_t> support;
        bool disjoint = true;
        for (const SupportClass& sc : support_classes(eng, datum, cfg.cap))
            for (std::uint64_t code : *sc.cls.elements)
                disjoint = support.insert(code).second && disjoint;
        check(r, disjoint, "support classes are pairwise disjoint");
        if (small) {
            bool exact = true;
            for (std::uint64_t code = 0; code < group && exact; ++code) {
                GroupElement g = exp_u(UMatrix::from_coeffs(ctx, decode_coeffs(ctx, code)));
                exact = (!kir(g).is_zero()) == (support.count(code) == 1);
            }
            check(r, exact, "support equals the union of the K classes (full group)");
        } else {
            bool exact = true;
            for (long k = 0; k < samples && exact; ++k) {
                GroupElement g = random_element(rng, ctx);
                std::uint64_t code = encode_coeffs(ctx, log_u(g).coeffs());
                exact = (!kir(g).is_zero()) == (support.count(code) == 1);
            }
            check(r, exact, "support matches on random samples");
        }
    }
    return r;
}

SuiteReport suite_charvalue(const JobConfig& cfg) {
    SuiteReport r("charvalue");
    Context ctx = cfg.context();
    OrbitEngine eng(ctx);
    if (checked_pow(ctx.p, ctx.n * (ctx.n - 1), UINT64_MAX) > cfg.cap) {
        r.skipped = true;
        r.skip_reason = "maximal orbit size exceeds the cap";
        return r;
    }
    std::vector<MaxDimDatum> data;
    if (ctx.n <= 2) {
        data = maxdim_section(ctx);
    } else {
        std::mt19937 rng(107);
        std::uniform_int_distribution<long> pick(1, ctx.p - 1);
        for (const RookPlacement& d : maximal_orthogonal_subsets_of_dreg(ctx.n)) {
            data.push_back(make_maxdim_datum(ctx, d, ones(d)));
            RootMap<long> xi;
            for (const Root& b : d.roots()) xi[b] = pick(rng);
            data.push_back(make_maxdim_datum(ctx, d, xi));
        }
    }
    for (const MaxDimDatum& datum : data) {
        ClassFunction kir = kirillov_character(eng.orbit_of(datum.form, cfg.cap));
        auto classes = support_classes(eng, datum, cfg.cap, /*materialize=*/false);
        std::atomic<long> bad{0};
        parallel_for(cfg.jobs, classes.size(), [&](size_t k) {
            const SupportClass& sc = classes[k];
            GroupElement rep = exp_u(x_of(ctx, sc.Dstar, sc.phi));
            if (!(kir(rep) == char_value_closed_form(ctx, datum, sc.Dstar, sc.phi))) ++bad;
        });
        check(r, bad == 0, "closed form vs kirillov on all support classes of a datum");
    }
    return r;
}

int cmd_verify(const JobConfig& cfg, const std::string& suite, long samples) {
    std::vector<SuiteReport> reports;
    auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
    if (want("gauss")) reports.push_back(suite_gauss(cfg));
    if (want("count")) reports.push_back(suite_count(cfg));
    if (want("polarization")) reports.push_back(suite_polarization(cfg));
    if (want("mackey")) reports.push_back(suite_mackey(cfg, samples));
    if (want("support")) reports.push_back(suite_support(cfg, samples));
    if (want("charvalue")) reports.push_back(suite_charvalue(cfg));
    if (reports.empty()) throw validation_error("unknown suite: " + suite);

    json out = json::array();
    bool failed = false, skipped = false;
    for (const SuiteReport& r : reports) {
        json j;
        j["suite"] = r.name;
        j["checks_run"] = r.checks_run;
        j["failures"] = r.failures;
        if (r.skipped) j["skipped"] = r.skip_reason;
        out.push_back(j);
        failed = failed || !r.failures.empty();
        skipped = skipped || r.skipped;
    }
    std::cout << out.dump(2) << "\n";
    if (failed) return 1;
    if (skipped && cfg.strict) return 2;
    return 0;
}

int cmd_export(const JobConfig& cfg, const std::string& ref) {
    auto slash = ref.find('/');
    if (slash == std::string::npos)
        throw validation_error("cache ref must look like n2_p5/orbits_full");
    std::string dir = ref.substr(0, slash), name = ref.substr(slash + 1);
    int n = 0;
    long p = 0;
    if (std::sscanf(dir.c_str(), "n%d_p%ld", &n, &p) != 2)
        throw validation_error("cache ref must look like n2_p5/orbits_full");
    Cache cache(cfg.cache_dir);
    std::cout << cache.read_raw(Context(n, p), name);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "coadjoint orbits and characters of the maximal unipotent subgroup of Sp_2n(F_p)"};
    app.require_subcommand(1);
    app.fallthrough();

    JobConfig cfg;
    app.add_option("-n,--rank", cfg.n, "rank of the root system C_n");
    app.add_option("-p,--prime", cfg.p, "odd prime, at least 2n");
    app.add_option("--cap", cfg.cap, "enumeration cap");
    app.add_option("--jobs", cfg.jobs, "worker parallelism");
    app.add_option("--cache-dir", cfg.cache_dir, "cache directory");
    app.add_flag("--strict", cfg.strict, "fail when a suite is skipped");

    auto* orbits = app.add_subcommand("orbits", "orbit partition of u*");
    bool full = false, rook_only = false;
    orbits->add_flag("--full", full, "enumerate all of u*");
    orbits->add_flag("--rook-only", rook_only, "orbits of canonical forms only");

    auto* character = app.add_subcommand("character", "character table for an orbit");
    std::string d_arg, xi_arg, phi_arg, methods = "kirillov";
    character->add_option("-D,--placement", d_arg, "rook placement, e.g. 2e1,2e2")->required();
    character->add_option("--xi", xi_arg, "coefficients, e.g. 2e1=1,2e2=3 (default all 1)");
    character->add_option("--phi", phi_arg,
                          "closed-form only: evaluate the single class K_{D*}(phi)");
    character->add_option("--method", methods,
                          "kirillov|induced|mackey|closed-form, comma separated");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    long samples = 10000;
    verify->add_option("suite", suite, "polarization|mackey|support|charvalue|count|gauss|all");
    verify->add_option("--samples", samples, "sample count for large groups");

    auto* exp_cmd = app.add_subcommand("export", "re-emit a cache entry byte-exactly");
    std::string ref;
    exp_cmd->add_option("ref", ref, "cache reference, e.g. n2_p5/orbits_full")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (orbits->parsed()) return cmd_orbits(cfg, full || !rook_only);
        if (character->parsed()) return cmd_character(cfg, d_arg, xi_arg, methods, phi_arg);
        if (verify->parsed()) return cmd_verify(cfg, suite, samples);
        if (exp_cmd->parsed()) return cmd_export(cfg, ref);
    } catch (const resource_error& e) {
        std::cerr << "resource: " << e.what() << "\n";
        return 2;
    } catch (const inapplicable_error& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return 4;
    } catch (const missing_artifact_error& e) {
        std::cerr << "missing: " << e.what() << "\n";
        return 5;
    } catch (const validation_error& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
