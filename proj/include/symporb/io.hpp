#ifndef SYMPORB_IO_HPP_
#define SYMPORB_IO_HPP_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "symporb/cyclo.hpp"
#include "symporb/errors.hpp"
#include "symporb/lie.hpp"
#include "symporb/maxdim.hpp"
#include "symporb/orbits.hpp"
#include "symporb/polarization.hpp"

namespace symporb {

using json = nlohmann::ordered_json;

inline constexpr int kCacheFormatVersion = 1;

inline json cyclo_to_json(const CycloNum& v) {
    json coeffs = json::array();
    for (const auto& q : v.coeffs()) coeffs.push_back(q.get_str());
    return json{{"p", v.p()}, {"coeffs", coeffs}};
}

inline CycloNum cyclo_from_json(const json& j) {
    long p = j.at("p").get<long>();
    CycloNum v(p);
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != static_cast<size_t>(p - 1))
        throw validation_error("cyclo_from_json: wrong coefficient count");
    CycloNum out(p);
    size_t k = 0;
    for (const auto& s : coeffs) {
        CycloNum term = CycloNum::zeta_power(p, static_cast<long>(k));
        term.scale(mpq_class(s.get<std::string>()));
        out += term;
        ++k;
    }
    return out;
}

// {"n":n,"p":p,"coeffs":{"2e1":c,...}}, zero coefficients omitted, keys in
// increasing prec_prime order.
inline json form_to_json(const LinearForm& f) {
    const Context& ctx = f.context();
    json coeffs = json::object();
    const auto phi = positive_roots(ctx.n);
    for (size_t k = 0; k < phi.size(); ++k)
        if (f.coeff(k)) coeffs[root_name(phi[k])] = f.coeff(k);
    return json{{"n", ctx.n}, {"p", ctx.p}, {"coeffs", coeffs}};
}

inline LinearForm form_from_json(const json& j) {
    Context ctx(j.at("n").get<int>(), j.at("p").get<long>());
    const auto phi = positive_roots(ctx.n);
    LinearForm f(ctx);
    for (const auto& [key, value] : j.at("coeffs").items()) {
        Root r = parse_root(key);
        bool found = false;
        for (size_t k = 0; k < phi.size(); ++k)
            if (phi[k] == r) {
                f.set_coeff(k, value.get<long>());
                found = true;
            }
        if (!found) throw validation_error("form_from_json: root out of range: " + key);
    }
    return f;
}

inline json umatrix_to_json(const UMatrix& x) {
    const Context& ctx = x.context();
    json coeffs = json::object();
    const auto phi = positive_roots(ctx.n);
    for (const Root& a : phi)
        if (long v = x.coeff(a)) coeffs[root_name(a)] = v;
    return json{{"n", ctx.n}, {"p", ctx.p}, {"coeffs", coeffs}};
}

inline json placement_to_json(const RookPlacement& D) {
    json arr = json::array();
    for (const Root& a : D.roots()) arr.push_back(root_name(a));
    return arr;
}

inline json canonical_form_to_json(const CanonicalForm& cf) {
    json xi = json::object();
    for (const auto& [root, value] : cf.xi) xi[root_name(root)] = value;
    return json{{"D", placement_to_json(cf.D)}, {"xi", xi}};
}

inline json orbit_to_json(const Orbit& orb) {
    return json{{"representative", form_to_json(orb.representative)},
                {"size", orb.size},
                {"dimension", orb.dimension}};
}

inline json orbit_partition_to_json(const Context& ctx, const std::vector<Orbit>& orbits) {
    json arr = json::array();
    for (const Orbit& o : orbits) arr.push_back(orbit_to_json(o));
    return json{{"format_version", kCacheFormatVersion},
                {"n", ctx.n},
                {"p", ctx.p},
                {"orbits", arr}};
}

// Advisory cache: one directory per (n, p), recomputable at will.
class Cache {
  public:
    explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::filesystem::path entry_path(const Context& ctx, const std::string& name) const {
        return dir_ / (std::string("n") + std::to_string(ctx.n) + "_p" + std::to_string(ctx.p)) /
               (name + ".json");
    }

    void write(const Context& ctx, const std::string& name, const json& payload) const {
        auto path = entry_path(ctx, name);
        std::filesystem::create_directories(path.parent_path());
        std::ofstream out(path);
        out << payload.dump(2) << "\n";
    }

    std::string read_raw(const Context& ctx, const std::string& name) const {
        auto path = entry_path(ctx, name);
        std::ifstream in(path);
        if (!in) throw missing_artifact_error("cache entry missing: " + path.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    json read(const Context& ctx, const std::string& name) const {
        json j = json::parse(read_raw(ctx, name));
        if (j.contains("format_version") &&
            j.at("format_version").get<int>() != kCacheFormatVersion)
            throw validation_error("cache entry has an unsupported format version");
        return j;
    }

  private:
    std::filesystem::path dir_;
};

// "2e1=1,e1+e2=3" -> coefficient map; missing values default to 1 when a
// bare root list is given.
inline RootMap<long> parse_coeff_list(const std::string& s, long fallback = 1) {
    RootMap<long> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            out[parse_root(item)] = fallback;
        else
            out[parse_root(item.substr(0, eq))] = std::stol(item.substr(eq + 1));
    }
    return out;
}

inline std::vector<Root> parse_root_list(const std::string& s) {
    std::vector<Root> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_root(item));
    return out;
}

}  // namespace symporb

#endif
