#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "equiloc/coadjoint.hpp"
#include "equiloc/equivalence.hpp"
#include "equiloc/polytope.hpp"

namespace equiloc {

using Json = nlohmann::ordered_json;

namespace detail {

inline Rational json_rational(const Json& j, const std::string& field) {
    try {
        if (j.is_string())
            return parse_rational(j.get<std::string>());
        if (j.is_number_integer())
            return Rational(j.get<long long>());
    } catch (const ParseError& e) {
        throw ParseError(field + ": " + e.what());
    }
    throw ParseError(field + ": expected a rational as string or integer");
}

inline LatticeVector json_lattice_vector(const Json& j,
                                         const std::string& field) {
    if (!j.is_array())
        throw ParseError(field + ": expected an array of integers");
    LatticeVector v;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw ParseError(field + ": expected an array of integers");
        v.push_back(x.get<std::int64_t>());
    }
    return v;
}

} // namespace detail

/// Manifold input: either a raw half-space description
///   {"n": 2, "halfspaces": [{"normal": [-1,0], "offset": "0"}, ...]}
/// or a named model
///   {"model": {"kind": "hirzebruch", "k": 1, "sigma": "1", "tau": "2"}}.
inline DelzantPolytope parse_manifold(const Json& j) {
    if (j.contains("model")) {
        const Json& m = j.at("model");
        if (!m.contains("kind") || !m.at("kind").is_string())
            throw ParseError("model.kind: expected a string");
        std::string kind = m.at("kind").get<std::string>();
        if (kind == "simplex") {
            if (!m.contains("n") || !m.at("n").is_number_integer())
                throw ParseError("model.n: expected an integer");
            return build_simplex(m.at("n").get<std::size_t>(),
                                 detail::json_rational(m.at("sigma"),
                                                       "model.sigma"));
        }
        Rational sigma = detail::json_rational(m.at("sigma"), "model.sigma");
        Rational tau = detail::json_rational(m.at("tau"), "model.tau");
        if (kind == "hirzebruch") {
            if (!m.contains("k") || !m.at("k").is_number_integer())
                throw ParseError("model.k: expected an integer");
            return build_hirzebruch(m.at("k").get<std::int64_t>(), sigma, tau);
        }
        if (kind == "pl_bundle") {
            auto a = detail::json_lattice_vector(m.at("a"), "model.a");
            return build_pl_bundle(std::vector<std::int64_t>(a.begin(), a.end()),
                                   sigma, tau);
        }
        if (kind == "product_of_segments" || kind == "s2xs2")
            return build_product_of_segments(sigma, tau);
        throw ParseError("model.kind: unknown model '" + kind + "'");
    }
    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw ParseError("n: expected an integer");
    if (!j.contains("halfspaces") || !j.at("halfspaces").is_array())
        throw ParseError("halfspaces: expected an array");
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<HalfSpace> hs;
    std::size_t idx = 0;
    for (const auto& h : j.at("halfspaces")) {
        std::string where = "halfspaces[" + std::to_string(idx++) + "]";
        if (!h.contains("normal") || !h.contains("offset"))
            throw ParseError(where + ": expected fields normal, offset");
        hs.push_back({detail::json_lattice_vector(h.at("normal"),
                                                  where + ".normal"),
                      detail::json_rational(h.at("offset"), where + ".offset")});
    }
    return DelzantPolytope::from_halfspaces(n, std::move(hs));
}

/// Orbit input: {"orbit": {"n": 4, "spectrum": ["1","1","0","0"]},
///               "vector": [3,1,-1,-3]}.
inline OrbitSpec parse_orbit(const Json& j) {
    if (!j.contains("orbit"))
        throw ParseError("orbit: missing field");
    const Json& o = j.at("orbit");
    if (!o.contains("n") || !o.at("n").is_number_integer())
        throw ParseError("orbit.n: expected an integer");
    if (!o.contains("spectrum") || !o.at("spectrum").is_array())
        throw ParseError("orbit.spectrum: expected an array");
    std::vector<Rational> spectrum;
    std::size_t idx = 0;
    for (const auto& r : o.at("spectrum"))
        spectrum.push_back(detail::json_rational(
            r, "orbit.spectrum[" + std::to_string(idx++) + "]"));
    return OrbitSpec::create(o.at("n").get<int>(), std::move(spectrum));
}

inline Json polytope_to_json(const DelzantPolytope& P) {
    Json j;
    j["n"] = P.dimension();
    j["halfspaces"] = Json::array();
    for (const auto& h : P.halfspaces()) {
        Json hj;
        hj["normal"] = h.normal;
        hj["offset"] = to_string(h.offset);
        j["halfspaces"].push_back(std::move(hj));
    }
    j["vertices"] = Json::array();
    for (const auto& v : P.vertices()) {
        Json vj = Json::array();
        for (const auto& c : v)
            vj.push_back(to_string(c));
        j["vertices"].push_back(std::move(vj));
    }
    return j;
}

// ---------------------------------------------------------------------------
// Exponential sums

namespace detail {

inline Json linform_to_json(const LinForm& f) {
    Json a = Json::array();
    for (std::size_t i = 0; i <= f.symbol_count(); ++i)
        a.push_back(to_string(f[i]));
    return a;
}

inline LinForm json_to_linform(const Json& j, std::size_t nsyms) {
    if (!j.is_array() || j.size() != nsyms + 1)
        throw ParseError("freq: expected an array of length " +
                         std::to_string(nsyms + 1));
    LinForm f(nsyms);
    for (std::size_t i = 0; i <= nsyms; ++i)
        f[i] = json_rational(j.at(i), "freq[" + std::to_string(i) + "]");
    return f;
}

inline Json coeff_to_json(const Rational& c) { return to_string(c); }

inline Json coeff_to_json(const SymPoly& c) {
    Json a = Json::array();
    for (const auto& [mono, q] : c.terms()) {
        Json t;
        t["exps"] = mono;
        t["q"] = to_string(q);
        a.push_back(std::move(t));
    }
    return a;
}

inline void coeff_from_json(const Json& j, Rational& out) {
    out = json_rational(j, "coefficient");
}

inline void coeff_from_json(const Json& j, SymPoly& out) {
    if (!j.is_array())
        throw ParseError("coefficient: expected an array of monomials");
    out = SymPoly();
    for (const auto& t : j) {
        std::vector<int> mono = t.at("exps").get<std::vector<int>>();
        out.add_term(mono, json_rational(t.at("q"), "coefficient.q"));
    }
}

} // namespace detail

/// Term list sorted by frequency (the canonical map order), each term a
/// frequency coordinate array and a Laurent coefficient.
template <class K>
Json expsum_to_json(const ExpSum<K>& E,
                    const std::vector<std::string>& symbols = {}) {
    Json j;
    j["symbols"] = symbols;
    j["terms"] = Json::array();
    for (const auto& [f, c] : E.terms()) {
        Json t;
        t["freq"] = detail::linform_to_json(f);
        Json coeff = Json::array();
        for (const auto& [d, q] : c.coefficients()) {
            Json mono;
            mono["deg"] = d;
            mono["c"] = detail::coeff_to_json(q);
            coeff.push_back(std::move(mono));
        }
        t["coeff"] = std::move(coeff);
        j["terms"].push_back(std::move(t));
    }
    return j;
}

template <class K>
ExpSum<K> expsum_from_json(const Json& j) {
    if (!j.contains("symbols") || !j.contains("terms"))
        throw ParseError("expsum: expected fields symbols, terms");
    std::size_t nsyms = j.at("symbols").size();
    ExpSum<K> E(nsyms);
    for (const auto& t : j.at("terms")) {
        LinForm f = detail::json_to_linform(t.at("freq"), nsyms);
        LaurentPoly<K> c;
        for (const auto& mono : t.at("coeff")) {
            K q;
            detail::coeff_from_json(mono.at("c"), q);
            c.add_term(mono.at("deg").get<int>(), q);
        }
        E.add_term(f, c);
    }
    return E;
}

inline Json verdict_to_json(const Verdict& v) {
    Json j;
    j["status"] = status_name(v.status);
    j["witness"] = v.witness;
    j["tests_run"] = v.tests_run;
    return j;
}

} // namespace equiloc
