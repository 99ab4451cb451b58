// equiloc: exact localization invariants of Hamiltonian circle actions on
// toric manifolds and SU(n) coadjoint orbits, with the associated decision
// procedures. All arithmetic is exact; output is deterministic.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "equiloc/equiloc.hpp"

namespace {

using namespace equiloc;

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

LatticeVector parse_vector_arg(const std::string& text) {
    LatticeVector v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            v.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw ParseError("invalid integer '" + tok + "' in vector '" +
                             text + "'");
        }
    }
    if (v.empty())
        throw ParseError("empty vector argument");
    return v;
}

struct ManifoldArgs {
    std::string file;
    std::string model;
    std::int64_t k = 0;
    std::string sigma = "1";
    std::string tau = "1";
    std::string a; // comma-separated twists for pl_bundle
    std::size_t n = 2;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--manifold,--file", file, "manifold JSON file");
        cmd->add_option("--model", model,
                        "model kind: simplex|hirzebruch|pl_bundle|s2xs2");
        cmd->add_option("--k", k, "Hirzebruch twist");
        cmd->add_option("--sigma", sigma, "area parameter sigma");
        cmd->add_option("--tau", tau, "area parameter tau");
        cmd->add_option("--a", a, "bundle twist vector, comma separated");
        cmd->add_option("--n", n, "dimension (simplex model)");
    }

    DelzantPolytope build() const {
        if (!file.empty() && !model.empty())
            throw ParseError("give either --manifold FILE or --model, not both");
        if (!file.empty())
            return parse_manifold(load_json_file(file));
        if (model == "simplex")
            return build_simplex(n, parse_rational(sigma));
        if (model == "hirzebruch")
            return build_hirzebruch(k, parse_rational(sigma),
                                    parse_rational(tau));
        if (model == "pl_bundle") {
            std::vector<std::int64_t> twists;
            for (auto x : parse_vector_arg(a))
                twists.push_back(x);
            return build_pl_bundle(twists, parse_rational(sigma),
                                   parse_rational(tau));
        }
        if (model == "s2xs2" || model == "product_of_segments")
            return build_product_of_segments(parse_rational(sigma),
                                             parse_rational(tau));
        throw ParseError("no manifold given: use --manifold FILE or --model");
    }
};

struct OrbitArgs {
    std::string file;
    int n = 0;
    std::string spectrum;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--orbit", file, "orbit JSON file");
        cmd->add_option("--orbit-n", n, "orbit size n");
        cmd->add_option("--spectrum", spectrum,
                        "weakly decreasing spectrum, comma separated rationals");
    }

    OrbitSpec build() const {
        if (!file.empty())
            return parse_orbit(load_json_file(file));
        if (n == 0 || spectrum.empty())
            throw ParseError("no orbit given: use --orbit FILE or "
                             "--orbit-n/--spectrum");
        std::vector<Rational> spec;
        std::stringstream ss(spectrum);
        std::string tok;
        while (std::getline(ss, tok, ','))
            spec.push_back(parse_rational(tok));
        return OrbitSpec::create(n, std::move(spec));
    }

    /// The orbit file schema optionally carries the action vector.
    LatticeVector vector_or_file(const std::string& flag_value) const {
        if (!flag_value.empty())
            return parse_vector_arg(flag_value);
        if (!file.empty()) {
            Json j = load_json_file(file);
            if (j.contains("vector"))
                return detail::json_lattice_vector(j.at("vector"), "vector");
        }
        throw ParseError("no action vector given");
    }
};

const std::vector<std::string> kNoSymbols;

void print_expsum(const ExpSumQ& S, const std::string& format,
                  const Rational& kappa) {
    if (format == "json") {
        std::cout << expsum_to_json(S).dump(2) << "\n";
    } else if (format == "latex") {
        Frequency q = Frequency::constant(kappa);
        std::cout << S.latex(kNoSymbols, &q) << "\n";
    } else {
        std::cout << S.str() << "\n";
    }
}

void print_expsum_parametric(const ExpSumS& S, const std::string& format,
                             const LinForm& q) {
    const auto& names = box_symbols();
    if (format == "json") {
        std::cout << expsum_to_json(S, names).dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << S.latex(names, &q) << "\n";
    } else {
        std::cout << S.str(names) << "\n";
    }
}

int run_check(const ManifoldArgs& margs, const std::string& format) {
    DelzantPolytope P = margs.build();
    auto report = check_delzant(P);
    if (!report.pass) {
        for (const auto& v : report.violations)
            std::cerr << "violation: " << v << "\n";
        throw Degenerate("polytope is not Delzant");
    }
    if (format == "json") {
        Json j = polytope_to_json(P);
        j["volume"] = to_string(volume(P));
        Json cm = Json::array();
        for (const auto& c : center_of_mass(P))
            cm.push_back(to_string(c));
        j["center_of_mass"] = std::move(cm);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "ok: Delzant polytope with "
              << P.vertices().size() << " vertices, volume "
              << to_string(volume(P)) << ", center of mass "
              << to_string(center_of_mass(P)) << "\n";
    return 0;
}

int run_s_class(const ManifoldArgs& margs, const std::string& vec,
                bool param_mode, const std::string& format) {
    LatticeVector X = parse_vector_arg(vec);
    if (param_mode) {
        ExpSumS S = s_class_box_parametric(X);
        LinForm q(2);
        q += LinForm::symbol(0, 2) * (Rational(X.at(0)) / 2);
        q += LinForm::symbol(1, 2) * (Rational(X.at(1)) / 2);
        print_expsum_parametric(S, format, q);
        return 0;
    }
    DelzantPolytope P = margs.build();
    ExpSumQ S = s_class_general(P, X);
    print_expsum(S, format, dot(center_of_mass(P), X));
    return 0;
}

int run_compare(const ManifoldArgs& margs, const std::string& v1,
                const std::string& v2) {
    DelzantPolytope P = margs.build();
    LatticeVector X = parse_vector_arg(v1), Y = parse_vector_arg(v2);
    Verdict overall;
    std::vector<std::string> tests;
    auto accumulate = [&](const Verdict& v) {
        tests.insert(tests.end(), v.tests_run.begin(), v.tests_run.end());
        if (overall.status != Status::NotEquivalent &&
            v.status == Status::NotEquivalent)
            overall = v;
    };
    overall = make_verdict(Status::InconclusiveNecessaryPassed,
                           "all necessary conditions passed");
    accumulate(type_test(P, X, Y));
    if (overall.status != Status::NotEquivalent)
        accumulate(compare_s(P, X, Y));
    if (overall.status != Status::NotEquivalent && face_type(P, X) == 0 &&
        face_type(P, Y) == 0)
        accumulate(vertex_multiset_test(P, X, Y));
    overall.tests_run = tests;
    std::cout << verdict_to_json(overall).dump(2) << "\n";
    return 0;
}

int run_classify(const ManifoldArgs& margs, const std::string& vec) {
    DelzantPolytope P = margs.build();
    LatticeVector X = parse_vector_arg(vec);
    Json j;
    j["face_type"] = face_type(P, X);
    if (margs.model == "hirzebruch") {
        j["subtype"] = subtype_name(hirzebruch_subtype(
            margs.k, parse_rational(margs.sigma), parse_rational(margs.tau), X));
    }
    auto kappa = kappa_toric(P, X);
    j["kappa"] = to_string(kappa.geometric);
    j["kappa_series_check"] = to_string(kappa.series);
    auto sig = type_signature(P, X);
    j["signature"] = Json::array();
    for (const auto& [f, d] : sig.profile) {
        Json t;
        t["freq"] = to_string(f.constant_part());
        t["deg"] = d;
        j["signature"].push_back(std::move(t));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_decide(const ManifoldArgs& margs, const OrbitArgs& oargs,
               const std::string& v1, const std::string& v2,
               bool incommensurable) {
    Verdict verdict;
    if (!oargs.file.empty() || oargs.n != 0) {
        OrbitSpec spec = oargs.build();
        SuVector X = SuVector::create(
            std::vector<std::int64_t>(parse_vector_arg(v1)));
        SuVector Y = SuVector::create(
            std::vector<std::int64_t>(parse_vector_arg(v2)));
        verdict = cpn_decide(spec, X, Y);
    } else if (margs.model == "hirzebruch") {
        verdict = hirzebruch_decide(margs.k, parse_rational(margs.sigma),
                                    parse_rational(margs.tau),
                                    parse_vector_arg(v1), parse_vector_arg(v2));
    } else if (margs.model == "s2xs2" ||
               margs.model == "product_of_segments") {
        verdict = s2xs2_decide(parse_rational(margs.sigma),
                               parse_rational(margs.tau), parse_vector_arg(v1),
                               parse_vector_arg(v2),
                               incommensurable ? SphereMode::Incommensurable
                                               : SphereMode::Concrete);
    } else if (margs.model == "pl_bundle") {
        // the involution is construction-backed in any rank; beyond rank two
        // the classification is not complete, so a failed involution falls
        // back to the necessary conditions
        std::vector<std::int64_t> twists;
        for (auto x : parse_vector_arg(margs.a))
            twists.push_back(x);
        LatticeVector b = parse_vector_arg(v1), bp = parse_vector_arg(v2);
        if (pl_equiv(twists, b, bp)) {
            verdict = make_verdict(Status::Equivalent, "bundle-involution",
                                   {"bundle-involution"});
        } else {
            auto P = build_pl_bundle(twists, parse_rational(margs.sigma),
                                     parse_rational(margs.tau));
            verdict = compare_s(P, b, bp);
            verdict.tests_run.insert(verdict.tests_run.begin(),
                                     "bundle-involution");
        }
    } else {
        throw ParseError("decide needs --model hirzebruch, --model s2xs2, "
                         "--model pl_bundle, or an orbit");
    }
    std::cout << verdict_to_json(verdict).dump(2) << "\n";
    return 0;
}

int run_orbit_s_class(const OrbitArgs& oargs, const std::string& vec,
                      const std::string& format) {
    OrbitSpec spec = oargs.build();
    SuVector X = SuVector::create(oargs.vector_or_file(vec));
    ExpSumQ S = s_class_orbit(spec, X);
    print_expsum(S, format, kappa_orbit(spec, X));
    return 0;
}

int run_orbit_compare(const OrbitArgs& oargs, const std::string& v1,
                      const std::string& v2) {
    OrbitSpec spec = oargs.build();
    SuVector X = SuVector::create(std::vector<std::int64_t>(parse_vector_arg(v1)));
    SuVector Y = SuVector::create(std::vector<std::int64_t>(parse_vector_arg(v2)));
    auto sizes = spec.block_sizes();

    Json j;
    j["weyl"] = verdict_to_json(weyl_orbit_test(X, Y));
    if (sizes.size() == 2 && sizes[0] == 1) {
        j["decision"] = verdict_to_json(cpn_decide(spec, X, Y));
    } else if (X.regular() && Y.regular()) {
        if (sizes.size() == 2)
            j["grassmann"] = verdict_to_json(grassmann_necessary(spec, X, Y));
        if (static_cast<int>(sizes.size()) == spec.n)
            j["flag"] = verdict_to_json(flag_necessary(spec, X, Y));
        auto rep = orbit_value_tests(spec, X, Y);
        j["translation"] = verdict_to_json(rep.translation);
        j["reparametrization"] = verdict_to_json(rep.reparam);
    }
    bool s_equal = s_class_orbit(spec, X) == s_class_orbit(spec, Y);
    j["s_class_equal"] = s_equal;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_sweep(const ManifoldArgs& margs, const OrbitArgs& oargs,
              std::int64_t range, bool incommensurable) {
    if (range < 1)
        throw ParseError("--range must be positive");
    if (!oargs.file.empty() || oargs.n != 0) {
        OrbitSpec spec = oargs.build();
        std::vector<std::vector<std::int64_t>> grid;
        std::vector<std::int64_t> a(static_cast<std::size_t>(spec.n), -range);
        // enumerate trace-zero nonzero vectors with entries in [-range, range]
        while (true) {
            std::int64_t sum = 0;
            bool zero = true;
            for (auto x : a) {
                sum += x;
                zero = zero && x == 0;
            }
            if (sum == 0 && !zero)
                grid.push_back(a);
            std::size_t i = a.size();
            while (i > 0) {
                --i;
                if (a[i] < range) {
                    ++a[i];
                    for (std::size_t j = i + 1; j < a.size(); ++j)
                        a[j] = -range;
                    break;
                }
                if (i == 0)
                    goto done_orbit;
            }
        }
    done_orbit:
        for (const auto& x : grid)
            for (const auto& y : grid) {
                Verdict v = cpn_decide(spec, SuVector::create(x),
                                       SuVector::create(y));
                Json row;
                row["a"] = x;
                row["a2"] = y;
                row["status"] = status_name(v.status);
                row["witness"] = v.witness;
                std::cout << row.dump() << "\n";
            }
        return 0;
    }

    std::vector<LatticeVector> grid;
    for (std::int64_t x = -range; x <= range; ++x)
        for (std::int64_t y = -range; y <= range; ++y)
            if (x != 0 || y != 0)
                grid.push_back({x, y});
    const bool hirzebruch = margs.model == "hirzebruch";
    if (!hirzebruch && margs.model != "s2xs2" &&
        margs.model != "product_of_segments")
        throw ParseError("sweep needs --model hirzebruch or --model s2xs2");
    for (const auto& b : grid)
        for (const auto& bp : grid) {
            Json row;
            row["b"] = b;
            row["b2"] = bp;
            try {
                Verdict v =
                    hirzebruch
                        ? hirzebruch_decide(margs.k, parse_rational(margs.sigma),
                                            parse_rational(margs.tau), b, bp)
                        : s2xs2_decide(parse_rational(margs.sigma),
                                       parse_rational(margs.tau), b, bp,
                                       incommensurable
                                           ? SphereMode::Incommensurable
                                           : SphereMode::Concrete);
                row["status"] = status_name(v.status);
                row["witness"] = v.witness;
            } catch (const ZeroComponent&) {
                row["status"] = "Skipped";
                row["witness"] = "zero component";
            }
            std::cout << row.dump() << "\n";
        }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact localization invariants of Hamiltonian circle actions"};
    app.require_subcommand(1);

    ManifoldArgs margs;
    OrbitArgs oargs;
    std::string vec, vec2, format = "text";
    bool param_mode = false, incommensurable = false;
    std::int64_t range = 3;

    auto* check = app.add_subcommand("check", "validate a Delzant polytope");
    margs.add_options(check);
    check->add_option("--format", format, "text|json");

    auto* sclass = app.add_subcommand("s-class",
                                      "S-class of a toric circle action");
    margs.add_options(sclass);
    sclass->add_option("--vector", vec, "lattice vector, comma separated")
        ->required();
    sclass->add_flag("--param-mode", param_mode,
                     "keep sigma, tau symbolic (sphere product only)");
    sclass->add_option("--format", format, "text|latex|json");

    auto* compare = app.add_subcommand(
        "compare", "necessary-condition battery for two toric actions");
    margs.add_options(compare);
    compare->add_option("--vector", vec, "first lattice vector")->required();
    compare->add_option("--vector2", vec2, "second lattice vector")->required();

    auto* classify =
        app.add_subcommand("classify", "type data of a toric circle action");
    margs.add_options(classify);
    classify->add_option("--vector", vec, "lattice vector")->required();

    auto* decide = app.add_subcommand(
        "decide", "complete decision where the classification is complete");
    margs.add_options(decide);
    oargs.add_options(decide);
    decide->add_option("--b", vec, "first vector")->required();
    decide->add_option("--b2", vec2, "second vector")->required();
    decide->add_flag("--incommensurable", incommensurable,
                     "treat sigma/tau as irrational (sphere product)");

    auto* osclass = app.add_subcommand("orbit-s-class",
                                       "S-class of an orbit circle action");
    oargs.add_options(osclass);
    osclass->add_option("--vector", vec,
                        "trace-zero integer vector (or the file's)");
    osclass->add_option("--format", format, "text|latex|json");

    auto* ocompare = app.add_subcommand(
        "orbit-compare", "decision battery for two orbit actions");
    oargs.add_options(ocompare);
    ocompare->add_option("--vector", vec, "first vector")->required();
    ocompare->add_option("--vector2", vec2, "second vector")->required();

    auto* sweep =
        app.add_subcommand("sweep", "verdicts over an exhaustive vector grid");
    margs.add_options(sweep);
    oargs.add_options(sweep);
    sweep->add_option("--range", range, "grid radius (default 3)");
    sweep->add_flag("--incommensurable", incommensurable,
                    "treat sigma/tau as irrational (sphere product)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed())
            return run_check(margs, format);
        if (sclass->parsed())
            return run_s_class(margs, vec, param_mode, format);
        if (compare->parsed())
            return run_compare(margs, vec, vec2);
        if (classify->parsed())
            return run_classify(margs, vec);
        if (decide->parsed())
            return run_decide(margs, oargs, vec, vec2, incommensurable);
        if (osclass->parsed())
            return run_orbit_s_class(oargs, vec, format);
        if (ocompare->parsed())
            return run_orbit_compare(oargs, vec, vec2);
        if (sweep->parsed())
            return run_sweep(margs, oargs, range, incommensurable);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
