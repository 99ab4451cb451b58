#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "equiloc/localize.hpp"
#include "equiloc/polytope.hpp"

namespace equiloc {

/// One localization term of a toric circle action: a vertex of the moment
/// polytope together with the isotropy weights <rho_ji, X> read off the
/// primitive edge frame, and the moment value <P_j, X>.
struct FixedPointDatum {
    RationalVector vertex;
    std::vector<std::int64_t> weights;
    Rational moment_value;
};

inline std::vector<FixedPointDatum> fixed_point_data(const DelzantPolytope& P,
                                                     const LatticeVector& X) {
    if (X.size() != P.dimension())
        throw InvalidArgument("vector length does not match dimension");
    if (is_zero_vector(X))
        throw ZeroVector("circle action of the zero vector");
    // frame pairings are the isotropy weights only over a lattice basis
    if (!P.is_delzant())
        throw Degenerate("polytope is not Delzant");
    std::vector<FixedPointDatum> data;
    for (std::size_t vi = 0; vi < P.vertices().size(); ++vi) {
        FixedPointDatum d;
        d.vertex = P.vertices()[vi];
        for (const auto& rho : P.vertex_frames()[vi])
            d.weights.push_back(dot(rho, X));
        d.moment_value = dot(P.vertices()[vi], X);
        data.push_back(std::move(d));
    }
    return data;
}

namespace detail {

/// Probe directions for the regularized sum: (1, t, t^2, ...) for t = 1,2,...
inline LatticeVector probe_candidate(std::size_t n, std::int64_t t) {
    LatticeVector c(n);
    std::int64_t p = 1;
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = p;
        p *= t;
    }
    return c;
}

/// True when c separates every degenerate edge direction of (P, X).
inline bool probe_valid(const DelzantPolytope& P, const LatticeVector& X,
                        const LatticeVector& c) {
    for (const auto& frame : P.vertex_frames())
        for (const auto& rho : frame)
            if (dot(rho, X) == 0 && dot(rho, c) == 0)
                return false;
    return true;
}

inline std::vector<LocalizationTerm<Rational>>
localization_terms(const DelzantPolytope& P, const LatticeVector& X,
                   const LatticeVector& c) {
    std::vector<LocalizationTerm<Rational>> terms;
    for (std::size_t vi = 0; vi < P.vertices().size(); ++vi) {
        LocalizationTerm<Rational> t;
        t.freq = Frequency::constant(-dot(P.vertices()[vi], X));
        t.eps_shift = -dot(P.vertices()[vi], c);
        for (const auto& rho : P.vertex_frames()[vi])
            t.weights.emplace_back(Rational(dot(rho, X)), Rational(dot(rho, c)));
        terms.push_back(std::move(t));
    }
    return terms;
}

} // namespace detail

/// Vertex localization sum without the normalizing prefactor:
/// sum_j e^{-<P_j,X> u} / (u^n prod_i <rho_ji, X>). All weights must be
/// nonzero (Type 0); use the regularized variant otherwise.
inline ExpSumQ unnormalized_vertex_sum(const DelzantPolytope& P,
                                       const LatticeVector& X) {
    auto pts = fixed_point_data(P, X);
    ExpSumQ total;
    const int n = static_cast<int>(P.dimension());
    for (const auto& pt : pts) {
        Rational denom(1);
        for (auto w : pt.weights) {
            if (w == 0)
                throw DegenerateWeight(
                    "zero isotropy weight; the action is not of type 0");
            denom *= w;
        }
        total.add_term(Frequency::constant(-pt.moment_value),
                       LaurentQ::monomial(Rational(1) / denom, -n));
    }
    return total;
}

/// S-class of a type-0 circle action: the vertex sum normalized by the
/// prefactor e^{qu} with q = <Cm, X>.
inline ExpSumQ s_class_type0(const DelzantPolytope& P, const LatticeVector& X) {
    ExpSumQ raw = unnormalized_vertex_sum(P, X);
    Rational q = dot(center_of_mass(P), X);
    return raw.shifted(Frequency::constant(q));
}

/// Regularized vertex sum for an arbitrary nonzero X, without the
/// normalizing prefactor. Degenerate isotropy weights are perturbed along a
/// probe direction c, every vertex term is expanded as a truncated Laurent
/// series in the perturbation, and the exact eps^0 coefficient is returned
/// after checking that all eps-poles cancel. The result is checked to be
/// independent of the probe by recomputation with a second one.
inline ExpSumQ unnormalized_vertex_sum_regularized(
    const DelzantPolytope& P, const LatticeVector& X,
    std::optional<LatticeVector> probe = std::nullopt) {
    auto pts = fixed_point_data(P, X);
    bool degenerate = false;
    for (const auto& pt : pts)
        for (auto w : pt.weights)
            if (w == 0)
                degenerate = true;

    const int order = truncation_order(static_cast<int>(P.dimension()));
    if (!degenerate) {
        auto terms = detail::localization_terms(
            P, X, LatticeVector(P.dimension(), 0));
        auto viaeps = localize_eps<Rational>(terms, 0, order);
        return viaeps;
    }

    std::vector<LatticeVector> probes;
    if (probe) {
        if (!detail::probe_valid(P, X, *probe))
            throw BadProbe("probe direction annihilates a degenerate weight");
        probes.push_back(*probe);
    }
    for (std::int64_t t = 1; probes.size() < 2; ++t) {
        if (t > 4096)
            throw BadProbe("no valid probe direction found");
        auto c = detail::probe_candidate(P.dimension(), t);
        if (detail::probe_valid(P, X, c) &&
            (probes.empty() || c != probes.front()))
            probes.push_back(c);
    }

    auto first = localize_eps<Rational>(
        detail::localization_terms(P, X, probes[0]), 0, order);
    auto second = localize_eps<Rational>(
        detail::localization_terms(P, X, probes[1]), 0, order);
    if (!(first == second))
        throw ResidueError("regularized sum depends on the probe direction");
    return first;
}

/// S-class of an arbitrary nonzero circle action, all types.
inline ExpSumQ s_class_general(const DelzantPolytope& P, const LatticeVector& X,
                               std::optional<LatticeVector> probe = std::nullopt) {
    ExpSumQ raw = unnormalized_vertex_sum_regularized(P, X, std::move(probe));
    Rational q = dot(center_of_mass(P), X);
    return raw.shifted(Frequency::constant(q));
}

/// The normalizing constant of the action, computed two independent ways:
/// geometrically as <Cm, X> and analytically as -c1/c0 of the power series
/// of the unnormalized vertex sum. The two always agree on valid input.
struct KappaToric {
    Rational geometric;
    Rational series;
};

inline KappaToric kappa_toric(const DelzantPolytope& P, const LatticeVector& X) {
    KappaToric k;
    k.geometric = dot(center_of_mass(P), X);
    ExpSumQ raw = unnormalized_vertex_sum_regularized(P, X);
    auto coeffs = u_series(raw, 1);
    if (coeffs[0] == 0)
        throw ResidueError("vanishing volume coefficient");
    k.series = -coeffs[1] / coeffs[0];
    return k;
}

/// The degree signature of an action: for each exponential term of the
/// S-class, the Laurent degree of its coefficient. The top degree recovers
/// the type as s = n + max degree, which must match face_type.
struct TypeSignature {
    int s = 0;
    std::multiset<std::pair<Frequency, int>> profile;
};

inline TypeSignature type_signature(const DelzantPolytope& P,
                                    const LatticeVector& X) {
    ExpSumQ S = s_class_general(P, X);
    TypeSignature sig;
    int max_deg = 0;
    bool first = true;
    for (const auto& [f, c] : S.terms()) {
        int d = c.degree();
        sig.profile.emplace(f, d);
        max_deg = first ? d : std::max(max_deg, d);
        first = false;
    }
    if (first)
        throw ResidueError("empty S-class");
    sig.s = static_cast<int>(P.dimension()) + max_deg;
    int geometric = face_type(P, X);
    if (sig.s != geometric)
        throw ResidueError("degree signature type " + std::to_string(sig.s) +
                           " disagrees with the face type " +
                           std::to_string(geometric));
    return sig;
}

// ---------------------------------------------------------------------------
// Parametric mode: the rectangle [0,sigma] x [0,tau] with sigma, tau kept as
// independent symbols. Frequencies and coefficients stay symbolic, so
// incommensurability hypotheses become exact statements.

/// Symbol names of the parametric rectangle context.
inline const std::vector<std::string>& box_symbols() {
    static const std::vector<std::string> names{"sigma", "tau"};
    return names;
}

namespace detail {

struct ParametricVertex {
    std::vector<LinForm> coords;             // affine-linear in sigma, tau
    std::vector<LatticeVector> frame;
};

/// Vertex data of the symbolic rectangle: (0,0), (0,tau), (sigma,0),
/// (sigma,tau) with the obvious axis-parallel edge frames.
inline std::vector<ParametricVertex> parametric_box_vertices() {
    const std::size_t ns = 2;
    LinForm zero(ns), sigma = LinForm::symbol(0, ns), tau = LinForm::symbol(1, ns);
    std::vector<ParametricVertex> vs(4, ParametricVertex{});
    vs[0].coords = {zero, zero};
    vs[0].frame = {{1, 0}, {0, 1}};
    vs[1].coords = {zero, tau};
    vs[1].frame = {{1, 0}, {0, -1}};
    vs[2].coords = {sigma, zero};
    vs[2].frame = {{-1, 0}, {0, 1}};
    vs[3].coords = {sigma, tau};
    vs[3].frame = {{-1, 0}, {0, -1}};
    return vs;
}

} // namespace detail

/// S-class of the action of b on the parametric rectangle, handled for all
/// types through the same regularized engine with symbolic coefficients.
/// The center of mass (sigma/2, tau/2) stays linear in the symbols, which is
/// what makes the symbolic frequency shift well defined.
inline ExpSumS s_class_box_parametric(const LatticeVector& b) {
    if (b.size() != 2)
        throw InvalidArgument("the parametric rectangle is two-dimensional");
    if (is_zero_vector(b))
        throw ZeroVector("circle action of the zero vector");
    const std::size_t ns = 2;
    auto vs = detail::parametric_box_vertices();

    auto build_terms = [&](const LatticeVector& c) {
        std::vector<LocalizationTerm<SymPoly>> terms;
        for (const auto& v : vs) {
            LocalizationTerm<SymPoly> t;
            LinForm freq(ns), shift(ns);
            for (std::size_t i = 0; i < 2; ++i) {
                freq -= v.coords[i] * Rational(b[i]);
                shift -= v.coords[i] * Rational(c[i]);
            }
            t.freq = freq;
            t.eps_shift = SymPoly::from_linform(shift);
            for (const auto& rho : v.frame)
                t.weights.emplace_back(Rational(dot(rho, b)),
                                       Rational(dot(rho, c)));
            terms.push_back(std::move(t));
        }
        return terms;
    };

    const int order = truncation_order(2);
    bool degenerate = b[0] == 0 || b[1] == 0;
    ExpSumS raw(ns);
    if (!degenerate) {
        raw = localize_eps<SymPoly>(build_terms({0, 0}), ns, order);
    } else {
        // any probe with both components nonzero separates the axis edges
        auto first = localize_eps<SymPoly>(build_terms({1, 1}), ns, order);
        auto second = localize_eps<SymPoly>(build_terms({1, 2}), ns, order);
        if (!(first == second))
            throw ResidueError("regularized sum depends on the probe direction");
        raw = first;
    }
    LinForm q(ns);
    q += LinForm::symbol(0, ns) * (Rational(b[0]) / 2);
    q += LinForm::symbol(1, ns) * (Rational(b[1]) / 2);
    return raw.shifted(q);
}

} // namespace equiloc
