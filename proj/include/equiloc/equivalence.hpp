#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equiloc/toric.hpp"

namespace equiloc {

/// Decision outcomes. The general results of the theory are one-directional
/// necessary conditions, so a verdict distinguishes "proved inequivalent",
/// "proved equivalent" (only where a complete classification or an explicit
/// construction backs it) and "all necessary conditions passed".
enum class Status { Equivalent, NotEquivalent, InconclusiveNecessaryPassed };

inline const char* status_name(Status s) {
    switch (s) {
    case Status::Equivalent:
        return "Equivalent";
    case Status::NotEquivalent:
        return "NotEquivalent";
    default:
        return "InconclusiveNecessaryPassed";
    }
}

struct Verdict {
    Status status = Status::InconclusiveNecessaryPassed;
    std::string witness;               // violated test, or the matching datum
    std::vector<std::string> tests_run;
};

inline Verdict make_verdict(Status s, std::string witness,
                            std::vector<std::string> tests = {}) {
    return Verdict{s, std::move(witness), std::move(tests)};
}

// ---------------------------------------------------------------------------
// Necessary conditions for circle actions on a toric manifold

/// Compares the S-classes of two actions. Inequality of the canonical forms
/// proves the actions are not connected by a family of circle actions;
/// equality alone decides nothing.
inline Verdict compare_s(const DelzantPolytope& P, const LatticeVector& X,
                         const LatticeVector& Y) {
    ExpSumQ SX = s_class_general(P, X);
    ExpSumQ SY = s_class_general(P, Y);
    if (!exp_sum_equal(SX, SY))
        return make_verdict(Status::NotEquivalent, "s-class-mismatch",
                            {"s-class-equality"});
    return make_verdict(Status::InconclusiveNecessaryPassed,
                        "s-class-equality passed", {"s-class-equality"});
}

namespace detail {

inline std::vector<Rational> centered_pairings(const DelzantPolytope& P,
                                               const LatticeVector& X) {
    RationalVector cm = center_of_mass(P);
    std::vector<Rational> vals;
    for (const auto& v : P.vertices()) {
        Rational s(0);
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (v[i] - cm[i]) * Rational(X[i]);
        vals.push_back(s);
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

} // namespace detail

/// Multisets of vertex pairings {<P_i, X>} on the centered polytope; for
/// type-0 actions a mismatch is a proof of inequivalence.
inline Verdict vertex_multiset_test(const DelzantPolytope& P,
                                    const LatticeVector& X,
                                    const LatticeVector& Y) {
    if (face_type(P, X) != 0 || face_type(P, Y) != 0)
        throw TypeNotZero("vertex pairing test needs type-0 actions");
    auto mx = detail::centered_pairings(P, X);
    auto my = detail::centered_pairings(P, Y);
    if (mx != my)
        return make_verdict(Status::NotEquivalent, "vertex-pairing-mismatch",
                            {"vertex-pairing-multiset"});
    return make_verdict(Status::InconclusiveNecessaryPassed,
                        "vertex pairing multisets agree",
                        {"vertex-pairing-multiset"});
}

/// Reparametrization variant: the pairing multisets are compared up to an
/// integer scale lambda != 0. The scan is finite because a matching lambda
/// must map the extreme pairing of X to the extreme pairing of Y.
inline Verdict reparam_test(const DelzantPolytope& P, const LatticeVector& X,
                            const LatticeVector& Y) {
    if (face_type(P, X) != 0 || face_type(P, Y) != 0)
        throw TypeNotZero("reparametrization test needs type-0 actions");
    auto mx = detail::centered_pairings(P, X);
    auto my = detail::centered_pairings(P, Y);
    Rational max_x(0), max_y(0);
    for (const auto& v : mx)
        max_x = std::max(max_x, v < 0 ? Rational(-v) : v);
    for (const auto& v : my)
        max_y = std::max(max_y, v < 0 ? Rational(-v) : v);
    // max|<P,Y>| = |lambda| max|<P,X>|, and max_x > 0 on a centered polytope
    std::vector<std::int64_t> candidates;
    Rational ratio = max_y / max_x;
    if (denominator(ratio) == 1 && ratio != 0) {
        std::int64_t l = static_cast<std::int64_t>(numerator(ratio));
        candidates = {l, -l};
    }
    for (auto lambda : candidates) {
        std::vector<Rational> scaled;
        for (const auto& v : mx)
            scaled.push_back(v * Rational(lambda));
        std::sort(scaled.begin(), scaled.end());
        if (scaled == my)
            return make_verdict(Status::InconclusiveNecessaryPassed,
                                "lambda=" + std::to_string(lambda),
                                {"vertex-pairing-reparametrization"});
    }
    return make_verdict(Status::NotEquivalent,
                        "vertex-pairing-mismatch-up-to-reparametrization",
                        {"vertex-pairing-reparametrization"});
}

/// Actions of different type are never homotopic through circle actions.
inline Verdict type_test(const DelzantPolytope& P, const LatticeVector& X,
                         const LatticeVector& Y) {
    int tx = face_type(P, X), ty = face_type(P, Y);
    if (tx != ty)
        return make_verdict(Status::NotEquivalent,
                            "type-mismatch (" + std::to_string(tx) + " vs " +
                                std::to_string(ty) + ")",
                            {"face-type"});
    return make_verdict(Status::InconclusiveNecessaryPassed,
                        "both of type " + std::to_string(tx), {"face-type"});
}

// ---------------------------------------------------------------------------
// Polytope comparison

struct PolytopeMatch {
    bool equal_centered = false;
    std::optional<std::vector<LatticeVector>> gl_witness; // rows of V
};

namespace detail {

inline std::vector<RationalVector> centered_vertices(const DelzantPolytope& P) {
    RationalVector cm = center_of_mass(P);
    std::vector<RationalVector> vs = P.vertices();
    for (auto& v : vs)
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] -= cm[i];
    std::sort(vs.begin(), vs.end(), lex_less);
    return vs;
}

inline RationalVector apply_rows(const std::vector<LatticeVector>& V,
                                 const RationalVector& x) {
    RationalVector y(V.size(), Rational(0));
    for (std::size_t i = 0; i < V.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            y[i] += Rational(V[i][j]) * x[j];
    return y;
}

} // namespace detail

/// Equality of centered polytopes, and search for a lattice-linear map V
/// with V(P) = Q (both centered). A candidate V is pinned by sending the
/// edge frame of the first vertex of P to a vertex frame of Q in some order;
/// a Delzant frame is a lattice basis, so the candidate list is exhaustive.
inline PolytopeMatch polytope_tests(const DelzantPolytope& P,
                                    const DelzantPolytope& Q) {
    if (P.dimension() != Q.dimension())
        throw InvalidArgument("polytopes of different dimension");
    const std::size_t n = P.dimension();
    PolytopeMatch match;
    auto vp = detail::centered_vertices(P);
    auto vq = detail::centered_vertices(Q);
    match.equal_centered = vp == vq;

    if (P.vertices().size() == Q.vertices().size()) {
        // frame of P's first vertex, as columns of a rational matrix
        RationalMatrix FP(n, RationalVector(n, Rational(0)));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                FP[i][j] = Rational(P.vertex_frames()[0][j][i]);
        auto FPinv = inverse(FP);
        if (FPinv) {
            std::vector<std::size_t> perm(n);
            for (std::size_t qi = 0; qi < Q.vertices().size() && !match.gl_witness;
                 ++qi) {
                for (std::size_t i = 0; i < n; ++i)
                    perm[i] = i;
                do {
                    // V = FQ(perm) * FP^{-1}
                    RationalMatrix V(n, RationalVector(n, Rational(0)));
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = 0; j < n; ++j)
                            for (std::size_t k = 0; k < n; ++k)
                                V[i][j] +=
                                    Rational(
                                        Q.vertex_frames()[qi][perm[k]][i]) *
                                    (*FPinv)[k][j];
                    bool integral = true;
                    std::vector<LatticeVector> Vint(n, LatticeVector(n, 0));
                    for (std::size_t i = 0; i < n && integral; ++i)
                        for (std::size_t j = 0; j < n; ++j) {
                            if (denominator(V[i][j]) != 1) {
                                integral = false;
                                break;
                            }
                            Vint[i][j] =
                                static_cast<std::int64_t>(numerator(V[i][j]));
                        }
                    if (!integral)
                        continue;
                    Rational d = det_lattice(Vint);
                    if (d != 1 && d != -1)
                        continue;
                    std::vector<RationalVector> mapped;
                    for (const auto& v : vp)
                        mapped.push_back(detail::apply_rows(Vint, v));
                    std::sort(mapped.begin(), mapped.end(), detail::lex_less);
                    if (mapped == vq) {
                        match.gl_witness = Vint;
                        break;
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
    }
    return match;
}

// ---------------------------------------------------------------------------
// Complete decisions for the projectivized-bundle family

/// The involution b' = (b_j + a_j b_n, -b_n) on lattice vectors, together
/// with identity the relation that generates proven homotopies of circle
/// actions on the bundle with twist vector a.
inline bool pl_equiv(const std::vector<std::int64_t>& a, const LatticeVector& b,
                     const LatticeVector& bp) {
    const std::size_t n = a.size() + 1;
    if (b.size() != n || bp.size() != n)
        throw InvalidArgument("vector length does not match the bundle rank");
    if (b == bp)
        return true;
    for (std::size_t j = 0; j + 1 < n; ++j)
        if (bp[j] != b[j] + a[j] * b[n - 1])
            return false;
    return bp[n - 1] == -b[n - 1];
}

/// Complete decision on a Hirzebruch surface with nonzero twist: the actions
/// of b and b' are homotopic exactly when the involution relates them, and
/// this is equivalent to equality of the S-classes. Both routes are computed
/// and must agree.
inline Verdict hirzebruch_decide(std::int64_t k, const Rational& sigma,
                                 const Rational& tau, const LatticeVector& b,
                                 const LatticeVector& bp) {
    if (k == 0)
        throw InfeasibleParameters("the complete decision needs nonzero twist");
    if (is_zero_vector(b) || is_zero_vector(bp))
        throw ZeroVector("zero lattice vector");
    bool related = pl_equiv({-k}, b, bp);
    DelzantPolytope P = build_hirzebruch(k, sigma, tau);
    bool s_equal = s_class_general(P, b) == s_class_general(P, bp);
    if (related != s_equal)
        throw ResidueError(
            "bundle involution and S-class equality disagree on a "
            "Hirzebruch surface");
    if (related)
        return make_verdict(Status::Equivalent, "bundle-involution",
                            {"bundle-involution", "s-class-equality"});
    return make_verdict(Status::NotEquivalent,
                        "hirzebruch-complete-classification",
                        {"bundle-involution", "s-class-equality"});
}

/// Subtype taxonomy of a nonzero action on a Hirzebruch surface with
/// k != 0. Writing b0 = b1 - k b2 and q = <Cm, b>, the four exponents of the
/// type-0 form are q, q - tau b2, q - sigma b1, q - (tau b2 + sigma b0); the
/// subtype records which of them collide. Type 1 splits on b2 = 0.
enum class HirzebruchSubtype {
    Type0Alpha,
    Type0Beta,
    Type0Gamma,
    Type1Alpha,
    Type1Beta
};

inline const char* subtype_name(HirzebruchSubtype s) {
    switch (s) {
    case HirzebruchSubtype::Type0Alpha:
        return "Type0_alpha";
    case HirzebruchSubtype::Type0Beta:
        return "Type0_beta";
    case HirzebruchSubtype::Type0Gamma:
        return "Type0_gamma";
    case HirzebruchSubtype::Type1Alpha:
        return "Type1_alpha";
    default:
        return "Type1_beta";
    }
}

inline HirzebruchSubtype hirzebruch_subtype(std::int64_t k,
                                            const Rational& sigma,
                                            const Rational& tau,
                                            const LatticeVector& b) {
    if (k == 0)
        throw InfeasibleParameters("subtype taxonomy needs nonzero twist");
    if (b.size() != 2 || is_zero_vector(b))
        throw ZeroVector("nonzero two-component vector required");
    const std::int64_t b1 = b[0], b2 = b[1], b0 = b1 - k * b2;
    if (b1 == 0 || b2 == 0 || b0 == 0) {
        return b2 == 0 ? HirzebruchSubtype::Type1Alpha
                       : HirzebruchSubtype::Type1Beta;
    }
    // alpha2 = alpha3 iff sigma b1 = tau b2; alpha1 = alpha4 iff
    // tau b2 + sigma b0 = 0; q drops out of both.
    bool a23 = sigma * Rational(b1) == tau * Rational(b2);
    bool a14 = tau * Rational(b2) + sigma * Rational(b0) == 0;
    if (!a23 && !a14)
        return HirzebruchSubtype::Type0Alpha;
    if (a23 && a14)
        return HirzebruchSubtype::Type0Gamma;
    return HirzebruchSubtype::Type0Beta;
}

// ---------------------------------------------------------------------------
// The sphere product

enum class SphereMode { Concrete, Incommensurable };

/// Decision for actions b, b' with all components nonzero on the product of
/// two spheres of areas sigma, tau. With sigma, tau independent symbols the
/// classification is complete: equivalent exactly when the componentwise
/// absolute values agree. With concrete areas, S-equality can also arise
/// from the two cross conditions sigma b1 = +-tau b2', tau b2 = +-sigma b1',
/// which the theory leaves undecided; those report as inconclusive.
inline Verdict s2xs2_decide(const Rational& sigma, const Rational& tau,
                            const LatticeVector& b, const LatticeVector& bp,
                            SphereMode mode) {
    if (b.size() != 2 || bp.size() != 2)
        throw InvalidArgument("two-component vectors required");
    if (b[0] == 0 || b[1] == 0 || bp[0] == 0 || bp[1] == 0)
        throw ZeroComponent("all components must be nonzero");
    auto abs64 = [](std::int64_t v) { return v < 0 ? -v : v; };
    bool componentwise =
        abs64(b[0]) == abs64(bp[0]) && abs64(b[1]) == abs64(bp[1]);
    if (componentwise)
        return make_verdict(Status::Equivalent, "axis-reflection-rotation",
                            {"componentwise-absolute-values"});
    if (mode == SphereMode::Incommensurable)
        return make_verdict(Status::NotEquivalent,
                            "sphere-complete-classification",
                            {"componentwise-absolute-values"});
    Rational sb1 = sigma * Rational(b[0]), tb2 = tau * Rational(b[1]);
    Rational tbp2 = tau * Rational(bp[1]), sbp1 = sigma * Rational(bp[0]);
    bool cross = (sb1 == tbp2 || sb1 == -tbp2) && (tb2 == sbp1 || tb2 == -sbp1);
    if (cross)
        return make_verdict(Status::InconclusiveNecessaryPassed,
                            "cross-exchange condition holds",
                            {"componentwise-absolute-values", "cross-exchange"});
    return make_verdict(Status::NotEquivalent, "s-class-mismatch",
                        {"componentwise-absolute-values", "cross-exchange"});
}

} // namespace equiloc
