#pragma once

// Shared test utilities: deterministic random generators and independent
// closed-form oracles that the engine outputs are checked against. The
// oracles are direct transcriptions of the expected answers and never call
// into the code paths they verify.

#include <random>
#include <vector>

#include "equiloc/equiloc.hpp"

namespace testutil {

using namespace equiloc;

using Rng = std::mt19937_64;

inline std::int64_t rand_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    return d(rng);
}

inline Rational rand_rational(Rng& rng, std::int64_t num_range = 20,
                              std::int64_t den_range = 9) {
    return make_rational(BigInt(rand_int(rng, -num_range, num_range)),
                         BigInt(rand_int(rng, 1, den_range)));
}

inline Rational rand_positive_rational(Rng& rng, std::int64_t num_range = 12,
                                       std::int64_t den_range = 5) {
    return make_rational(BigInt(rand_int(rng, 1, num_range)),
                         BigInt(rand_int(rng, 1, den_range)));
}

// ---------------------------------------------------------------------------
// Random geometry

/// A random polytope from one of the four model builders with admissible
/// parameters.
inline DelzantPolytope rand_model_polytope(Rng& rng) {
    switch (rand_int(rng, 0, 3)) {
    case 0:
        return build_simplex(static_cast<std::size_t>(rand_int(rng, 2, 3)),
                             rand_positive_rational(rng));
    case 1: {
        std::int64_t k = 0;
        while (k == 0)
            k = rand_int(rng, -3, 3);
        Rational sigma = rand_positive_rational(rng);
        Rational tau = rand_positive_rational(rng);
        if (k > 0)
            tau += Rational(k) * sigma; // ensure tau - k sigma > 0
        return build_hirzebruch(k, sigma, tau);
    }
    case 2: {
        std::vector<std::int64_t> a{rand_int(rng, -2, 2), rand_int(rng, -2, 2)};
        Rational sigma = rand_positive_rational(rng);
        Rational tau = rand_positive_rational(rng);
        for (auto ai : a)
            if (tau + Rational(ai) * sigma <= 0)
                tau += Rational(-ai) * sigma + 1;
        return build_pl_bundle(a, sigma, tau);
    }
    default:
        return build_product_of_segments(rand_positive_rational(rng),
                                         rand_positive_rational(rng));
    }
}

inline LatticeVector rand_type0_vector(Rng& rng, const DelzantPolytope& P) {
    while (true) {
        LatticeVector X(P.dimension());
        bool zero = true;
        for (auto& x : X) {
            x = rand_int(rng, -4, 4);
            zero = zero && x == 0;
        }
        if (zero)
            continue;
        if (face_type(P, X) == 0)
            return X;
    }
}

/// Random unimodular matrix: a short product of elementary row operations.
inline std::vector<LatticeVector> rand_unimodular(Rng& rng, std::size_t n) {
    std::vector<LatticeVector> U(n, LatticeVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        U[i][i] = 1;
    for (int step = 0; step < 6; ++step) {
        std::size_t i = static_cast<std::size_t>(rand_int(rng, 0, n - 1));
        std::size_t j = static_cast<std::size_t>(rand_int(rng, 0, n - 1));
        switch (rand_int(rng, 0, 2)) {
        case 0:
            if (i != j) {
                std::int64_t c = rand_int(rng, -2, 2);
                for (std::size_t k = 0; k < n; ++k)
                    U[i][k] += c * U[j][k];
            }
            break;
        case 1:
            std::swap(U[i], U[j]);
            break;
        default:
            for (std::size_t k = 0; k < n; ++k)
                U[i][k] = -U[i][k];
            break;
        }
    }
    return U;
}

// ---------------------------------------------------------------------------
// Closed-form oracles, Hirzebruch trapezoid.
//
// Vertices (0,0), (0,tau), (sigma,0), (sigma,lambda) with lambda =
// tau - k*sigma > 0. The centroid is transcribed from the plane-region
// integrals of the region 0 <= x <= sigma, 0 <= y <= tau - k*x.

inline RationalVector hirzebruch_centroid(std::int64_t k, const Rational& s,
                                          const Rational& t) {
    Rational area = s * t - Rational(k) * s * s / 2;
    Rational cx = (t * s * s / 2 - Rational(k) * s * s * s / 3) / area;
    Rational cy =
        (t * t * s - t * Rational(k) * s * s + Rational(k * k) * s * s * s / 3) /
        (area * 2);
    return {cx, cy};
}

inline Rational hirzebruch_q(std::int64_t k, const Rational& s,
                             const Rational& t, const LatticeVector& b) {
    auto cm = hirzebruch_centroid(k, s, t);
    return cm[0] * Rational(b[0]) + cm[1] * Rational(b[1]);
}

/// Four-exponential type-0 form:
/// u^2 S = e^{qu}(A - B e^{-tau b2 u} - A e^{-sigma b1 u}
///               + B e^{-(tau b2 + sigma b0) u}),
/// A = 1/(b1 b2), B = 1/(b0 b2), b0 = b1 - k b2.
inline ExpSumQ closed_hirzebruch_type0(std::int64_t k, const Rational& s,
                                       const Rational& t,
                                       const LatticeVector& b) {
    const std::int64_t b1 = b[0], b2 = b[1], b0 = b1 - k * b2;
    Rational q = hirzebruch_q(k, s, t, b);
    Rational A = Rational(1) / (Rational(b1) * Rational(b2));
    Rational B = Rational(1) / (Rational(b0) * Rational(b2));
    ExpSumQ S;
    auto add = [&](const Rational& freq, const Rational& c) {
        S.add_term(Frequency::constant(freq), LaurentQ::monomial(c, -2));
    };
    add(q, A);
    add(q - t * Rational(b2), -B);
    add(q - s * Rational(b1), -A);
    add(q - (t * Rational(b2) + s * Rational(b0)), B);
    return S;
}

/// b = (b1, 0):
/// S = e^{qu}[ (1/(b1 u))(tau - k/(b1 u))
///           - (e^{-sigma b1 u}/(b1 u))(lambda - k/(b1 u)) ].
inline ExpSumQ closed_hirzebruch_axis1(std::int64_t k, const Rational& s,
                                       const Rational& t, std::int64_t b1) {
    Rational q = hirzebruch_q(k, s, t, {b1, 0});
    Rational lambda = t - Rational(k) * s;
    Rational B1 = Rational(b1);
    ExpSumQ S;
    LaurentQ c0, c1;
    c0.add_term(-1, t / B1);
    c0.add_term(-2, -Rational(k) / (B1 * B1));
    c1.add_term(-1, -lambda / B1);
    c1.add_term(-2, Rational(k) / (B1 * B1));
    S.add_term(Frequency::constant(q), c0);
    S.add_term(Frequency::constant(q - s * B1), c1);
    return S;
}

/// b = (0, b2):
/// S = e^{qu}[ e^{-tau b2 u}/(k b2^2 u^2) - e^{-lambda b2 u}/(k b2^2 u^2)
///           + sigma/(b2 u) ].
inline ExpSumQ closed_hirzebruch_axis2(std::int64_t k, const Rational& s,
                                       const Rational& t, std::int64_t b2) {
    Rational q = hirzebruch_q(k, s, t, {0, b2});
    Rational lambda = t - Rational(k) * s;
    Rational B2 = Rational(b2);
    Rational inv = Rational(1) / (Rational(k) * B2 * B2);
    ExpSumQ S;
    S.add_term(Frequency::constant(q - t * B2), LaurentQ::monomial(inv, -2));
    S.add_term(Frequency::constant(q - lambda * B2),
               LaurentQ::monomial(-inv, -2));
    S.add_term(Frequency::constant(q), LaurentQ::monomial(s / B2, -1));
    return S;
}

/// b = (k b2, b2):
/// S = e^{qu}[ 1/(k b2^2 u^2) - e^{-sigma k b2 u}/(k b2^2 u^2)
///           - sigma e^{-tau b2 u}/(b2 u) ].
inline ExpSumQ closed_hirzebruch_diag(std::int64_t k, const Rational& s,
                                      const Rational& t, std::int64_t b2) {
    Rational q = hirzebruch_q(k, s, t, {k * b2, b2});
    Rational B2 = Rational(b2);
    Rational inv = Rational(1) / (Rational(k) * B2 * B2);
    ExpSumQ S;
    S.add_term(Frequency::constant(q), LaurentQ::monomial(inv, -2));
    S.add_term(Frequency::constant(q - s * Rational(k) * B2),
               LaurentQ::monomial(-inv, -2));
    S.add_term(Frequency::constant(q - t * B2), LaurentQ::monomial(-s / B2, -1));
    return S;
}

// ---------------------------------------------------------------------------
// Closed-form oracles, sphere product [0,sigma] x [0,tau].

/// (4/(b1 b2 u^2)) sinh(sigma b1 u / 2) sinh(tau b2 u / 2), expanded into
/// exponentials.
inline ExpSumQ closed_sphere_type0(const Rational& s, const Rational& t,
                                   std::int64_t b1, std::int64_t b2) {
    Rational A = Rational(1) / (Rational(b1) * Rational(b2));
    Rational x = s * Rational(b1), y = t * Rational(b2);
    ExpSumQ S;
    auto add = [&](const Rational& freq, const Rational& c) {
        S.add_term(Frequency::constant(freq / 2), LaurentQ::monomial(c, -2));
    };
    add(x + y, A);
    add(x - y, -A);
    add(-x + y, -A);
    add(-x - y, A);
    return S;
}

/// (2 tau /(b1 u)) sinh(sigma b1 u / 2) for b = (b1, 0); the other axis is
/// symmetric.
inline ExpSumQ closed_sphere_axis(const Rational& area_other,
                                  const Rational& area_own, std::int64_t b) {
    Rational x = area_own * Rational(b) / 2;
    ExpSumQ S;
    S.add_term(Frequency::constant(x),
               LaurentQ::monomial(area_other / Rational(b), -1));
    S.add_term(Frequency::constant(-x),
               LaurentQ::monomial(-area_other / Rational(b), -1));
    return S;
}

/// Parametric versions over the symbol basis [sigma, tau].
inline ExpSumS closed_sphere_type0_parametric(std::int64_t b1, std::int64_t b2) {
    const std::size_t ns = 2;
    LinForm sig = LinForm::symbol(0, ns), tau = LinForm::symbol(1, ns);
    SymPoly A = SymPoly(Rational(1) / (Rational(b1) * Rational(b2)));
    ExpSumS S(ns);
    auto add = [&](const LinForm& freq, const SymPoly& c) {
        S.add_term(freq * Rational(1, 2), LaurentS::monomial(c, -2));
    };
    LinForm x = sig * Rational(b1), y = tau * Rational(b2);
    add(x + y, A);
    add(x - y, -A);
    add(-x + y, -A);
    add(-x - y, A);
    return S;
}

inline ExpSumS closed_sphere_axis1_parametric(std::int64_t b1) {
    const std::size_t ns = 2;
    LinForm sig = LinForm::symbol(0, ns), tau = LinForm::symbol(1, ns);
    ExpSumS S(ns);
    SymPoly c = SymPoly::from_linform(tau) * (Rational(1) / Rational(b1));
    S.add_term(sig * (Rational(b1) / 2), LaurentS::monomial(c, -1));
    S.add_term(sig * (Rational(-b1) / 2), LaurentS::monomial(-c, -1));
    return S;
}

inline ExpSumS closed_sphere_axis2_parametric(std::int64_t b2) {
    const std::size_t ns = 2;
    LinForm sig = LinForm::symbol(0, ns), tau = LinForm::symbol(1, ns);
    ExpSumS S(ns);
    SymPoly c = SymPoly::from_linform(sig) * (Rational(1) / Rational(b2));
    S.add_term(tau * (Rational(b2) / 2), LaurentS::monomial(c, -1));
    S.add_term(tau * (Rational(-b2) / 2), LaurentS::monomial(-c, -1));
    return S;
}

// ---------------------------------------------------------------------------
// Closed-form oracles, orbits (unnormalized sums).

/// Projective space (blocks (1, n-1), spectrum gap r):
/// sum_k e^{r a_k u} / (u^{n-1} prod_{s!=k}(a_k - a_s)), regular a.
inline ExpSumQ closed_projective_unnormalized(const Rational& r,
                                              const std::vector<std::int64_t>& a) {
    const int n = static_cast<int>(a.size());
    ExpSumQ S;
    for (int k = 0; k < n; ++k) {
        Rational denom(1);
        for (int s = 0; s < n; ++s)
            if (s != k)
                denom *= Rational(a[static_cast<std::size_t>(k)] -
                                  a[static_cast<std::size_t>(s)]);
        S.add_term(
            Frequency::constant(r * Rational(a[static_cast<std::size_t>(k)])),
            LaurentQ::monomial(Rational(1) / denom, -(n - 1)));
    }
    return S;
}

/// Grassmannian (blocks (k, n-k), spectrum gap r): sum over k-subsets c of
/// e^{r alpha_c u} / (p_c u^{k(n-k)}) with alpha_c the selected component
/// sum and p_c the product of a_i - a_j over i in c, j not in c.
inline ExpSumQ closed_grassmann_unnormalized(const Rational& r, int k,
                                             const std::vector<std::int64_t>& a) {
    const int n = static_cast<int>(a.size());
    const int m = k * (n - k);
    ExpSumQ S;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Rational alpha(0), p(1);
        std::vector<bool> in(static_cast<std::size_t>(n), false);
        for (int i : idx)
            in[static_cast<std::size_t>(i)] = true;
        for (int i = 0; i < n; ++i)
            if (in[static_cast<std::size_t>(i)]) {
                alpha += Rational(a[static_cast<std::size_t>(i)]);
                for (int j = 0; j < n; ++j)
                    if (!in[static_cast<std::size_t>(j)])
                        p *= Rational(a[static_cast<std::size_t>(i)] -
                                      a[static_cast<std::size_t>(j)]);
            }
        S.add_term(Frequency::constant(r * alpha),
                   LaurentQ::monomial(Rational(1) / p, -m));
        int i = k;
        bool more = false;
        while (i > 0) {
            --i;
            if (idx[static_cast<std::size_t>(i)] != i + n - k) {
                ++idx[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    idx[static_cast<std::size_t>(j)] =
                        idx[static_cast<std::size_t>(j - 1)] + 1;
                more = true;
                break;
            }
        }
        if (!more)
            break;
    }
    return S;
}

/// Full flag (strictly decreasing spectrum r_1 > ... > r_n):
/// [1/(u^m prod_{i<j}(a_i - a_j))] sum_{perm} sign(perm)
///     e^{u sum_j r_j a_{perm(j)}}, m = n(n-1)/2.
inline ExpSumQ closed_fullflag_unnormalized(const std::vector<Rational>& r,
                                            const std::vector<std::int64_t>& a) {
    const int n = static_cast<int>(a.size());
    const int m = n * (n - 1) / 2;
    Rational vandermonde(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            vandermonde *= Rational(a[static_cast<std::size_t>(i)] -
                                    a[static_cast<std::size_t>(j)]);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[static_cast<std::size_t>(i)] = i;
    ExpSumQ S;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] >
                    perm[static_cast<std::size_t>(j)])
                    ++inversions;
        Rational sign = inversions % 2 == 0 ? Rational(1) : Rational(-1);
        Rational freq(0);
        for (int j = 0; j < n; ++j)
            freq += r[static_cast<std::size_t>(j)] *
                    Rational(a[static_cast<std::size_t>(
                        perm[static_cast<std::size_t>(j)])]);
        S.add_term(Frequency::constant(freq),
                   LaurentQ::monomial(sign / vandermonde, -m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return S;
}

/// Exact moments of the pairing function over the polytope:
///   integral_P <x, X>^m dx
/// by barycentric integration over the fan triangulation. Over an n-simplex
/// with vertex pairings w_0..w_n the integral of the m-th power is
/// vol * m! n! / (m+n)! * h_m(w_0..w_n) with h_m the complete homogeneous
/// symmetric polynomial. Independent of the localization path: only
/// triangulation data enters.
inline Rational complete_homogeneous(int m, const std::vector<Rational>& w) {
    // h_m via the recurrence on the number of variables
    std::vector<Rational> h(static_cast<std::size_t>(m) + 1, Rational(0));
    h[0] = 1;
    for (const auto& x : w)
        for (int d = 1; d <= m; ++d)
            h[static_cast<std::size_t>(d)] +=
                x * h[static_cast<std::size_t>(d - 1)];
    return h[static_cast<std::size_t>(m)];
}

inline Rational pairing_moment(const DelzantPolytope& P, const LatticeVector& X,
                               int m) {
    const std::size_t n = P.dimension();
    Rational total(0);
    for (const auto& s : detail::triangulate(P)) {
        RationalMatrix edges(n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                edges[i - 1].push_back(P.vertices()[s[i]][k] -
                                       P.vertices()[s[0]][k]);
        Rational d = det(edges);
        if (d < 0)
            d = -d;
        Rational vol = d / factorial(static_cast<int>(n));
        std::vector<Rational> pairings;
        for (auto vi : s)
            pairings.push_back(dot(P.vertices()[vi], X));
        total += vol * factorial(m) * factorial(static_cast<int>(n)) /
                 factorial(m + static_cast<int>(n)) *
                 complete_homogeneous(m, pairings);
    }
    return total;
}

/// Direct numeric evaluation of the normalized vertex sum, term by term,
/// bypassing the canonical form entirely.
inline double eval_vertex_sum_numeric(const DelzantPolytope& P,
                                      const LatticeVector& X, double u) {
    auto cm = center_of_mass(P);
    double q = to_double(dot(cm, X));
    const int n = static_cast<int>(P.dimension());
    double total = 0.0;
    for (std::size_t vi = 0; vi < P.vertices().size(); ++vi) {
        double w = 1.0;
        for (const auto& rho : P.vertex_frames()[vi])
            w *= static_cast<double>(dot(rho, X));
        double expo = q - to_double(dot(P.vertices()[vi], X));
        double up = 1.0;
        for (int i = 0; i < n; ++i)
            up *= u;
        total += std::exp(expo * u) / (w * up);
    }
    return total;
}

} // namespace testutil
