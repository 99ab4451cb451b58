#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equiloc/equivalence.hpp"
#include "equiloc/localize.hpp"

namespace equiloc {

/// A nondegenerate coadjoint orbit of SU(n), described by the weakly
/// decreasing rational spectrum (r_1 >= ... >= r_n) of the defining diagonal
/// functional; the spectrum is meaningful up to a common shift. Blocks of
/// equal values encode the stabilizer: block sizes (m_1, ..., m_p) give the
/// flag manifold type.
struct OrbitSpec {
    int n = 0;
    std::vector<Rational> spectrum;

    static OrbitSpec create(int n, std::vector<Rational> spectrum) {
        if (n < 2)
            throw InvalidOrbitSpec("orbit dimension must be at least 2");
        if (static_cast<int>(spectrum.size()) != n)
            throw InvalidOrbitSpec("spectrum length must equal n");
        for (std::size_t i = 1; i < spectrum.size(); ++i)
            if (spectrum[i - 1] < spectrum[i])
                throw InvalidOrbitSpec("spectrum must be weakly decreasing");
        if (spectrum.front() == spectrum.back())
            throw InvalidOrbitSpec(
                "degenerate orbit: all spectrum values are equal");
        return OrbitSpec{n, std::move(spectrum)};
    }

    /// Multiplicities of the distinct spectrum values, in order.
    std::vector<int> block_sizes() const {
        std::vector<int> sizes;
        for (std::size_t i = 0; i < spectrum.size(); ++i) {
            if (i == 0 || spectrum[i] != spectrum[i - 1])
                sizes.push_back(1);
            else
                ++sizes.back();
        }
        return sizes;
    }

    /// Number of positive roots of the orbit: pairs of indices in distinct
    /// blocks. This is the complex dimension of the orbit.
    int positive_root_count() const {
        auto sizes = block_sizes();
        int total = 0, partial = 0;
        for (int s : sizes) {
            total += partial * s;
            partial += s;
        }
        return total;
    }
};

/// A trace-zero integer diagonal direction in su(n): X = i*diag(a_1..a_n).
struct SuVector {
    std::vector<std::int64_t> a;

    static SuVector create(std::vector<std::int64_t> a) {
        std::int64_t sum = 0;
        for (auto x : a)
            sum += x;
        if (sum != 0)
            throw InvalidArgument("su(n) diagonal must be trace-zero");
        return SuVector{std::move(a)};
    }

    bool is_zero() const {
        return std::all_of(a.begin(), a.end(),
                           [](std::int64_t x) { return x == 0; });
    }

    bool regular() const {
        auto s = a;
        std::sort(s.begin(), s.end());
        return std::adjacent_find(s.begin(), s.end()) == s.end();
    }
};

/// A coset of the Weyl group by the stabilizer, represented as the ordered
/// partition of {0..n-1} into the spectrum blocks: blocks[l] lists the
/// indices of a assigned to the l-th block.
using Coset = std::vector<std::vector<int>>;

namespace detail {

inline void enumerate_partitions(const std::vector<int>& sizes,
                                 std::vector<int> remaining, Coset& current,
                                 std::vector<Coset>& out) {
    if (current.size() == sizes.size()) {
        out.push_back(current);
        return;
    }
    const int want = sizes[current.size()];
    if (static_cast<int>(remaining.size()) == want) {
        current.push_back(remaining);
        out.push_back(current);
        current.pop_back();
        return;
    }
    // choose `want` indices from `remaining`, lexicographically
    std::vector<int> pick(static_cast<std::size_t>(want));
    std::vector<std::size_t> idx(static_cast<std::size_t>(want));
    std::iota(idx.begin(), idx.end(), 0);
    const std::size_t m = remaining.size();
    while (true) {
        std::vector<int> rest;
        for (std::size_t i = 0, k = 0; i < m; ++i) {
            if (k < idx.size() && idx[k] == i) {
                pick[k] = remaining[i];
                ++k;
            } else {
                rest.push_back(remaining[i]);
            }
        }
        current.push_back(pick);
        enumerate_partitions(sizes, rest, current, out);
        current.pop_back();
        // next combination
        std::size_t i = idx.size();
        bool more = false;
        while (i > 0) {
            --i;
            if (idx[i] != i + m - idx.size()) {
                ++idx[i];
                for (std::size_t j = i + 1; j < idx.size(); ++j)
                    idx[j] = idx[j - 1] + 1;
                more = true;
                break;
            }
        }
        if (!more)
            break;
    }
}

} // namespace detail

/// One representative per coset of the Weyl group by the stabilizer of the
/// orbit: ordered set partitions of the index set into the spectrum blocks.
/// The count is n! / (m_1! ... m_p!).
inline std::vector<Coset> enumerate_cosets(const OrbitSpec& spec) {
    std::vector<int> all(static_cast<std::size_t>(spec.n));
    std::iota(all.begin(), all.end(), 0);
    std::vector<Coset> out;
    Coset current;
    detail::enumerate_partitions(spec.block_sizes(), all, current, out);
    return out;
}

/// Isotropy weights of the fixed point indexed by a coset: a_i - a_j over
/// the positive roots of the orbit, i.e. over pairs with i assigned to an
/// earlier block than j. Zero weights mean X is not regular for this orbit;
/// they are rejected unless the caller opts into the regularized engine.
inline std::vector<std::int64_t>
fixed_point_weights(const OrbitSpec& spec, const SuVector& X, const Coset& coset,
                    bool allow_degenerate = false) {
    if (static_cast<int>(X.a.size()) != spec.n)
        throw InvalidArgument("vector length does not match the orbit");
    std::vector<std::int64_t> weights;
    for (std::size_t bl = 0; bl < coset.size(); ++bl)
        for (std::size_t bm = bl + 1; bm < coset.size(); ++bm)
            for (int i : coset[bl])
                for (int j : coset[bm]) {
                    std::int64_t w = X.a[static_cast<std::size_t>(i)] -
                                     X.a[static_cast<std::size_t>(j)];
                    if (w == 0 && !allow_degenerate)
                        throw DegenerateWeight(
                            "non-regular direction for this orbit");
                    weights.push_back(w);
                }
    return weights;
}

/// Moment datum of one fixed point: the value sum_l r_(l) * sum_{j in
/// block l} a_j paired with the product of the isotropy weights.
struct CosetPoint {
    Coset rep;
    Rational moment_value;
    Rational euler_coeff;
};

inline void require_compatible(const OrbitSpec& spec, const SuVector& X) {
    if (static_cast<int>(X.a.size()) != spec.n)
        throw InvalidArgument("vector length does not match the orbit");
}

namespace detail {

inline Rational coset_moment(const OrbitSpec& spec, const SuVector& X,
                             const Coset& coset) {
    // distinct spectrum values in block order
    std::vector<Rational> values;
    for (std::size_t i = 0; i < spec.spectrum.size(); ++i)
        if (i == 0 || spec.spectrum[i] != spec.spectrum[i - 1])
            values.push_back(spec.spectrum[i]);
    Rational m(0);
    for (std::size_t bl = 0; bl < coset.size(); ++bl)
        for (int j : coset[bl])
            m += values[bl] * Rational(X.a[static_cast<std::size_t>(j)]);
    return m;
}

inline std::vector<LocalizationTerm<Rational>>
orbit_terms(const OrbitSpec& spec, const SuVector& X,
            const std::vector<std::int64_t>& probe) {
    std::vector<LocalizationTerm<Rational>> terms;
    SuVector C{probe};
    for (const auto& coset : enumerate_cosets(spec)) {
        LocalizationTerm<Rational> t;
        t.freq = Frequency::constant(coset_moment(spec, X, coset));
        t.eps_shift = coset_moment(spec, C, coset);
        auto wx = fixed_point_weights(spec, X, coset, true);
        auto wc = fixed_point_weights(spec, C, coset, true);
        for (std::size_t i = 0; i < wx.size(); ++i)
            t.weights.emplace_back(Rational(wx[i]), Rational(wc[i]));
        terms.push_back(std::move(t));
    }
    return terms;
}

inline bool orbit_probe_valid(const OrbitSpec& spec, const SuVector& X,
                              const std::vector<std::int64_t>& probe) {
    for (const auto& coset : enumerate_cosets(spec)) {
        auto wx = fixed_point_weights(spec, X, coset, true);
        SuVector C{probe};
        auto wc = fixed_point_weights(spec, C, coset, true);
        for (std::size_t i = 0; i < wx.size(); ++i)
            if (wx[i] == 0 && wc[i] == 0)
                return false;
    }
    return true;
}

} // namespace detail

/// Materialized fixed-point data for a regular direction.
inline std::vector<CosetPoint> coset_points(const OrbitSpec& spec,
                                            const SuVector& X) {
    require_compatible(spec, X);
    std::vector<CosetPoint> pts;
    for (const auto& coset : enumerate_cosets(spec)) {
        CosetPoint p;
        p.rep = coset;
        p.moment_value = detail::coset_moment(spec, X, coset);
        Rational e(1);
        for (auto w : fixed_point_weights(spec, X, coset))
            e *= w;
        p.euler_coeff = e;
        pts.push_back(std::move(p));
    }
    return pts;
}

/// Orbit localization sum without the normalizing prefactor:
/// sum_w e^{moment_w u} / (euler_w u^m), m the number of positive roots.
/// Non-regular directions go through the perturbation engine.
inline ExpSumQ unnormalized_orbit_sum(const OrbitSpec& spec, const SuVector& X) {
    require_compatible(spec, X);
    if (X.is_zero())
        throw ZeroVector("circle action of the zero direction");
    const int m = spec.positive_root_count();
    const int order = truncation_order(m);
    if (X.regular()) {
        std::vector<std::int64_t> nop(static_cast<std::size_t>(spec.n), 0);
        return localize_eps<Rational>(detail::orbit_terms(spec, X, nop), 0,
                                      order);
    }
    // probe (1, t, t^2, ...) made trace-free by a common shift, which
    // changes nothing: weights use differences only and a global shift
    // multiplies the sum by a unit exponential in eps.
    std::vector<std::vector<std::int64_t>> probes;
    for (std::int64_t t = 1; probes.size() < 2; ++t) {
        if (t > 4096)
            throw BadProbe("no valid probe direction found");
        std::vector<std::int64_t> c(static_cast<std::size_t>(spec.n));
        std::int64_t p = 1;
        for (auto& x : c) {
            x = p;
            p *= t;
        }
        if (detail::orbit_probe_valid(spec, X, c))
            probes.push_back(std::move(c));
    }
    auto first = localize_eps<Rational>(detail::orbit_terms(spec, X, probes[0]),
                                        0, order);
    auto second = localize_eps<Rational>(
        detail::orbit_terms(spec, X, probes[1]), 0, order);
    if (!(first == second))
        throw ResidueError("regularized sum depends on the probe direction");
    return first;
}

/// Normalizing constant: kappa = -c1/c0 of the unnormalized orbit sum. The
/// u^0 coefficient is the symplectic volume up to m! and must be positive.
inline Rational kappa_orbit(const OrbitSpec& spec, const SuVector& X) {
    ExpSumQ raw = unnormalized_orbit_sum(spec, X);
    auto coeffs = u_series(raw, 1);
    if (coeffs[0] <= 0)
        throw ResidueError("non-positive volume coefficient in an orbit sum");
    return -coeffs[1] / coeffs[0];
}

/// S-class of the circle action of X on the orbit.
inline ExpSumQ s_class_orbit(const OrbitSpec& spec, const SuVector& X) {
    ExpSumQ raw = unnormalized_orbit_sum(spec, X);
    Rational kappa = kappa_orbit(spec, X);
    return raw.shifted(Frequency::constant(kappa));
}

// ---------------------------------------------------------------------------
// Decision procedures

/// Conjugation by a Weyl element: equal sorted component multisets prove the
/// actions equivalent; otherwise this test alone decides nothing.
inline Verdict weyl_orbit_test(const SuVector& X, const SuVector& Xp) {
    auto sa = X.a, sb = Xp.a;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa == sb)
        return make_verdict(Status::Equivalent, "weyl-conjugation",
                            {"component-multiset"});
    return make_verdict(Status::InconclusiveNecessaryPassed,
                        "no permutation matches the components",
                        {"component-multiset"});
}

/// Complete decision on the projective-space orbit (blocks (1, n-1)):
/// equivalence holds exactly when the component multisets agree. The S-class
/// route is computed alongside and must agree with the verdict.
inline Verdict cpn_decide(const OrbitSpec& spec, const SuVector& X,
                          const SuVector& Xp) {
    auto sizes = spec.block_sizes();
    if (sizes.size() != 2 || sizes[0] != 1)
        throw InvalidOrbitSpec("projective-space orbit needs blocks (1, n-1)");
    if (X.is_zero() || Xp.is_zero())
        throw ZeroVector("zero direction");
    auto sa = X.a, sb = Xp.a;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    bool permuted = sa == sb;
    bool s_equal = s_class_orbit(spec, X) == s_class_orbit(spec, Xp);
    if (permuted != s_equal)
        throw ResidueError("component multisets and S-class equality disagree "
                           "on a projective-space orbit");
    if (permuted)
        return make_verdict(Status::Equivalent, "spectrum-permutation",
                            {"component-multiset", "s-class-equality"});
    return make_verdict(Status::NotEquivalent,
                        "projective-complete-classification",
                        {"component-multiset", "s-class-equality"});
}

namespace detail {

/// Shift matching of two sorted multisets: the unique candidate shift is
/// fixed by the minima.
inline std::optional<Rational> multiset_shift(std::vector<Rational> from,
                                              std::vector<Rational> to) {
    if (from.size() != to.size() || from.empty())
        return std::nullopt;
    std::sort(from.begin(), from.end());
    std::sort(to.begin(), to.end());
    Rational beta = to.front() - from.front();
    for (std::size_t i = 0; i < from.size(); ++i)
        if (from[i] + beta != to[i])
            return std::nullopt;
    return beta;
}

} // namespace detail

/// Necessary condition on a Grassmannian orbit (blocks (k, n-k), regular
/// directions): the multisets of k-fold component sums must agree up to a
/// constant shift. Independent of the spectrum scale.
inline Verdict grassmann_necessary(const OrbitSpec& spec, const SuVector& X,
                                   const SuVector& Xp) {
    auto sizes = spec.block_sizes();
    if (sizes.size() != 2 || sizes[0] < 2 || sizes[1] < 1)
        throw InvalidOrbitSpec(
            "grassmannian test needs blocks (k, n-k) with 1 < k < n");
    require_compatible(spec, X);
    require_compatible(spec, Xp);
    if (!X.regular() || !Xp.regular())
        throw NonRegular("grassmannian test needs regular directions");
    const int k = sizes[0];
    auto sums = [&](const SuVector& v) {
        std::vector<Rational> out;
        for (const auto& coset : enumerate_cosets(spec)) {
            Rational s(0);
            for (int i : coset[0])
                s += Rational(v.a[static_cast<std::size_t>(i)]);
            out.push_back(s);
        }
        return out;
    };
    (void)k;
    auto beta = detail::multiset_shift(sums(X), sums(Xp));
    if (!beta)
        return make_verdict(Status::NotEquivalent, "grassmann-shift-mismatch",
                            {"k-sum-multiset-shift"});
    return make_verdict(Status::InconclusiveNecessaryPassed,
                        "beta=" + to_string(*beta), {"k-sum-multiset-shift"});
}

/// Necessary condition on the full flag orbit (all blocks singletons,
/// regular directions): the n!-element multisets of spectrum-weighted
/// component sums must agree up to a constant shift. Unlike the
/// Grassmannian test this depends on the symplectic structure through the
/// spectrum.
inline Verdict flag_necessary(const OrbitSpec& spec, const SuVector& X,
                              const SuVector& Xp) {
    auto sizes = spec.block_sizes();
    if (static_cast<int>(sizes.size()) != spec.n)
        throw InvalidOrbitSpec("full-flag test needs a strictly decreasing "
                               "spectrum");
    require_compatible(spec, X);
    require_compatible(spec, Xp);
    if (!X.regular() || !Xp.regular())
        throw NonRegular("full-flag test needs regular directions");
    auto sums = [&](const SuVector& v) {
        std::vector<Rational> out;
        for (const auto& coset : enumerate_cosets(spec))
            out.push_back(detail::coset_moment(spec, v, coset));
        return out;
    };
    auto beta = detail::multiset_shift(sums(X), sums(Xp));
    if (!beta)
        return make_verdict(Status::NotEquivalent, "flag-shift-mismatch",
                            {"weighted-sum-multiset-shift"});
    return make_verdict(Status::InconclusiveNecessaryPassed,
                        "beta=" + to_string(*beta),
                        {"weighted-sum-multiset-shift"});
}

/// Generic tests on the moment-value multisets of a regular direction: the
/// translation test proves inequivalence when no shift matches, and the
/// reparametrization variant additionally allows an integer scale.
struct OrbitValueReport {
    Verdict translation;
    Verdict reparam;
};

inline OrbitValueReport orbit_value_tests(const OrbitSpec& spec,
                                          const SuVector& X,
                                          const SuVector& Xp) {
    require_compatible(spec, X);
    require_compatible(spec, Xp);
    if (!X.regular() || !Xp.regular())
        throw NonRegular("moment-multiset tests need regular directions");
    std::vector<Rational> mx, my;
    for (const auto& coset : enumerate_cosets(spec)) {
        mx.push_back(detail::coset_moment(spec, X, coset));
        my.push_back(detail::coset_moment(spec, Xp, coset));
    }
    OrbitValueReport report;
    auto beta = detail::multiset_shift(mx, my);
    if (beta)
        report.translation =
            make_verdict(Status::InconclusiveNecessaryPassed,
                         "shift=" + to_string(*beta), {"moment-multiset-shift"});
    else
        report.translation =
            make_verdict(Status::NotEquivalent, "moment-multiset-no-translation",
                         {"moment-multiset-shift"});

    // affine variant: lambda * mx + shift = my with integer lambda != 0;
    // the spread pins |lambda|
    auto spread = [](std::vector<Rational> v) {
        auto [mn, mx_] = std::minmax_element(v.begin(), v.end());
        return *mx_ - *mn;
    };
    Rational sx = spread(mx), sy = spread(my);
    report.reparam = make_verdict(Status::NotEquivalent,
                                  "moment-multiset-no-affine-match",
                                  {"moment-multiset-affine"});
    if (sx > 0 && sy > 0) {
        Rational ratio = sy / sx;
        if (denominator(ratio) == 1 && ratio != 0) {
            std::int64_t l = static_cast<std::int64_t>(numerator(ratio));
            for (std::int64_t lambda : {l, -l}) {
                std::vector<Rational> scaled;
                for (const auto& v : mx)
                    scaled.push_back(v * Rational(lambda));
                if (auto shift = detail::multiset_shift(scaled, my)) {
                    report.reparam = make_verdict(
                        Status::InconclusiveNecessaryPassed,
                        "lambda=" + std::to_string(lambda) +
                            " shift=" + to_string(*shift),
                        {"moment-multiset-affine"});
                    break;
                }
            }
        }
    }
    return report;
}

} // namespace equiloc
