#pragma once

#include <cstdlib>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "equiloc/series.hpp"

namespace equiloc {

/// One fixed-point contribution to a regularized localization sum:
///
///   e^{freq * u} * e^{eps_shift * eps} / prod_i (w_i * u + w'_i * eps)
///
/// where freq is the u-exponent, eps_shift the probe direction's exponent,
/// and each weight pair (w_i, w'_i) is an isotropy weight together with its
/// probe perturbation. A weight with w_i = 0 is degenerate and contributes
/// an eps-pole; the engine sums all contributions, checks that every
/// negative eps-power cancels exactly, and returns the eps^0 coefficient.
template <class K>
struct LocalizationTerm {
    Frequency freq;
    K eps_shift;
    std::vector<std::pair<Rational, Rational>> weights;
};

/// Relative eps-truncation order. The default n+1 exceeds every possible
/// pole order (at most n degenerate weights per fixed point), so the eps^0
/// coefficient is always exact. EQUILOC_TRUNCATION overrides it.
inline int truncation_order(int n) {
    if (const char* env = std::getenv("EQUILOC_TRUNCATION")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return n + 1;
}

template <class K>
ExpSum<K> localize_eps(std::span<const LocalizationTerm<K>> terms,
                       std::size_t nsyms, int order) {
    if (order < 1)
        throw InvalidArgument("truncation order must be at least 1");
    bool have_sum = false;
    TruncatedSeries<K> total(0, order, nsyms);
    for (const auto& term : terms) {
        TruncatedSeries<K> t = TruncatedSeries<K>::exponential(term.eps_shift,
                                                               order, nsyms);
        for (const auto& [w, wp] : term.weights) {
            if (w == 0 && wp == 0)
                throw BadProbe("probe direction annihilates a degenerate weight");
            TruncatedSeries<K> factor(0, order, nsyms);
            factor.set_coefficient(0, ExpSum<K>::monomial(K(1) * w, 1, nsyms));
            if (order >= 1)
                factor.set_coefficient(1, ExpSum<K>::monomial(K(1) * wp, 0, nsyms));
            t *= factor.invert();
        }
        // attach the exponential e^{freq u} to every eps-coefficient
        for (int k = t.lo(); k <= t.hi(); ++k)
            t.set_coefficient(k, t.coefficient(k).shifted(term.freq));
        if (!have_sum) {
            total = std::move(t);
            have_sum = true;
        } else {
            total += t;
        }
    }
    if (!have_sum)
        return ExpSum<K>(nsyms);
    if (total.hi() < 0)
        throw InvalidArgument("truncation order too small for the pole order");
    for (int k = total.lo(); k < 0; ++k)
        if (!total.coefficient(k).is_zero())
            throw ResidueError("negative eps-power eps^" + std::to_string(k) +
                               " fails to cancel in the localization sum");
    return total.coefficient(0);
}

/// Unregularized localization sum: every weight must be nonzero.
template <class K>
ExpSum<K> localize_exact(std::span<const LocalizationTerm<K>> terms,
                         std::size_t nsyms) {
    ExpSum<K> total(nsyms);
    for (const auto& term : terms) {
        Rational denom(1);
        for (const auto& [w, wp] : term.weights) {
            (void)wp;
            if (w == 0)
                throw DegenerateWeight("zero isotropy weight in an exact sum");
            denom *= w;
        }
        int n = static_cast<int>(term.weights.size());
        total.add_term(term.freq, LaurentPoly<K>::monomial(
                                      K(1) * (Rational(1) / denom), -n));
    }
    return total;
}

} // namespace equiloc
