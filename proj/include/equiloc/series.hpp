#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "equiloc/expsum.hpp"

namespace equiloc {

/// Truncated Laurent series in an auxiliary variable eps whose coefficients
/// are exponential sums in u. A series knows its coefficients exactly on the
/// exponent window [lo, hi]; coefficients below lo are exactly zero and
/// coefficients above hi are unknown. Multiplication shrinks the window by
/// the usual truncated-series rule, so the eps^0 coefficient extracted by the
/// localization engine is always exact.
template <class K>
class TruncatedSeries {
public:
    TruncatedSeries(int lo, int hi, std::size_t nsyms)
        : lo_(lo), hi_(hi),
          coef_(static_cast<std::size_t>(hi - lo + 1), ExpSum<K>(nsyms)),
          nsyms_(nsyms) {
        if (hi < lo)
            throw InvalidArgument("empty truncation window");
    }

    static TruncatedSeries from_coefficients(int lo, std::vector<ExpSum<K>> coef,
                                             std::size_t nsyms) {
        TruncatedSeries s(lo, lo + static_cast<int>(coef.size()) - 1, nsyms);
        s.coef_ = std::move(coef);
        return s;
    }

    /// The unit series 1 + 0*eps + ... known through eps^hi.
    static TruncatedSeries unit(int hi, std::size_t nsyms) {
        TruncatedSeries s(0, hi, nsyms);
        s.coef_[0] = ExpSum<K>::monomial(K(1), 0, nsyms);
        return s;
    }

    /// exp(c * eps) expanded through eps^hi.
    static TruncatedSeries exponential(const K& c, int hi, std::size_t nsyms) {
        TruncatedSeries s(0, hi, nsyms);
        K power(1);
        for (int m = 0; m <= hi; ++m) {
            ExpSum<K> coeff = ExpSum<K>::monomial(power, 0, nsyms);
            coeff.scale_rational(Rational(1) / factorial(m));
            s.coef_[static_cast<std::size_t>(m)] = std::move(coeff);
            power *= c;
        }
        return s;
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    std::size_t symbol_count() const { return nsyms_; }

    const ExpSum<K>& coefficient(int k) const {
        if (k < lo_ || k > hi_)
            throw InvalidArgument("series coefficient outside the known window");
        return coef_[static_cast<std::size_t>(k - lo_)];
    }

    void set_coefficient(int k, ExpSum<K> value) {
        if (k < lo_ || k > hi_)
            throw InvalidArgument("series coefficient outside the known window");
        coef_[static_cast<std::size_t>(k - lo_)] = std::move(value);
    }

    bool is_zero() const {
        return std::all_of(coef_.begin(), coef_.end(),
                           [](const ExpSum<K>& c) { return c.is_zero(); });
    }

    /// Index of the first nonzero coefficient, or hi+1 when all are zero.
    int leading_index() const {
        for (int k = lo_; k <= hi_; ++k)
            if (!coefficient(k).is_zero())
                return k;
        return hi_ + 1;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        TruncatedSeries sum(std::min(lo_, o.lo_), std::min(hi_, o.hi_), nsyms_);
        for (int k = sum.lo_; k <= sum.hi_; ++k) {
            ExpSum<K> c(nsyms_);
            if (k >= lo_ && k <= hi_)
                c += coefficient(k);
            if (k >= o.lo_ && k <= o.hi_)
                c += o.coefficient(k);
            sum.set_coefficient(k, std::move(c));
        }
        return *this = std::move(sum);
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        return a += b;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a,
                                     const TruncatedSeries& b) {
        int lo = a.lo_ + b.lo_;
        int hi = std::min(a.hi_ + b.lo_, a.lo_ + b.hi_);
        if (hi < lo)
            throw InvalidArgument("incompatible truncation windows in product");
        TruncatedSeries r(lo, hi, a.nsyms_);
        for (int i = a.lo_; i <= a.hi_; ++i) {
            if (a.coefficient(i).is_zero())
                continue;
            for (int j = b.lo_; j <= b.hi_; ++j) {
                int k = i + j;
                if (k < lo || k > hi)
                    continue;
                ExpSum<K> c = r.coefficient(k);
                c += a.coefficient(i) * b.coefficient(j);
                r.set_coefficient(k, std::move(c));
            }
        }
        return r;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) {
        return *this = *this * o;
    }

    /// Inverse series. The leading nonzero coefficient must be an invertible
    /// exponential sum: a single term with frequency zero whose Laurent
    /// coefficient is a monomial c*u^d.
    TruncatedSeries invert() const {
        int lead = leading_index();
        if (lead > hi_)
            throw NonInvertibleLeadingTerm("inverting the zero series");
        const ExpSum<K>& L = coefficient(lead);
        ExpSum<K> Linv = invert_monomial_sum(L);
        // a = L eps^lead (1 + s)  =>  a^{-1} = L^{-1} eps^{-lead} sum (-s)^m
        int rel = hi_ - lead;
        TruncatedSeries s(0, rel, nsyms_); // the tail series s
        for (int k = 1; k <= rel; ++k)
            s.set_coefficient(k, Linv * coefficient(lead + k));
        TruncatedSeries acc = unit(rel, nsyms_);
        TruncatedSeries power = unit(rel, nsyms_);
        for (int m = 1; m <= rel; ++m) {
            power *= s;
            TruncatedSeries signed_power = power;
            if (m % 2 == 1)
                for (int k = signed_power.lo_; k <= signed_power.hi_; ++k)
                    signed_power.set_coefficient(k, -signed_power.coefficient(k));
            acc += signed_power;
        }
        TruncatedSeries result(-lead, -lead + rel, nsyms_);
        for (int k = 0; k <= rel; ++k)
            result.set_coefficient(k - lead, Linv * acc.coefficient(k));
        return result;
    }

private:
    /// Inverse of a one-term, frequency-zero, monomial exponential sum.
    static ExpSum<K> invert_monomial_sum(const ExpSum<K>& L) {
        if (L.term_count() != 1)
            throw NonInvertibleLeadingTerm(
                "leading coefficient is not a single exponential term");
        const auto& [freq, poly] = *L.terms().begin();
        if (!freq.is_zero())
            throw NonInvertibleLeadingTerm(
                "leading coefficient carries a nonzero frequency");
        if (poly.coefficients().size() != 1)
            throw NonInvertibleLeadingTerm(
                "leading coefficient is not a monomial in u");
        const auto& [deg, c] = *poly.coefficients().begin();
        if constexpr (std::is_same_v<K, Rational>) {
            return ExpSum<K>::monomial(Rational(1) / c, -deg, L.symbol_count());
        } else {
            if (!c.is_constant())
                throw NonInvertibleLeadingTerm(
                    "leading coefficient is not invertible over the symbols");
            return ExpSum<K>::monomial(K(Rational(1) / c.constant_value()), -deg,
                                       L.symbol_count());
        }
    }

    int lo_, hi_;
    std::vector<ExpSum<K>> coef_;
    std::size_t nsyms_;
};

using SeriesQ = TruncatedSeries<Rational>;
using SeriesS = TruncatedSeries<SymPoly>;

} // namespace equiloc
