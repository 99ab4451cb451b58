#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "equiloc/rational.hpp"
#include "equiloc/scalar.hpp"

namespace equiloc {

/// Sparse univariate Laurent polynomial in u with coefficients in K
/// (K = Rational for concrete computations, SymPoly in parametric mode).
/// No zero coefficients are ever stored, so the coefficient map is a
/// canonical form and equality is map equality.
template <class K>
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(K c, int degree) {
        LaurentPoly p;
        if (!scalar_is_zero(c))
            p.coef_.emplace(degree, std::move(c));
        return p;
    }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(K(1), 0); }

    bool is_zero() const { return coef_.empty(); }

    /// Largest exponent with a nonzero coefficient; defined on nonzero input.
    int degree() const {
        require_nonzero();
        return coef_.rbegin()->first;
    }

    /// Smallest exponent with a nonzero coefficient.
    int valuation() const {
        require_nonzero();
        return coef_.begin()->first;
    }

    const std::map<int, K>& coefficients() const { return coef_; }

    K coefficient(int degree) const {
        auto it = coef_.find(degree);
        return it == coef_.end() ? K(0) : it->second;
    }

    void add_term(int degree, const K& c) {
        if (scalar_is_zero(c))
            return;
        auto it = coef_.find(degree);
        if (it == coef_.end()) {
            coef_.emplace(degree, c);
        } else {
            it->second += c;
            if (scalar_is_zero(it->second))
                coef_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [d, c] : o.coef_)
            add_term(d, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [d, c] : o.coef_)
            add_term(d, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
        return a += b;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
        return a -= b;
    }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [d, c] : a.coef_)
            r.coef_.emplace(d, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [da, ca] : a.coef_)
            for (const auto& [db, cb] : b.coef_)
                r.add_term(da + db, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& scale(const K& s) {
        if (scalar_is_zero(s)) {
            coef_.clear();
            return *this;
        }
        for (auto& [d, c] : coef_)
            c *= s;
        std::erase_if(coef_, [](const auto& e) { return scalar_is_zero(e.second); });
        return *this;
    }

    /// Multiplies by u^shift.
    LaurentPoly& shift(int amount) {
        if (amount == 0 || coef_.empty())
            return *this;
        std::map<int, K> shifted;
        for (auto& [d, c] : coef_)
            shifted.emplace(d + amount, std::move(c));
        coef_ = std::move(shifted);
        return *this;
    }

    /// Substitution u -> m*u: the u^d coefficient is multiplied by m^d.
    LaurentPoly substitute_scaled(const Rational& m) const {
        if (m == 0)
            throw InvalidArgument("scale substitution with m = 0");
        LaurentPoly r;
        for (const auto& [d, c] : coef_) {
            K nc = c;
            nc *= rat_pow(m, d);
            r.coef_.emplace(d, std::move(nc));
        }
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coef_ == b.coef_;
    }

    double eval(double u, std::span<const double> symbol_values = {}) const {
        double v = 0.0;
        for (const auto& [d, c] : coef_) {
            double p = 1.0;
            for (int i = 0; i < (d < 0 ? -d : d); ++i)
                p *= u;
            if (d < 0)
                p = 1.0 / p;
            v += scalar_eval(c, symbol_values) * p;
        }
        return v;
    }

    std::string str(std::span<const std::string> names = {}) const {
        if (coef_.empty())
            return "0";
        std::string out;
        for (const auto& [d, c] : coef_) {
            std::string piece = "(" + scalar_str(c, names) + ")";
            if (d == 1)
                piece += "u";
            else if (d != 0)
                piece += "u^" + std::to_string(d);
            if (out.empty())
                out = piece;
            else
                out += " + " + piece;
        }
        return out;
    }

private:
    void require_nonzero() const {
        if (coef_.empty())
            throw InvalidArgument("degree/valuation of the zero polynomial");
    }

    std::map<int, K> coef_;
};

using LaurentQ = LaurentPoly<Rational>;
using LaurentS = LaurentPoly<SymPoly>;

} // namespace equiloc
