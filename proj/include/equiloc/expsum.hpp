#pragma once

#include <cmath>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "equiloc/laurent.hpp"
#include "equiloc/linform.hpp"
#include "equiloc/rational.hpp"
#include "equiloc/scalar.hpp"

namespace equiloc {

/// Canonical finite sum  sum_i Q_i(u) e^{gamma_i u}  with Laurent-polynomial
/// coefficients Q_i and affine-linear frequencies gamma_i over a fixed symbol
/// basis. Terms with equal frequency are merged and zero coefficients are
/// dropped, so the term map is a canonical form: two sums represent the same
/// function exactly when the maps are equal, because exponentials with
/// distinct frequencies are linearly independent over rational functions.
template <class K>
class ExpSum {
public:
    explicit ExpSum(std::size_t nsyms = 0) : nsyms_(nsyms) {}

    static ExpSum zero(std::size_t nsyms = 0) { return ExpSum(nsyms); }

    static ExpSum term(Frequency freq, LaurentPoly<K> coeff) {
        ExpSum s(freq.symbol_count());
        s.add_term(std::move(freq), std::move(coeff));
        return s;
    }

    /// Constant monomial c * u^degree (frequency zero).
    static ExpSum monomial(K c, int degree, std::size_t nsyms = 0) {
        return term(Frequency(nsyms), LaurentPoly<K>::monomial(std::move(c), degree));
    }

    static ExpSum canonicalize(
        std::vector<std::pair<Frequency, LaurentPoly<K>>> raw_terms,
        std::size_t nsyms = 0) {
        ExpSum s(nsyms);
        if (!raw_terms.empty() && raw_terms.front().first.symbol_count() != nsyms)
            s.nsyms_ = raw_terms.front().first.symbol_count();
        for (auto& [freq, coeff] : raw_terms)
            s.add_term(std::move(freq), std::move(coeff));
        return s;
    }

    std::size_t symbol_count() const { return nsyms_; }

    bool is_zero() const { return terms_.empty(); }

    std::size_t term_count() const { return terms_.size(); }

    const std::map<Frequency, LaurentPoly<K>>& terms() const { return terms_; }

    void add_term(const Frequency& freq, const LaurentPoly<K>& coeff) {
        if (freq.symbol_count() != nsyms_)
            throw MixedBasis("term frequency uses a different symbol basis");
        if (coeff.is_zero())
            return;
        auto it = terms_.find(freq);
        if (it == terms_.end()) {
            terms_.emplace(freq, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    ExpSum& operator+=(const ExpSum& o) {
        check_basis(o);
        for (const auto& [f, c] : o.terms_)
            add_term(f, c);
        return *this;
    }
    ExpSum& operator-=(const ExpSum& o) {
        check_basis(o);
        for (const auto& [f, c] : o.terms_)
            add_term(f, -c);
        return *this;
    }
    friend ExpSum operator+(ExpSum a, const ExpSum& b) { return a += b; }
    friend ExpSum operator-(ExpSum a, const ExpSum& b) { return a -= b; }
    friend ExpSum operator-(const ExpSum& a) {
        ExpSum r(a.nsyms_);
        for (const auto& [f, c] : a.terms_)
            r.terms_.emplace(f, -c);
        return r;
    }

    /// Product of sums: frequencies add, coefficients multiply.
    friend ExpSum operator*(const ExpSum& a, const ExpSum& b) {
        a.check_basis(b);
        ExpSum r(a.nsyms_);
        for (const auto& [fa, ca] : a.terms_)
            for (const auto& [fb, cb] : b.terms_)
                r.add_term(fa + fb, ca * cb);
        return r;
    }
    ExpSum& operator*=(const ExpSum& o) { return *this = *this * o; }

    ExpSum& scale(const K& s) {
        if (scalar_is_zero(s)) {
            terms_.clear();
            return *this;
        }
        std::map<Frequency, LaurentPoly<K>> scaled;
        for (auto& [f, c] : terms_) {
            LaurentPoly<K> nc = c;
            nc.scale(s);
            if (!nc.is_zero())
                scaled.emplace(f, std::move(nc));
        }
        terms_ = std::move(scaled);
        return *this;
    }

    ExpSum& scale_rational(const Rational& s) { return scale(K(1) * s); }

    /// Multiplies by e^{q u}: every frequency is shifted by q.
    ExpSum shifted(const Frequency& q) const {
        if (q.symbol_count() != nsyms_)
            throw MixedBasis("frequency shift over a different symbol basis");
        ExpSum r(nsyms_);
        for (const auto& [f, c] : terms_)
            r.terms_.emplace(f + q, c);
        return r;
    }

    /// Substitution u -> m*u (m a nonzero rational): frequencies scale by m,
    /// the u^d coefficient picks up m^d.
    ExpSum substitute_scaled(const Rational& m) const {
        if (m == 0)
            throw InvalidArgument("scale substitution with m = 0");
        ExpSum r(nsyms_);
        for (const auto& [f, c] : terms_)
            r.add_term(f * m, c.substitute_scaled(m));
        return r;
    }

    friend bool operator==(const ExpSum& a, const ExpSum& b) {
        return a.nsyms_ == b.nsyms_ && a.terms_ == b.terms_;
    }

    double eval(double u, std::span<const double> symbol_values = {}) const {
        if (u == 0.0)
            throw InvalidArgument("numeric evaluation at u = 0");
        double v = 0.0;
        for (const auto& [f, c] : terms_)
            v += c.eval(u, symbol_values) * std::exp(f.eval(symbol_values) * u);
        return v;
    }

    std::string str(std::span<const std::string> names = {}) const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [f, c] : terms_) {
            std::string piece = c.str(names);
            if (!f.is_zero()) {
                if (c.coefficients().size() > 1)
                    piece = "(" + piece + ")";
                std::string fs = f.str(names);
                if (!f.is_constant() || fs.find(' ') != std::string::npos)
                    fs = "(" + fs + ")";
                piece += " e^{" + fs + " u}";
            }
            if (!out.empty())
                out += " + ";
            out += piece;
        }
        return out;
    }

    /// LaTeX rendering. When a shift q is supplied the prefactor e^{qu} is
    /// factored out and the terms are displayed with frequencies relative
    /// to q, mirroring the usual normalized display.
    std::string latex(std::span<const std::string> names = {},
                      const Frequency* q = nullptr) const {
        if (terms_.empty())
            return "0";
        std::string out;
        if (q && !q->is_zero())
            out += "e^{" + latex_exponent(*q, names) + "}\\left(";
        bool first = true;
        for (const auto& [f, c] : terms_) {
            std::string piece = latex_coeff(c, names);
            Frequency rel = q ? f - *q : f;
            if (!rel.is_zero())
                piece += "\\, e^{" + latex_exponent(rel, names) + "}";
            if (first) {
                out += piece;
                first = false;
            } else if (!piece.empty() && piece[0] == '-') {
                out += " - " + piece.substr(1);
            } else {
                out += " + " + piece;
            }
        }
        if (q && !q->is_zero())
            out += "\\right)";
        return out;
    }

private:
    void check_basis(const ExpSum& o) const {
        if (nsyms_ != o.nsyms_)
            throw MixedBasis("exponential sums over different symbol bases");
    }

    static std::string latex_rational(const Rational& r) {
        if (denominator(r) == 1)
            return numerator(r).str();
        std::string sign = r < 0 ? "-" : "";
        Rational a = r < 0 ? Rational(-r) : r;
        return sign + "\\frac{" + numerator(a).str() + "}{" +
               denominator(a).str() + "}";
    }

    static std::string latex_linform(const Frequency& f,
                                     std::span<const std::string> names) {
        std::string out;
        bool first = true;
        for (std::size_t i = 0; i < f.symbol_count() + 1; ++i) {
            if (f[i] == 0)
                continue;
            std::string piece = latex_rational(f[i]);
            if (i > 0) {
                std::string name = i - 1 < names.size()
                                       ? "\\" + names[i - 1]
                                       : "g_{" + std::to_string(i) + "}";
                if (f[i] == 1)
                    piece = name;
                else if (f[i] == -1)
                    piece = "-" + name;
                else
                    piece += " " + name;
            }
            if (first) {
                out = piece;
                first = false;
            } else if (!piece.empty() && piece[0] == '-') {
                out += " - " + piece.substr(1);
            } else {
                out += " + " + piece;
            }
        }
        return out.empty() ? "0" : out;
    }

    /// Renders f*u for an exponent, dropping unit coefficients.
    static std::string latex_exponent(const Frequency& f,
                                      std::span<const std::string> names) {
        std::string body = latex_linform(f, names);
        if (body == "1")
            return "u";
        if (body == "-1")
            return "-u";
        if (body.find(' ') != std::string::npos && !f.is_constant())
            return "\\left(" + body + "\\right) u";
        return body + " u";
    }

    static std::string latex_coeff(const LaurentPoly<K>& p,
                                   std::span<const std::string> names) {
        std::vector<std::string> latex_names;
        for (const auto& n : names)
            latex_names.push_back("\\" + n);
        std::string out;
        bool first = true;
        for (const auto& [d, c] : p.coefficients()) {
            std::string piece;
            if constexpr (std::is_same_v<K, Rational>) {
                piece = latex_rational(c);
            } else {
                std::string cs = scalar_str(c, latex_names);
                piece = scalar_is_simple(c) ? cs : "\\left(" + cs + "\\right)";
            }
            if (d != 0) {
                if (piece == "1")
                    piece.clear();
                else if (piece == "-1")
                    piece = "-";
                else
                    piece += " ";
                piece += d == 1 ? "u" : "u^{" + std::to_string(d) + "}";
            }
            if (first) {
                out = piece;
                first = false;
            } else if (!piece.empty() && piece[0] == '-') {
                out += " - " + piece.substr(1);
            } else {
                out += " + " + piece;
            }
        }
        if (p.coefficients().size() > 1)
            out = "\\left(" + out + "\\right)";
        return out;
    }

    std::size_t nsyms_;
    std::map<Frequency, LaurentPoly<K>> terms_;
};

using ExpSumQ = ExpSum<Rational>;
using ExpSumS = ExpSum<SymPoly>;

/// Equality of the represented functions, decided canonically. Comparing
/// sums over different symbol bases is a usage error, not inequality.
template <class K>
bool exp_sum_equal(const ExpSum<K>& a, const ExpSum<K>& b) {
    if (a.symbol_count() != b.symbol_count())
        throw MixedBasis("comparing sums over different symbol bases");
    return a == b;
}

/// Expands a concrete exponential sum as a power series in u and returns the
/// coefficients of u^0 ... u^max_order. Requires the default symbol basis.
/// Throws NegativePowerResidue if any negative power of u survives the
/// summation: the sum is then not a genuine power series, which signals an
/// inconsistent localization input.
inline std::vector<Rational> u_series(const ExpSum<Rational>& E, int max_order) {
    if (E.symbol_count() != 0)
        throw MixedBasis("power-series extraction needs plain rational frequencies");
    if (max_order < 0)
        throw InvalidArgument("negative truncation order");
    int min_val = 0;
    for (const auto& [f, c] : E.terms())
        min_val = std::min(min_val, c.valuation());
    // coefficient of u^m in Q(u) e^{g u}:  sum_d Q_d g^{m-d} / (m-d)!
    std::vector<Rational> out(static_cast<std::size_t>(max_order - min_val + 1),
                              Rational(0));
    for (const auto& [f, c] : E.terms()) {
        const Rational g = f.constant_part();
        for (const auto& [d, q] : c.coefficients()) {
            Rational gp(1); // g^(m-d) running power
            for (int m = d; m <= max_order; ++m) {
                out[static_cast<std::size_t>(m - min_val)] +=
                    q * gp / factorial(m - d);
                gp *= g;
            }
        }
    }
    for (int m = min_val; m < 0; ++m) {
        const Rational& r = out[static_cast<std::size_t>(m - min_val)];
        if (r != 0)
            throw NegativePowerResidue(-m, to_string(r));
    }
    return std::vector<Rational>(out.begin() + (0 - min_val), out.end());
}

} // namespace equiloc
