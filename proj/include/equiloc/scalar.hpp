#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "equiloc/linform.hpp"
#include "equiloc/rational.hpp"

namespace equiloc {

/// Sparse multivariate polynomial over Q in the context's symbols.
/// This is the coefficient scalar of the parametric (symbolic sigma, tau)
/// mode; concrete computations use plain Rational scalars instead.
class SymPoly {
public:
    SymPoly() = default;
    SymPoly(const Rational& c) { // NOLINT: implicit by design
        if (c != 0)
            terms_[{}] = c;
    }
    SymPoly(int c) : SymPoly(Rational(c)) {}

    static SymPoly from_linform(const LinForm& f) {
        SymPoly p;
        if (f.constant_part() != 0)
            p.terms_[std::vector<int>{}] = f.constant_part();
        for (std::size_t i = 1; i <= f.symbol_count(); ++i) {
            if (f[i] == 0)
                continue;
            std::vector<int> mono(i, 0);
            mono[i - 1] = 1;
            p.terms_[std::move(mono)] = f[i];
        }
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && is_trivial_mono(terms_.begin()->first));
    }

    Rational constant_value() const {
        if (terms_.empty())
            return Rational(0);
        if (!is_constant())
            throw InvalidArgument("symbolic value where a constant was required");
        return terms_.begin()->second;
    }

    SymPoly& operator+=(const SymPoly& o) {
        for (const auto& [mono, c] : o.terms_)
            add_term(mono, c);
        return *this;
    }
    SymPoly& operator-=(const SymPoly& o) {
        for (const auto& [mono, c] : o.terms_)
            add_term(mono, -c);
        return *this;
    }
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator-(const SymPoly& a) {
        SymPoly r;
        for (const auto& [mono, c] : a.terms_)
            r.terms_[mono] = -c;
        return r;
    }

    friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
        SymPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }

    SymPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [mono, c] : terms_)
            c *= s;
        return *this;
    }
    friend SymPoly operator*(SymPoly a, const Rational& s) { return a *= s; }
    friend SymPoly operator*(const Rational& s, SymPoly a) { return a *= s; }

    SymPoly& operator/=(const Rational& s) {
        if (s == 0)
            throw InvalidArgument("division by zero");
        for (auto& [mono, c] : terms_)
            c /= s;
        return *this;
    }

    friend bool operator==(const SymPoly& a, const SymPoly& b) {
        return a.terms_ == b.terms_;
    }

    double eval(std::span<const double> symbol_values) const {
        double v = 0.0;
        for (const auto& [mono, c] : terms_) {
            double m = to_double(c);
            for (std::size_t i = 0; i < mono.size(); ++i) {
                double s = i < symbol_values.size() ? symbol_values[i] : 0.0;
                for (int e = 0; e < mono[i]; ++e)
                    m *= s;
            }
            v += m;
        }
        return v;
    }

    std::string str(std::span<const std::string> names = {}) const {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [mono, c] : terms_) {
            std::string piece;
            bool unit_mono = is_trivial_mono(mono);
            if (unit_mono || (c != 1 && c != -1))
                piece = to_string(c);
            else if (c == -1)
                piece = "-";
            for (std::size_t i = 0; i < mono.size(); ++i) {
                if (mono[i] == 0)
                    continue;
                std::string name =
                    i < names.size() ? names[i] : "g" + std::to_string(i + 1);
                if (!piece.empty() && piece != "-")
                    piece += " ";
                piece += name;
                if (mono[i] != 1)
                    piece += "^" + std::to_string(mono[i]);
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
        return out;
    }

    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add_term(const std::vector<int>& mono, const Rational& c) {
        if (c == 0)
            return;
        auto key = trim_mono(mono);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

private:
    static bool is_trivial_mono(const std::vector<int>& m) {
        for (int e : m)
            if (e != 0)
                return false;
        return true;
    }
    static std::vector<int> trim_mono(std::vector<int> m) {
        while (!m.empty() && m.back() == 0)
            m.pop_back();
        return m;
    }
    static std::vector<int> mono_mul(const std::vector<int>& a,
                                     const std::vector<int>& b) {
        std::vector<int> r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i)
            r[i] += b[i];
        return trim_mono(std::move(r));
    }

    // monomial exponents (trailing zeros trimmed) -> coefficient
    std::map<std::vector<int>, Rational> terms_;
};

// Uniform scalar interface used by the templated kernel. K is either
// Rational or SymPoly.

inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const SymPoly& x) { return x.is_zero(); }

inline double scalar_eval(const Rational& x, std::span<const double>) {
    return to_double(x);
}
inline double scalar_eval(const SymPoly& x, std::span<const double> syms) {
    return x.eval(syms);
}

inline std::string scalar_str(const Rational& x, std::span<const std::string>) {
    return to_string(x);
}
inline std::string scalar_str(const SymPoly& x,
                              std::span<const std::string> names) {
    return x.str(names);
}

/// True when the scalar prints as a single product (no embedded '+'/'-').
inline bool scalar_is_simple(const Rational&) { return true; }
inline bool scalar_is_simple(const SymPoly& x) { return x.terms().size() <= 1; }

} // namespace equiloc
