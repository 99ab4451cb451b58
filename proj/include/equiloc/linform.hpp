#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "equiloc/rational.hpp"

namespace equiloc {

/// An affine-linear expression c0 + c1*g1 + ... + ck*gk over an ordered
/// symbol basis [1, g1, ..., gk]. With no symbols this is just a rational.
/// Used both as the exponent (frequency) of an exponential term and as a
/// symbolic coordinate of a moment-polytope vertex.
class LinForm {
public:
    explicit LinForm(std::size_t nsyms = 0) : coords_(nsyms + 1, Rational(0)) {}

    static LinForm constant(Rational c, std::size_t nsyms = 0) {
        LinForm f(nsyms);
        f.coords_[0] = std::move(c);
        return f;
    }

    /// The pure symbol g_{index+1} (index 0 is the first symbol).
    static LinForm symbol(std::size_t index, std::size_t nsyms) {
        if (index >= nsyms)
            throw InvalidArgument("symbol index out of range");
        LinForm f(nsyms);
        f.coords_[index + 1] = 1;
        return f;
    }

    std::size_t symbol_count() const { return coords_.size() - 1; }

    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }

    const Rational& constant_part() const { return coords_[0]; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0)
                return false;
        return true;
    }

    bool is_constant() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0)
                return false;
        return true;
    }

    LinForm& operator+=(const LinForm& o) {
        check_basis(o);
        for (std::size_t i = 0; i < coords_.size(); ++i)
            coords_[i] += o.coords_[i];
        return *this;
    }
    LinForm& operator-=(const LinForm& o) {
        check_basis(o);
        for (std::size_t i = 0; i < coords_.size(); ++i)
            coords_[i] -= o.coords_[i];
        return *this;
    }
    LinForm& operator*=(const Rational& s) {
        for (auto& c : coords_)
            c *= s;
        return *this;
    }

    friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
    friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
    friend LinForm operator*(LinForm a, const Rational& s) { return a *= s; }
    friend LinForm operator*(const Rational& s, LinForm a) { return a *= s; }
    friend LinForm operator-(LinForm a) {
        for (auto& c : a.coords_)
            c = -c;
        return a;
    }

    friend bool operator==(const LinForm& a, const LinForm& b) {
        return a.coords_ == b.coords_;
    }

    /// Lexicographic order over the coordinate vector; fixes the canonical
    /// term ordering of exponential sums.
    friend std::strong_ordering operator<=>(const LinForm& a, const LinForm& b) {
        a.check_basis(b);
        for (std::size_t i = 0; i < a.coords_.size(); ++i) {
            if (a.coords_[i] < b.coords_[i])
                return std::strong_ordering::less;
            if (a.coords_[i] > b.coords_[i])
                return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    double eval(std::span<const double> symbol_values) const {
        double v = to_double(coords_[0]);
        for (std::size_t i = 1; i < coords_.size(); ++i) {
            double s = i - 1 < symbol_values.size() ? symbol_values[i - 1] : 0.0;
            v += to_double(coords_[i]) * s;
        }
        return v;
    }

    std::string str(std::span<const std::string> names = {}) const {
        if (is_zero())
            return "0";
        std::string out;
        bool first = true;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0)
                continue;
            std::string piece = to_string(coords_[i]);
            if (i > 0) {
                std::string name = i - 1 < names.size()
                                       ? names[i - 1]
                                       : "g" + std::to_string(i);
                if (coords_[i] == 1)
                    piece = name;
                else if (coords_[i] == -1)
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
        return out;
    }

private:
    void check_basis(const LinForm& o) const {
        if (coords_.size() != o.coords_.size())
            throw MixedBasis("linear forms over different symbol bases");
    }

    std::vector<Rational> coords_;
};

/// Frequencies of exponential terms are affine-linear forms in the symbol
/// basis; with the default basis [1] a frequency is a plain rational.
using Frequency = LinForm;

} // namespace equiloc
