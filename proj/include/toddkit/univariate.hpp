#pragma once

// Dense univariate polynomials over Q, coefficients in ascending degree.
// The highest stored coefficient is never zero; the zero polynomial is empty.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "toddkit/errors.hpp"
#include "toddkit/rational.hpp"

namespace toddkit {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const BigRational& c) { return UniPoly({c}); }
    /// a + b*x
    static UniPoly linear(const BigRational& a, const BigRational& b) { return UniPoly({a, b}); }

    const std::vector<BigRational>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    BigRational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }

    BigRational operator()(const BigRational& x) const {
        BigRational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<BigRational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coefficient(i) + b.coefficient(i);
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const BigRational& s, const UniPoly& a) {
        std::vector<BigRational> r(a.c_);
        for (auto& x : r) x *= s;
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + BigRational(-1) * b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// p(q(x)) by Horner's scheme.
    UniPoly compose(const UniPoly& inner) const {
        UniPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
        return acc;
    }

    /// Keeps only even-degree coefficients and halves their degree: the
    /// polynomial g with g(x^2) = p(x), for even p.
    UniPoly even_part_in_square() const {
        std::vector<BigRational> r;
        for (std::size_t i = 1; i < c_.size(); i += 2)
            if (c_[i] != 0) throw DomainError("polynomial has an odd-degree term");
        for (std::size_t i = 0; i < c_.size(); i += 2) r.push_back(c_[i]);
        return UniPoly(std::move(r));
    }

private:
    void trim() {
        for (auto& c : c_) c.canonicalize();
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigRational> c_;
};

inline UniPoly pow(const UniPoly& p, unsigned k) {
    UniPoly acc = UniPoly::constant(1);
    for (unsigned i = 0; i < k; ++i) acc = acc * p;
    return acc;
}

namespace detail {

inline std::string superscript(unsigned n) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s;
    for (char ch : std::to_string(n)) s += digits[ch - '0'];
    return s;
}

}  // namespace detail

/// "4 + 22/3·λ + 4·λ² + 2/3·λ³" style, ascending degree.
inline std::string to_pretty_string(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        const BigRational& c = p.coefficients()[i];
        if (c == 0) continue;
        const bool negative = sgn(c) < 0;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        const BigRational mag = abs(c);
        if (i == 0) {
            os << to_display_string(mag);
            continue;
        }
        if (mag != 1) os << to_display_string(mag) << "·";
        os << var;
        if (i > 1) os << detail::superscript(static_cast<unsigned>(i));
    }
    return os.str();
}

}  // namespace toddkit
