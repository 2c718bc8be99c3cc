#pragma once

#include "chowlab/bigint.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace chowlab {

/// Dense univariate polynomial with exact integer coefficients; index = degree.
/// The coefficient vector is kept trimmed, so the zero polynomial is empty.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }
    IntPolynomial(std::initializer_list<long long> coefficients) : c_(coefficients.begin(), coefficients.end()) {
        trim();
    }

    static IntPolynomial monomial(std::size_t degree, BigInt coefficient = 1) {
        std::vector<BigInt> c(degree + 1);
        c[degree] = std::move(coefficient);
        return IntPolynomial(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }

    /// Degree of the polynomial; -1 for zero.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }

    const std::vector<BigInt>& coefficients() const noexcept { return c_; }

    BigInt coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

    const BigInt& leading() const { return c_.back(); }

    /// In-place c += k * t^shift * other.
    void add_scaled(const IntPolynomial& other, const BigInt& k = 1, std::size_t shift = 0) {
        if (other.is_zero() || k == 0) return;
        if (c_.size() < other.c_.size() + shift) c_.resize(other.c_.size() + shift);
        for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i + shift] += k * other.c_[i];
        trim();
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        add_scaled(o);
        return *this;
    }
    IntPolynomial& operator-=(const IntPolynomial& o) {
        add_scaled(o, -1);
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator*(const BigInt& k, IntPolynomial p) {
        for (auto& x : p.c_) x *= k;
        p.trim();
        return p;
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<BigInt> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long long>(i);
        return IntPolynomial(std::move(d));
    }

    BigInt evaluate(const BigInt& t) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

/// t + t^2 + ... + t^(gap-1), i.e. t(t^(gap-1) - 1)/(t - 1); zero when gap <= 1.
inline IntPolynomial gap_factor(std::int64_t gap) {
    if (gap <= 1) return {};
    std::vector<BigInt> c(static_cast<std::size_t>(gap), 1);
    c[0] = 0;
    return IntPolynomial(std::move(c));
}

/// "h_0,h_1,...,h_d".
inline std::string to_csv(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    return join_csv(p.coefficients());
}

/// Human-readable form, e.g. "1 + 4t + t^2".
inline std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        BigInt magnitude = abs(c[k]);
        if (out.empty()) {
            if (c[k] < 0) out += "-";
        } else {
            out += c[k] < 0 ? " - " : " + ";
        }
        if (k == 0 || magnitude != 1) out += magnitude.str();
        if (k >= 1) out += "t";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

inline bool is_palindromic(const IntPolynomial& p) {
    const auto& c = p.coefficients();
    return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

/// gamma_0..gamma_{floor(d/2)} with p(t) = sum gamma_i t^i (1+t)^(d-2i).
/// Throws on a non-palindromic (or zero) polynomial.
inline std::vector<BigInt> gamma_vector(const IntPolynomial& p) {
    if (p.is_zero()) throw Error("gamma vector of the zero polynomial");
    if (!is_palindromic(p)) throw Error("gamma vector requires a palindromic polynomial");
    const auto d = static_cast<std::size_t>(p.degree());
    IntPolynomial remainder = p;
    std::vector<BigInt> gamma;
    for (std::size_t i = 0; i <= d / 2; ++i) {
        BigInt g = remainder.coefficient(i);
        gamma.push_back(g);
        if (g == 0) continue;
        IntPolynomial basis{1};
        for (std::size_t k = 0; k < d - 2 * i; ++k) basis = basis * IntPolynomial{1, 1};
        remainder.add_scaled(basis, -g, i);
    }
    if (!remainder.is_zero()) throw Error("gamma expansion left a nonzero remainder");
    return gamma;
}

inline bool is_gamma_positive(const std::vector<BigInt>& gamma) {
    return std::all_of(gamma.begin(), gamma.end(), [](const BigInt& g) { return g >= 0; });
}

namespace detail {

inline IntPolynomial primitive_part(IntPolynomial p) {
    if (p.is_zero()) return p;
    BigInt g = 0;
    for (const auto& c : p.coefficients()) g = gcd(g, c);
    if (g <= 1) return p;
    std::vector<BigInt> c = p.coefficients();
    for (auto& x : c) x /= g;
    return IntPolynomial(std::move(c));
}

/// A positive integer multiple of (a mod b), computed without division.
inline IntPolynomial positive_pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
    const BigInt lb = b.leading();
    const BigInt scale = abs(lb);
    const int sign = lb < 0 ? -1 : 1;
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
        BigInt la = a.leading();
        a = scale * std::move(a);
        a.add_scaled(b, -(sign * la), shift);
    }
    return a;
}

inline IntPolynomial polynomial_gcd(IntPolynomial a, IntPolynomial b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    while (!b.is_zero()) {
        IntPolynomial r = primitive_part(positive_pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.leading() < 0) a = BigInt(-1) * std::move(a);
    return a;
}

inline int sign_of(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline int sign_variations(const std::vector<int>& signs) {
    int count = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

/// Number of distinct real roots via a Sturm sequence built from
/// sign-preserving pseudo-remainders.
inline int distinct_real_roots(const IntPolynomial& p) {
    if (p.degree() <= 0) return 0;
    std::vector<IntPolynomial> seq{primitive_part(p), primitive_part(p.derivative())};
    while (true) {
        IntPolynomial r = positive_pseudo_remainder(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        seq.push_back(primitive_part(BigInt(-1) * std::move(r)));
    }
    std::vector<int> at_pos, at_neg;
    for (const auto& s : seq) {
        int lc = sign_of(s.leading());
        at_pos.push_back(lc);
        at_neg.push_back(s.degree() % 2 == 0 ? lc : -lc);
    }
    return sign_variations(at_neg) - sign_variations(at_pos);
}

}  // namespace detail

/// Number of real roots counted with multiplicity, in exact arithmetic.
inline int count_real_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw Error("real roots of the zero polynomial are undefined");
    int total = 0;
    IntPolynomial q = p;
    while (q.degree() > 0) {
        total += detail::distinct_real_roots(q);
        q = detail::polynomial_gcd(q, q.derivative());
    }
    return total;
}

}  // namespace chowlab
