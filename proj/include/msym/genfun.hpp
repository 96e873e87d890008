#pragma once

// Betti numbers of symmetric products of a closed orientable surface,
// extracted exactly from Macdonald's generating function
//
//     (1 + x t)^{2g} / ((1 - t)(1 - x^2 t)),
//
// together with the closed forms for n = 2, 3 and the projective-bundle
// count for n >= 2g - 1. No floating point anywhere in this file.

#include "msym/bigint.hpp"
#include "msym/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace msym {

struct Genus {
    unsigned value = 0;

    constexpr Genus() = default;
    constexpr explicit Genus(unsigned g) : value(g) {}
    constexpr auto operator<=>(const Genus&) const = default;
};

struct BettiSum {
    BigInt value;

    BettiSum() = default;
    explicit BettiSum(BigInt v) : value(std::move(v)) {}

    friend bool operator==(const BettiSum&, const BettiSum&) = default;
    friend bool operator<(const BettiSum& a, const BettiSum& b) { return a.value < b.value; }
    friend bool operator<=(const BettiSum& a, const BettiSum& b) { return a.value <= b.value; }
    friend bool operator==(const BettiSum& a, long long b) { return a.value == b; }
};

/// Polynomial in one grading variable with nonnegative integer coefficients.
/// Index i of coeffs() is the coefficient of x^i; trailing zeros are trimmed.
class GradedPoly {
public:
    GradedPoly() = default;

    explicit GradedPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_) {
            if (c < 0) throw DomainError("GradedPoly: negative coefficient " + c.str());
        }
        trim();
    }

    GradedPoly(std::initializer_list<long long> coeffs)
        : GradedPoly(std::vector<BigInt>(coeffs.begin(), coeffs.end())) {}

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the leading term; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

    /// Horner evaluation; x may be negative (signed evaluation at -1 gives the Euler characteristic).
    BigInt evaluate(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    bool is_palindromic(std::size_t top_degree) const {
        if (degree() > static_cast<long>(top_degree)) return false;
        for (std::size_t k = 0; k <= top_degree; ++k) {
            if (coeff(k) != coeff(top_degree - k)) return false;
        }
        return true;
    }

    /// Human-readable form, e.g. "1 + 2x + 2x^2 + x^4".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            if (!out.empty()) out += " + ";
            if (k == 0) {
                out += coeffs_[k].str();
                continue;
            }
            if (coeffs_[k] != 1) out += coeffs_[k].str();
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
        return out;
    }

    friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

namespace detail {

// Dense bivariate series in (t, x), truncated at t^max_t and x^max_x.
class TruncatedSeries2 {
public:
    TruncatedSeries2(std::size_t max_t, std::size_t max_x)
        : max_t_(max_t), max_x_(max_x), c_((max_t + 1) * (max_x + 1)) {}

    BigInt& at(std::size_t t, std::size_t x) { return c_[t * (max_x_ + 1) + x]; }
    const BigInt& at(std::size_t t, std::size_t x) const { return c_[t * (max_x_ + 1) + x]; }

    std::size_t max_t() const { return max_t_; }
    std::size_t max_x() const { return max_x_; }

    TruncatedSeries2 operator*(const TruncatedSeries2& o) const {
        TruncatedSeries2 r(max_t_, max_x_);
        for (std::size_t t1 = 0; t1 <= max_t_; ++t1) {
            for (std::size_t x1 = 0; x1 <= max_x_; ++x1) {
                const BigInt& a = at(t1, x1);
                if (a == 0) continue;
                for (std::size_t t2 = 0; t1 + t2 <= max_t_; ++t2) {
                    for (std::size_t x2 = 0; x1 + x2 <= max_x_; ++x2) {
                        const BigInt& b = o.at(t2, x2);
                        if (b != 0) r.at(t1 + t2, x1 + x2) += a * b;
                    }
                }
            }
        }
        return r;
    }

private:
    std::size_t max_t_, max_x_;
    std::vector<BigInt> c_;
};

}  // namespace detail

/// Poincare polynomial of Sym^n of a closed genus-g surface: the coefficient
/// of t^n in (1+xt)^{2g} / ((1-t)(1-x^2 t)).
inline GradedPoly poincare_sym(Genus g, unsigned n) {
    const std::size_t max_t = n;
    const std::size_t max_x = 2 * static_cast<std::size_t>(n);
    const unsigned b1 = 2 * g.value;

    detail::TruncatedSeries2 odd(max_t, max_x);  // (1 + x t)^{2g}
    for (unsigned k = 0; k <= std::min<unsigned>(b1, n); ++k) odd.at(k, k) = binomial(b1, k);

    detail::TruncatedSeries2 b0(max_t, max_x);  // 1 / (1 - t)
    for (std::size_t a = 0; a <= max_t; ++a) b0.at(a, 0) = 1;

    detail::TruncatedSeries2 b2(max_t, max_x);  // 1 / (1 - x^2 t)
    for (std::size_t b = 0; b <= max_t; ++b) b2.at(b, 2 * b) = 1;

    const auto full = odd * b0 * b2;
    std::vector<BigInt> coeffs(max_x + 1);
    for (std::size_t x = 0; x <= max_x; ++x) coeffs[x] = full.at(max_t, x);
    return GradedPoly(std::move(coeffs));
}

/// Total Betti number of Sym^n: sum_{k <= min(n, 2g)} C(2g, k) (n - k + 1).
inline BettiSum betti_sum_sym(Genus g, unsigned n) {
    const unsigned b1 = 2 * g.value;
    BigInt s = 0;
    for (unsigned k = 0; k <= std::min(n, b1); ++k) s += binomial(b1, k) * (n - k + 1);
    return BettiSum(std::move(s));
}

/// 3 + 3g + 2g^2.
inline BettiSum closed_form_sym2(Genus g) {
    const BigInt x = g.value;
    return BettiSum(3 + 3 * x + 2 * x * x);
}

/// 4 + 14g/3 + 2g^2 + 4g^3/3, evaluated over the rationals.
inline BettiSum closed_form_sym3(Genus g) {
    const Rational x = g.value;
    const Rational v = Rational(4) + Rational(14) * x / 3 + 2 * x * x + Rational(4) * x * x * x / 3;
    if (boost::multiprecision::denominator(v) != 1) {
        throw IntegralityViolation("closed_form_sym3: non-integral value " + v.str() + " at g=" +
                                   std::to_string(g.value));
    }
    return BettiSum(boost::multiprecision::numerator(v));
}

/// Sym^n is a CP^{n-g} bundle over a 2g-torus once n >= 2g-1, so the mod-2
/// Betti sum is 4^g (n - g + 1).
inline BettiSum betti_sum_large_n(Genus g, long n) {
    const long g2 = 2 * static_cast<long>(g.value);
    if (n < 0 || n < g2 - 1) {
        throw RangeError("betti_sum_large_n: need n >= 2g-1 (g=" + std::to_string(g.value) +
                         ", n=" + std::to_string(n) + ")");
    }
    return BettiSum(pow_big(4, g.value) * (n - static_cast<long>(g.value) + 1));
}

/// Coefficient of t^n in (1 - t)^m for any integer m (generalized binomial).
inline BigInt binomial_series_coeff(long m, unsigned n) {
    BigInt sign = (n % 2 == 0) ? 1 : -1;
    if (m >= 0) return sign * binomial(static_cast<unsigned>(m), n);
    // C(m, n) = (-1)^n C(n - m - 1, n) for m < 0, so the signs cancel.
    return binomial(static_cast<unsigned>(static_cast<long>(n) - m - 1), n);
}

/// Euler characteristic of Sym^n of a space with the given Betti numbers:
/// the generating function at x = -1 collapses to (1 - t)^{-chi}.
inline BigInt macdonald_euler_char(const std::vector<long>& base_betti, unsigned n) {
    long chi = 0;
    for (std::size_t i = 0; i < base_betti.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * base_betti[i];
    return binomial_series_coeff(-chi, n);
}

}  // namespace msym
