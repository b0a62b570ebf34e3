#pragma once

// Exact arithmetic: big integers and rationals (GMP), dense truncated power
// series over a generic coefficient ring, and sparse polynomials in the four
// Chern variables w1 = L^2, w2 = L.K, w3 = K^2, w4 = c2.

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "severi/errors.hpp"

namespace severi {

using BigInt = mpz_class;
using BigRat = mpq_class; // canonical after every arithmetic operation

BigInt parse_bigint(std::string_view text);
// Accepts "n" or "n/d"; rejects d == 0. The result is in lowest terms.
BigRat parse_bigrat(std::string_view text);
BigRat make_rat(const BigInt& num, const BigInt& den);

std::string to_decimal(const BigInt& value);
// Always "num/den", including "3/1", so that serialized series diff cleanly.
std::string to_fraction_string(const BigRat& value);

inline bool is_integer(const BigRat& value) { return value.get_den() == 1; }

BigInt binomial(long n, long k);

inline BigRat scale(const BigRat& value, const BigRat& factor) { return value * factor; }

/// Power series c_0 + c_1 x + ... + c_D x^D over a commutative ring R.
///
/// R must be constructible from int and support +, -, * and a free
/// `scale(R, BigRat)`. Products discard every term above x^D.
template <typename R>
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order) : coeffs_(order + 1, R(0)) {}

    TruncSeries(std::size_t order, std::vector<R> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() > order + 1) {
            throw DomainError("TruncSeries: more coefficients than order + 1");
        }
        coeffs_.resize(order + 1, R(0));
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const R& operator[](std::size_t j) const { return coeffs_.at(j); }
    R& operator[](std::size_t j) { return coeffs_.at(j); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b)
    {
        a.check_order(b);
        TruncSeries out(a.order());
        for (std::size_t j = 0; j <= a.order(); ++j) {
            out.coeffs_[j] = a.coeffs_[j] + b.coeffs_[j];
        }
        return out;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b)
    {
        a.check_order(b);
        TruncSeries out(a.order());
        for (std::size_t j = 0; j <= a.order(); ++j) {
            out.coeffs_[j] = a.coeffs_[j] - b.coeffs_[j];
        }
        return out;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
    {
        a.check_order(b);
        const std::size_t order = a.order();
        TruncSeries out(order);
        for (std::size_t i = 0; i <= order; ++i) {
            for (std::size_t j = 0; i + j <= order; ++j) {
                out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b)
    {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void check_order(const TruncSeries& other) const
    {
        if (order() != other.order()) {
            throw DomainError("TruncSeries: order mismatch");
        }
    }

    std::vector<R> coeffs_;
};

// log(s) for s with constant term 1, via s * (log s)' = s'.
template <typename R>
TruncSeries<R> series_log(const TruncSeries<R>& s)
{
    if (!(s[0] == R(1))) {
        throw DomainError("series_log: constant term must be 1");
    }
    const std::size_t order = s.order();
    TruncSeries<R> out(order);
    for (std::size_t n = 1; n <= order; ++n) {
        R acc = R(0);
        for (std::size_t k = 1; k < n; ++k) {
            acc = acc + scale(out[k] * s[n - k], BigRat(static_cast<long>(k)));
        }
        out[n] = s[n] - scale(acc, BigRat(1, static_cast<long>(n)));
    }
    return out;
}

// exp(s) for s with constant term 0, via (exp s)' = s' exp s.
template <typename R>
TruncSeries<R> series_exp(const TruncSeries<R>& s)
{
    if (!(s[0] == R(0))) {
        throw DomainError("series_exp: constant term must be 0");
    }
    const std::size_t order = s.order();
    TruncSeries<R> out(order);
    out[0] = R(1);
    for (std::size_t n = 1; n <= order; ++n) {
        R acc = R(0);
        for (std::size_t k = 1; k <= n; ++k) {
            acc = acc + scale(s[k] * out[n - k], BigRat(static_cast<long>(k)));
        }
        out[n] = scale(acc, BigRat(1, static_cast<long>(n)));
    }
    return out;
}

using Exponents = std::array<unsigned, 4>;

/// Sparse polynomial with rational coefficients in w1..w4. Zero
/// coefficients are never stored, so the zero polynomial has no terms.
class MultiPoly4 {
public:
    MultiPoly4() = default;
    MultiPoly4(int constant) : MultiPoly4(BigRat(constant)) {} // NOLINT: ring literal
    MultiPoly4(const BigRat& constant);                          // NOLINT

    // w_{index+1}, index in 0..3
    static MultiPoly4 variable(std::size_t index);
    static MultiPoly4 monomial(const Exponents& exps, const BigRat& coef);

    const std::map<Exponents, BigRat>& terms() const { return terms_; }
    BigRat coefficient(const Exponents& exps) const;
    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial
    int total_degree() const;

    BigRat evaluate(std::span<const BigRat, 4> point) const;

    // Descending lexicographic order, e.g. "3w1+2w2+w4"; fractions as "(9/2)w1^2".
    std::string to_string() const;

    friend MultiPoly4 operator+(const MultiPoly4& a, const MultiPoly4& b);
    friend MultiPoly4 operator-(const MultiPoly4& a, const MultiPoly4& b);
    friend MultiPoly4 operator*(const MultiPoly4& a, const MultiPoly4& b);
    friend bool operator==(const MultiPoly4& a, const MultiPoly4& b) { return a.terms_ == b.terms_; }
    friend MultiPoly4 scale(const MultiPoly4& p, const BigRat& factor);

private:
    void add_term(const Exponents& exps, const BigRat& coef);

    std::map<Exponents, BigRat> terms_;
};

MultiPoly4 scale(const MultiPoly4& p, const BigRat& factor);

BigRat poly_eval(const MultiPoly4& p, std::span<const BigRat, 4> point);

} // namespace severi
