#include "severi/exactmath.hpp"

#include <algorithm>
#include <sstream>

namespace severi {

namespace {

bool is_decimal_integer(std::string_view text)
{
    if (text.empty()) {
        return false;
    }
    std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (start == text.size()) {
        return false;
    }
    return std::all_of(text.begin() + static_cast<long>(start), text.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

BigInt parse_bigint(std::string_view text)
{
    if (!is_decimal_integer(text)) {
        throw DomainError("not a decimal integer: '" + std::string(text) + "'");
    }
    std::string digits(text.front() == '+' ? text.substr(1) : text);
    return BigInt(digits, 10);
}

BigRat parse_bigrat(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRat(parse_bigint(text));
    }
    return make_rat(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

BigRat make_rat(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw DomainError("zero denominator");
    }
    BigRat out(num, den);
    out.canonicalize();
    return out;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::string to_fraction_string(const BigRat& value)
{
    return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

BigInt binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

// ---- MultiPoly4 -----------------------------------------------------------

MultiPoly4::MultiPoly4(const BigRat& constant) { add_term({0, 0, 0, 0}, constant); }

MultiPoly4 MultiPoly4::variable(std::size_t index)
{
    if (index >= 4) {
        throw DomainError("MultiPoly4 has four variables");
    }
    Exponents exps{0, 0, 0, 0};
    exps[index] = 1;
    return monomial(exps, BigRat(1));
}

MultiPoly4 MultiPoly4::monomial(const Exponents& exps, const BigRat& coef)
{
    MultiPoly4 out;
    out.add_term(exps, coef);
    return out;
}

void MultiPoly4::add_term(const Exponents& exps, const BigRat& coef)
{
    if (coef == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exps, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

BigRat MultiPoly4::coefficient(const Exponents& exps) const
{
    auto it = terms_.find(exps);
    return it == terms_.end() ? BigRat(0) : it->second;
}

int MultiPoly4::total_degree() const
{
    int degree = -1;
    for (const auto& [exps, coef] : terms_) {
        degree = std::max(degree, static_cast<int>(exps[0] + exps[1] + exps[2] + exps[3]));
    }
    return degree;
}

BigRat MultiPoly4::evaluate(std::span<const BigRat, 4> point) const
{
    BigRat total = 0;
    for (const auto& [exps, coef] : terms_) {
        BigRat term = coef;
        for (std::size_t i = 0; i < 4; ++i) {
            for (unsigned p = 0; p < exps[i]; ++p) {
                term *= point[i];
            }
        }
        total += term;
    }
    return total;
}

std::string MultiPoly4::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exps, coef] = *it;
        const bool constant = exps == Exponents{0, 0, 0, 0};
        BigRat magnitude = abs(coef);
        if (coef < 0) {
            os << "-";
        } else if (!first) {
            os << "+";
        }
        first = false;
        if (constant) {
            os << magnitude.get_str();
            continue;
        }
        if (magnitude.get_den() != 1) {
            os << "(" << magnitude.get_str() << ")";
        } else if (magnitude != 1) {
            os << magnitude.get_str();
        }
        for (std::size_t i = 0; i < 4; ++i) {
            if (exps[i] == 0) {
                continue;
            }
            os << "w" << (i + 1);
            if (exps[i] > 1) {
                os << "^" << exps[i];
            }
        }
    }
    return os.str();
}

MultiPoly4 operator+(const MultiPoly4& a, const MultiPoly4& b)
{
    MultiPoly4 out = a;
    for (const auto& [exps, coef] : b.terms_) {
        out.add_term(exps, coef);
    }
    return out;
}

MultiPoly4 operator-(const MultiPoly4& a, const MultiPoly4& b)
{
    MultiPoly4 out = a;
    for (const auto& [exps, coef] : b.terms_) {
        out.add_term(exps, -coef);
    }
    return out;
}

MultiPoly4 operator*(const MultiPoly4& a, const MultiPoly4& b)
{
    MultiPoly4 out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents exps{};
            for (std::size_t i = 0; i < 4; ++i) {
                exps[i] = ea[i] + eb[i];
            }
            out.add_term(exps, ca * cb);
        }
    }
    return out;
}

MultiPoly4 scale(const MultiPoly4& p, const BigRat& factor)
{
    MultiPoly4 out;
    if (factor == 0) {
        return out;
    }
    out = p;
    for (auto& [exps, coef] : out.terms_) {
        coef *= factor;
    }
    return out;
}

BigRat poly_eval(const MultiPoly4& p, std::span<const BigRat, 4> point) { return p.evaluate(point); }

} // namespace severi
