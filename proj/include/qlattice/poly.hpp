#pragma once

// Dense univariate polynomials in q over arbitrary-precision integers.
//
// Position e of the coefficient vector holds the coefficient of q^e. The
// vector is always normalized: either empty (the zero polynomial) or with a
// nonzero last entry. All operations are pure and return normalized values.

#include <qlattice/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qlattice {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::size_t;

class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    Polynomial(std::initializer_list<long long> coeffs)
    {
        coeffs_.reserve(coeffs.size());
        for (long long c : coeffs)
            coeffs_.emplace_back(c);
        normalize();
    }

    static Polynomial zero() { return {}; }
    static Polynomial one() { return monomial(1, 0); }

    // c * q^e. Negative exponents are rejected: there are no Laurent terms.
    static Polynomial monomial(const Integer& c, std::int64_t e)
    {
        if (e < 0)
            throw DomainError("monomial: negative exponent " + std::to_string(e));
        if (c == 0)
            return {};
        std::vector<Integer> v(static_cast<std::size_t>(e) + 1);
        v.back() = c;
        Polynomial p;
        p.coeffs_ = std::move(v);
        return p;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    std::optional<Exponent> degree() const noexcept
    {
        if (coeffs_.empty())
            return std::nullopt;
        return coeffs_.size() - 1;
    }

    Integer coefficient(Exponent e) const { return e < coeffs_.size() ? coeffs_[e] : Integer(0); }

    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    // Number of stored coefficients, i.e. degree + 1 (0 for the zero polynomial).
    std::size_t size() const noexcept { return coeffs_.size(); }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& b)
    {
        if (b.coeffs_.size() > coeffs_.size())
            coeffs_.resize(b.coeffs_.size());
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            coeffs_[i] += b.coeffs_[i];
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& b)
    {
        if (b.coeffs_.size() > coeffs_.size())
            coeffs_.resize(b.coeffs_.size());
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            coeffs_[i] -= b.coeffs_[i];
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(r));
    }

    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

private:
    void normalize()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

inline Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial sub(const Polynomial& a, const Polynomial& b) { return a - b; }
inline Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

inline Polynomial scale(const Polynomial& a, const Integer& c)
{
    if (c == 0)
        return {};
    std::vector<Integer> v(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : v)
        x *= c;
    return Polynomial(std::move(v));
}

// a * q^e
inline Polynomial shift(const Polynomial& a, std::int64_t e)
{
    if (e < 0)
        throw DomainError("shift: negative exponent " + std::to_string(e));
    if (a.is_zero())
        return {};
    std::vector<Integer> v(static_cast<std::size_t>(e) + a.size());
    std::copy(a.coeffs().begin(), a.coeffs().end(), v.begin() + e);
    return Polynomial(std::move(v));
}

// Returns c with a == b * c. Schoolbook long division over the integers;
// every step must divide the leading coefficient exactly and the final
// remainder must vanish, otherwise InexactDivision is thrown.
inline Polynomial exact_div(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw DivisionByZero();
    if (a.is_zero())
        return {};
    const std::size_t db = *b.degree();
    if (*a.degree() < db)
        throw InexactDivision("exact_div: dividend degree below divisor degree");

    std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
    auto divisor = b.coeffs();
    const Integer& lead = divisor[db];
    std::vector<Integer> quot(rem.size() - db);

    for (std::size_t i = quot.size(); i-- > 0;) {
        Integer& top = rem[i + db];
        if (top == 0)
            continue;
        Integer c, r;
        boost::multiprecision::divide_qr(top, lead, c, r);
        if (r != 0)
            throw InexactDivision("exact_div: leading coefficient not divisible at q^" +
                                  std::to_string(i + db));
        for (std::size_t j = 0; j <= db; ++j)
            rem[i + j] -= c * divisor[j];
        quot[i] = std::move(c);
    }
    for (std::size_t i = 0; i < db; ++i)
        if (rem[i] != 0)
            throw InexactDivision("exact_div: nonzero remainder");
    return Polynomial(std::move(quot));
}

// a(q^m)
inline Polynomial substitute_power(const Polynomial& a, std::int64_t m)
{
    if (m < 1)
        throw DomainError("substitute_power: exponent multiplier must be >= 1");
    if (a.is_zero() || m == 1)
        return a;
    const auto step = static_cast<std::size_t>(m);
    std::vector<Integer> v((a.size() - 1) * step + 1);
    for (std::size_t e = 0; e < a.size(); ++e)
        v[e * step] = a.coeffs()[e];
    return Polynomial(std::move(v));
}

inline Integer eval_int(const Polynomial& a, const Integer& x)
{
    Integer acc = 0;
    for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

inline bool equals(const Polynomial& a, const Polynomial& b) { return a == b; }

// ---------------------------------------------------------------------------
// Canonical renderings.

namespace detail {

inline std::string render_terms(const Polynomial& p, bool latex)
{
    if (p.is_zero())
        return "0";
    const char* plus = latex ? "+" : " + ";
    const char* minus = latex ? "-" : " - ";
    std::string out;
    bool first = true;
    for (std::size_t e = p.size(); e-- > 0;) {
        const Integer& c = p.coeffs()[e];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        const Integer mag = neg ? Integer(-c) : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? minus : plus;
        first = false;
        if (e == 0) {
            out += mag.str();
            continue;
        }
        if (mag != 1)
            out += mag.str();
        out += 'q';
        if (e > 1)
            out += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
    }
    return out;
}

} // namespace detail

// "q^4 + q^3 + 2q^2 + q + 1"
inline std::string to_text(const Polynomial& p) { return detail::render_terms(p, false); }

// "q^{4}+q^{3}+2q^{2}+q+1"
inline std::string to_latex(const Polynomial& p) { return detail::render_terms(p, true); }

// Ascending coefficients as decimal strings: ["1","1","2","1","1"]. The zero
// polynomial is [].
inline std::vector<std::string> to_coefficient_strings(const Polynomial& p)
{
    std::vector<std::string> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs())
        out.push_back(c.str());
    return out;
}

inline Polynomial from_coefficient_strings(std::span<const std::string> coeffs)
{
    std::vector<Integer> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) {
        try {
            v.emplace_back(s);
        } catch (const std::exception&) {
            throw DomainError("not a decimal integer: \"" + s + "\"");
        }
    }
    return Polynomial(std::move(v));
}

} // namespace qlattice
