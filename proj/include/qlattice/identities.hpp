#pragma once

// Exact finite-domain verification of the q-binomial identities and their
// q = 1 shadows:
//
//   thm1      sum_{i=0}^{k}   q^i [n-k-1+i  i]                         = [n  k]
//   thm2      sum_{i=0}^{n-k} q^{k(n-k-i)} [k-1+i  k-1]                = [n  k]
//   thm3      sum_{i=1}^{n-2r} q^{(r+1)(n-2r-i)} [r-1+i  r][n-r-i  r]   = [n  2r+1]
//   thm4      sum_{i=0}^{r}   q^{i(n+1)/2} [h+i  i][h+r-i  r-i]         = [n+r  r],  h = (n-1)/2
//   cor1      2 sum_{i=1}^{n/2} C(r-1+i, r) C(n+r-i, r)                = C(n+2r, 2r+1)
//   cor2      2 sum_{i=0}^{U} C(h+i, i) C(h+r-i, r-i)                  = C(n+r, r)
//             printed U = (r+1)/2, corrected U = (r-1)/2
//   guoyang1  sum_k [m+k  k]_{q^2} [m+1  n-2k] q^{C(n-2k,2)}           = [m+n  n]
//   guoyang2  sum_k [m+k  k]_{q^4} [m+1  n-4k] q^{C(n-4k,2)}
//                 = sum_k (-1)^k [m+k  k]_{q^2} [m+n-2k  n-2k]
//   sun1/2    the same two identities with ordinary binomials.

#include <qlattice/binomial.hpp>
#include <qlattice/errors.hpp>
#include <qlattice/poly.hpp>
#include <qlattice/qbinom.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

namespace qlattice {

enum class IdentityId { Thm1, Thm2, Thm3, Thm4, Cor1, Cor2Printed, Cor2Corrected, GuoYang1, GuoYang2, Sun1, Sun2 };

inline constexpr std::array kAllIdentities{
    IdentityId::Thm1,          IdentityId::Thm2,     IdentityId::Thm3,     IdentityId::Thm4,
    IdentityId::Cor1,          IdentityId::Cor2Printed, IdentityId::Cor2Corrected,
    IdentityId::GuoYang1,      IdentityId::GuoYang2, IdentityId::Sun1,     IdentityId::Sun2,
};

inline const char* identity_name(IdentityId id)
{
    switch (id) {
    case IdentityId::Thm1: return "thm1";
    case IdentityId::Thm2: return "thm2";
    case IdentityId::Thm3: return "thm3";
    case IdentityId::Thm4: return "thm4";
    case IdentityId::Cor1: return "cor1";
    case IdentityId::Cor2Printed: return "cor2-printed";
    case IdentityId::Cor2Corrected: return "cor2-corrected";
    case IdentityId::GuoYang1: return "guoyang1";
    case IdentityId::GuoYang2: return "guoyang2";
    case IdentityId::Sun1: return "sun1";
    case IdentityId::Sun2: return "sun2";
    }
    return "?";
}

inline std::optional<IdentityId> parse_identity(std::string_view s)
{
    for (auto id : kAllIdentities)
        if (s == identity_name(id))
            return id;
    return std::nullopt;
}

// The printed form of Cor2 is known not to hold; it is reported but never
// counted against a run.
inline bool identity_required(IdentityId id) { return id != IdentityId::Cor2Printed; }

// Parameter names in (first, second) order.
inline std::pair<const char*, const char*> identity_params(IdentityId id)
{
    switch (id) {
    case IdentityId::Thm1:
    case IdentityId::Thm2: return {"n", "k"};
    case IdentityId::GuoYang1:
    case IdentityId::GuoYang2:
    case IdentityId::Sun1:
    case IdentityId::Sun2: return {"m", "n"};
    default: return {"n", "r"};
    }
}

using IdentityValue = std::variant<Polynomial, Integer>;

inline std::string render_value(const IdentityValue& v)
{
    if (const auto* p = std::get_if<Polynomial>(&v))
        return to_text(*p);
    return std::get<Integer>(v).str();
}

struct IdentitySides {
    IdentityValue lhs;
    IdentityValue rhs;
    bool holds() const { return lhs == rhs; }
};

namespace detail {

inline void identity_require(bool ok, const char* what)
{
    if (!ok)
        throw DomainError(what);
}

inline Polynomial sum(const std::vector<Polynomial>& terms)
{
    Polynomial acc;
    for (const auto& t : terms)
        acc += t;
    return acc;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Summands of thm1..thm4, term by term (index order of the sum).

inline std::vector<Polynomial> thm1_terms(int n, int k)
{
    detail::identity_require(k >= 1 && k < n, "thm1: requires 1 <= k < n");
    std::vector<Polynomial> terms;
    for (int i = 0; i <= k; ++i)
        terms.push_back(shift(gauss(n - k - 1 + i, i), i));
    return terms;
}

inline std::vector<Polynomial> thm2_terms(int n, int k)
{
    detail::identity_require(k >= 1 && k <= n, "thm2: requires 1 <= k <= n");
    std::vector<Polynomial> terms;
    for (int i = 0; i <= n - k; ++i)
        terms.push_back(shift(gauss(k - 1 + i, k - 1), static_cast<std::int64_t>(k) * (n - k - i)));
    return terms;
}

// r = 0 is accepted as an extension of the stated domain r >= 1.
inline std::vector<Polynomial> thm3_terms(int n, int r)
{
    detail::identity_require(r >= 0 && n >= 2 * r + 1, "thm3: requires r >= 0 and n >= 2r+1");
    std::vector<Polynomial> terms;
    for (int i = 1; i <= n - 2 * r; ++i)
        terms.push_back(shift(gauss(r - 1 + i, r) * gauss(n - r - i, r),
                              static_cast<std::int64_t>(r + 1) * (n - 2 * r - i)));
    return terms;
}

// r = 0 is accepted as an extension of the stated domain r >= 1.
inline std::vector<Polynomial> thm4_terms(int n, int r)
{
    detail::identity_require(n >= 1 && n % 2 == 1 && r >= 0, "thm4: requires odd n >= 1 and r >= 0");
    const int h = (n - 1) / 2;
    std::vector<Polynomial> terms;
    for (int i = 0; i <= r; ++i)
        terms.push_back(shift(gauss(h + i, i) * gauss(h + r - i, r - i), static_cast<std::int64_t>(i) * (h + 1)));
    return terms;
}

inline IdentitySides thm1_sides(int n, int k) { return {detail::sum(thm1_terms(n, k)), gauss(n, k)}; }
inline IdentitySides thm2_sides(int n, int k) { return {detail::sum(thm2_terms(n, k)), gauss(n, k)}; }
inline IdentitySides thm3_sides(int n, int r) { return {detail::sum(thm3_terms(n, r)), gauss(n, 2 * r + 1)}; }
inline IdentitySides thm4_sides(int n, int r) { return {detail::sum(thm4_terms(n, r)), gauss(n + r, r)}; }

inline bool verify_thm1(int n, int k) { return thm1_sides(n, k).holds(); }
inline bool verify_thm2(int n, int k) { return thm2_sides(n, k).holds(); }
inline bool verify_thm3(int n, int r) { return thm3_sides(n, r).holds(); }
inline bool verify_thm4(int n, int r) { return thm4_sides(n, r).holds(); }

// ---------------------------------------------------------------------------
// Corollaries (integers)

inline IdentitySides cor1_sides(int n, int r)
{
    detail::identity_require(n >= 2 && n % 2 == 0 && r >= 0, "cor1: requires even n >= 2 and r >= 0");
    Integer acc = 0;
    for (int i = 1; i <= n / 2; ++i)
        acc += binomial(r - 1 + i, r) * binomial(n + r - i, r);
    return {Integer(2 * acc), binomial(n + 2 * r, 2 * r + 1)};
}

namespace detail {

inline IdentitySides cor2_sides(int n, int r, int upper)
{
    identity_require(n >= 1 && n % 2 == 1 && r >= 1 && r % 2 == 1, "cor2: requires odd n, r >= 1");
    const int h = (n - 1) / 2;
    Integer acc = 0;
    for (int i = 0; i <= upper; ++i)
        acc += binomial(h + i, i) * binomial(h + r - i, r - i);
    return {Integer(2 * acc), binomial(n + r, r)};
}

} // namespace detail

inline IdentitySides cor2_printed_sides(int n, int r) { return detail::cor2_sides(n, r, (r + 1) / 2); }
inline IdentitySides cor2_corrected_sides(int n, int r) { return detail::cor2_sides(n, r, (r - 1) / 2); }

inline bool verify_cor1(int n, int r) { return cor1_sides(n, r).holds(); }
inline bool verify_cor2_printed(int n, int r) { return cor2_printed_sides(n, r).holds(); }
inline bool verify_cor2_corrected(int n, int r) { return cor2_corrected_sides(n, r).holds(); }

// ---------------------------------------------------------------------------
// Guo-Yang and Sun

inline IdentitySides guoyang1_sides(int m, int n)
{
    detail::identity_require(m >= 0 && n >= 0, "guoyang1: requires m, n >= 0");
    Polynomial lhs;
    for (int k = 0; k <= n / 2; ++k)
        lhs += shift(substitute_power(gauss(m + k, k), 2) * gauss(m + 1, n - 2 * k), choose2(n - 2 * k));
    return {std::move(lhs), gauss(m + n, n)};
}

inline IdentitySides guoyang2_sides(int m, int n)
{
    detail::identity_require(m >= 0 && n >= 0, "guoyang2: requires m, n >= 0");
    Polynomial lhs;
    for (int k = 0; k <= n / 4; ++k)
        lhs += shift(substitute_power(gauss(m + k, k), 4) * gauss(m + 1, n - 4 * k), choose2(n - 4 * k));
    Polynomial rhs;
    for (int k = 0; k <= n / 2; ++k)
        rhs += scale(substitute_power(gauss(m + k, k), 2) * gauss(m + n - 2 * k, n - 2 * k), k % 2 ? -1 : 1);
    return {std::move(lhs), std::move(rhs)};
}

inline IdentitySides sun1_sides(int m, int n)
{
    detail::identity_require(m >= 0 && n >= 0, "sun1: requires m, n >= 0");
    Integer lhs = 0;
    for (int k = 0; k <= n / 2; ++k)
        lhs += binomial(m + k, k) * binomial(m + 1, n - 2 * k);
    return {lhs, binomial(m + n, n)};
}

inline IdentitySides sun2_sides(int m, int n)
{
    detail::identity_require(m >= 0 && n >= 0, "sun2: requires m, n >= 0");
    Integer lhs = 0;
    for (int k = 0; k <= n / 4; ++k)
        lhs += binomial(m + k, k) * binomial(m + 1, n - 4 * k);
    Integer rhs = 0;
    for (int k = 0; k <= n / 2; ++k) {
        Integer term = binomial(m + k, k) * binomial(m + n - 2 * k, m);
        rhs += k % 2 ? Integer(-term) : term;
    }
    return {lhs, rhs};
}

inline bool verify_guoyang1(int m, int n) { return guoyang1_sides(m, n).holds(); }
inline bool verify_guoyang2(int m, int n) { return guoyang2_sides(m, n).holds(); }
inline bool verify_sun1(int m, int n) { return sun1_sides(m, n).holds(); }
inline bool verify_sun2(int m, int n) { return sun2_sides(m, n).holds(); }

// ---------------------------------------------------------------------------
// q = 1 cross-checks between the polynomial and integer identities.

namespace detail {

inline bool same_at_one(const IdentitySides& poly, const IdentitySides& ints)
{
    return eval_int(std::get<Polynomial>(poly.lhs), 1) == std::get<Integer>(ints.lhs) &&
           eval_int(std::get<Polynomial>(poly.rhs), 1) == std::get<Integer>(ints.rhs);
}

} // namespace detail

inline bool sun1_matches_guoyang1_at_one(int m, int n)
{
    return detail::same_at_one(guoyang1_sides(m, n), sun1_sides(m, n));
}

inline bool sun2_matches_guoyang2_at_one(int m, int n)
{
    return detail::same_at_one(guoyang2_sides(m, n), sun2_sides(m, n));
}

// Cor1 at (n, r) is Thm3 at (n+2r, r) evaluated at q = 1, with the
// symmetric pairs i <-> n+1-i folded together.
inline bool cor1_matches_thm3_at_one(int n, int r)
{
    return detail::same_at_one(thm3_sides(n + 2 * r, r), cor1_sides(n, r));
}

// Cor2 (corrected) at (n, r) is Thm4 at (n, r) evaluated at q = 1.
inline bool cor2_corrected_matches_thm4_at_one(int n, int r)
{
    return detail::same_at_one(thm4_sides(n, r), cor2_corrected_sides(n, r));
}

inline IdentitySides identity_sides(IdentityId id, int a, int b)
{
    switch (id) {
    case IdentityId::Thm1: return thm1_sides(a, b);
    case IdentityId::Thm2: return thm2_sides(a, b);
    case IdentityId::Thm3: return thm3_sides(a, b);
    case IdentityId::Thm4: return thm4_sides(a, b);
    case IdentityId::Cor1: return cor1_sides(a, b);
    case IdentityId::Cor2Printed: return cor2_printed_sides(a, b);
    case IdentityId::Cor2Corrected: return cor2_corrected_sides(a, b);
    case IdentityId::GuoYang1: return guoyang1_sides(a, b);
    case IdentityId::GuoYang2: return guoyang2_sides(a, b);
    case IdentityId::Sun1: return sun1_sides(a, b);
    case IdentityId::Sun2: return sun2_sides(a, b);
    }
    throw DomainError("unknown identity");
}

// ---------------------------------------------------------------------------
// Sweeps

struct IdentityFailure {
    std::vector<std::pair<std::string, int>> params;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    IdentityId id{};
    std::string domain;
    std::size_t checked = 0;
    std::vector<IdentityFailure> failures;
    bool extension = false;

    bool passed() const noexcept { return failures.empty(); }
};

// max_first bounds the first parameter (n, or m for guoyang/sun); max_second
// bounds the second where it is free (k of thm1/thm2 is limited by n alone).
// `extension` sweeps the r = 0 slice of thm3, thm4 and cor1 instead of the
// stated r >= 1 domain.
struct SweepBounds {
    int max_first = 0;
    int max_second = 0;
    bool extension = false;
    unsigned workers = 1;
};

// Bounds used by the acceptance sweep and the CLI when none are given.
inline SweepBounds default_bounds(IdentityId id)
{
    switch (id) {
    case IdentityId::Thm1:
    case IdentityId::Thm2: return {16, 16};
    case IdentityId::Thm3: return {16, 16};
    case IdentityId::Thm4: return {15, 8};
    case IdentityId::Cor1: return {20, 8};
    case IdentityId::Cor2Printed:
    case IdentityId::Cor2Corrected: return {15, 15};
    case IdentityId::GuoYang1:
    case IdentityId::GuoYang2: return {10, 10};
    case IdentityId::Sun1:
    case IdentityId::Sun2: return {20, 20};
    }
    return {};
}

inline bool has_extension(IdentityId id)
{
    return id == IdentityId::Thm3 || id == IdentityId::Thm4 || id == IdentityId::Cor1;
}

namespace detail {

struct SweepPlan {
    std::string domain;
    std::vector<std::pair<int, int>> points;
};

inline SweepPlan plan_sweep(IdentityId id, const SweepBounds& b)
{
    if (b.max_first < 0 || b.max_second < 0)
        throw DomainError("sweep: bounds must be nonnegative");
    if (b.extension && !has_extension(id))
        throw DomainError(std::string("sweep: no r = 0 extension for ") + identity_name(id));
    const int N = b.max_first, R = b.max_second;
    const std::string sN = std::to_string(N), sR = std::to_string(R);
    SweepPlan p;
    auto add = [&](int x, int y) { p.points.emplace_back(x, y); };
    switch (id) {
    case IdentityId::Thm1:
        p.domain = "1 <= k < n <= " + sN;
        for (int n = 2; n <= N; ++n)
            for (int k = 1; k < n; ++k)
                add(n, k);
        break;
    case IdentityId::Thm2:
        p.domain = "1 <= k <= n <= " + sN;
        for (int n = 1; n <= N; ++n)
            for (int k = 1; k <= n; ++k)
                add(n, k);
        break;
    case IdentityId::Thm3:
        if (b.extension) {
            p.domain = "r = 0, 1 <= n <= " + sN + " (extension)";
            for (int n = 1; n <= N; ++n)
                add(n, 0);
        } else {
            p.domain = "1 <= r <= " + sR + ", 2r+1 <= n <= " + sN;
            for (int n = 3; n <= N; ++n)
                for (int r = 1; r <= R && 2 * r + 1 <= n; ++r)
                    add(n, r);
        }
        break;
    case IdentityId::Thm4:
        if (b.extension) {
            p.domain = "r = 0, odd n <= " + sN + " (extension)";
            for (int n = 1; n <= N; n += 2)
                add(n, 0);
        } else {
            p.domain = "odd n <= " + sN + ", 1 <= r <= " + sR;
            for (int n = 1; n <= N; n += 2)
                for (int r = 1; r <= R; ++r)
                    add(n, r);
        }
        break;
    case IdentityId::Cor1:
        if (b.extension) {
            p.domain = "r = 0, even 2 <= n <= " + sN + " (extension)";
            for (int n = 2; n <= N; n += 2)
                add(n, 0);
        } else {
            p.domain = "even 2 <= n <= " + sN + ", 1 <= r <= " + sR;
            for (int n = 2; n <= N; n += 2)
                for (int r = 1; r <= R; ++r)
                    add(n, r);
        }
        break;
    case IdentityId::Cor2Printed:
    case IdentityId::Cor2Corrected:
        p.domain = "odd n <= " + sN + ", odd r <= " + sR;
        for (int n = 1; n <= N; n += 2)
            for (int r = 1; r <= R; r += 2)
                add(n, r);
        break;
    case IdentityId::GuoYang1:
    case IdentityId::GuoYang2:
    case IdentityId::Sun1:
    case IdentityId::Sun2:
        p.domain = "0 <= m <= " + sN + ", 0 <= n <= " + sR;
        for (int m = 0; m <= N; ++m)
            for (int n = 0; n <= R; ++n)
                add(m, n);
        break;
    }
    return p;
}

} // namespace detail

// Runs the verifier over the bounded domain. Points are split into contiguous
// chunks across `workers` threads; failures are merged back in point order so
// the report does not depend on the worker count.
inline IdentityReport sweep(IdentityId id, const SweepBounds& bounds)
{
    const auto plan = detail::plan_sweep(id, bounds);
    const auto names = identity_params(id);
    const std::size_t count = plan.points.size();
    std::vector<std::optional<IdentityFailure>> results(count);

    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto [a, b] = plan.points[i];
            const auto sides = identity_sides(id, a, b);
            if (!sides.holds())
                results[i] = IdentityFailure{{{names.first, a}, {names.second, b}},
                                             render_value(sides.lhs), render_value(sides.rhs)};
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(bounds.workers, static_cast<unsigned>(count)));
    if (workers <= 1) {
        run(0, count);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (count + workers - 1) / workers;
        for (std::size_t begin = 0; begin < count; begin += chunk)
            pool.emplace_back(run, begin, std::min(count, begin + chunk));
    }

    IdentityReport report;
    report.id = id;
    report.domain = plan.domain;
    report.checked = count;
    report.extension = bounds.extension;
    for (auto& r : results)
        if (r)
            report.failures.push_back(std::move(*r));
    return report;
}

} // namespace qlattice
