#pragma once

// q-analogs and the Gaussian binomial coefficient [n k]_q.
//
// Four independent routes are provided: the product quotient, the
// q-factorial quotient, and the two Pascal-type recurrences. The memoized
// accessor gauss() is the canonical producer and follows the first recurrence
//
//     [n k] = [n-1 k-1] + q^k [n-1 k].
//
// Out-of-range convention: [n k] = 0 for k < 0 or k > n (n >= 0). Negative n
// is a hard NegativeIndex error.

#include <qlattice/errors.hpp>
#include <qlattice/poly.hpp>

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

namespace qlattice {

namespace detail {

inline void require_nonnegative(int n, const char* where)
{
    if (n < 0)
        throw NegativeIndex(std::string(where) + ": negative index n = " + std::to_string(n));
}

inline const Polynomial& zero_polynomial()
{
    static const Polynomial z;
    return z;
}

// q^m - 1
inline Polynomial q_power_minus_one(int m) { return Polynomial::monomial(1, m) - Polynomial::one(); }

} // namespace detail

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
inline Polynomial q_integer(int n)
{
    detail::require_nonnegative(n, "q_integer");
    return Polynomial(std::vector<Integer>(static_cast<std::size_t>(n), Integer(1)));
}

// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
inline Polynomial q_factorial(int n)
{
    detail::require_nonnegative(n, "q_factorial");
    Polynomial acc = Polynomial::one();
    for (int j = 2; j <= n; ++j)
        acc *= q_integer(j);
    return acc;
}

// (q^n - 1)(q^{n-1} - 1)...(q^{n-k+1} - 1) / ((q^k - 1)...(q - 1))
inline Polynomial gauss_product(int n, int k)
{
    detail::require_nonnegative(n, "gauss_product");
    if (k < 0 || k > n)
        return {};
    if (k == 0 || k == n)
        return Polynomial::one();
    Polynomial num = Polynomial::one();
    Polynomial den = Polynomial::one();
    for (int j = 0; j < k; ++j) {
        num *= detail::q_power_minus_one(n - j);
        den *= detail::q_power_minus_one(j + 1);
    }
    try {
        return exact_div(num, den);
    } catch (const InexactDivision& e) {
        throw std::logic_error(std::string("gauss_product: product quotient not exact: ") + e.what());
    }
}

inline Polynomial gauss_qfactorial(int n, int k)
{
    detail::require_nonnegative(n, "gauss_qfactorial");
    if (k < 0 || k > n)
        return {};
    try {
        return exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k));
    } catch (const InexactDivision& e) {
        throw std::logic_error(std::string("gauss_qfactorial: quotient not exact: ") + e.what());
    }
}

namespace detail {

// Builds rows 0..n bottom-up. `step(prev_row, j, m)` returns [m j] from row m-1.
template <typename Step>
Polynomial gauss_bottom_up(int n, int k, Step step)
{
    if (k < 0 || k > n)
        return {};
    std::vector<Polynomial> row{Polynomial::one()};
    for (int m = 1; m <= n; ++m) {
        std::vector<Polynomial> next(static_cast<std::size_t>(m) + 1);
        next.front() = Polynomial::one();
        next.back() = Polynomial::one();
        for (int j = 1; j < m; ++j)
            next[j] = step(row, j, m);
        row = std::move(next);
    }
    return row[k];
}

} // namespace detail

// [n k] = [n-1 k-1] + q^k [n-1 k]
inline Polynomial gauss_recur1(int n, int k)
{
    detail::require_nonnegative(n, "gauss_recur1");
    return detail::gauss_bottom_up(n, k, [](const std::vector<Polynomial>& prev, int j, int) {
        return prev[j - 1] + shift(prev[j], j);
    });
}

// [n k] = q^{n-k} [n-1 k-1] + [n-1 k]
inline Polynomial gauss_recur2(int n, int k)
{
    detail::require_nonnegative(n, "gauss_recur2");
    return detail::gauss_bottom_up(n, k, [](const std::vector<Polynomial>& prev, int j, int m) {
        return shift(prev[j - 1], m - j) + prev[j];
    });
}

// Write-once memo of [n k] keyed on (n, k). Readers take a shared lock;
// inserts take an exclusive one. A racing insert of an existing key keeps the
// first value, which is identical since every producer is pure.
class QBinomTable {
public:
    const Polynomial& get(int n, int k)
    {
        detail::require_nonnegative(n, "gauss");
        if (k < 0 || k > n)
            return detail::zero_polynomial();
        if (const Polynomial* hit = find(n, k))
            return *hit;
        if (k == 0 || k == n)
            return insert(n, k, Polynomial::one());
        // Terms are fetched before locking for write; recursion depth is n.
        Polynomial value = get(n - 1, k - 1) + shift(get(n - 1, k), k);
        return insert(n, k, std::move(value));
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return memo_.size();
    }

    bool contains(int n, int k) const { return find(n, k) != nullptr; }

private:
    const Polynomial* find(int n, int k) const
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find({n, k});
        return it == memo_.end() ? nullptr : &it->second;
    }

    const Polynomial& insert(int n, int k, Polynomial value)
    {
        std::unique_lock lock(mutex_);
        // std::map nodes are stable, so references handed out stay valid.
        return memo_.try_emplace({n, k}, std::move(value)).first->second;
    }

    mutable std::shared_mutex mutex_;
    std::map<std::pair<int, int>, Polynomial> memo_;
};

inline QBinomTable& default_table()
{
    static QBinomTable table;
    return table;
}

inline const Polynomial& gauss(QBinomTable& table, int n, int k) { return table.get(n, k); }

// Canonical accessor backed by the process-wide table.
inline const Polynomial& gauss(int n, int k) { return default_table().get(n, k); }

// [n k] == [n n-k]
inline bool check_symmetry(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        throw DomainError("check_symmetry: requires 0 <= k <= n");
    return gauss(n, k) == gauss(n, n - k);
}

// [n k] (1 - q^k) == (1 - q^n) [n-1 k-1], cross-multiplied so nothing
// leaves the polynomial ring.
inline bool check_absorption(int n, int k)
{
    if (k < 1 || k > n - 1)
        throw DomainError("check_absorption: requires 1 <= k <= n-1");
    const Polynomial lhs = gauss(n, k) * -detail::q_power_minus_one(k);
    const Polynomial rhs = -detail::q_power_minus_one(n) * gauss(n - 1, k - 1);
    return lhs == rhs;
}

// The variant with 1 - q^{n-k} on the left. It agrees with the one above
// only when n = 2k.
inline bool check_absorption_printed(int n, int k)
{
    if (k < 1 || k > n - 1)
        throw DomainError("check_absorption_printed: requires 1 <= k <= n-1");
    const Polynomial lhs = gauss(n, k) * -detail::q_power_minus_one(n - k);
    const Polynomial rhs = -detail::q_power_minus_one(n) * gauss(n - 1, k - 1);
    return lhs == rhs;
}

} // namespace qlattice
