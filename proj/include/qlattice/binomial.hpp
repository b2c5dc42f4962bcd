#pragma once

// Ordinary binomial coefficients from an integer Pascal triangle. Nothing here
// touches Polynomial; this is the q = 1 reference for the q-binomial routes.

#include <qlattice/errors.hpp>
#include <qlattice/poly.hpp>

#include <mutex>
#include <vector>

namespace qlattice {

class PascalTriangle {
public:
    // C(n, k), zero outside 0 <= k <= n. Negative n is a domain error.
    Integer operator()(int n, int k)
    {
        if (n < 0)
            throw NegativeIndex("binomial: negative n = " + std::to_string(n));
        if (k < 0 || k > n)
            return 0;
        std::lock_guard lock(mutex_);
        while (static_cast<int>(rows_.size()) <= n) {
            const std::size_t m = rows_.size();
            std::vector<Integer> row(m + 1, Integer(1));
            for (std::size_t j = 1; j < m; ++j)
                row[j] = rows_[m - 1][j - 1] + rows_[m - 1][j];
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

private:
    std::mutex mutex_;
    std::vector<std::vector<Integer>> rows_;
};

inline PascalTriangle& pascal_triangle()
{
    static PascalTriangle table;
    return table;
}

inline Integer binomial(int n, int k) { return pascal_triangle()(n, k); }

// C(a, 2) with the convention C(a, 2) = 0 for a < 2; used for the
// q^{C(n-2k,2)} weights.
inline long long choose2(long long a) { return a < 2 ? 0 : a * (a - 1) / 2; }

} // namespace qlattice
