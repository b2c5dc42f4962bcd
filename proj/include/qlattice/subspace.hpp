#pragma once

// Counts k-dimensional subspaces of GF(q)^n by brute force: every k x n
// matrix is reduced to reduced row-echelon form and the distinct full-rank
// forms are counted. Nothing here touches Polynomial, so the count is an
// independent check of [n k] evaluated at q.

#include <qlattice/errors.hpp>
#include <qlattice/poly.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace qlattice {

// Arithmetic tables for GF(2), GF(3) and GF(4). GF(4) = GF(2)[a]/(a^2+a+1)
// with elements 0, 1, a, a+1 encoded as 0, 1, 2, 3.
class SmallField {
public:
    static constexpr int kMaxOrder = 4;

    explicit SmallField(int q) : q_(q)
    {
        if (q == 2 || q == 3) {
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b) {
                    add_[a][b] = static_cast<std::uint8_t>((a + b) % q);
                    mul_[a][b] = static_cast<std::uint8_t>((a * b) % q);
                }
        } else if (q == 4) {
            static constexpr std::uint8_t mul4[4][4] = {
                {0, 0, 0, 0},
                {0, 1, 2, 3},
                {0, 2, 3, 1},
                {0, 3, 1, 2},
            };
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    add_[a][b] = static_cast<std::uint8_t>(a ^ b);
                    mul_[a][b] = mul4[a][b];
                }
        } else {
            throw DomainError("subspace_count: unsupported field order q = " + std::to_string(q) +
                              " (supported: 2, 3, 4)");
        }
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                if (mul_[a][b] == 1)
                    inv_[a] = static_cast<std::uint8_t>(b);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                if (add_[a][b] == 0)
                    neg_[a] = static_cast<std::uint8_t>(b);
    }

    int order() const noexcept { return q_; }
    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a][b]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a][b]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }

private:
    int q_;
    std::array<std::array<std::uint8_t, kMaxOrder>, kMaxOrder> add_{};
    std::array<std::array<std::uint8_t, kMaxOrder>, kMaxOrder> mul_{};
    std::array<std::uint8_t, kMaxOrder> neg_{};
    std::array<std::uint8_t, kMaxOrder> inv_{};
};

// In-place reduction of a rows x cols row-major matrix; returns the rank.
inline int reduce_row_echelon(std::vector<std::uint8_t>& m, int rows, int cols, const SmallField& f)
{
    auto at = [&](int r, int c) -> std::uint8_t& { return m[static_cast<std::size_t>(r) * cols + c]; };
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = rank;
        while (pivot < rows && at(pivot, col) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            for (int c = 0; c < cols; ++c)
                std::swap(at(pivot, c), at(rank, c));
        const std::uint8_t s = f.inv(at(rank, col));
        for (int c = 0; c < cols; ++c)
            at(rank, c) = f.mul(at(rank, c), s);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || at(r, col) == 0)
                continue;
            const std::uint8_t factor = f.neg(at(r, col));
            for (int c = 0; c < cols; ++c)
                at(r, c) = f.add(at(r, c), f.mul(factor, at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

inline constexpr std::uint64_t kSubspaceGuard = 10'000'000;

// q^{kn} matrices are visited; the guard keeps that at desk scale.
inline Integer subspace_count(int n, int k, int q)
{
    if (n < 0 || k < 0)
        throw DomainError("subspace_count: requires n, k >= 0");
    const SmallField field(q);
    std::uint64_t total = 1;
    for (long long i = 0; i < static_cast<long long>(k) * n; ++i) {
        total *= static_cast<std::uint64_t>(q);
        if (total > kSubspaceGuard)
            throw DomainError("subspace_count: q^(k*n) exceeds " + std::to_string(kSubspaceGuard));
    }
    if (k > n)
        return 0;

    const std::size_t cells = static_cast<std::size_t>(k) * n;
    std::vector<std::uint8_t> matrix(cells);
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < cells; ++i) {
            matrix[i] = static_cast<std::uint8_t>(c % q);
            c /= q;
        }
        if (reduce_row_echelon(matrix, k, n, field) != k)
            continue;
        std::uint64_t key = 0;
        for (std::size_t i = cells; i-- > 0;)
            key = key * q + matrix[i];
        seen.insert(key);
    }
    return static_cast<unsigned long long>(seen.size());
}

} // namespace qlattice
