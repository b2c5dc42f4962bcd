#pragma once

// Weighted board tilings, lattice paths and partitions in a box, plus the
// weight-preserving bijections between them.
//
//   tiling   : k dominoes and n-k squares on a board of length n+k; a square
//              weighs q^s where s is the number of dominoes before it.
//   path     : k Right and n-k Up steps from (0,0) to (k, n-k); an Up step
//              weighs q^s where s is the number of Right steps before it.
//   partition: at most k parts, each at most n-k.
//
// Right <-> Domino and Up <-> Square, with order preserved.

#include <qlattice/errors.hpp>
#include <qlattice/poly.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qlattice {

enum class Piece : char { Square = 'S', Domino = 'D' };
enum class Step : char { Right = 'R', Up = 'U' };

class Tiling {
public:
    Tiling() = default;
    explicit Tiling(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}

    static Tiling parse(std::string_view text)
    {
        std::vector<Piece> pieces;
        pieces.reserve(text.size());
        for (char c : text) {
            if (c == 'S')
                pieces.push_back(Piece::Square);
            else if (c == 'D')
                pieces.push_back(Piece::Domino);
            else
                throw DomainError(std::string("tiling: unexpected character '") + c + "'");
        }
        return Tiling(std::move(pieces));
    }

    const std::vector<Piece>& pieces() const noexcept { return pieces_; }
    std::size_t size() const noexcept { return pieces_.size(); }

    int dominoes() const { return static_cast<int>(std::ranges::count(pieces_, Piece::Domino)); }
    int squares() const { return static_cast<int>(std::ranges::count(pieces_, Piece::Square)); }
    int board_length() const { return squares() + 2 * dominoes(); }

    std::string text() const
    {
        std::string s;
        s.reserve(pieces_.size());
        for (Piece p : pieces_)
            s += static_cast<char>(p);
        return s;
    }

    friend bool operator==(const Tiling&, const Tiling&) = default;
    friend auto operator<=>(const Tiling& a, const Tiling& b) { return a.text() <=> b.text(); }

private:
    std::vector<Piece> pieces_;
};

class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

    static LatticePath parse(std::string_view text)
    {
        std::vector<Step> steps;
        steps.reserve(text.size());
        for (char c : text) {
            if (c == 'R')
                steps.push_back(Step::Right);
            else if (c == 'U')
                steps.push_back(Step::Up);
            else
                throw DomainError(std::string("path: unexpected character '") + c + "'");
        }
        return LatticePath(std::move(steps));
    }

    const std::vector<Step>& steps() const noexcept { return steps_; }
    int rights() const { return static_cast<int>(std::ranges::count(steps_, Step::Right)); }
    int ups() const { return static_cast<int>(std::ranges::count(steps_, Step::Up)); }

    std::string text() const
    {
        std::string s;
        s.reserve(steps_.size());
        for (Step st : steps_)
            s += static_cast<char>(st);
        return s;
    }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

private:
    std::vector<Step> steps_;
};

// A partition fitting a height x width box. Only nonzero parts are stored,
// in weakly decreasing order; the empty partition renders as "()".
class BoxedPartition {
public:
    BoxedPartition(std::vector<int> parts, int height, int width)
        : height_(height), width_(width)
    {
        if (height < 0 || width < 0)
            throw DomainError("partition: negative box dimension");
        std::erase(parts, 0);
        if (!std::ranges::is_sorted(parts, std::greater<>{}))
            throw DomainError("partition: parts must be weakly decreasing");
        if (static_cast<int>(parts.size()) > height)
            throw DomainError("partition: more parts than box height");
        if (!parts.empty() && (parts.front() > width || parts.back() < 0))
            throw DomainError("partition: part exceeds box width");
        parts_ = std::move(parts);
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int box_height() const noexcept { return height_; }
    int box_width() const noexcept { return width_; }

    int size() const
    {
        int s = 0;
        for (int p : parts_)
            s += p;
        return s;
    }

    // "(2,1)", "()" for empty.
    std::string text() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const BoxedPartition&, const BoxedPartition&) = default;

private:
    std::vector<int> parts_;
    int height_ = 0;
    int width_ = 0;
};

// ---------------------------------------------------------------------------
// Tilings

namespace detail {

inline void require_tiling_domain(int n, int k, const char* where)
{
    if (n < 0 || k < 0 || k > n)
        throw DomainError(std::string(where) + ": requires 0 <= k <= n, got n = " +
                          std::to_string(n) + ", k = " + std::to_string(k));
}

template <typename Visit>
void visit_tilings(std::vector<Piece>& prefix, int squares_left, int dominoes_left, Visit& visit)
{
    if (squares_left == 0 && dominoes_left == 0) {
        visit(static_cast<const std::vector<Piece>&>(prefix));
        return;
    }
    // Square < Domino gives lexicographic order.
    if (squares_left > 0) {
        prefix.push_back(Piece::Square);
        visit_tilings(prefix, squares_left - 1, dominoes_left, visit);
        prefix.pop_back();
    }
    if (dominoes_left > 0) {
        prefix.push_back(Piece::Domino);
        visit_tilings(prefix, squares_left, dominoes_left - 1, visit);
        prefix.pop_back();
    }
}

} // namespace detail

// Calls visit(const std::vector<Piece>&) for every tiling with k dominoes and
// n-k squares, in lexicographic order with Square < Domino.
template <typename Visit>
void for_each_tiling(int n, int k, Visit&& visit)
{
    detail::require_tiling_domain(n, k, "enumerate_tilings");
    std::vector<Piece> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    detail::visit_tilings(prefix, n - k, k, visit);
}

inline std::vector<Tiling> enumerate_tilings(int n, int k)
{
    std::vector<Tiling> out;
    for_each_tiling(n, k, [&](const std::vector<Piece>& p) { out.emplace_back(p); });
    return out;
}

inline long long weight_exponent(std::span<const Piece> pieces)
{
    long long dominoes = 0, weight = 0;
    for (Piece p : pieces) {
        if (p == Piece::Domino)
            ++dominoes;
        else
            weight += dominoes;
    }
    return weight;
}

inline long long weight_exponent(const Tiling& t) { return weight_exponent(std::span<const Piece>(t.pieces())); }

inline long long weight_exponent(const LatticePath& p)
{
    long long rights = 0, weight = 0;
    for (Step s : p.steps()) {
        if (s == Step::Right)
            ++rights;
        else
            weight += rights;
    }
    return weight;
}

// Sum of q^{weight} over a tiling family; counts are accumulated per weight
// and never routed through the q-binomial code.
template <typename Range>
Polynomial generating_polynomial_of(const Range& tilings)
{
    std::vector<Integer> counts;
    for (const auto& t : tilings) {
        const auto w = static_cast<std::size_t>(weight_exponent(t));
        if (w >= counts.size())
            counts.resize(w + 1);
        counts[w] += 1;
    }
    return Polynomial(std::move(counts));
}

inline Polynomial tilings_generating_polynomial(int n, int k)
{
    std::vector<Integer> counts(static_cast<std::size_t>(std::max(0, k * (n - k))) + 1);
    for_each_tiling(n, k, [&](const std::vector<Piece>& p) {
        counts[static_cast<std::size_t>(weight_exponent(std::span<const Piece>(p)))] += 1;
    });
    return Polynomial(std::move(counts));
}

// ---------------------------------------------------------------------------
// Bijections

inline Tiling path_to_tiling(const LatticePath& p)
{
    std::vector<Piece> pieces;
    pieces.reserve(p.steps().size());
    for (Step s : p.steps())
        pieces.push_back(s == Step::Right ? Piece::Domino : Piece::Square);
    return Tiling(std::move(pieces));
}

inline LatticePath tiling_to_path(const Tiling& t)
{
    std::vector<Step> steps;
    steps.reserve(t.size());
    for (Piece p : t.pieces())
        steps.push_back(p == Piece::Domino ? Step::Right : Step::Up);
    return LatticePath(std::move(steps));
}

inline std::vector<LatticePath> enumerate_paths(int n, int k)
{
    std::vector<LatticePath> out;
    for_each_tiling(n, k, [&](const std::vector<Piece>& p) { out.push_back(tiling_to_path(Tiling(p))); });
    return out;
}

// Part i is the number of Up steps after the i-th Right step. The box is
// (#Right) x (#Up) and the size equals the path's weight exponent.
inline BoxedPartition path_to_partition(const LatticePath& p)
{
    const int height = p.rights();
    const int width = p.ups();
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(height));
    int ups_after = width;
    for (Step s : p.steps()) {
        if (s == Step::Up)
            --ups_after;
        else
            parts.push_back(ups_after);
    }
    return BoxedPartition(std::move(parts), height, width);
}

// ---------------------------------------------------------------------------
// Partitions in a box

namespace detail {

template <typename Visit>
void visit_box_partitions(std::vector<int>& prefix, int rows_left, int max_part, Visit& visit)
{
    if (rows_left == 0) {
        visit(static_cast<const std::vector<int>&>(prefix));
        return;
    }
    for (int p = max_part; p >= 0; --p) {
        prefix.push_back(p);
        visit_box_partitions(prefix, rows_left - 1, p, visit);
        prefix.pop_back();
    }
}

} // namespace detail

// Every partition in the height x width box, in decreasing lexicographic order
// of the zero-padded part sequence: (2,2),(2,1),(2),(1,1),(1),() for 2x2.
inline std::vector<BoxedPartition> enumerate_box_partitions(int height, int width)
{
    if (height < 0 || width < 0)
        throw DomainError("enumerate_box_partitions: negative box dimension");
    std::vector<BoxedPartition> out;
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(height));
    auto visit = [&](const std::vector<int>& parts) { out.emplace_back(parts, height, width); };
    detail::visit_box_partitions(prefix, height, width, visit);
    return out;
}

inline Polynomial partitions_generating_polynomial(int height, int width)
{
    std::vector<Integer> counts;
    for (const auto& lambda : enumerate_box_partitions(height, width)) {
        const auto s = static_cast<std::size_t>(lambda.size());
        if (s >= counts.size())
            counts.resize(s + 1);
        counts[s] += 1;
    }
    return Polynomial(std::move(counts));
}

// Transpose of the Young diagram; maps the h x w box to the w x h box.
inline BoxedPartition conjugate(const BoxedPartition& lambda)
{
    const auto& parts = lambda.parts();
    std::vector<int> out;
    const int longest = parts.empty() ? 0 : parts.front();
    out.reserve(static_cast<std::size_t>(longest));
    for (int j = 1; j <= longest; ++j)
        out.push_back(static_cast<int>(std::ranges::count_if(parts, [j](int p) { return p >= j; })));
    return BoxedPartition(std::move(out), lambda.box_width(), lambda.box_height());
}

} // namespace qlattice
