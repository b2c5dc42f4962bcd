#pragma once

// Decompositions of a tiling family by a positional statistic. Each stratum
// carries its members, their generating polynomial (computed by brute force
// from the members) and the summand predicted by the matching identity
// (computed from q-binomials). The two must agree.
//
//   LastSquare    (n, k), 1 <= k < n      stratum i: k-i dominoes after the last square
//                                         predicted q^i [n-k-1+i  i]
//   LastDomino    (n, k), 1 <= k <= n     stratum i: n-k-i squares after the last domino
//                                         predicted q^{k(n-k-i)} [k-1+i  k-1]
//   MedianDomino  (n, r), n >= 2r+1       tilings (n, 2r+1); stratum i: the (r+1)-th domino
//                                         starts at cell 2r+i
//                                         predicted q^{(r+1)(n-2r-i)} [r-1+i  r] [n-r-i  r]
//   MedianSquare  (m, r), m odd           tilings (m+r, r); stratum i: i dominoes before
//                                         the ((m+1)/2)-th square
//                                         predicted q^{i(m+1)/2} [(m-1)/2+i  i] [(m-1)/2+r-i  r-i]

#include <qlattice/combinat.hpp>
#include <qlattice/errors.hpp>
#include <qlattice/poly.hpp>
#include <qlattice/qbinom.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlattice {

enum class StratCriterion { LastSquare, LastDomino, MedianDomino, MedianSquare };

inline const char* criterion_name(StratCriterion c)
{
    switch (c) {
    case StratCriterion::LastSquare: return "last-square";
    case StratCriterion::LastDomino: return "last-domino";
    case StratCriterion::MedianDomino: return "median-domino";
    case StratCriterion::MedianSquare: return "median-square";
    }
    return "?";
}

inline std::optional<StratCriterion> parse_criterion(std::string_view s)
{
    for (auto c : {StratCriterion::LastSquare, StratCriterion::LastDomino, StratCriterion::MedianDomino,
                   StratCriterion::MedianSquare})
        if (s == criterion_name(c))
            return c;
    return std::nullopt;
}

struct Stratum {
    int index = 0;              // summation index i of the matching identity
    int statistic = 0;          // the positional statistic that defines membership
    std::string statistic_name; // e.g. "dominoes_after_last_square"
    std::vector<Tiling> members;
    Polynomial generating;
    Polynomial predicted;

    std::string label() const { return "S_" + std::to_string(index); }
    bool matches() const { return generating == predicted; }
};

struct Stratification {
    StratCriterion criterion{};
    int first = 0;  // n, or m for MedianSquare
    int second = 0; // k, or r
    int tiling_n = 0; // parameters of the underlying tiling family
    int tiling_k = 0;
    std::vector<Stratum> strata;

    std::size_t total_members() const
    {
        std::size_t s = 0;
        for (const auto& st : strata)
            s += st.members.size();
        return s;
    }

    bool all_match() const
    {
        return std::ranges::all_of(strata, [](const Stratum& s) { return s.matches(); });
    }
};

namespace detail {

struct StratumRule {
    int lo, hi;                                // expected index range, inclusive
    std::string statistic_name;
    std::function<int(const Tiling&)> statistic;
    std::function<int(int)> index_of;          // statistic -> index
    std::function<int(int)> statistic_of;      // index -> statistic
    std::function<Polynomial(int)> predicted;  // index -> summand
};

// Buckets every tiling of (n, k) by the rule. Strata for every expected index
// are emitted even when empty; a tiling landing outside the expected range
// gets its own stratum with a zero prediction, so it shows up as a mismatch.
inline Stratification build_stratification(StratCriterion c, int first, int second, int tn, int tk,
                                           const StratumRule& rule)
{
    std::map<int, Stratum> buckets;
    for (int i = rule.lo; i <= rule.hi; ++i) {
        Stratum s;
        s.index = i;
        s.statistic = rule.statistic_of(i);
        s.statistic_name = rule.statistic_name;
        s.predicted = rule.predicted(i);
        buckets.emplace(i, std::move(s));
    }
    for_each_tiling(tn, tk, [&](const std::vector<Piece>& pieces) {
        Tiling t(pieces);
        const int stat = rule.statistic(t);
        const int index = rule.index_of(stat);
        auto [it, fresh] = buckets.try_emplace(index);
        if (fresh) {
            it->second.index = index;
            it->second.statistic = stat;
            it->second.statistic_name = rule.statistic_name;
        }
        it->second.members.push_back(std::move(t));
    });

    Stratification out;
    out.criterion = c;
    out.first = first;
    out.second = second;
    out.tiling_n = tn;
    out.tiling_k = tk;
    for (auto& [i, s] : buckets) {
        s.generating = generating_polynomial_of(s.members);
        out.strata.push_back(std::move(s));
    }
    return out;
}

// Position (0-based, in pieces) of the `ordinal`-th (1-based) piece of kind p,
// or -1 when there is none.
inline int nth_piece(const Tiling& t, Piece p, int ordinal)
{
    int seen = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t.pieces()[i] == p && ++seen == ordinal)
            return static_cast<int>(i);
    return -1;
}

inline int last_piece(const Tiling& t, Piece p)
{
    for (std::size_t i = t.size(); i-- > 0;)
        if (t.pieces()[i] == p)
            return static_cast<int>(i);
    return -1;
}

inline int count_in(const Tiling& t, Piece p, int from, int to)
{
    return static_cast<int>(std::count(t.pieces().begin() + from, t.pieces().begin() + to, p));
}

inline void require(bool ok, const std::string& msg)
{
    if (!ok)
        throw DomainError(msg);
}

} // namespace detail

inline Stratification stratify_last_square(int n, int k)
{
    detail::require(k >= 1 && k < n, "stratify_last_square: requires 1 <= k < n");
    detail::StratumRule rule{
        0, k, "dominoes_after_last_square",
        [](const Tiling& t) {
            const int last = detail::last_piece(t, Piece::Square);
            return detail::count_in(t, Piece::Domino, last + 1, static_cast<int>(t.size()));
        },
        [k](int after) { return k - after; },
        [k](int i) { return k - i; },
        [n, k](int i) { return shift(gauss(n - k - 1 + i, i), i); },
    };
    return detail::build_stratification(StratCriterion::LastSquare, n, k, n, k, rule);
}

inline Stratification stratify_last_domino(int n, int k)
{
    detail::require(k >= 1 && k <= n, "stratify_last_domino: requires 1 <= k <= n");
    detail::StratumRule rule{
        0, n - k, "squares_after_last_domino",
        [](const Tiling& t) {
            const int last = detail::last_piece(t, Piece::Domino);
            return detail::count_in(t, Piece::Square, last + 1, static_cast<int>(t.size()));
        },
        [n, k](int after) { return n - k - after; },
        [n, k](int i) { return n - k - i; },
        [n, k](int i) { return shift(gauss(k - 1 + i, k - 1), static_cast<std::int64_t>(k) * (n - k - i)); },
    };
    return detail::build_stratification(StratCriterion::LastDomino, n, k, n, k, rule);
}

// Stratum index i is determined by the 1-based start cell 2r+i of the median
// domino.
inline Stratification stratify_median_domino(int n, int r)
{
    detail::require(r >= 0 && n >= 2 * r + 1, "stratify_median_domino: requires r >= 0 and n >= 2r+1");
    detail::StratumRule rule{
        1, n - 2 * r, "median_domino_start_cell",
        [r](const Tiling& t) {
            const int pos = detail::nth_piece(t, Piece::Domino, r + 1);
            // Cells covered before the median domino, plus one.
            int cell = 1;
            for (int i = 0; i < pos; ++i)
                cell += t.pieces()[i] == Piece::Domino ? 2 : 1;
            return cell;
        },
        [r](int cell) { return cell - 2 * r; },
        [r](int i) { return 2 * r + i; },
        [n, r](int i) {
            const auto e = static_cast<std::int64_t>(r + 1) * (n - 2 * r - i);
            return shift(gauss(r - 1 + i, r) * gauss(n - r - i, r), e);
        },
    };
    return detail::build_stratification(StratCriterion::MedianDomino, n, r, n, 2 * r + 1, rule);
}

inline Stratification stratify_median_square(int m, int r)
{
    detail::require(m >= 1 && m % 2 == 1 && r >= 0, "stratify_median_square: requires odd m >= 1 and r >= 0");
    const int half = (m - 1) / 2;
    detail::StratumRule rule{
        0, r, "dominoes_before_median_square",
        [half](const Tiling& t) {
            const int pos = detail::nth_piece(t, Piece::Square, half + 1);
            return detail::count_in(t, Piece::Domino, 0, pos);
        },
        [](int before) { return before; },
        [](int i) { return i; },
        [half, r](int i) {
            const auto e = static_cast<std::int64_t>(i) * (half + 1);
            return shift(gauss(half + i, i) * gauss(half + r - i, r - i), e);
        },
    };
    return detail::build_stratification(StratCriterion::MedianSquare, m, r, m + r, r, rule);
}

inline Stratification stratify(StratCriterion c, int a, int b)
{
    switch (c) {
    case StratCriterion::LastSquare: return stratify_last_square(a, b);
    case StratCriterion::LastDomino: return stratify_last_domino(a, b);
    case StratCriterion::MedianDomino: return stratify_median_domino(a, b);
    case StratCriterion::MedianSquare: return stratify_median_square(a, b);
    }
    throw DomainError("stratify: unknown criterion");
}

} // namespace qlattice
