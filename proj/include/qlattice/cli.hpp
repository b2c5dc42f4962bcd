#pragma once

// Subcommand implementations for the qlattice tool. Each writes its result to
// `out`, diagnostics to `err`, and returns the process exit code:
//   0  success
//   1  a required check failed (identity sweep, stratum mismatch, subspace disagreement)
//   2  invalid arguments or domain/guard violation

#include <qlattice/binomial.hpp>
#include <qlattice/combinat.hpp>
#include <qlattice/identities.hpp>
#include <qlattice/poly.hpp>
#include <qlattice/qbinom.hpp>
#include <qlattice/serialize.hpp>
#include <qlattice/stratify.hpp>
#include <qlattice/subspace.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace qlattice::cli {

enum class OutputFormat { Text, Json, Latex };

inline std::optional<OutputFormat> parse_format(std::string_view s)
{
    if (s == "text")
        return OutputFormat::Text;
    if (s == "json")
        return OutputFormat::Json;
    if (s == "latex")
        return OutputFormat::Latex;
    return std::nullopt;
}

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

// Listings larger than this board length need --force.
inline constexpr int kEnumerateLimit = 30;

namespace detail {

inline int fail(std::ostream& err, const std::string& msg)
{
    err << "qlattice: " << msg << '\n';
    return kUsage;
}

inline std::string bracket_latex(int n, int k)
{
    return "{" + std::to_string(n) + "\\brack " + std::to_string(k) + "}_q";
}

} // namespace detail

inline int cmd_compute(int n, int k, OutputFormat fmt, std::ostream& out, std::ostream& err)
{
    if (n < 0)
        return detail::fail(err, "compute: n must be >= 0");
    const Polynomial& p = gauss(n, k);
    switch (fmt) {
    case OutputFormat::Text: out << to_text(p) << '\n'; break;
    case OutputFormat::Json: out << to_json_value(p).dump() << '\n'; break;
    case OutputFormat::Latex: out << detail::bracket_latex(n, k) << " = " << to_latex(p) << '\n'; break;
    }
    return kOk;
}

enum class EnumerateKind { Tilings, Paths, Partitions };

inline std::optional<EnumerateKind> parse_enumerate_kind(std::string_view s)
{
    if (s == "tilings")
        return EnumerateKind::Tilings;
    if (s == "paths")
        return EnumerateKind::Paths;
    if (s == "partitions")
        return EnumerateKind::Partitions;
    return std::nullopt;
}

inline int cmd_enumerate(EnumerateKind kind, int n, int k, OutputFormat fmt, bool count_only, bool force,
                         std::ostream& out, std::ostream& err)
{
    if (n < 0 || k < 0 || k > n)
        return detail::fail(err, "enumerate: requires 0 <= k <= n");
    if (n + k > kEnumerateLimit && !force)
        return detail::fail(err, "enumerate: board length n+k = " + std::to_string(n + k) + " exceeds " +
                                     std::to_string(kEnumerateLimit) + "; pass --force to list anyway");
    if (fmt == OutputFormat::Latex)
        return detail::fail(err, "enumerate: latex output is not available");

    struct Item {
        std::string text;
        json value;
        long long weight;
    };
    std::vector<Item> items;
    switch (kind) {
    case EnumerateKind::Tilings:
        for (const auto& t : enumerate_tilings(n, k))
            items.push_back({t.text(), to_json_value(t), weight_exponent(t)});
        break;
    case EnumerateKind::Paths:
        for (const auto& p : enumerate_paths(n, k))
            items.push_back({p.text(), to_json_value(p), weight_exponent(p)});
        break;
    case EnumerateKind::Partitions:
        for (const auto& lambda : enumerate_box_partitions(k, n - k))
            items.push_back({lambda.text(), to_json_value(lambda), lambda.size()});
        break;
    }

    if (count_only) {
        out << items.size() << '\n';
        return kOk;
    }
    if (fmt == OutputFormat::Json) {
        const char* key = kind == EnumerateKind::Tilings ? "tiling" : kind == EnumerateKind::Paths ? "path" : "partition";
        json list = json::array();
        for (auto& it : items)
            list.push_back({{key, std::move(it.value)}, {"weight", it.weight}});
        out << list.dump() << '\n';
        return kOk;
    }
    for (const auto& it : items)
        out << (it.text.empty() ? "-" : it.text) << ' ' << it.weight << '\n';
    return kOk;
}

inline int cmd_eval(int n, int k, const std::string& q_text, bool check_subspaces, OutputFormat fmt,
                    std::ostream& out, std::ostream& err)
{
    if (n < 0)
        return detail::fail(err, "eval: n must be >= 0");
    if (fmt == OutputFormat::Latex)
        return detail::fail(err, "eval: latex output is not available");
    Integer q;
    try {
        q = Integer(q_text);
    } catch (const std::exception&) {
        return detail::fail(err, "eval: --q must be an integer, got \"" + q_text + "\"");
    }
    const Integer value = eval_int(gauss(n, k), q);

    std::optional<Integer> count;
    if (check_subspaces) {
        if (q < 2 || q > 4)
            return detail::fail(err, "eval: --check-subspaces supports q in {2, 3, 4}");
        if (k < 0)
            return detail::fail(err, "eval: --check-subspaces requires k >= 0");
        try {
            count = subspace_count(n, k, q.convert_to<int>());
        } catch (const DomainError& e) {
            return detail::fail(err, std::string("eval: ") + e.what());
        }
    }
    const bool agree = !count || *count == value;

    if (fmt == OutputFormat::Json) {
        json j = {{"n", n}, {"k", k}, {"q", q.str()}, {"value", value.str()}};
        if (count) {
            j["subspace_count"] = count->str();
            j["agree"] = agree;
        }
        out << j.dump() << '\n';
    } else {
        out << value << '\n';
        if (count)
            out << "subspace count over GF(" << q << "): " << *count << (agree ? " (agrees)" : " (DISAGREES)")
                << '\n';
    }
    return agree ? kOk : kCheckFailed;
}

inline int cmd_stratify(const std::string& criterion, int a, int b, OutputFormat fmt, std::ostream& out,
                        std::ostream& err)
{
    const auto c = parse_criterion(criterion);
    if (!c)
        return detail::fail(err, "stratify: unknown criterion \"" + criterion +
                                     "\" (last-square, last-domino, median-domino, median-square)");
    Stratification s;
    try {
        s = stratify(*c, a, b);
    } catch (const DomainError& e) {
        return detail::fail(err, e.what());
    }

    Polynomial total;
    for (const auto& st : s.strata)
        total += st.generating;
    const bool sum_ok = total == gauss(s.tiling_n, s.tiling_k);
    const bool ok = s.all_match() && sum_ok;

    const bool two = *c == StratCriterion::LastSquare || *c == StratCriterion::LastDomino;
    const std::string first = *c == StratCriterion::MedianSquare ? "m" : "n";
    const std::string second = two ? "k" : "r";

    switch (fmt) {
    case OutputFormat::Json: out << to_json_value(s).dump() << '\n'; break;
    case OutputFormat::Text:
        out << criterion_name(*c) << ' ' << first << '=' << a << ' ' << second << '=' << b << ": "
            << s.total_members() << " tilings of length " << s.tiling_n + s.tiling_k << " in " << s.strata.size()
            << " strata\n";
        for (const auto& st : s.strata)
            out << st.label() << "  " << st.statistic_name << '=' << st.statistic << "  size=" << st.members.size()
                << "  generating: " << to_text(st.generating) << "  predicted: " << to_text(st.predicted) << "  "
                << (st.matches() ? "match" : "MISMATCH") << '\n';
        out << "sum of strata = [" << s.tiling_n << ' ' << s.tiling_k << "]_q: " << (sum_ok ? "yes" : "NO") << '\n';
        break;
    case OutputFormat::Latex:
        out << "\\begin{tabular}{llrll}\n";
        for (const auto& st : s.strata)
            out << "$S_{" << st.index << "}$ & " << (st.matches() ? "match" : "mismatch") << " & "
                << st.members.size() << " & $" << to_latex(st.generating) << "$ & $" << to_latex(st.predicted)
                << "$ \\\\\n";
        out << "\\end{tabular}\n";
        out << detail::bracket_latex(s.tiling_n, s.tiling_k) << " = " << to_latex(total) << '\n';
        break;
    }
    return ok ? kOk : kCheckFailed;
}

struct VerifyOptions {
    std::optional<int> max;   // bounds every parameter
    std::optional<int> max_n; // bounds the first parameter only; wins over max
    unsigned workers = 0;     // 0 picks from hardware concurrency
};

inline int cmd_verify(const std::string& which, const VerifyOptions& opt, OutputFormat fmt, std::ostream& out,
                      std::ostream& err)
{
    if (fmt == OutputFormat::Latex)
        return detail::fail(err, "verify: latex output is not available");
    std::vector<IdentityId> ids;
    if (which == "all") {
        ids.assign(kAllIdentities.begin(), kAllIdentities.end());
    } else if (auto id = parse_identity(which)) {
        ids.push_back(*id);
    } else {
        return detail::fail(err, "verify: unknown identity \"" + which + "\"");
    }
    if ((opt.max && *opt.max < 0) || (opt.max_n && *opt.max_n < 0))
        return detail::fail(err, "verify: bounds must be nonnegative");

    const unsigned workers =
        opt.workers ? opt.workers : std::clamp(std::thread::hardware_concurrency(), 1u, 4u);

    std::vector<IdentityReport> reports;
    for (IdentityId id : ids) {
        SweepBounds b = default_bounds(id);
        if (opt.max)
            b.max_first = b.max_second = *opt.max;
        if (opt.max_n)
            b.max_first = *opt.max_n;
        b.workers = workers;
        reports.push_back(sweep(id, b));
        if (has_extension(id)) {
            b.extension = true;
            reports.push_back(sweep(id, b));
        }
    }

    bool ok = true;
    for (const auto& r : reports)
        if (!r.passed() && identity_required(r.id) && !r.extension)
            ok = false;

    if (fmt == OutputFormat::Json) {
        json list = json::array();
        for (const auto& r : reports)
            list.push_back(to_json_value(r));
        out << list.dump() << '\n';
    } else {
        for (const auto& r : reports) {
            out << (r.passed() ? "PASS" : "FAIL") << "  " << identity_name(r.id) << "  " << r.domain << "  ("
                << r.checked << " checked";
            if (!r.passed())
                out << ", " << r.failures.size() << " failed";
            out << ')';
            if (!r.passed() && !identity_required(r.id))
                out << "  [expected: printed upper limit (r+1)/2 over-counts]";
            out << '\n';
            if (!r.passed()) {
                const auto& f = r.failures.front();
                out << "      first failure at";
                for (const auto& [name, v] : f.params)
                    out << ' ' << name << '=' << v;
                out << ": lhs " << f.lhs << ", rhs " << f.rhs << '\n';
            }
        }
        out << (ok ? "all required identities hold" : "some required identities FAILED") << '\n';
    }
    return ok ? kOk : kCheckFailed;
}

} // namespace qlattice::cli
