#pragma once

// JSON forms of the library's values (nlohmann/json).
//
//   Polynomial     ["1","1","2","1","1"]               ascending, decimal strings
//   Tiling         ["D","S","D"]
//   LatticePath    ["R","U"]
//   BoxedPartition [2,1]                               nonzero parts only
//   IdentityReport {"id","domain","checked","passed","failures":[{"params","lhs","rhs"}]}

#include <qlattice/combinat.hpp>
#include <qlattice/identities.hpp>
#include <qlattice/poly.hpp>
#include <qlattice/stratify.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace qlattice {

using json = nlohmann::ordered_json;

inline json to_json_value(const Polynomial& p) { return to_coefficient_strings(p); }

inline Polynomial polynomial_from_json(const json& j)
{
    if (!j.is_array())
        throw DomainError("polynomial JSON must be an array of decimal strings");
    std::vector<std::string> coeffs;
    for (const auto& c : j) {
        if (!c.is_string())
            throw DomainError("polynomial JSON must be an array of decimal strings");
        coeffs.push_back(c.get<std::string>());
    }
    return from_coefficient_strings(coeffs);
}

inline json to_json_value(const Tiling& t)
{
    json a = json::array();
    for (Piece p : t.pieces())
        a.push_back(std::string(1, static_cast<char>(p)));
    return a;
}

inline json to_json_value(const LatticePath& p)
{
    json a = json::array();
    for (Step s : p.steps())
        a.push_back(std::string(1, static_cast<char>(s)));
    return a;
}

inline json to_json_value(const BoxedPartition& lambda) { return lambda.parts(); }

inline json to_json_value(const IdentityReport& r)
{
    json failures = json::array();
    for (const auto& f : r.failures) {
        json params = json::object();
        for (const auto& [name, value] : f.params)
            params[name] = value;
        failures.push_back({{"params", params}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    return {
        {"id", identity_name(r.id)},
        {"domain", r.domain},
        {"checked", r.checked},
        {"passed", r.passed()},
        {"failures", failures},
    };
}

inline json to_json_value(const Stratification& s)
{
    const bool two = s.criterion == StratCriterion::LastSquare || s.criterion == StratCriterion::LastDomino;
    const char* first = s.criterion == StratCriterion::MedianSquare ? "m" : "n";
    const char* second = two ? "k" : "r";
    json strata = json::array();
    for (const auto& st : s.strata)
        strata.push_back({
            {"label", st.label()},
            {"index", st.index},
            {"statistic", {{st.statistic_name, st.statistic}}},
            {"size", st.members.size()},
            {"generating", to_json_value(st.generating)},
            {"predicted", to_json_value(st.predicted)},
            {"match", st.matches()},
        });
    return {
        {"criterion", criterion_name(s.criterion)},
        {"params", {{first, s.first}, {second, s.second}}},
        {"tilings", {{"n", s.tiling_n}, {"k", s.tiling_k}}},
        {"total", s.total_members()},
        {"strata", strata},
    };
}

} // namespace qlattice
