#pragma once

#include "qmds/catalog.hpp"
#include "qmds/families.hpp"
#include "qmds/grs.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qmds::io {

using json = nlohmann::ordered_json;

// Elements are written as theta exponents; zero is the string "0".
inline json elem_to_json(Elem x) { return x.is_zero() ? json("0") : json(x.log()); }

inline Elem elem_from_json(const Field& f, const json& j)
{
    if (j.is_string()) {
        if (j.get<std::string>() != "0") throw Error(Errc::ParseError, "element strings other than \"0\" are not allowed");
        return f.zero();
    }
    if (!j.is_number_integer()) throw Error(Errc::ParseError, "element must be an exponent or \"0\"");
    const auto e = j.get<std::int64_t>();
    if (e < 0 || static_cast<std::uint64_t>(e) >= f.group_order())
        throw Error(Errc::ParseError, "exponent " + std::to_string(e) + " out of range");
    return f.theta_pow(e);
}

inline json field_to_json(const Field& f)
{
    return {{"p", f.p()}, {"e", f.e()}, {"modulus", f.modulus()}};
}

inline json quantum_to_json(const QuantumParams& p) { return {{"n", p.n}, {"k", p.k}, {"d", p.d}, {"q", p.q}}; }

inline json artifact_to_json(const Construction& c)
{
    json code = {{"n", c.code.length()}, {"k", c.code.dimension()}};
    code["locators"] = json::array();
    for (auto a : c.code.locators()) code["locators"].push_back(elem_to_json(a));
    code["multipliers"] = json::array();
    for (auto v : c.code.multipliers()) code["multipliers"].push_back(elem_to_json(v));

    const auto& p = c.params.params;
    json construction = {{"family", static_cast<int>(p.family)},
                         {"case", p.case_no},
                         {"h", p.h},
                         {"r", p.r},
                         {"t", c.params.lemma.t},
                         {"coset_exponents", p.coset_exponents},
                         {"seed", c.seed},
                         {"route", to_string(c.solvability.route)}};
    return {{"field", field_to_json(c.code.field())},
            {"code", std::move(code)},
            {"construction", std::move(construction)},
            {"quantum", quantum_to_json(c.quantum)}};
}

/// A code read back from an artifact together with its claimed parameters.
struct Artifact {
    GrsCode code;
    QuantumParams claimed;
    std::optional<std::uint64_t> seed;
};

namespace detail {

inline const json& require(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing key \"") + key + "\"");
    return j.at(key);
}

inline std::int64_t require_int(const json& j, const char* key)
{
    const json& v = require(j, key);
    if (!v.is_number_integer()) throw Error(Errc::ParseError, std::string("\"") + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

} // namespace detail

inline Artifact artifact_from_json(const json& j, std::uint64_t table_budget = kDefaultTableBudget)
{
    const json& jf = detail::require(j, "field");
    const auto p = detail::require_int(jf, "p");
    const auto e = detail::require_int(jf, "e");
    if (p < 3 || e < 1 || e > 16) throw Error(Errc::ParseError, "field characteristic or degree out of range");
    std::int64_t q = 1;
    for (std::int64_t i = 0; i < e; ++i)
        if ((q *= p) > 0xffff) throw Error(Errc::ParseError, "field order out of range");
    const Field f = Field::make(static_cast<int>(p), static_cast<int>(e), table_budget);
    const json& jm = detail::require(jf, "modulus");
    if (!jm.is_array()) throw Error(Errc::ParseError, "\"modulus\" must be an array");
    std::vector<int> modulus;
    for (const auto& c : jm) {
        if (!c.is_number_integer()) throw Error(Errc::ParseError, "modulus coefficients must be integers");
        modulus.push_back(c.get<int>());
    }
    if (modulus != f.modulus()) throw Error(Errc::ParseError, "modulus differs from the canonical one for this field");

    const json& jc = detail::require(j, "code");
    const auto n = detail::require_int(jc, "n");
    const auto k = detail::require_int(jc, "k");
    const json& jl = detail::require(jc, "locators");
    const json& jv = detail::require(jc, "multipliers");
    if (!jl.is_array() || !jv.is_array()) throw Error(Errc::ParseError, "locators and multipliers must be arrays");
    if (static_cast<std::int64_t>(jl.size()) != n || static_cast<std::int64_t>(jv.size()) != n)
        throw Error(Errc::ParseError, "array lengths disagree with n");
    if (k < 1 || k > n) throw Error(Errc::ParseError, "k out of range");
    Vector locators;
    Vector multipliers;
    for (const auto& x : jl) locators.push_back(elem_from_json(f, x));
    for (const auto& x : jv) multipliers.push_back(elem_from_json(f, x));

    const json& jq = detail::require(j, "quantum");
    QuantumParams claimed{detail::require_int(jq, "n"), detail::require_int(jq, "k"), detail::require_int(jq, "d"),
                          detail::require_int(jq, "q")};

    std::optional<std::uint64_t> seed;
    if (j.contains("construction") && j["construction"].contains("seed") && j["construction"]["seed"].is_number_unsigned())
        seed = j["construction"]["seed"].get<std::uint64_t>();

    try {
        return {GrsCode(f, std::move(locators), std::move(multipliers), static_cast<std::size_t>(k)), claimed, seed};
    } catch (const Error& err) {
        throw Error(Errc::ParseError, err.what());
    }
}

inline Artifact parse_artifact(const std::string& text, std::uint64_t table_budget = kDefaultTableBudget)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    return artifact_from_json(j, table_budget);
}

inline json orthogonality_to_json(const OrthogonalityResult& r)
{
    json out = {{"pass", r.pass}};
    out["witness"] = r.witness ? json::array({r.witness->first, r.witness->second}) : json(nullptr);
    return out;
}

inline json report_to_json(const VerificationReport& r)
{
    json out;
    out["all_pass"] = r.all_pass();
    out["power_sums"] = orthogonality_to_json(r.power_sums);
    out["gram"] = orthogonality_to_json(r.gram);
    out["mds"] = {{"pass", r.mds.pass},
                  {"kind", to_string(r.mds.kind)},
                  {"subsets_checked", r.mds.subsets_checked},
                  {"failing_columns", r.mds.failing_columns}};
    out["min_distance"] = r.min_distance ? json(*r.min_distance) : json(nullptr);
    out["min_distance_pass"] = r.min_distance_pass;
    out["claimed"] = quantum_to_json(r.claimed);
    out["recomputed"] = r.recomputed ? quantum_to_json(*r.recomputed) : json(nullptr);
    out["params_match"] = r.params_match;
    out["singleton"] = r.singleton_pass;
    out["notes"] = r.notes;
    return out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

/// RFC 4180: quote when the field holds a comma, quote or line break.
inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline constexpr const char* kCatalogCsvHeader = "q,family,case,h,r,k,n,nq_k,d,congruence_class,provenance";

inline std::string catalog_to_csv(const std::vector<CatalogEntry>& rows)
{
    std::ostringstream out;
    out << kCatalogCsvHeader << "\r\n";
    for (const auto& e : rows) {
        const std::vector<std::string> fields = {std::to_string(e.q),
                                                 std::to_string(static_cast<int>(e.family)),
                                                 std::to_string(e.case_no),
                                                 std::to_string(e.h),
                                                 std::to_string(e.r),
                                                 std::to_string(e.k),
                                                 std::to_string(e.quantum.n),
                                                 std::to_string(e.quantum.k),
                                                 std::to_string(e.quantum.d),
                                                 e.congruence.label,
                                                 join(e.provenance, "; ")};
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
        out << "\r\n";
    }
    return out.str();
}

inline json catalog_to_json(const std::vector<CatalogEntry>& rows)
{
    json out = json::array();
    for (const auto& e : rows)
        out.push_back({{"q", e.q},
                       {"family", static_cast<int>(e.family)},
                       {"case", e.case_no},
                       {"h", e.h},
                       {"r", e.r},
                       {"k", e.k},
                       {"n", e.quantum.n},
                       {"nq_k", e.quantum.k},
                       {"d", e.quantum.d},
                       {"congruence_class", e.congruence.label},
                       {"congruence_relations", e.congruence.relations},
                       {"propagated", e.propagated},
                       {"new_length", e.new_length},
                       {"exceeds_half_q", e.exceeds_half_q},
                       {"verified", e.verified},
                       {"provenance", e.provenance}});
    return out;
}

} // namespace qmds::io
