#pragma once

#include "qmds/families.hpp"
#include "qmds/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace qmds {

struct CatalogEntry {
    std::int64_t q = 0;
    Family family = Family::F1;
    int case_no = 1;
    std::int64_t h = 0;
    std::int64_t r = 0;
    std::int64_t k = 0; // classical GRS dimension of the source code
    QuantumParams quantum;
    CongruenceClass congruence;
    bool propagated = false;
    bool new_length = false;
    bool exceeds_half_q = false; // d > q/2 + 1
    bool verified = false;
    std::vector<std::string> provenance;
};

struct CatalogOptions {
    std::int64_t q_max = 13;
    std::uint64_t seed = 0;
    bool verify_all = true;
    std::uint64_t trials = 100'000;
    std::uint64_t table_budget = kDefaultTableBudget;
};

/// Odd prime powers q <= q_max whose tables fit the budget.
inline std::vector<std::int64_t> odd_prime_powers(std::int64_t q_max, std::uint64_t table_budget = kDefaultTableBudget)
{
    std::vector<std::int64_t> out;
    for (std::int64_t q = 3; q <= q_max; q += 2) {
        if (static_cast<std::uint64_t>(q * q) > table_budget) break;
        std::int64_t p = 3;
        while (q % p != 0) p += 2;
        std::int64_t rest = q;
        while (rest % p == 0) rest /= p;
        if (rest == 1) out.push_back(q);
    }
    return out;
}

/// Admissible h values (ascending) for a family at q.
inline std::vector<std::int64_t> admissible_h(Family f, std::int64_t q)
{
    std::vector<std::int64_t> out;
    for (std::int64_t h = 2; h <= q + 1; h += 2)
        if (odd_quotient(f, q, h)) out.push_back(h);
    return out;
}

/// Every (family, case, r) the hypotheses accept for (q, h), as parameter sets at k = kmax.
inline std::vector<ConstructionParams> admissible_params(Family f, std::int64_t q, std::int64_t h)
{
    std::vector<ConstructionParams> out;
    for (int c = 1; c <= case_count(f); ++c)
        for (std::int64_t r = 1; r < 2 * h; ++r) {
            try {
                lemma_for(f, c, h, r);
            } catch (const Error&) {
                continue;
            }
            const std::int64_t k = kmax(f, c, q, h, r);
            if (k >= 1) out.push_back({f, c, q, h, r, k, {}});
        }
    return out;
}

inline std::string provenance_tag(const ConstructionParams& p)
{
    return family_name(p.family) + " case " + std::to_string(p.case_no) + " (h=" + std::to_string(p.h) +
           ", r=" + std::to_string(p.r) + ")";
}

namespace detail {

inline CatalogEntry make_entry(const ConstructionParams& p, const QuantumParams& qp, bool propagated)
{
    CatalogEntry e;
    e.q = p.q;
    e.family = p.family;
    e.case_no = p.case_no;
    e.h = p.h;
    e.r = p.r;
    e.k = p.k;
    e.quantum = qp;
    e.congruence = congruence_class(qp.n, p.q);
    e.propagated = propagated;
    e.new_length = is_new_length(qp.n, p.q);
    e.exceeds_half_q = 2 * qp.d > p.q + 2;
    e.provenance.push_back(propagated ? "propagated from " + provenance_tag(p) : provenance_tag(p));
    return e;
}

} // namespace detail

/// Constructs every admissible instance with q <= q_max at its maximal k,
/// verifies it, and adds propagated rows (length one less) for the families
/// with a zero locator. Rows with equal (q, n, quantum k) are merged keeping
/// every provenance; output is sorted by (q, n, d).
inline std::vector<CatalogEntry> catalog(const CatalogOptions& opts)
{
    std::vector<CatalogEntry> raw;
    for (std::int64_t q : odd_prime_powers(opts.q_max, opts.table_budget)) {
        const Field field = Field::for_q(q, opts.table_budget);
        for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4})
            for (std::int64_t h : admissible_h(f, q))
                for (const auto& p : admissible_params(f, q, h)) {
                    std::optional<Construction> attempt;
                    try {
                        attempt.emplace(construct(validate(field, p), opts.seed));
                    } catch (const Error& e) {
                        throw Error(Errc::VerificationFailed, "construction failed for " + provenance_tag(p) + ": " + e.what());
                    }
                    const Construction& built = *attempt;
                    CatalogEntry e = detail::make_entry(p, built.quantum, false);
                    if (opts.verify_all) {
                        const auto rep = oracle::full_verify(built.code, built.quantum, {std::nullopt, opts.trials, opts.seed});
                        if (!rep.all_pass())
                            throw Error(Errc::VerificationFailed,
                                        "verification failed for " + provenance_tag(p) + " " + to_string(built.quantum));
                        e.verified = true;
                    }
                    raw.push_back(e);
                    if (has_zero_locator(f) && built.quantum.d >= 2) {
                        CatalogEntry derived = detail::make_entry(p, propagate(built.quantum), true);
                        derived.verified = e.verified;
                        raw.push_back(std::move(derived));
                    }
                }
    }

    std::vector<CatalogEntry> out;
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::size_t> index;
    for (auto& e : raw) {
        const auto key = std::tuple{e.q, e.quantum.n, e.quantum.k};
        if (auto it = index.find(key); it != index.end()) {
            auto& kept = out[it->second].provenance;
            kept.insert(kept.end(), e.provenance.begin(), e.provenance.end());
            continue;
        }
        index.emplace(key, out.size());
        out.push_back(std::move(e));
    }
    std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return std::tuple{a.q, a.quantum.n, a.quantum.d} < std::tuple{b.q, b.quantum.n, b.quantum.d};
    });
    return out;
}

} // namespace qmds
