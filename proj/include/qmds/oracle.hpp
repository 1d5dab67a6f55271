#pragma once

#include "qmds/gf.hpp"
#include "qmds/grs.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Brute-force checks written against raw definitions. Nothing here may use
// the families module.
namespace qmds::oracle {

using Witnesses = std::map<int, std::vector<std::pair<std::int64_t, std::int64_t>>>;

/// Every s with q i + j + shift = s m for 0 <= i, j <= k-1, m = (q^2-1)/(2h),
/// with all witness pairs in (i, j) order.
inline Witnesses brute_force_s_set(std::int64_t q, std::int64_t h, std::int64_t k, std::int64_t shift)
{
    if (h < 1 || (q * q - 1) % (2 * h) != 0)
        throw Error(Errc::HypothesisViolated, "q^2-1 must be divisible by 2h");
    if (k < 1 || k > q - 1) throw Error(Errc::HypothesisViolated, "brute force needs 1 <= k <= q-1");
    const std::int64_t m = (q * q - 1) / (2 * h);
    Witnesses out;
    for (std::int64_t i = 0; i < k; ++i)
        for (std::int64_t j = 0; j < k; ++j) {
            const std::int64_t x = q * i + j + shift;
            if (x % m == 0) out[static_cast<int>(x / m)].emplace_back(i, j);
        }
    return out;
}

inline constexpr double kMinDistanceBudget = 1'000'000.0;

/// Minimum Hamming weight over all nonzero messages, by enumerating all
/// (q^2)^k polynomials of degree < k. Messages are walked with an odometer so
/// each step updates the codeword by one coefficient change.
inline std::int64_t exhaustive_min_distance(const GrsCode& code)
{
    const Field& f = code.field();
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    double space = 1.0;
    for (std::size_t i = 0; i < k; ++i) space *= f.size();
    if (space > kMinDistanceBudget)
        throw Error(Errc::BudgetExceeded, "(q^2)^k exceeds the codeword enumeration budget");

    // eval[i][l] = v_l * a_l^i
    std::vector<Vector> eval(k, Vector(n));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            Elem power = f.one();
            for (std::size_t e = 0; e < i; ++e) power = f.mul(power, code.locators()[l]);
            eval[i][l] = f.mul(code.multipliers()[l], power);
        }

    // digit 0 is the zero element, digit d >= 1 is theta^{d-1}
    auto digit_value = [&](std::uint32_t d) { return d == 0 ? f.zero() : f.theta_pow(d - 1); };
    std::vector<std::uint32_t> digits(k, 0);
    Vector word(n);
    auto best = static_cast<std::int64_t>(n) + 1;
    while (true) {
        std::size_t pos = 0;
        while (pos < k) {
            const Elem before = digit_value(digits[pos]);
            digits[pos] = (digits[pos] + 1) % f.size();
            const Elem delta = f.sub(digit_value(digits[pos]), before);
            for (std::size_t l = 0; l < n; ++l) word[l] = f.add(word[l], f.mul(delta, eval[pos][l]));
            if (digits[pos] != 0) break;
            ++pos;
        }
        if (pos == k) break;
        std::int64_t weight = 0;
        for (auto x : word) weight += x.is_zero() ? 0 : 1;
        if (weight < best) best = weight;
    }
    return best;
}

struct VerifyOptions {
    std::optional<MdsMode> mds_mode; // unset: exhaustive when within budget, else sampled
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 0;
};

/// Runs both orthogonality oracles, the MDS check, the codeword-enumeration
/// distance check when affordable, and compares claimed parameters with the
/// recomputed ones.
inline VerificationReport full_verify(const GrsCode& code, const QuantumParams& claimed, const VerifyOptions& opts = {})
{
    VerificationReport rep;
    rep.claimed = claimed;
    rep.power_sums = is_hermitian_self_orthogonal(code);
    rep.gram = gram_check(code);
    if (rep.power_sums.pass != rep.gram.pass) rep.notes.push_back("orthogonality oracles disagree");

    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    MdsMode mode = opts.mds_mode.value_or(binomial(n, k) <= kExhaustiveSubsetBudget
                                              ? MdsMode{MdsExhaustive{}}
                                              : MdsMode{MdsSampled{opts.trials, opts.seed}});
    rep.mds = mds_check(code, mode);

    double space = 1.0;
    for (std::size_t i = 0; i < k; ++i) space *= code.field().size();
    if (space <= kMinDistanceBudget) {
        rep.min_distance = exhaustive_min_distance(code);
        rep.min_distance_pass = *rep.min_distance == static_cast<std::int64_t>(n - k + 1);
    } else {
        rep.notes.push_back("codeword enumeration skipped: (q^2)^k over budget");
    }

    if (rep.power_sums.pass && n >= 2 * k) {
        rep.recomputed = quantum_params(code);
        rep.params_match = *rep.recomputed == claimed;
        if (!rep.params_match) rep.notes.push_back("claimed " + to_string(claimed) + " but code gives " + to_string(*rep.recomputed));
    } else {
        rep.params_match = false;
        rep.notes.push_back(n < 2 * k ? "n < 2k: Hermitian construction does not apply"
                                      : "code is not Hermitian self-orthogonal");
    }
    rep.singleton_pass = claimed.meets_singleton() && (!rep.recomputed || rep.recomputed->meets_singleton());
    return rep;
}

} // namespace qmds::oracle
