#pragma once

#include "qmds/gf.hpp"
#include "qmds/mat.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qmds {

/// GRS_k(a, v): evaluations v_l f(a_l) of polynomials f with deg f < k.
class GrsCode {
public:
    GrsCode(Field field, Vector locators, Vector multipliers, std::size_t k)
        : field_(std::move(field)), locators_(std::move(locators)), multipliers_(std::move(multipliers)), k_(k)
    {
        const std::size_t n = locators_.size();
        if (multipliers_.size() != n) throw Error(Errc::InvalidCode, "locator and multiplier counts differ");
        if (k_ < 1 || k_ > n) throw Error(Errc::InvalidCode, "dimension must satisfy 1 <= k <= n");
        if (n > field_.size()) throw Error(Errc::InvalidCode, "more locators than field elements");
        for (auto v : multipliers_)
            if (v.is_zero()) throw Error(Errc::InvalidCode, "zero column multiplier");
        std::set<Elem> seen(locators_.begin(), locators_.end());
        if (seen.size() != n) throw Error(Errc::InvalidCode, "repeated code locator");
    }

    const Field& field() const noexcept { return field_; }
    const Vector& locators() const noexcept { return locators_; }
    const Vector& multipliers() const noexcept { return multipliers_; }
    std::size_t length() const noexcept { return locators_.size(); }
    std::size_t dimension() const noexcept { return k_; }

private:
    Field field_;
    Vector locators_;
    Vector multipliers_;
    std::size_t k_;
};

/// [[n, k, d]]_q.
struct QuantumParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t d = 0;
    std::int64_t q = 0;

    bool meets_singleton() const noexcept { return 2 * d == n - k + 2; }
    friend bool operator==(const QuantumParams&, const QuantumParams&) = default;
};

inline std::string to_string(const QuantumParams& p)
{
    return "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.d) + "]]_" +
           std::to_string(p.q);
}

/// Entry (i, j) = v_j a_j^i for 0 <= i < k, monomial basis, 0^0 = 1.
inline Matrix generator_matrix(const GrsCode& code)
{
    const Field& f = code.field();
    Matrix g(f, code.dimension(), code.length());
    for (std::size_t i = 0; i < code.dimension(); ++i)
        for (std::size_t j = 0; j < code.length(); ++j)
            g(i, j) = f.mul(code.multipliers()[j], f.pow(code.locators()[j], static_cast<std::int64_t>(i)));
    return g;
}

/// sum_l a_l^{qi+j} v_l^{q+1}.
inline Elem hermitian_power_sum(const GrsCode& code, std::int64_t i, std::int64_t j)
{
    const Field& f = code.field();
    const std::int64_t exponent = static_cast<std::int64_t>(f.q()) * i + j;
    Elem acc;
    for (std::size_t l = 0; l < code.length(); ++l)
        acc = f.add(acc, f.mul(f.pow(code.locators()[l], exponent), f.norm(code.multipliers()[l])));
    return acc;
}

struct OrthogonalityResult {
    bool pass = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Power-sum criterion: every sum with 0 <= i, j < k must vanish. On failure
/// the witness is the lexicographically first offending (i, j).
inline OrthogonalityResult is_hermitian_self_orthogonal(const GrsCode& code)
{
    const std::size_t k = code.dimension();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (!hermitian_power_sum(code, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)).is_zero())
                return {false, std::pair{i, j}};
    return {};
}

/// Containment in the Hermitian dual via G * (G^(q))^T = 0. Witness is the
/// first nonzero Gram entry in row-major order.
inline OrthogonalityResult gram_check(const GrsCode& code)
{
    const Matrix g = generator_matrix(code);
    const Matrix gram = g * conjugate(g).transpose();
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = 0; j < gram.cols(); ++j)
            if (!gram(i, j).is_zero()) return {false, std::pair{i, j}};
    return {};
}

struct MdsExhaustive {};
struct MdsSampled {
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 0;
};
using MdsMode = std::variant<MdsExhaustive, MdsSampled>;

enum class MdsKind { Full, Sampled, Skipped };

inline const char* to_string(MdsKind k) noexcept
{
    switch (k) {
    case MdsKind::Full: return "full";
    case MdsKind::Sampled: return "sampled";
    case MdsKind::Skipped: return "skipped";
    }
    return "unknown";
}

struct MdsResult {
    bool pass = true;
    MdsKind kind = MdsKind::Skipped;
    std::uint64_t subsets_checked = 0;
    std::vector<std::size_t> failing_columns;
};

inline constexpr double kExhaustiveSubsetBudget = 2'000'000.0;

inline double binomial(std::size_t n, std::size_t k) noexcept
{
    if (k > n) return 0.0;
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

namespace detail {

inline bool columns_independent(const Matrix& g, const std::vector<std::size_t>& cols)
{
    Matrix sub(g.field(), g.rows(), cols.size());
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) sub(r, c) = g(r, cols[c]);
    return !determinant(std::move(sub)).is_zero();
}

} // namespace detail

/// Checks that k-column subsets of the generator matrix are nonsingular.
/// Exhaustive mode walks all C(n, k) subsets in lexicographic order and
/// reports the first singular one.
inline MdsResult mds_check(const GrsCode& code, const MdsMode& mode)
{
    const Matrix g = generator_matrix(code);
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    MdsResult out;

    if (std::holds_alternative<MdsExhaustive>(mode)) {
        if (binomial(n, k) > kExhaustiveSubsetBudget)
            throw Error(Errc::BudgetExceeded, "C(" + std::to_string(n) + "," + std::to_string(k) +
                                                  ") exceeds the exhaustive subset budget");
        out.kind = MdsKind::Full;
        std::vector<std::size_t> cols(k);
        std::iota(cols.begin(), cols.end(), 0);
        while (true) {
            ++out.subsets_checked;
            if (!detail::columns_independent(g, cols)) {
                out.pass = false;
                out.failing_columns = cols;
                return out;
            }
            std::size_t pos = k;
            while (pos > 0 && cols[pos - 1] == n - k + pos - 1) --pos;
            if (pos == 0) break;
            ++cols[pos - 1];
            for (std::size_t i = pos; i < k; ++i) cols[i] = cols[i - 1] + 1;
        }
        return out;
    }

    const auto& sampled = std::get<MdsSampled>(mode);
    out.kind = MdsKind::Sampled;
    std::mt19937_64 rng(sampled.seed);
    std::vector<std::size_t> perm(n);
    for (std::uint64_t t = 0; t < sampled.trials; ++t) {
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = 0; i < k; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, n - 1);
            std::swap(perm[i], perm[pick(rng)]);
        }
        std::vector<std::size_t> cols(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(cols.begin(), cols.end());
        ++out.subsets_checked;
        if (!detail::columns_independent(g, cols)) {
            out.pass = false;
            out.failing_columns = std::move(cols);
            return out;
        }
    }
    return out;
}

/// Hermitian construction: a self-orthogonal [n, k]_{q^2} GRS code gives [[n, n-2k, k+1]]_q.
inline QuantumParams quantum_params(const GrsCode& code)
{
    const auto n = static_cast<std::int64_t>(code.length());
    const auto k = static_cast<std::int64_t>(code.dimension());
    if (n < 2 * k) throw Error(Errc::DimensionTooLarge, "Hermitian construction needs n >= 2k");
    const auto ortho = is_hermitian_self_orthogonal(code);
    if (!ortho.pass)
        throw Error(Errc::NotSelfOrthogonal, "power sum (" + std::to_string(ortho.witness->first) + "," +
                                                 std::to_string(ortho.witness->second) + ") is nonzero");
    return {n, n - 2 * k, k + 1, code.field().q()};
}

/// Propagation: [[n, n-2k, k+1]]_q quantum MDS gives [[n-1, n-2k+1, k]]_q.
inline QuantumParams propagate(const QuantumParams& p)
{
    if (!p.meets_singleton()) throw Error(Errc::NotMds, to_string(p) + " does not meet the quantum Singleton bound");
    if (p.d < 2) throw Error(Errc::DistanceTooSmall, "propagation needs d >= 2");
    return {p.n - 1, p.k + 1, p.d - 1, p.q};
}

/// Outcome of the full oracle battery on one code.
struct VerificationReport {
    OrthogonalityResult power_sums;
    OrthogonalityResult gram;
    MdsResult mds;
    std::optional<std::int64_t> min_distance;
    bool min_distance_pass = true;
    std::optional<QuantumParams> recomputed;
    QuantumParams claimed;
    bool params_match = false;
    bool singleton_pass = false;
    std::vector<std::string> notes;

    bool all_pass() const noexcept
    {
        return power_sums.pass && gram.pass && mds.pass && min_distance_pass && params_match && singleton_pass;
    }
};

} // namespace qmds
