#pragma once

#include "qmds/gf.hpp"
#include "qmds/grs.hpp"
#include "qmds/mat.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmds {

// F1: n = r m + 1, (q-1)/h odd.   F2: n = r m,     (q-1)/h odd.
// F3: n = r m + 1, (q+1)/h odd.   F4: n = r m,     (q+1)/h odd.
// with q^2 - 1 = 2 h m throughout.
enum class Family : int { F1 = 1, F2 = 2, F3 = 3, F4 = 4 };

inline bool uses_q_minus_one(Family f) noexcept { return f == Family::F1 || f == Family::F2; }
inline bool has_zero_locator(Family f) noexcept { return f == Family::F1 || f == Family::F3; }
inline std::int64_t shift_for(Family f, std::int64_t q) noexcept { return has_zero_locator(f) ? 0 : (q + 1) / 2; }

inline std::string family_name(Family f) { return "F" + std::to_string(static_cast<int>(f)); }

inline Family family_from_int(int v)
{
    if (v < 1 || v > 4) throw Error(Errc::HypothesisViolated, "family must be 1..4, got " + std::to_string(v));
    return static_cast<Family>(v);
}

/// Residues s in [0, 2h) with q i + j + shift = s m for some 0 <= i, j < k,
/// each with its (unique) witness pair.
struct SIndexSet {
    std::int64_t shift = 0;
    std::vector<int> values;
    std::map<int, std::pair<std::int64_t, std::int64_t>> witnesses;
};

/// Odd part w = (q -+ 1)/h and tau with w = 2 tau + 1, when h is admissible
/// for the family (h even, w odd, tau >= 1).
inline std::optional<std::int64_t> odd_quotient(Family f, std::int64_t q, std::int64_t h) noexcept
{
    const std::int64_t base = uses_q_minus_one(f) ? q - 1 : q + 1;
    if (h < 2 || h % 2 != 0 || base % h != 0) return std::nullopt;
    const std::int64_t w = base / h;
    if (w % 2 == 0 || w < 3) return std::nullopt;
    return w;
}

namespace detail {

inline void append_progression(std::set<int>& out, std::int64_t first, std::int64_t last, std::int64_t step)
{
    for (std::int64_t s = first; s <= last; s += step) out.insert(static_cast<int>(s));
}

inline std::int64_t require_w(Family f, std::int64_t q, std::int64_t h)
{
    const auto w = odd_quotient(f, q, h);
    if (!w)
        throw Error(Errc::HypothesisViolated,
                    std::string("h must be even with ") + (uses_q_minus_one(f) ? "(q-1)/h" : "(q+1)/h") +
                        " = 2tau+1, tau >= 1 (q=" + std::to_string(q) + ", h=" + std::to_string(h) + ")");
    return *w;
}

inline std::int64_t half_exact(std::int64_t numerator, std::vector<std::string>* warnings, const char* what)
{
    if (numerator % 2 != 0 && warnings) warnings->push_back(std::string(what) + " bound is not integral; floored");
    return numerator >= 0 ? numerator / 2 : -((-numerator + 1) / 2);
}

} // namespace detail

/// Admissible t for the index-set lemma of a family. F1/F2 have one form;
/// F3/F4 have variant 1 (0 <= t <= h/2-1) and variant 2 (1 <= t <= h/2).
inline std::pair<int, int> lemma_t_range(Family f, int variant, std::int64_t h)
{
    const int half = static_cast<int>(h / 2);
    switch (f) {
    case Family::F1: return {0, half - 1};
    case Family::F2: return {1, half};
    case Family::F3:
    case Family::F4:
        if (variant == 1) return {0, half - 1};
        if (variant == 2) return {1, half};
        break;
    }
    throw Error(Errc::HypothesisViolated, "index-set variant must be 1 or 2");
}

/// Largest k for which the index-set lemma holds at parameter t.
inline std::int64_t lemma_k_bound(Family f, int variant, std::int64_t q, std::int64_t h, std::int64_t t)
{
    const std::int64_t w = detail::require_w(f, q, h);
    const auto [lo, hi] = lemma_t_range(f, variant, h);
    if (t < lo || t > hi)
        throw Error(Errc::HypothesisViolated, "t=" + std::to_string(t) + " outside [" + std::to_string(lo) + "," +
                                                  std::to_string(hi) + "]");
    switch (f) {
    case Family::F1: return ((h + 2 * t + 1) * w + 1) / 2;
    case Family::F2: return (h + 2 * t) * w / 2;
    case Family::F3: return variant == 1 ? ((h + 2 * t + 1) * w - 3) / 2 : (h + 2 * t) * w / 2 - 1;
    case Family::F4: return variant == 1 ? ((h + 2 * t + 1) * w - 3) / 2 : (h + 2 * t) * w / 2 - 2;
    }
    return 0;
}

/// The closed-form residue set of the lemma before any k filtering.
/// `even_step` selects the spacing of the central even block for F3 variant 1;
/// 2 is the correct reading, 4 is kept only so tests can show it is wrong.
inline std::set<int> s_candidates(Family f, int variant, std::int64_t h, std::int64_t t, int even_step = 2)
{
    std::set<int> out;
    using detail::append_progression;
    switch (f) {
    case Family::F1:
        out.insert(0);
        append_progression(out, 1, 2 * t - 1, 2);
        append_progression(out, h + 1, h + 2 * t - 1, 2);
        append_progression(out, 2, h + 2 * t, 2);
        break;
    case Family::F2:
        append_progression(out, 2, 2 * t - 2, 2);
        append_progression(out, h + 2, h + 2 * t - 2, 2);
        append_progression(out, 1, h + 2 * t - 1, 2);
        break;
    case Family::F3:
        out.insert(0);
        append_progression(out, 1, h - 1, 2);
        if (variant == 1)
            append_progression(out, h - 2 * t, h + 2 * t, even_step);
        else
            append_progression(out, h - 2 * t + 2, h + 2 * t - 2, 2);
        append_progression(out, 2 * h - 2 * t + 1, h + 2 * t - 1, 2);
        break;
    case Family::F4:
        append_progression(out, 2, h - 2, 2);
        append_progression(out, h - 2 * t + 1, h + 2 * t - 1, 2);
        if (variant == 1)
            append_progression(out, 2 * h - 2 * t, h + 2 * t, 2);
        else
            append_progression(out, 2 * h - 2 * t + 2, h + 2 * t - 2, 2);
        break;
    }
    return out;
}

/// Explicit (i, j) with q i + j + shift = s m, from the digit decomposition
/// of s m - shift in each parity/range regime of s.
inline std::pair<std::int64_t, std::int64_t> s_witness(Family f, std::int64_t q, std::int64_t h, int s)
{
    const std::int64_t w = detail::require_w(f, q, h);
    const std::int64_t sw = s * w;
    const bool odd = s % 2 != 0;
    switch (f) {
    case Family::F1:
        if (!odd) return {sw / 2, sw / 2};
        if (s < h) return {(sw - 1) / 2, ((h + s) * w + 1) / 2};
        return {(sw + 1) / 2, ((s - h) * w - 1) / 2};
    case Family::F2:
        if (odd) return {(sw - 1) / 2, (sw - 1) / 2};
        if (s <= h) return {sw / 2 - 1, (h + s) * w / 2};
        return {sw / 2, (s - h) * w / 2 - 1};
    case Family::F3:
        if (s == 0) return {0, 0};
        if (!odd) return {sw / 2 - 1, (2 * h - s) * w / 2 - 1};
        if (s < h) return {(sw - 1) / 2, ((h - s) * w - 1) / 2};
        return {(sw - 3) / 2, ((3 * h - s) * w - 3) / 2};
    case Family::F4:
        if (odd) return {(sw - 3) / 2, ((2 * h - s) * w - 3) / 2};
        if (s < h) return {sw / 2 - 1, (h - s) * w / 2 - 1};
        return {sw / 2 - 2, (3 * h - s) * w / 2 - 2};
    }
    return {0, 0};
}

/// Closed-form index set at dimension k: the lemma's candidates whose explicit
/// witness fits inside 0 <= i, j <= k-1.
inline SIndexSet s_set(Family f, int variant, std::int64_t q, std::int64_t h, std::int64_t t, std::int64_t k,
                       int even_step = 2)
{
    const std::int64_t bound = lemma_k_bound(f, variant, q, h, t);
    if (k < 1 || k > bound || k > q - 1)
        throw Error(Errc::HypothesisViolated, "k=" + std::to_string(k) + " outside [1," +
                                                  std::to_string(std::min(bound, q - 1)) + "]");
    const std::int64_t m = (q * q - 1) / (2 * h);
    SIndexSet out;
    out.shift = shift_for(f, q);
    for (int s : s_candidates(f, variant, h, t, even_step)) {
        const auto [i, j] = s_witness(f, q, h, s);
        if (q * i + j + out.shift != s * m)
            throw std::logic_error("witness formula mismatch at s=" + std::to_string(s));
        if (i < 0 || j < 0 || i >= k || j >= k) continue;
        out.values.push_back(s);
        out.witnesses.emplace(s, std::pair{i, j});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Construction hypotheses

struct ConstructionParams {
    Family family = Family::F1;
    int case_no = 1;
    std::int64_t q = 0;
    std::int64_t h = 0;
    std::int64_t r = 0;
    std::int64_t k = 0;
    std::vector<std::int64_t> coset_exponents; // empty: canonical 0..r-1
};

/// Index-set lemma instance a (family, case, r) runs against.
struct LemmaChoice {
    int variant = 1;
    std::int64_t t = 0;
};

inline int case_count(Family f) noexcept
{
    switch (f) {
    case Family::F1: return 2;
    case Family::F2: return 1;
    case Family::F3: return 2;
    case Family::F4: return 3;
    }
    return 0;
}

namespace detail {

inline void require(bool ok, Family f, int case_no, const std::string& bound, std::int64_t r)
{
    if (!ok)
        throw Error(Errc::HypothesisViolated, family_name(f) + " case " + std::to_string(case_no) + " requires " +
                                                  bound + " (got r=" + std::to_string(r) + ")");
}

} // namespace detail

/// Checks the r-range of (family, case) and returns the lemma instance it uses.
inline LemmaChoice lemma_for(Family f, int case_no, std::int64_t h, std::int64_t r)
{
    if (case_no < 1 || case_no > case_count(f))
        throw Error(Errc::HypothesisViolated,
                    family_name(f) + " has cases 1.." + std::to_string(case_count(f)) + ", got " + std::to_string(case_no));
    const bool odd = r % 2 != 0;
    using detail::require;
    switch (f) {
    case Family::F1:
        if (case_no == 1) {
            require(h / 2 + 1 <= r && r <= h, f, 1, "h/2+1≤r≤h", r);
            return {1, 0};
        }
        require(odd && h < r && r < 2 * h, f, 2, "odd h<r<2h", r);
        return {1, (r - h - 1) / 2};
    case Family::F2:
        require(h / 2 + 1 < r && r <= h, f, 1, "h/2+1<r≤h", r);
        return {1, 1};
    case Family::F3:
        if (case_no == 1) {
            require(odd && h < r && 2 * r < 3 * h, f, 1, "odd h<r<3h/2", r);
            return {2, (r - h + 1) / 2};
        }
        require(odd && 3 * h < 2 * r && r < 2 * h, f, 2, "odd 3h/2<r<2h", r);
        return {1, (r - h - 1) / 2};
    case Family::F4:
        if (case_no == 1) {
            require(h / 2 <= r && r <= h, f, 1, "h/2≤r≤h", r);
            return {1, 0};
        }
        if (case_no == 2) {
            require(odd && h < r && 2 * r < 3 * h, f, 2, "odd h<r<3h/2", r);
            return {1, (r - h + 1) / 2};
        }
        require(odd && 3 * h <= 2 * r && r < 2 * h, f, 3, "odd 3h/2≤r<2h", r);
        return {2, (r - h + 1) / 2};
    }
    return {};
}

/// Largest dimension the construction supports for (family, case, q, h, r).
inline std::int64_t kmax(Family f, int case_no, std::int64_t q, std::int64_t h, std::int64_t r,
                         std::vector<std::string>* warnings = nullptr)
{
    const std::int64_t w = detail::require_w(f, q, h);
    lemma_for(f, case_no, h, r);
    std::int64_t twice = 0;
    switch (f) {
    case Family::F1: twice = case_no == 1 ? (h + 1) * w + 1 : r * w + 1; break;
    case Family::F2: twice = (h + 2) * w; break;
    case Family::F3: twice = case_no == 1 ? (r + 1) * w - 2 : r * w - 3; break;
    case Family::F4:
        twice = case_no == 1 ? (h + 1) * w - 3 : case_no == 2 ? (r + 2) * w - 3 : (r + 1) * w - 4;
        break;
    }
    return detail::half_exact(twice, warnings, "k");
}

/// Parameters after every hypothesis check, with the derived constants.
struct CheckedParams {
    ConstructionParams params;
    Field field;
    std::int64_t w = 0;   // (q -+ 1)/h
    std::int64_t tau = 0; // w = 2 tau + 1
    std::int64_t m = 0;   // q^2 - 1 = 2 h m
    LemmaChoice lemma;
    std::int64_t k_max = 0;
    std::int64_t shift = 0;
    std::vector<std::string> warnings;

    std::int64_t length() const noexcept
    {
        return params.r * m + (has_zero_locator(params.family) ? 1 : 0);
    }
    Elem gamma() const noexcept { return field.theta_pow(2 * params.h); }
    Elem alpha() const noexcept { return field.theta_pow(m); }
    Elem beta() const noexcept { return field.theta_pow(2 * m); }
    Elem xi() const noexcept { return field.xi(); }
};

inline CheckedParams validate(const Field& field, ConstructionParams p)
{
    if (p.q != field.q())
        throw Error(Errc::HypothesisViolated, "q=" + std::to_string(p.q) + " does not match the field (q=" +
                                                  std::to_string(field.q()) + ")");
    CheckedParams c{.params = {}, .field = field, .w = 0, .tau = 0, .m = 0, .lemma = {}, .k_max = 0, .shift = 0, .warnings = {}};
    c.w = detail::require_w(p.family, p.q, p.h);
    c.tau = (c.w - 1) / 2;
    if ((p.q * p.q - 1) % (2 * p.h) != 0) throw Error(Errc::HypothesisViolated, "q^2-1 is not divisible by 2h");
    c.m = (p.q * p.q - 1) / (2 * p.h);
    c.lemma = lemma_for(p.family, p.case_no, p.h, p.r);
    c.k_max = kmax(p.family, p.case_no, p.q, p.h, p.r, &c.warnings);
    if (p.k < 1) throw Error(Errc::HypothesisViolated, "k must be at least 1");
    if (p.k > c.k_max)
        throw Error(Errc::HypothesisViolated, family_name(p.family) + " case " + std::to_string(p.case_no) +
                                                  " allows k≤" + std::to_string(c.k_max) + " (got k=" +
                                                  std::to_string(p.k) + ")");
    if (p.k > lemma_k_bound(p.family, c.lemma.variant, p.q, p.h, c.lemma.t))
        throw std::logic_error("theorem bound exceeds the index-set lemma bound");

    if (p.coset_exponents.empty())
        for (std::int64_t l = 0; l < p.r; ++l) p.coset_exponents.push_back(l);
    if (static_cast<std::int64_t>(p.coset_exponents.size()) != p.r)
        throw Error(Errc::HypothesisViolated, "expected r coset exponents");
    std::set<std::int64_t> mod2h;
    std::set<std::int64_t> modh;
    for (auto i : p.coset_exponents) {
        mod2h.insert(detail::mod(i, 2 * p.h));
        modh.insert(detail::mod(i, p.h));
    }
    if (static_cast<std::int64_t>(mod2h.size()) != p.r)
        throw Error(Errc::HypothesisViolated, "coset exponents must be distinct modulo 2h");
    if (p.r <= p.h && static_cast<std::int64_t>(modh.size()) != p.r)
        throw Error(Errc::HypothesisViolated, "coset exponents must be distinct modulo h when r≤h");

    const std::int64_t cols = p.r + (has_zero_locator(p.family) ? 1 : 0);
    if (cols >= p.q + 1)
        c.warnings.push_back("coefficient matrix has " + std::to_string(cols) +
                             " columns, outside the n<q+1 range of the nowhere-zero solution lemmas");
    c.shift = shift_for(p.family, p.q);
    c.params = std::move(p);
    return c;
}

inline SIndexSet s_set(const CheckedParams& c)
{
    return s_set(c.params.family, c.lemma.variant, c.params.q, c.params.h, c.lemma.t, c.params.k);
}

/// Locators: 0 (F1/F3 only) followed by the cosets theta^{i_l} <gamma>.
inline Vector build_locators(const CheckedParams& c)
{
    const Field& f = c.field;
    Vector a;
    a.reserve(static_cast<std::size_t>(c.length()));
    if (has_zero_locator(c.params.family)) a.push_back(f.zero());
    for (auto i : c.params.coset_exponents)
        for (std::int64_t nu = 0; nu < c.m; ++nu) a.push_back(f.theta_pow(i + 2 * c.params.h * nu));
    return a;
}

/// Coefficient matrix of the multiplier-norm system. For F1/F3 column 0 is
/// the zero locator and row 0 is (1, 1_r) encoding v_0^{q+1} + m sum v_l^{q+1} = 0
/// with v_0^{q+1} = m u_0; each remaining s contributes (0, alpha^{s i_l}).
/// For F2/F4 each s contributes (alpha^{s i_l} xi^{i_l}).
inline Matrix build_coefficient_matrix(const CheckedParams& c, const SIndexSet& s)
{
    const Field& f = c.field;
    const auto& exps = c.params.coset_exponents;
    const bool zero_col = has_zero_locator(c.params.family);
    const std::size_t offset = zero_col ? 1 : 0;

    std::vector<int> rows;
    for (int v : s.values)
        if (!(zero_col && v == 0)) rows.push_back(v);

    Matrix a(f, rows.size() + offset, exps.size() + offset);
    if (zero_col)
        for (std::size_t col = 0; col < a.cols(); ++col) a(0, col) = f.one();
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t l = 0; l < exps.size(); ++l) {
            Elem e = f.theta_pow(c.m * rows[r] * exps[l]);
            if (!zero_col) e = f.mul(e, f.pow(c.xi(), exps[l]));
            a(r + offset, l + offset) = e;
        }
    return a;
}

inline Matrix build_coefficient_matrix(const CheckedParams& c) { return build_coefficient_matrix(c, s_set(c)); }

enum class SolutionRoute {
    Unconstrained,     // no surviving power sums
    RankCondition,     // matrix over F_q, column-deletion rank test
    ConjugateDescent,  // matrix over F_{q^2}, row equivalent to its conjugate
    PerLocator,        // coset-constant system has no nowhere-zero solution; one unknown per locator
};

inline const char* to_string(SolutionRoute r) noexcept
{
    switch (r) {
    case SolutionRoute::Unconstrained: return "unconstrained";
    case SolutionRoute::RankCondition: return "rank-condition";
    case SolutionRoute::ConjugateDescent: return "conjugate-descent";
    case SolutionRoute::PerLocator: return "per-locator";
    }
    return "unknown";
}

struct SolvabilityReport {
    SolutionRoute route = SolutionRoute::Unconstrained;
    std::optional<bool> rank_condition;
    std::optional<bool> conjugate_row_equivalent;
    bool within_lemma_bounds = true;
    std::size_t kernel_dimension = 0;
    std::optional<SolutionRoute> structured_route; // set when the per-locator system was used instead
    std::string structured_failure;
};

struct Construction {
    CheckedParams params;
    SIndexSet s;
    Matrix coefficients;
    SolvabilityReport solvability;
    SolutionVector u;
    GrsCode code;
    QuantumParams quantum;
    std::uint64_t seed = 0;
};

namespace detail {

inline std::string describe_matrix(const Matrix& a)
{
    std::string out = "[";
    for (std::size_t r = 0; r < a.rows(); ++r) {
        out += r ? ",[" : "[";
        for (std::size_t col = 0; col < a.cols(); ++col) {
            if (col) out += ",";
            const Elem e = a(r, col);
            out += e.is_zero() ? std::string("0") : std::to_string(e.log());
        }
        out += "]";
    }
    return out + "]";
}

inline std::optional<bool> try_rank_condition(const Matrix& a)
{
    if (a.rows() < 1 || a.rows() >= a.cols()) return std::nullopt;
    return rank_stable_under_column_deletion(a);
}

/// Rows x = qi + j (0 <= i, j < k), entry a^x for each locator.
inline Matrix per_locator_matrix(const CheckedParams& c, const Vector& locators)
{
    const Field& f = c.field;
    const auto k = static_cast<std::size_t>(c.params.k);
    Matrix a(f, k * k, locators.size());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < locators.size(); ++l)
                a(i * k + j, l) = f.pow(locators[l], c.params.q * static_cast<std::int64_t>(i) + static_cast<std::int64_t>(j));
    return a;
}

} // namespace detail

/// Full pipeline: index set -> coefficient matrix -> solvability check ->
/// nowhere-zero F_q solution u -> multipliers with v^{q+1} = u -> code.
/// If the coset-constant kernel holds no nowhere-zero vector, the power-sum
/// system is re-solved with one norm unknown per locator (unless disabled).
inline Construction construct(const CheckedParams& c, std::uint64_t seed = 0, bool per_locator_fallback = true)
{
    const Field& f = c.field;
    SIndexSet s = s_set(c);
    Matrix a = build_coefficient_matrix(c, s);

    SolvabilityReport report;
    report.within_lemma_bounds = a.rows() == 0 || within_solution_lemma_bounds(a);
    std::vector<Vector> basis;
    if (a.rows() == 0) {
        report.route = SolutionRoute::Unconstrained;
        basis = nullspace_basis(a);
    } else if (is_base_field_matrix(a)) {
        report.route = SolutionRoute::RankCondition;
        report.rank_condition = detail::try_rank_condition(a);
        if (!report.rank_condition.value_or(false))
            throw Error(Errc::SolvabilityRouteFailed,
                        "column-deletion rank condition fails for " + detail::describe_matrix(a));
        basis = nullspace_basis(a);
    } else {
        report.route = SolutionRoute::ConjugateDescent;
        report.rank_condition = detail::try_rank_condition(a);
        report.conjugate_row_equivalent = row_equivalent(a, conjugate(a));
        if (!*report.conjugate_row_equivalent)
            throw Error(Errc::SolvabilityRouteFailed,
                        "matrix is not row equivalent to its conjugate: " + detail::describe_matrix(a));
        basis = base_field_solutions(a);
    }
    report.kernel_dimension = basis.size();
    if (basis.empty())
        throw Error(Errc::SolvabilityRouteFailed, "trivial kernel for " + detail::describe_matrix(a));

    Vector locators = build_locators(c);
    Vector multipliers;
    multipliers.reserve(locators.size());
    SolutionVector u;
    try {
        try {
            u = find_all_nonzero(f, basis, seed);
        } catch (const Error& e) {
            if (e.code() != Errc::NotFound) throw;
            u = find_nowhere_zero_in_span(f, basis, seed);
        }
    } catch (const Error& e) {
        if (e.code() != Errc::NotFound || !per_locator_fallback) throw;
        report.structured_route = report.route;
        report.structured_failure = e.what();
        report.route = SolutionRoute::PerLocator;
        const std::vector<Vector> wide = base_field_solutions(detail::per_locator_matrix(c, locators));
        report.kernel_dimension = wide.size();
        if (wide.empty()) throw Error(Errc::SolvabilityRouteFailed, "per-locator system has a trivial kernel");
        u = find_nowhere_zero_in_span(f, wide, seed);
    }

    const std::size_t r = c.params.coset_exponents.size();
    if (report.route == SolutionRoute::PerLocator) {
        for (auto x : u.coords) multipliers.push_back(f.solve_norm(x));
    } else if (has_zero_locator(c.params.family)) {
        multipliers.push_back(f.solve_norm(f.mul(u.coords[0], f.from_int(c.m))));
        for (std::size_t l = 0; l < r; ++l) {
            const Elem v = f.solve_norm(u.coords[l + 1]);
            for (std::int64_t nu = 0; nu < c.m; ++nu) multipliers.push_back(v);
        }
    } else {
        for (std::size_t l = 0; l < r; ++l) {
            const Elem v = f.solve_norm(u.coords[l]);
            for (std::int64_t nu = 0; nu < c.m; ++nu)
                multipliers.push_back(f.mul(v, f.theta_pow(nu * c.params.h)));
        }
    }

    GrsCode code(f, std::move(locators), std::move(multipliers), static_cast<std::size_t>(c.params.k));
    QuantumParams quantum = quantum_params(code);
    return Construction{c, std::move(s), std::move(a), report, std::move(u), std::move(code), quantum, seed};
}

// ---------------------------------------------------------------------------
// Length classification

struct CongruenceClass {
    std::string label;
    std::vector<std::string> relations; // every divisibility that holds
};

/// Which of q+1, (q+1)/2, q-1, (q-1)/2 divide n-1 or n. The label is the
/// strongest statement, preferring full moduli, then n-1 over n, then q+1
/// over q-1.
inline CongruenceClass congruence_class(std::int64_t n, std::int64_t q)
{
    struct Probe {
        std::int64_t modulus;
        const char* name;
        const char* half_name;
        std::int64_t residue;
        const char* target;
    };
    const Probe probes[] = {
        {q + 1, "(q+1)", "(q+1)/2", 1, "(n-1)"},
        {q - 1, "(q-1)", "(q-1)/2", 1, "(n-1)"},
        {q + 1, "(q+1)", "(q+1)/2", 0, "n"},
        {q - 1, "(q-1)", "(q-1)/2", 0, "n"},
    };
    CongruenceClass out;
    int best_level = 0;
    for (const auto& p : probes) {
        const std::int64_t x = n - p.residue;
        int level = 0;
        if (x % p.modulus == 0) {
            level = 2;
            out.relations.push_back(std::string(p.name) + "|" + p.target);
        } else if (x % (p.modulus / 2) == 0) {
            level = 1;
            out.relations.push_back(std::string(p.half_name) + "|" + p.target);
        }
        if (level > best_level) {
            best_level = level;
            out.label = level == 2 ? std::string(p.name) + "|" + p.target
                                   : std::string(p.name) + "∤" + p.target + ", " + p.half_name + "|" + p.target;
        }
    }
    if (best_level == 0) out.label = "none";
    return out;
}

/// n is not 0 or 1 modulo q+1 nor modulo q-1.
inline bool is_new_length(std::int64_t n, std::int64_t q) noexcept
{
    return n % (q + 1) != 0 && (n - 1) % (q + 1) != 0 && n % (q - 1) != 0 && (n - 1) % (q - 1) != 0;
}

} // namespace qmds
