#pragma once

#include "qmds/gf.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace qmds {

using Vector = std::vector<Elem>;

/// Dense row-major matrix over one field context.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols)
    {
    }

    static Matrix identity(const Field& f, std::size_t n)
    {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }

    static Matrix from_rows(const Field& f, const std::vector<Vector>& rows, std::size_t cols)
    {
        Matrix m(f, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw Error(Errc::DimensionMismatch, "ragged row");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    /// Rows given as small integers mapped through Z -> F_p.
    static Matrix from_ints(const Field& f, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    {
        const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
        Matrix m(f, rows.size(), cols);
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != cols) throw Error(Errc::DimensionMismatch, "ragged row");
            std::size_t c = 0;
            for (auto v : row) m(r, c++) = f.from_int(v);
            ++r;
        }
        return m;
    }

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

    bool is_zero() const noexcept
    {
        for (auto x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix operator*(const Matrix& rhs) const
    {
        if (cols_ != rhs.rows_ || !field_.same_as(rhs.field_))
            throw Error(Errc::DimensionMismatch, "matrix product shapes or fields differ");
        Matrix out(field_, rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                Elem acc;
                for (std::size_t l = 0; l < cols_; ++l) acc = field_.add(acc, field_.mul((*this)(i, l), rhs(l, j)));
                out(i, j) = acc;
            }
        return out;
    }

    Vector apply(std::span<const Elem> u) const
    {
        if (u.size() != cols_) throw Error(Errc::DimensionMismatch, "vector length differs from column count");
        Vector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Elem acc;
            for (std::size_t l = 0; l < cols_; ++l) acc = field_.add(acc, field_.mul((*this)(i, l), u[l]));
            out[i] = acc;
        }
        return out;
    }

    /// Matrix with column `skip` removed.
    Matrix without_column(std::size_t skip) const
    {
        Matrix out(field_, rows_, cols_ - 1);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0, k = 0; c < cols_; ++c)
                if (c != skip) out(r, k++) = (*this)(r, c);
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) noexcept
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form with first-nonzero pivoting.
inline RrefResult rref(const Matrix& a)
{
    const Field& f = a.field();
    Matrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        const Elem scale = f.inv(m(row, col));
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), scale);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Elem factor = f.neg(m(r, col));
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = f.add(m(r, c), f.mul(factor, m(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), row, std::move(pivots)};
}

inline std::size_t rank(const Matrix& a) { return rref(a).rank; }

/// Determinant of a square matrix by elimination.
inline Elem determinant(Matrix m)
{
    if (m.rows() != m.cols()) throw Error(Errc::BadShape, "determinant of a non-square matrix");
    const Field& f = m.field();
    const std::size_t n = m.rows();
    Elem det = f.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col).is_zero()) ++sel;
        if (sel == n) return f.zero();
        if (sel != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(m(sel, c), m(col, c));
            det = f.neg(det);
        }
        const Elem pivot = m(col, col);
        det = f.mul(det, pivot);
        const Elem pivot_inv = f.inv(pivot);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            const Elem factor = f.neg(f.mul(m(r, col), pivot_inv));
            for (std::size_t c = col; c < n; ++c) m(r, c) = f.add(m(r, c), f.mul(factor, m(col, c)));
        }
    }
    return det;
}

/// Basis of {u : A u^T = 0}, one vector per free column (that coordinate set to 1).
inline std::vector<Vector> nullspace_basis(const Matrix& a)
{
    const Field& f = a.field();
    const auto [reduced, rk, pivots] = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector u(a.cols());
        u[free] = f.one();
        for (std::size_t r = 0; r < rk; ++r) u[pivots[r]] = f.neg(reduced(r, free));
        basis.push_back(std::move(u));
    }
    return basis;
}

/// Entrywise Frobenius, A^(q).
inline Matrix conjugate(const Matrix& a)
{
    Matrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field().frobenius(a(r, c));
    return out;
}

inline bool row_equivalent(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols() || !a.field().same_as(b.field()))
        throw Error(Errc::DimensionMismatch, "row equivalence needs equal shapes over one field");
    return rref(a).reduced == rref(b).reduced;
}

/// True iff deleting any single column leaves the rank unchanged. Together
/// with rows < cols < q+1 and entries in F_q this guarantees a kernel vector
/// with every coordinate in F_q^*.
inline bool rank_stable_under_column_deletion(const Matrix& a)
{
    if (a.rows() < 1 || a.rows() >= a.cols())
        throw Error(Errc::BadShape, "rank condition needs 1 <= rows < cols, got " + std::to_string(a.rows()) + "x" +
                                        std::to_string(a.cols()));
    const std::size_t full = rank(a);
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (rank(a.without_column(c)) != full) return false;
    return true;
}

/// The column bound under which the nowhere-zero solution lemmas apply: rows < cols < q+1.
inline bool within_solution_lemma_bounds(const Matrix& a)
{
    return a.rows() < a.cols() && a.cols() < static_cast<std::size_t>(a.field().q()) + 1;
}

inline bool is_base_field_matrix(const Matrix& a)
{
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (auto x : a.row(r))
            if (!a.field().in_base_field(x)) return false;
    return true;
}

/// Basis of {u in F_q^n : A u^T = 0} for A over F_{q^2}. Each entry is split as
/// a + b*theta with a, b in F_q and the stacked F_q system [A0; A1] is solved.
inline std::vector<Vector> base_field_solutions(const Matrix& a)
{
    const Field& f = a.field();
    Matrix stacked(f, 2 * a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const auto [re, im] = f.base_coordinates(a(r, c));
            stacked(r, c) = re;
            stacked(a.rows() + r, c) = im;
        }
    return nullspace_basis(stacked);
}

/// A kernel vector over F_q with no zero coordinate.
struct SolutionVector {
    Vector coords;
    std::uint64_t attempts = 0;
};

inline constexpr std::uint64_t kExhaustiveCombinationBudget = 1'000'000;
inline constexpr std::uint64_t kRandomCombinationAttempts = 100'000;

/// Searches the F_q-span of `basis` for a vector with every coordinate
/// nonzero, trying coefficient tuples drawn from F_q^*. For bases produced by
/// nullspace_basis the free coordinates equal the coefficients, so restricting
/// to nonzero coefficients loses nothing.
///
/// Tuples are enumerated exhaustively (first coefficient varying fastest,
/// starting at all ones) when (q-1)^dim fits the budget; otherwise a seeded
/// random sample of fixed size is drawn.
inline SolutionVector find_all_nonzero(const Field& f, const std::vector<Vector>& basis, std::uint64_t seed)
{
    if (basis.empty()) throw Error(Errc::NotFound, "empty kernel basis");
    const std::size_t dim = basis.size();
    const std::size_t len = basis.front().size();
    const std::uint32_t units = static_cast<std::uint32_t>(f.q() - 1);

    auto combine = [&](const std::vector<std::uint32_t>& idx) {
        Vector v(len);
        for (std::size_t b = 0; b < dim; ++b) {
            const Elem c = f.base_unit(idx[b]);
            for (std::size_t i = 0; i < len; ++i) v[i] = f.add(v[i], f.mul(c, basis[b][i]));
        }
        return v;
    };
    auto nowhere_zero = [](const Vector& v) {
        for (auto x : v)
            if (x.is_zero()) return false;
        return true;
    };

    double space = 1.0;
    for (std::size_t b = 0; b < dim; ++b) space *= units;

    std::vector<std::uint32_t> idx(dim, 0);
    std::uint64_t attempts = 0;
    if (space <= static_cast<double>(kExhaustiveCombinationBudget)) {
        while (true) {
            ++attempts;
            Vector v = combine(idx);
            if (nowhere_zero(v)) return {std::move(v), attempts};
            std::size_t pos = 0;
            while (pos < dim && ++idx[pos] == units) idx[pos++] = 0;
            if (pos == dim) break;
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint32_t> pick(0, units - 1);
        for (; attempts < kRandomCombinationAttempts;) {
            for (auto& i : idx) i = pick(rng);
            ++attempts;
            Vector v = combine(idx);
            if (nowhere_zero(v)) return {std::move(v), attempts};
        }
    }
    throw Error(Errc::NotFound, "no nowhere-zero combination after " + std::to_string(attempts) + " attempts");
}

inline constexpr double kProjectiveSpanBudget = 5'000'000.0;
inline constexpr std::uint64_t kRandomSpanAttempts = 200'000;

/// Searches the whole F_q-span of `basis` (entries in F_q) for a vector with
/// no zero coordinate. Unlike find_all_nonzero, zero coefficients are allowed.
///
/// Projective points are enumerated exhaustively when (q^dim - 1)/(q - 1)
/// fits the budget: the leading coefficient is 1 at position 0, then 1, ...,
/// with later coefficients counted by an odometer (first fastest). Otherwise
/// a seeded sample of full coefficient tuples is drawn.
inline SolutionVector find_nowhere_zero_in_span(const Field& f, const std::vector<Vector>& basis, std::uint64_t seed)
{
    if (basis.empty()) throw Error(Errc::NotFound, "empty kernel basis");
    const std::size_t dim = basis.size();
    const std::size_t len = basis.front().size();
    const auto q = static_cast<std::uint32_t>(f.q());

    // F_q as indices: 0 is zero, j + 1 is theta^{(q+1) j}.
    auto elem = [&](std::uint32_t i) { return i == 0 ? f.zero() : f.base_unit(i - 1); };
    auto index = [&](Elem x) -> std::uint32_t {
        if (!f.in_base_field(x)) throw Error(Errc::NotInBaseField, "span basis entry outside F_q");
        return x.is_zero() ? 0 : x.log() / (q + 1) + 1;
    };
    std::vector<std::uint32_t> add(q * q), mul(q * q);
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
            add[a * q + b] = index(f.add(elem(a), elem(b)));
            mul[a * q + b] = index(f.mul(elem(a), elem(b)));
        }
    std::vector<std::vector<std::uint32_t>> rows(dim, std::vector<std::uint32_t>(len));
    for (std::size_t b = 0; b < dim; ++b)
        for (std::size_t i = 0; i < len; ++i) rows[b][i] = index(basis[b][i]);

    auto finish = [&](const std::vector<std::uint32_t>& word, std::uint64_t attempts) {
        Vector v(len);
        for (std::size_t i = 0; i < len; ++i) v[i] = elem(word[i]);
        return SolutionVector{std::move(v), attempts};
    };

    double space = 0.0;
    for (std::size_t b = 0, pw = 1; b < dim; ++b, pw *= q) space += static_cast<double>(pw);
    std::uint64_t attempts = 0;
    if (space <= kProjectiveSpanBudget) {
        // Successor of coefficient index c is c + 1 in the index order, so the
        // word changes by (elem(c+1) - elem(c)) * row.
        std::vector<std::uint32_t> step(q);
        for (std::uint32_t c = 0; c < q; ++c) step[c] = index(f.sub(elem((c + 1) % q), elem(c)));
        for (std::size_t lead = 0; lead < dim; ++lead) {
            std::vector<std::uint32_t> word = rows[lead];
            std::size_t zeros = 0;
            for (auto x : word) zeros += x == 0;
            std::vector<std::uint32_t> digits(dim - lead - 1, 0);
            while (true) {
                ++attempts;
                if (zeros == 0) return finish(word, attempts);
                std::size_t pos = 0;
                for (; pos < digits.size(); ++pos) {
                    const std::uint32_t d = step[digits[pos]];
                    const auto& row = rows[lead + 1 + pos];
                    for (std::size_t i = 0; i < len; ++i) {
                        const std::uint32_t before = word[i];
                        word[i] = add[before * q + mul[d * q + row[i]]];
                        zeros += (word[i] == 0) - (before == 0);
                    }
                    digits[pos] = (digits[pos] + 1) % q;
                    if (digits[pos] != 0) break;
                }
                if (pos == digits.size()) break;
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
        std::vector<std::uint32_t> word(len);
        while (attempts < kRandomSpanAttempts) {
            ++attempts;
            std::fill(word.begin(), word.end(), 0);
            for (std::size_t b = 0; b < dim; ++b) {
                const std::uint32_t c = pick(rng);
                if (c == 0) continue;
                for (std::size_t i = 0; i < len; ++i) word[i] = add[word[i] * q + mul[c * q + rows[b][i]]];
            }
            if (std::find(word.begin(), word.end(), 0u) == word.end()) return finish(word, attempts);
        }
    }
    throw Error(Errc::NotFound, "no nowhere-zero vector in the span after " + std::to_string(attempts) + " attempts");
}

} // namespace qmds
