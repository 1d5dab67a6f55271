#pragma once

#include "qmds/error.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qmds {

/// Largest q^2 for which full log/antilog/Zech tables are built by default.
inline constexpr std::uint64_t kDefaultTableBudget = 65536;

class Field;

/// An element of GF(q^2) in logarithmic form: either zero or theta^d with
/// d reduced modulo q^2 - 1. Only a Field can mint nonzero elements, which
/// keeps the exponent reduced.
class Elem {
public:
    constexpr Elem() noexcept = default;

    constexpr bool is_zero() const noexcept { return rep_ == kZero; }
    /// Exponent d with this == theta^d. Meaningless for zero.
    constexpr std::uint32_t log() const noexcept { return rep_; }

    friend constexpr bool operator==(Elem, Elem) noexcept = default;
    // zero sorts after every power of theta
    friend constexpr auto operator<=>(Elem, Elem) noexcept = default;

private:
    friend class Field;
    static constexpr std::uint32_t kZero = 0xffffffffu;
    constexpr explicit Elem(std::uint32_t rep) noexcept : rep_(rep) {}

    std::uint32_t rep_ = kZero;
};

namespace detail {

inline bool is_prime(std::int64_t n) noexcept
{
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::int64_t ipow(std::int64_t base, int exp) noexcept
{
    std::int64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

inline std::int64_t mod(std::int64_t a, std::int64_t n) noexcept
{
    const std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

struct FieldTables {
    int p = 0;
    int e = 0;
    int q = 0;
    std::uint32_t size = 0;       // q^2
    std::uint32_t group_order = 0; // q^2 - 1
    std::vector<int> modulus;      // c_0 .. c_{2e}, monic
    std::vector<std::uint32_t> antilog; // exponent -> base-p encoding of x^d mod f
    std::vector<std::int32_t> logs;     // encoding -> exponent, -1 for zero
    std::vector<std::int32_t> zech;     // n -> log(1 + theta^n), -1 when that sum is zero
};

// Walks x^d in F_p[x]/(f) and fills t.antilog. Returns false as soon as x
// returns to 1 early (so x is not primitive and f is rejected).
inline bool walk_powers_of_x(FieldTables& t, const std::vector<int>& low_coeffs)
{
    const int p = t.p;
    const int deg = 2 * t.e;
    std::vector<int> digits(deg, 0);
    digits[0] = 1;
    t.antilog.assign(t.group_order, 0);
    for (std::uint32_t d = 0; d < t.group_order; ++d) {
        std::uint32_t enc = 0;
        for (int i = deg - 1; i >= 0; --i) enc = enc * p + digits[i];
        if (d > 0 && enc == 1) return false;
        t.antilog[d] = enc;
        const int top = digits[deg - 1];
        for (int i = deg - 1; i > 0; --i) digits[i] = digits[i - 1];
        digits[0] = 0;
        if (top != 0)
            for (int i = 0; i < deg; ++i)
                digits[i] = static_cast<int>(mod(digits[i] - static_cast<std::int64_t>(top) * low_coeffs[i], p));
    }
    // x^{q^2-1} must land back on 1
    std::uint32_t enc = 0;
    for (int i = deg - 1; i >= 0; --i) enc = enc * p + digits[i];
    return enc == 1;
}

} // namespace detail

/// The tower F_p <= F_q <= F_{q^2}, q = p^e with p odd, represented by
/// log/antilog tables over a primitive element theta. Immutable once built
/// and cheap to copy (tables are shared).
///
/// The defining modulus is the monic degree-2e polynomial with the smallest
/// base-p value sum c_i p^i (i < 2e) for which x itself is primitive, so the
/// same (p, e) always yields the same theta and the same exponent encoding.
class Field {
public:
    static Field make(int p, int e, std::uint64_t table_budget = kDefaultTableBudget)
    {
        if (p == 2 || !detail::is_prime(p))
            throw Error(Errc::NonPrime, "characteristic must be an odd prime, got " + std::to_string(p));
        if (e < 1) throw Error(Errc::NonPrime, "extension degree must be positive");
        const std::int64_t q = detail::ipow(p, e);
        if (q > 0xffff || static_cast<std::uint64_t>(q) * static_cast<std::uint64_t>(q) > table_budget)
            throw Error(Errc::TableBudgetExceeded,
                        "q^2 = " + std::to_string(q * q) + " exceeds table budget " + std::to_string(table_budget));

        auto t = std::make_shared<detail::FieldTables>();
        t->p = p;
        t->e = e;
        t->q = static_cast<int>(q);
        t->size = static_cast<std::uint32_t>(q * q);
        t->group_order = t->size - 1;
        const int deg = 2 * e;

        // lexicographic search over the low coefficients; c_0 = 0 is never primitive
        std::vector<int> low(deg, 0);
        bool found = false;
        for (std::uint32_t code = 1; code < t->size && !found; ++code) {
            std::uint32_t c = code;
            for (int i = 0; i < deg; ++i) {
                low[i] = static_cast<int>(c % p);
                c /= p;
            }
            if (low[0] == 0) continue;
            found = detail::walk_powers_of_x(*t, low);
        }
        if (!found) throw Error(Errc::NotFound, "no primitive modulus found"); // unreachable for prime p

        t->modulus.assign(low.begin(), low.end());
        t->modulus.push_back(1);

        t->logs.assign(t->size, -1);
        for (std::uint32_t d = 0; d < t->group_order; ++d) t->logs[t->antilog[d]] = static_cast<std::int32_t>(d);

        t->zech.assign(t->group_order, -1);
        for (std::uint32_t n = 0; n < t->group_order; ++n) {
            const std::uint32_t enc = t->antilog[n];
            const std::uint32_t c0 = enc % p;
            const std::uint32_t plus_one = enc - c0 + (c0 + 1) % p;
            t->zech[n] = t->logs[plus_one];
        }
        return Field(std::move(t));
    }

    /// Builds GF(q^2) from the prime power q.
    static Field for_q(std::int64_t q, std::uint64_t table_budget = kDefaultTableBudget)
    {
        if (q < 3) throw Error(Errc::NonPrime, "q must be an odd prime power, got " + std::to_string(q));
        std::int64_t p = 2;
        while (q % p != 0) ++p;
        int e = 0;
        std::int64_t rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (rest != 1) throw Error(Errc::NonPrime, std::to_string(q) + " is not a prime power");
        return make(static_cast<int>(p), e, table_budget);
    }

    int p() const noexcept { return t_->p; }
    int e() const noexcept { return t_->e; }
    int q() const noexcept { return t_->q; }
    std::uint32_t size() const noexcept { return t_->size; }
    std::uint32_t group_order() const noexcept { return t_->group_order; }
    const std::vector<int>& modulus() const noexcept { return t_->modulus; }

    Elem zero() const noexcept { return Elem(); }
    Elem one() const noexcept { return Elem(0); }
    Elem theta() const noexcept { return Elem(1 % t_->group_order); }
    Elem theta_pow(std::int64_t d) const noexcept
    {
        return Elem(static_cast<std::uint32_t>(detail::mod(d, t_->group_order)));
    }
    /// xi = theta^{-(q+1)/2}; satisfies xi^q = -xi.
    Elem xi() const noexcept { return theta_pow(-static_cast<std::int64_t>((t_->q + 1) / 2)); }
    std::uint32_t xi_exponent() const noexcept { return xi().log(); }

    /// Image of the integer n under Z -> F_p <= F_{q^2}.
    Elem from_int(std::int64_t n) const noexcept
    {
        return from_encoding(static_cast<std::uint32_t>(detail::mod(n, t_->p)));
    }
    /// Polynomial-basis encoding sum c_i p^i of an element.
    std::uint32_t encoding(Elem x) const noexcept { return x.is_zero() ? 0 : t_->antilog[x.rep_]; }
    Elem from_encoding(std::uint32_t enc) const
    {
        if (enc >= t_->size) throw Error(Errc::ParseError, "encoding out of range");
        const std::int32_t l = t_->logs[enc];
        return l < 0 ? Elem() : Elem(static_cast<std::uint32_t>(l));
    }

    Elem add(Elem x, Elem y) const noexcept
    {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        const std::uint32_t n = t_->group_order;
        const std::uint32_t diff = y.rep_ >= x.rep_ ? y.rep_ - x.rep_ : y.rep_ + n - x.rep_;
        const std::int32_t z = t_->zech[diff];
        if (z < 0) return Elem();
        return Elem(static_cast<std::uint32_t>((x.rep_ + static_cast<std::uint32_t>(z)) % n));
    }
    Elem neg(Elem x) const noexcept
    {
        if (x.is_zero()) return x;
        return Elem((x.rep_ + t_->group_order / 2) % t_->group_order);
    }
    Elem sub(Elem x, Elem y) const noexcept { return add(x, neg(y)); }
    Elem mul(Elem x, Elem y) const noexcept
    {
        if (x.is_zero() || y.is_zero()) return Elem();
        return Elem(static_cast<std::uint32_t>((static_cast<std::uint64_t>(x.rep_) + y.rep_) % t_->group_order));
    }
    Elem inv(Elem x) const
    {
        if (x.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
        return Elem((t_->group_order - x.rep_) % t_->group_order);
    }
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

    /// x^n for any integer n, with 0^0 = 1.
    Elem pow(Elem x, std::int64_t n) const
    {
        if (x.is_zero()) {
            if (n == 0) return one();
            if (n < 0) throw Error(Errc::DivisionByZero, "negative power of zero");
            return Elem();
        }
        const std::int64_t order = t_->group_order;
        const std::int64_t reduced = detail::mod(n, order);
        return Elem(static_cast<std::uint32_t>((static_cast<std::int64_t>(x.rep_) * reduced) % order));
    }

    Elem frobenius(Elem x) const noexcept
    {
        if (x.is_zero()) return x;
        return Elem(static_cast<std::uint32_t>((static_cast<std::uint64_t>(x.rep_) * t_->q) % t_->group_order));
    }
    /// x^{q+1}, which always lies in F_q.
    Elem norm(Elem x) const noexcept
    {
        if (x.is_zero()) return x;
        return Elem(static_cast<std::uint32_t>((static_cast<std::uint64_t>(x.rep_) * (t_->q + 1)) % t_->group_order));
    }
    bool in_base_field(Elem x) const noexcept { return frobenius(x) == x; }

    /// Smallest-exponent v with v^{q+1} = u.
    Elem solve_norm(Elem u) const
    {
        if (u.is_zero()) throw Error(Errc::ZeroInput, "norm equation with zero right-hand side");
        if (!in_base_field(u)) throw Error(Errc::NotInBaseField, "norm equation right-hand side is not in F_q");
        return Elem(u.rep_ / static_cast<std::uint32_t>(t_->q + 1));
    }

    /// Enumerates F_q^*: index j in [0, q-1) maps to theta^{(q+1) j}.
    Elem base_unit(std::uint32_t j) const noexcept
    {
        return Elem(static_cast<std::uint32_t>((static_cast<std::uint64_t>(j) * (t_->q + 1)) % t_->group_order));
    }

    /// Coordinates (a, b) in F_q with x = a + b * theta.
    std::pair<Elem, Elem> base_coordinates(Elem x) const
    {
        const Elem th = theta();
        const Elem b = div(sub(x, frobenius(x)), sub(th, frobenius(th)));
        const Elem a = sub(x, mul(b, th));
        return {a, b};
    }

    bool same_as(const Field& other) const noexcept { return t_ == other.t_; }
    bool equivalent(const Field& other) const noexcept
    {
        return t_ == other.t_ || (t_->p == other.t_->p && t_->e == other.t_->e && t_->modulus == other.t_->modulus);
    }

private:
    explicit Field(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}

    std::shared_ptr<const detail::FieldTables> t_;
};

} // namespace qmds
