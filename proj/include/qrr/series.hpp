#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrr/atom.hpp"
#include "qrr/errors.hpp"
#include "qrr/exponent.hpp"

namespace qrr {

/// Truncated Laurent series with exact rational coefficients on the
/// half-integer exponent grid.  A series with floor f and order N stores
/// every coefficient for exponents in [f, N]; all coefficients below f are
/// zero, all coefficients above N are unknown.  "Truncated to order N" means
/// every coefficient with exponent <= N is exact.
class Series {
public:
    Series(Exponent floor, Exponent order);
    static Series zero(Exponent order) { return Series(Exponent::integer(0), order); }
    static Series one(Exponent order);
    static Series monomial(const mpq_class& c, Exponent e, Exponent order);

    Exponent floor() const { return floor_; }
    Exponent order() const { return order_; }
    std::int64_t size() const { return static_cast<std::int64_t>(c_.size()); }

    /// Coefficient of q^e; zero below the floor, error above the order.
    const mpq_class& at(Exponent e) const;
    void set(Exponent e, const mpq_class& v);
    void add_at(Exponent e, const mpq_class& v);

    bool is_zero() const;
    /// Lowest exponent with a nonzero stored coefficient.
    std::optional<Exponent> min_exponent() const;
    /// Highest exponent with a nonzero stored coefficient.
    std::optional<Exponent> max_exponent() const;

    /// An exact series has no unknown tail: it is a Laurent polynomial that is
    /// fully stored.  Products with exact factors keep the full validity
    /// window of the other operand (needed when floors go negative).
    bool exact() const { return exact_; }
    void mark_exact() { exact_ = true; }
    void clear_exact() { exact_ = false; }

    Series truncated(Exponent new_order) const;
    Series shifted(Exponent delta) const;  // multiply by q^delta
    void negate();
    void scale(const mpq_class& c);

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series& operator+=(const Series& o);
    /// In-place a += o requiring o.order() >= order(); keeps this->order().
    void accumulate(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o) { *this = *this * o; return *this; }

    /// In-place multiply by (1 - sign q^e), e > 0.  Exact, no order loss.
    Series& mul_one_minus(SignedAtom a);
    /// In-place divide by (1 - sign q^e), e > 0.  Exact, no order loss.
    Series& div_one_minus(SignedAtom a);

    /// Multiplicative inverse of c q^e (1 + higher); the result is valid to
    /// order() - 2e where e is the exponent of the lowest nonzero term.
    Series inverted() const;

    /// Earliest exponent in [max floor, min order] where coefficients differ.
    static std::optional<Exponent> first_mismatch(const Series& a, const Series& b);
    /// Equal on the intersection of validity ranges.
    static bool agree(const Series& a, const Series& b);

    /// All coefficients in [from, order] are nonnegative integers.
    bool integral_nonnegative(Exponent from) const;

    std::string str(int max_terms = 12) const;

private:
    std::int64_t idx(Exponent e) const { return (e - floor_).steps(); }
    void grow_down(Exponent new_floor);

    Exponent floor_;
    Exponent order_;
    bool exact_ = false;
    std::vector<mpq_class> c_;  // c_[i] = coefficient of floor_ + i steps
};

}  // namespace qrr
