#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace qrr {

/// Exponent on the half-integer grid.  Stored as an integer number of steps
/// of s = q^{1/2}, so every exponent appearing in the engine (including the
/// q^{1/2}, q^{n-i+1/2} specialisations) is representable exactly.
class Exponent {
public:
    constexpr Exponent() : steps_(0) {}

    static constexpr Exponent from_steps(std::int64_t s) { return Exponent(s); }
    static constexpr Exponent integer(std::int64_t n) { return Exponent(2 * n); }
    /// n half-units, i.e. half(3) == q^{3/2}.
    static constexpr Exponent half(std::int64_t n) { return Exponent(n); }

    constexpr std::int64_t steps() const { return steps_; }
    constexpr bool is_integral() const { return steps_ % 2 == 0; }
    /// Valid only when is_integral().
    constexpr std::int64_t to_integer() const { return steps_ / 2; }

    friend constexpr Exponent operator+(Exponent a, Exponent b) { return Exponent(a.steps_ + b.steps_); }
    friend constexpr Exponent operator-(Exponent a, Exponent b) { return Exponent(a.steps_ - b.steps_); }
    constexpr Exponent operator-() const { return Exponent(-steps_); }
    friend constexpr Exponent operator*(std::int64_t k, Exponent e) { return Exponent(k * e.steps_); }
    Exponent& operator+=(Exponent o) { steps_ += o.steps_; return *this; }
    Exponent& operator-=(Exponent o) { steps_ -= o.steps_; return *this; }

    friend constexpr auto operator<=>(Exponent a, Exponent b) = default;

    /// "5", "-3", "7/2", ...
    std::string str() const {
        if (is_integral()) return std::to_string(steps_ / 2);
        return std::to_string(steps_) + "/2";
    }

private:
    constexpr explicit Exponent(std::int64_t s) : steps_(s) {}
    std::int64_t steps_;
};

inline Exponent binom2(std::int64_t r) {  // binom(r,2), exact for negative r too
    return Exponent::integer(r * (r - 1) / 2);
}

}  // namespace qrr

template <>
struct std::hash<qrr::Exponent> {
    std::size_t operator()(const qrr::Exponent& e) const noexcept {
        return std::hash<std::int64_t>()(e.steps());
    }
};
