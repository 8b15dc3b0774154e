#pragma once

#include <compare>
#include <string>

#include "qrr/exponent.hpp"

namespace qrr {

/// A signed monomial +/- q^e on the half-integer grid.
struct SignedAtom {
    int sign = 1;  // +1 or -1
    Exponent exp{};

    static SignedAtom q_pow(Exponent e) { return {1, e}; }
    static SignedAtom neg_q_pow(Exponent e) { return {-1, e}; }
    static SignedAtom one() { return {1, Exponent::integer(0)}; }

    SignedAtom inverse() const { return {sign, -exp}; }
    friend SignedAtom operator*(SignedAtom a, SignedAtom b) { return {a.sign * b.sign, a.exp + b.exp}; }
    friend auto operator<=>(const SignedAtom&, const SignedAtom&) = default;

    std::string str() const {
        std::string s = sign < 0 ? "-" : "";
        if (exp == Exponent::integer(0)) return s + "1";
        return s + "q^" + exp.str();
    }
};

}  // namespace qrr
