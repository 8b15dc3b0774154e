#include "qrr/factor_bag.hpp"

namespace qrr {

void FactorBag::mul_monomial(SignedAtom a, std::int64_t power) {
    shift_ += power * a.exp;
    if (a.sign < 0 && (power % 2 != 0)) scalar_ = -scalar_;
}

void FactorBag::mul_factor(SignedAtom a, std::int64_t mult) {
    if (mult == 0) return;
    while (a.exp < Exponent::integer(0)) {
        // (1 - s q^e) = -s q^e (1 - s q^{-e})
        mul_monomial(a, mult);
        mul_monomial(SignedAtom{-1, Exponent::integer(0)}, mult);
        a.exp = -a.exp;
    }
    if (a.exp == Exponent::integer(0)) {
        if (a.sign > 0) {
            zero_mult_ += mult;  // exact zero (positive mult) or pole (negative)
        } else {
            for (std::int64_t i = 0; i < (mult > 0 ? mult : -mult); ++i)
                scalar_ *= (mult > 0) ? mpq_class(2) : mpq_class(1, 2);
        }
        return;
    }
    auto it = factors_.find(a);
    if (it == factors_.end()) {
        factors_[a] = mult;
    } else {
        it->second += mult;
        if (it->second == 0) factors_.erase(it);
    }
}

void FactorBag::mul_poch(SignedAtom a, Exponent base, std::int64_t k, std::int64_t mult) {
    if (mult == 0 || k == 0) return;
    if (k > 0) {
        for (std::int64_t j = 0; j < k; ++j)
            mul_factor(SignedAtom{a.sign, a.exp + j * base}, mult);
    } else {
        for (std::int64_t l = 1; l <= -k; ++l)
            mul_factor(SignedAtom{a.sign, a.exp - l * base}, -mult);
    }
}

void FactorBag::mul_difference(SignedAtom a, SignedAtom b, std::int64_t mult) {
    // a - b = a (1 - b/a)
    mul_monomial(a, mult);
    mul_factor(SignedAtom{a.sign * b.sign, b.exp - a.exp}, mult);
}

Series FactorBag::to_series(Exponent order) const {
    if (zero_mult_ > 0) return Series::zero(order);
    if (zero_mult_ < 0) throw SingularPochhammer("uncancelled (1-q^0) in denominator");
    if (shift_ > order) return Series::zero(order);
    Series s = Series::monomial(scalar_, shift_, order);
    for (const auto& [a, mult] : factors_) {
        if (a.exp + shift_ > order) {  // cannot affect the visible window
            s.clear_exact();
            continue;
        }
        for (std::int64_t i = 0; i < (mult > 0 ? mult : -mult); ++i) {
            if (mult > 0)
                s.mul_one_minus(a);
            else
                s.div_one_minus(a);
        }
    }
    return s;
}

}  // namespace qrr
