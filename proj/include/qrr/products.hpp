#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qrr/exponent.hpp"
#include "qrr/series.hpp"

namespace qrr {

/// One infinite Pochhammer factor (sign q^e; q^base)_infinity^mult with the
/// exponent normalised into (0, base].
struct InfFactor {
    int sign = 1;
    Exponent e;
    Exponent base;
    std::int64_t mult = 1;
};

/// Symbolic product  scalar * q^shift * prod (sign q^e; q^base)_inf^mult.
/// theta factors are split into their two Pochhammer halves; exponents are
/// normalised so that the factor list is canonical enough for multiset
/// comparison after rebasing (residue_ledger).
class ProductForm {
public:
    mpq_class scalar = 1;
    Exponent shift{};
    bool zero = false;  // an uncancelled (1 - q^0) numerator factor

    const std::vector<InfFactor>& factors() const { return factors_; }

    /// *= (sign q^e; q^base)_inf^mult; requires e >= 0 (e = 0 folds the
    /// leading (1 -+ 1) into the scalar / zero flag).
    void mul_poch_inf(int sign, Exponent e, Exponent base, std::int64_t mult);
    /// *= theta(sign q^e; q^base)^mult = ((sign q^e)(sign q^{base-e}))^mult,
    /// any e; normalised into [0, base] first via
    ///   theta(a; q) = theta(q/a; q),  theta(aq; q) = -theta(a; q)/a.
    void mul_theta(int sign, Exponent e, Exponent base, std::int64_t mult);

    Series to_series(Exponent order) const;

    /// Rebase every factor to modulus kappa: (s q^e; q^b)_inf splits into
    /// kappa/b factors (s q^{e+jb}; q^kappa)_inf.  Requires b | kappa for
    /// every factor.  Returns (exponent, sign) -> net multiplicity, zero
    /// entries erased; together with scalar/shift/zero this is a complete
    /// invariant of the product.
    std::map<std::pair<Exponent, int>, std::int64_t> residue_ledger(Exponent kappa) const;

private:
    std::vector<InfFactor> factors_;
};

/// Catalogue row identifier plus its parameter record.
struct ProductId {
    std::string id;
    int m = 0, n = 0, sigma = 0, i = 0, k = 0;
    std::vector<Exponent> lambda;  // (lambda_0, ..., lambda_n) where used
    int kappa_perturb = 0;         // negative-control hook: modulus offset
};

/// The symbolic product of the catalogue row (without polynomial prefactors;
/// see product_side for rows that carry one).
ProductForm product_form(const ProductId& id);

/// The row's right-hand side as a series, including polynomial prefactors
/// (the q-binomial of the flipped near-rectangular limit).
Series product_side(const ProductId& id, Exponent order);

/// Both sides of one of the four constant-evaluation displays
/// (id in {c32, c33, c34, c35}).
std::pair<Series, Series> product_constant(const std::string& id, int n, Exponent order);

}  // namespace qrr
