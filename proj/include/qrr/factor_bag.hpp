#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

#include "qrr/atom.hpp"
#include "qrr/errors.hpp"
#include "qrr/series.hpp"

namespace qrr {

/// Symbolic product  scalar * q^shift * prod (1 - sign q^e)^mult  with e > 0
/// after normalisation.  Factors with e <= 0 are rewritten via
///   (1 - s q^e) = -s q^e (1 - s q^{-e}),
/// and (1 + q^0) = 2 folds into the scalar, so the only way to keep a zero
/// is an explicit (1 - q^0) factor.  This lets pole/zero cancellation between
/// numerator and denominator Pochhammers happen before any series expansion.
class FactorBag {
public:
    FactorBag() = default;

    void mul_scalar(const mpq_class& c) { scalar_ *= c; }
    void mul_monomial(SignedAtom a, std::int64_t power);  // *= a^power
    /// *= (1 - sign q^e)^mult, any e; normalises.
    void mul_factor(SignedAtom a, std::int64_t mult);
    /// *= ((a; q^base)_k)^mult for finite k (negative k uses the extended
    /// Pochhammer (a)_{-j} = 1 / prod_{l=1..j} (1 - a q^{-l base})).
    void mul_poch(SignedAtom a, Exponent base, std::int64_t k, std::int64_t mult);
    /// *= (a - b)^mult for signed atoms a, b (normalised difference).
    void mul_difference(SignedAtom a, SignedAtom b, std::int64_t mult);

    /// True when a (1 - q^0) factor with positive multiplicity survives.
    bool is_zero() const { return zero_mult_ > 0; }
    bool is_singular() const { return zero_mult_ < 0; }

    /// Least exponent of the expansion (the shift), when nonzero.
    Exponent min_exponent() const { return shift_; }
    const mpq_class& scalar() const { return scalar_; }

    /// Expand to a truncated series.  Throws SingularPochhammer when an
    /// uncancelled (1 - q^0) sits in a denominator.
    Series to_series(Exponent order) const;

private:
    mpq_class scalar_ = 1;
    Exponent shift_{};
    std::int64_t zero_mult_ = 0;  // multiplicity of the exact-zero factor (1 - q^0)
    std::map<SignedAtom, std::int64_t> factors_;  // all exps > 0
};

}  // namespace qrr
