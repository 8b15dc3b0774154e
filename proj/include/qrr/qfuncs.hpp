#pragma once

#include <cstdint>
#include <vector>

#include "qrr/factor_bag.hpp"
#include "qrr/series.hpp"

namespace qrr {

/// (a; q^base)_infinity as a truncated series; base > 0 required.
/// Factors with nonpositive exponent are normalised exactly as in FactorBag,
/// so arguments like a = q^{-3} are fine (and a in {q^0, q^{-base}, ...}
/// yields the exact zero series).
Series poch_inf(SignedAtom a, Exponent base, Exponent order);

/// (a; q^base)_k for any integer k (extended to negative k).
Series poch(SignedAtom a, Exponent base, std::int64_t k, Exponent order);

/// Modified theta  theta(a; q^base) = (a; q^base)_inf (q^base/a; q^base)_inf.
Series theta(SignedAtom a, Exponent base, Exponent order);
/// Product of theta(a_i; q^base) over a list of atoms.
Series theta_list(const std::vector<SignedAtom>& as, Exponent base, Exponent order);

/// Gaussian binomial [n, m]_{q^base}; zero series when m outside [0, n].
/// Cached on (n, m, base, order).
Series qbinom(std::int64_t n, std::int64_t m, Exponent base, Exponent order);

/// 1 / (q^base; q^base)_k, cached on (k, base, order).
Series poch_inv_cached(std::int64_t k, Exponent base, Exponent order);

/// Jacobi triple product  sum_{r in Z} (-1)^r q^{base binom(r,2)} a^r,
/// computed as the bilateral sum (for cross-checks of poch/theta).
Series triple_product_sum(SignedAtom a, Exponent base, Exponent order);

}  // namespace qrr
