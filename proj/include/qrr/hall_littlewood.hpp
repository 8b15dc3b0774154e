#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrr/partitions.hpp"
#include "qrr/series.hpp"

namespace qrr {

/// A finite alphabet of signed q-power atoms together with the base of the
/// Hall-Littlewood parameter: the pair (vars, base) encodes evaluating at
/// x = vars with q -> q^base.
struct AlphabetSpec {
    std::vector<SignedAtom> vars;
    Exponent base;

    std::string digest() const;
};

/// (1, q, q^2, ..., q^{scale-1}) with base scale: the principal alphabet.
AlphabetSpec geometric_alphabet(int scale);

/// Modified Hall-Littlewood polynomial Q'_lambda evaluated on the alphabet,
/// computed by the flag (Gelfand-Tsetlin chain) formula as a row-by-row
/// transfer sum over chains of partitions interlaced between conjugates.
/// Memoised on (lambda, alphabet, order).
Series qprime_flag(const Partition& la, const AlphabetSpec& alpha, Exponent order);

/// sum_{lambda : lambda_1 <= m} q^{w |lambda|} P'_{2 lambda}(vars; q^base),
/// computed by a single global chain transfer over all even-conjugate tops,
/// with exact minimal-exponent pruning.  Throws UncertifiedAlphabet when the
/// per-row growth certificate cannot be established.
Series sum_side(int m, const AlphabetSpec& alpha, Exponent w, Exponent order);

/// Geometric specialisation  sum_{lambda_1 <= m} q^{(sigma+1)|lambda|}
/// P_{2 lambda}(1, q, q^2, ...; q^scale).
Series sum_side_geometric(int m, int scale, int sigma, Exponent order);

/// P_lambda(1, q, q^2, ...; q^scale) = Q'_lambda(geometric) / b_lambda(q^scale).
Series p_geometric(const Partition& la, int scale, Exponent order);

/// Stable limit  lim_r q^{-E_r} Q_{lambda_r}(1, q, q^2, ...; q^scale) with
///   lambda_r = (m^r, k),  E_r = m binom(r,2) + k r          (plain), or
///   lambda_r = (k, m^r),  E_r = m binom(r+1,2)              (flipped),
/// 0 <= k <= m (plain), k >= m (flipped).  Detects stabilisation of two
/// consecutive terms; throws NoStabilisation past r = order + 8.
Series rect_limit(int m, int scale, int k, bool flipped, Exponent order);

/// rect_limit together with the row index r at which the stabilised value
/// was first confirmed (two consecutive agreements ending at r).
struct RectLimitResult {
    Series value;
    std::int64_t r_stab = 0;
};
RectLimitResult rect_limit_info(int m, int scale, int k, bool flipped, Exponent order);

/// Closed near-rectangular formula for Q'_{(m^r, k)} (0 < k <= m) as a double
/// sum over compositions, each term an exact Pochhammer factor bag.
Series qprime_near_rect(int m, int r, int k, const AlphabetSpec& alpha, Exponent order);

}  // namespace qrr
