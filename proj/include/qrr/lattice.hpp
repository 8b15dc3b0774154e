#pragma once

#include <cstdint>
#include <vector>

#include "qrr/hall_littlewood.hpp"
#include "qrr/series.hpp"

namespace qrr {

enum class WeylType { B, C, D };

/// Generic B/C/D lattice theta sum
///   sum_{r in Z^n} Delta_T(x q^{c r}) prod_i x_i^{d r_i + e_i}
///                  q^{f r_i^2 + g binom(r_i,2) + h r_i} ((-1)^{sum r_i})
/// over a concrete alphabet of signed q-power atoms.  All exponent data on
/// the half-integer grid.
struct LatticeThetaSpec {
    WeylType weyl_type = WeylType::C;
    int n = 1;
    std::vector<SignedAtom> x;  // size n
    Exponent c;                 // shift: x_i -> x_i q^{c r_i}
    std::int64_t d = 0;         // monomial x_i^{d r_i + e[i]}
    std::vector<std::int64_t> e;
    Exponent f, g, h;           // q-law f r^2 + g binom(r,2) + h r
    bool sign_flag = false;     // include (-1)^{sum r_i}
};

/// Sum over the certified finite box {r : min-exponent bound <= order}.
/// Throws UncertifiedSpec when the quadratic certificate 2f + g > 0 fails
/// or the box cannot be bounded.
Series lattice_theta_sum(const LatticeThetaSpec& spec, Exponent order);

/// The L^{(p)}_m lattice series at a specialised alphabet: q -> q^base and
/// x_i -> alpha.vars[i].  r ranges over Z^p x N^{n-p}; each term is a single
/// factor bag so that 0/0 cancellations between the Delta_C ratio and the
/// Pochhammer pair resolve exactly.
Series L_sum(int p, int m, const AlphabetSpec& alpha, Exponent order);

}  // namespace qrr
