#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "qrr/lattice.hpp"
#include "qrr/series.hpp"

namespace qrr {

/// sum_{r_1 >= ... >= r_m >= 0} q^{r_1^2+...+r_m^2 + r_i+...+r_m}
///   / ((q)_{r_1-r_2} ... (q)_{r_{m-1}-r_m} (q)_{r_m}),  1 <= i <= m+1.
Series ag_multisum(int m, int i, Exponent order);

/// sum_{r >= r_1 >= ... >= r_n >= 0} q^{r^2-r+sum r_i^2+sum r_i}
///   / ((q)_{r-r_1} ... (q)_{r_{n-1}-r_n} (q^{2-delta}; q^{2-delta})_{r_n}).
Series q2r_multisum(int r, int n, int delta, Exponent order);

/// sum_{r_1 >= ... >= r_n >= 0} q^{sum r_i^2+sum r_i}
///   / ((q)_{r_1-r_2} ... (q^{2-delta}; q^{2-delta})_{r_n}).
Series bressoud_multisum(int n, int delta, Exponent order);

/// The rank-1 (r_j, s_j)-indexed multisum: over r_0 = s_0 and chains
/// r_{j-1} >= r_j >= s_j, s_{j-1} >= s_j with r_n = s_n = 0,
///   q^{(sigma+1) r_0} / (q^n; q^n)_{r_0}
///   prod_{j=1}^n q^{r_j+s_j+n binom(r_{j-1}-r_j,2)+n binom(s_{j-1}-s_j,2)}
///     [r_{j-1}-s_j, r_{j-1}-r_j]_{q^n} [s_{j-1}, s_j]_{q^n}.
Series m1_multisum(int n, int sigma, Exponent order);

/// Both sides of the Rogers-Selberg identity at a = q^j; the displayed ratio
/// (1-a q^{2r})(a)_r / ((1-a)(q)_r) is taken in its polynomial limit form
/// (1-q^{j+2r})(q^{j+1})_{r-1} / (q)_r, with the r = 0 term equal to 1.
std::pair<Series, Series> rogers_selberg_check(int j, Exponent order);

/// Exact rational evaluation of both sides of the Watson transformation.
struct WatsonParams {
    mpq_class a, b, c, d, e, q;
    int N = 0;
};
std::pair<mpq_class, mpq_class> watson_check(const WatsonParams& p);

/// (determinant side, product side) of the B/C/D Weyl denominator formula
/// at exact rational points.
std::pair<mpq_class, mpq_class> weyl_denominator_check(WeylType type,
                                                       const std::vector<mpq_class>& x);

/// (bilateral sum, (q^base)_inf theta(a; q^base)) for the triple product.
std::pair<Series, Series> triple_product_check(SignedAtom a, Exponent base,
                                               Exponent order);

}  // namespace qrr
