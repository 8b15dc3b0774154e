#pragma once

#include <gmpxx.h>

#include <vector>

#include "qrr/partitions.hpp"
#include "qrr/series.hpp"

namespace qrr {

/// Exact value of the Hall-Littlewood polynomial P_lambda(x_1,...,x_L; t) at
/// rational points, computed directly from the v_lambda-normalised
/// symmetrisation over the symmetric group S_L.  Returns 0 when
/// l(lambda) > L.  Restricted to L <= 7 (oracle, not a production path).
/// Throws RepeatedVariable when two x values coincide.
mpq_class hl_p_oracle(const Partition& la, const std::vector<mpq_class>& x,
                      const mpq_class& t);

/// Expansion of P_lambda(x; t) in monomial symmetric functions:
/// P_lambda = sum_mu c_{lambda,mu}(t) m_mu, the sum over partitions mu of
/// |lambda|.  The coefficients are polynomials in t (index = t-degree),
/// recovered by solving a linear system against exact evaluations of the
/// symmetrisation at numeric alphabets; they are stable in the number of
/// variables.
struct MonomialCoeff {
    Partition mu;
    std::vector<mpq_class> poly;  // coefficient of t^j at index j
};
std::vector<MonomialCoeff> p_monomial_coeffs(const Partition& la);

/// m_mu evaluated at the infinite alphabet {q^{a+n b} : 0 <= a < L, b >= 0},
/// truncated at the given order: all alphabet elements with exponent <= order
/// participate, which is sufficient since any omitted variable only enters
/// monomials of exponent > order.
Series monomial_sym_geometric(const Partition& mu, int L, int n, Exponent order);

/// Definition-based oracle for P'_lambda(1, q, ..., q^{L-1}; q^n) as a
/// series: sum_mu c_{lambda,mu}(q^n) m_mu({q^{a+n b}}).  Uses the fact that
/// phi_{q^n}(p_r)(1,...,q^{L-1}) equals p_r of the infinite alphabet above.
Series p_prime_oracle(const Partition& la, int L, int n, Exponent order);

}  // namespace qrr
