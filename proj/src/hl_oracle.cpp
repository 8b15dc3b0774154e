#include "qrr/hl_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

#include "qrr/errors.hpp"

namespace qrr {
namespace {

using Poly = std::vector<mpq_class>;  // coefficient of t^j at index j

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

void poly_add_scaled(Poly& a, const Poly& b, const mpq_class& c) {
    if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
    for (std::size_t j = 0; j < b.size(); ++j) a[j] += c * b[j];
}

/// Exact division a / b; throws if the division leaves a remainder.
Poly poly_div_exact(Poly a, const Poly& b) {
    poly_trim(a);
    if (a.empty()) return {};
    if (b.empty() || b.back() == 0) throw Error("poly_div_exact: zero divisor");
    if (a.size() < b.size()) throw Error("poly_div_exact: not divisible");
    Poly q(a.size() - b.size() + 1, mpq_class(0));
    for (std::int64_t d = static_cast<std::int64_t>(q.size()) - 1; d >= 0; --d) {
        mpq_class c = a[d + b.size() - 1] / b.back();
        q[d] = c;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j) a[d + j] -= c * b[j];
    }
    for (const auto& c : a)
        if (c != 0) throw Error("poly_div_exact: nonzero remainder");
    poly_trim(q);
    return q;
}

mpq_class poly_eval(const Poly& p, const mpq_class& t) {
    mpq_class v(0);
    for (std::int64_t j = static_cast<std::int64_t>(p.size()) - 1; j >= 0; --j)
        v = v * t + p[j];
    return v;
}

/// v_lambda(t) = prod_{i >= 0} [m_i]_t!  with m_0 = N - l(lambda),
/// [m]_t! = prod_{k=1}^{m} (1 + t + ... + t^{k-1}), as a polynomial in t.
Poly v_lambda_poly(const Partition& la, int N) {
    Poly v{mpq_class(1)};
    auto bracket_factorial = [&](int m) {
        for (int k = 2; k <= m; ++k) {
            Poly g(k, mpq_class(1));  // 1 + t + ... + t^{k-1}
            v = poly_mul(v, g);
        }
    };
    bracket_factorial(N - la.length());
    for (int i = 1; i <= la.largest(); ++i) bracket_factorial(la.multiplicity(i));
    return v;
}

/// sum over S_N of  prod_i x_{w(i)}^{la_i} prod_{i<j} (x_{w(i)} - t x_{w(j)})
/// / (x_{w(i)} - x_{w(j)}),  as a polynomial in t with rational coefficients.
Poly symmetrise_poly(const Partition& la, const std::vector<mpq_class>& x) {
    const int N = static_cast<int>(x.size());
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            if (x[i] == x[j]) throw RepeatedVariable("symmetrise at x_i == x_j");
    std::vector<int> w(N);
    std::iota(w.begin(), w.end(), 0);
    Poly total;
    do {
        mpq_class mono(1);
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < la.part(i + 1); ++k) mono *= x[w[i]];
        mpq_class den(1);
        Poly num{mpq_class(1)};
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                den *= x[w[i]] - x[w[j]];
                num = poly_mul(num, Poly{x[w[i]], -x[w[j]]});
            }
        poly_add_scaled(total, num, mono / den);
    } while (std::next_permutation(w.begin(), w.end()));
    poly_trim(total);
    return total;
}

/// m_mu at a numeric alphabet of N distinct values.
mpq_class m_mu_numeric(const Partition& mu, const std::vector<mpq_class>& x) {
    const int N = static_cast<int>(x.size());
    if (mu.length() > N) return 0;
    std::vector<int> e(N, 0);
    for (int i = 0; i < mu.length(); ++i) e[i] = mu.parts()[i];
    std::sort(e.begin(), e.end());
    mpq_class total(0);
    do {
        mpq_class mono(1);
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < e[i]; ++k) mono *= x[i];
        total += mono;
    } while (std::next_permutation(e.begin(), e.end()));
    return total;
}

}  // namespace

mpq_class hl_p_oracle(const Partition& la, const std::vector<mpq_class>& x,
                      const mpq_class& t) {
    const int N = static_cast<int>(x.size());
    if (N > 7) throw BadParams("hl_p_oracle: at most 7 variables");
    if (la.length() > N) return 0;
    Poly sym = symmetrise_poly(la, x);
    mpq_class vden = poly_eval(v_lambda_poly(la, N), t);
    if (vden == 0) throw PoleEncountered("hl_p_oracle: v_lambda(t) = 0");
    return poly_eval(sym, t) / vden;
}

std::vector<MonomialCoeff> p_monomial_coeffs(const Partition& la) {
    const std::int64_t n = la.size();
    if (n == 0) return {{Partition{}, Poly{mpq_class(1)}}};
    const int N = static_cast<int>(n);
    if (N > 7) throw BadParams("p_monomial_coeffs: |lambda| at most 7");

    std::vector<Partition> mus;
    for (const auto& mu : enumerate_partitions(static_cast<int>(n), n))
        if (mu.size() == n) mus.push_back(mu);
    const int K = static_cast<int>(mus.size());
    const Poly vla = v_lambda_poly(la, N);

    // Rows: exact evaluations of P_lambda at geometric sample alphabets
    // x_j = b^j; augmented columns carry the t-degree slices of P_lambda.
    std::vector<std::vector<mpq_class>> M;      // K x K once independent rows found
    std::vector<Poly> rhs;                      // matching P_lambda polys
    std::size_t deg = 1;
    for (int base = 2; static_cast<int>(M.size()) < K; ++base) {
        if (base > 6 * K + 8) throw Error("p_monomial_coeffs: sample points exhausted");
        std::vector<mpq_class> x(N);
        mpq_class v(1);
        for (int j = 0; j < N; ++j) { x[j] = v; v *= base; }
        std::vector<mpq_class> row(K);
        for (int c = 0; c < K; ++c) row[c] = m_mu_numeric(mus[c], x);
        Poly p = poly_div_exact(symmetrise_poly(la, x), vla);
        deg = std::max(deg, p.size());
        // Gaussian independence test against rows already kept.
        std::vector<std::vector<mpq_class>> trial = M;
        trial.push_back(row);
        int rank = 0;
        std::vector<std::vector<mpq_class>> R = trial;
        for (int c = 0; c < K && rank < static_cast<int>(R.size()); ++c) {
            int piv = -1;
            for (int r = rank; r < static_cast<int>(R.size()); ++r)
                if (R[r][c] != 0) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(R[rank], R[piv]);
            for (int r = 0; r < static_cast<int>(R.size()); ++r)
                if (r != rank && R[r][c] != 0) {
                    mpq_class f = R[r][c] / R[rank][c];
                    for (int cc = c; cc < K; ++cc) R[r][cc] -= f * R[rank][cc];
                }
            ++rank;
        }
        if (rank == static_cast<int>(trial.size())) {
            M.push_back(std::move(row));
            rhs.push_back(std::move(p));
        }
    }

    // Solve M c = rhs for every t-degree at once (augmented elimination).
    std::vector<std::vector<mpq_class>> A(K, std::vector<mpq_class>(K + deg, mpq_class(0)));
    for (int r = 0; r < K; ++r) {
        for (int c = 0; c < K; ++c) A[r][c] = M[r][c];
        for (std::size_t d = 0; d < rhs[r].size(); ++d) A[r][K + d] = rhs[r][d];
    }
    for (int c = 0; c < K; ++c) {
        int piv = -1;
        for (int r = c; r < K; ++r)
            if (A[r][c] != 0) { piv = r; break; }
        if (piv < 0) throw Error("p_monomial_coeffs: singular system");
        std::swap(A[c], A[piv]);
        mpq_class inv = 1 / A[c][c];
        for (int cc = c; cc < K + static_cast<int>(deg); ++cc) A[c][cc] *= inv;
        for (int r = 0; r < K; ++r)
            if (r != c && A[r][c] != 0) {
                mpq_class f = A[r][c];
                for (int cc = c; cc < K + static_cast<int>(deg); ++cc)
                    A[r][cc] -= f * A[c][cc];
            }
    }

    std::vector<MonomialCoeff> out;
    for (int r = 0; r < K; ++r) {
        Poly p(A[r].begin() + K, A[r].end());
        poly_trim(p);
        if (!p.empty()) out.push_back({mus[r], std::move(p)});
    }
    return out;
}

Series monomial_sym_geometric(const Partition& mu, int L, int n, Exponent order) {
    if (L < 1 || n < 1) throw BadParams("monomial_sym_geometric: L, n >= 1");
    if (!order.is_integral() || order.to_integer() < 0)
        throw BadParams("monomial_sym_geometric: integral order >= 0");
    const std::int64_t ord = order.to_integer();
    // Alphabet exponents a + n b <= ord, 0 <= a < L, sorted ascending.
    std::vector<std::int64_t> ex;
    for (int a = 0; a < L; ++a)
        for (std::int64_t e = a; e <= ord; e += n) ex.push_back(e);
    std::sort(ex.begin(), ex.end());
    const int P = static_cast<int>(ex.size());

    const auto& parts = mu.parts();
    const int l = mu.length();
    Series out = Series::zero(order);
    if (l == 0) { out.add_at(Exponent::integer(0), 1); return out; }
    if (l > P) return out;

    // Greedy lower bound for the remaining weight: largest remaining parts
    // paired with the globally smallest exponents.
    std::vector<std::int64_t> lb(l + 1, 0);
    for (int j = l - 1; j >= 0; --j) lb[j] = lb[j + 1] + parts[j] * ex[l - 1 - j];

    std::vector<bool> used(P, false);
    std::function<void(int, int, std::int64_t)> dfs = [&](int j, int start,
                                                          std::int64_t acc) {
        if (j == l) {
            out.add_at(Exponent::integer(acc), 1);
            return;
        }
        // Equal parts must take positions in increasing index order.
        int from = (j > 0 && parts[j] == parts[j - 1]) ? start : 0;
        for (int i = from; i < P; ++i) {
            if (used[i]) continue;
            std::int64_t nacc = acc + parts[j] * ex[i];
            // ex ascends and lb does not depend on i, so later i only grow.
            if (nacc + lb[j + 1] > ord) break;
            used[i] = true;
            dfs(j + 1, i + 1, nacc);
            used[i] = false;
        }
    };
    dfs(0, 0, 0);
    return out;
}

Series p_prime_oracle(const Partition& la, int L, int n, Exponent order) {
    Series out = Series::zero(order);
    for (const auto& mc : p_monomial_coeffs(la)) {
        Series cpoly(Exponent::integer(0),
                     order + Exponent::integer(static_cast<std::int64_t>(n) *
                                               static_cast<std::int64_t>(mc.poly.size())));
        for (std::size_t d = 0; d < mc.poly.size(); ++d)
            if (mc.poly[d] != 0)
                cpoly.add_at(Exponent::integer(n * static_cast<std::int64_t>(d)),
                             mc.poly[d]);
        cpoly.mark_exact();
        Series m = monomial_sym_geometric(mc.mu, L, n, order);
        out.accumulate((m * cpoly).truncated(order));
    }
    return out;
}

}  // namespace qrr
