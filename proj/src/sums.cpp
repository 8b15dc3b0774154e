#include "qrr/sums.hpp"

#include <functional>

#include "qrr/errors.hpp"
#include "qrr/factor_bag.hpp"
#include "qrr/qfuncs.hpp"

namespace qrr {
namespace {

Exponent I(std::int64_t v) { return Exponent::integer(v); }

std::int64_t binom2i(std::int64_t r) { return r * (r - 1) / 2; }

}  // namespace

Series ag_multisum(int m, int i, Exponent order) {
    if (m < 1 || i < 1 || i > m + 1) throw BadParams("ag_multisum: 1 <= i <= m+1");
    Series total = Series::zero(order);
    std::vector<std::int64_t> r(m + 1, 0);  // r[1..m]; r[0] unbounded sentinel
    // weight of a chain prefix r_1 >= ... >= r_k is at least sum r_j^2.
    std::function<void(int, std::int64_t, FactorBag)> rec = [&](int k,
                                                                std::int64_t quad,
                                                                FactorBag bag) {
        if (k > m) {
            bag.mul_poch(SignedAtom::q_pow(I(1)), I(1), r[m], -1);  // 1/(q)_{r_m}
            total.accumulate(bag.to_series(order));
            return;
        }
        std::int64_t cap = (k == 1) ? order.to_integer() + 1 : r[k - 1];
        for (std::int64_t v = 0; v <= cap; ++v) {
            std::int64_t add = v * v + (k >= i ? v : 0);
            if (I(quad + add) > order) break;
            r[k] = v;
            FactorBag b2 = bag;
            b2.mul_monomial(SignedAtom::q_pow(I(add)), 1);
            if (k > 1)  // 1/(q)_{r_{k-1} - r_k}
                b2.mul_poch(SignedAtom::q_pow(I(1)), I(1), r[k - 1] - v, -1);
            rec(k + 1, quad + add, std::move(b2));
        }
    };
    rec(1, 0, FactorBag());
    return total;
}

Series q2r_multisum(int r0, int n, int delta, Exponent order) {
    if (r0 < 0 || n < 1 || delta < 0 || delta > 1)
        throw BadParams("q2r_multisum: r >= 0, n >= 1, delta in {0,1}");
    Series total = Series::zero(order);
    std::vector<std::int64_t> r(n + 1);
    r[0] = r0;
    std::function<void(int, std::int64_t, FactorBag)> rec = [&](int k,
                                                                std::int64_t wt,
                                                                FactorBag bag) {
        if (k > n) {
            bag.mul_poch(SignedAtom::q_pow(I(2 - delta)), I(2 - delta), r[n], -1);
            total.accumulate(bag.to_series(order));
            return;
        }
        for (std::int64_t v = 0; v <= r[k - 1]; ++v) {
            std::int64_t add = v * v + v;
            if (I(wt + add) > order) break;
            r[k] = v;
            FactorBag b2 = bag;
            b2.mul_monomial(SignedAtom::q_pow(I(add)), 1);
            b2.mul_poch(SignedAtom::q_pow(I(1)), I(1), r[k - 1] - v, -1);
            rec(k + 1, wt + add, std::move(b2));
        }
    };
    FactorBag seed;
    seed.mul_monomial(SignedAtom::q_pow(I(static_cast<std::int64_t>(r0) * r0 - r0)), 1);
    if (I(static_cast<std::int64_t>(r0) * r0 - r0) > order) return total;
    rec(1, r0 * static_cast<std::int64_t>(r0) - r0, std::move(seed));
    return total;
}

Series bressoud_multisum(int n, int delta, Exponent order) {
    if (n < 1 || delta < 0 || delta > 1)
        throw BadParams("bressoud_multisum: n >= 1, delta in {0,1}");
    Series total = Series::zero(order);
    std::vector<std::int64_t> r(n + 1, 0);
    std::function<void(int, std::int64_t, FactorBag)> rec = [&](int k,
                                                                std::int64_t wt,
                                                                FactorBag bag) {
        if (k > n) {
            bag.mul_poch(SignedAtom::q_pow(I(2 - delta)), I(2 - delta), r[n], -1);
            total.accumulate(bag.to_series(order));
            return;
        }
        std::int64_t cap = (k == 1) ? order.to_integer() + 1 : r[k - 1];
        for (std::int64_t v = 0; v <= cap; ++v) {
            std::int64_t add = v * v + v;
            if (I(wt + add) > order) break;
            r[k] = v;
            FactorBag b2 = bag;
            b2.mul_monomial(SignedAtom::q_pow(I(add)), 1);
            if (k > 1) b2.mul_poch(SignedAtom::q_pow(I(1)), I(1), r[k - 1] - v, -1);
            rec(k + 1, wt + add, std::move(b2));
        }
    };
    rec(1, 0, FactorBag());
    return total;
}

Series m1_multisum(int n, int sigma, Exponent order) {
    if (n < 1 || sigma < 0 || sigma > 1)
        throw BadParams("m1_multisum: n >= 1, sigma in {0,1}");
    Series total = Series::zero(order);
    const std::int64_t ord = order.to_integer();
    std::vector<std::int64_t> r(n + 1, 0), s(n + 1, 0);
    std::function<void(int, std::int64_t, FactorBag)> rec = [&](int j,
                                                                std::int64_t wt,
                                                                FactorBag bag) {
        if (j > n) {
            if (r[n] == 0 && s[n] == 0) total.accumulate(bag.to_series(order));
            return;
        }
        std::int64_t rcap = (j == n) ? 0 : r[j - 1];
        for (std::int64_t rv = 0; rv <= rcap; ++rv) {
            std::int64_t scap = std::min((j == n) ? 0 : s[j - 1], rv);
            for (std::int64_t sv = 0; sv <= scap; ++sv) {
                // constraints: r_{j-1} >= r_j >= s_j, s_{j-1} >= s_j
                std::int64_t add = rv + sv +
                                   static_cast<std::int64_t>(n) * binom2i(r[j - 1] - rv) +
                                   static_cast<std::int64_t>(n) * binom2i(s[j - 1] - sv);
                if (wt + add > ord) continue;
                r[j] = rv;
                s[j] = sv;
                FactorBag b2 = bag;
                b2.mul_monomial(SignedAtom::q_pow(I(add)), 1);
                // [r_{j-1}-s_j choose r_{j-1}-r_j]_{q^n} [s_{j-1} choose s_j]_{q^n}
                std::int64_t top1 = r[j - 1] - sv, bot1 = r[j - 1] - rv;
                b2.mul_poch(SignedAtom::q_pow(I(n)), I(n), top1, 1);
                b2.mul_poch(SignedAtom::q_pow(I(n)), I(n), bot1, -1);
                b2.mul_poch(SignedAtom::q_pow(I(n)), I(n), top1 - bot1, -1);
                b2.mul_poch(SignedAtom::q_pow(I(n)), I(n), s[j - 1], 1);
                b2.mul_poch(SignedAtom::q_pow(I(n)), I(n), sv, -1);
                b2.mul_poch(SignedAtom::q_pow(I(n)), I(n), s[j - 1] - sv, -1);
                rec(j + 1, wt + add, std::move(b2));
            }
        }
    };
    for (std::int64_t r0 = 0; (sigma + 1) * r0 <= ord; ++r0) {
        r[0] = s[0] = r0;
        FactorBag seed;
        seed.mul_monomial(SignedAtom::q_pow(I((sigma + 1) * r0)), 1);
        seed.mul_poch(SignedAtom::q_pow(I(n)), I(n), r0, -1);
        rec(1, (sigma + 1) * r0, std::move(seed));
    }
    return total;
}

std::pair<Series, Series> rogers_selberg_check(int j, Exponent order) {
    if (j < 0) throw BadParams("rogers_selberg_check: j >= 0");
    Series lhs = Series::zero(order);
    for (std::int64_t r = 0; I(r * r + j * r) <= order; ++r) {
        Series t = poch_inv_cached(r, I(1), order);
        lhs.accumulate(t.shifted(I(r * r + j * r)).truncated(order));
    }
    Series sum = Series::zero(order);
    for (std::int64_t r = 0; I(5 * binom2i(r) + 2 * r + 2 * j * r) <= order; ++r) {
        FactorBag bag;
        if (r % 2 != 0) bag.mul_scalar(-1);
        bag.mul_monomial(SignedAtom::q_pow(I(5 * binom2i(r) + 2 * r + 2 * j * r)), 1);
        if (r >= 1) {
            bag.mul_factor(SignedAtom::q_pow(I(j + 2 * r)), 1);     // 1 - q^{j+2r}
            bag.mul_poch(SignedAtom::q_pow(I(j + 1)), I(1), r - 1, 1);
            bag.mul_poch(SignedAtom::q_pow(I(1)), I(1), r, -1);
        }
        sum.accumulate(bag.to_series(order));
    }
    Series rhs = sum * poch_inf(SignedAtom::q_pow(I(j + 1)), I(1), order).inverted();
    return {lhs, rhs.truncated(order)};
}

namespace {

// (a; q)_k at exact rational a, q.
mpq_class poch_q(const mpq_class& a, const mpq_class& q, int k) {
    mpq_class v = 1, t = a;
    for (int l = 0; l < k; ++l) {
        v *= 1 - t;
        t *= q;
    }
    return v;
}

mpq_class qpow(const mpq_class& q, int e) {
    mpq_class v = 1;
    for (int l = 0; l < (e >= 0 ? e : -e); ++l) v *= q;
    if (e < 0) {
        if (v == 0) throw PoleEncountered("watson_check: q = 0 with negative power");
        v = 1 / v;
    }
    return v;
}

}  // namespace

std::pair<mpq_class, mpq_class> watson_check(const WatsonParams& p) {
    const auto &a = p.a, &b = p.b, &c = p.c, &d = p.d, &e = p.e, &q = p.q;
    const int N = p.N;
    if (N < 0) throw BadParams("watson_check: N >= 0");
    auto div = [](const mpq_class& num, const mpq_class& den, const char* who) {
        if (den == 0) throw PoleEncountered(std::string("watson_check: ") + who);
        return num / den;
    };
    if (b == 0 || c == 0 || d == 0 || e == 0 || q == 0)
        throw PoleEncountered("watson_check: zero parameter");
    mpq_class qN = qpow(q, -N);

    // LHS prefactor (aq, aq/bc)_N / (aq/b, aq/c)_N.
    mpq_class pref = div(poch_q(a * q, q, N) * poch_q(div(a * q, b * c, "bc"), q, N),
                         poch_q(div(a * q, b, "b"), q, N) *
                             poch_q(div(a * q, c, "c"), q, N),
                         "(aq/b, aq/c)_N");
    mpq_class lhs = 0;
    for (int r = 0; r <= N; ++r) {
        mpq_class num = poch_q(b, q, r) * poch_q(c, q, r) *
                        poch_q(div(a * q, d * e, "de"), q, r) * poch_q(qN, q, r);
        mpq_class den = poch_q(q, q, r) * poch_q(div(a * q, d, "d"), q, r) *
                        poch_q(div(a * q, e, "e"), q, r) *
                        poch_q(div(b * c * qN, a, "a"), q, r);
        lhs += div(num, den, "LHS denominator") * qpow(q, r);
    }
    lhs *= pref;

    mpq_class rhs = 0;
    if (a == 1) throw PoleEncountered("watson_check: a = 1 (1 - a vanishes)");
    mpq_class z = div(a * a * qpow(q, N + 2), b * c * d * e, "bcde");
    mpq_class zr = 1;
    for (int r = 0; r <= N; ++r) {
        mpq_class num = (1 - a * qpow(q, 2 * r)) * poch_q(a, q, r) * poch_q(b, q, r) *
                        poch_q(c, q, r) * poch_q(d, q, r) * poch_q(e, q, r) *
                        poch_q(qN, q, r);
        mpq_class den = (1 - a) * poch_q(q, q, r) * poch_q(div(a * q, b, "b"), q, r) *
                        poch_q(div(a * q, c, "c"), q, r) *
                        poch_q(div(a * q, d, "d"), q, r) *
                        poch_q(div(a * q, e, "e"), q, r) *
                        poch_q(a * qpow(q, N + 1), q, r);
        rhs += div(num, den, "RHS denominator") * zr;
        zr *= z;
    }
    return {lhs, rhs};
}

std::pair<mpq_class, mpq_class> weyl_denominator_check(WeylType type,
                                                       const std::vector<mpq_class>& x) {
    const int n = static_cast<int>(x.size());
    auto ipow = [](const mpq_class& v, int e) {
        mpq_class r = 1;
        for (int l = 0; l < e; ++l) r *= v;
        return r;
    };
    std::vector<std::vector<mpq_class>> M(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (type == WeylType::C)
                M[i][j] = ipow(x[i], j) - ipow(x[i], 2 * n - j);  // j-1 -> j (0-based)
            else if (type == WeylType::B)
                M[i][j] = ipow(x[i], j) - ipow(x[i], 2 * n - 1 - j);
            else
                M[i][j] = ipow(x[i], j) + ipow(x[i], 2 * n - 2 - j);
        }
    // determinant by fraction-free-ish Gaussian elimination over mpq
    mpq_class det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (M[row][col] != 0) { piv = row; break; }
        if (piv < 0) { det = 0; break; }
        if (piv != col) { std::swap(M[piv], M[col]); det = -det; }
        det *= M[col][col];
        mpq_class inv = 1 / M[col][col];
        for (int row = col + 1; row < n; ++row) {
            mpq_class f = M[row][col] * inv;
            for (int cc = col; cc < n; ++cc) M[row][cc] -= f * M[col][cc];
        }
    }
    if (type == WeylType::D) det /= 2;

    mpq_class prod = 1;
    for (int i = 0; i < n; ++i) {
        if (type == WeylType::B) prod *= 1 - x[i];
        if (type == WeylType::C) prod *= 1 - x[i] * x[i];
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            prod *= (x[i] - x[j]) * (x[i] * x[j] - 1);
    return {det, prod};
}

std::pair<Series, Series> triple_product_check(SignedAtom a, Exponent base,
                                               Exponent order) {
    Series lhs = triple_product_sum(a, base, order);
    Series rhs = poch_inf(SignedAtom::q_pow(base), base, order) * theta(a, base, order);
    return {lhs, rhs.truncated(order)};
}

}  // namespace qrr
