#include "qrr/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "qrr/errors.hpp"
#include "qrr/factor_bag.hpp"

namespace qrr {
namespace {

std::int64_t binom2i(std::int64_t r) { return r * (r - 1) / 2; }

using Fn = std::function<std::int64_t(std::int64_t)>;

/// Per-coordinate box for a sum whose term min-exponent satisfies
///   min-exp(r) >= sum_i h_i(r_i) - c0,
/// where each h_i has a proven monotone quadratic lower envelope env_i
/// (env_i(r) <= h_i(r), env_i increasing in |r| past its vertex, -> +inf).
/// The box contains every r_i with h_i(r_i) <= order + c0 + slack from the
/// other coordinates' possible negative minima.
struct BoxResult {
    std::vector<std::int64_t> lo, hi;
};
BoxResult certified_box(const std::vector<Fn>& h, const std::vector<Fn>& env,
                        std::int64_t order_s, std::int64_t c0, bool nonneg_tail,
                        int p) {
    const int n = static_cast<int>(h.size());
    const std::int64_t kCap = 100000;
    auto scan = [&](int i, std::int64_t bound, std::int64_t dir) {
        // largest |r| in direction dir with h_i(r) <= bound; certified stop
        // when the envelope exceeds bound (no later r can re-enter).
        std::int64_t best = 0, prev_env = env[i](0);
        for (std::int64_t t = 0;; ++t) {
            if (t > kCap) throw UncertifiedSpec("lattice box radius exceeds cap");
            std::int64_t r = dir * t;
            std::int64_t e = env[i](r);
            // A parabola that has started increasing keeps increasing, so
            // once env exceeds the bound on its increasing branch no later r
            // can re-enter.
            if (h[i](r) <= bound) best = t;
            if (e > bound && e >= prev_env && h[i](r) > bound) break;
            prev_env = e;
        }
        return best;
    };
    // Pass 1: certified global minimum of each h_i.
    std::vector<std::int64_t> hmin(n);
    for (int i = 0; i < n; ++i) {
        std::int64_t m = h[i](0);
        for (std::int64_t dir : {std::int64_t(1), std::int64_t(-1)}) {
            if (dir < 0 && nonneg_tail && i >= p) continue;
            std::int64_t prev_env = env[i](0);
            for (std::int64_t t = 1;; ++t) {
                if (t > kCap) throw UncertifiedSpec("lattice box: unbounded minimum");
                std::int64_t r = dir * t;
                m = std::min(m, h[i](r));
                std::int64_t e = env[i](r);
                if (e > m && e >= prev_env) break;
                prev_env = e;
            }
        }
        hmin[i] = m;
    }
    BoxResult box;
    box.lo.assign(n, 0);
    box.hi.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        std::int64_t slack = order_s + c0;
        for (int j = 0; j < n; ++j)
            if (j != i) slack -= std::min<std::int64_t>(0, hmin[j]);
        box.hi[i] = scan(i, slack, +1);
        box.lo[i] = (nonneg_tail && i >= p) ? 0 : -scan(i, slack, -1);
    }
    return box;
}

void mul_delta(FactorBag& bag, WeylType t, const std::vector<SignedAtom>& y,
               std::int64_t mult) {
    const int n = static_cast<int>(y.size());
    for (int i = 0; i < n; ++i) {
        if (t == WeylType::B) bag.mul_factor(y[i], mult);
        if (t == WeylType::C) bag.mul_factor(y[i] * y[i], mult);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bag.mul_difference(y[i], y[j], mult);
            // y_i y_j - 1 = -(1 - y_i y_j)
            bag.mul_factor(y[i] * y[j], mult);
            if (mult % 2 != 0) bag.mul_scalar(-1);
        }
}

void enumerate_box(const BoxResult& box, std::vector<std::int64_t>& r, int i,
                   const std::function<void()>& visit) {
    if (i == static_cast<int>(r.size())) {
        visit();
        return;
    }
    for (std::int64_t v = box.lo[i]; v <= box.hi[i]; ++v) {
        r[i] = v;
        enumerate_box(box, r, i + 1, visit);
    }
}

}  // namespace

Series lattice_theta_sum(const LatticeThetaSpec& spec, Exponent order) {
    const int n = spec.n;
    if (static_cast<int>(spec.x.size()) != n || static_cast<int>(spec.e.size()) != n)
        throw BadParams("lattice_theta_sum: x and e must have length n");
    const std::int64_t fs = spec.f.steps(), gs = spec.g.steps(), hs = spec.h.steps();
    const std::int64_t cs = spec.c.steps();
    if (2 * fs + gs <= 0)
        throw UncertifiedSpec("lattice_theta_sum: quadratic certificate 2f+g > 0 fails");

    // Weyl factors contribute at least min(0, exponent) each; exponents are
    // sums of at most two atom exponents plus c r terms.  Per coordinate the
    // loss is at most 2n|c||r|; constants accumulate in c0.
    std::int64_t maxe = 0;
    for (const auto& a : spec.x) maxe = std::max<std::int64_t>(maxe, std::llabs(a.exp.steps()));
    std::int64_t nfac = n * (n - 1) + (spec.weyl_type == WeylType::D ? 0 : n);
    std::int64_t c0 = nfac * 2 * maxe;
    for (int i = 0; i < n; ++i) c0 += std::llabs(spec.e[i] * spec.x[i].exp.steps());

    std::vector<Fn> h(n), env(n);
    for (int i = 0; i < n; ++i) {
        std::int64_t mono = spec.d * spec.x[i].exp.steps();
        std::int64_t cross = 2 * static_cast<std::int64_t>(n) * std::llabs(cs);
        std::int64_t lin = std::llabs(hs) + std::llabs(gs) / 2 + 1 +
                           std::llabs(mono) + cross;
        h[i] = [=](std::int64_t r) {
            return fs * r * r + gs * binom2i(r) + hs * r + mono * r -
                   cross * std::llabs(r);
        };
        env[i] = [=](std::int64_t r) {
            std::int64_t t = std::llabs(r);
            return ((2 * fs + gs) * t * t) / 2 - lin * t - 1;
        };
    }
    BoxResult box = certified_box(h, env, order.steps(), c0, false, 0);

    Series total = Series::zero(order);
    std::vector<std::int64_t> r(n);
    enumerate_box(box, r, 0, [&]() {
        FactorBag bag;
        std::vector<SignedAtom> y(n);
        std::int64_t rsum = 0;
        for (int i = 0; i < n; ++i) {
            y[i] = spec.x[i] * SignedAtom::q_pow(r[i] * spec.c);
            rsum += r[i];
            bag.mul_monomial(spec.x[i], spec.d * r[i] + spec.e[i]);
            Exponent qe = (r[i] * r[i]) * spec.f + binom2i(r[i]) * spec.g + r[i] * spec.h;
            bag.mul_monomial(SignedAtom::q_pow(qe), 1);
        }
        if (spec.sign_flag && rsum % 2 != 0) bag.mul_scalar(-1);
        mul_delta(bag, spec.weyl_type, y, 1);
        if (bag.is_zero()) return;
        if (bag.min_exponent() > order) return;
        total.accumulate(bag.to_series(order));
    });
    return total;
}

Series L_sum(int p, int m, const AlphabetSpec& alpha, Exponent order) {
    const int n = static_cast<int>(alpha.vars.size());
    if (p < 0 || p > n) throw BadParams("L_sum: 0 <= p <= n");
    if (m < 1) throw BadParams("L_sum: m >= 1");
    const Exponent b = alpha.base;
    const std::int64_t bs = b.steps();
    if (bs <= 0) throw BadParams("L_sum: base > 0");
    const auto& x = alpha.vars;

    // Denominator factors only raise the min exponent, so the only negative
    // contributions are: Delta_C(x q^r) (linear in r), monomials (linear),
    // and the Pochhammer pairs (x_i x_j)_{r_i} / (q^b x_i / x_j)_{r_i} whose
    // dip is bounded for r_i > 0 and exactly quadratic of coefficient
    // (n - p) b / 2 for r_i < 0 (the denominator pair flips to numerator
    // factors of ever more negative exponent).  The net quadratic
    // coefficient per coordinate is >= (m + 1 + p) b > 0.
    std::int64_t maxe = 0;
    for (const auto& a : x) maxe = std::max<std::int64_t>(maxe, std::llabs(a.exp.steps()));
    std::int64_t nfac = 2 * n * n;
    std::int64_t c0 = nfac * 2 * maxe;

    auto pair_dip = [&](int i, std::int64_t r) {
        std::int64_t dip = 0;
        for (int j = p; j < n; ++j) {
            std::int64_t en = x[i].exp.steps() + x[j].exp.steps();
            std::int64_t ed = bs + x[i].exp.steps() - x[j].exp.steps();
            if (r > 0) {
                for (std::int64_t l = 0; l < r; ++l) {
                    std::int64_t e = en + l * bs;
                    if (e >= 0) break;
                    dip += e;
                }
            } else {
                for (std::int64_t l = 1; l <= -r; ++l)
                    dip += std::min<std::int64_t>(0, ed - l * bs);
            }
        }
        return dip;
    };

    std::vector<Fn> h(n), env(n);
    std::int64_t emax = bs + 2 * maxe;  // bound on |en|, |ed| above
    std::int64_t anet2 = bs * 2 * (m + 1 + p);  // 2 * net quadratic coeff
    for (int i = 0; i < n; ++i) {
        std::int64_t mono = 2 * (m + p + 1) * x[i].exp.steps();
        std::int64_t sgnmono = (n - p) * 2 * maxe;
        std::int64_t cross = 2 * static_cast<std::int64_t>(n) * bs;
        std::int64_t dipconst = 0;  // positive-r dip bound, exact and finite
        for (int j = p; j < n; ++j) {
            std::int64_t en = x[i].exp.steps() + x[j].exp.steps();
            for (std::int64_t l = 0; en + l * bs < 0; ++l) dipconst += -(en + l * bs);
        }
        std::int64_t lin = std::llabs(mono) + sgnmono + cross +
                           (static_cast<std::int64_t>(n) * bs) / 2 + emax + bs;
        h[i] = [=](std::int64_t r) {
            std::int64_t quad = bs * ((m + 1) * r * r + (n + p) * binom2i(r));
            return quad + mono * r - sgnmono * std::llabs(r) -
                   cross * std::llabs(r) + pair_dip(i, r);
        };
        env[i] = [=](std::int64_t r) {
            std::int64_t t = std::llabs(r);
            return (anet2 * t * t) / 2 - ((n - p) * emax + lin) * t - dipconst - 1;
        };
    }
    BoxResult box = certified_box(h, env, order.steps(), c0, true, p);

    FactorBag den_check;
    mul_delta(den_check, WeylType::C, x, 1);
    if (den_check.is_zero()) throw BadParams("L_sum: Delta_C(x) vanishes");

    Series total = Series::zero(order);
    std::vector<std::int64_t> r(n);
    enumerate_box(box, r, 0, [&]() {
        FactorBag bag;
        std::vector<SignedAtom> y(n);
        for (int i = 0; i < n; ++i) y[i] = x[i] * SignedAtom::q_pow(r[i] * b);
        mul_delta(bag, WeylType::C, y, 1);
        if (bag.is_zero()) return;
        for (int i = 0; i < n; ++i) {
            bag.mul_monomial(x[i], 2 * (m + p + 1) * r[i]);
            Exponent qe = (r[i] * r[i]) * ((m + 1) * b) + binom2i(r[i]) * ((n + p) * b);
            bag.mul_monomial(SignedAtom::q_pow(qe), 1);
            for (int j = p; j < n; ++j) {
                SignedAtom xj_inv{x[j].sign, -x[j].exp};
                SignedAtom neg_ratio = SignedAtom{-1, Exponent()} * x[i] * xj_inv;
                bag.mul_monomial(neg_ratio, r[i]);
                bag.mul_poch(x[i] * x[j], b, r[i], 1);
                bag.mul_poch(SignedAtom::q_pow(b) * x[i] * xj_inv, b, r[i], -1);
            }
        }
        mul_delta(bag, WeylType::C, x, -1);  // divide by Delta_C(x)
        if (bag.is_zero()) return;
        if (bag.min_exponent() > order) return;
        total.accumulate(bag.to_series(order));
    });
    return total;
}

}  // namespace qrr
