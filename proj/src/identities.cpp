#include "qrr/identities.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "qrr/errors.hpp"
#include "qrr/hall_littlewood.hpp"
#include "qrr/lattice.hpp"
#include "qrr/partitions.hpp"
#include "qrr/products.hpp"
#include "qrr/qfuncs.hpp"
#include "qrr/sums.hpp"

namespace qrr {

namespace {

Exponent I(std::int64_t v) { return Exponent::integer(v); }
Exponent H(std::int64_t v) { return Exponent::half(v); }

void require(bool ok, const char* what) {
    if (!ok) throw BadParams(what);
}

ProductId pid(const std::string& id, const IdParams& p) {
    return ProductId{.id = id, .m = p.m, .n = p.n, .sigma = p.sigma, .i = p.i,
                     .k = p.k, .kappa_perturb = p.kappa_perturb};
}

/// sum_r q^{r(r+sigma)} / (q)_r.
Series rr_sum(int sigma, Exponent order) {
    Series s = Series::zero(order);
    for (std::int64_t r = 0;; ++r) {
        Exponent e = I(r * (r + sigma));
        if (e > order) break;
        s.accumulate(poch_inv_cached(r, I(1), order).shifted(e).truncated(order));
    }
    return s;
}

/// prod_{1 <= i <= j <= n} 1/(q x_i x_j; q)_inf at q -> q^base: normalisation
/// between the bare lattice series and the chain-transfer sum.
Series l_prefactor(const AlphabetSpec& alpha, Exponent order) {
    Series p = Series::one(order);
    const int n = static_cast<int>(alpha.vars.size());
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            Exponent e = alpha.base + alpha.vars[a].exp + alpha.vars[b].exp;
            int sign = alpha.vars[a].sign * alpha.vars[b].sign;
            SignedAtom at = sign > 0 ? SignedAtom::q_pow(e) : SignedAtom::neg_q_pow(e);
            p = (p * poch_inf(at, alpha.base, order).inverted()).truncated(order);
        }
    return p;
}

using Maker = std::function<std::pair<Series, Series>(const IdParams&, Exponent)>;

struct Row {
    IdentityRow info;
    Maker make;
};

// ---------------------------------------------------------------------------
// Lattice-side helpers for the intermediate identities (generic-variable
// identities evaluated at their principal specialisation points).

Series theta_pref_inverse(ProductForm pf, Exponent order) {
    return pf.to_series(order);
}

std::pair<Series, Series> a2n2_interm(const IdParams& p, Exponent order) {
    require(p.m >= 1 && p.n >= 1, "a2n2-interm: m, n >= 1");
    const int m = p.m, n = p.n;
    const std::int64_t b = 2 * n - 1, kappa = 2 * m + 2 * n + 1;
    // alphabet (x_1^{+-}, ..., x_{n-1}^{+-}, 1) at x_i = q^{(n-i)b'}, q -> q^b.
    AlphabetSpec alpha{{}, I(b)};
    for (int i = 1; i <= n - 1; ++i) {
        alpha.vars.push_back(SignedAtom::q_pow(I(n - i)));
        alpha.vars.push_back(SignedAtom::q_pow(I(-(n - i))));
    }
    alpha.vars.push_back(SignedAtom::q_pow(I(0)));
    Series lhs = sum_side(m, alpha, I(b), order);

    LatticeThetaSpec spec{.weyl_type = WeylType::B, .n = n, .x = {}, .c = I(b),
                          .d = kappa, .e = {}, .f = H(b * kappa),
                          .g = I(0), .h = H(-b * b), .sign_flag = false};
    for (int i = 1; i <= n; ++i) {
        spec.x.push_back(SignedAtom::neg_q_pow(I(n - i)));
        spec.e.push_back(1 - i);
    }
    ProductForm pf;
    pf.mul_poch_inf(+1, I(b), I(b), -n);
    for (int i = 1; i <= n; ++i) {
        pf.mul_theta(-1, I(n - i), I(b), -1);
        pf.mul_theta(+1, I(b + 2 * (n - i)), I(2 * b), -1);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            pf.mul_theta(+1, I(j - i), I(b), -1);          // xh_i / xh_j
            pf.mul_theta(+1, I(2 * n - i - j), I(b), -1);  // xh_i xh_j
        }
    Series rhs = (lattice_theta_sum(spec, order) * theta_pref_inverse(pf, order))
                     .truncated(order);
    return {lhs, rhs};
}

std::pair<Series, Series> a2n2b_interm(const IdParams& p, Exponent order) {
    require(p.m >= 1 && p.n >= 1, "a2n2b-interm: m, n >= 1");
    const int m = p.m, n = p.n;
    const std::int64_t b = 2 * n - 1, kappa = 2 * m + 2 * n + 1;
    // alphabet (q^{1/2}|_{q->q^b}, x_2^{+-}, ..., x_n^{+-}) at x_i = q^{(n-i+1/2)b'}.
    AlphabetSpec alpha{{SignedAtom::q_pow(H(2 * n - 1))}, I(b)};
    for (int i = 2; i <= n; ++i) {
        alpha.vars.push_back(SignedAtom::q_pow(H(2 * (n - i) + 1)));
        alpha.vars.push_back(SignedAtom::q_pow(H(-(2 * (n - i) + 1))));
    }
    Series lhs = sum_side(m, alpha, I(b), order);

    LatticeThetaSpec spec{.weyl_type = WeylType::C, .n = n, .x = {}, .c = I(b),
                          .d = kappa, .e = {}, .f = H(b * kappa),
                          .g = I(0), .h = I(-b * n), .sign_flag = true};
    for (int i = 1; i <= n; ++i) {
        spec.x.push_back(SignedAtom::q_pow(H(2 * (n - i) + 1)));
        spec.e.push_back(1 - i);
    }
    ProductForm pf;
    pf.mul_poch_inf(+1, I(b), I(b), -n);
    for (int i = 1; i <= n; ++i) {
        pf.mul_theta(-1, I(2 * n - i), I(b), -1);        // -q^{b/2} xh_i
        pf.mul_theta(+1, I(2 * (n - i) + 1), I(2 * b), -1);  // xh_i^2 base q^{2b}
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            pf.mul_theta(+1, I(j - i), I(b), -1);
            pf.mul_theta(+1, I(2 * n - i - j + 1), I(b), -1);
        }
    Series rhs = (lattice_theta_sum(spec, order) * theta_pref_inverse(pf, order))
                     .truncated(order);
    return {lhs, rhs};
}

std::pair<Series, Series> dn_interm(const IdParams& p, Exponent order) {
    require(p.m >= 1 && p.n >= 2, "dn-interm: m >= 1, n >= 2");
    const int m = p.m, n = p.n;
    const std::int64_t b = 2 * n - 2, kappa = 2 * m + 2 * n;
    // alphabet (q^{1/2}|_{q->q^b}, x_2^{+-}, ..., x_{n-1}^{+-}, 1).
    AlphabetSpec alpha{{SignedAtom::q_pow(I(n - 1))}, I(b)};
    for (int i = 2; i <= n - 1; ++i) {
        alpha.vars.push_back(SignedAtom::q_pow(I(n - i)));
        alpha.vars.push_back(SignedAtom::q_pow(I(-(n - i))));
    }
    alpha.vars.push_back(SignedAtom::q_pow(I(0)));
    Series lhs = sum_side(m, alpha, I(b), order);

    LatticeThetaSpec spec{.weyl_type = WeylType::B, .n = n, .x = {}, .c = I(b),
                          .d = kappa, .e = {}, .f = H(b * kappa),
                          .g = I(0), .h = H(-b * (2 * n - 1)), .sign_flag = false};
    for (int i = 1; i <= n; ++i) {
        spec.x.push_back(SignedAtom::neg_q_pow(I(n - i)));
        spec.e.push_back(1 - i);
    }
    ProductForm pf;
    pf.mul_poch_inf(+1, I(b), I(b), -(n - 1));
    pf.mul_poch_inf(+1, I(n - 1), I(n - 1), -1);
    for (int i = 1; i <= n; ++i) pf.mul_theta(-1, I(n - i), I(n - 1), -1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            pf.mul_theta(+1, I(j - i), I(b), -1);
            pf.mul_theta(+1, I(2 * n - i - j), I(b), -1);
        }
    Series rhs = (lattice_theta_sum(spec, order) * theta_pref_inverse(pf, order))
                     .truncated(order);
    return {lhs, rhs};
}

std::pair<Series, Series> cnmla0(const IdParams& p, Exponent order) {
    require(p.m >= 1 && p.n >= 1, "cnmla0: m, n >= 1");
    const int m = p.m, n = p.n;
    const std::int64_t b = 2 * n, kappa = 2 * m + 2 * n + 2;
    // alphabet x^{+-} at x_i = q^{(n-i+1/2)b'}, q -> q^{2n}.
    AlphabetSpec alpha{{}, I(b)};
    for (int i = 1; i <= n; ++i) {
        alpha.vars.push_back(SignedAtom::q_pow(H(2 * (n - i) + 1)));
        alpha.vars.push_back(SignedAtom::q_pow(H(-(2 * (n - i) + 1))));
    }
    Series lhs = sum_side(m, alpha, I(b), order);

    LatticeThetaSpec spec{.weyl_type = WeylType::C, .n = n, .x = {}, .c = I(b),
                          .d = kappa, .e = {}, .f = I(n * kappa),
                          .g = I(0), .h = I(-2 * n * n), .sign_flag = false};
    for (int i = 1; i <= n; ++i) {
        spec.x.push_back(SignedAtom::q_pow(H(2 * (n - i) + 1)));
        spec.e.push_back(1 - i);
    }
    ProductForm pf;
    pf.mul_poch_inf(+1, I(b), I(b), -n);
    for (int i = 1; i <= n; ++i)
        pf.mul_theta(+1, I(2 * (n - i) + 1), I(b), -1);  // x_i^2
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            pf.mul_theta(+1, I(j - i), I(b), -1);
            pf.mul_theta(+1, I(2 * n - i - j + 1), I(b), -1);
        }
    Series rhs = (lattice_theta_sum(spec, order) * theta_pref_inverse(pf, order))
                     .truncated(order);
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// Rank-n root-lattice theta evaluations (M series) against their products.

std::pair<Series, Series> m_cn(const IdParams& p, Exponent order) {
    require(p.m >= 1 && p.n >= 1, "m-cn: m, n >= 1");
    const int m = p.m, n = p.n;
    const std::int64_t kappa = 2 * m + 2 * n + 2;
    LatticeThetaSpec spec{.weyl_type = WeylType::C, .n = n, .x = {}, .c = I(2 * n),
                          .d = kappa, .e = {}, .f = I(n * kappa),
                          .g = I(0), .h = I(-2 * n * n), .sign_flag = false};
    for (int i = 1; i <= n; ++i) {
        spec.x.push_back(SignedAtom::q_pow(H(2 * (n - i) + 1)));
        spec.e.push_back(1 - i);
    }
    Series lhs = lattice_theta_sum(spec, order);
    ProductForm pf;
    pf.mul_poch_inf(+1, H(kappa), H(kappa), 1);
    pf.mul_poch_inf(+1, I(kappa), I(kappa), n - 1);
    for (int i = 1; i <= n; ++i) pf.mul_theta(+1, I(i), H(kappa), 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            pf.mul_theta(+1, I(j - i), I(kappa), 1);
            pf.mul_theta(+1, I(i + j), I(kappa), 1);
        }
    return {lhs, pf.to_series(order)};
}

std::pair<Series, Series> m_a2n2(const IdParams& p, Exponent order) {
    require(p.m >= 1 && p.n >= 1, "m-a2n2: m, n >= 1");
    const int m = p.m, n = p.n;
    const std::int64_t b = 2 * n - 1, kappa = 2 * m + 2 * n + 1;
    LatticeThetaSpec spec{.weyl_type = WeylType::B, .n = n, .x = {}, .c = I(b),
                          .d = kappa, .e = {}, .f = H(b * kappa),
                          .g = I(0), .h = H(-b * b), .sign_flag = false};
    for (int i = 1; i <= n; ++i) {
        spec.x.push_back(SignedAtom::neg_q_pow(I(n - i)));
        spec.e.push_back(1 - i);
    }
    Series lhs = lattice_theta_sum(spec, order);
    // 2 (q^kappa)_inf^n prod theta(y_i) prod theta(y_i/y_j, y_i y_j) at
    // y_i = q^{(kappa+1)/2 - i}.
    ProductForm pf;
    pf.mul_poch_inf(+1, I(kappa), I(kappa), n);
    const std::int64_t y0 = (kappa + 1) / 2;
    for (int i = 1; i <= n; ++i) pf.mul_theta(+1, I(y0 - i), I(kappa), 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            pf.mul_theta(+1, I(j - i), I(kappa), 1);
            pf.mul_theta(+1, I(2 * y0 - i - j), I(kappa), 1);
        }
    Series rhs = pf.to_series(order);
    rhs.scale(2);
    return {lhs, rhs.truncated(order)};
}

std::pair<Series, Series> m_a2n2b(const IdParams& p, Exponent order) {
    require(p.m >= 1 && p.n >= 1, "m-a2n2b: m, n >= 1");
    const int m = p.m, n = p.n;
    const std::int64_t b = 2 * n - 1, kappa = 2 * m + 2 * n + 1;
    LatticeThetaSpec spec{.weyl_type = WeylType::C, .n = n, .x = {}, .c = I(b),
                          .d = kappa, .e = {}, .f = H(b * kappa),
                          .g = I(0), .h = I(-b * n), .sign_flag = true};
    for (int i = 1; i <= n; ++i) {
        spec.x.push_back(SignedAtom::q_pow(H(2 * (n - i) + 1)));
        spec.e.push_back(1 - i);
    }
    Series lhs = lattice_theta_sum(spec, order);
    // 2 (q^kappa)_inf^n prod theta(y_i) prod theta(y_i/y_j, y_i y_j),
    // y_i = q^{n-i+1}.
    ProductForm pf;
    pf.mul_poch_inf(+1, I(kappa), I(kappa), n);
    for (int i = 1; i <= n; ++i) pf.mul_theta(+1, I(n - i + 1), I(kappa), 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            pf.mul_theta(+1, I(j - i), I(kappa), 1);
            pf.mul_theta(+1, I(2 * n + 2 - i - j), I(kappa), 1);
        }
    Series rhs = pf.to_series(order);
    rhs.scale(2);
    return {lhs, rhs.truncated(order)};
}

std::pair<Series, Series> m_dn(const IdParams& p, Exponent order) {
    require(p.m >= 1 && p.n >= 2, "m-dn: m >= 1, n >= 2");
    const int m = p.m, n = p.n;
    const std::int64_t b = 2 * n - 2, kappa = 2 * m + 2 * n;
    LatticeThetaSpec spec{.weyl_type = WeylType::B, .n = n, .x = {}, .c = I(b),
                          .d = kappa, .e = {}, .f = I((n - 1) * kappa),
                          .g = I(0), .h = I(-(n - 1) * (2 * n - 1)),
                          .sign_flag = false};
    for (int i = 1; i <= n; ++i) {
        spec.x.push_back(SignedAtom::neg_q_pow(I(n - i)));
        spec.e.push_back(1 - i);
    }
    Series lhs = lattice_theta_sum(spec, order);
    ProductForm pf;
    pf.mul_poch_inf(+1, I(kappa), I(kappa), n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            pf.mul_theta(+1, I(j - i), I(kappa), 1);
            pf.mul_theta(+1, I(kappa + 1 - i - j), I(kappa), 1);
        }
    Series rhs = pf.to_series(order);
    rhs.scale(4);
    return {lhs, rhs.truncated(order)};
}

// ---------------------------------------------------------------------------
// Macdonald-type rank-n theta identities, checked at q -> q^s, x_i = -q^i
// with s = 2n + 3 so that no theta factor on the product side vanishes.

std::pair<Series, Series> mac_row(char which, int n, Exponent order) {
    require(n >= 1, "mac: n >= 1");
    const std::int64_t s = 2 * n + 3;
    std::int64_t dcoef = which == 'd' ? 2 * n : which == 'b' ? 2 * n - 1
                                                             : 2 * (n - 1);
    LatticeThetaSpec spec{.weyl_type = which == 'v' ? WeylType::D : WeylType::B,
                          .n = n, .x = {}, .c = I(s), .d = dcoef, .e = {},
                          .f = I(0), .g = I(s * dcoef),
                          .h = which == 'd' ? H(s) : I(0),
                          .sign_flag = which == 'b'};
    for (int i = 1; i <= n; ++i) {
        spec.x.push_back(SignedAtom::neg_q_pow(I(i)));
        spec.e.push_back(1 - i);
    }
    Series lhs = lattice_theta_sum(spec, order);
    ProductForm pf;
    if (which == 'd') {
        pf.mul_poch_inf(+1, H(s), H(s), 1);
        pf.mul_poch_inf(+1, I(s), I(s), n - 1);
        for (int i = 1; i <= n; ++i) pf.mul_theta(-1, I(i), H(s), 1);
    } else {
        pf.mul_poch_inf(+1, I(s), I(s), n);
        if (which == 'b')
            for (int i = 1; i <= n; ++i) pf.mul_theta(-1, I(i), I(s), 1);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            pf.mul_theta(+1, I(i - j), I(s), 1);  // x_i/x_j, normalised inside
            pf.mul_theta(+1, I(i + j), I(s), 1);  // x_i x_j
        }
    Series rhs = pf.to_series(order);
    if (which != 'd') rhs.scale(2);
    return {lhs, rhs.truncated(order)};
}

// ---------------------------------------------------------------------------

const std::vector<Row>& rows() {
    static const std::vector<Row> table = [] {
        std::vector<Row> t;
        auto add = [&t](std::string id, std::string desc,
                        std::vector<std::string> ps, Maker mk) {
            t.push_back({{std::move(id), std::move(desc), std::move(ps)}, std::move(mk)});
        };

        add("rr", "single-sum modulus-5 identity", {"sigma", "kappa_perturb"},
            [](const IdParams& p, Exponent o) {
                require(p.sigma == 0 || p.sigma == 1, "rr: sigma in {0,1}");
                return std::pair{rr_sum(p.sigma, o), product_side(pid("rr", p), o)};
            });
        add("ag", "multisum family at modulus 2m+3", {"m", "i", "kappa_perturb"},
            [](const IdParams& p, Exponent o) {
                return std::pair{ag_multisum(p.m, p.i, o),
                                 product_side(pid("ag", p), o)};
            });
        add("a2n2-n", "even-indexed sum at base 2n-1, weight 1, n-fold product",
            {"m", "n", "kappa_perturb"}, [](const IdParams& p, Exponent o) {
                require(p.m >= 1 && p.n >= 1, "a2n2-n: m, n >= 1");
                return std::pair{sum_side_geometric(p.m, 2 * p.n - 1, 0, o),
                                 product_side(pid("a2n2a-n", p), o)};
            });
        add("a2n2-m", "even-indexed sum at base 2n-1, weight 1, m-fold product",
            {"m", "n", "kappa_perturb"}, [](const IdParams& p, Exponent o) {
                require(p.m >= 1 && p.n >= 1, "a2n2-m: m, n >= 1");
                return std::pair{sum_side_geometric(p.m, 2 * p.n - 1, 0, o),
                                 product_side(pid("a2n2a-m", p), o)};
            });
        add("a2n2b-n", "even-indexed sum at base 2n-1, weight 2, n-fold product",
            {"m", "n", "kappa_perturb"}, [](const IdParams& p, Exponent o) {
                require(p.m >= 1 && p.n >= 1, "a2n2b-n: m, n >= 1");
                return std::pair{sum_side_geometric(p.m, 2 * p.n - 1, 1, o),
                                 product_side(pid("a2n2b-n", p), o)};
            });
        add("a2n2b-m", "even-indexed sum at base 2n-1, weight 2, m-fold product",
            {"m", "n", "kappa_perturb"}, [](const IdParams& p, Exponent o) {
                require(p.m >= 1 && p.n >= 1, "a2n2b-m: m, n >= 1");
                return std::pair{sum_side_geometric(p.m, 2 * p.n - 1, 1, o),
                                 product_side(pid("a2n2b-m", p), o)};
            });
        add("cn-n", "even-indexed sum at base 2n, weight 1, n-fold product",
            {"m", "n", "kappa_perturb"}, [](const IdParams& p, Exponent o) {
                require(p.m >= 1 && p.n >= 1, "cn-n: m, n >= 1");
                return std::pair{sum_side_geometric(p.m, 2 * p.n, 0, o),
                                 product_side(pid("cn-n", p), o)};
            });
        add("cn-m", "even-indexed sum at base 2n, weight 1, m-fold product",
            {"m", "n", "kappa_perturb"}, [](const IdParams& p, Exponent o) {
                require(p.m >= 1 && p.n >= 1, "cn-m: m, n >= 1");
                return std::pair{sum_side_geometric(p.m, 2 * p.n, 0, o),
                                 product_side(pid("cn-m", p), o)};
            });
        add("dn-n", "even-indexed sum at base 2n-2, weight 2, n-fold product",
            {"m", "n", "kappa_perturb"}, [](const IdParams& p, Exponent o) {
                require(p.m >= 1 && p.n >= 2, "dn-n: m >= 1, n >= 2");
                return std::pair{sum_side_geometric(p.m, 2 * p.n - 2, 1, o),
                                 product_side(pid("dn-n", p), o)};
            });
        add("dn-m", "even-indexed sum at base 2n-2, weight 2, m-fold product",
            {"m", "n", "kappa_perturb"}, [](const IdParams& p, Exponent o) {
                require(p.m >= 1 && p.n >= 2, "dn-m: m >= 1, n >= 2");
                return std::pair{sum_side_geometric(p.m, 2 * p.n - 2, 1, o),
                                 product_side(pid("dn-m", p), o)};
            });
        add("mixed", "even-indexed sum at base n, weight sigma+1",
            {"m", "n", "sigma", "kappa_perturb"}, [](const IdParams& p, Exponent o) {
                require(p.m >= 1 && p.n >= 1, "mixed: m, n >= 1");
                require(p.sigma == 0 || p.sigma == 1, "mixed: sigma in {0,1}");
                return std::pair{sum_side_geometric(p.m, p.n, p.sigma, o),
                                 product_side(pid("mixed", p), o)};
            });
        add("an-n", "rectangular limit at modulus m+n, n-fold product",
            {"m", "n", "kappa_perturb"}, [](const IdParams& p, Exponent o) {
                require(p.m >= 1 && p.n >= 1, "an-n: m, n >= 1");
                Series q = rect_limit(p.m, p.n, 0, false, o);
                Series norm =
                    poch_inf(SignedAtom::q_pow(I(p.n)), I(p.n), o).inverted();
                return std::pair{(q * norm).truncated(o),
                                 product_side(pid("an-n", p), o)};
            });
        add("an-m", "rectangular limit at modulus m+n, m-fold product",
            {"m", "n", "kappa_perturb"}, [](const IdParams& p, Exponent o) {
                require(p.m >= 1 && p.n >= 1, "an-m: m, n >= 1");
                Series q = rect_limit(p.m, p.n, 0, false, o);
                Series norm =
                    poch_inf(SignedAtom::q_pow(I(p.n)), I(p.n), o).inverted();
                return std::pair{(q * norm).truncated(o),
                                 product_side(pid("an-m", p), o)};
            });
        add("limk", "near-rectangular limit, 0 <= k <= m",
            {"m", "n", "k", "kappa_perturb"}, [](const IdParams& p, Exponent o) {
                require(0 <= p.k && p.k <= p.m, "limk: 0 <= k <= m");
                return std::pair{rect_limit(p.m, p.n, p.k, false, o),
                                 product_side(pid("limk", p), o)};
            });
        add("limk-flip", "flipped near-rectangular limit, k >= m",
            {"m", "n", "k", "kappa_perturb"}, [](const IdParams& p, Exponent o) {
                require(p.k >= p.m, "limk-flip: k >= m");
                return std::pair{rect_limit(p.m, p.n, p.k, true, o),
                                 product_side(pid("limk-flip", p), o)};
            });
        add("q2r", "two-column evaluation as a bounded multisum",
            {"r", "n", "delta"}, [](const IdParams& p, Exponent o) {
                require(p.r >= 0 && p.n >= 1, "q2r: r >= 0, n >= 1");
                require(p.delta == 0 || p.delta == 1, "q2r: delta in {0,1}");
                Partition la(std::vector<int>(p.r, 2));
                return std::pair{q2r_multisum(p.r, p.n, p.delta, o),
                                 p_geometric(la, 2 * p.n + p.delta, o)};
            });
        add("bressoud", "unbounded multisum with even/odd tail",
            {"n", "delta"}, [](const IdParams& p, Exponent o) {
                require(p.n >= 1, "bressoud: n >= 1");
                require(p.delta == 0 || p.delta == 1, "bressoud: delta in {0,1}");
                ProductForm pf;
                Exponent mod = I(2 * p.n + 2 + p.delta);
                pf.mul_poch_inf(+1, mod, mod, 1);
                pf.mul_poch_inf(+1, I(1), I(1), -1);
                pf.mul_theta(+1, I(1), mod, 1);
                return std::pair{bressoud_multisum(p.n, p.delta, o),
                                 pf.to_series(o)};
            });
        add("m1", "rank-1 double-chain multisum at modulus n+4",
            {"n", "sigma", "kappa_perturb"}, [](const IdParams& p, Exponent o) {
                require(p.n >= 1, "m1: n >= 1");
                require(p.sigma == 0 || p.sigma == 1, "m1: sigma in {0,1}");
                return std::pair{m1_multisum(p.n, p.sigma, o),
                                 product_side(pid("q2r-companion", p), o)};
            });
        add("rs", "single-variable transformation at a = q^j", {"j"},
            [](const IdParams& p, Exponent o) {
                require(p.j >= 0, "rs: j >= 0");
                return rogers_selberg_check(p.j, o);
            });
        add("cn-rs", "chain-transfer sum vs normalised lattice series",
            {"m", "n"}, [](const IdParams& p, Exponent o) {
                require(p.m >= 1 && p.n >= 1, "cn-rs: m, n >= 1");
                AlphabetSpec alpha{{}, I(3)};
                for (int i = 1; i <= p.n; ++i)
                    alpha.vars.push_back(SignedAtom::q_pow(I(i)));
                Series lhs = sum_side(p.m, alpha, I(3), o);
                Series rhs =
                    (L_sum(0, p.m, alpha, o) * l_prefactor(alpha, o)).truncated(o);
                return std::pair{lhs, rhs};
            });
        add("cnmla0", "doubled-rank limit identity at its principal point",
            {"m", "n"}, cnmla0);
        add("a2n2-interm", "intermediate B-type identity at its principal point",
            {"m", "n"}, a2n2_interm);
        add("a2n2b-interm", "intermediate C-type identity at its principal point",
            {"m", "n"}, a2n2b_interm);
        add("dn-interm", "intermediate identity at its principal point, n >= 2",
            {"m", "n"}, dn_interm);
        add("mac-d2", "rank-n theta identity with half-base product", {"n"},
            [](const IdParams& p, Exponent o) { return mac_row('d', p.n, o); });
        add("mac-b1v", "rank-n theta identity with doubling constant", {"n"},
            [](const IdParams& p, Exponent o) { return mac_row('b', p.n, o); });
        add("mac-d1v", "rank-n theta identity, pair factors only", {"n"},
            [](const IdParams& p, Exponent o) { return mac_row('v', p.n, o); });
        add("m-cn", "root-lattice theta evaluation, C-type", {"m", "n"}, m_cn);
        add("m-a2n2", "root-lattice theta evaluation, B-type odd base",
            {"m", "n"}, m_a2n2);
        add("m-a2n2b", "root-lattice theta evaluation, C-type odd base",
            {"m", "n"}, m_a2n2b);
        add("m-dn", "root-lattice theta evaluation, B-type even base, n >= 2",
            {"m", "n"}, m_dn);
        for (std::string cid : {"c32", "c33", "c34", "c35"})
            add("const-" + cid, "theta-product constant evaluation", {"n"},
                [cid](const IdParams& p, Exponent o) {
                    return product_constant(cid, p.n, o);
                });
        for (std::string base : {"a2n2a", "a2n2b", "cn", "an"})
            add("dual-" + base, "equality of the two product forms", {"m", "n"},
                [base](const IdParams& p, Exponent o) {
                    return std::pair{product_side(pid(base + "-n", p), o),
                                     product_side(pid(base + "-m", p), o)};
                });
        add("dual-dn", "equality of the two product forms, n >= 2", {"m", "n"},
            [](const IdParams& p, Exponent o) {
                require(p.n >= 2, "dual-dn: n >= 2");
                return std::pair{product_side(pid("dn-n", p), o),
                                 product_side(pid("dn-m", p), o)};
            });
        add("kac2", "character-type product at a rectangular weight vs C-type",
            {"m", "n"}, [](const IdParams& p, Exponent o) {
                ProductId a = pid("kac2", p);
                a.lambda.assign(1, I(p.m));
                a.lambda.resize(p.n + 1, I(0));
                return std::pair{product_side(a, o),
                                 product_side(pid("cn-n", p), o)};
            });
        add("principal", "character-type product at a rectangular weight vs odd base",
            {"m", "n"}, [](const IdParams& p, Exponent o) {
                ProductId a = pid("principal", p);
                a.lambda.assign(1, I(p.m));
                a.lambda.resize(p.n + 1, I(0));
                return std::pair{product_side(a, o),
                                 product_side(pid("a2n2a-n", p), o)};
            });
        add("f-dn2", "character-type product at a rectangular weight vs even base",
            {"m", "n"}, [](const IdParams& p, Exponent o) {
                require(p.n >= 2, "f-dn2: n >= 2");
                ProductId a = pid("f-dn2", p);
                a.lambda.assign(1, I(p.m));
                a.lambda.resize(p.n + 1, I(0));
                return std::pair{product_side(a, o),
                                 product_side(pid("dn-n", p), o)};
            });
        return t;
    }();
    return table;
}

const Row& find_row(const std::string& id) {
    for (const auto& r : rows())
        if (r.info.id == id) return r;
    throw UnknownIdentity("no identity row named '" + id + "'");
}

}  // namespace

std::map<std::string, int> IdParams::as_map() const {
    return {{"m", m},         {"n", n}, {"sigma", sigma},
            {"i", i},         {"k", k}, {"j", j},
            {"r", r},         {"delta", delta},
            {"kappa_perturb", kappa_perturb}};
}

const std::vector<IdentityRow>& identity_catalogue() {
    static const std::vector<IdentityRow> cat = [] {
        std::vector<IdentityRow> c;
        for (const auto& r : rows()) c.push_back(r.info);
        return c;
    }();
    return cat;
}

std::pair<Series, Series> identity_sides(const std::string& id, const IdParams& p,
                                         Exponent order) {
    return find_row(id).make(p, order);
}

VerificationReport verify_identity(const std::string& id, const IdParams& p,
                                   Exponent order) {
    VerificationReport rep;
    rep.id = id;
    rep.order = order;
    const auto& row = find_row(id);
    for (const auto& name : row.info.params) rep.params[name] = p.as_map().at(name);
    using clock = std::chrono::steady_clock;
    try {
        auto t0 = clock::now();
        auto [lhs, rhs] = row.make(p, order);
        auto t1 = clock::now();
        rep.elapsed_ms_lhs =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        rep.elapsed_ms_rhs = 0;  // both sides produced by one maker call
        rep.first_mismatch = Series::first_mismatch(lhs, rhs);
        rep.match = !rep.first_mismatch.has_value();
        rep.lhs_sample = lhs.str(8);
        rep.rhs_sample = rhs.str(8);
    } catch (const Error& e) {
        rep.error = true;
        rep.match = false;
        rep.notes = e.what();
    }
    return rep;
}

static std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') { out += "\\n"; continue; }
        out += c;
    }
    return out;
}

std::string VerificationReport::to_json() const {
    std::ostringstream os;
    os << "{\"id\":\"" << json_escape(id) << "\",\"params\":{";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) os << ",";
        first = false;
        os << "\"" << k << "\":" << v;
    }
    os << "},\"order_q\":\"" << order.str() << "\",\"match\":"
       << (match ? "true" : "false") << ",\"error\":" << (error ? "true" : "false");
    if (first_mismatch)
        os << ",\"first_mismatch_q\":\"" << first_mismatch->str() << "\"";
    os << ",\"lhs_sample\":\"" << json_escape(lhs_sample) << "\"";
    os << ",\"rhs_sample\":\"" << json_escape(rhs_sample) << "\"";
    os << ",\"elapsed_ms\":" << (elapsed_ms_lhs + elapsed_ms_rhs);
    os << ",\"notes\":\"" << json_escape(notes) << "\"}";
    return os.str();
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << id;
    for (const auto& [k, v] : params) os << " " << k << "=" << v;
    os << " order=" << order.str() << " : ";
    if (error)
        os << "ERROR (" << notes << ")";
    else if (match)
        os << "match";
    else
        os << "MISMATCH at q^" << first_mismatch->str();
    return os.str();
}

std::string VerificationReport::csv_header() {
    return "id,params,order,match,error,first_mismatch,elapsed_ms,notes";
}

std::string VerificationReport::to_csv() const {
    std::ostringstream os;
    os << id << ",\"";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) os << " ";
        first = false;
        os << k << "=" << v;
    }
    os << "\"," << order.str() << "," << (match ? 1 : 0) << "," << (error ? 1 : 0)
       << "," << (first_mismatch ? first_mismatch->str() : "") << ","
       << (elapsed_ms_lhs + elapsed_ms_rhs) << ",\"" << notes << "\"";
    return os.str();
}

std::vector<VerificationReport> run_suite(const std::vector<SuiteRequest>& reqs) {
    std::vector<VerificationReport> out;
    out.reserve(reqs.size());
    for (const auto& r : reqs) out.push_back(verify_identity(r.id, r.params, r.order));
    return out;
}

Exponent parse_exponent(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return I(std::stoll(text));
        std::int64_t num = std::stoll(text.substr(0, slash));
        std::int64_t den = std::stoll(text.substr(slash + 1));
        if (den == 1) return I(num);
        if (den == 2) return H(num);
    } catch (const std::exception&) {
        throw BadParams("cannot parse exponent '" + text + "'");
    }
    throw BadParams("exponent '" + text + "' is not on the half-integer grid");
}

std::vector<SuiteRequest> parse_suite(const std::string& text) {
    std::vector<SuiteRequest> reqs;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ws(line);
        std::string tok;
        if (!(ws >> tok)) continue;
        SuiteRequest req;
        req.id = tok;
        req.order = I(20);
        while (ws >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw BadParams("suite line " + std::to_string(lineno) +
                                ": expected key=value, got '" + tok + "'");
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "order") {
                req.order = parse_exponent(val);
                continue;
            }
            int v = std::stoi(val);
            if (key == "m") req.params.m = v;
            else if (key == "n") req.params.n = v;
            else if (key == "sigma") req.params.sigma = v;
            else if (key == "i") req.params.i = v;
            else if (key == "k") req.params.k = v;
            else if (key == "j") req.params.j = v;
            else if (key == "r") req.params.r = v;
            else if (key == "delta") req.params.delta = v;
            else if (key == "kappa_perturb") req.params.kappa_perturb = v;
            else
                throw BadParams("suite line " + std::to_string(lineno) +
                                ": unknown key '" + key + "'");
        }
        reqs.push_back(std::move(req));
    }
    return reqs;
}

}  // namespace qrr
