#include "qrr/products.hpp"

#include <algorithm>

#include "qrr/errors.hpp"
#include "qrr/qfuncs.hpp"

namespace qrr {

void ProductForm::mul_poch_inf(int sign, Exponent e, Exponent base, std::int64_t mult) {
    if (base <= Exponent::integer(0)) throw BadParams("poch_inf factor: base > 0");
    if (e < Exponent::integer(0)) throw BadParams("poch_inf factor: e >= 0");
    if (mult == 0) return;
    if (e == Exponent::integer(0)) {
        // (s; q^b)_inf = (1 - s) (s q^b; q^b)_inf
        if (sign > 0) {
            if (mult < 0) throw SingularPochhammer("(q^0; .)_inf in a denominator");
            zero = true;
        } else {
            for (std::int64_t t = 0; t < (mult > 0 ? mult : -mult); ++t)
                scalar *= (mult > 0) ? mpq_class(2) : mpq_class(1, 2);
        }
        e = base;
    }
    for (auto& f : factors_)
        if (f.sign == sign && f.e == e && f.base == base) {
            f.mult += mult;
            if (f.mult == 0)
                factors_.erase(factors_.begin() + (&f - factors_.data()));
            return;
        }
    factors_.push_back({sign, e, base, mult});
}

void ProductForm::mul_theta(int sign, Exponent e, Exponent base, std::int64_t mult) {
    if (base <= Exponent::integer(0)) throw BadParams("theta factor: base > 0");
    if (e < Exponent::integer(0)) e = base - e;  // theta(a; q) = theta(q/a; q)
    while (e > base) {
        // theta(a q^b; q^b) = -a^{-1} theta(a; q^b) with a = sign q^{e-b},
        // so each application multiplies by (-sign)^mult q^{-mult (e-b)}.
        e -= base;
        if (sign > 0 && mult % 2 != 0) scalar = -scalar;
        shift -= mult * e;
    }
    mul_poch_inf(sign, e, base, mult);
    mul_poch_inf(sign, base - e, base, mult);
}

Series ProductForm::to_series(Exponent order) const {
    if (zero) return Series::zero(order);
    Series r = Series::monomial(scalar, shift, order);
    for (const auto& f : factors_) {
        std::int64_t a = f.mult > 0 ? f.mult : -f.mult;
        for (Exponent e = f.e; shift + e <= order; e += f.base)
            for (std::int64_t t = 0; t < a; ++t) {
                SignedAtom at{f.sign, e};
                if (f.mult > 0)
                    r.mul_one_minus(at);
                else
                    r.div_one_minus(at);
            }
    }
    return r;
}

std::map<std::pair<Exponent, int>, std::int64_t> ProductForm::residue_ledger(
    Exponent kappa) const {
    std::map<std::pair<Exponent, int>, std::int64_t> led;
    for (const auto& f : factors_) {
        if (f.base.steps() == 0 || kappa.steps() % f.base.steps() != 0)
            throw BadParams("residue_ledger: factor base does not divide kappa");
        std::int64_t d = kappa.steps() / f.base.steps();
        for (std::int64_t j = 0; j < d; ++j) {
            Exponent c = f.e + j * f.base;
            if (c <= Exponent::integer(0) || c > kappa)
                throw BadParams("residue_ledger: exponent outside (0, kappa]");
            led[{c, f.sign}] += f.mult;
        }
    }
    for (auto it = led.begin(); it != led.end();)
        it = (it->second == 0) ? led.erase(it) : std::next(it);
    return led;
}

namespace {

void check(bool ok, const std::string& msg) {
    if (!ok) throw BadParams(msg);
}

// lambda = (lambda_0, ..., lambda_n), weakly decreasing, nonnegative, all
// integral or (when half_ok) all half-integral.
void check_lambda(const std::vector<Exponent>& la, int n, bool half_ok) {
    check(static_cast<int>(la.size()) == n + 1, "lambda must have n+1 entries");
    bool integral = la.empty() || la[0].is_integral();
    for (std::size_t i = 0; i < la.size(); ++i) {
        check(la[i] >= Exponent::integer(0), "lambda entries must be nonnegative");
        check(la[i].is_integral() == integral, "lambda entries must share integrality");
        if (i + 1 < la.size()) check(la[i] >= la[i + 1], "lambda must be decreasing");
    }
    check(integral || half_ok, "half-partition not allowed for this row");
}

Exponent I(std::int64_t v) { return Exponent::integer(v); }

}  // namespace

ProductForm product_form(const ProductId& p) {
    ProductForm f;
    const int m = p.m, n = p.n, sg = p.sigma;
    const auto id = p.id;
    auto poch1_den = [&](int count) {  // (q)_inf^{-count}
        f.mul_poch_inf(+1, I(1), I(1), -count);
    };

    if (id == "rr") {
        check(sg == 0 || sg == 1, "rr: sigma in {0,1}");
        Exponent mod = I(5 + p.kappa_perturb);
        f.mul_poch_inf(+1, I(sg + 1), mod, -1);
        f.mul_poch_inf(+1, I(4 - sg), mod, -1);
    } else if (id == "ag") {
        check(m >= 1 && p.i >= 1 && p.i <= m + 1, "ag: m >= 1, 1 <= i <= m+1");
        Exponent mod = I(2 * m + 3 + p.kappa_perturb);
        f.mul_poch_inf(+1, mod, mod, 1);
        poch1_den(1);
        f.mul_theta(+1, I(p.i), mod, 1);
    } else if (id == "a2n2a-n" || id == "a2n2a-m" || id == "a2n2b-n" ||
               id == "a2n2b-m") {
        check(m >= 1 && n >= 1, "a2n2: m, n >= 1");
        Exponent kap = I(2 * m + 2 * n + 1 + p.kappa_perturb);
        bool bform = id[4] == 'b';
        int N = (id.back() == 'n') ? n : m;
        f.mul_poch_inf(+1, kap, kap, N);
        poch1_den(N);
        for (int i = 1; i <= N; ++i) {
            int ei = bform ? i : (id.back() == 'n' ? i + m : i + 1);
            f.mul_theta(+1, I(ei), kap, 1);
        }
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                int e2 = bform ? i + j : (id.back() == 'n' ? i + j - 1 : i + j + 1);
                f.mul_theta(+1, I(j - i), kap, 1);
                f.mul_theta(+1, I(e2), kap, 1);
            }
    } else if (id == "cn-n") {
        check(m >= 1 && n >= 1, "cn: m, n >= 1");
        Exponent kap = I(2 * m + 2 * n + 2 + p.kappa_perturb);
        check(kap.to_integer() % 2 == 0, "cn-n: kappa must stay even");
        Exponent kap2 = I(kap.to_integer() / 2);
        f.mul_poch_inf(+1, I(2), I(2), 1);
        f.mul_poch_inf(+1, kap2, kap2, 1);
        f.mul_poch_inf(+1, kap, kap, n - 1);
        poch1_den(n + 1);
        for (int i = 1; i <= n; ++i) f.mul_theta(+1, I(i), kap2, 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                f.mul_theta(+1, I(j - i), kap, 1);
                f.mul_theta(+1, I(i + j), kap, 1);
            }
    } else if (id == "cn-m") {
        check(m >= 1 && n >= 1, "cn: m, n >= 1");
        Exponent kap = I(2 * m + 2 * n + 2 + p.kappa_perturb);
        f.mul_poch_inf(+1, kap, kap, m);
        poch1_den(m);
        for (int i = 1; i <= m; ++i) f.mul_theta(+1, I(i + 1), kap, 1);
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                f.mul_theta(+1, I(j - i), kap, 1);
                f.mul_theta(+1, I(i + j + 1), kap, 1);
            }
    } else if (id == "dn-n") {
        check(m >= 1 && n >= 2, "dn: m >= 1, n >= 2");
        Exponent kap = I(2 * m + 2 * n + p.kappa_perturb);
        f.mul_poch_inf(+1, kap, kap, n);
        f.mul_poch_inf(+1, I(2), I(2), -1);
        poch1_den(n - 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                f.mul_theta(+1, I(j - i), kap, 1);
                f.mul_theta(+1, I(i + j - 1), kap, 1);
            }
    } else if (id == "dn-m") {
        check(m >= 1 && n >= 2, "dn: m >= 1, n >= 2");
        Exponent kap = I(2 * m + 2 * n + p.kappa_perturb);
        f.mul_poch_inf(+1, kap, kap, m);
        poch1_den(m);
        for (int i = 1; i <= m; ++i) f.mul_theta(+1, I(i), kap, 1);
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                f.mul_theta(+1, I(j - i), kap, 1);
                f.mul_theta(+1, I(i + j), kap, 1);
            }
    } else if (id == "mixed") {
        check(m >= 1 && n >= 1 && (sg == 0 || sg == 1), "mixed: m,n >= 1, sigma in {0,1}");
        Exponent kap = I(2 * m + n + 2 + p.kappa_perturb);
        f.mul_poch_inf(+1, kap, kap, m);
        poch1_den(m);
        for (int i = 1; i <= m; ++i) f.mul_theta(+1, I(i - sg + 1), kap, 1);
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                f.mul_theta(+1, I(j - i), kap, 1);
                f.mul_theta(+1, I(i + j - sg + 1), kap, 1);
            }
    } else if (id == "an-n" || id == "an-m") {
        check(m >= 1 && n >= 1, "an: m, n >= 1");
        Exponent kap = I(m + n + p.kappa_perturb);
        int N = (id.back() == 'n') ? n : m;
        f.mul_poch_inf(+1, kap, kap, N - 1);
        poch1_den(N);
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) f.mul_theta(+1, I(j - i), kap, 1);
    } else if (id == "limk") {
        check(m >= 1 && n >= 1 && p.k >= 0 && p.k <= m, "limk: 0 <= k <= m");
        Exponent kap = I(m + n + p.kappa_perturb);
        f.mul_poch_inf(+1, I(n), I(n), 1);
        f.mul_poch_inf(+1, kap, kap, n - 1);
        poch1_den(n);
        for (int i = 1; i <= n - 1; ++i) f.mul_theta(+1, I(i + p.k), kap, 1);
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i + 1; j <= n - 1; ++j) f.mul_theta(+1, I(j - i), kap, 1);
    } else if (id == "limk-flip") {
        check(m >= 1 && n >= 1 && p.k >= m, "limk-flip: k >= m");
        Exponent kap = I(m + n + p.kappa_perturb);
        f.mul_poch_inf(+1, I(n), I(n), 1);
        f.mul_poch_inf(+1, kap, kap, n - 1);
        poch1_den(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) f.mul_theta(+1, I(j - i), kap, 1);
    } else if (id == "q2r-companion") {
        check(n >= 1 && (sg == 0 || sg == 1), "q2r-companion: n >= 1, sigma in {0,1}");
        Exponent mod = I(n + 4 + p.kappa_perturb);
        f.mul_poch_inf(+1, mod, mod, 1);
        poch1_den(1);
        f.mul_theta(+1, I(2 - sg), mod, 1);
    } else if (id == "kac2") {
        check(n >= 1, "kac2: n >= 1");
        check_lambda(p.lambda, n, false);
        const auto& la = p.lambda;
        Exponent kap = 2 * (la[0] + I(n + 1)) + I(p.kappa_perturb);
        check(kap.is_integral() && kap.to_integer() % 2 == 0, "kac2: even kappa");
        Exponent kap2 = I(kap.to_integer() / 2);
        f.mul_poch_inf(+1, I(2), I(2), 1);
        f.mul_poch_inf(+1, kap2, kap2, 1);
        f.mul_poch_inf(+1, kap, kap, n - 1);
        poch1_den(n + 1);
        for (int i = 1; i <= n; ++i)
            f.mul_theta(+1, la[i] + I(n - i + 1), kap2, 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                f.mul_theta(+1, la[i] - la[j] + I(j - i), kap, 1);
                f.mul_theta(+1, la[i] + la[j] + I(2 * n + 2 - i - j), kap, 1);
            }
    } else if (id == "principal") {
        check(n >= 1, "principal: n >= 1");
        check_lambda(p.lambda, n, false);
        const auto& la = p.lambda;
        Exponent kap = 2 * la[0] + I(2 * n + 1 + p.kappa_perturb);
        Exponent pp = la[0] - la[1];
        f.mul_poch_inf(+1, kap, kap, n);
        poch1_den(n);
        for (int i = 1; i <= n; ++i)
            f.mul_theta(+1, la[1] - la[i] + pp + I(i), kap, 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                f.mul_theta(+1, la[i] - la[j] + I(j - i), kap, 1);
                f.mul_theta(+1, la[i] + la[j] + I(2 * n + 1 - i - j), kap, 1);
            }
    } else if (id == "f-dn2") {
        check(n >= 1, "f-dn2: n >= 1");
        check_lambda(p.lambda, n, true);
        const auto& la = p.lambda;
        Exponent kap = 2 * la[0] + I(2 * n + p.kappa_perturb);
        check(kap.is_integral(), "f-dn2: integral kappa");
        f.mul_poch_inf(+1, kap, kap, n);
        f.mul_poch_inf(+1, I(2), I(2), -1);
        poch1_den(n - 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                f.mul_theta(+1, la[i] - la[j] + I(j - i), kap, 1);
                f.mul_theta(+1, la[i] + la[j] + I(2 * n + 1 - i - j), kap, 1);
            }
    } else {
        throw UnknownIdentity("product_form: " + id);
    }
    return f;
}

Series product_side(const ProductId& p, Exponent order) {
    Series s = product_form(p).to_series(order);
    if (p.id == "limk-flip")
        s *= qbinom(p.k - p.m + p.n - 1, p.n - 1, Exponent::integer(1), order);
    return s;
}

std::pair<Series, Series> product_constant(const std::string& id, int n,
                                           Exponent order) {
    ProductForm lhs, rhs;
    if (id == "c32") {
        check(n >= 1, "c32: n >= 1");
        lhs.mul_poch_inf(+1, I(2 * n), I(2 * n), n);
        for (int i = 1; i <= n; ++i) lhs.mul_theta(+1, I(2 * n - 2 * i + 1), I(2 * n), 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                lhs.mul_theta(+1, I(j - i), I(2 * n), 1);
                lhs.mul_theta(+1, I(2 * n - i - j + 1), I(2 * n), 1);
            }
        rhs.mul_poch_inf(+1, I(1), I(1), n + 1);
        rhs.mul_poch_inf(+1, I(2), I(2), -1);
    } else if (id == "c33" || id == "c34") {
        check(n >= 1, id + ": n >= 1");
        lhs.mul_poch_inf(+1, I(2 * n - 1), I(2 * n - 1), n);
        for (int i = 1; i <= n; ++i) {
            lhs.mul_theta(-1, I(id == "c33" ? n - i : 2 * n - i), I(2 * n - 1), 1);
            lhs.mul_theta(+1, I(2 * n - 2 * i + 1), I(4 * n - 2), 1);
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                lhs.mul_theta(+1, I(j - i), I(2 * n - 1), 1);
                lhs.mul_theta(+1, I(id == "c33" ? 2 * n - i - j : 2 * n - i - j + 1),
                              I(2 * n - 1), 1);
            }
        rhs.scalar = 2;
        rhs.mul_poch_inf(+1, I(1), I(1), n);
    } else if (id == "c35") {
        check(n >= 2, "c35: n >= 2");
        lhs.mul_poch_inf(+1, I(2 * n - 2), I(2 * n - 2), n - 1);
        lhs.mul_poch_inf(+1, I(n - 1), I(n - 1), 1);
        for (int i = 1; i <= n; ++i) lhs.mul_theta(-1, I(n - i), I(n - 1), 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                lhs.mul_theta(+1, I(j - i), I(2 * n - 2), 1);
                lhs.mul_theta(+1, I(2 * n - i - j), I(2 * n - 2), 1);
            }
        rhs.scalar = 4;
        rhs.mul_poch_inf(+1, I(2), I(2), 1);
        rhs.mul_poch_inf(+1, I(1), I(1), n - 1);
    } else {
        throw UnknownIdentity("product_constant: " + id);
    }
    return {lhs.to_series(order), rhs.to_series(order)};
}

}  // namespace qrr
