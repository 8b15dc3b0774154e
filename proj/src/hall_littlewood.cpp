#include "qrr/hall_littlewood.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "qrr/errors.hpp"
#include "qrr/factor_bag.hpp"
#include "qrr/qfuncs.hpp"

namespace qrr {

std::string AlphabetSpec::digest() const {
    std::ostringstream os;
    os << base.steps() << ":";
    for (const auto& v : vars) os << v.sign << "," << v.exp.steps() << ";";
    return os.str();
}

AlphabetSpec geometric_alphabet(int scale) {
    if (scale < 1) throw BadParams("geometric_alphabet: scale must be >= 1");
    AlphabetSpec a;
    a.base = Exponent::integer(scale);
    for (int i = 0; i < scale; ++i) a.vars.push_back(SignedAtom::q_pow(Exponent::integer(i)));
    return a;
}

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

inline std::int64_t c2(std::int64_t r) { return r * (r - 1) / 2; }

/// Row-by-row transfer sum over chains of partitions
///   0 = mu^(s) <= mu^(s-1) <= ... <= mu^(0),
/// processed one row of the chain at a time, bottom row first.  The state is
/// the tuple (mu^(0)_i, ..., mu^(s-1)_i) of the last placed row i; a row
/// transition from the row below (c) to the new row (d >= c componentwise,
/// d weakly decreasing across levels) carries the weight
///   prod_{a=1}^{s}  sg_a^{delta_a} q^{e_a delta_a + b binom(delta_a,2)}
///                   qbinom(d^{a-1} - c^a, delta_a; q^b),
/// with delta_a = d^{a-1} - d^a and d^s = 0.  In free mode the top row values
/// are unconstrained except for the pairing tau_{2j-1} = tau_{2j}, and each
/// row additionally carries q^{w d^0} / (q^b; q^b)_{d^0 - c^0}.
/// All exponents are tracked in half-integer steps.
class ChainEngine {
public:
    std::vector<std::int64_t> es;  // es[a-1]: exponent steps of atom a = 1..s
    std::vector<int> sg;           // signs of the atoms
    std::int64_t bs = 0;           // base steps
    Exponent base{}, order{};
    std::int64_t os = 0;  // order steps
    int s = 0;

    bool free_mode = false;
    std::int64_t wsteps = 0;        // weight steps per unit of row top (free mode)
    int rows = 0;                   // number of rows (2m in free mode)
    std::vector<int> tau;           // fixed tops, row 1 first (fixed mode)

    std::int64_t tmax = 0;
    // tail[a][v]: least exponent-steps the levels a+1..s can contribute when
    // d^a = v (exact; kInf when impossible).
    std::vector<std::vector<std::int64_t>> tail;
    std::vector<std::int64_t> t0suf;    // suffix min of tail0 (free mode)
    std::vector<std::int64_t> pairsuf;  // suffix min of wsteps*t + 2 tail0(t)
    std::vector<std::int64_t> comp_fixed;  // fixed: comp_fixed[r] = sum_{r'<=r} tail0(tau_{r'})
    std::vector<std::int64_t> gval;     // headroom: -lower bound of rows r..1 contributions

    void init(const AlphabetSpec& alpha, Exponent ord) {
        base = alpha.base;
        bs = base.steps();
        if (bs <= 0) throw BadParams("chain engine: base must be positive");
        order = ord;
        os = ord.steps();
        s = static_cast<int>(alpha.vars.size());
        if (s == 0) throw BadParams("chain engine: empty alphabet");
        for (const auto& v : alpha.vars) {
            es.push_back(v.exp.steps());
            sg.push_back(v.sign);
        }
    }

    void build_tail() {
        tail.assign(static_cast<std::size_t>(s) + 1, {});
        auto& last = tail[static_cast<std::size_t>(s)];
        last.assign(static_cast<std::size_t>(tmax) + 1, kInf);
        last[0] = 0;
        for (int a = s - 1; a >= 0; --a) {
            auto& cur = tail[static_cast<std::size_t>(a)];
            const auto& nxt = tail[static_cast<std::size_t>(a) + 1];
            cur.assign(static_cast<std::size_t>(tmax) + 1, kInf);
            for (std::int64_t v = 0; v <= tmax; ++v) {
                std::int64_t best = kInf;
                for (std::int64_t u = 0; u <= v; ++u) {
                    if (nxt[static_cast<std::size_t>(u)] == kInf) continue;
                    std::int64_t d = v - u;
                    std::int64_t w = es[static_cast<std::size_t>(a)] * d + bs * c2(d) +
                                     nxt[static_cast<std::size_t>(u)];
                    best = std::min(best, w);
                }
                cur[static_cast<std::size_t>(v)] = best;
            }
        }
    }

    /// Establish the free-mode growth certificate: a top bound tmax such that
    /// every row pair with top t > tmax pushes the chain past the cutoff even
    /// against worst-case negativity of all other pairs.  Uses the exact
    /// bound  sum_a binom(delta_a,2) >= (t^2/s - t)/2 per row.
    void certify_free() {
        std::int64_t neg = 0;
        for (auto e : es) neg = std::max(neg, -e);
        // pair with top t contributes at least f(t)/s: the pair weight
        // wsteps*t, worst-case sign dips -2*neg*t, and each of the two rows
        // at least bs*(t^2/s - t)/2 from the binomials
        auto f = [&](std::int64_t t) {
            return s * (wsteps - 2 * neg) * t + bs * (t * t - s * t);
        };
        std::int64_t tstar = std::max<std::int64_t>(
            0, (s * (2 * neg - wsteps) + 2 * bs * s) / (2 * bs));
        std::int64_t fmin = std::min({f(tstar), f(tstar + 1), std::int64_t{0}});
        std::int64_t pairs = rows / 2;
        std::int64_t offset = (pairs > 1) ? (pairs - 1) * ((-fmin + s - 1) / s) : 0;
        std::int64_t bound = s * (os + offset);
        std::int64_t t = std::max<std::int64_t>(tstar + 1, 0);
        const std::int64_t cap = 2000000;
        while (t <= cap && f(t) <= bound) ++t;
        if (t > cap)
            throw UncertifiedAlphabet("no per-row growth certificate below the top cap");
        tmax = t;
        build_tail();
        const auto& t0 = tail[0];
        t0suf.assign(static_cast<std::size_t>(tmax) + 1, kInf);
        pairsuf.assign(static_cast<std::size_t>(tmax) + 1, kInf);
        std::int64_t r1 = kInf, r2 = kInf;
        for (std::int64_t v = tmax; v >= 0; --v) {
            std::int64_t tv = t0[static_cast<std::size_t>(v)];
            if (tv != kInf) {
                r1 = std::min(r1, tv);
                r2 = std::min(r2, wsteps * v + 2 * tv);
            }
            t0suf[static_cast<std::size_t>(v)] = r1;
            pairsuf[static_cast<std::size_t>(v)] = r2;
        }
        // headroom against future negative shifts: odd rows carry no weight,
        // even rows carry the full pair weight
        std::int64_t oddneg = std::min<std::int64_t>(0, t0suf[0]);
        std::int64_t evenneg = 0;
        for (std::int64_t v = 0; v <= tmax; ++v) {
            std::int64_t tv = t0[static_cast<std::size_t>(v)];
            if (tv != kInf) evenneg = std::min(evenneg, wsteps * v + tv);
        }
        gval.assign(static_cast<std::size_t>(rows) + 1, 0);
        for (int r = 1; r <= rows; ++r)
            gval[static_cast<std::size_t>(r)] =
                -((r / 2) * evenneg + ((r + 1) / 2) * oddneg);
    }

    void prepare_fixed() {
        tmax = tau.empty() ? 0 : tau[0];
        build_tail();
        // comp_fixed[r-1]: least contribution of rows 1..r-1 still to place
        comp_fixed.assign(tau.size() + 1, 0);
        gval.assign(tau.size() + 1, 0);
        for (std::size_t r = 1; r <= tau.size(); ++r) {
            std::int64_t t0 = tail[0][static_cast<std::size_t>(tau[r - 1])];
            if (t0 == kInf) t0 = 0;  // impossible rows are pruned outright later
            comp_fixed[r] = comp_fixed[r - 1] + t0;
            gval[r] = gval[r - 1] - std::min<std::int64_t>(0, t0);
        }
    }

    using State = std::vector<int>;
    using Layer = std::map<State, Series>;

    Series run() {
        Layer layer;
        layer.emplace(State(static_cast<std::size_t>(s), 0),
                      Series::one(order + Exponent::from_steps(gval[static_cast<std::size_t>(rows)])));
        for (int r = rows; r >= 1; --r) {
            Layer next;
            for (const auto& [c, V] : layer) {
                if (V.is_zero()) continue;
                transitions(r, c, V, next);
            }
            layer = std::move(next);
        }
        Series total = Series::zero(order);
        for (const auto& [c, V] : layer) total.accumulate(V);
        return total;
    }

private:
    void transitions(int r, const State& c, const Series& V, Layer& out) {
        std::int64_t vmin = V.min_exponent().value_or(order).steps();
        std::int64_t negfloor = std::max<std::int64_t>(0, -vmin);
        Exponent need = V.order() + Exponent::from_steps(negfloor);
        Exponent ord_out = order + Exponent::from_steps(gval[static_cast<std::size_t>(r - 1)]);

        std::int64_t d0lo, d0hi;
        if (free_mode) {
            if (r % 2 == 1) {  // upper row of a pair: top forced
                d0lo = d0hi = c[0];
            } else {
                d0lo = c[0];
                d0hi = tmax;
            }
        } else {
            d0lo = d0hi = tau[static_cast<std::size_t>(r - 1)];
        }
        State d(static_cast<std::size_t>(s), 0);
        for (std::int64_t d0 = d0lo; d0 <= d0hi; ++d0) {
            // weight rows in pairs: full pair weight on the lower (even) row
            std::int64_t wrow = 0;
            if (free_mode && r % 2 == 0) wrow = wsteps * d0;
            std::int64_t tail0 = tail[0][static_cast<std::size_t>(d0)];
            if (tail0 == kInf) continue;
            std::int64_t comp;
            if (free_mode) {
                // remaining rows above: the forced odd partner (even r) and
                // whole pairs, all with tops >= d0
                std::int64_t pr = pairsuf[static_cast<std::size_t>(d0)];
                if (r % 2 == 0) {
                    std::int64_t npairs = (r - 2) / 2;
                    comp = (npairs > 0 && pr == kInf) ? kInf
                                                      : tail0 + npairs * (pr == kInf ? 0 : pr);
                } else {
                    std::int64_t npairs = (r - 1) / 2;
                    comp = (npairs > 0 && pr == kInf) ? kInf : npairs * (pr == kInf ? 0 : pr);
                }
            } else {
                comp = comp_fixed[static_cast<std::size_t>(r - 1)];
            }
            if (comp >= kInf) continue;
            if (vmin + wrow + tail0 + comp > os) continue;
            d[0] = static_cast<int>(d0);
            descend(1, wrow, vmin, comp, c, d, V, need, ord_out, out);
        }
    }

    // choose d[a] for a = 1..s-1; partial = weight steps so far (levels <= a)
    void descend(int a, std::int64_t partial, std::int64_t vmin, std::int64_t comp,
                 const State& c, State& d, const Series& V, Exponent need, Exponent ord_out,
                 Layer& out) {
        if (a == s) {
            emit(partial, c, d, V, need, ord_out, out);
            return;
        }
        for (int da = c[static_cast<std::size_t>(a)]; da <= d[static_cast<std::size_t>(a) - 1]; ++da) {
            std::int64_t delta = d[static_cast<std::size_t>(a) - 1] - da;
            std::int64_t p2 = partial + es[static_cast<std::size_t>(a) - 1] * delta + bs * c2(delta);
            std::int64_t t = tail[static_cast<std::size_t>(a)][static_cast<std::size_t>(da)];
            if (t == kInf) continue;
            if (vmin + p2 + t + comp > os) continue;
            d[static_cast<std::size_t>(a)] = da;
            descend(a + 1, p2, vmin, comp, c, d, V, need, ord_out, out);
        }
        d[static_cast<std::size_t>(a)] = 0;
    }

    void emit(std::int64_t partial, const State& c, State& d, const Series& V, Exponent need,
              Exponent ord_out, Layer& out) {
        // last level: delta_s = d^{s-1}
        std::int64_t deltas = d[static_cast<std::size_t>(s) - 1];
        std::int64_t total = partial + es[static_cast<std::size_t>(s) - 1] * deltas + bs * c2(deltas);
        int sign = 1;
        for (int a = 1; a <= s; ++a) {
            std::int64_t da = (a == s) ? 0 : d[static_cast<std::size_t>(a)];
            std::int64_t delta = d[static_cast<std::size_t>(a) - 1] - da;
            if (sg[static_cast<std::size_t>(a) - 1] < 0 && delta % 2 != 0) sign = -sign;
        }
        // strip the accumulated exponent offset so multiplications run on a
        // short window; restore it together with this row's weight at the end
        std::int64_t vmin = 0;
        if (auto me = V.min_exponent()) vmin = me->steps();
        Series t = (vmin != 0) ? V.shifted(Exponent::from_steps(-vmin)) : V;
        // everything above ord_out - total is discarded after the final shift,
        // so cap the multiplication window there as well
        Exponent fac_ord = std::min(need + Exponent::from_steps(-vmin),
                                    ord_out + Exponent::from_steps(-(total + vmin)));
        if (t.order() > fac_ord) t = t.truncated(fac_ord);
        for (int a = 1; a < s; ++a) {
            std::int64_t n = d[static_cast<std::size_t>(a) - 1] - c[static_cast<std::size_t>(a)];
            std::int64_t m = d[static_cast<std::size_t>(a) - 1] - d[static_cast<std::size_t>(a)];
            if (m == 0 || m == n) continue;
            t = t * qbinom(n, m, base, fac_ord);
        }
        if (free_mode) {
            std::int64_t k = d[0] - c[0];
            if (k > 0) t = t * poch_inv_cached(k, base, fac_ord);
        }
        if (total + vmin != 0) t = t.shifted(Exponent::from_steps(total + vmin));
        if (t.order() > ord_out) t = t.truncated(ord_out);
        if (sign < 0) t.negate();
        auto it = out.find(d);
        if (it == out.end()) {
            if (t.order() == ord_out) {
                out.emplace(d, std::move(t));
            } else {
                // allocate from the term's floor, not from 0: states deep in
                // the chain never see low exponents and the accumulator can
                // still grow down later if a lower term arrives
                Series acc(std::min(t.min_exponent().value_or(ord_out), ord_out), ord_out);
                acc.accumulate(t);
                out.emplace(d, std::move(acc));
            }
        } else {
            it->second.accumulate(t);
        }
    }
};

std::mutex qp_mutex;
std::map<std::string, Series> qp_cache;

}  // namespace

Series qprime_flag(const Partition& la, const AlphabetSpec& alpha, Exponent order) {
    if (la.length() == 0) return Series::one(order);
    std::ostringstream key;
    key << la.str() << "|" << alpha.digest() << "|" << order.steps();
    {
        std::lock_guard<std::mutex> lk(qp_mutex);
        auto it = qp_cache.find(key.str());
        if (it != qp_cache.end()) return it->second;
    }
    Partition tau = la.conjugate();
    ChainEngine eng;
    eng.init(alpha, order);
    eng.free_mode = false;
    eng.tau = tau.parts();
    eng.rows = tau.length();
    eng.prepare_fixed();
    Series r = eng.run();
    std::lock_guard<std::mutex> lk(qp_mutex);
    return qp_cache.emplace(key.str(), std::move(r)).first->second;
}

Series sum_side(int m, const AlphabetSpec& alpha, Exponent w, Exponent order) {
    if (m < 0) throw BadParams("sum_side: m must be >= 0");
    if (m == 0) return Series::one(order);
    ChainEngine eng;
    eng.init(alpha, order);
    eng.free_mode = true;
    // q^{w |lambda|} with |lambda| = |tau|/2: each row pair with shared top t
    // contributes w * t, applied once per pair (on the lower row).
    eng.wsteps = w.steps();
    eng.rows = 2 * m;
    eng.certify_free();
    return eng.run();
}

Series sum_side_geometric(int m, int scale, int sigma, Exponent order) {
    if (sigma != 0 && sigma != 1) throw BadParams("sum_side_geometric: sigma must be 0 or 1");
    return sum_side(m, geometric_alphabet(scale), Exponent::integer(sigma + 1), order);
}

Series p_geometric(const Partition& la, int scale, Exponent order) {
    Series qp = qprime_flag(la, geometric_alphabet(scale), order);
    Series b = b_lambda(la, Exponent::integer(scale), order);
    return (qp * b.inverted()).truncated(order);
}

Series rect_limit(int m, int scale, int k, bool flipped, Exponent order) {
    return rect_limit_info(m, scale, k, flipped, order).value;
}

RectLimitResult rect_limit_info(int m, int scale, int k, bool flipped, Exponent order) {
    if (m < 1) throw BadParams("rect_limit: m must be >= 1");
    if (!flipped && (k < 0 || k > m)) throw BadParams("rect_limit: need 0 <= k <= m");
    if (flipped && k < m) throw BadParams("rect_limit: flipped limit needs k >= m");
    std::int64_t cap = (order.steps() + 1) / 2 + 8;
    auto eval = [&](std::int64_t r) {
        std::vector<int> parts;
        if (flipped) {
            parts.push_back(k);
            parts.insert(parts.end(), static_cast<std::size_t>(r), m);
        } else {
            parts.assign(static_cast<std::size_t>(r), m);
            parts.push_back(k);
        }
        Partition la(parts);
        Exponent E = flipped ? Exponent::integer(m * c2(r + 1))
                             : Exponent::integer(m * c2(r) + k * r);
        return qprime_flag(la, geometric_alphabet(scale), order + E)
            .shifted(-E)
            .truncated(order);
    };
    // per-row cost grows like r^3, so instead of walking r upward one row at
    // a time, probe triples (b, b+1, b+2) on a doubling schedule; three equal
    // consecutive rows is the same certificate the linear scan produced
    for (std::int64_t b = 0;; b = std::min(2 * b + 2, cap - 2)) {
        Series v0 = eval(b);
        Series v1 = eval(b + 1);
        if (!Series::first_mismatch(v0, v1).has_value()) {
            Series v2 = eval(b + 2);
            if (!Series::first_mismatch(v1, v2).has_value()) return {v2, b + 2};
        }
        if (b >= cap - 2) break;
    }
    throw NoStabilisation("limit sequence did not stabilise before the row cap");
}

namespace {
void compositions(std::int64_t total, int parts, std::vector<std::int64_t>& cur,
                  std::vector<std::vector<std::int64_t>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::int64_t v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, parts - 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

Series qprime_near_rect(int m, int r, int k, const AlphabetSpec& alpha, Exponent order) {
    if (k <= 0 || k > m || r < 0) throw BadParams("qprime_near_rect: need 0 < k <= m, r >= 0");
    int n = static_cast<int>(alpha.vars.size());
    Exponent b = alpha.base;
    std::vector<std::vector<std::int64_t>> us, vs;
    std::vector<std::int64_t> cur;
    compositions(r + 1, n, cur, us);
    compositions(r, n, cur, vs);
    Series total = Series::zero(order);
    for (const auto& u : us)
        for (const auto& v : vs) {
            FactorBag bag;
            bag.mul_poch(SignedAtom::q_pow(b), b, r, 1);  // (q)_r
            bag.mul_factor(SignedAtom::q_pow(b), 1);      // (q)_1
            for (int i = 0; i < n; ++i) {
                bag.mul_monomial(alpha.vars[static_cast<std::size_t>(i)],
                                 k * u[static_cast<std::size_t>(i)] +
                                     (m - k) * v[static_cast<std::size_t>(i)]);
                bag.mul_monomial(
                    SignedAtom::q_pow(b),
                    k * c2(u[static_cast<std::size_t>(i)]) + (m - k) * c2(v[static_cast<std::size_t>(i)]));
            }
            for (int i = 0; i < n && !bag.is_zero(); ++i)
                for (int j = 0; j < n && !bag.is_zero(); ++j) {
                    SignedAtom xij = alpha.vars[static_cast<std::size_t>(i)] *
                                     alpha.vars[static_cast<std::size_t>(j)].inverse();
                    SignedAtom qxij{xij.sign, xij.exp + b};
                    bag.mul_poch(qxij, b, u[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(j)], 1);
                    bag.mul_poch(qxij, b, u[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)], -1);
                    bag.mul_poch(qxij, b, v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)], 1);
                    bag.mul_poch(qxij, b, v[static_cast<std::size_t>(i)], -1);
                }
            if (bag.is_zero()) continue;
            if (bag.min_exponent() > order) continue;
            total.accumulate(bag.to_series(order));
        }
    return total;
}

}  // namespace qrr
