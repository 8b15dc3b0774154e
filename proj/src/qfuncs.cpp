#include "qrr/qfuncs.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace qrr {

Series poch_inf(SignedAtom a, Exponent base, Exponent order) {
    if (base <= Exponent::integer(0)) throw Error("poch_inf: base must be positive");
    FactorBag bag;
    for (Exponent e = a.exp;; e += base) {
        if (e > order && e > Exponent::integer(0)) break;
        bag.mul_factor(SignedAtom{a.sign, e}, 1);
        if (bag.is_zero()) return Series::zero(order);
    }
    Series s = bag.to_series(order);
    s.clear_exact();  // the infinite tail of factors is not stored
    return s;
}

Series poch(SignedAtom a, Exponent base, std::int64_t k, Exponent order) {
    if (base <= Exponent::integer(0)) throw Error("poch: base must be positive");
    FactorBag bag;
    bag.mul_poch(a, base, k, 1);
    return bag.to_series(order);
}

Series theta(SignedAtom a, Exponent base, Exponent order) {
    Series p = poch_inf(a, base, order);
    Series q = poch_inf(SignedAtom{a.sign, base - a.exp}, base, order);
    return (p * q).truncated(order);
}

Series theta_list(const std::vector<SignedAtom>& as, Exponent base, Exponent order) {
    Series r = Series::one(order);
    for (const auto& a : as) r = (r * theta(a, base, order)).truncated(order);
    return r;
}

namespace {
// one entry per parameter tuple, stored at the largest order computed so
// far; smaller requests are served by truncation so callers with varying
// orders (e.g. the stabilisation loop) do not grow the cache unboundedly
std::mutex cache_mutex;
std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, Series> qbinom_cache;
std::map<std::pair<std::int64_t, std::int64_t>, Series> pochinv_cache;
}  // namespace

Series qbinom(std::int64_t n, std::int64_t m, Exponent base, Exponent order) {
    if (m < 0 || m > n) return Series::zero(order);
    if (m == 0 || m == n) return Series::one(order);
    auto key = std::make_tuple(n, m, base.steps());
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = qbinom_cache.find(key);
        if (it != qbinom_cache.end() && it->second.order() >= order)
            return it->second.truncated(order);
    }
    FactorBag bag;
    for (std::int64_t j = m + 1; j <= n; ++j) bag.mul_factor(SignedAtom::q_pow(j * base), 1);
    for (std::int64_t j = 1; j <= n - m; ++j) bag.mul_factor(SignedAtom::q_pow(j * base), -1);
    Series s = bag.to_series(order);
    if (Exponent::from_steps(m * (n - m) * base.steps()) <= order) s.mark_exact();
    std::lock_guard<std::mutex> lk(cache_mutex);
    return qbinom_cache.insert_or_assign(key, std::move(s)).first->second;
}

Series poch_inv_cached(std::int64_t k, Exponent base, Exponent order) {
    if (k < 0) return Series::zero(order);
    if (k == 0) return Series::one(order);
    auto key = std::make_pair(k, base.steps());
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = pochinv_cache.find(key);
        if (it != pochinv_cache.end() && it->second.order() >= order)
            return it->second.truncated(order);
    }
    FactorBag bag;
    for (std::int64_t j = 1; j <= k; ++j) bag.mul_factor(SignedAtom::q_pow(j * base), -1);
    Series s = bag.to_series(order);
    std::lock_guard<std::mutex> lk(cache_mutex);
    return pochinv_cache.insert_or_assign(key, std::move(s)).first->second;
}

Series triple_product_sum(SignedAtom a, Exponent base, Exponent order) {
    if (base <= Exponent::integer(0)) throw Error("triple_product_sum: base must be positive");
    Series s = Series::zero(order);
    for (int dir = 0; dir < 2; ++dir) {
        for (std::int64_t r = (dir == 0) ? 0 : -1;; r += (dir == 0) ? 1 : -1) {
            // exponent = base * binom(r,2) + r * a.exp ; sign = (-1)^r a.sign^r
            Exponent ex = Exponent::from_steps(base.steps() * (r * (r - 1) / 2)) + r * a.exp;
            if (ex > order) break;
            int sgn = (r % 2 != 0) ? -1 : 1;
            if (a.sign < 0 && r % 2 != 0) sgn = -sgn;
            s.add_at(ex, mpq_class(sgn));
        }
    }
    return s;
}

}  // namespace qrr
