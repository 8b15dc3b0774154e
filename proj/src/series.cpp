#include "qrr/series.hpp"

#include <algorithm>
#include <sstream>

namespace qrr {

namespace {
const mpq_class kZero = 0;
}

Series::Series(Exponent floor, Exponent order) : floor_(floor), order_(order) {
    if (order < floor) throw Error("Series: order below floor");
    c_.resize(static_cast<std::size_t>((order - floor).steps()) + 1);
}

Series Series::one(Exponent order) {
    Series s(Exponent::integer(0), order);
    s.c_[0] = 1;
    s.exact_ = true;
    return s;
}

Series Series::monomial(const mpq_class& c, Exponent e, Exponent order) {
    if (e > order) return Series(std::min(Exponent::integer(0), order), order);
    Series s(std::min(e, Exponent::integer(0)), order);
    s.c_[s.idx(e)] = c;
    s.exact_ = true;
    return s;
}

const mpq_class& Series::at(Exponent e) const {
    if (e > order_) throw Error("Series::at above order");
    if (e < floor_) return kZero;
    return c_[static_cast<std::size_t>(idx(e))];
}

void Series::grow_down(Exponent new_floor) {
    if (new_floor >= floor_) return;
    std::int64_t extra = (floor_ - new_floor).steps();
    c_.insert(c_.begin(), static_cast<std::size_t>(extra), mpq_class(0));
    floor_ = new_floor;
}

void Series::set(Exponent e, const mpq_class& v) {
    if (e > order_) throw Error("Series::set above order");
    grow_down(e);
    c_[static_cast<std::size_t>(idx(e))] = v;
}

void Series::add_at(Exponent e, const mpq_class& v) {
    if (e > order_) return;  // silently truncated
    grow_down(e);
    c_[static_cast<std::size_t>(idx(e))] += v;
}

bool Series::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

std::optional<Exponent> Series::min_exponent() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return floor_ + Exponent::from_steps(static_cast<std::int64_t>(i));
    return std::nullopt;
}

std::optional<Exponent> Series::max_exponent() const {
    for (std::int64_t i = size() - 1; i >= 0; --i)
        if (c_[static_cast<std::size_t>(i)] != 0) return floor_ + Exponent::from_steps(i);
    return std::nullopt;
}

Series Series::truncated(Exponent new_order) const {
    if (new_order >= order_) return *this;
    Series r(std::min(floor_, new_order), new_order);
    r.exact_ = exact_ && max_exponent().value_or(new_order) <= new_order;
    std::int64_t n = r.size();
    std::int64_t off = (r.floor_ - floor_).steps();
    for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t j = i + off;
        if (j >= 0 && j < size()) r.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(j)];
    }
    return r;
}

Series Series::shifted(Exponent delta) const {
    Series r(floor_ + delta, order_ + delta);
    r.c_ = c_;
    r.exact_ = exact_;
    return r;
}

void Series::negate() {
    for (auto& x : c_) x = -x;
}

void Series::scale(const mpq_class& c) {
    for (auto& x : c_) x *= c;
}

Series Series::operator-() const {
    Series r = *this;
    r.negate();
    return r;
}

Series operator+(const Series& a, const Series& b) {
    Series r(std::min(a.floor_, b.floor_), std::min(a.order_, b.order_));
    r.exact_ = a.exact_ && b.exact_ &&
               a.max_exponent().value_or(r.order_) <= r.order_ &&
               b.max_exponent().value_or(r.order_) <= r.order_;
    for (std::int64_t i = 0; i < r.size(); ++i) {
        Exponent e = r.floor_ + Exponent::from_steps(i);
        mpq_class v = (e >= a.floor_ && e <= a.order_) ? a.at(e) : mpq_class(0);
        if (e >= b.floor_ && e <= b.order_) v += b.at(e);
        r.c_[static_cast<std::size_t>(i)] = v;
    }
    return r;
}

Series operator-(const Series& a, const Series& b) {
    Series nb = -b;
    return a + nb;
}

Series operator*(const Series& a, const Series& b) {
    // Unknown tails limit validity: order = min over the nonzero supports,
    // except that exact factors impose no limit of their own.
    Exponent amin = a.min_exponent().value_or(a.order_);
    Exponent bmin = b.min_exponent().value_or(b.order_);
    Exponent ord;
    if (a.exact_ && b.exact_)
        ord = a.order_ + b.order_;
    else if (a.exact_)
        ord = b.order_ + amin;
    else if (b.exact_)
        ord = a.order_ + bmin;
    else
        ord = std::min(a.order_ + bmin, b.order_ + amin);
    Exponent flo = std::min(amin + bmin, Exponent::integer(0));
    Series r(flo, ord);
    r.exact_ = a.exact_ && b.exact_;
    for (std::int64_t i = 0; i < a.size(); ++i) {
        const mpq_class& ca = a.c_[static_cast<std::size_t>(i)];
        if (ca == 0) continue;
        Exponent ea = a.floor_ + Exponent::from_steps(i);
        if (ea + bmin > ord) break;
        for (std::int64_t j = 0; j < b.size(); ++j) {
            const mpq_class& cb = b.c_[static_cast<std::size_t>(j)];
            if (cb == 0) continue;
            Exponent e = ea + b.floor_ + Exponent::from_steps(j);
            if (e > ord) break;
            r.c_[static_cast<std::size_t>(r.idx(e))] += ca * cb;
        }
    }
    return r;
}

Series& Series::operator+=(const Series& o) { *this = *this + o; return *this; }

void Series::accumulate(const Series& o) {
    if (o.order_ < order_) throw Error("accumulate: operand order too low");
    exact_ = false;
    if (auto m = o.min_exponent()) grow_down(*m);
    for (std::int64_t i = 0; i < o.size(); ++i) {
        const mpq_class& v = o.c_[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        Exponent e = o.floor_ + Exponent::from_steps(i);
        if (e > order_) break;
        c_[static_cast<std::size_t>(idx(e))] += v;
    }
}
Series& Series::operator-=(const Series& o) { *this = *this - o; return *this; }

Series& Series::mul_one_minus(SignedAtom a) {
    if (a.exp <= Exponent::integer(0)) throw Error("mul_one_minus: exponent must be positive");
    if (exact_ && max_exponent().value_or(order_) + a.exp > order_) exact_ = false;
    // c'_e = c_e - sign * c_{e - a.exp}; walk downward so reads see old values.
    std::int64_t d = a.exp.steps();
    for (std::int64_t i = size() - 1; i >= 0; --i) {
        std::int64_t j = i - d;
        if (j < 0) break;
        if (c_[static_cast<std::size_t>(j)] == 0) continue;
        if (a.sign > 0)
            c_[static_cast<std::size_t>(i)] -= c_[static_cast<std::size_t>(j)];
        else
            c_[static_cast<std::size_t>(i)] += c_[static_cast<std::size_t>(j)];
    }
    return *this;
}

Series& Series::div_one_minus(SignedAtom a) {
    if (a.exp <= Exponent::integer(0)) throw Error("div_one_minus: exponent must be positive");
    exact_ = false;
    // Geometric expansion: c'_e = c_e + sign * c'_{e - a.exp}; walk upward.
    std::int64_t d = a.exp.steps();
    for (std::int64_t i = 0; i < size(); ++i) {
        std::int64_t j = i - d;
        if (j < 0) continue;
        if (c_[static_cast<std::size_t>(j)] == 0) continue;
        if (a.sign > 0)
            c_[static_cast<std::size_t>(i)] += c_[static_cast<std::size_t>(j)];
        else
            c_[static_cast<std::size_t>(i)] -= c_[static_cast<std::size_t>(j)];
    }
    return *this;
}

Series Series::inverted() const {
    auto me = min_exponent();
    if (!me) throw ZeroLeadingTerm("inverting a series with no visible nonzero term");
    Exponent e = *me;
    Exponent n = order_ - e;  // the unit part is known mod q^{n+}
    // u = q^{-e} * this / c  is 1 + higher terms; invert u by recurrence.
    mpq_class c = at(e);
    std::int64_t len = n.steps() + 1;
    std::vector<mpq_class> u(static_cast<std::size_t>(len)), v(static_cast<std::size_t>(len));
    for (std::int64_t i = 0; i < len; ++i) {
        Exponent ee = e + Exponent::from_steps(i);
        u[static_cast<std::size_t>(i)] = at(ee) / c;
    }
    v[0] = 1;
    for (std::int64_t k = 1; k < len; ++k) {
        mpq_class s = 0;
        for (std::int64_t j = 1; j <= k; ++j)
            if (u[static_cast<std::size_t>(j)] != 0 && v[static_cast<std::size_t>(k - j)] != 0)
                s += u[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(k - j)];
        v[static_cast<std::size_t>(k)] = -s;
    }
    // result = (1/c) q^{-e} * v, valid to order - 2e
    Exponent rord = order_ - e - e;
    Series r(std::min(-e, Exponent::integer(0)), rord);
    for (std::int64_t i = 0; i < len; ++i) {
        Exponent ee = -e + Exponent::from_steps(i);
        if (ee > rord) break;
        if (v[static_cast<std::size_t>(i)] != 0) r.set(ee, v[static_cast<std::size_t>(i)] / c);
    }
    return r;
}

std::optional<Exponent> Series::first_mismatch(const Series& a, const Series& b) {
    Exponent lo = std::min(a.floor_, b.floor_);
    Exponent hi = std::min(a.order_, b.order_);
    for (Exponent e = lo; e <= hi; e += Exponent::from_steps(1)) {
        const mpq_class& x = (e >= a.floor_) ? a.at(e) : kZero;
        const mpq_class& y = (e >= b.floor_) ? b.at(e) : kZero;
        if (x != y) return e;
    }
    return std::nullopt;
}

bool Series::agree(const Series& a, const Series& b) { return !first_mismatch(a, b).has_value(); }

bool Series::integral_nonnegative(Exponent from) const {
    for (Exponent e = std::max(from, floor_); e <= order_; e += Exponent::from_steps(1)) {
        const mpq_class& v = at(e);
        if (v.get_den() != 1) return false;
        if (v < 0) return false;
    }
    return true;
}

std::string Series::str(int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    bool first = true;
    for (std::int64_t i = 0; i < size() && shown < max_terms; ++i) {
        const mpq_class& v = c_[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        Exponent e = floor_ + Exponent::from_steps(i);
        if (!first) os << " + ";
        os << v.get_str();
        if (!(e == Exponent::integer(0))) os << "*q^" << e.str();
        first = false;
        ++shown;
    }
    if (first) os << "0";
    os << " + O(q^" << (order_ + Exponent::from_steps(1)).str() << ")";
    return os.str();
}

}  // namespace qrr
