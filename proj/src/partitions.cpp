#include "qrr/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qrr/errors.hpp"
#include "qrr/factor_bag.hpp"

namespace qrr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1]) throw BadParams("Partition: parts must be weakly decreasing");
    if (!parts_.empty() && parts_.back() < 0) throw BadParams("Partition: negative part");
}

Partition Partition::rectangle(int part, int count) {
    if (part == 0 || count == 0) return Partition();
    return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
}

std::int64_t Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::int64_t Partition::nstat() const {
    std::int64_t n = 0;
    for (int i = 1; i <= length(); ++i) n += static_cast<std::int64_t>(i - 1) * part(i);
    return n;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= largest(); ++j) {
        int cnt = 0;
        for (int p : parts_)
            if (p >= j) ++cnt;
        c.push_back(cnt);
    }
    return Partition(std::move(c));
}

Partition Partition::doubled() const {
    std::vector<int> d = parts_;
    for (int& p : d) p *= 2;
    return Partition(std::move(d));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (part(i) < mu.part(i)) return false;
    return true;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

Series b_lambda(const Partition& la, Exponent base, Exponent order) {
    FactorBag bag;
    for (int i = 1; i <= la.largest(); ++i) bag.mul_poch(SignedAtom::q_pow(base), base, la.multiplicity(i), 1);
    return bag.to_series(order);
}

namespace {
void enum_rec(int max_part, std::int64_t remaining, std::vector<int>& cur,
              std::vector<Partition>& out) {
    out.emplace_back(cur);
    int cap = cur.empty() ? max_part : cur.back();
    for (int p = cap; p >= 1; --p) {
        if (p > remaining) continue;
        cur.push_back(p);
        enum_rec(max_part, remaining - p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int max_part, std::int64_t max_size) {
    std::vector<int> cur;
    std::vector<Partition> out;
    enum_rec(max_part, max_size, cur, out);
    std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.parts() > b.parts();  // lexicographically descending within a size
    });
    return out;
}

namespace {
/// Enumerate all partitions contained in `top`, via recursion on rows.
void sub_rec(const Partition& top, int row, int cap, std::vector<int>& cur,
             std::vector<Partition>& out) {
    if (row > top.length()) {
        out.emplace_back(cur);
        return;
    }
    // choose cur_row in [0, min(cap, top_row)]; 0 means stop (all further rows 0)
    int hi = std::min(cap, top.part(row));
    for (int v = hi; v >= 0; --v) {
        if (v == 0) {
            out.emplace_back(cur);
            return;
        }
        cur.push_back(v);
        sub_rec(top, row + 1, v, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> subpartitions(const Partition& top) {
    std::vector<int> cur;
    std::vector<Partition> out;
    sub_rec(top, 1, top.largest(), cur, out);
    return out;
}

void flag_rec(const Partition& below, int levels_left, std::vector<Partition>& chain,
              std::vector<Flag>& out) {
    if (levels_left == 0) {
        if (below.length() == 0) out.push_back(Flag{chain});
        return;
    }
    for (const Partition& mu : subpartitions(below)) {
        chain.push_back(mu);
        flag_rec(mu, levels_left - 1, chain, out);
        chain.pop_back();
    }
}
}  // namespace

std::vector<Flag> enumerate_flags(const Partition& top, int n) {
    std::vector<Flag> out;
    std::vector<Partition> chain{top};
    flag_rec(top, n, chain, out);
    return out;
}

}  // namespace qrr
