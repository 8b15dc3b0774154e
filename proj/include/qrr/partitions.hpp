#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qrr/series.hpp"

namespace qrr {

/// Integer partition, weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition rectangle(int part, int count);  // (part^count)

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    std::int64_t size() const;                 // |lambda|
    int part(int i) const;                     // 1-based; 0 past the end
    int largest() const { return parts_.empty() ? 0 : parts_[0]; }
    int multiplicity(int i) const;             // number of parts equal to i
    std::int64_t nstat() const;                // n(lambda) = sum (i-1) lambda_i
    Partition conjugate() const;
    Partition doubled() const;                 // 2*lambda (each part doubled)
    bool contains(const Partition& mu) const;  // containment of diagrams

    friend auto operator<=>(const Partition&, const Partition&) = default;
    std::string str() const;

private:
    std::vector<int> parts_;
};

/// b_lambda(q^base) = prod_{i>=1} (q^base; q^base)_{m_i(lambda)}.
Series b_lambda(const Partition& la, Exponent base, Exponent order);

/// All partitions with parts <= max_part and |lambda| <= max_size, ordered by
/// size then lexicographically descending within a size.
std::vector<Partition> enumerate_partitions(int max_part, std::int64_t max_size);

/// A flag of partitions  0 = mu^(n) <= ... <= mu^(1) <= mu^(0) = top.
struct Flag {
    std::vector<Partition> chain;  // chain[a] = mu^(a), a = 0..n
};

/// All flags of length n over a fixed top partition.
std::vector<Flag> enumerate_flags(const Partition& top, int n);

}  // namespace qrr
