#pragma once

// Integer partitions viewed through their Young diagrams: conjugation,
// Durfee square, semiperimeter, and the three exhaustive enumerations used
// by the statistic oracles (inside an n x n square, by semiperimeter, and by
// minimal bounding square).

#include "symmetria/numeric.hpp"

#include <string>
#include <vector>

namespace symmetria {

// Weakly decreasing positive parts; the empty partition is valid.
struct Partition {
    std::vector<int> parts;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts < o.parts; }

    int num_parts() const { return static_cast<int>(parts.size()); }
    int first_part() const { return parts.empty() ? 0 : parts.front(); }
    long long weight() const;  // number of boxes
};

bool is_valid_partition(const Partition& p);
std::string to_string(const Partition& p);

Partition conjugate(const Partition& p);

// Part i (1-based), 0 beyond the last part.
inline int part_at(const Partition& p, int i) {
    return (i >= 1 && i <= p.num_parts()) ? p.parts[static_cast<size_t>(i) - 1] : 0;
}

// Side of the Durfee square: largest d with at least d parts >= d.
int durfee(const Partition& p);

// Semiperimeter: first part + number of parts (0 for the empty partition).
inline int semiperimeter(const Partition& p) {
    return p.first_part() + p.num_parts();
}

// Smallest m with the diagram inside an m x m square: max(first part, #parts).
inline int min_square(const Partition& p) {
    return p.first_part() > p.num_parts() ? p.first_part() : p.num_parts();
}

inline bool fits_in_square(const Partition& p, int n) {
    return p.first_part() <= n && p.num_parts() <= n;
}

// All partitions with at most n parts, each at most n (C(2n, n) of them).
std::vector<Partition> enumerate_partitions_in_square(int n, const EnumLimits& limits = {});

// All partitions with first part + number of parts = n (2^(n-2) of them for
// n >= 2; empty result for n < 2).
std::vector<Partition> enumerate_partitions_by_semiperimeter(int n, const EnumLimits& limits = {});

// All partitions with max(first part, #parts) = m.
std::vector<Partition> enumerate_partitions_by_min_square(int m, const EnumLimits& limits = {});

}  // namespace symmetria
