#include "symmetria/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace symmetria {

namespace {

void check_budget(const std::vector<Partition>& out, const EnumLimits& limits,
                  const char* what) {
    if (static_cast<long long>(out.size()) >= limits.max_objects)
        throw resource_limit_error(std::string("enumerate partitions: budget exceeded (") +
                                   what + ")");
}

}  // namespace

long long Partition::weight() const {
    long long w = 0;
    for (int p : parts) w += p;
    return w;
}

bool is_valid_partition(const Partition& p) {
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i] <= 0) return false;
        if (i > 0 && p.parts[i] > p.parts[i - 1]) return false;
    }
    return true;
}

std::string to_string(const Partition& p) {
    std::string out = "(";
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.parts[i]);
    }
    out += ")";
    return out;
}

Partition conjugate(const Partition& p) {
    Partition q;
    int rows = p.num_parts();
    for (int j = 1; j <= p.first_part(); ++j) {
        int count = 0;
        for (int i = 0; i < rows; ++i)
            if (p.parts[static_cast<size_t>(i)] >= j) ++count;
        q.parts.push_back(count);
    }
    return q;
}

int durfee(const Partition& p) {
    int d = 0;
    while (part_at(p, d + 1) >= d + 1) ++d;
    return d;
}

std::vector<Partition> enumerate_partitions_in_square(int n, const EnumLimits& limits) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions_in_square: negative n");
    std::vector<Partition> out;
    std::vector<int> parts;
    // Parts weakly decreasing, each in [1, n], at most n of them.
    std::function<void(int)> rec = [&](int maxpart) {
        check_budget(out, limits, "square");
        out.push_back(Partition{parts});
        if (static_cast<int>(parts.size()) == n) return;
        for (int v = maxpart; v >= 1; --v) {
            parts.push_back(v);
            rec(v);
            parts.pop_back();
        }
    };
    rec(n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> enumerate_partitions_by_semiperimeter(int n, const EnumLimits& limits) {
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions_by_semiperimeter: negative n");
    if (n == 0) return {Partition{}};  // the empty partition has semiperimeter 0
    std::vector<Partition> out;
    // first part + number of parts = n forces first part = n - k with k
    // parts; remaining k-1 parts weakly decreasing in [1, n-k].
    for (int k = 1; k <= n - 1; ++k) {
        int first = n - k;
        std::vector<int> parts = {first};
        std::function<void(int, int)> rec = [&](int left, int maxpart) {
            if (left == 0) {
                check_budget(out, limits, "semiperimeter");
                out.push_back(Partition{parts});
                return;
            }
            for (int v = std::min(maxpart, first); v >= 1; --v) {
                parts.push_back(v);
                rec(left - 1, v);
                parts.pop_back();
            }
        };
        rec(k - 1, first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> enumerate_partitions_by_min_square(int m, const EnumLimits& limits) {
    if (m < 0)
        throw std::invalid_argument("enumerate_partitions_by_min_square: negative m");
    if (m == 0) return {Partition{}};
    // Partitions in the m x m square with first part = m or number of parts
    // = m (inclusion of both is allowed).
    std::vector<Partition> out;
    for (const Partition& p : enumerate_partitions_in_square(m, limits)) {
        if (p.first_part() == m || p.num_parts() == m) {
            check_budget(out, limits, "min_square");
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace symmetria
