#include "symmetria/statistics.hpp"

#include <stdexcept>

namespace symmetria {

namespace {

// Heights of an even-length U/D/H word, with the basic shape checks shared
// by the mirror statistics.
std::vector<int> mirror_heights(const PathWord& w) {
    if (w.steps.size() % 2 != 0)
        throw std::invalid_argument("mirror statistic: odd-length word");
    return heights(w);
}

}  // namespace

int ds_path(const PathWord& w) {
    std::vector<int> h = mirror_heights(w);
    long long n = static_cast<long long>(w.steps.size()) / 2;
    auto mirrored = [&](long long i) {
        return h[static_cast<size_t>(i)] == h[static_cast<size_t>(2 * n - i)];
    };
    int count = 0;
    // Step i is its own mirror image iff both of its endpoints are.
    for (long long i = 1; i <= n; ++i)
        if (mirrored(i - 1) && mirrored(i)) ++count;
    return count;
}

int sv(const PathWord& w) {
    std::vector<int> h = mirror_heights(w);
    long long n = static_cast<long long>(w.steps.size()) / 2;
    int count = 0;
    for (long long i = 0; i < n; ++i)
        if (h[static_cast<size_t>(i)] == h[static_cast<size_t>(2 * n - i)]) ++count;
    return count;
}

int ret(const PathWord& w) {
    std::vector<int> h = heights(w);
    int count = 0;
    for (size_t i = 1; i < h.size(); ++i)
        if (h[i] == 0) ++count;
    return count;
}

int pho(const PathWord& w) {
    std::vector<int> h = heights(w);
    int count = 0;
    for (size_t i = 0; i + 1 < w.steps.size(); ++i)
        if (w.steps[i] == Step::U && w.steps[i + 1] == Step::D && h[i + 1] == 1)
            ++count;
    return count;
}

int hm(const PathWord& w) {
    std::vector<int> h = mirror_heights(w);
    return h[w.steps.size() / 2];
}

int ds_square(const Partition& p, int n) {
    if (!fits_in_square(p, n))
        throw std::invalid_argument("ds_square: diagram does not fit in the square");
    Partition q = conjugate(p);
    int count = 0;
    for (int i = 1; i <= n; ++i)
        if (part_at(p, i) == part_at(q, i)) ++count;
    return count;
}

int ds_partition(const Partition& p) {
    return ds_square(p, min_square(p));
}

int dsh(const Partition& p) {
    Partition q = conjugate(p);
    int d = durfee(p);
    int count = 0;
    for (int i = 1; i <= d; ++i)
        if (part_at(p, i) == part_at(q, i)) ++count;
    return count;
}

int ds_bargraph(const Bargraph& b) {
    int k = b.width();
    int count = 0;
    for (int i = 1; i <= k / 2; ++i)
        if (b.cols[static_cast<size_t>(i) - 1] == b.cols[static_cast<size_t>(k - i)])
            ++count;
    return count;
}

}  // namespace symmetria
