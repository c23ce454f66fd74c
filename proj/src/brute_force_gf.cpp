#include "symmetria/gf_catalog.hpp"

#include "symmetria/statistics.hpp"

namespace symmetria {

TruncatedSeries bf_paths(PathFamily family, int order,
                         const std::vector<std::pair<Var, PathStatFn>>& stats,
                         const EnumLimits& limits) {
    TruncatedSeries r(order);
    bool negative_seen = false;
    for (int n = 0; n <= order; ++n) {
        for (const PathWord& w : enumerate(family, n, limits)) {
            Monomial m;
            for (const auto& [var, fn] : stats) {
                int e = fn(w);
                if (e < 0) negative_seen = true;
                m = m.times(Monomial::of(var, e));
            }
            r.add_term(n, m, 1);
        }
    }
    if (negative_seen) r.set_laurent(Var::y);
    return r;
}

TruncatedSeries bf_partitions_square(int order, Var var, const PartitionStatFn& stat,
                                     const EnumLimits& limits) {
    TruncatedSeries r(order);
    for (int n = 0; n <= order; ++n)
        for (const Partition& p : enumerate_partitions_in_square(n, limits))
            r.add_term(n, Monomial::of(var, stat(p, n)), 1);
    return r;
}

TruncatedSeries bf_partitions_sp(int order, Var var,
                                 const std::function<int(const Partition&)>& stat,
                                 const EnumLimits& limits) {
    TruncatedSeries r(order);
    for (int n = 0; n <= order; ++n)
        for (const Partition& p : enumerate_partitions_by_semiperimeter(n, limits))
            r.add_term(n, Monomial::of(var, stat(p)), 1);
    return r;
}

TruncatedSeries bf_partitions_minsq(int order, Var var, const PartitionStatFn& stat,
                                    const EnumLimits& limits) {
    TruncatedSeries r(order);
    for (int m = 0; m <= order; ++m)
        for (const Partition& p : enumerate_partitions_by_min_square(m, limits))
            r.add_term(m, Monomial::of(var, stat(p, m)), 1);
    return r;
}

TruncatedSeries bf_bargraphs_ub(int order, bool with_xy, const EnumLimits& limits) {
    TruncatedSeries r(order);
    for (int sp = 0; sp <= order; ++sp) {
        for (const Bargraph& b : enumerate_unimodal_centered_bargraphs(sp, limits)) {
            Monomial m = Monomial::of(Var::s, ds_bargraph(b));
            if (with_xy)
                m = m.times(Monomial::of(Var::x, b.width()))
                        .times(Monomial::of(Var::y, b.max_height()));
            r.add_term(sp, m, 1);
        }
    }
    return r;
}

TruncatedSeries bf_ballot_b0b(int order, const EnumLimits& limits) {
    TruncatedSeries r(order);
    for (int n = 0; n <= order; ++n)
        for (int b = n % 2; b <= n; b += 2)
            r.add_term(n, Monomial::of(Var::y, b),
                       Rat(static_cast<long long>(enumerate_ballot_paths(0, b, n, limits).size())));
    return r;
}

}  // namespace symmetria
