#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symmetria/bargraphs.hpp"
#include "symmetria/numeric.hpp"
#include "symmetria/partitions.hpp"

#include <set>

using namespace symmetria;

TEST_CASE("conjugation is an involution and flips the diagram") {
    CHECK(conjugate(Partition{{3, 1}}) == Partition{{2, 1, 1}});
    CHECK(conjugate(Partition{{}}) == Partition{{}});
    CHECK(conjugate(Partition{{3, 3, 1}}) == Partition{{3, 2, 2}});
    for (const auto& p : enumerate_partitions_in_square(5, {})) {
        CHECK(conjugate(conjugate(p)) == p);
        CHECK(conjugate(p).weight() == p.weight());
    }
}

TEST_CASE("durfee square and minimal bounding square") {
    CHECK(durfee(Partition{{}}) == 0);
    CHECK(durfee(Partition{{1}}) == 1);
    CHECK(durfee(Partition{{3, 3, 1}}) == 2);
    CHECK(durfee(Partition{{4, 4, 4, 4}}) == 4);
    CHECK(min_square(Partition{{}}) == 0);
    CHECK(min_square(Partition{{2, 1}}) == 2);
    CHECK(min_square(Partition{{4, 1}}) == 4);
    CHECK(min_square(Partition{{1, 1, 1}}) == 3);
}

TEST_CASE("partitions in the n x n square are counted by central binomials") {
    for (int n = 0; n <= 6; ++n) {
        auto all = enumerate_partitions_in_square(n, {});
        CHECK(Int(all.size()) == binomial(2 * n, n));
        std::set<Partition> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        for (const auto& p : all) {
            CHECK(is_valid_partition(p));
            CHECK(p.first_part() <= n);
            CHECK(p.num_parts() <= n);
        }
    }
}

TEST_CASE("partitions by semiperimeter double with each extra unit") {
    // Semiperimeter n = first part + number of parts; 2^(n-2) partitions for
    // n >= 2, none for n = 1, only the empty partition at n = 0.
    CHECK(enumerate_partitions_by_semiperimeter(0, {}).size() == 1);
    CHECK(enumerate_partitions_by_semiperimeter(1, {}).empty());
    for (int n = 2; n <= 10; ++n) {
        auto all = enumerate_partitions_by_semiperimeter(n, {});
        CHECK(Int(all.size()) == pow2(n - 2));
        for (const auto& p : all)
            CHECK(p.first_part() + p.num_parts() == n);
    }
}

TEST_CASE("partitions by minimal square refine the square enumeration") {
    for (int m = 1; m <= 5; ++m) {
        auto all = enumerate_partitions_by_min_square(m, {});
        CHECK(Int(all.size()) == binomial(2 * m, m) - binomial(2 * m - 2, m - 1));
        for (const auto& p : all) CHECK(min_square(p) == m);
    }
}

TEST_CASE("bargraph basics") {
    Bargraph b{{2, 3, 2}};
    CHECK(is_valid_bargraph(b));
    CHECK(b.width() == 3);
    CHECK(b.max_height() == 3);
    CHECK(b.semiperimeter() == 6);
    CHECK(is_unimodal_centered(b));
    CHECK_FALSE(is_unimodal_centered(Bargraph{{2, 1, 2}}));
    CHECK(is_unimodal_centered(Bargraph{{1, 2, 2, 1}}));
    // The maximum may sit on either middle column of an even width...
    CHECK(is_unimodal_centered(Bargraph{{2, 2, 1, 1}}));
    CHECK(is_unimodal_centered(Bargraph{{1, 1, 2, 2}}));
    // ...but not strictly off center.
    CHECK_FALSE(is_unimodal_centered(Bargraph{{2, 1, 1, 1}}));
    CHECK_FALSE(is_unimodal_centered(Bargraph{{1, 1, 1, 2}}));
    CHECK_FALSE(is_valid_bargraph(Bargraph{{}}));
    CHECK_FALSE(is_valid_bargraph(Bargraph{{1, 0, 1}}));
}

TEST_CASE("boundary word has one N per height unit and one E per column") {
    Bargraph b{{1, 3, 2}};
    PathWord w = boundary_word(b);
    int n_steps = 0, e_steps = 0;
    for (Step s : w.steps) {
        if (s == Step::N) ++n_steps;
        if (s == Step::E) ++e_steps;
    }
    CHECK(e_steps == b.width());
    CHECK(n_steps >= b.max_height());
}

TEST_CASE("unimodal centered bargraphs by semiperimeter") {
    CHECK(enumerate_unimodal_centered_bargraphs(1, {}).empty());
    CHECK(enumerate_unimodal_centered_bargraphs(2, {}) ==
          std::vector<Bargraph>{Bargraph{{1}}});
    // Counts 1, 2, 5, 11, 26, 63, 153: same numbers that grade the
    // doubly-marked bicolored Motzkin specialization.
    const long long want[] = {1, 2, 5, 11, 26, 63, 153};
    for (int sp = 2; sp <= 8; ++sp) {
        auto all = enumerate_unimodal_centered_bargraphs(sp, {});
        CHECK(static_cast<long long>(all.size()) == want[sp - 2]);
        for (const auto& b : all) {
            CHECK(is_valid_bargraph(b));
            CHECK(is_unimodal_centered(b));
            CHECK(b.semiperimeter() == sp);
        }
    }
}
