#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symmetria/distributions.hpp"
#include "symmetria/gf_catalog.hpp"
#include "symmetria/numeric.hpp"
#include "symmetria/walks.hpp"

using namespace symmetria;

TEST_CASE("walk tables start at the origin and stay in the quarter plane") {
    WalkWeighting w;
    w.mark_steps_on_axis = true;
    auto tables = walk_dp(6, w);
    REQUIRE(tables.size() == 7);
    CHECK(tables[0].counts.size() == 1);
    CHECK(tables[0].counts.at({0, 0, 0}) == 1);
    for (const auto& t : tables)
        for (const auto& [key, c] : t.counts) {
            auto [i, j, k] = key;
            CHECK(i >= 0);
            CHECK(j >= 0);
            CHECK(k >= 0);
            CHECK(c > 0);
        }
    // Length 1: the only legal move from the origin is E, which lies on the
    // axis and is marked.
    CHECK(tables[1].counts.size() == 1);
    CHECK(tables[1].counts.at({1, 0, 1}) == 1);
}

TEST_CASE("walks ending on the x-axis are equinumerous with Dyck paths") {
    WalkWeighting w;
    w.mark_steps_on_axis = true;
    auto tables = walk_dp(10, w);
    for (int n = 0; n <= 10; ++n) {
        Int total = 0;
        for (const auto& [key, c] : tables[n].counts)
            if (std::get<1>(key) == 0) total += c;
        CHECK(total == catalan(n));
    }
}

TEST_CASE("marked walk histograms reproduce the Dyck statistic tables") {
    // ds rows for semilength up to 7.
    using Row = std::vector<long long>;
    auto row = [](DistClass c, int n) {
        Histogram h = exact_distribution(c, n);
        Row r;
        for (int k = 1; k <= n; ++k) {
            auto it = h.counts.find(k);
            r.push_back(it == h.counts.end() ? 0 : it->second.convert_to<long long>());
        }
        return r;
    };
    CHECK(row(DistClass::DyckDs, 1) == Row{1});
    CHECK(row(DistClass::DyckDs, 2) == Row{0, 2});
    CHECK(row(DistClass::DyckDs, 3) == Row{2, 0, 3});
    CHECK(row(DistClass::DyckDs, 4) == Row{2, 6, 0, 6});
    CHECK(row(DistClass::DyckDs, 5) == Row{8, 8, 16, 0, 10});
    CHECK(row(DistClass::DyckDs, 6) == Row{16, 32, 24, 40, 0, 20});
    CHECK(row(DistClass::DyckDs, 7) == Row{52, 84, 108, 60, 90, 0, 35});

    CHECK(row(DistClass::DyckSv, 1) == Row{1});
    CHECK(row(DistClass::DyckSv, 2) == Row{0, 2});
    CHECK(row(DistClass::DyckSv, 3) == Row{0, 2, 3});
    CHECK(row(DistClass::DyckSv, 4) == Row{0, 2, 6, 6});
    CHECK(row(DistClass::DyckSv, 5) == Row{0, 4, 12, 16, 10});
    CHECK(row(DistClass::DyckSv, 6) == Row{0, 8, 24, 40, 40, 20});
    CHECK(row(DistClass::DyckSv, 7) == Row{0, 20, 60, 104, 120, 90, 35});
}

TEST_CASE("both functional-equation residuals vanish") {
    CHECK(feq_residual(10, WalkMark::Ds).is_zero());
    CHECK(feq_residual(10, WalkMark::Sv).is_zero());
}

TEST_CASE("the residual detects a perturbed kernel") {
    CHECK_FALSE(feq_residual(8, WalkMark::Ds, true).is_zero());
    CHECK_FALSE(feq_residual(8, WalkMark::Sv, true).is_zero());
}

TEST_CASE("walk series at s=1 counts all Dyck paths") {
    auto d = walk_gf(10, WalkMark::Ds)
                 .subst(Var::x, Rat(1))
                 .subst(Var::y, Rat(0))
                 .subst(Var::s, Rat(1));
    for (int n = 0; n <= 10; ++n) CHECK(d.coeff_unit(n) == Rat(catalan(n)));
}

TEST_CASE("specialization battery") {
    for (const auto& c : walk_specialization_checks(10)) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.ok);
        CHECK(c.compared >= 10);
    }
}

TEST_CASE("midpoint-height series: three computations agree") {
    auto w = hm_dyck_walks(10);
    auto b = hm_dyck_ballot(10);
    auto s = hm_dyck_squared(10);
    CHECK(w == b);
    CHECK(b == s);
    // Rows of squared counts from the axis.
    CHECK(b.coeff(4, Monomial::unit()) == Rat(4));
    CHECK(b.coeff(4, Monomial::of(Var::y, 2)) == Rat(9));
    CHECK(b.coeff(4, Monomial::of(Var::y, 4)) == Rat(1));
    CHECK(b.coeff(7, Monomial::of(Var::y, 1)) == Rat(196));
    CHECK(b.coeff(7, Monomial::of(Var::y, 3)) == Rat(196));
    CHECK(b.coeff(7, Monomial::of(Var::y, 5)) == Rat(36));
    CHECK(b.coeff(7, Monomial::of(Var::y, 7)) == Rat(1));
    // At y=1 the series counts all Dyck paths.
    auto total = b.subst(Var::y, Rat(1));
    for (int n = 0; n <= 10; ++n) CHECK(total.coeff_unit(n) == Rat(catalan(n)));
    // At y=0 only even semilengths survive, with squared Catalan counts.
    auto zero = b.subst(Var::y, Rat(0));
    for (int n = 0; n <= 10; ++n)
        CHECK(zero.coeff_unit(n) ==
              (n % 2 == 0 ? Rat(catalan(n / 2) * catalan(n / 2)) : Rat(0)));
}
