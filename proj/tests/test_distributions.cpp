#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symmetria/distributions.hpp"

#include <cmath>
#include <sstream>

using namespace symmetria;

namespace {

Histogram hist(long long n, std::initializer_list<std::pair<long long, long long>> kv) {
    Histogram h;
    h.n = n;
    for (const auto& [k, c] : kv) h.counts[k] = Int(c);
    return h;
}

}  // namespace

TEST_CASE("exact distributions reproduce the table rows") {
    auto gd4 = exact_distribution(DistClass::GrandDyckDs, 4);
    CHECK(gd4.counts == hist(4, {{0, 14}, {1, 16}, {2, 24}, {4, 16}}).counts);
    auto dv6 = exact_distribution(DistClass::DyckSv, 6);
    CHECK(dv6.counts == hist(6, {{2, 8}, {3, 24}, {4, 40}, {5, 40}, {6, 20}}).counts);
    auto sp7 = exact_distribution(DistClass::SpDs, 7);
    CHECK(sp7.counts == hist(7, {{0, 16}, {1, 8}, {2, 8}}).counts);
}

TEST_CASE("totals match the family counts") {
    for (int n = 1; n <= 10; ++n) {
        CHECK(exact_distribution(DistClass::GrandDyckDs, n).total() == binomial(2 * n, n));
        CHECK(exact_distribution(DistClass::GrandDyckSv, n).total() == binomial(2 * n, n));
        CHECK(exact_distribution(DistClass::GrandDyckHm, n).total() == binomial(2 * n, n));
        CHECK(exact_distribution(DistClass::SquareDs, n).total() == binomial(2 * n, n));
        CHECK(exact_distribution(DistClass::DyckDs, n).total() == catalan(n));
        CHECK(exact_distribution(DistClass::DyckSv, n).total() == catalan(n));
        CHECK(exact_distribution(DistClass::DyckHm, n).total() == catalan(n));
        if (n >= 2) CHECK(exact_distribution(DistClass::SpDs, n).total() == pow2(n - 2));
    }
}

TEST_CASE("fast path equals the enumeration oracle") {
    const DistClass classes[] = {
        DistClass::GrandDyckDs,  DistClass::GrandDyckSv, DistClass::GrandDyckPho,
        DistClass::GrandDyckHm,  DistClass::DyckDs,      DistClass::DyckSv,
        DistClass::DyckHm,       DistClass::SquareDs,    DistClass::SquareDsh,
        DistClass::MinSquareDs,  DistClass::SpDs,        DistClass::UnimodalBargraphDs,
    };
    for (DistClass c : classes)
        for (int n = 1; n <= 7; ++n) {
            INFO(dist_class_name(c), " n=", n);
            auto fast = exact_distribution(c, n);
            auto slow = exact_distribution_oracle(c, n);
            CHECK(fast.counts == slow.counts);
            CHECK(fast.n == slow.n);
        }
}

TEST_CASE("midpoint heights can be negative for grand paths only") {
    auto grand = exact_distribution(DistClass::GrandDyckHm, 3);
    CHECK(grand.counts.count(-3) == 1);
    CHECK(grand.counts.at(-3) == 1);
    CHECK(grand.counts.at(-1) == 9);
    auto dyck = exact_distribution(DistClass::DyckHm, 3);
    for (const auto& [k, c] : dyck.counts) CHECK(k >= 0);
}

TEST_CASE("moments of simple histograms") {
    Moments point = histogram_moments(hist(5, {{3, 7}}));
    CHECK(point.mean == Rat(3));
    CHECK(point.variance == Rat(0));
    Moments uniform = histogram_moments(hist(1, {{0, 1}, {1, 1}}));
    CHECK(uniform.mean == Rat(1, 2));
    CHECK(uniform.variance == Rat(1, 4));
    CHECK_THROWS(histogram_moments(Histogram{}));
}

TEST_CASE("closed-form moments") {
    // Semilength 2: mean 4/3 from the counts (0*2 + 2*4)/6.
    Moments m = closed_form_moments(DistClass::GrandDyckDs, 2);
    CHECK(m.mean == Rat(4, 3));
    Moments s = closed_form_moments(DistClass::GrandDyckSv, 2);
    CHECK(s.mean == Rat(5, 3));
    for (int n = 1; n <= 12; ++n)
        for (DistClass c : {DistClass::GrandDyckDs, DistClass::GrandDyckSv}) {
            Moments closed = closed_form_moments(c, n);
            Moments direct = histogram_moments(exact_distribution(c, n));
            CHECK(closed.mean == direct.mean);
            CHECK(closed.variance == direct.variance);
        }
    CHECK_THROWS_AS(closed_form_moments(DistClass::DyckDs, 4), std::invalid_argument);
}

TEST_CASE("limit law evaluation") {
    LimitLaw r = parse_law("rayleigh", 1.0);
    CHECK(r.cdf(0.0) == doctest::Approx(0.0));
    // Rayleigh median is sigma * sqrt(2 ln 2).
    CHECK(r.cdf(std::sqrt(2.0 * std::log(2.0))) == doctest::Approx(0.5));
    CHECK(r.density(1.0) == doctest::Approx(std::exp(-0.5)));
    LimitLaw h = parse_law("halfnormal", 0.5);
    CHECK(h.cdf(0.0) == doctest::Approx(0.0));
    CHECK(h.cdf(10.0) == doctest::Approx(1.0));
    // Half-normal density at 0 is sqrt(2/pi)/sigma.
    CHECK(h.density(0.0) == doctest::Approx(std::sqrt(2.0 / std::acos(-1.0)) / 0.5));
    CHECK_THROWS_AS(parse_law("cauchy", 1.0), std::invalid_argument);
    CHECK_THROWS_AS(parse_law("rayleigh", -1.0), std::invalid_argument);
}

TEST_CASE("reference law parameters") {
    CHECK(reference_law(DistClass::GrandDyckDs).sigma ==
          doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(reference_law(DistClass::GrandDyckSv).sigma == doctest::Approx(std::sqrt(2.0)));
    CHECK(reference_law(DistClass::SquareDsh).sigma ==
          doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))));
    CHECK(reference_law(DistClass::UnimodalBargraphDs).sigma ==
          doctest::Approx((3.0 - std::sqrt(5.0)) / (2.0 * std::pow(20.0, 0.25))));
    CHECK(reference_law(DistClass::SpDs).sigma == doctest::Approx(0.5));
    CHECK(reference_law(DistClass::SpDs).kind == LimitLaw::Kind::HalfNormal);
    CHECK_THROWS_AS(reference_law(DistClass::DyckDs), std::invalid_argument);
}

TEST_CASE("law distance falls with n on the grand Dyck ds distribution") {
    LimitLaw law = reference_law(DistClass::GrandDyckDs);
    double d50 = limit_law_distance(exact_distribution(DistClass::GrandDyckDs, 50), law)
                     .kolmogorov;
    double d200 = limit_law_distance(exact_distribution(DistClass::GrandDyckDs, 200), law)
                      .kolmogorov;
    CHECK(d50 > d200);
    CHECK(d50 < 0.2);
    CHECK(d200 < 0.07);
    CHECK(d200 > 0.0);
}

TEST_CASE("csv export schema") {
    std::ostringstream out;
    write_csv(hist(3, {{0, 4}, {2, 3}}), out);
    CHECK(out.str() == "n,k,count,total\n3,0,4,7\n3,2,3,7\n");
}

TEST_CASE("class name round trips") {
    CHECK(parse_dist_class("grand_dyck", "ds") == DistClass::GrandDyckDs);
    CHECK(parse_dist_class("dyck", "hm") == DistClass::DyckHm);
    CHECK(parse_dist_class("unimodal_bargraph", "ds") == DistClass::UnimodalBargraphDs);
    CHECK(parse_dist_class("sp", "ds") == DistClass::SpDs);
    CHECK_THROWS_AS(parse_dist_class("dyck", "dsh"), std::invalid_argument);
    CHECK(std::string(dist_class_name(DistClass::SquareDsh)) == "square_dsh");
}
