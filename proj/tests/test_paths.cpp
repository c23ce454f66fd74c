#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symmetria/numeric.hpp"
#include "symmetria/paths.hpp"

#include <set>

using namespace symmetria;

namespace {

PathWord word(PathFamily f, std::initializer_list<Step> steps) {
    return PathWord{f, std::vector<Step>(steps), 0, 0};
}

}  // namespace

TEST_CASE("enumeration counts match the classical sequences") {
    // Dyck: Catalan numbers.
    for (int n = 0; n <= 7; ++n)
        CHECK(Int(enumerate(PathFamily::Dyck, n, {}).size()) == catalan(n));
    // Grand Dyck: central binomial coefficients.
    for (int n = 0; n <= 7; ++n)
        CHECK(Int(enumerate(PathFamily::GrandDyck, n, {}).size()) == binomial(2 * n, n));
    // Motzkin numbers.
    const long long motzkin[] = {1, 1, 2, 4, 9, 21, 51, 127};
    for (int n = 0; n <= 7; ++n)
        CHECK(static_cast<long long>(enumerate(PathFamily::Motzkin, n, {}).size()) == motzkin[n]);
    // Peakless Motzkin paths of length n + 1 are equinumerous with
    // valley-free ones of length n (one index apart in the same sequence).
    const long long peakless[] = {1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423, 978};
    for (int n = 0; n <= 10; ++n) {
        CHECK(static_cast<long long>(enumerate(PathFamily::PeaklessMotzkin, n, {}).size()) ==
              peakless[n]);
        CHECK(static_cast<long long>(enumerate(PathFamily::ValleyFreeMotzkin, n, {}).size()) ==
              peakless[n + 1]);
    }
}

TEST_CASE("uneven bicolored Motzkin paths are graded by weight") {
    // H1 steps weigh 2, so enumeration by weight matches the valley-free
    // counts (the two families are linked by an explicit bijection).
    const long long want[] = {1, 1, 2, 4, 8, 17, 37, 82, 185, 423, 978};
    for (int n = 0; n <= 10; ++n) {
        auto all = enumerate(PathFamily::UnevenBicoloredMotzkin, n, {});
        CHECK(static_cast<long long>(all.size()) == want[n]);
        for (const auto& w : all) CHECK(weighted_size(w) == n);
    }
}

TEST_CASE("step words validate within their family") {
    CHECK(validate(word(PathFamily::Dyck, {Step::U, Step::U, Step::D, Step::D})));
    // Dips below the axis are only legal for grand paths.
    CHECK_FALSE(validate(word(PathFamily::Dyck, {Step::D, Step::U})));
    CHECK(validate(word(PathFamily::GrandDyck, {Step::D, Step::U})));
    // Odd-length plus-minus words never return to the axis.
    CHECK_FALSE(validate(word(PathFamily::GrandDyck, {Step::U})));
    // A peak UD is banned for peakless paths but fine for valley-free ones.
    CHECK_FALSE(validate(word(PathFamily::PeaklessMotzkin, {Step::U, Step::D})));
    CHECK(validate(word(PathFamily::ValleyFreeMotzkin, {Step::U, Step::D})));
    CHECK_FALSE(validate(word(PathFamily::ValleyFreeMotzkin, {Step::D, Step::U})));
}

TEST_CASE("heights walks the word") {
    auto h = heights(word(PathFamily::GrandDyck, {Step::U, Step::D, Step::D, Step::U}));
    CHECK(h == std::vector<int>{0, 1, 0, -1, 0});
    auto hm = heights(word(PathFamily::Motzkin, {Step::U, Step::H1, Step::D}));
    CHECK(hm == std::vector<int>{0, 1, 1, 0});
}

TEST_CASE("ballot paths: closed-form counts equal enumeration") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int n = 0; n <= 8; ++n) {
                auto paths = enumerate_ballot_paths(a, b, n, {});
                CHECK(ballot_count(a, b, n) == Int(paths.size()));
                for (const auto& p : paths) {
                    CHECK(p.a == a);
                    CHECK(p.b == b);
                    CHECK(validate(p));
                }
            }
    // Paths from the axis back to the axis are Dyck paths.
    for (int n = 0; n <= 6; ++n) CHECK(ballot_count(0, 0, 2 * n) == catalan(n));
    // Parity: no path when n and b - a disagree mod 2.
    CHECK(ballot_count(0, 1, 4) == 0);
}

TEST_CASE("to_string is injective on each family") {
    for (PathFamily f : {PathFamily::Dyck, PathFamily::GrandDyck, PathFamily::Motzkin}) {
        std::set<std::string> seen;
        for (const auto& p : enumerate(f, 5, {})) seen.insert(to_string(p));
        CHECK(seen.size() == enumerate(f, 5, {}).size());
    }
}

TEST_CASE("enumeration respects the object budget") {
    EnumLimits limits;
    limits.max_objects = 5;
    CHECK_THROWS_AS(enumerate(PathFamily::GrandDyck, 5, limits), resource_limit_error);
}
