#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symmetria/series.hpp"

#include <random>

using namespace symmetria;

namespace {

TruncatedSeries one(int order) { return TruncatedSeries::constant(order, Rat(1)); }

TruncatedSeries z(int order, int deg = 1, const Rat& c = Rat(1)) {
    return TruncatedSeries::term(order, c, Monomial::unit(), deg);
}

// Deterministic pseudo-random series with unit constant term.
TruncatedSeries random_series(int order, std::mt19937& rng) {
    TruncatedSeries s = one(order);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    for (int n = 1; n <= order; ++n) {
        s.add_term(n, Monomial::unit(), Rat(num(rng), den(rng)));
        if (n % 2 == 0) s.add_term(n, Monomial::of(Var::s), Rat(num(rng)));
    }
    return s;
}

}  // namespace

TEST_CASE("monomial algebra") {
    Monomial m = Monomial::of(Var::s, 2).times(Monomial::of(Var::v));
    CHECK(m.exponent(Var::s) == 2);
    CHECK(m.exponent(Var::v) == 1);
    CHECK(m.exponent(Var::y) == 0);
    CHECK(m.pow(2).exponent(Var::s) == 4);
    CHECK(m.without(Var::v) == Monomial::of(Var::s, 2));
    CHECK(Monomial::unit().is_unit());
    CHECK(Monomial::of(Var::s, 2).times(Monomial::of(Var::s, -2)).is_unit());
}

TEST_CASE("ring arithmetic is exact and truncated") {
    int N = 8;
    CHECK((one(N) + z(N)) * (one(N) - z(N)) == one(N) + z(N, 2, Rat(-1)));
    // Multiplying order-3 inputs keeps order 3.
    auto p = (one(3) + z(3)) * (one(3) + z(3));
    CHECK(p.order() == 3);
    // Distributivity on deterministic pseudo-random inputs.
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 5; ++trial) {
        auto a = random_series(6, rng), b = random_series(6, rng), c = random_series(6, rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("reciprocal") {
    int N = 10;
    auto geo = (one(N) - z(N)).reciprocal();
    for (int n = 0; n <= N; ++n) CHECK(geo.coeff_unit(n) == Rat(1));
    auto pow = (one(N) - z(N, 1, Rat(2))).reciprocal();
    Rat want(1);
    for (int n = 0; n <= N; ++n) {
        CHECK(pow.coeff_unit(n) == want);
        want *= 2;
    }
    std::mt19937 rng(99);
    auto a = random_series(8, rng);
    CHECK(a.reciprocal().reciprocal() == a);
    CHECK(a * a.reciprocal() == one(8));
    CHECK_THROWS(TruncatedSeries::zero(4).reciprocal());
}

TEST_CASE("square root") {
    int N = 10;
    auto r = (one(N) + z(N, 1, Rat(-4))).sqrt();
    CHECK(r.coeff_unit(0) == Rat(1));
    CHECK(r.coeff_unit(1) == Rat(-2));
    CHECK(r.coeff_unit(2) == Rat(-2));
    CHECK(r.coeff_unit(3) == Rat(-4));
    CHECK(r.coeff_unit(4) == Rat(-10));
    CHECK(r * r == one(N) + z(N, 1, Rat(-4)));
    CHECK(one(N).sqrt() == one(N));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 4; ++trial) {
        auto a = random_series(8, rng);
        auto s = a.sqrt();
        CHECK(s * s == a);
    }
    CHECK_THROWS(z(4).sqrt());  // constant term 0
}

TEST_CASE("substitution in the main variable") {
    int N = 10;
    auto geo = (one(N) - z(N)).reciprocal();
    auto sq = geo.substitute_z(2);
    for (int n = 0; n <= N; ++n) CHECK(sq.coeff_unit(n) == Rat(n % 2 == 0 ? 1 : 0));
    CHECK((one(4) + z(4)).substitute_z(1, Rat(2)) == one(4) + z(4, 1, Rat(2)));
    CHECK(geo.substitute_z(1) == geo);
    // Wider result order keeps the accuracy the substitution supports.
    auto wide = (one(3) + z(3)).substitute_z(4, Rat(1), 12);
    CHECK(wide.order() == 12);
    CHECK(wide.coeff_unit(4) == Rat(1));
    CHECK(wide.coeff_unit(8) == Rat(0));
    CHECK_THROWS(geo.substitute_z(0));
}

TEST_CASE("substitution of auxiliary variables") {
    int N = 6;
    // 1/(1 - sz) with s -> 1 is the geometric series.
    TruncatedSeries d = one(N) - TruncatedSeries::term(N, Rat(1), Monomial::of(Var::s), 1);
    auto f = d.reciprocal();
    auto g = f.subst(Var::s, Rat(1));
    for (int n = 0; n <= N; ++n) CHECK(g.coeff_unit(n) == Rat(1));
    // s -> z turns s^k z^k into z^(2k).
    auto h = f.subst(Var::s, Monomial::unit(), 1);
    for (int n = 0; n <= N; ++n) CHECK(h.coeff_unit(n) == Rat(n % 2 == 0 ? 1 : 0));
    // s -> monomial v.
    auto k = f.subst(Var::s, Monomial::of(Var::v), 0);
    CHECK(k.coeff(3, Monomial::of(Var::v, 3)) == Rat(1));
}

TEST_CASE("Laurent variables admit negative exponents") {
    int N = 6;
    TruncatedSeries s(N);
    s.set_laurent(Var::y);
    s.add_term(0, Monomial::unit(), Rat(1));
    s.add_term(1, Monomial::of(Var::y, 1), Rat(-1));
    s.add_term(1, Monomial::of(Var::y, -1), Rat(-1));
    auto f = s.reciprocal();
    // Coefficients of 1/(1 - (y + 1/y) z) are binomials in y, y^-1.
    CHECK(f.coeff(2, Monomial::of(Var::y, 2)) == Rat(1));
    CHECK(f.coeff(2, Monomial::unit()) == Rat(2));
    CHECK(f.coeff(2, Monomial::of(Var::y, -2)) == Rat(1));
    CHECK(f.coeff(3, Monomial::of(Var::y, -1)) == Rat(3));
    // y -> 1 collapses to 2^n.
    auto g = f.subst(Var::y, Rat(1));
    CHECK(g.coeff_unit(3) == Rat(8));
}

TEST_CASE("diagonal extraction") {
    int N = 8;
    // Sum over a, b of z^a z2^b: the diagonal is the geometric series.
    TruncatedSeries s(N);
    s.set_cap(Var::z2, N);
    for (int a = 0; a <= N; ++a)
        for (int b = 0; b <= N; ++b) s.add_term(a, Monomial::of(Var::z2, b), Rat(1));
    auto d = s.diagonal(Var::z2);
    for (int n = 0; n <= N; ++n) CHECK(d.coeff_unit(n) == Rat(1));
    // Multiplying by z * z2 shifts the diagonal by one.
    auto shifted = (s * TruncatedSeries::term(N, Rat(1), Monomial::of(Var::z2), 1)).diagonal(Var::z2);
    CHECK(shifted.coeff_unit(0) == Rat(0));
    for (int n = 1; n <= N; ++n) CHECK(shifted.coeff_unit(n) == Rat(1));
}

TEST_CASE("serialization") {
    int N = 2;
    TruncatedSeries s = one(N);
    s.add_term(1, Monomial::of(Var::s), Rat(2));
    s.add_term(2, Monomial::unit(), Rat(2));
    s.add_term(2, Monomial::of(Var::s, 2), Rat(4));
    CHECK(s.pretty() == "1 + 2sz + (2+4s^2)z^2");
    CHECK(s.to_json() ==
          R"({"order":2,"terms":[)"
          R"({"zdeg":0,"monomial":{},"num":"1","den":"1"},)"
          R"({"zdeg":1,"monomial":{"s":1},"num":"2","den":"1"},)"
          R"({"zdeg":2,"monomial":{},"num":"2","den":"1"},)"
          R"({"zdeg":2,"monomial":{"s":2},"num":"4","den":"1"}]})");
}

TEST_CASE("equality compares up to the shared order") {
    auto a = one(4) + z(4);
    auto b = one(6) + z(6);
    CHECK(a == b);
    auto c = one(6) + z(6) + z(6, 5);
    CHECK(a == c);       // differs only beyond order 4
    CHECK_FALSE(b == c);
}
