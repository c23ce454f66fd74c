#include "symmetria/gf_catalog.hpp"

#include <stdexcept>

namespace symmetria {

namespace {

// sqrt(1 - 4 z^zmult) = 1 - sum_{k>=1} 2 C_{k-1} z^(zmult*k), built directly
// from the Catalan numbers (cheaper than the generic sqrt recurrence).
TruncatedSeries sqrt_1m4z(int order, int zmult = 1) {
    TruncatedSeries r(order);
    r.add_term(0, Monomial::unit(), 1);
    int kmax = order / zmult;
    if (kmax >= 1) {
        std::vector<Int> cat = catalan_row(kmax - 1);
        for (int k = 1; k <= kmax; ++k)
            r.add_term(k * zmult, Monomial::unit(), Rat(-2 * cat[static_cast<size_t>(k - 1)]));
    }
    return r;
}

// a / z^k; requires the k lowest coefficients to vanish.
TruncatedSeries divide_by_z(const TruncatedSeries& a, int k) {
    if (k < 0 || k > a.order()) throw std::invalid_argument("divide_by_z: bad power");
    for (int n = 0; n < k; ++n)
        if (!a.at(n).empty()) throw std::domain_error("divide_by_z: nonzero low coefficient");
    TruncatedSeries r(a.order() - k);
    for (int n = k; n <= a.order(); ++n)
        for (const auto& [m, c] : a.at(n)) r.add_term(n - k, m, c);
    return r;
}

TruncatedSeries series_pow(const TruncatedSeries& a, int e) {
    if (e < 0) throw std::invalid_argument("series_pow: negative exponent");
    TruncatedSeries r = TruncatedSeries::constant(a.order(), 1);
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

TruncatedSeries catalan_series(int order) {
    // C(z) = (1 - sqrt(1-4z)) / (2z)
    TruncatedSeries num = TruncatedSeries::constant(order + 1, 1) - sqrt_1m4z(order + 1);
    return divide_by_z(num, 1) * Rat(1, 2);
}

// C(z^2) to the given order.
TruncatedSeries catalan_z2(int order) {
    return catalan_series(order / 2).substitute_z(2, Rat(1), order);
}

// F(xz, yz) for bicolored Motzkin paths: F = 1 + (x+y) z F + x y z^2 F^2,
// expanded coefficientwise (the z^n coefficient has x,y degrees summing to n).
TruncatedSeries bicolored_f(int order) {
    TruncatedSeries f(order);
    f.add_term(0, Monomial::unit(), 1);
    Monomial mx = Monomial::of(Var::x);
    Monomial my = Monomial::of(Var::y);
    Monomial mxy = mx.times(my);
    for (int n = 1; n <= order; ++n) {
        for (const auto& [m, c] : f.at(n - 1)) {
            f.add_term(n, m.times(mx), c);
            f.add_term(n, m.times(my), c);
        }
        for (int i = 0; i + 2 <= n; ++i)
            for (const auto& [ma, ca] : f.at(i))
                for (const auto& [mb, cb] : f.at(n - 2 - i))
                    f.add_term(n, ma.times(mb).times(mxy), ca * cb);
    }
    return f;
}

// G(xz, yz, s1, s2) = 1 / (1 - s1 x z - s2 y z - 2 x y z^2 F(xz, yz)).
TruncatedSeries bicolored_g(int order) {
    TruncatedSeries f = bicolored_f(order);
    TruncatedSeries den(order);
    den.add_term(0, Monomial::unit(), 1);
    den.add_term(1, Monomial::of(Var::s1).times(Monomial::of(Var::x)), -1);
    den.add_term(1, Monomial::of(Var::s2).times(Monomial::of(Var::y)), -1);
    Monomial mxy = Monomial::of(Var::x).times(Monomial::of(Var::y));
    for (int n = 2; n <= order; ++n)
        for (const auto& [m, c] : f.at(n - 2))
            den.add_term(n, m.times(mxy), -2 * c);
    return den.reciprocal();
}

TruncatedSeries ds_grand(int order) {
    // 1 / (2(1-s) z + sqrt(1-4z))
    TruncatedSeries den = sqrt_1m4z(order);
    den.add_term(1, Monomial::unit(), 2);
    den.add_term(1, Monomial::of(Var::s), -2);
    return den.reciprocal();
}

TruncatedSeries dsh_square(int order) {
    // 1 / ((1-s) z + sqrt(1-4z))
    TruncatedSeries den = sqrt_1m4z(order);
    den.add_term(1, Monomial::unit(), 1);
    den.add_term(1, Monomial::of(Var::s), -1);
    return den.reciprocal();
}

TruncatedSeries jtilde(int order) {
    // (sqrt(1-4z^2) - 1 + 2z) / (2z (1-2z))
    TruncatedSeries num = sqrt_1m4z(order + 1, 2) - TruncatedSeries::constant(order + 1, 1);
    num.add_term(1, Monomial::unit(), 2);
    TruncatedSeries geo(order);  // 1 / (1-2z)
    geo.add_term(0, Monomial::unit(), 1);
    geo.add_term(1, Monomial::unit(), -2);
    return divide_by_z(num, 1) * Rat(1, 2) * geo.reciprocal();
}

// Midpoint-height radicand (1 - yz - z/y)^2 - 4z^2, expanded:
// 1 - 2(y + 1/y) z + (y^2 + y^-2 - 2) z^2. Laurent in y.
TruncatedSeries hm_radicand(int order) {
    TruncatedSeries r(order);
    r.set_laurent(Var::y);
    Monomial y1 = Monomial::of(Var::y);
    Monomial ym1 = Monomial::of(Var::y, -1);
    r.add_term(0, Monomial::unit(), 1);
    r.add_term(1, y1, -2);
    r.add_term(1, ym1, -2);
    r.add_term(2, Monomial::of(Var::y, 2), 1);
    r.add_term(2, Monomial::of(Var::y, -2), 1);
    r.add_term(2, Monomial::unit(), -2);
    return r;
}

}  // namespace

const char* gf_name(GfName g) {
    switch (g) {
        case GfName::CATALAN: return "CATALAN";
        case GfName::F: return "F";
        case GfName::G: return "G";
        case GfName::DS_GRAND: return "DS_GRAND";
        case GfName::SV_GRAND: return "SV_GRAND";
        case GfName::JOINT_DS_SV: return "JOINT_DS_SV";
        case GfName::DS_SQUARE: return "DS_SQUARE";
        case GfName::DS_MINSQ: return "DS_MINSQ";
        case GfName::PSP: return "PSP";
        case GfName::JTILDE: return "JTILDE";
        case GfName::K: return "K";
        case GfName::DSH_SQUARE: return "DSH_SQUARE";
        case GfName::DSH_MINSQ: return "DSH_MINSQ";
        case GfName::PHO_GRAND: return "PHO_GRAND";
        case GfName::UB_XY: return "UB_XY";
        case GfName::UB_SP: return "UB_SP";
        case GfName::PEAKLESS: return "PEAKLESS";
        case GfName::BALLOT_B0B: return "BALLOT_B0B";
        case GfName::B_UVZ: return "B_UVZ";
        case GfName::HM_GRAND: return "HM_GRAND";
        case GfName::JOINT_DS_HM: return "JOINT_DS_HM";
    }
    return "?";
}

GfName parse_gf_name(const std::string& name) {
    for (GfName g : all_gf_names())
        if (name == gf_name(g)) return g;
    throw std::invalid_argument("unknown series name: " + name);
}

std::vector<GfName> all_gf_names() {
    return {GfName::CATALAN,    GfName::F,          GfName::G,
            GfName::DS_GRAND,   GfName::SV_GRAND,   GfName::JOINT_DS_SV,
            GfName::DS_SQUARE,  GfName::DS_MINSQ,   GfName::PSP,
            GfName::JTILDE,     GfName::K,          GfName::DSH_SQUARE,
            GfName::DSH_MINSQ,  GfName::PHO_GRAND,  GfName::UB_XY,
            GfName::UB_SP,      GfName::PEAKLESS,   GfName::BALLOT_B0B,
            GfName::B_UVZ,      GfName::HM_GRAND,   GfName::JOINT_DS_HM};
}

TruncatedSeries gf_catalog(GfName g, int order) {
    switch (g) {
        case GfName::CATALAN:
            return catalan_series(order);
        case GfName::F:
            return bicolored_f(order);
        case GfName::G:
            return bicolored_g(order);
        case GfName::DS_GRAND:
        case GfName::DS_SQUARE:
            return ds_grand(order);
        case GfName::SV_GRAND: {
            // 1 / (1 - v + v sqrt(1-4z))
            TruncatedSeries den(order);
            Monomial mv = Monomial::of(Var::v);
            den.add_term(0, Monomial::unit(), 1);
            den.add_term(0, mv, -1);
            TruncatedSeries rad = sqrt_1m4z(order);
            for (int n = 0; n <= order; ++n)
                for (const auto& [m, c] : rad.at(n)) den.add_term(n, m.times(mv), c);
            return den.reciprocal();
        }
        case GfName::JOINT_DS_SV: {
            // 1 / (1 - v + 2(1-s) v z + v sqrt(1-4z))
            TruncatedSeries den(order);
            Monomial mv = Monomial::of(Var::v);
            den.add_term(0, Monomial::unit(), 1);
            den.add_term(0, mv, -1);
            den.add_term(1, mv, 2);
            den.add_term(1, mv.times(Monomial::of(Var::s)), -2);
            TruncatedSeries rad = sqrt_1m4z(order);
            for (int n = 0; n <= order; ++n)
                for (const auto& [m, c] : rad.at(n)) den.add_term(n, m.times(mv), c);
            return den.reciprocal();
        }
        case GfName::DS_MINSQ: {
            // (1 - s z) * DS_GRAND
            TruncatedSeries lead = TruncatedSeries::constant(order, 1) -
                                   TruncatedSeries::term(order, 1, Monomial::of(Var::s), 1);
            return lead * ds_grand(order);
        }
        case GfName::PSP: {
            // 1 + z^2 (sqrt(1-4z^2) - (1-s)(1-2z))
            //       / ((1-2z)(2(1-s) z^2 + sqrt(1-4z^2)))
            TruncatedSeries rad = sqrt_1m4z(order, 2);
            TruncatedSeries num = rad - TruncatedSeries::constant(order, 1);
            num.add_term(1, Monomial::unit(), 2);
            num.add_term(0, Monomial::of(Var::s), 1);
            num.add_term(1, Monomial::of(Var::s), -2);
            num = num * TruncatedSeries::term(order, 1, Monomial::unit(), 2);
            TruncatedSeries den = rad;
            den.add_term(2, Monomial::unit(), 2);
            den.add_term(2, Monomial::of(Var::s), -2);
            TruncatedSeries lin(order);
            lin.add_term(0, Monomial::unit(), 1);
            lin.add_term(1, Monomial::unit(), -2);
            den = lin * den;
            return TruncatedSeries::constant(order, 1) + num * den.reciprocal();
        }
        case GfName::JTILDE:
            return jtilde(order);
        case GfName::K: {
            // z^3 * JTILDE * DS_GRAND(z^2)
            TruncatedSeries g2 = ds_grand(order / 2).substitute_z(2, Rat(1), order);
            return TruncatedSeries::term(order, 1, Monomial::unit(), 3) * jtilde(order) * g2;
        }
        case GfName::DSH_SQUARE:
        case GfName::PHO_GRAND:
            return dsh_square(order);
        case GfName::DSH_MINSQ: {
            // (1 - z) * DSH_SQUARE
            TruncatedSeries lead(order);
            lead.add_term(0, Monomial::unit(), 1);
            lead.add_term(1, Monomial::unit(), -1);
            return lead * dsh_square(order);
        }
        case GfName::UB_XY: {
            // y z (1 + xz - yz) G(x^2 z^2, y z, s, 1) - y z
            TruncatedSeries sub = bicolored_g(order)
                                      .subst(Var::x, Monomial::of(Var::x, 2), 1)
                                      .subst(Var::s1, Monomial::of(Var::s), 0)
                                      .subst(Var::s2, Rat(1));
            TruncatedSeries yz = TruncatedSeries::term(order, 1, Monomial::of(Var::y), 1);
            TruncatedSeries lin = TruncatedSeries::constant(order, 1) +
                                  TruncatedSeries::term(order, 1, Monomial::of(Var::x), 1) -
                                  yz;
            return yz * lin * sub - yz;
        }
        case GfName::UB_SP: {
            // z / ((1-s) z^2 + sqrt(1 - 2z - z^2 - 2z^3 + z^4)) - z
            TruncatedSeries rad(order);
            rad.add_term(0, Monomial::unit(), 1);
            rad.add_term(1, Monomial::unit(), -2);
            rad.add_term(2, Monomial::unit(), -1);
            rad.add_term(3, Monomial::unit(), -2);
            rad.add_term(4, Monomial::unit(), 1);
            TruncatedSeries den = rad.sqrt();
            den.add_term(2, Monomial::unit(), 1);
            den.add_term(2, Monomial::of(Var::s), -1);
            TruncatedSeries z1 = TruncatedSeries::term(order, 1, Monomial::unit(), 1);
            return z1 * den.reciprocal() - z1;
        }
        case GfName::PEAKLESS:
            // F(z^2, z): substitute x^e -> z^e (so the xz slot becomes z^2),
            // then y -> 1 (the yz slot becomes z).
            return bicolored_f(order).subst(Var::x, Monomial::unit(), 1).subst(Var::y, Rat(1));
        case GfName::BALLOT_B0B: {
            // 2 / (1 - 2 y z + sqrt(1-4z^2))
            TruncatedSeries den = sqrt_1m4z(order, 2);
            den.add_term(0, Monomial::unit(), 1);
            den.add_term(1, Monomial::of(Var::y), -2);
            return den.reciprocal() * Rat(2);
        }
        case GfName::B_UVZ: {
            // (1/(1-uv)) * 2 / (1 + uv - 2(u+v) z + (1-uv) sqrt(1-4z^2)),
            // with u, v capped at the truncation order (their degree at fixed
            // z-degree is unbounded only through the 1/(1-uv) prefactor).
            Monomial muv = Monomial::of(Var::u).times(Monomial::of(Var::v));
            TruncatedSeries big(order);
            big.add_term(0, Monomial::unit(), 1);
            big.add_term(0, muv, 1);
            big.add_term(1, Monomial::of(Var::u), -2);
            big.add_term(1, Monomial::of(Var::v), -2);
            TruncatedSeries rad = sqrt_1m4z(order, 2);
            for (int n = 0; n <= order; ++n)
                for (const auto& [m, c] : rad.at(n)) {
                    big.add_term(n, m, c);
                    big.add_term(n, m.times(muv), -c);
                }
            TruncatedSeries geo(order);  // 1/(1-uv) truncated at the caps
            geo.set_cap(Var::u, order);
            geo.set_cap(Var::v, order);
            for (int k = 0; k <= order; ++k) geo.add_term(0, muv.pow(k), 1);
            return geo * big.reciprocal() * Rat(2);
        }
        case GfName::HM_GRAND:
            // 1 / sqrt((1 - yz - z/y)^2 - 4z^2)
            return hm_radicand(order).sqrt().reciprocal();
        case GfName::JOINT_DS_HM: {
            // 1 / ((1-s)(y + 1/y) z + sqrt((1 - yz - z/y)^2 - 4z^2))
            TruncatedSeries den = hm_radicand(order).sqrt();
            Monomial y1 = Monomial::of(Var::y);
            Monomial ym1 = Monomial::of(Var::y, -1);
            Monomial s1 = Monomial::of(Var::s);
            den.add_term(1, y1, 1);
            den.add_term(1, ym1, 1);
            den.add_term(1, y1.times(s1), -1);
            den.add_term(1, ym1.times(s1), -1);
            return den.reciprocal();
        }
    }
    throw std::invalid_argument("gf_catalog: unknown name");
}

TruncatedSeries gf_ballot_ab(int a, int b, int order) {
    if (a < 0 || b < 0) throw std::invalid_argument("gf_ballot_ab: negative height");
    int d = a > b ? a - b : b - a;
    int m = a < b ? a : b;
    TruncatedSeries c2 = catalan_z2(order);
    TruncatedSeries t = TruncatedSeries::term(order, 1, Monomial::unit(), 1) * c2;
    TruncatedSeries t2 = t * t;
    TruncatedSeries num = TruncatedSeries::term(order, 1, Monomial::unit(), d) *
                          series_pow(c2, d + 1) *
                          (TruncatedSeries::constant(order, 1) - series_pow(t2, m + 1));
    TruncatedSeries den = TruncatedSeries::constant(order, 1) - t2;
    return num * den.reciprocal();
}

TruncatedSeries hadamard_square(const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n)
        for (const auto& [m, c] : a.at(n)) r.add_term(n, m, c * c);
    return r;
}

}  // namespace symmetria
