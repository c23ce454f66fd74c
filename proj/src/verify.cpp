#include "symmetria/verify.hpp"

#include "symmetria/bijections.hpp"
#include "symmetria/distributions.hpp"
#include "symmetria/gf_catalog.hpp"
#include "symmetria/oeis.hpp"
#include "symmetria/statistics.hpp"
#include "symmetria/walks.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symmetria {

bool SuiteResult::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.ok; });
}

namespace {

std::string fmt(double x) {
    std::ostringstream ss;
    ss.precision(4);
    ss << std::fixed << x;
    return ss.str();
}

// Horizontal steps lying on the x-axis of a Motzkin-like word.
int axis_h_steps(const PathWord& w) {
    auto h = heights(w);
    int c = 0;
    for (size_t i = 0; i < w.steps.size(); ++i)
        if ((w.steps[i] == Step::H1 || w.steps[i] == Step::H2) && h[i] == 0 && h[i + 1] == 0)
            ++c;
    return c;
}

// Steps starting at height 0 (= vertices on the x-axis minus the last one).
int axis_starts(const PathWord& w) {
    auto h = heights(w);
    int c = 0;
    for (size_t i = 0; i < w.steps.size(); ++i)
        if (h[i] == 0) ++c;
    return c;
}

// ---------------------------------------------------------------------------
// bijections
// ---------------------------------------------------------------------------

CheckResult check_phi(int max_n) {
    bool ok = true;
    long long objects = 0;
    int bad_n = 0;
    for (int n = 1; n <= max_n && ok; ++n) {
        std::set<std::string> images;
        auto all = enumerate(PathFamily::GrandDyck, n, {});
        objects += static_cast<long long>(all.size());
        for (const auto& p : all) {
            PathWord q = phi(p);
            ok = ok && validate(q) && static_cast<int>(q.steps.size()) == n &&
                 phi_inv(q).steps == p.steps && ds_path(p) == axis_h_steps(q) &&
                 sv(p) == axis_starts(q);
            images.insert(to_string(q));
        }
        ok = ok && images.size() == all.size();
        if (!ok) bad_n = n;
    }
    std::string detail = ok ? "sizes 1.." + std::to_string(max_n) + ", " +
                                  std::to_string(objects) +
                                  " paths; round-trip, ds and sv transported"
                            : "failed at size " + std::to_string(bad_n);
    return {"phi: grand Dyck <-> bicolored grand Motzkin", ok, detail};
}

CheckResult check_sv_to_ret(int max_n) {
    bool ok = true;
    int bad_n = 0;
    for (int n = 1; n <= max_n && ok; ++n) {
        std::set<std::string> images;
        auto all = enumerate(PathFamily::GrandDyck, n, {});
        for (const auto& p : all) {
            PathWord q = sv_to_ret(p);
            ok = ok && validate(q) && sv(p) == ret(q);
            images.insert(to_string(q));
        }
        ok = ok && images.size() == all.size();
        if (!ok) bad_n = n;
    }
    std::string detail = ok ? "sizes 1.." + std::to_string(max_n) + "; sv -> ret, bijective"
                            : "failed at size " + std::to_string(bad_n);
    return {"sv_to_ret: grand Dyck -> grand Dyck", ok, detail};
}

CheckResult check_partial_n(int max_n) {
    bool ok = true;
    int bad_n = 0;
    for (int n = 1; n <= max_n && ok; ++n) {
        std::set<std::string> images;
        auto parts = enumerate_partitions_in_square(n, {});
        for (const auto& lam : parts) {
            PathWord q = partial_n(lam, n);
            ok = ok && validate(q) && ds_square(lam, n) == ds_path(q) &&
                 partial_n_inv(q) == lam;
            images.insert(to_string(q));
        }
        ok = ok && images.size() == enumerate(PathFamily::GrandDyck, n, {}).size();
        if (!ok) bad_n = n;
    }
    std::string detail = ok ? "sizes 1.." + std::to_string(max_n) + "; ds transported, inverse exact"
                            : "failed at size " + std::to_string(bad_n);
    return {"partial_n: partitions in square <-> grand Dyck", ok, detail};
}

CheckResult check_psi(int max_n) {
    bool ok = true;
    int bad_n = 0;
    for (int n = 1; n <= max_n && ok; ++n) {
        std::set<std::string> images;
        auto parts = enumerate_partitions_in_square(n, {});
        for (const auto& lam : parts) {
            PathWord q = psi(lam, n);
            ok = ok && validate(q) && dsh(lam) == pho(q);
            images.insert(to_string(q));
        }
        ok = ok && images.size() == enumerate(PathFamily::GrandDyck, n, {}).size();
        if (!ok) bad_n = n;
    }
    std::string detail = ok ? "sizes 1.." + std::to_string(max_n) + "; dsh -> pho, bijective"
                            : "failed at size " + std::to_string(bad_n);
    return {"psi: partitions in square -> grand Dyck", ok, detail};
}

CheckResult check_mu(int max_n) {
    bool ok = true;
    int bad_n = 0;
    for (int n = 1; n <= max_n && ok; ++n) {
        std::set<std::string> images;
        auto all = enumerate(PathFamily::PeaklessMotzkin, n, {});
        for (const auto& p : all) {
            PathWord q = mu(p);
            ok = ok && validate(q) && q.family == PathFamily::ValleyFreeMotzkin &&
                 static_cast<int>(q.steps.size()) == n - 1 && mu_inv(q).steps == p.steps;
            images.insert(to_string(q));
        }
        size_t target = enumerate(PathFamily::ValleyFreeMotzkin, n - 1, {}).size();
        ok = ok && images.size() == target && target == all.size();
        if (!ok) bad_n = n;
    }
    std::string detail = ok ? "lengths 1.." + std::to_string(max_n) + "; round-trip, bijective"
                            : "failed at length " + std::to_string(bad_n);
    return {"mu: peakless Motzkin -> valley-free Motzkin", ok, detail};
}

CheckResult check_theta(int max_n) {
    bool ok = true;
    int bad_n = 0;
    for (int n = 1; n <= max_n && ok; ++n) {
        std::set<std::string> images;
        auto all = enumerate(PathFamily::ValleyFreeMotzkin, n, {});
        for (const auto& p : all) {
            PathWord q = theta(p);
            ok = ok && validate(q) && weighted_size(q) == n && theta_inv(q).steps == p.steps;
            images.insert(to_string(q));
        }
        size_t target = enumerate(PathFamily::UnevenBicoloredMotzkin, n, {}).size();
        ok = ok && images.size() == target && target == all.size();
        if (!ok) bad_n = n;
    }
    std::string detail = ok ? "weights 1.." + std::to_string(max_n) + "; round-trip, bijective"
                            : "failed at weight " + std::to_string(bad_n);
    return {"theta: valley-free Motzkin -> uneven bicolored Motzkin", ok, detail};
}

CheckResult check_big_theta(int max_n) {
    bool ok = true;
    int bad_n = 0;
    for (int n = 1; n <= max_n && ok; ++n) {
        std::set<std::string> images;
        auto all = enumerate(PathFamily::PeaklessGrandMotzkin, n, {});
        for (const auto& p : all) {
            PathWord q = big_theta(p);
            ok = ok && validate(q) && weighted_size(q) == n;
            images.insert(to_string(q));
        }
        size_t target = enumerate(PathFamily::UnevenBicoloredGrandMotzkin, n, {}).size();
        ok = ok && images.size() == target && target == all.size();
        if (!ok) bad_n = n;
    }
    std::string detail = ok ? "weights 1.." + std::to_string(max_n) + "; weight preserved, bijective"
                            : "failed at weight " + std::to_string(bad_n);
    return {"big_theta: peakless grand Motzkin -> uneven bicolored grand Motzkin", ok, detail};
}

CheckResult check_walk_chain(int max_n) {
    bool ok = true;
    int bad_n = 0;
    for (int n = 1; n <= max_n && ok; ++n) {
        std::set<std::string> im1, im3;
        auto all = enumerate(PathFamily::Dyck, n, {});
        for (const auto& p : all) {
            PathWord w1 = dyck_to_wq1(p);
            ok = ok && validate(w1) && wq1_to_dyck(w1).steps == p.steps;
            im1.insert(to_string(w1));
            PathWord w2 = wq1_fold_wq2(w1);
            ok = ok && validate(w2) && wq2_unfold_wq1(w2).steps == w1.steps;
            PathWord w3 = wq2_shear_wq3(w2);
            ok = ok && validate(w3) && wq3_unshear_wq2(w3).steps == w2.steps;
            PathWord w3d = dyck_to_wq3(p);
            ok = ok && w3d.steps == w3.steps && wq3_to_dyck(w3d).steps == p.steps;
            // Replay the walk: ds = E/W steps on the axis, sv = steps leaving
            // the axis, and the endpoint x-coordinate is the midpoint height.
            auto hs = heights(p);
            int x = 0, y = 0, on_axis_ew = 0, from_axis = 0;
            for (Step st : w3d.steps) {
                if (y == 0) {
                    ++from_axis;
                    if (st == Step::E || st == Step::W) ++on_axis_ew;
                }
                switch (st) {
                    case Step::E: x += 1; break;
                    case Step::W: x -= 1; break;
                    case Step::NW:
                    case Step::NW_c1:
                    case Step::NW_c2: x -= 1; y += 1; break;
                    case Step::SE: x += 1; y -= 1; break;
                    default: break;
                }
            }
            ok = ok && on_axis_ew == ds_path(p) && from_axis == sv(p) && y == 0 &&
                 x == hs[p.steps.size() / 2];
            im3.insert(to_string(w3d));
        }
        ok = ok && im1.size() == all.size() && im3.size() == all.size();
        if (!ok) bad_n = n;
    }
    std::string detail = ok ? "semilengths 1.." + std::to_string(max_n) +
                                  "; stagewise round-trips, ds/sv/midpoint transported"
                            : "failed at semilength " + std::to_string(bad_n);
    return {"walk chain: Dyck -> diagonal -> octant -> quarter plane", ok, detail};
}

// ---------------------------------------------------------------------------
// series identities
// ---------------------------------------------------------------------------

TruncatedSeries one(int order) { return TruncatedSeries::constant(order, Rat(1)); }

TruncatedSeries var_z(int order, Var v, int zdeg) {
    return TruncatedSeries::term(order, Rat(1), Monomial::of(v), zdeg);
}

TruncatedSeries zpow(int order, int k, const Rat& c = Rat(1)) {
    return TruncatedSeries::term(order, c, Monomial::unit(), k);
}

// sqrt(1 - 4z^2) - 1 + 2z, the radical in the staircase-profile closed form.
TruncatedSeries staircase_radical(int order) {
    TruncatedSeries rad = one(order) + zpow(order, 2, Rat(-4));
    return rad.sqrt() - one(order) + zpow(order, 1, Rat(2));
}

// sqrt(1 - 2z - z^2 - 2z^3 + z^4), the kernel shared by the bargraph and
// bicolored-Motzkin closed forms.
TruncatedSeries bargraph_radical(int order) {
    return (one(order) + zpow(order, 1, Rat(-2)) + zpow(order, 2, Rat(-1)) +
            zpow(order, 3, Rat(-2)) + zpow(order, 4))
        .sqrt();
}

CheckResult series_check(const std::string& name, bool ok, int order) {
    return {name, ok, (ok ? "exact to order " : "mismatch at order ") + std::to_string(order)};
}

std::vector<CheckResult> closed_form_identities(int order) {
    std::vector<CheckResult> out;
    const int ord16 = std::max(order, 16);
    const int ord14 = std::max(order, 14);

    {
        auto f = gf_catalog(GfName::F, ord16);
        auto xz = var_z(ord16, Var::x, 1);
        auto yz = var_z(ord16, Var::y, 1);
        auto xyz2 = TruncatedSeries::term(
            ord16, Rat(1), Monomial::of(Var::x).times(Monomial::of(Var::y)), 2);
        out.push_back(series_check("bicolored Motzkin F satisfies its defining equation",
                                   f == one(ord16) + (xz + yz) * f + xyz2 * f * f, ord16));

        auto g = gf_catalog(GfName::G, ord16);
        auto s1xz = TruncatedSeries::term(
            ord16, Rat(1), Monomial::of(Var::s1).times(Monomial::of(Var::x)), 1);
        auto s2yz = TruncatedSeries::term(
            ord16, Rat(1), Monomial::of(Var::s2).times(Monomial::of(Var::y)), 1);
        out.push_back(series_check(
            "axis-marked G times its linear kernel is 1",
            g * (one(ord16) - s1xz - s2yz - xyz2 * f * Rat(2)) == one(ord16), ord16));

        auto fzz = f.subst(Var::x, Rat(1)).subst(Var::y, Rat(1));
        auto cat = gf_catalog(GfName::CATALAN, ord16);
        out.push_back(series_check("z^2 F(z,z) = z (C(z) - 1)",
                                   zpow(ord16, 2) * fzz == zpow(ord16, 1) * (cat - one(ord16)),
                                   ord16));
    }

    out.push_back(series_check(
        "partitions-in-square ds equals grand Dyck ds",
        gf_catalog(GfName::DS_SQUARE, ord14) == gf_catalog(GfName::DS_GRAND, ord14), ord14));
    out.push_back(series_check(
        "minimal-square ds = (1 - sz) * square ds",
        gf_catalog(GfName::DS_MINSQ, ord14) ==
            (one(ord14) - TruncatedSeries::term(ord14, Rat(1), Monomial::of(Var::s), 1)) *
                gf_catalog(GfName::DS_GRAND, ord14),
        ord14));
    out.push_back(series_check(
        "hook symmetry dsh equals peaks-at-height-one pho",
        gf_catalog(GfName::DSH_SQUARE, ord14) == gf_catalog(GfName::PHO_GRAND, ord14), ord14));
    out.push_back(series_check(
        "minimal-square dsh = (1 - z) * square dsh",
        gf_catalog(GfName::DSH_MINSQ, ord14) ==
            (one(ord14) - zpow(ord14, 1)) * gf_catalog(GfName::DSH_SQUARE, ord14),
        ord14));

    {
        auto sqrt1m4z = (one(order) + zpow(order, 1, Rat(-4))).sqrt();
        auto sz = var_z(order, Var::s, 1);
        auto v = TruncatedSeries::term(order, Rat(1), Monomial::of(Var::v), 0);
        bool ok =
            gf_catalog(GfName::DS_GRAND, order) *
                    (zpow(order, 1, Rat(2)) - sz * Rat(2) + sqrt1m4z) == one(order) &&
            gf_catalog(GfName::SV_GRAND, order) *
                    (one(order) - v + v * sqrt1m4z) == one(order) &&
            gf_catalog(GfName::PHO_GRAND, order) *
                    (zpow(order, 1) - sz + sqrt1m4z) == one(order);
        out.push_back(series_check("radical denominators invert the catalog entries", ok, order));
    }

    {
        // Assembly of the semiperimeter series: 1 + s z^2 D(z^2) + 2 K with
        // K = z^3 * Jt * D(z^2), where D is the grand-Dyck ds series and Jt
        // the staircase-profile series.
        int half = order / 2;
        auto dsub = gf_catalog(GfName::DS_GRAND, half).substitute_z(2, Rat(1), order);
        auto jt = gf_catalog(GfName::JTILDE, order);
        auto k = gf_catalog(GfName::K, order);
        bool k_ok = k == zpow(order, 3) * jt * dsub;
        auto sz2 = TruncatedSeries::term(order, Rat(1), Monomial::of(Var::s), 2);
        bool psp_ok = gf_catalog(GfName::PSP, order) == one(order) + sz2 * dsub + k * Rat(2);
        out.push_back(series_check("K = z^3 * staircase series * ds(z^2)", k_ok, order));
        out.push_back(series_check("semiperimeter ds series assembles from its two halves",
                                   psp_ok, order));
        bool jt_ok = jt * (zpow(order, 1, Rat(2)) - zpow(order, 2, Rat(4))) ==
                     staircase_radical(order);
        out.push_back(series_check("staircase series matches its radical closed form", jt_ok,
                                   order));
    }

    {
        auto q = bargraph_radical(order);
        auto sz2 = TruncatedSeries::term(order, Rat(1), Monomial::of(Var::s), 2);
        bool ub_ok = (gf_catalog(GfName::UB_SP, order) + zpow(order, 1)) *
                         (zpow(order, 2) - sz2 + q) ==
                     zpow(order, 1);
        out.push_back(series_check("bargraph ds series inverts its kernel", ub_ok, order));

        // The doubly-marked bicolored catalog specializes to the reciprocal
        // of the same radical: G(z^2, z, 1, 1) = 1 / sqrt(1-2z-z^2-2z^3+z^4).
        auto g = gf_catalog(GfName::G, order)
                     .subst(Var::x, Monomial::unit(), 1)
                     .subst(Var::y, Rat(1))
                     .subst(Var::s1, Rat(1))
                     .subst(Var::s2, Rat(1));
        out.push_back(series_check("G(z^2,z,1,1) equals the reciprocal bargraph radical",
                                   g == q.reciprocal(), order));

        // Paths with no U immediately followed by D are F(z^2, z).
        auto pk = gf_catalog(GfName::F, order).subst(Var::x, Monomial::unit(), 1).subst(
            Var::y, Rat(1));
        out.push_back(series_check("peakless series equals F(z^2, z)",
                                   gf_catalog(GfName::PEAKLESS, order) == pk, order));
    }

    {
        auto joint = gf_catalog(GfName::JOINT_DS_SV, order);
        bool ok = joint.subst(Var::v, Rat(1)) == gf_catalog(GfName::DS_GRAND, order) &&
                  joint.subst(Var::s, Rat(1)) == gf_catalog(GfName::SV_GRAND, order);
        out.push_back(series_check("joint ds/sv series specializes to both margins", ok, order));

        auto jhm = gf_catalog(GfName::JOINT_DS_HM, order);
        bool ok2 = jhm.subst(Var::y, Rat(1)) == gf_catalog(GfName::DS_GRAND, order) &&
                   jhm.subst(Var::s, Rat(1)) == gf_catalog(GfName::HM_GRAND, order);
        out.push_back(series_check("joint ds/midpoint series specializes to both margins", ok2,
                                   order));

        auto total = gf_catalog(GfName::DS_GRAND, order).subst(Var::s, Rat(1));
        bool ok3 = true;
        for (int n = 0; n <= order && ok3; ++n)
            ok3 = total.coeff_unit(n) == Rat(binomial(2 * n, n));
        out.push_back(series_check("grand ds at s=1 gives central binomials", ok3, order));
    }

    {
        // Midpoint-height series: the explicit double sum of squared
        // binomials, and the coefficientwise square of 1/(1 - (y + 1/y) z).
        auto hmg = gf_catalog(GfName::HM_GRAND, order);
        TruncatedSeries dbl(order);
        dbl.set_laurent(Var::y);
        for (int n = 0; n <= order; ++n)
            for (int k2 = 0; k2 <= n; ++k2) {
                Int b = binomial(n, k2);
                dbl.add_term(n, Monomial::of(Var::y, n - 2 * k2), Rat(b * b));
            }
        out.push_back(series_check("midpoint series equals the squared-binomial double sum",
                                   hmg == dbl, order));

        TruncatedSeries lin(order);
        lin.set_laurent(Var::y);
        lin.add_term(0, Monomial::unit(), Rat(1));
        lin.add_term(1, Monomial::of(Var::y, 1), Rat(-1));
        lin.add_term(1, Monomial::of(Var::y, -1), Rat(-1));
        out.push_back(series_check(
            "midpoint series is the coefficientwise square of a free walk",
            hadamard_square(lin.reciprocal()) == hmg, order));
    }

    {
        // Nonnegative-path rows: the y-marked endpoint series holds every
        // single-endpoint series, and the two-sided kernel holds every
        // (start, end) pair.
        auto b0b = gf_catalog(GfName::BALLOT_B0B, order);
        bool rows = true;
        for (int b = 0; b <= 5 && rows; ++b) {
            auto ab = gf_ballot_ab(0, b, order);
            for (int n = 0; n <= order && rows; ++n)
                if (b0b.coeff(n, Monomial::of(Var::y, b)) != ab.coeff_unit(n)) rows = false;
        }
        out.push_back(series_check("endpoint-marked row series matches per-endpoint series",
                                   rows, order));

        auto buvz = gf_catalog(GfName::B_UVZ, order);
        bool kernel = true;
        for (int a = 0; a <= 4 && kernel; ++a)
            for (int b = 0; b <= 4 && kernel; ++b) {
                auto ab = gf_ballot_ab(a, b, order);
                Monomial m = Monomial::of(Var::u, a).times(Monomial::of(Var::v, b));
                for (int n = 0; n <= order && kernel; ++n)
                    if (buvz.coeff(n, m) != ab.coeff_unit(n)) kernel = false;
            }
        out.push_back(series_check("two-sided kernel coefficients match per-pair series",
                                   kernel, order));
    }

    return out;
}

std::vector<CheckResult> catalog_vs_enumeration(int order) {
    std::vector<CheckResult> out;
    // Exhaustive enumeration is the oracle; cap its order so the densest
    // families stay affordable.
    const int np = std::min(order, 10);   // path families: binom(2n, n) objects
    const int ns = std::min(order, 12);   // sparse families by semiperimeter

    auto dsf = [](const PathWord& w) { return ds_path(w); };
    auto svf = [](const PathWord& w) { return sv(w); };
    auto phof = [](const PathWord& w) { return pho(w); };
    auto hmf = [](const PathWord& w) { return hm(w); };

    auto add = [&](const std::string& name, bool ok, int ord) {
        out.push_back(series_check(name, ok, ord));
    };

    add("Catalan series counts Dyck paths",
        gf_catalog(GfName::CATALAN, np) == bf_paths(PathFamily::Dyck, np, {}), np);
    add("grand ds series counts grand Dyck paths by ds",
        gf_catalog(GfName::DS_GRAND, np) ==
            bf_paths(PathFamily::GrandDyck, np, {{Var::s, dsf}}),
        np);
    add("grand sv series counts grand Dyck paths by sv",
        gf_catalog(GfName::SV_GRAND, np) ==
            bf_paths(PathFamily::GrandDyck, np, {{Var::v, svf}}),
        np);
    add("joint ds/sv series counts grand Dyck paths by both",
        gf_catalog(GfName::JOINT_DS_SV, np) ==
            bf_paths(PathFamily::GrandDyck, np, {{Var::s, dsf}, {Var::v, svf}}),
        np);
    add("pho series counts grand Dyck paths by peaks at height one",
        gf_catalog(GfName::PHO_GRAND, np) ==
            bf_paths(PathFamily::GrandDyck, np, {{Var::s, phof}}),
        np);
    add("midpoint series counts grand Dyck paths by midpoint height",
        gf_catalog(GfName::HM_GRAND, np) ==
            bf_paths(PathFamily::GrandDyck, np, {{Var::y, hmf}}),
        np);
    add("joint ds/midpoint series counts grand Dyck paths by both",
        gf_catalog(GfName::JOINT_DS_HM, np) ==
            bf_paths(PathFamily::GrandDyck, np, {{Var::s, dsf}, {Var::y, hmf}}),
        np);
    add("square ds series counts partitions in the square",
        gf_catalog(GfName::DS_SQUARE, np) ==
            bf_partitions_square(np, Var::s,
                                 [](const Partition& p, int n) { return ds_square(p, n); }),
        np);
    add("square dsh series counts partitions in the square by dsh",
        gf_catalog(GfName::DSH_SQUARE, np) ==
            bf_partitions_square(np, Var::s,
                                 [](const Partition& p, int) { return dsh(p); }),
        np);
    add("minimal-square ds series counts partitions by side",
        gf_catalog(GfName::DS_MINSQ, np) ==
            bf_partitions_minsq(np, Var::s,
                                [](const Partition& p, int m) { return ds_square(p, m); }),
        np);
    add("minimal-square dsh series counts partitions by side",
        gf_catalog(GfName::DSH_MINSQ, np) ==
            bf_partitions_minsq(np, Var::s,
                                [](const Partition& p, int) { return dsh(p); }),
        np);
    add("semiperimeter ds series counts partitions by semiperimeter",
        gf_catalog(GfName::PSP, ns) ==
            bf_partitions_sp(ns, Var::s,
                             [](const Partition& p) { return ds_partition(p); }),
        ns);
    add("bargraph ds series counts unimodal centered bargraphs",
        gf_catalog(GfName::UB_SP, ns) == bf_bargraphs_ub(ns, false), ns);
    add("xy-marked bargraph series counts bargraphs by width and height",
        gf_catalog(GfName::UB_XY, ns) == bf_bargraphs_ub(ns, true), ns);
    add("endpoint-marked row series counts nonnegative paths",
        gf_catalog(GfName::BALLOT_B0B, ns) == bf_ballot_b0b(ns), ns);

    {
        bool ok = true;
        for (int a = 0; a <= 3 && ok; ++a)
            for (int b = 0; b <= 3 && ok; ++b) {
                auto ab = gf_ballot_ab(a, b, np);
                for (int n = 0; n <= np && ok; ++n) {
                    if ((n + a - b) % 2 != 0) continue;
                    auto paths = enumerate_ballot_paths(a, b, n, {});
                    ok = ab.coeff_unit(n) == Rat(static_cast<long long>(paths.size()));
                }
            }
        out.push_back(series_check("per-pair path series counts enumerated paths", ok, np));
    }

    return out;
}

// ---------------------------------------------------------------------------
// walks / functional equations
// ---------------------------------------------------------------------------

std::vector<CheckResult> feq_checks(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const int order = opt.order;

    {
        auto r = feq_residual(order, WalkMark::Ds, false);
        out.push_back({"steps-on-axis functional equation residual", r.is_zero(),
                       r.is_zero() ? "identically zero to order " + std::to_string(order)
                                   : "nonzero residual"});
        auto p = feq_residual(order, WalkMark::Ds, true);
        out.push_back({"steps-on-axis residual detects a perturbed kernel", !p.is_zero(),
                       !p.is_zero() ? "perturbation produced a nonzero residual"
                                    : "perturbation went undetected"});
    }
    {
        auto r = feq_residual(order, WalkMark::Sv, false);
        out.push_back({"steps-from-axis functional equation residual", r.is_zero(),
                       r.is_zero() ? "identically zero to order " + std::to_string(order)
                                   : "nonzero residual"});
        auto p = feq_residual(order, WalkMark::Sv, true);
        out.push_back({"steps-from-axis residual detects a perturbed kernel", !p.is_zero(),
                       !p.is_zero() ? "perturbation produced a nonzero residual"
                                    : "perturbation went undetected"});
    }

    for (const auto& c : walk_specialization_checks(order))
        out.push_back({c.name, c.ok,
                       c.ok ? "matched " + std::to_string(c.compared) + " terms" : c.detail});

    {
        // Histograms of walks ending on the x-axis must agree with the Dyck
        // statistics computed directly on words.
        int max_n = std::min(opt.max_n, 8);
        bool ds_ok = true, sv_ok = true;
        for (int n = 1; n <= max_n; ++n) {
            auto walk_ds = exact_distribution(DistClass::DyckDs, n);
            auto walk_sv = exact_distribution(DistClass::DyckSv, n);
            ds_ok = ds_ok && walk_ds.counts == exact_distribution_oracle(DistClass::DyckDs, n).counts;
            sv_ok = sv_ok && walk_sv.counts == exact_distribution_oracle(DistClass::DyckSv, n).counts;
        }
        out.push_back({"walk histograms match Dyck word statistics", ds_ok && sv_ok,
                       "ds and sv, semilengths 1.." + std::to_string(max_n)});
    }

    {
        auto wlk = hm_dyck_walks(order);
        auto bal = hm_dyck_ballot(order);
        auto sqr = hm_dyck_squared(order);
        bool three = wlk == bal && bal == sqr;
        out.push_back({"midpoint-height series computed three ways agrees", three,
                       three ? "walk DP, squared counts, coefficientwise square; order " +
                                   std::to_string(order)
                             : "routes disagree"});

        bool cat_ok = bal.subst(Var::y, Rat(1)) == gf_catalog(GfName::CATALAN, order);
        out.push_back({"midpoint series at y=1 is the Catalan series", cat_ok,
                       "order " + std::to_string(order)});

        auto at0 = bal.subst(Var::y, Rat(0));
        bool zero_ok = true;
        for (int n = 0; n <= order && zero_ok; ++n) {
            Rat want = (n % 2 == 0) ? Rat(catalan(n / 2) * catalan(n / 2)) : Rat(0);
            zero_ok = at0.coeff_unit(n) == want;
        }
        out.push_back({"midpoint series at y=0 gives squared Catalan numbers", zero_ok,
                       "order " + std::to_string(order)});
    }

    return out;
}

// ---------------------------------------------------------------------------
// moments
// ---------------------------------------------------------------------------

std::vector<CheckResult> moment_checks(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (DistClass c : {DistClass::GrandDyckDs, DistClass::GrandDyckSv}) {
        bool ok = true;
        int bad_n = 0;
        for (int n = 1; n <= 12 && ok; ++n) {
            Moments closed = closed_form_moments(c, n);
            Moments hist = histogram_moments(exact_distribution(c, n));
            ok = closed.mean == hist.mean && closed.variance == hist.variance;
            if (!ok) bad_n = n;
        }
        out.push_back({std::string(dist_class_name(c)) + " closed-form moments", ok,
                       ok ? "mean and variance exact for n <= 12"
                          : "mismatch at n = " + std::to_string(bad_n)});
    }

    {
        const DistClass classes[] = {
            DistClass::GrandDyckDs,  DistClass::GrandDyckSv, DistClass::GrandDyckPho,
            DistClass::GrandDyckHm,  DistClass::DyckDs,      DistClass::DyckSv,
            DistClass::DyckHm,       DistClass::SquareDs,    DistClass::SquareDsh,
            DistClass::MinSquareDs,  DistClass::SpDs,        DistClass::UnimodalBargraphDs,
        };
        int max_n = std::min(opt.max_n, 10);
        bool ok = true;
        std::string bad;
        for (DistClass c : classes)
            for (int n = 1; n <= max_n && ok; ++n) {
                auto fast = exact_distribution(c, n);
                auto slow = exact_distribution_oracle(c, n);
                ok = fast.counts == slow.counts;
                if (!ok) bad = std::string(dist_class_name(c)) + " at n = " + std::to_string(n);
            }
        out.push_back({"fast distributions equal enumeration oracle", ok,
                       ok ? "12 classes, n <= " + std::to_string(max_n) : bad});
    }
    return out;
}

// ---------------------------------------------------------------------------
// limit laws
// ---------------------------------------------------------------------------

std::vector<CheckResult> limit_checks(const VerifyOptions&) {
    std::vector<CheckResult> out;
    const DistClass classes[] = {
        DistClass::GrandDyckDs, DistClass::GrandDyckSv,       DistClass::SquareDs,
        DistClass::SquareDsh,   DistClass::UnimodalBargraphDs, DistClass::SpDs,
    };
    const int ns[] = {50, 100, 200, 400};
    const double threshold = 0.08;

    for (DistClass c : classes) {
        LimitLaw law = reference_law(c);
        std::vector<double> ks;
        for (int n : ns)
            ks.push_back(limit_law_distance(exact_distribution(c, n), law).kolmogorov);
        bool decreasing = true;
        for (size_t i = 1; i < ks.size(); ++i) decreasing = decreasing && ks[i] < ks[i - 1];
        bool small = ks.back() < threshold;
        std::ostringstream d;
        d << law.name() << "; KS = " << fmt(ks[0]) << ", " << fmt(ks[1]) << ", " << fmt(ks[2])
          << ", " << fmt(ks[3]) << " at n = 50, 100, 200, 400";
        if (!decreasing) d << "; not monotone";
        if (!small) d << "; exceeds " << fmt(threshold) << " at n = 400";
        out.push_back({std::string(dist_class_name(c)) + " converges to its limit law",
                       decreasing && small, d.str()});
    }

    struct MeanTarget {
        DistClass c;
        double target;
        const char* label;
    };
    const MeanTarget targets[] = {
        {DistClass::GrandDyckDs, std::sqrt(std::acos(-1.0)) / 2.0, "sqrt(pi)/2"},
        {DistClass::GrandDyckSv, std::sqrt(std::acos(-1.0)), "sqrt(pi)"},
    };
    for (const auto& t : targets) {
        const int n = 400;
        Moments m = closed_form_moments(t.c, n);
        double scaled = m.mean.convert_to<double>() / std::sqrt(static_cast<double>(n));
        double rel = std::abs(scaled - t.target) / t.target;
        bool ok = rel <= 0.05;
        std::ostringstream d;
        d << "mean/sqrt(n) = " << fmt(scaled) << " vs " << t.label << " = " << fmt(t.target)
          << " (" << fmt(rel * 100.0) << "% off) at n = " << n;
        out.push_back({std::string(dist_class_name(t.c)) + " mean scales to " + t.label, ok,
                       d.str()});
    }
    return out;
}

// ---------------------------------------------------------------------------
// sequence fixtures
// ---------------------------------------------------------------------------

std::vector<CheckResult> oeis_checks(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::string dir = opt.fixture_dir.empty() ? default_fixture_dir() : opt.fixture_dir;
    auto fixtures = load_fixture_dir(dir);

    std::set<std::string> seen;
    for (const auto& f : fixtures) {
        seen.insert(f.id);
        SequenceCheck c = check_fixture(f);
        std::string detail = "compared " + std::to_string(c.compared) + " terms";
        if (!c.detail.empty()) detail += "; " + c.detail;
        out.push_back({f.id + " fixture matches the library route", c.ok, detail});
    }

    bool all_present = true;
    std::string missing;
    for (const auto& id : known_sequence_ids())
        if (!seen.count(id)) {
            all_present = false;
            missing += (missing.empty() ? "" : ", ") + id;
        }
    out.push_back({"fixture directory covers every catalogued sequence", all_present,
                   all_present ? std::to_string(fixtures.size()) + " fixtures in " + dir
                               : "missing: " + missing});
    return out;
}

}  // namespace

SuiteResult verify_bijections(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "bijections";
    const int n = opt.max_n;
    r.checks.push_back(check_phi(std::min(n, 8)));
    r.checks.push_back(check_sv_to_ret(std::min(n, 8)));
    r.checks.push_back(check_partial_n(std::min(n, 8)));
    r.checks.push_back(check_psi(std::min(n, 8)));
    r.checks.push_back(check_mu(n + 3));
    r.checks.push_back(check_theta(n + 3));
    r.checks.push_back(check_big_theta(n + 2));
    r.checks.push_back(check_walk_chain(std::min(n, 9)));
    return r;
}

SuiteResult verify_series_identities(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "series_identities";
    for (auto& c : closed_form_identities(opt.order)) r.checks.push_back(std::move(c));
    for (auto& c : catalog_vs_enumeration(opt.order)) r.checks.push_back(std::move(c));
    return r;
}

SuiteResult verify_feq(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "feq";
    r.checks = feq_checks(opt);
    return r;
}

SuiteResult verify_moments(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "moments";
    r.checks = moment_checks(opt);
    return r;
}

SuiteResult verify_limits(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "limits";
    r.checks = limit_checks(opt);
    return r;
}

SuiteResult verify_oeis(const VerifyOptions& opt) {
    SuiteResult r;
    r.suite = "oeis";
    r.checks = oeis_checks(opt);
    return r;
}

std::vector<std::string> verify_suite_names() {
    return {"bijections", "series_identities", "feq", "moments", "limits", "oeis"};
}

std::vector<SuiteResult> run_verify(const std::string& suite, const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    auto run_one = [&](const std::string& name) {
        if (name == "bijections") out.push_back(verify_bijections(opt));
        else if (name == "series_identities") out.push_back(verify_series_identities(opt));
        else if (name == "feq") out.push_back(verify_feq(opt));
        else if (name == "moments") out.push_back(verify_moments(opt));
        else if (name == "limits") out.push_back(verify_limits(opt));
        else if (name == "oeis") out.push_back(verify_oeis(opt));
        else throw std::invalid_argument("unknown verify suite: " + name);
    };
    if (suite == "all") {
        for (const auto& name : verify_suite_names()) run_one(name);
    } else {
        run_one(suite);
    }
    return out;
}

std::string verify_report_json(const std::vector<SuiteResult>& results) {
    nlohmann::json suites = nlohmann::json::array();
    bool all_ok = true;
    for (const auto& s : results) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : s.checks)
            checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        suites.push_back({{"suite", s.suite}, {"ok", s.ok()}, {"checks", checks}});
        all_ok = all_ok && s.ok();
    }
    nlohmann::json doc{{"suites", suites}, {"ok", all_ok}};
    return doc.dump(2);
}

std::string verify_report_text(const std::vector<SuiteResult>& results) {
    std::ostringstream out;
    int passed = 0, total = 0;
    for (const auto& s : results) {
        for (const auto& c : s.checks) {
            out << (c.ok ? "ok   " : "FAIL ") << s.suite << ": " << c.name;
            if (!c.detail.empty()) out << " (" << c.detail << ")";
            out << "\n";
            ++total;
            if (c.ok) ++passed;
        }
    }
    out << passed << "/" << total << " checks passed\n";
    return out.str();
}

}  // namespace symmetria
