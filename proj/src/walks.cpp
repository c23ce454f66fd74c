#include "symmetria/walks.hpp"

#include "symmetria/gf_catalog.hpp"
#include "symmetria/paths.hpp"

#include <stdexcept>

namespace symmetria {

namespace {

struct WalkStep {
    int dx, dy;
    bool horizontal;  // E or W
};

constexpr std::array<WalkStep, 4> kWalkSteps{{
    {+1, 0, true},   // E
    {-1, 0, true},   // W
    {-1, +1, false}, // NW
    {+1, -1, false}, // SE
}};

}  // namespace

std::vector<WalkTable> walk_dp(int n, const WalkWeighting& w, bool colored) {
    if (n < 0) throw std::invalid_argument("walk_dp: negative length");
    if (w.mark_steps_on_axis && w.mark_steps_from_axis)
        throw std::invalid_argument("walk_dp: at most one weighting flag");
    std::vector<WalkTable> tables(static_cast<size_t>(n) + 1);
    tables[0].length = 0;
    tables[0].counts[{0, 0, 0}] = 1;
    for (int len = 1; len <= n; ++len) {
        WalkTable& cur = tables[static_cast<size_t>(len)];
        cur.length = len;
        for (const auto& [state, c] : tables[static_cast<size_t>(len - 1)].counts) {
            auto [x, y, k] = state;
            for (const WalkStep& st : kWalkSteps) {
                int nx = x + st.dx;
                int ny = y + st.dy;
                if (nx < 0 || ny < 0) continue;
                int mult = (colored && st.dy == +1 && y == 0) ? 2 : 1;
                int nk = k;
                if (y == 0) {
                    if (w.mark_steps_on_axis && st.horizontal) ++nk;
                    if (w.mark_steps_from_axis) ++nk;
                }
                cur.counts[{nx, ny, nk}] += c * mult;
            }
        }
    }
    return tables;
}

TruncatedSeries walk_gf(int order, WalkMark mark) {
    WalkWeighting w;
    Var t = Var::s;
    if (mark == WalkMark::Ds) {
        w.mark_steps_on_axis = true;
    } else {
        w.mark_steps_from_axis = true;
        t = Var::v;
    }
    std::vector<WalkTable> tables = walk_dp(order, w, true);
    TruncatedSeries r(order);
    for (int n = 0; n <= order; ++n) {
        for (const auto& [state, c] : tables[static_cast<size_t>(n)].counts) {
            auto [x, y, k] = state;
            Monomial m = Monomial::of(Var::x, x).times(Monomial::of(Var::y, y))
                             .times(Monomial::of(t, k));
            r.add_term(n, m, Rat(c));
        }
    }
    return r;
}

TruncatedSeries feq_residual(int order, WalkMark mark, bool perturb_kernel) {
    TruncatedSeries r = walk_gf(order, mark);
    TruncatedSeries r_x0 = r.subst(Var::y, Rat(0));   // R(x, 0)
    TruncatedSeries r_0y = r.subst(Var::x, Rat(0));   // R(0, y)
    TruncatedSeries r_00 = r_x0.subst(Var::x, Rat(0));
    Monomial mx = Monomial::of(Var::x);
    Monomial my = Monomial::of(Var::y);
    Monomial mx2 = Monomial::of(Var::x, 2);
    Monomial my2 = Monomial::of(Var::y, 2);
    Var t = mark == WalkMark::Ds ? Var::s : Var::v;
    Monomial mt = Monomial::of(t);

    // kernel = xy - z (y + x^2)(1 + y) = xy - z (y + y^2 + x^2 + x^2 y);
    // the perturbed variant replaces (1 + y) by (1 + 2y).
    TruncatedSeries kernel(order);
    kernel.add_term(0, mx.times(my), 1);
    Rat ycoef = perturb_kernel ? Rat(2) : Rat(1);
    kernel.add_term(1, my, -1);
    kernel.add_term(1, my2, -ycoef);
    kernel.add_term(1, mx2, -1);
    kernel.add_term(1, mx2.times(my), -ycoef);

    // rhs constant part: xy
    TruncatedSeries rhs = TruncatedSeries::term(order, 1, mx.times(my), 0);

    // - z y (1 + y) R(0, y)
    TruncatedSeries m_0y(order);
    m_0y.add_term(1, my, -1);
    m_0y.add_term(1, my2, -1);
    rhs = rhs + m_0y * r_0y;

    // ds:  z (y^2 - x^2 + (s-1) y (x^2 + 1)) R(x, 0)
    // sv:  z (y^2 - x^2 + (v-1) y (x^2 + 1 + 2y)) R(x, 0)
    TruncatedSeries m_x0(order);
    m_x0.add_term(1, my2, 1);
    m_x0.add_term(1, mx2, -1);
    m_x0.add_term(1, my.times(mx2).times(mt), 1);
    m_x0.add_term(1, my.times(mx2), -1);
    m_x0.add_term(1, my.times(mt), 1);
    m_x0.add_term(1, my, -1);
    if (mark == WalkMark::Sv) {
        m_x0.add_term(1, my2.times(mt), 2);
        m_x0.add_term(1, my2, -2);
    }
    rhs = rhs + m_x0 * r_x0;

    // ds:  - z y (y + s - 1) R(0, 0)
    // sv:  - z y (y + (v-1)(1 + 2y)) R(0, 0)
    TruncatedSeries m_00(order);
    m_00.add_term(1, my2, -1);
    m_00.add_term(1, my.times(mt), -1);
    m_00.add_term(1, my, 1);
    if (mark == WalkMark::Sv) {
        m_00.add_term(1, my2.times(mt), -2);
        m_00.add_term(1, my2, 2);
    }
    rhs = rhs + m_00 * r_00;

    return kernel * r - rhs;
}

std::vector<NamedCheck> walk_specialization_checks(int order) {
    std::vector<NamedCheck> out;
    auto push = [&out](std::string name, bool ok, int compared, std::string detail = {}) {
        out.push_back({std::move(name), ok, compared, std::move(detail)});
    };

    TruncatedSeries r = walk_gf(order, WalkMark::Ds).subst(Var::s, Rat(1));
    TruncatedSeries r00 = r.subst(Var::x, Rat(0)).subst(Var::y, Rat(0));
    TruncatedSeries r11 = r.subst(Var::x, Rat(1)).subst(Var::y, Rat(1));
    TruncatedSeries r01 = r.subst(Var::x, Rat(0)).subst(Var::y, Rat(1));

    {
        bool ok = true;
        int compared = 0;
        std::string detail;
        for (int n = 0; n <= order; ++n) {
            Rat got = r00.coeff_unit(n);
            Rat want = n % 2 == 0 ? Rat(catalan(n / 2) * catalan(n / 2)) : Rat(0);
            ++compared;
            if (got != want) { ok = false; detail = "mismatch at z^" + std::to_string(n); break; }
        }
        push("origin-to-origin walks are squared Catalan numbers", ok, compared, detail);
    }
    {
        bool ok = true;
        int compared = 0;
        std::string detail;
        for (int n = 0; n <= order; ++n) {
            Rat got = r11.coeff_unit(n);
            Int b = binomial(n, n / 2);
            ++compared;
            if (got != Rat(b * b)) { ok = false; detail = "mismatch at z^" + std::to_string(n); break; }
        }
        push("all endpoints combined give squared central binomials", ok, compared, detail);
    }
    {
        bool ok = true;
        int compared = 0;
        std::string detail;
        for (int n = 0; n <= order; ++n) {
            Rat got = r01.coeff_unit(n);
            Rat want = 0;
            if (n % 2 == 0) {
                Int c = catalan(n / 2), b = binomial(n, n / 2);
                want = Rat(2 * c * b - c * c);
            }
            ++compared;
            if (got != want) { ok = false; detail = "mismatch at z^" + std::to_string(n); break; }
        }
        push("walks ending on the y-axis match 2*C*binomial - C^2", ok, compared, detail);
    }
    {
        TruncatedSeries walks = hm_dyck_walks(order);
        TruncatedSeries ballots = hm_dyck_ballot(order);
        bool ok = walks == ballots;
        push("x-axis endpoint rows are squared ballot counts",
             ok, (order + 1) * (order + 2) / 2, ok ? "" : "series differ");
    }
    {
        // Uncolored model: endpoints on the x-axis give C_m C_(m+1) at even
        // lengths and C_(m+1)^2 at odd lengths; all endpoints give the
        // quarter-plane step-set count 1,1,3,6,20,50,175,490,1764,...
        std::vector<WalkTable> dp = walk_dp(order, WalkWeighting{}, false);
        bool ok_axis = true, ok_all = true;
        std::string detail_axis, detail_all;
        for (int n = 0; n <= order; ++n) {
            Int axis = 0, all = 0;
            for (const auto& [state, c] : dp[static_cast<size_t>(n)].counts) {
                auto [x, y, k] = state;
                (void)x; (void)k;
                all += c;
                if (y == 0) axis += c;
            }
            Int want_axis = n % 2 == 0 ? catalan(n / 2) * catalan(n / 2 + 1)
                                       : catalan((n + 1) / 2) * catalan((n + 1) / 2);
            int k = n / 2;
            Int want_all = n % 2 == 0
                               ? 2 * catalan(k) * binomial(n, k) - catalan(k) * catalan(k)
                               : catalan(k + 1) * binomial(n, k);
            if (ok_axis && axis != want_axis) {
                ok_axis = false;
                detail_axis = "mismatch at length " + std::to_string(n);
            }
            if (ok_all && all != want_all) {
                ok_all = false;
                detail_all = "mismatch at length " + std::to_string(n);
            }
        }
        push("uncolored walks ending on the x-axis match Catalan products",
             ok_axis, order + 1, detail_axis);
        push("uncolored walks with free endpoint match the closed product form",
             ok_all, order + 1, detail_all);
    }
    {
        // At y=1 the x-axis endpoint series collapses to the Catalan numbers;
        // at y=0 it collapses to squared Catalan numbers at even lengths.
        TruncatedSeries h = hm_dyck_walks(order);
        TruncatedSeries h1 = h.subst(Var::y, Rat(1));
        TruncatedSeries h0 = h.subst(Var::y, Rat(0));
        bool ok1 = true, ok0 = true;
        std::string d1, d0;
        for (int n = 0; n <= order; ++n) {
            if (ok1 && h1.coeff_unit(n) != Rat(catalan(n))) {
                ok1 = false;
                d1 = "mismatch at z^" + std::to_string(n);
            }
            Rat want0 = n % 2 == 0 ? Rat(catalan(n / 2) * catalan(n / 2)) : Rat(0);
            if (ok0 && h0.coeff_unit(n) != want0) {
                ok0 = false;
                d0 = "mismatch at z^" + std::to_string(n);
            }
        }
        push("midpoint-height series at y=1 gives the Catalan numbers", ok1, order + 1, d1);
        push("midpoint-height series at y=0 gives squared Catalan numbers", ok0, order + 1, d0);
    }
    return out;
}

TruncatedSeries hm_dyck_walks(int order) {
    std::vector<WalkTable> dp = walk_dp(order, WalkWeighting{}, true);
    TruncatedSeries r(order);
    for (int n = 0; n <= order; ++n)
        for (const auto& [state, c] : dp[static_cast<size_t>(n)].counts) {
            auto [x, y, k] = state;
            (void)k;
            if (y == 0) r.add_term(n, Monomial::of(Var::y, x), Rat(c));
        }
    return r;
}

TruncatedSeries hm_dyck_ballot(int order) {
    TruncatedSeries r(order);
    for (int n = 0; n <= order; ++n)
        for (int b = n % 2; b <= n; b += 2) {
            Int c = ballot_count(0, b, n);
            r.add_term(n, Monomial::of(Var::y, b), Rat(c * c));
        }
    return r;
}

TruncatedSeries hm_dyck_squared(int order) {
    return hadamard_square(gf_catalog(GfName::BALLOT_B0B, order));
}

}  // namespace symmetria
