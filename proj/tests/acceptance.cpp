// Acceptance gate for the library. Each criterion prints exactly one
// PASS/FAIL line (plus indented measurements where they matter) and the
// binary exits nonzero if any criterion fails.
//
//  1. The five count triangles (grand Dyck ds/sv, Dyck ds/sv, partitions by
//     semiperimeter ds) match frozen values exactly, produced independently
//     by exhaustive enumeration, by series-derived recurrences, and (for the
//     Dyck statistics) by the quarter-plane walk DP.
//  2. Both walk functional-equation residuals vanish identically through
//     z-degree 12 (and a deliberately perturbed kernel is detected).
//  3. The closed-form series identity suite holds exactly at order 12.
//  4. Every bijection round-trips with exact statistic transport over all
//     objects of size <= 7 (<= 10 for the Motzkin-type families).
//  5. Library-computed prefixes match the frozen sequence fixtures
//     (>= 10 terms each) for the nine externally sourced sequences and the
//     three table-derived ones.
//  6. Closed-form mean/variance equal brute-force moments as exact rationals
//     for grand Dyck ds and sv through n = 12.
//  7. Kolmogorov distance between X_n/sqrt(n) and the reference law
//     decreases along n in {50,100,200,400} and is < 0.08 at n = 400 for six
//     distribution classes.
//  8. Grand Dyck mean scaling: ds mean / sqrt(n) within 5% of sqrt(pi)/2 and
//     sv mean / sqrt(n) within 5% of sqrt(pi), at n = 400.

#include "symmetria/distributions.hpp"
#include "symmetria/numeric.hpp"
#include "symmetria/oeis.hpp"
#include "symmetria/verify.hpp"
#include "symmetria/walks.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

using namespace symmetria;

namespace {

using Row = std::vector<long long>;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Histogram -> dense row over k in [k_lo, k_hi]; any key outside the window
// marks the row as malformed.
bool hist_row_equals(const Histogram& h, int k_lo, int k_hi, const Row& want) {
    if (static_cast<int>(want.size()) != k_hi - k_lo + 1) return false;
    for (const auto& [k, c] : h.counts)
        if (k < k_lo || k > k_hi) return false;
    for (int k = k_lo; k <= k_hi; ++k) {
        auto it = h.counts.find(k);
        Int got = (it == h.counts.end()) ? Int(0) : it->second;
        if (got != Int(want[static_cast<size_t>(k - k_lo)])) return false;
    }
    return true;
}

bool hists_equal(const Histogram& a, const Histogram& b) {
    return a.counts == b.counts;
}

// Dyck-statistic histogram through the quarter-plane walk DP: walks of
// length n ending on the x-axis, aggregated by the number of marked steps.
Histogram walk_route_histogram(WalkMark mark, int n) {
    WalkWeighting w;
    if (mark == WalkMark::Ds)
        w.mark_steps_on_axis = true;
    else
        w.mark_steps_from_axis = true;
    auto tables = walk_dp(n, w, /*colored=*/true);
    Histogram h;
    h.n = n;
    for (const auto& [key, cnt] : tables[static_cast<size_t>(n)].counts) {
        const auto& [x, y, k] = key;
        (void)x;
        if (y == 0) h.counts[k] += cnt;
    }
    return h;
}

struct TriangleSpec {
    DistClass cls;
    int n_lo, n_hi;
    int k_lo;                 // k runs k_lo..n (paths) or k_lo..k_lo+width-1 (fixed width)
    int fixed_width;          // 0 = rows widen with n
    std::vector<Row> rows;    // one per n
};

bool check_triangle(const TriangleSpec& t, std::string& err) {
    for (int n = t.n_lo; n <= t.n_hi; ++n) {
        const Row& want = t.rows[static_cast<size_t>(n - t.n_lo)];
        int k_hi = t.fixed_width ? t.k_lo + t.fixed_width - 1 : n;
        Histogram fast = exact_distribution(t.cls, n);
        Histogram oracle = exact_distribution_oracle(t.cls, n);
        if (!hists_equal(fast, oracle)) {
            err = std::string(dist_class_name(t.cls)) + " series/DP route disagrees with enumeration at n = " + std::to_string(n);
            return false;
        }
        if (!hist_row_equals(fast, t.k_lo, k_hi, want)) {
            err = std::string(dist_class_name(t.cls)) + " row differs from the frozen values at n = " + std::to_string(n);
            return false;
        }
        if (t.cls == DistClass::DyckDs || t.cls == DistClass::DyckSv) {
            Histogram walk = walk_route_histogram(
                t.cls == DistClass::DyckDs ? WalkMark::Ds : WalkMark::Sv, n);
            if (!hists_equal(walk, fast)) {
                err = std::string(dist_class_name(t.cls)) + " walk DP route disagrees at n = " + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool criterion_triangles(std::string& note) {
    std::vector<TriangleSpec> specs = {
        {DistClass::GrandDyckDs, 1, 6, 0, 0,
         {{0, 2},
          {2, 0, 4},
          {4, 8, 0, 8},
          {14, 16, 24, 0, 16},
          {44, 64, 48, 64, 0, 32},
          {148, 208, 216, 128, 160, 0, 64}}},
        {DistClass::GrandDyckSv, 1, 6, 1, 0,
         {{2},
          {2, 4},
          {4, 8, 8},
          {10, 20, 24, 16},
          {28, 56, 72, 64, 32},
          {84, 168, 224, 224, 160, 64}}},
        {DistClass::DyckDs, 1, 7, 1, 0,
         {{1},
          {0, 2},
          {2, 0, 3},
          {2, 6, 0, 6},
          {8, 8, 16, 0, 10},
          {16, 32, 24, 40, 0, 20},
          {52, 84, 108, 60, 90, 0, 35}}},
        {DistClass::DyckSv, 1, 7, 1, 0,
         {{1},
          {0, 2},
          {0, 2, 3},
          {0, 2, 6, 6},
          {0, 4, 12, 16, 10},
          {0, 8, 24, 40, 40, 20},
          {0, 20, 60, 104, 120, 90, 35}}},
        {DistClass::SpDs, 2, 8, 0, 5,
         {{0, 1, 0, 0, 0},
          {2, 0, 0, 0, 0},
          {2, 0, 2, 0, 0},
          {4, 4, 0, 0, 0},
          {6, 6, 0, 4, 0},
          {16, 8, 8, 0, 0},
          {24, 16, 16, 0, 8}}},
    };
    int rows = 0;
    for (const auto& t : specs) {
        std::string err;
        if (!check_triangle(t, err)) {
            note = err;
            return false;
        }
        rows += t.n_hi - t.n_lo + 1;
    }
    note = std::to_string(rows) + " rows exact across enumeration, series recurrence, and walk DP";
    return true;
}

bool criterion_feq(std::string& note) {
    for (WalkMark m : {WalkMark::Ds, WalkMark::Sv}) {
        if (!feq_residual(12, m).is_zero()) {
            note = std::string("residual nonzero for the ") +
                   (m == WalkMark::Ds ? "ds" : "sv") + " equation";
            return false;
        }
        if (feq_residual(8, m, /*perturb_kernel=*/true).is_zero()) {
            note = "perturbed kernel not detected (vacuous check)";
            return false;
        }
    }
    note = "both residuals identically zero through z-degree 12";
    return true;
}

bool suite_criterion(SuiteResult (*suite)(const VerifyOptions&),
                     const VerifyOptions& opt, std::string& note) {
    SuiteResult r = suite(opt);
    int passed = 0;
    std::string first_fail;
    for (const auto& c : r.checks) {
        if (c.ok)
            ++passed;
        else if (first_fail.empty())
            first_fail = c.name + " (" + c.detail + ")";
    }
    if (!r.ok()) {
        note = "failed: " + first_fail;
        return false;
    }
    note = std::to_string(passed) + "/" + std::to_string(r.checks.size()) + " checks passed";
    return true;
}

bool criterion_oeis(std::string& note) {
    const std::vector<std::string> gated = {
        "A108747", "A051286", "A004148", "A005817", "A005558",
        "A001246", "A213600", "A018224", "A000891",  // externally sourced
        "A341415", "A341445", "A339754",             // table-derived
    };
    std::map<std::string, OeisFixture> by_id;
    for (auto& f : load_fixture_dir(default_fixture_dir())) by_id[f.id] = f;
    int compared_min = 1 << 30;
    for (const auto& id : gated) {
        auto it = by_id.find(id);
        if (it == by_id.end()) {
            note = "fixture missing for " + id;
            return false;
        }
        SequenceCheck sc = check_fixture(it->second, 10);
        if (!sc.ok) {
            note = id + ": " + sc.detail;
            return false;
        }
        if (sc.compared < compared_min) compared_min = sc.compared;
    }
    note = std::to_string(gated.size()) + " sequences match, >= " +
           std::to_string(compared_min) + " terms each";
    // Informative only: the ambiguous-flattening sequence is checked but not gated.
    if (by_id.count("A298645")) {
        SequenceCheck sc = check_fixture(by_id["A298645"], 10);
        note += std::string("; A298645 (ungated) ") + (sc.ok ? "matches" : "DIFFERS");
    }
    return true;
}

bool criterion_moments(std::string& note) {
    Moments m2 = closed_form_moments(DistClass::GrandDyckDs, 2);
    if (m2.mean != Rat(4) / 3) {
        note = "ds mean at n = 2 is not 4/3";
        return false;
    }
    for (DistClass cls : {DistClass::GrandDyckDs, DistClass::GrandDyckSv}) {
        for (int n = 1; n <= 12; ++n) {
            Moments closed = closed_form_moments(cls, n);
            Moments brute = histogram_moments(exact_distribution_oracle(cls, n));
            if (closed.mean != brute.mean || closed.variance != brute.variance) {
                note = std::string(dist_class_name(cls)) +
                       " closed form differs from brute force at n = " + std::to_string(n);
                return false;
            }
        }
    }
    note = "closed forms equal brute-force rationals for n <= 12";
    return true;
}

bool criterion_limits(std::string& note) {
    const std::vector<DistClass> classes = {
        DistClass::GrandDyckDs, DistClass::GrandDyckSv, DistClass::SquareDs,
        DistClass::SquareDsh,   DistClass::UnimodalBargraphDs, DistClass::SpDs,
    };
    const std::vector<int> sizes = {50, 100, 200, 400};
    bool all_ok = true;
    std::string worst;
    for (DistClass cls : classes) {
        LimitLaw law = reference_law(cls);
        std::vector<double> d;
        for (int n : sizes)
            d.push_back(limit_law_distance(exact_distribution(cls, n), law).kolmogorov);
        bool monotone = d[0] > d[1] && d[1] > d[2] && d[2] > d[3];
        bool small = d[3] < 0.08;
        std::printf("      %-22s vs %-18s KS = %.4f %.4f %.4f %.4f%s%s\n",
                    dist_class_name(cls), law.name().c_str(), d[0], d[1], d[2], d[3],
                    monotone ? "" : "  [not monotone]",
                    small ? "" : "  [>= 0.08 at n = 400]");
        if (!(monotone && small)) {
            all_ok = false;
            if (!worst.empty()) worst += ", ";
            worst += dist_class_name(cls);
        }
    }
    note = all_ok ? "all six classes monotone and < 0.08 at n = 400"
                  : "out of bounds: " + worst;
    return all_ok;
}

bool criterion_mean_scaling(std::string& note) {
    const int n = 400;
    const double root_n = std::sqrt(static_cast<double>(n));
    struct Target {
        DistClass cls;
        double want;
        const char* label;
    } targets[] = {
        {DistClass::GrandDyckDs, std::sqrt(M_PI) / 2.0, "sqrt(pi)/2"},
        {DistClass::GrandDyckSv, std::sqrt(M_PI), "sqrt(pi)"},
    };
    bool ok = true;
    note.clear();
    for (const auto& t : targets) {
        Moments m = histogram_moments(exact_distribution(t.cls, n));
        double scaled = m.mean.convert_to<double>() / root_n;
        double rel = std::fabs(scaled - t.want) / t.want;
        if (!note.empty()) note += "; ";
        note += std::string(dist_class_name(t.cls)) + " mean/sqrt(n) = " +
                std::to_string(scaled) + " vs " + t.label + " (" +
                std::to_string(rel * 100.0) + "% off)";
        if (rel >= 0.05) ok = false;
    }
    return ok;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        bool (*run)(std::string&);
    };
    // Wrappers so every criterion shares the bool(std::string&) shape.
    static auto run_series = +[](std::string& note) {
        VerifyOptions opt;
        opt.order = 12;
        return suite_criterion(&verify_series_identities, opt, note);
    };
    static auto run_bijections = +[](std::string& note) {
        VerifyOptions opt;
        opt.max_n = 7;
        return suite_criterion(&verify_bijections, opt, note);
    };
    const std::vector<Criterion> criteria = {
        {"count triangles (enumeration = series = walk DP = frozen rows)", &criterion_triangles},
        {"walk functional-equation residuals vanish through z-degree 12", &criterion_feq},
        {"closed-form series identities hold exactly at order 12", run_series},
        {"bijections round-trip with exact statistic transport", run_bijections},
        {"sequence fixtures match library-computed prefixes", &criterion_oeis},
        {"closed-form moments equal brute-force moments exactly", &criterion_moments},
        {"limit-law convergence (KS decreasing, < 0.08 at n = 400)", &criterion_limits},
        {"grand Dyck mean scaling within 5% at n = 400", &criterion_mean_scaling},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = Clock::now();
        std::string note;
        bool ok = false;
        try {
            ok = criteria[i].run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        // The per-class measurement block for criterion 7 prints before its
        // summary line; everything else prints one line.
        std::printf("[%s] criterion %zu: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL",
                    i + 1, criteria[i].label, seconds_since(t0),
                    note.empty() ? "" : " -- ", note.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures ? 1 : 0;
}
