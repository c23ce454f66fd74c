#include "symmetria/distributions.hpp"

#include "symmetria/bargraphs.hpp"
#include "symmetria/partitions.hpp"
#include "symmetria/paths.hpp"
#include "symmetria/statistics.hpp"
#include "symmetria/walks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symmetria {

namespace {

std::string normalize(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != '_' && c != '-') out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// ---------------------------------------------------------------------------
// Integer coefficient rows.
//
// The histograms needed at large n (the limit-law checks go up to n = 400)
// come from generating functions of the shape 1/(linear-in-s + algebraic
// radical). Expanding those with the generic rational-series engine keeps
// every coefficient as a normalized rational, which is needlessly slow at
// order 400; here we extract the same coefficients with plain big-integer
// recurrences. rows[m][k] = number of objects of size m with statistic k.
// Each route is checked against gf_catalog and against exhaustive
// enumeration in the test suite.
// ---------------------------------------------------------------------------

using IntRow = std::vector<Int>;

void trim(IntRow& r) {
    while (!r.empty() && r.back() == 0) r.pop_back();
}

Int at(const IntRow& r, long long k) {
    if (k < 0 || k >= static_cast<long long>(r.size())) return 0;
    return r[static_cast<size_t>(k)];
}

// Catalan numbers C_0..C_m.
std::vector<Int> catalan_list(int m) {
    std::vector<Int> c(static_cast<size_t>(m) + 1);
    c[0] = 1;
    for (int k = 0; k < m; ++k) c[k + 1] = c[k] * 2 * (2 * k + 1) / (k + 2);
    return c;
}

// 1/(2(1-s)z + sqrt(1-4z)): multiplying out the radical leaves
//   1 = D * (1 - 2sz - sum_{j>=2} 2 C_{j-1} z^j),
// so D_m = 2s D_{m-1} + sum_{j=2..m} 2 C_{j-1} D_{m-j}.
std::vector<IntRow> ds_grand_rows(int n) {
    std::vector<Int> cat = catalan_list(std::max(0, n - 1));
    std::vector<IntRow> d(static_cast<size_t>(n) + 1);
    d[0] = {1};
    for (int m = 1; m <= n; ++m) {
        IntRow row(static_cast<size_t>(m) + 1);
        for (int k = 1; k <= m; ++k) row[k] = 2 * at(d[m - 1], k - 1);
        for (int j = 2; j <= m; ++j) {
            Int w = 2 * cat[j - 1];
            const IntRow& prev = d[m - j];
            for (size_t k = 0; k < prev.size(); ++k) row[k] += w * prev[k];
        }
        trim(row);
        d[m] = std::move(row);
    }
    return d;
}

// 1/(1 - v + v sqrt(1-4z)) = 1/(1 - v sum_{j>=1} 2 C_{j-1} z^j):
//   S_m = v * sum_{j=1..m} 2 C_{j-1} S_{m-j}.
std::vector<IntRow> sv_grand_rows(int n) {
    std::vector<Int> cat = catalan_list(std::max(0, n - 1));
    std::vector<IntRow> s(static_cast<size_t>(n) + 1);
    s[0] = {1};
    for (int m = 1; m <= n; ++m) {
        IntRow row(static_cast<size_t>(m) + 1);
        for (int j = 1; j <= m; ++j) {
            Int w = 2 * cat[j - 1];
            const IntRow& prev = s[m - j];
            for (size_t k = 0; k < prev.size(); ++k) row[k + 1] += w * prev[k];
        }
        trim(row);
        s[m] = std::move(row);
    }
    return s;
}

// 1/((1-s)z + sqrt(1-4z)) = 1/(1 - (1+s)z - sum_{j>=2} 2 C_{j-1} z^j):
//   H_m = (1+s) H_{m-1} + sum_{j=2..m} 2 C_{j-1} H_{m-j}.
// This is both the hook-symmetry distribution over partitions in the square
// and the peaks-at-height-one distribution over grand Dyck paths.
std::vector<IntRow> dsh_rows(int n) {
    std::vector<Int> cat = catalan_list(std::max(0, n - 1));
    std::vector<IntRow> h(static_cast<size_t>(n) + 1);
    h[0] = {1};
    for (int m = 1; m <= n; ++m) {
        IntRow row(static_cast<size_t>(m) + 1);
        for (int k = 0; k <= m; ++k) row[k] = at(h[m - 1], k) + at(h[m - 1], k - 1);
        for (int j = 2; j <= m; ++j) {
            Int w = 2 * cat[j - 1];
            const IntRow& prev = h[m - j];
            for (size_t k = 0; k < prev.size(); ++k) row[k] += w * prev[k];
        }
        trim(row);
        h[m] = std::move(row);
    }
    return h;
}

// (sqrt(1-4z^2) - 1 + 2z) / (2z(1-2z)), as integers: the numerator over 2z is
// A(z) = 1 - sum_{k>=1} C_{k-1} z^{2k-1}, and dividing by (1-2z) cumulates:
// Jt_m = 2 Jt_{m-1} + A_m.
std::vector<Int> jtilde_coeffs(int n) {
    std::vector<Int> cat = catalan_list(n / 2 + 1);
    std::vector<Int> a(static_cast<size_t>(n) + 1);
    a[0] = 1;
    for (int k = 1; 2 * k - 1 <= n; ++k) a[2 * k - 1] = -cat[k - 1];
    std::vector<Int> jt(static_cast<size_t>(n) + 1);
    jt[0] = 1;
    for (int m = 1; m <= n; ++m) jt[m] = 2 * jt[m - 1] + a[m];
    return jt;
}

// Partitions by semiperimeter: PSP = 1 + s z^2 D(z^2) + 2 z^3 Jt(z) D(z^2)
// where D = ds_grand_rows' generating function.
IntRow psp_row(int n) {
    if (n == 0) return {1};
    std::vector<IntRow> d = ds_grand_rows(std::max(0, (n - 2) / 2));
    std::vector<Int> jt = jtilde_coeffs(std::max(0, n - 3));
    IntRow row;
    auto bump = [&](size_t need) {
        if (row.size() < need) row.resize(need);
    };
    if (n >= 2 && n % 2 == 0) {
        const IntRow& base = d[(n - 2) / 2];
        bump(base.size() + 1);
        for (size_t k = 0; k < base.size(); ++k) row[k + 1] += base[k];
    }
    for (int m = 0; 3 + 2 * m <= n; ++m) {
        Int w = 2 * jt[n - 3 - 2 * m];
        const IntRow& base = d[m];
        bump(base.size());
        for (size_t k = 0; k < base.size(); ++k) row[k] += w * base[k];
    }
    trim(row);
    return row;
}

// Unimodal centered bargraphs by semiperimeter:
//   UB = z/((1-s)z^2 + Q) - z  with  Q = sqrt(1 - 2z - z^2 - 2z^3 + z^4).
// W = 1/((1-s)z^2 + Q) satisfies W_m = -sum_j Q_j W_{m-j} - W_{m-2} + s W_{m-2},
// and the z^n coefficient of UB is W_{n-1} for n >= 2.
IntRow ub_row(int n) {
    if (n < 2) return {};
    int ord = n - 1;
    std::vector<Int> p(static_cast<size_t>(ord) + 1);
    p[0] = 1;
    if (ord >= 1) p[1] = -2;
    if (ord >= 2) p[2] = -1;
    if (ord >= 3) p[3] = -2;
    if (ord >= 4) p[4] = 1;
    std::vector<Int> q(static_cast<size_t>(ord) + 1);
    q[0] = 1;
    for (int m = 1; m <= ord; ++m) {
        Int acc = p[m];
        for (int i = 1; i < m; ++i) acc -= q[i] * q[m - i];
        if (acc % 2 != 0) throw std::logic_error("ub_row: radical is not integral");
        q[m] = acc / 2;
    }
    std::vector<IntRow> w(static_cast<size_t>(ord) + 1);
    w[0] = {1};
    for (int m = 1; m <= ord; ++m) {
        IntRow row(static_cast<size_t>(m) / 2 + 1);
        for (int j = 1; j <= m; ++j) {
            const IntRow& prev = w[m - j];
            for (size_t k = 0; k < prev.size(); ++k) row[k] -= q[j] * prev[k];
        }
        if (m >= 2) {
            const IntRow& prev = w[m - 2];
            for (size_t k = 0; k < prev.size(); ++k) {
                row[k] -= prev[k];
                row[k + 1] += prev[k];
            }
        }
        trim(row);
        w[m] = std::move(row);
    }
    return w[ord];
}

Histogram row_histogram(IntRow row, int n) {
    Histogram h;
    h.n = n;
    for (size_t k = 0; k < row.size(); ++k)
        if (row[k] != 0) h.counts[static_cast<long long>(k)] = std::move(row[k]);
    return h;
}

// Histogram over Dyck paths of semilength n via the quarter-plane walk DP
// (walks of length n ending on the x-axis, k = marked steps).
Histogram dyck_walk_histogram(WalkMark mark, int n) {
    WalkWeighting w;
    if (mark == WalkMark::Ds)
        w.mark_steps_on_axis = true;
    else
        w.mark_steps_from_axis = true;
    std::vector<WalkTable> dp = walk_dp(n, w, true);
    Histogram h;
    h.n = n;
    for (const auto& [state, c] : dp[static_cast<size_t>(n)].counts) {
        auto [x, y, k] = state;
        (void)x;
        if (y == 0) h.counts[k] += c;
    }
    return h;
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace

const char* dist_class_name(DistClass c) {
    switch (c) {
        case DistClass::GrandDyckDs: return "grand_dyck_ds";
        case DistClass::GrandDyckSv: return "grand_dyck_sv";
        case DistClass::GrandDyckPho: return "grand_dyck_pho";
        case DistClass::GrandDyckHm: return "grand_dyck_hm";
        case DistClass::DyckDs: return "dyck_ds";
        case DistClass::DyckSv: return "dyck_sv";
        case DistClass::DyckHm: return "dyck_hm";
        case DistClass::SquareDs: return "square_ds";
        case DistClass::SquareDsh: return "square_dsh";
        case DistClass::MinSquareDs: return "min_square_ds";
        case DistClass::SpDs: return "sp_ds";
        case DistClass::UnimodalBargraphDs: return "unimodal_bargraph_ds";
    }
    return "?";
}

DistClass parse_dist_class(const std::string& family, const std::string& stat) {
    std::string f = normalize(family);
    std::string s = normalize(stat);
    if (f == "granddyck") {
        if (s == "ds") return DistClass::GrandDyckDs;
        if (s == "sv") return DistClass::GrandDyckSv;
        if (s == "pho") return DistClass::GrandDyckPho;
        if (s == "hm") return DistClass::GrandDyckHm;
    } else if (f == "dyck") {
        if (s == "ds") return DistClass::DyckDs;
        if (s == "sv") return DistClass::DyckSv;
        if (s == "hm") return DistClass::DyckHm;
    } else if (f == "square") {
        if (s == "ds") return DistClass::SquareDs;
        if (s == "dsh") return DistClass::SquareDsh;
    } else if (f == "minsquare") {
        if (s == "ds") return DistClass::MinSquareDs;
    } else if (f == "sp" || f == "semiperimeter") {
        if (s == "ds") return DistClass::SpDs;
    } else if (f == "unimodalbargraph" || f == "bargraph") {
        if (s == "ds") return DistClass::UnimodalBargraphDs;
    }
    throw std::invalid_argument("unknown distribution class: " + family + " " + stat);
}

Int Histogram::total() const {
    Int t = 0;
    for (const auto& [k, c] : counts) t += c;
    return t;
}

Histogram exact_distribution(DistClass c, int n) {
    if (n < 0) throw std::invalid_argument("exact_distribution: negative n");
    switch (c) {
        case DistClass::GrandDyckDs:
        case DistClass::SquareDs:
            // ds over partitions in the n x n square has the same distribution
            // as ds over grand Dyck paths of semilength n.
            return row_histogram(ds_grand_rows(n)[n], n);
        case DistClass::GrandDyckSv: return row_histogram(sv_grand_rows(n)[n], n);
        case DistClass::GrandDyckPho:
        case DistClass::SquareDsh:
            // pho over grand Dyck paths matches dsh over partitions in the square.
            return row_histogram(dsh_rows(n)[n], n);
        case DistClass::GrandDyckHm: {
            // Midpoint height b: free paths 0 -> b in n steps, squared.
            Histogram h;
            h.n = n;
            for (long long b = -n; b <= n; b += 2) {
                Int c1 = binomial(n, (n + b) / 2);
                h.counts[b] = c1 * c1;
            }
            return h;
        }
        case DistClass::DyckDs: return dyck_walk_histogram(WalkMark::Ds, n);
        case DistClass::DyckSv: return dyck_walk_histogram(WalkMark::Sv, n);
        case DistClass::DyckHm: {
            // Midpoint height b: nonnegative paths 0 -> b in n steps, squared.
            Histogram h;
            h.n = n;
            for (long long b = n % 2; b <= n; b += 2) {
                Int c1 = ballot_count(0, static_cast<int>(b), n);
                h.counts[b] = c1 * c1;
            }
            return h;
        }
        case DistClass::MinSquareDs: {
            // (1 - sz) * DS_GRAND: row_n = D_n - shift_s(D_{n-1}).
            std::vector<IntRow> d = ds_grand_rows(n);
            IntRow row = d[n];
            if (n >= 1) {
                const IntRow& prev = d[n - 1];
                if (row.size() < prev.size() + 1) row.resize(prev.size() + 1);
                for (size_t k = 0; k < prev.size(); ++k) row[k + 1] -= prev[k];
            }
            trim(row);
            return row_histogram(std::move(row), n);
        }
        case DistClass::SpDs: return row_histogram(psp_row(n), n);
        case DistClass::UnimodalBargraphDs: return row_histogram(ub_row(n), n);
    }
    throw std::invalid_argument("exact_distribution: unknown class");
}

Histogram exact_distribution_oracle(DistClass c, int n, const EnumLimits& limits) {
    if (n < 0) throw std::invalid_argument("exact_distribution_oracle: negative n");
    Histogram h;
    h.n = n;
    auto add_paths = [&](PathFamily fam, int (*stat)(const PathWord&)) {
        for (const PathWord& w : enumerate(fam, n, limits)) h.counts[stat(w)] += 1;
    };
    switch (c) {
        case DistClass::GrandDyckDs:
            add_paths(PathFamily::GrandDyck, [](const PathWord& w) { return ds_path(w); });
            break;
        case DistClass::GrandDyckSv:
            add_paths(PathFamily::GrandDyck, [](const PathWord& w) { return sv(w); });
            break;
        case DistClass::GrandDyckPho:
            add_paths(PathFamily::GrandDyck, [](const PathWord& w) { return pho(w); });
            break;
        case DistClass::GrandDyckHm:
            add_paths(PathFamily::GrandDyck, [](const PathWord& w) { return hm(w); });
            break;
        case DistClass::DyckDs:
            add_paths(PathFamily::Dyck, [](const PathWord& w) { return ds_path(w); });
            break;
        case DistClass::DyckSv:
            add_paths(PathFamily::Dyck, [](const PathWord& w) { return sv(w); });
            break;
        case DistClass::DyckHm:
            add_paths(PathFamily::Dyck, [](const PathWord& w) { return hm(w); });
            break;
        case DistClass::SquareDs:
            for (const Partition& p : enumerate_partitions_in_square(n, limits))
                h.counts[ds_square(p, n)] += 1;
            break;
        case DistClass::SquareDsh:
            for (const Partition& p : enumerate_partitions_in_square(n, limits))
                h.counts[dsh(p)] += 1;
            break;
        case DistClass::MinSquareDs:
            for (const Partition& p : enumerate_partitions_by_min_square(n, limits))
                h.counts[ds_square(p, n)] += 1;
            break;
        case DistClass::SpDs:
            for (const Partition& p : enumerate_partitions_by_semiperimeter(n, limits))
                h.counts[ds_partition(p)] += 1;
            break;
        case DistClass::UnimodalBargraphDs:
            for (const Bargraph& b : enumerate_unimodal_centered_bargraphs(n, limits))
                h.counts[ds_bargraph(b)] += 1;
            break;
    }
    return h;
}

Moments histogram_moments(const Histogram& h) {
    Int t = h.total();
    if (t == 0) throw std::domain_error("histogram_moments: empty histogram");
    Rat m1 = 0, m2 = 0;
    for (const auto& [k, c] : h.counts) {
        m1 += Rat(Int(k) * c);
        m2 += Rat(Int(k) * Int(k) * c);
    }
    m1 /= Rat(t);
    m2 /= Rat(t);
    return {m1, m2 - m1 * m1};
}

Moments closed_form_moments(DistClass c, int n) {
    if (n < 1) throw std::invalid_argument("closed_form_moments: n >= 1 required");
    Int b = binomial(2 * n, n);
    if (c == DistClass::GrandDyckDs) {
        // mean 2^(2n-1) / binom(2n, n),
        // variance 2n(n-1)/(2n-1) + mean - mean^2
        Rat mean = Rat(pow2(2 * n - 1)) / Rat(b);
        Rat var = Rat(2 * Int(n) * (n - 1), Int(2 * n - 1)) + mean - mean * mean;
        return {mean, var};
    }
    if (c == DistClass::GrandDyckSv) {
        // with q = 4^n / binom(2n, n): mean q - 1, variance 4n + 2 - q - q^2
        Rat q = Rat(pow2(2 * n)) / Rat(b);
        return {q - 1, Rat(4 * Int(n) + 2) - q - q * q};
    }
    throw std::invalid_argument("closed_form_moments: no closed form for this class");
}

double LimitLaw::cdf(double t) const {
    if (t <= 0) return 0.0;
    if (kind == Kind::Rayleigh) return 1.0 - std::exp(-t * t / (2 * sigma * sigma));
    return std::erf(t / (sigma * std::sqrt(2.0)));
}

double LimitLaw::density(double t) const {
    if (t < 0) return 0.0;
    double e = std::exp(-t * t / (2 * sigma * sigma));
    if (kind == Kind::Rayleigh) return t / (sigma * sigma) * e;
    return std::sqrt(2.0 / 3.14159265358979323846) / sigma * e;
}

std::string LimitLaw::name() const {
    std::string base = kind == Kind::Rayleigh ? "rayleigh" : "halfnormal";
    return base + "(sigma=" + std::to_string(sigma) + ")";
}

LimitLaw parse_law(const std::string& name, double sigma) {
    if (!(sigma > 0)) throw std::invalid_argument("law sigma must be positive");
    std::string n = normalize(name);
    if (n == "rayleigh") return {LimitLaw::Kind::Rayleigh, sigma};
    if (n == "halfnormal") return {LimitLaw::Kind::HalfNormal, sigma};
    throw std::invalid_argument("unknown law: " + name);
}

LimitLaw reference_law(DistClass c) {
    switch (c) {
        case DistClass::GrandDyckDs:
            return {LimitLaw::Kind::Rayleigh, 1.0 / std::sqrt(2.0)};
        case DistClass::GrandDyckSv:
            return {LimitLaw::Kind::Rayleigh, std::sqrt(2.0)};
        case DistClass::SquareDs:
            return {LimitLaw::Kind::Rayleigh, 1.0 / std::sqrt(2.0)};
        case DistClass::SquareDsh:
            return {LimitLaw::Kind::Rayleigh, 1.0 / (2.0 * std::sqrt(2.0))};
        case DistClass::SpDs:
            return {LimitLaw::Kind::HalfNormal, 0.5};
        case DistClass::UnimodalBargraphDs:
            return {LimitLaw::Kind::Rayleigh,
                    (3.0 - std::sqrt(5.0)) / (2.0 * std::pow(20.0, 0.25))};
        default:
            throw std::invalid_argument("no reference limit law for this class");
    }
}

LawDistance limit_law_distance(const Histogram& h, const LimitLaw& law) {
    if (h.n <= 0) throw std::invalid_argument("limit_law_distance: n must be positive");
    Int tot = h.total();
    if (tot == 0) throw std::domain_error("limit_law_distance: empty histogram");
    // Counts can exceed the double range; divide exactly before converting.
    auto ratio = [&](const Int& c) { return to_double(Rat(c) / Rat(tot)); };
    double rn = std::sqrt(static_cast<double>(h.n));
    LawDistance d;
    Int cum = 0;
    for (const auto& [k, c] : h.counts) {
        double t = static_cast<double>(k) / rn;
        double before = ratio(cum);
        cum += c;
        double after = ratio(cum);
        double f = law.cdf(t);
        d.kolmogorov = std::max({d.kolmogorov, std::abs(before - f), std::abs(after - f)});
    }
    long long kmax = h.counts.empty() ? 0 : h.counts.rbegin()->first;
    for (long long k = 0; k <= kmax; ++k) {
        auto it = h.counts.find(k);
        double p = it == h.counts.end() ? 0.0 : ratio(it->second);
        double approx = law.density(static_cast<double>(k) / rn) / rn;
        d.max_density_error = std::max(d.max_density_error, std::abs(p - approx));
    }
    return d;
}

void write_csv(const Histogram& h, std::ostream& out) {
    Int tot = h.total();
    out << "n,k,count,total\n";
    for (const auto& [k, c] : h.counts)
        out << h.n << "," << k << "," << c << "," << tot << "\n";
}

}  // namespace symmetria
