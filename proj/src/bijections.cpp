#include "symmetria/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace symmetria {

namespace {

Step flip_ud(Step s) {
    if (s == Step::U) return Step::D;
    if (s == Step::D) return Step::U;
    return s;
}

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

// Per-letter reflection about the x-axis for uneven bicolored words: U and D
// swap, horizontal colors are kept.
std::vector<Step> reflect_letters(const std::vector<Step>& w) {
    std::vector<Step> out;
    out.reserve(w.size());
    for (Step s : w) out.push_back(flip_ud(s));
    return out;
}

// the valley-free/uneven correspondence, on raw letter vectors (used both by
// theta and by the grand assembly in big_theta).
std::vector<Step> theta_letters(const std::vector<Step>& v);
std::vector<Step> theta_inv_letters(const std::vector<Step>& b);
std::vector<Step> mu_letters(const std::vector<Step>& m);
std::vector<Step> mu_inv_letters(const std::vector<Step>& v);

std::vector<int> letter_heights(const std::vector<Step>& w) {
    std::vector<int> h(w.size() + 1, 0);
    for (size_t i = 0; i < w.size(); ++i) {
        int d = (w[i] == Step::U) ? 1 : (w[i] == Step::D ? -1 : 0);
        h[i + 1] = h[i] + d;
    }
    return h;
}

// Splits a U/D/H word into maximal horizontal runs and the U/D letters
// around them; used by mu. Each run records its neighbors (U, D, or none).
struct HRun {
    size_t begin = 0;       // index of the first H
    size_t count = 0;       // run length
    Step left = Step::H1;   // U, D, or H1 meaning "word boundary"
    Step right = Step::H1;
};

std::vector<Step> rewrite_h_runs(const std::vector<Step>& w, int delta_ud, int delta_du) {
    // All-horizontal words lose/gain one step instead (delta_ud applied to
    // the single boundary-to-boundary run).
    bool all_h = std::all_of(w.begin(), w.end(),
                             [](Step s) { return s == Step::H1; });
    if (all_h) {
        long long n = static_cast<long long>(w.size()) + delta_ud;
        require(n >= 0, "mu: horizontal word too short");
        return std::vector<Step>(static_cast<size_t>(n), Step::H1);
    }
    // Visit every maximal H-run, including the zero-length ones between two
    // adjacent slope letters, and adjust its length by the delta matching
    // its (previous, next) slope context.
    std::vector<Step> out;
    size_t i = 0;
    Step prev = Step::H1;  // boundary sentinel
    while (true) {
        size_t j = i;
        while (j < w.size() && w[j] == Step::H1) ++j;
        Step next = (j < w.size()) ? w[j] : Step::H1;  // boundary sentinel
        long long len = static_cast<long long>(j - i);
        if (prev == Step::U && next == Step::D) len += delta_ud;
        if (prev == Step::D && next == Step::U) len += delta_du;
        require(len >= 0, "mu: run length underflow");
        out.insert(out.end(), static_cast<size_t>(len), Step::H1);
        if (j >= w.size()) break;
        out.push_back(w[j]);
        prev = w[j];
        i = j + 1;
    }
    return out;
}

std::vector<Step> mu_letters(const std::vector<Step>& m) {
    require(!m.empty(), "mu: empty word");
    return rewrite_h_runs(m, -1, +1);
}

std::vector<Step> mu_inv_letters(const std::vector<Step>& v) {
    if (v.empty()) return {Step::H1};
    return rewrite_h_runs(v, +1, -1);
}

std::vector<Step> theta_letters(const std::vector<Step>& v) {
    std::vector<int> h = letter_heights(v);
    size_t L = v.size();
    enum class Fate { Keep, Drop, ToH1, ToH2 };
    std::vector<Fate> fate(L, Fate::Keep);
    for (size_t k = 0; k < L; ++k) {
        if (v[k] != Step::D) continue;
        if (k + 1 < L && v[k + 1] == Step::H1) {
            fate[k + 1] = Fate::Drop;  // the D absorbs the H right after it
        } else {
            // Rightmost U to the left climbing from the level this D
            // descends to; it always exists and is never claimed twice.
            bool found = false;
            for (size_t j = k; j-- > 0;) {
                if (v[j] == Step::U && h[j] == h[k + 1]) {
                    require(fate[j] == Fate::Keep, "theta: U matched twice");
                    fate[j] = Fate::ToH1;
                    fate[k] = Fate::Drop;
                    found = true;
                    break;
                }
            }
            require(found, "theta: unmatched D");
        }
    }
    std::vector<Step> out;
    for (size_t k = 0; k < L; ++k) {
        switch (fate[k]) {
            case Fate::Drop: break;
            case Fate::ToH1: out.push_back(Step::H1); break;
            case Fate::Keep:
                out.push_back(v[k] == Step::H1 ? Step::H2 : v[k]);
                break;
            case Fate::ToH2: break;  // unreachable
        }
    }
    return out;
}

std::vector<Step> theta_inv_letters(const std::vector<Step>& b) {
    // Undo the three letter fates: H2 -> free H, reinsert the H absorbed by
    // each D, then expand every H1 back into a U with a reinserted D.
    // `pending` marks the H1 letters of b awaiting expansion (everything
    // else, including the reinserted H's, is final).
    std::vector<Step> w;
    std::vector<bool> pending;
    for (Step s : b) {
        if (s == Step::H1) {
            w.push_back(Step::H1);
            pending.push_back(true);
        } else if (s == Step::H2) {
            w.push_back(Step::H1);
            pending.push_back(false);
        } else {
            w.push_back(s);
            pending.push_back(false);
            if (s == Step::D) {
                w.push_back(Step::H1);
                pending.push_back(false);
            }
        }
    }
    // Left to right, turn each pending H1 into a U and insert its D before
    // the first later step that would dive strictly below the U's level.
    for (size_t k = 0; k < w.size(); ++k) {
        if (!pending[k]) continue;
        std::vector<int> h = letter_heights(w);
        int level = h[k];
        size_t insert_at = w.size();
        for (size_t j = k + 1; j < w.size(); ++j) {
            if (w[j] == Step::D && h[j + 1] < level) {
                insert_at = j;
                break;
            }
        }
        w[k] = Step::U;
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(insert_at), Step::D);
        pending[k] = false;
        pending.insert(pending.begin() + static_cast<std::ptrdiff_t>(insert_at), false);
    }
    return w;
}

}  // namespace

PathWord phi(const PathWord& grand_dyck) {
    require(grand_dyck.family == PathFamily::GrandDyck && validate(grand_dyck),
            "phi: expected a valid grand Dyck path");
    size_t n = grand_dyck.steps.size() / 2;
    PathWord out;
    out.family = PathFamily::BicoloredGrandMotzkin;
    out.steps.reserve(n);
    for (size_t i = 1; i <= n; ++i) {
        Step l = grand_dyck.steps[i - 1];
        Step r = flip_ud(grand_dyck.steps[2 * n - i]);
        if (l == Step::U && r == Step::D) out.steps.push_back(Step::U);
        else if (l == Step::D && r == Step::U) out.steps.push_back(Step::D);
        else if (l == Step::D && r == Step::D) out.steps.push_back(Step::H1);
        else out.steps.push_back(Step::H2);  // (U, U)
    }
    return out;
}

PathWord phi_inv(const PathWord& m) {
    require(m.family == PathFamily::BicoloredGrandMotzkin && validate(m),
            "phi_inv: expected a valid bicolored grand Motzkin path");
    size_t n = m.steps.size();
    std::vector<Step> p(2 * n, Step::U);
    for (size_t i = 1; i <= n; ++i) {
        Step l, r;
        switch (m.steps[i - 1]) {
            case Step::U: l = Step::U; r = Step::D; break;
            case Step::D: l = Step::D; r = Step::U; break;
            case Step::H1: l = Step::D; r = Step::D; break;
            default: l = Step::U; r = Step::U; break;  // H2
        }
        p[i - 1] = l;
        p[2 * n - i] = flip_ud(r);
    }
    PathWord out;
    out.family = PathFamily::GrandDyck;
    out.steps = std::move(p);
    return out;
}

PathWord sv_to_ret(const PathWord& grand_dyck) {
    PathWord m = phi(grand_dyck);
    PathWord out;
    out.family = PathFamily::GrandDyck;
    out.steps.reserve(m.steps.size() * 2);
    for (Step s : m.steps) {
        switch (s) {
            case Step::U: out.steps.push_back(Step::U); out.steps.push_back(Step::U); break;
            case Step::D: out.steps.push_back(Step::D); out.steps.push_back(Step::D); break;
            case Step::H1: out.steps.push_back(Step::U); out.steps.push_back(Step::D); break;
            default: out.steps.push_back(Step::D); out.steps.push_back(Step::U); break;
        }
    }
    return out;
}

PathWord partial_n(const Partition& p, int n) {
    require(is_valid_partition(p) && fits_in_square(p, n),
            "partial_n: partition must fit in the square");
    // Boundary reading of the zero-padded diagram: D^{p_n}, then for each
    // i = n-1 .. 1 a U followed by D^{p_i - p_{i+1}}, then U D^{n - p_1}.
    PathWord out;
    out.family = PathFamily::GrandDyck;
    out.steps.insert(out.steps.end(), static_cast<size_t>(part_at(p, n)), Step::D);
    for (int i = n - 1; i >= 0; --i) {
        out.steps.push_back(Step::U);
        int hi = (i == 0) ? n : part_at(p, i);
        out.steps.insert(out.steps.end(),
                         static_cast<size_t>(hi - part_at(p, i + 1)), Step::D);
    }
    return out;
}

Partition partial_n_inv(const PathWord& w) {
    require(w.family == PathFamily::GrandDyck && validate(w),
            "partial_n_inv: expected a valid grand Dyck path");
    int n = static_cast<int>(w.steps.size() / 2);
    // d[j] = number of D's after the j-th U (d[0] = before the first U);
    // part i of the partition is d[0] + ... + d[n-i].
    std::vector<int> d(static_cast<size_t>(n) + 1, 0);
    int u_seen = 0;
    for (Step s : w.steps) {
        if (s == Step::U) ++u_seen;
        else ++d[static_cast<size_t>(u_seen)];
    }
    Partition p;
    for (int i = 1; i <= n; ++i) {
        int v = 0;
        for (int j = 0; j <= n - i; ++j) v += d[static_cast<size_t>(j)];
        if (v > 0) p.parts.push_back(v);
    }
    require(is_valid_partition(p), "partial_n_inv: word is not a square boundary");
    return p;
}

PathWord psi(const Partition& p, int n) {
    require(is_valid_partition(p) && fits_in_square(p, n),
            "psi: partition must fit in the square");
    PathWord out;
    out.family = PathFamily::GrandDyck;
    int delta = durfee(p);
    if (delta == 0) {
        // Empty partition: the all-down-then-up word.
        out.steps.insert(out.steps.end(), static_cast<size_t>(n), Step::D);
        out.steps.insert(out.steps.end(), static_cast<size_t>(n), Step::U);
        return out;
    }
    Partition q = conjugate(p);
    // Arm and leg of the i-th diagonal hook.
    auto arm = [&](int i) { return part_at(p, i) - i; };
    auto leg = [&](int i) { return part_at(q, i) - i; };
    auto push = [&](Step s, int count) {
        out.steps.insert(out.steps.end(), static_cast<size_t>(count), s);
    };
    push(Step::D, arm(delta));
    push(Step::U, leg(delta) + 1);
    for (int i = delta - 1; i >= 1; --i) {
        push(Step::D, arm(i) - arm(i + 1));
        push(Step::U, leg(i) - leg(i + 1));
    }
    push(Step::D, n - arm(1));
    push(Step::U, n - 1 - leg(1));
    return out;
}

PathWord mu(const PathWord& m) {
    require(m.family == PathFamily::PeaklessMotzkin && validate(m),
            "mu: expected a valid peakless Motzkin path");
    PathWord out;
    out.family = PathFamily::ValleyFreeMotzkin;
    out.steps = mu_letters(m.steps);
    return out;
}

PathWord mu_inv(const PathWord& v) {
    require(v.family == PathFamily::ValleyFreeMotzkin && validate(v),
            "mu_inv: expected a valid valley-free Motzkin path");
    PathWord out;
    out.family = PathFamily::PeaklessMotzkin;
    out.steps = mu_inv_letters(v.steps);
    return out;
}

PathWord theta(const PathWord& v) {
    require(v.family == PathFamily::ValleyFreeMotzkin && validate(v),
            "theta: expected a valid valley-free Motzkin path");
    PathWord out;
    out.family = PathFamily::UnevenBicoloredMotzkin;
    out.steps = theta_letters(v.steps);
    return out;
}

PathWord theta_inv(const PathWord& b) {
    require(b.family == PathFamily::UnevenBicoloredMotzkin && validate(b),
            "theta_inv: expected a valid uneven bicolored Motzkin path");
    PathWord out;
    out.family = PathFamily::ValleyFreeMotzkin;
    out.steps = theta_inv_letters(b.steps);
    return out;
}

PathWord big_theta(const PathWord& m) {
    require(m.family == PathFamily::PeaklessGrandMotzkin && validate(m),
            "big_theta: expected a valid peakless grand Motzkin path");
    const std::vector<Step>& w = m.steps;
    std::vector<int> h = letter_heights(w);
    PathWord out;
    out.family = PathFamily::UnevenBicoloredGrandMotzkin;
    size_t pos = 0;
    while (pos < w.size()) {
        if (w[pos] == Step::U && h[pos] == 0) {
            // Excursion above the axis: locate the matching return to 0.
            size_t q = pos;
            while (h[q + 1] != 0) ++q;
            std::vector<Step> inner(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                                    w.begin() + static_cast<std::ptrdiff_t>(q));
            require(!inner.empty(), "big_theta: UD factor in a peakless word");
            out.steps.push_back(Step::U);
            for (Step s : theta_letters(mu_letters(inner))) out.steps.push_back(s);
            out.steps.push_back(Step::D);
            pos = q + 1;
        } else {
            // Maximal at-or-below portion; its reflection is valley-free.
            size_t q = pos;
            while (q < w.size() && !(w[q] == Step::U && h[q] == 0)) ++q;
            std::vector<Step> below(w.begin() + static_cast<std::ptrdiff_t>(pos),
                                    w.begin() + static_cast<std::ptrdiff_t>(q));
            std::vector<Step> img = reflect_letters(theta_letters(reflect_letters(below)));
            for (Step s : img) out.steps.push_back(s);
            pos = q;
        }
    }
    return out;
}

PathWord dyck_to_wq1(const PathWord& dyck) {
    require(dyck.family == PathFamily::Dyck && validate(dyck),
            "dyck_to_wq1: expected a valid Dyck path");
    size_t n = dyck.steps.size() / 2;
    PathWord out;
    out.family = PathFamily::WQ1;
    out.steps.reserve(n);
    // Walk vertex i = (height after 2n-i steps, height after i steps).
    for (size_t i = 1; i <= n; ++i) {
        bool up_left = (dyck.steps[i - 1] == Step::U);
        bool down_right = (dyck.steps[2 * n - i] == Step::D);
        if (up_left)
            out.steps.push_back(down_right ? Step::NE : Step::NW);
        else
            out.steps.push_back(down_right ? Step::SE : Step::SW);
    }
    return out;
}

PathWord wq1_to_dyck(const PathWord& wq1) {
    require(wq1.family == PathFamily::WQ1 && validate(wq1),
            "wq1_to_dyck: expected a valid diagonal-ending quadrant walk");
    size_t n = wq1.steps.size();
    std::vector<Step> p(2 * n, Step::U);
    for (size_t i = 1; i <= n; ++i) {
        Step s = wq1.steps[i - 1];
        bool up_left = (s == Step::NE || s == Step::NW);
        bool down_right = (s == Step::NE || s == Step::SE);
        p[i - 1] = up_left ? Step::U : Step::D;
        p[2 * n - i] = down_right ? Step::D : Step::U;
    }
    PathWord out;
    out.family = PathFamily::Dyck;
    out.steps = std::move(p);
    return out;
}

PathWord wq1_fold_wq2(const PathWord& wq1) {
    require(wq1.family == PathFamily::WQ1 && validate(wq1),
            "wq1_fold_wq2: expected a valid diagonal-ending quadrant walk");
    PathWord out;
    out.family = PathFamily::WQ2;
    int x = 0, y = 0;
    for (Step s : wq1.steps) {
        int dx = (s == Step::NE || s == Step::SE) ? 1 : -1;
        int dy = (s == Step::NE || s == Step::NW) ? 1 : -1;
        int nx = x + dx, ny = y + dy;
        int fx = std::max(x, y), fy = std::min(x, y);
        int gx = std::max(nx, ny), gy = std::min(nx, ny);
        int ddx = gx - fx, ddy = gy - fy;
        Step t;
        if (ddx == 1 && ddy == 1) t = Step::NE;
        else if (ddx == -1 && ddy == -1) t = Step::SW;
        else if (ddx == -1 && ddy == 1) t = Step::NW;
        else {
            // SE in the folded picture; leaving the diagonal it remembers
            // which side of the diagonal the unfolded walk went to.
            if (fx == fy)
                t = (ny > nx) ? Step::SE_c2 : Step::SE_c1;
            else
                t = Step::SE;
        }
        out.steps.push_back(t);
        x = nx;
        y = ny;
    }
    return out;
}

PathWord wq2_unfold_wq1(const PathWord& wq2) {
    require(wq2.family == PathFamily::WQ2 && validate(wq2),
            "wq2_unfold_wq1: expected a valid folded octant walk");
    PathWord out;
    out.family = PathFamily::WQ1;
    int x = 0, y = 0;       // unfolded position
    bool above = false;     // current side of the diagonal when off it
    for (Step s : wq2.steps) {
        if (x == y) above = (s == Step::SE_c2);
        Step base = (s == Step::SE_c1 || s == Step::SE_c2) ? Step::SE : s;
        Step t = base;
        if (above) {
            if (base == Step::SE) t = Step::NW;
            else if (base == Step::NW) t = Step::SE;
        }
        int dx = (t == Step::NE || t == Step::SE) ? 1 : -1;
        int dy = (t == Step::NE || t == Step::NW) ? 1 : -1;
        x += dx;
        y += dy;
        out.steps.push_back(t);
    }
    return out;
}

PathWord wq2_shear_wq3(const PathWord& wq2) {
    require(wq2.family == PathFamily::WQ2 && validate(wq2),
            "wq2_shear_wq3: expected a valid folded octant walk");
    PathWord out;
    out.family = PathFamily::WQ3;
    for (Step s : wq2.steps) {
        switch (s) {
            case Step::NE: out.steps.push_back(Step::E); break;
            case Step::SW: out.steps.push_back(Step::W); break;
            case Step::NW: out.steps.push_back(Step::SE); break;
            case Step::SE: out.steps.push_back(Step::NW); break;
            case Step::SE_c1: out.steps.push_back(Step::NW_c1); break;
            default: out.steps.push_back(Step::NW_c2); break;  // SE_c2
        }
    }
    return out;
}

PathWord wq3_unshear_wq2(const PathWord& wq3) {
    require(wq3.family == PathFamily::WQ3 && validate(wq3),
            "wq3_unshear_wq2: expected a valid quarter-plane walk");
    PathWord out;
    out.family = PathFamily::WQ2;
    for (Step s : wq3.steps) {
        switch (s) {
            case Step::E: out.steps.push_back(Step::NE); break;
            case Step::W: out.steps.push_back(Step::SW); break;
            case Step::SE: out.steps.push_back(Step::NW); break;
            case Step::NW: out.steps.push_back(Step::SE); break;
            case Step::NW_c1: out.steps.push_back(Step::SE_c1); break;
            default: out.steps.push_back(Step::SE_c2); break;  // NW_c2
        }
    }
    return out;
}

PathWord dyck_to_wq3(const PathWord& dyck) {
    return wq2_shear_wq3(wq1_fold_wq2(dyck_to_wq1(dyck)));
}

PathWord wq3_to_dyck(const PathWord& wq3) {
    return wq1_to_dyck(wq2_unfold_wq1(wq3_unshear_wq2(wq3)));
}

}  // namespace symmetria
