#include "symmetria/paths.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace symmetria {

namespace {

constexpr std::array<const char*, 16> kStepNames = {
    "U", "D", "H1", "H2", "NE", "NW", "SE", "SW",
    "E", "W", "N", "S", "NW1", "NW2", "SE1", "SE2",
};

constexpr std::array<const char*, 15> kFamilyNames = {
    "Dyck", "GrandDyck", "Motzkin", "GrandMotzkin",
    "BicoloredMotzkin", "BicoloredGrandMotzkin",
    "PeaklessMotzkin", "PeaklessGrandMotzkin", "ValleyFreeMotzkin",
    "UnevenBicoloredMotzkin", "UnevenBicoloredGrandMotzkin",
    "Ballot", "WQ1", "WQ2", "WQ3",
};

// Height change of a step in a U/D/H word.
int dh(Step s) {
    if (s == Step::U) return 1;
    if (s == Step::D) return -1;
    return 0;
}

bool is_height_step(Step s) {
    return s == Step::U || s == Step::D || s == Step::H1 || s == Step::H2;
}

long long step_weight(Step s) {
    // Uneven grading: up and colored-2 horizontal steps weigh 1, down and
    // colored-1 horizontal steps weigh 2.
    switch (s) {
        case Step::U:
        case Step::H2: return 1;
        case Step::D:
        case Step::H1: return 2;
        default: throw std::invalid_argument("step_weight: not a U/D/H step");
    }
}

bool has_factor(const std::vector<Step>& w, Step a, Step b) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == a && w[i + 1] == b) return true;
    return false;
}

bool alphabet_ok(const std::vector<Step>& w, std::initializer_list<Step> allowed) {
    return std::all_of(w.begin(), w.end(), [&](Step s) {
        return std::find(allowed.begin(), allowed.end(), s) != allowed.end();
    });
}

// Shared validity logic for one-dimensional height words.
bool validate_height_word(const PathWord& w, bool allow_h1, bool allow_h2,
                          bool nonneg, bool even_length, Step forbid_a, Step forbid_b,
                          bool has_forbidden) {
    long long h = w.a;
    for (Step s : w.steps) {
        if (!is_height_step(s)) return false;
        if (s == Step::H1 && !allow_h1) return false;
        if (s == Step::H2 && !allow_h2) return false;
        h += dh(s);
        if (nonneg && h < 0) return false;
    }
    if (h != w.b) return false;
    if (even_length && w.steps.size() % 2 != 0) return false;
    if (has_forbidden && has_factor(w.steps, forbid_a, forbid_b)) return false;
    return true;
}

struct Vec2 {
    int x = 0, y = 0;
};

// Displacement of a quadrant-walk step (colored variants move like the base
// step).
Vec2 walk_delta(Step s) {
    switch (s) {
        case Step::NE: return {1, 1};
        case Step::NW: case Step::NW_c1: case Step::NW_c2: return {-1, 1};
        case Step::SE: case Step::SE_c1: case Step::SE_c2: return {1, -1};
        case Step::SW: return {-1, -1};
        case Step::E: return {1, 0};
        case Step::W: return {-1, 0};
        default: throw std::invalid_argument("walk_delta: not a walk step");
    }
}

bool validate_wq1(const PathWord& w) {
    if (!alphabet_ok(w.steps, {Step::NE, Step::NW, Step::SE, Step::SW})) return false;
    Vec2 p;
    for (Step s : w.steps) {
        Vec2 d = walk_delta(s);
        p.x += d.x;
        p.y += d.y;
        if (p.x < 0 || p.y < 0) return false;
    }
    return p.x == p.y;
}

bool validate_wq2(const PathWord& w) {
    if (!alphabet_ok(w.steps, {Step::NE, Step::NW, Step::SE, Step::SW,
                               Step::SE_c1, Step::SE_c2}))
        return false;
    Vec2 p;
    for (Step s : w.steps) {
        bool on_diag = (p.x == p.y);
        // SE steps leaving the diagonal must carry a color; all other SE
        // steps must not.
        if (s == Step::SE && on_diag) return false;
        if ((s == Step::SE_c1 || s == Step::SE_c2) && !on_diag) return false;
        Vec2 d = walk_delta(s);
        p.x += d.x;
        p.y += d.y;
        if (p.y < 0 || p.x < p.y) return false;
    }
    return p.x == p.y;
}

bool validate_wq3(const PathWord& w) {
    if (!alphabet_ok(w.steps, {Step::E, Step::W, Step::NW, Step::SE,
                               Step::NW_c1, Step::NW_c2}))
        return false;
    Vec2 p;
    for (Step s : w.steps) {
        bool on_axis = (p.y == 0);
        // NW steps leaving the x-axis must carry a color; others must not.
        if (s == Step::NW && on_axis) return false;
        if ((s == Step::NW_c1 || s == Step::NW_c2) && !on_axis) return false;
        Vec2 d = walk_delta(s);
        p.x += d.x;
        p.y += d.y;
        if (p.x < 0 || p.y < 0) return false;
    }
    return p.y == 0;
}

class Emitter {
public:
    Emitter(PathFamily family, long long cap) : family_(family), cap_(cap) {}

    void emit(const std::vector<Step>& steps, int a = 0, int b = 0) {
        if (static_cast<long long>(out_.size()) >= cap_)
            throw resource_limit_error("enumerate: object budget exceeded for " +
                                       std::string(family_name(family_)));
        out_.push_back(PathWord{family_, steps, a, b});
    }

    std::vector<PathWord> take() { return std::move(out_); }

private:
    PathFamily family_;
    long long cap_;
    std::vector<PathWord> out_;
};

// U/D words of fixed length ending at height `target`, staying nonnegative
// when `nonneg`; lexicographic because U is tried before D.
void enum_ud(Emitter& em, int length, int start, int target, bool nonneg,
             int emit_a, int emit_b) {
    std::vector<Step> cur;
    cur.reserve(static_cast<size_t>(length));
    std::function<void(int, int)> rec = [&](int h, int left) {
        if (std::abs(h - target) > left) return;  // unreachable
        if (left == 0) {
            em.emit(cur, emit_a, emit_b);
            return;
        }
        for (Step s : {Step::U, Step::D}) {
            int nh = h + dh(s);
            if (nonneg && nh < 0) continue;
            cur.push_back(s);
            rec(nh, left - 1);
            cur.pop_back();
        }
    };
    rec(start, length);
}

// Motzkin-type words: fixed length, end at 0, optional H2 color, optional
// nonnegativity, optional forbidden two-step factor.
void enum_motzkin(Emitter& em, long long length, bool allow_h2, bool nonneg,
                  bool forbid, Step fa, Step fb) {
    std::vector<Step> cur;
    cur.reserve(static_cast<size_t>(length));
    std::function<void(long long, long long)> rec = [&](long long h, long long left) {
        if (std::abs(h) > left) return;
        if (left == 0) {
            em.emit(cur);
            return;
        }
        for (Step s : {Step::U, Step::D, Step::H1, Step::H2}) {
            if (s == Step::H2 && !allow_h2) continue;
            long long nh = h + dh(s);
            if (nonneg && nh < 0) continue;
            if (forbid && !cur.empty() && cur.back() == fa && s == fb) continue;
            cur.push_back(s);
            rec(nh, left - 1);
            cur.pop_back();
        }
    };
    rec(0, length);
}

// Uneven bicolored words of fixed weighted size ending at 0.
void enum_uneven(Emitter& em, long long weight, bool nonneg) {
    std::vector<Step> cur;
    std::function<void(long long, long long)> rec = [&](long long h, long long left) {
        long long min_cost = h >= 0 ? 2 * h : -h;  // D's cost 2, U's cost 1
        if (min_cost > left) return;
        if (left == 0) {
            if (h == 0) em.emit(cur);
            return;
        }
        for (Step s : {Step::U, Step::D, Step::H1, Step::H2}) {
            long long c = step_weight(s);
            if (c > left) continue;
            long long nh = h + dh(s);
            if (nonneg && nh < 0) continue;
            cur.push_back(s);
            rec(nh, left - c);
            cur.pop_back();
        }
    };
    rec(0, weight);
}

void enum_walks(Emitter& em, PathFamily family, long long length) {
    std::vector<Step> cur;
    cur.reserve(static_cast<size_t>(length));
    std::function<void(int, int, long long)> rec = [&](int x, int y, long long left) {
        // Distance to the accepting set (diagonal for WQ1/WQ2, x-axis for
        // WQ3) shrinks by at most 1 per step.
        long long dist = (family == PathFamily::WQ3) ? y : (x - y + 1) / 2;
        if (family == PathFamily::WQ1) dist = std::abs(x - y) / 2;
        if (dist > left) return;
        if (left == 0) {
            em.emit(cur);
            return;
        }
        auto try_step = [&](Step s) {
            Vec2 d = walk_delta(s);
            int nx = x + d.x, ny = y + d.y;
            if (nx < 0 || ny < 0) return;
            if (family == PathFamily::WQ2 && nx < ny) return;
            cur.push_back(s);
            rec(nx, ny, left - 1);
            cur.pop_back();
        };
        switch (family) {
            case PathFamily::WQ1:
                for (Step s : {Step::NE, Step::NW, Step::SE, Step::SW}) try_step(s);
                break;
            case PathFamily::WQ2:
                for (Step s : {Step::NE, Step::NW, Step::SE, Step::SW,
                               Step::SE_c1, Step::SE_c2}) {
                    bool on_diag = (x == y);
                    if (s == Step::SE && on_diag) continue;
                    if ((s == Step::SE_c1 || s == Step::SE_c2) && !on_diag) continue;
                    try_step(s);
                }
                break;
            case PathFamily::WQ3:
                for (Step s : {Step::NW, Step::SE, Step::E, Step::W,
                               Step::NW_c1, Step::NW_c2}) {
                    bool on_axis = (y == 0);
                    if (s == Step::NW && on_axis) continue;
                    if ((s == Step::NW_c1 || s == Step::NW_c2) && !on_axis) continue;
                    try_step(s);
                }
                break;
            default:
                throw std::logic_error("enum_walks: not a walk family");
        }
    };
    rec(0, 0, length);
}

}  // namespace

const char* step_name(Step s) {
    return kStepNames[static_cast<size_t>(s)];
}

const char* family_name(PathFamily f) {
    return kFamilyNames[static_cast<size_t>(f)];
}

std::string to_string(const PathWord& w) {
    std::string out;
    for (Step s : w.steps) out += step_name(s);
    return out;
}

PathWord parse_word(PathFamily family, const std::string& text, int a, int b) {
    // Longest-token-first matching; the table covers every step name.
    static const std::vector<std::pair<std::string, Step>> tokens = [] {
        std::vector<std::pair<std::string, Step>> t;
        for (size_t i = 0; i < kStepNames.size(); ++i)
            t.emplace_back(kStepNames[i], static_cast<Step>(i));
        std::stable_sort(t.begin(), t.end(), [](const auto& p, const auto& q) {
            return p.first.size() > q.first.size();
        });
        return t;
    }();
    PathWord w;
    w.family = family;
    w.a = a;
    w.b = b;
    size_t pos = 0;
    while (pos < text.size()) {
        bool matched = false;
        for (const auto& [name, step] : tokens) {
            if (text.compare(pos, name.size(), name) == 0) {
                w.steps.push_back(step);
                pos += name.size();
                matched = true;
                break;
            }
        }
        if (!matched)
            throw std::invalid_argument("parse_word: unknown step at position " +
                                        std::to_string(pos) + " in \"" + text + "\"");
    }
    return w;
}

bool validate(const PathWord& w) {
    switch (w.family) {
        case PathFamily::Dyck:
            if (w.a != 0 || w.b != 0) return false;
            return validate_height_word(w, false, false, true, true, {}, {}, false);
        case PathFamily::GrandDyck:
            if (w.a != 0 || w.b != 0) return false;
            return validate_height_word(w, false, false, false, true, {}, {}, false);
        case PathFamily::Motzkin:
        case PathFamily::UnevenBicoloredMotzkin:
        case PathFamily::BicoloredMotzkin:
            if (w.a != 0 || w.b != 0) return false;
            return validate_height_word(w, true, w.family != PathFamily::Motzkin,
                                        true, false, {}, {}, false);
        case PathFamily::GrandMotzkin:
        case PathFamily::UnevenBicoloredGrandMotzkin:
        case PathFamily::BicoloredGrandMotzkin:
            if (w.a != 0 || w.b != 0) return false;
            return validate_height_word(w, true, w.family != PathFamily::GrandMotzkin,
                                        false, false, {}, {}, false);
        case PathFamily::PeaklessMotzkin:
            if (w.a != 0 || w.b != 0) return false;
            return validate_height_word(w, true, false, true, false,
                                        Step::U, Step::D, true);
        case PathFamily::PeaklessGrandMotzkin:
            if (w.a != 0 || w.b != 0) return false;
            return validate_height_word(w, true, false, false, false,
                                        Step::U, Step::D, true);
        case PathFamily::ValleyFreeMotzkin:
            if (w.a != 0 || w.b != 0) return false;
            return validate_height_word(w, true, false, true, false,
                                        Step::D, Step::U, true);
        case PathFamily::Ballot:
            if (w.a < 0 || w.b < 0) return false;
            return validate_height_word(w, false, false, true, false, {}, {}, false);
        case PathFamily::WQ1: return w.a == 0 && w.b == 0 && validate_wq1(w);
        case PathFamily::WQ2: return w.a == 0 && w.b == 0 && validate_wq2(w);
        case PathFamily::WQ3: return w.a == 0 && w.b == 0 && validate_wq3(w);
    }
    return false;
}

long long weighted_size(const PathWord& w) {
    if (w.family != PathFamily::UnevenBicoloredMotzkin &&
        w.family != PathFamily::UnevenBicoloredGrandMotzkin)
        return length(w);
    long long total = 0;
    for (Step s : w.steps) total += step_weight(s);
    return total;
}

long long size(const PathWord& w) {
    switch (w.family) {
        case PathFamily::Dyck:
        case PathFamily::GrandDyck:
            return length(w) / 2;  // semilength
        case PathFamily::UnevenBicoloredMotzkin:
        case PathFamily::UnevenBicoloredGrandMotzkin:
            return weighted_size(w);
        default:
            return length(w);
    }
}

std::vector<PathWord> enumerate(PathFamily family, long long size,
                                const EnumLimits& limits) {
    if (size < 0) throw std::invalid_argument("enumerate: negative size");
    Emitter em(family, limits.max_objects);
    switch (family) {
        case PathFamily::Dyck:
            enum_ud(em, static_cast<int>(2 * size), 0, 0, true, 0, 0);
            break;
        case PathFamily::GrandDyck:
            enum_ud(em, static_cast<int>(2 * size), 0, 0, false, 0, 0);
            break;
        case PathFamily::Motzkin:
            enum_motzkin(em, size, false, true, false, {}, {});
            break;
        case PathFamily::GrandMotzkin:
            enum_motzkin(em, size, false, false, false, {}, {});
            break;
        case PathFamily::BicoloredMotzkin:
            enum_motzkin(em, size, true, true, false, {}, {});
            break;
        case PathFamily::BicoloredGrandMotzkin:
            enum_motzkin(em, size, true, false, false, {}, {});
            break;
        case PathFamily::PeaklessMotzkin:
            enum_motzkin(em, size, false, true, true, Step::U, Step::D);
            break;
        case PathFamily::PeaklessGrandMotzkin:
            enum_motzkin(em, size, false, false, true, Step::U, Step::D);
            break;
        case PathFamily::ValleyFreeMotzkin:
            enum_motzkin(em, size, false, true, true, Step::D, Step::U);
            break;
        case PathFamily::UnevenBicoloredMotzkin:
            enum_uneven(em, size, true);
            break;
        case PathFamily::UnevenBicoloredGrandMotzkin:
            enum_uneven(em, size, false);
            break;
        case PathFamily::Ballot:
            throw std::invalid_argument(
                "enumerate: Ballot needs endpoints; use enumerate_ballot_paths");
        case PathFamily::WQ1:
        case PathFamily::WQ2:
        case PathFamily::WQ3:
            enum_walks(em, family, size);
            break;
    }
    return em.take();
}

std::vector<PathWord> enumerate_ballot_paths(int a, int b, int n,
                                             const EnumLimits& limits) {
    if (a < 0 || b < 0 || n < 0)
        throw std::invalid_argument("enumerate_ballot_paths: negative argument");
    Emitter em(PathFamily::Ballot, limits.max_objects);
    if ((n + a - b) % 2 == 0) enum_ud(em, n, a, b, true, a, b);
    return em.take();
}

Int ballot_count(int a, int b, int n) {
    if (a < 0 || b < 0 || n < 0)
        throw std::invalid_argument("ballot_count: negative argument");
    if ((n + a - b) % 2 != 0) return 0;
    return binomial(n, (n - b + a) / 2) - binomial(n, (n - b - a - 2) / 2);
}

std::vector<int> heights(const PathWord& w) {
    std::vector<int> h;
    h.reserve(w.steps.size() + 1);
    int cur = w.a;
    h.push_back(cur);
    for (Step s : w.steps) {
        if (!is_height_step(s))
            throw std::invalid_argument("heights: not a U/D/H word");
        cur += dh(s);
        h.push_back(cur);
    }
    return h;
}

}  // namespace symmetria
