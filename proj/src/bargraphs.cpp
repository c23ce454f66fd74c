#include "symmetria/bargraphs.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace symmetria {

int Bargraph::max_height() const {
    return cols.empty() ? 0 : *std::max_element(cols.begin(), cols.end());
}

bool is_valid_bargraph(const Bargraph& b) {
    return !b.cols.empty() &&
           std::all_of(b.cols.begin(), b.cols.end(), [](int c) { return c >= 1; });
}

std::string to_string(const Bargraph& b) {
    std::string out = "[";
    for (size_t i = 0; i < b.cols.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(b.cols[i]);
    }
    out += "]";
    return out;
}

bool is_unimodal_centered(const Bargraph& b) {
    int k = b.width();
    // Weakly increasing on 1..floor((k+1)/2), weakly decreasing on
    // ceil((k+1)/2)..k; the two column ranges overlap in the middle column
    // when k is odd and are disjoint when k is even.
    for (int i = 1; i < (k + 1) / 2; ++i)
        if (b.cols[static_cast<size_t>(i) - 1] > b.cols[static_cast<size_t>(i)])
            return false;
    for (int i = (k + 2) / 2; i < k; ++i)
        if (b.cols[static_cast<size_t>(i) - 1] < b.cols[static_cast<size_t>(i)])
            return false;
    return true;
}

PathWord boundary_word(const Bargraph& b) {
    if (!is_valid_bargraph(b))
        throw std::invalid_argument("boundary_word: invalid bargraph");
    PathWord w;
    w.family = PathFamily::Ballot;  // nearest structural family; N/E/S alphabet
    int h = 0;
    for (int c : b.cols) {
        for (; h < c; ++h) w.steps.push_back(Step::N);
        for (; h > c; --h) w.steps.push_back(Step::S);
        w.steps.push_back(Step::E);
    }
    for (; h > 0; --h) w.steps.push_back(Step::S);
    return w;
}

std::vector<Bargraph> enumerate_unimodal_centered_bargraphs(int sp,
                                                            const EnumLimits& limits) {
    if (sp < 0)
        throw std::invalid_argument("enumerate_unimodal_centered_bargraphs: negative sp");
    std::vector<Bargraph> out;
    // Width k >= 1 and max height m >= 1 with k + m = sp; enumerate all
    // column vectors and filter by the unimodal-centered shape test (sizes
    // here are small enough that brutality is a feature: this enumerator is
    // an oracle).
    for (int k = 1; k <= sp - 1; ++k) {
        int m = sp - k;
        std::vector<int> cols(static_cast<size_t>(k), 1);
        std::function<void(int)> rec = [&](int i) {
            if (i == k) {
                Bargraph b{cols};
                if (b.max_height() == m && is_unimodal_centered(b)) {
                    if (static_cast<long long>(out.size()) >= limits.max_objects)
                        throw resource_limit_error(
                            "enumerate_unimodal_centered_bargraphs: budget exceeded");
                    out.push_back(b);
                }
                return;
            }
            for (int v = 1; v <= m; ++v) {
                cols[static_cast<size_t>(i)] = v;
                rec(i + 1);
            }
        };
        rec(0);
    }
    return out;
}

}  // namespace symmetria
