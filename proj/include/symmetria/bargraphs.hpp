#pragma once

// Bargraphs: nonempty sequences of positive column heights, drawn as a
// North/East/South boundary path from the origin back to the x-axis. The
// enumeration here is restricted to the unimodal bargraphs with a centered
// maximum (heights weakly increase up to the middle column(s) and weakly
// decrease from the middle on), graded by semiperimeter.

#include "symmetria/numeric.hpp"
#include "symmetria/paths.hpp"

#include <string>
#include <vector>

namespace symmetria {

struct Bargraph {
    std::vector<int> cols;  // positive heights, left to right; never empty

    bool operator==(const Bargraph&) const = default;

    int width() const { return static_cast<int>(cols.size()); }  // e(B)
    int max_height() const;                                      // n(B)
    // Semiperimeter sp(B) = e(B) + n(B).
    int semiperimeter() const { return width() + max_height(); }
};

bool is_valid_bargraph(const Bargraph& b);
std::string to_string(const Bargraph& b);

// Heights weakly increase on columns 1..floor((k+1)/2) and weakly decrease on
// columns ceil((k+1)/2)..k.
bool is_unimodal_centered(const Bargraph& b);

// Boundary path of the bargraph as an N/E/S word (useful invariant: for a
// unimodal bargraph it has exactly max_height() N steps and width() E steps).
PathWord boundary_word(const Bargraph& b);

// All unimodal bargraphs with centered maximum and semiperimeter sp.
// sp = 2 -> {(1)}, sp = 3 -> {(1,1), (2)}; empty result for sp < 2.
std::vector<Bargraph> enumerate_unimodal_centered_bargraphs(int sp,
                                                            const EnumLimits& limits = {});

}  // namespace symmetria
