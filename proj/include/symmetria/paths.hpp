#pragma once

// Lattice-path step alphabet, path families, validation and exhaustive
// enumeration. Everything downstream (statistics, bijections, series
// oracles) is built on the types in this header.
//
// Conventions:
//  * U/D are the +1/-1 diagonal steps of Dyck-like paths; H1/H2 are the two
//    horizontal step colors of bicolored Motzkin paths. Families with a
//    single horizontal step kind (Motzkin, GrandMotzkin, PeaklessMotzkin,
//    PeaklessGrandMotzkin, ValleyFreeMotzkin) encode their horizontal step
//    as H1.
//  * NE/NW/SE/SW are diagonal quarter-plane walk steps, E/W/N/S axis-aligned
//    ones. NW_c1/NW_c2 (resp. SE_c1/SE_c2) are the two colors carried by a
//    NW step leaving the x-axis in family WQ3 (resp. by a SE step leaving
//    the main diagonal in family WQ2).
//  * "Size" is the canonical grading of each family: semilength for Dyck and
//    grand Dyck paths, step count for Motzkin-like families and walks, and
//    the weighted size (U,H2 count 1; D,H1 count 2) for the uneven bicolored
//    families. Enumeration is by size, in lexicographic word order under the
//    Step tag order below.

#include "symmetria/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace symmetria {

enum class Step : std::uint8_t {
    U, D, H1, H2,
    NE, NW, SE, SW,
    E, W, N, S,
    NW_c1, NW_c2, SE_c1, SE_c2,
};

const char* step_name(Step s);

enum class PathFamily : std::uint8_t {
    Dyck,
    GrandDyck,
    Motzkin,
    GrandMotzkin,
    BicoloredMotzkin,
    BicoloredGrandMotzkin,
    PeaklessMotzkin,
    PeaklessGrandMotzkin,
    ValleyFreeMotzkin,
    UnevenBicoloredMotzkin,
    UnevenBicoloredGrandMotzkin,
    Ballot,
    WQ1,
    WQ2,
    WQ3,
};

const char* family_name(PathFamily f);

// A word over the step alphabet together with the family it claims to belong
// to. For Ballot the start/end heights (a, b) ride along, since validity
// depends on them.
struct PathWord {
    PathFamily family = PathFamily::Dyck;
    std::vector<Step> steps;
    int a = 0;  // Ballot only: start height
    int b = 0;  // Ballot only: end height

    bool operator==(const PathWord&) const = default;
};

// Compact text form, e.g. "UUDD", "H2UH2DH1", "ENW1SE". Parsing is by
// longest token match (NW1 before NW before N).
std::string to_string(const PathWord& w);
PathWord parse_word(PathFamily family, const std::string& text, int a = 0, int b = 0);

// Full membership test for the word's family (step alphabet, region
// constraints, forbidden factors, endpoint condition, color usage rules).
bool validate(const PathWord& w);

// Number of steps (trivial accessor, provided for symmetry with size()).
inline long long length(const PathWord& w) {
    return static_cast<long long>(w.steps.size());
}

// Weighted size for the uneven bicolored families: U,H2 weigh 1 and D,H1
// weigh 2. For every other family this equals length().
long long weighted_size(const PathWord& w);

// Canonical size of the word in its family's grading (see header comment).
long long size(const PathWord& w);

// All words of the family with the given size, in lexicographic order under
// the Step tag order. Not usable for Ballot (use enumerate_ballot_paths).
std::vector<PathWord> enumerate(PathFamily family, long long size,
                                const EnumLimits& limits = {});

// Nonnegative U/D paths of length n from height a to height b.
std::vector<PathWord> enumerate_ballot_paths(int a, int b, int n,
                                             const EnumLimits& limits = {});

// |{nonnegative U/D paths of length n from height a to b}| by the reflection
// principle: C(n, (n-b+a)/2) - C(n, (n-b-a-2)/2), and 0 when n-b+a is odd.
Int ballot_count(int a, int b, int n);

// Vertex heights h_0 .. h_len of a +-1/horizontal word (U:+1, D:-1, others 0).
std::vector<int> heights(const PathWord& w);

}  // namespace symmetria
