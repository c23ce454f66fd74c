#pragma once

// Catalog of closed-form generating functions for the symmetry statistics,
// realized as exact truncated series, plus brute-force oracle builders that
// assemble the same series by exhaustive object enumeration. Catalog entries
// and oracles are built through entirely separate code paths, so agreement
// between them to a given order is a genuine cross-check.
//
// Variable conventions (see series.hpp for the variable set):
//   z  grades objects by size (semilength / side / semiperimeter / steps),
//   s  marks the degree of symmetry ds,
//   v  marks the number of symmetric vertices sv,
//   y  marks midpoint height (Laurent) or the endpoint height b,
//   x,y,s1,s2  mark bicolored Motzkin step counts in F and G,
//   u,v  mark start/end heights in the two-sided ballot kernel B_UVZ.

#include "symmetria/bargraphs.hpp"
#include "symmetria/partitions.hpp"
#include "symmetria/paths.hpp"
#include "symmetria/series.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace symmetria {

enum class GfName {
    CATALAN,        // C(z) = (1 - sqrt(1-4z)) / (2z)
    F,              // bicolored Motzkin by step type: F(xz, yz)
    G,              // bicolored grand Motzkin: 1/(1 - s1 xz - s2 yz - 2 x y z^2 F)
    DS_GRAND,       // grand Dyck paths by semilength (z) and ds (s)
    SV_GRAND,       // grand Dyck paths by semilength (z) and sv (v)
    JOINT_DS_SV,    // grand Dyck paths by semilength, ds (s) and sv (v)
    DS_SQUARE,      // partitions in the n x n square by ds (s); equals DS_GRAND
    DS_MINSQ,       // partitions by minimal bounding square (z) and ds (s)
    PSP,            // partitions by semiperimeter (z) and ds (s)
    JTILDE,         // (sqrt(1-4z^2) - 1 + 2z) / (2z(1-2z)); tail factor of PSP
    K,              // z^3 * JTILDE * DS_GRAND(z^2); PSP = 1 + s z^2 DS_GRAND(z^2) + 2K
    DSH_SQUARE,     // partitions in the square by hook symmetry dsh (s)
    DSH_MINSQ,      // partitions by min square (z) and dsh (s)
    PHO_GRAND,      // grand Dyck paths by semilength and peaks-at-height-one (s)
    UB_XY,          // unimodal centered bargraphs by ds (s), width (x), height (y), sp (z)
    UB_SP,          // unimodal centered bargraphs by ds (s) and semiperimeter (z)
    PEAKLESS,       // peakless Motzkin paths by weighted size
    BALLOT_B0B,     // nonnegative U/D paths from 0 by length (z) and end height (y)
    B_UVZ,          // nonnegative U/D paths by start (u), end (v) heights and length
    HM_GRAND,       // grand Dyck paths by semilength and midpoint height (y, Laurent)
    JOINT_DS_HM,    // grand Dyck paths by semilength, ds (s) and midpoint height (y)
};

const char* gf_name(GfName g);
// Throws std::invalid_argument for unknown names.
GfName parse_gf_name(const std::string& name);
std::vector<GfName> all_gf_names();

// Builds the named series to the given truncation order in z.
TruncatedSeries gf_catalog(GfName g, int order);

// Nonnegative U/D paths from height a to height b by length; closed form
// z^|b-a| C(z^2)^(|b-a|+1) (1 - (zC(z^2))^(2 min(a,b) + 2)) / (1 - (zC(z^2))^2).
TruncatedSeries gf_ballot_ab(int a, int b, int order);

// ---- brute-force oracles (independent enumeration routes) ----

using PathStatFn = std::function<int(const PathWord&)>;
using PartitionStatFn = std::function<int(const Partition&, int)>;

// sum_{size n <= order} sum_{paths} prod var^stat z^n. Laurent variables must
// be flagged by the caller via the returned series before comparison -- this
// builder flags `y` Laurent automatically when any exponent is negative.
TruncatedSeries bf_paths(PathFamily family, int order,
                         const std::vector<std::pair<Var, PathStatFn>>& stats,
                         const EnumLimits& limits = {});

// Partitions inside the n x n square, graded by n; the statistic receives n.
TruncatedSeries bf_partitions_square(int order, Var var, const PartitionStatFn& stat,
                                     const EnumLimits& limits = {});
// Partitions graded by semiperimeter.
TruncatedSeries bf_partitions_sp(int order, Var var,
                                 const std::function<int(const Partition&)>& stat,
                                 const EnumLimits& limits = {});
// Partitions graded by minimal bounding square side m; statistic receives m.
TruncatedSeries bf_partitions_minsq(int order, Var var, const PartitionStatFn& stat,
                                    const EnumLimits& limits = {});
// Unimodal centered bargraphs graded by semiperimeter; marks ds with s and,
// when with_xy is set, width with x and maximal height with y.
TruncatedSeries bf_bargraphs_ub(int order, bool with_xy, const EnumLimits& limits = {});
// Nonnegative U/D paths from 0 graded by length, end height marked by y.
TruncatedSeries bf_ballot_b0b(int order, const EnumLimits& limits = {});

// Squares every coefficient in place: the (zdeg, monomial) coefficient of
// the result is the square of the input's. (The Hadamard square; used to
// turn path counts by endpoint into glued two-sided path counts.)
TruncatedSeries hadamard_square(const TruncatedSeries& a);

}  // namespace symmetria
