#pragma once

// Quarter-plane walk model equivalent to Dyck paths with symmetry statistics.
//
// Walks start at the origin, take steps E=(1,0), W=(-1,0), NW=(-1,1),
// SE=(1,-1) and stay in the quarter plane x,y >= 0. A NW step leaving the
// x-axis (from y=0 with x>0) comes in two colors. A walk of length n ending
// anywhere on the x-axis corresponds to a Dyck path of semilength n; under
// the correspondence,
//   * E/W steps taken on the x-axis   <-> symmetric steps (ds), marked by s,
//   * steps starting on the x-axis    <-> symmetric vertices (sv), marked by v.
//
// R(x,y,t,z) denotes the complete generating function: z marks length, x,y
// the endpoint, t the active statistic marker (s or v). The kernel-form
// functional equations below pin R down uniquely, and feq_residual() checks
// that the DP-built R satisfies them identically through the working order.

#include "symmetria/numeric.hpp"
#include "symmetria/series.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace symmetria {

// At most one flag may be set.
struct WalkWeighting {
    bool mark_steps_on_axis = false;    // s-weight: E/W steps taken at y = 0
    bool mark_steps_from_axis = false;  // v-weight: any step starting at y = 0
};

// counts[{x, y, k}] = number of walks of the table's length ending at (x,y)
// with k marked steps (k = 0 throughout when no weighting is active).
struct WalkTable {
    int length = 0;
    std::map<std::tuple<int, int, int>, Int> counts;
};

// Tables for lengths 0..n. `colored` enables the two-color rule for NW steps
// leaving the x-axis; the uncolored model counts plain quarter-plane walks.
std::vector<WalkTable> walk_dp(int n, const WalkWeighting& w, bool colored = true);

enum class WalkMark { Ds, Sv };

// R(x,y,t,z) truncated at z-order `order`, assembled from walk_dp. The
// endpoint variables are x and y; the statistic marker is s (Ds) or v (Sv).
TruncatedSeries walk_gf(int order, WalkMark mark);

// Left side minus right side of the kernel functional equation for the given
// statistic; identically zero through the truncation order iff walk_gf
// satisfies the equation. With perturb_kernel set, a kernel coefficient is
// deliberately altered; the residual must then be nonzero (this guards the
// checker itself against vacuous passes).
TruncatedSeries feq_residual(int order, WalkMark mark, bool perturb_kernel = false);

// Named specialization checks of R against independently computed families
// (central binomial / Catalan squares, uncolored walk counts, ballot-count
// squares). Each check reports the number of coefficients compared.
struct NamedCheck {
    std::string name;
    bool ok = false;
    int compared = 0;
    std::string detail;
};
std::vector<NamedCheck> walk_specialization_checks(int order);

// Dyck paths by semilength (z) and midpoint height (y) = R(y,0,1,z) with the
// endpoint x renamed to y. Three independent routes:
TruncatedSeries hm_dyck_walks(int order);    // quarter-plane DP
TruncatedSeries hm_dyck_ballot(int order);   // squared reflection-principle counts
TruncatedSeries hm_dyck_squared(int order);  // Hadamard square of the ballot series

}  // namespace symmetria
