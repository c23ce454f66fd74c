#pragma once

// Symmetry statistics on lattice paths, partitions and bargraphs.
//
// For a (grand) Dyck path P of semilength n with vertex heights h_0..h_2n,
// call vertex i (0 <= i <= n) "mirrored" when h_i = h_{2n-i}, i.e. when it
// coincides with the reflection of the corresponding right-half vertex about
// the vertical line x = n.
//
//  * ds_path(P): number of steps i in 1..n whose segment is the mirror image
//    of segment 2n+1-i; equivalently, both endpoints of step i are mirrored
//    vertices. The midpoint vertex is mirrored by definition.
//  * sv(P): number of mirrored vertices with index 0 <= i <= n-1 (midpoint
//    excluded).
//  * ret(P): number of steps ending on the x-axis.
//  * pho(P): number of UD factors whose peak vertex has height 1.
//  * hm(P): midpoint height h_n (can be negative for grand paths).
//
// For partitions:
//  * ds_square(p, n): entries i in 1..n with pad_n(p)_i = pad_n(p')_i where
//    p' is the conjugate and pad_n zero-pads to length n (diagram must fit
//    in the n x n square). ds_square(empty, n) = n.
//  * ds_partition(p): parts with p_i = p'_i, i.e. ds_square at the minimal
//    bounding square size.
//  * dsh(p): diagonal hooks whose arm equals their leg; equivalently entries
//    i <= durfee(p) with p_i = p'_i.
//
// For bargraphs:
//  * ds_bargraph(B): indices i <= k/2 with col_i = col_{k+1-i} (k = width;
//    the middle column of an odd-width bargraph is not counted).

#include "symmetria/bargraphs.hpp"
#include "symmetria/partitions.hpp"
#include "symmetria/paths.hpp"

namespace symmetria {

int ds_path(const PathWord& w);
int sv(const PathWord& w);
int ret(const PathWord& w);
int pho(const PathWord& w);
int hm(const PathWord& w);

int ds_square(const Partition& p, int n);
int ds_partition(const Partition& p);
int dsh(const Partition& p);

int ds_bargraph(const Bargraph& b);

}  // namespace symmetria
