#pragma once

// Explicit bijections between the path/partition families, each shipped with
// its inverse (or with the inverse recoverable from the stages). They are the
// combinatorial backbone of the series identities: every transport law they
// claim is checked exhaustively in the test suite.
//
//  phi / phi_inv          grand Dyck (semilength n) <-> bicolored grand
//                         Motzkin (length n). Step i of the image is U when
//                         (l_i, r_i) = (U, D), D when (D, U), H1 when (D, D),
//                         H2 when (U, U), where l_i is step i of the left
//                         half and r_i the reflected step 2n+1-i of the right
//                         half. Transports: ds -> number of horizontal steps
//                         on the x-axis; sv -> (vertices on the x-axis) - 1.
//  sv_to_ret              grand Dyck -> grand Dyck, phi followed by the
//                         letter substitution U->UU, D->DD, H1->UD, H2->DU.
//                         Transports sv -> ret.
//  partial_n / inverse    partitions in the n x n square <-> grand Dyck of
//                         semilength n (boundary-path reading of the padded
//                         diagram). Transports ds_square -> ds_path and
//                         dsh -> number of H1 steps at height 0 of phi.
//  psi                    partitions in the n x n square -> grand Dyck of
//                         semilength n, built from the diagonal hook arms and
//                         legs. Transports dsh -> pho.
//  mu / mu_inv            peakless Motzkin (length n+1) <-> valley-free
//                         Motzkin (length n): the horizontal run between a D
//                         and the next U grows by one, the run between a U
//                         and the next D shrinks by one; an all-horizontal
//                         path loses one step.
//  theta / theta_inv      valley-free Motzkin (length n) <-> uneven bicolored
//                         Motzkin (size n). Every D either absorbs the H
//                         right after it, or is merged into its matching U
//                         (the rightmost U to its left spanning the same
//                         heights), which becomes H1; remaining H become H2.
//  big_theta              peakless grand Motzkin (length n) -> uneven
//                         bicolored grand Motzkin (size n), assembled from
//                         theta and mu on the excursion decomposition.
//  dyck_to_wq1            Dyck (semilength n) -> quadrant walk of length n
//                         with steps NE/NW/SE/SW ending on the diagonal:
//                         walk vertex i = (right-half height, left-half
//                         height) after i steps.
//  wq1_fold_wq2           fold along y = x into the octant x >= y >= 0; SE
//                         steps leaving the diagonal carry color 1 when the
//                         folded excursion was below the diagonal and color 2
//                         when it was above.
//  wq2_shear_wq3          apply (x, y) |-> (y, (x-y)/2): steps become
//                         E/W/NW/SE in the quarter plane, walks end on the
//                         x-axis, and the SE colors turn into NW colors on
//                         steps leaving the x-axis.
//  dyck_to_wq3            composition of the three stages. Transports
//                         ds -> steps lying on the x-axis and sv -> vertices
//                         on the x-axis excluding the final one.
//  wq3_to_dyck            full inverse of dyck_to_wq3.

#include "symmetria/partitions.hpp"
#include "symmetria/paths.hpp"

namespace symmetria {

PathWord phi(const PathWord& grand_dyck);
PathWord phi_inv(const PathWord& bicolored_grand_motzkin);

PathWord sv_to_ret(const PathWord& grand_dyck);

PathWord partial_n(const Partition& p, int n);
Partition partial_n_inv(const PathWord& grand_dyck);

PathWord psi(const Partition& p, int n);

PathWord mu(const PathWord& peakless_motzkin);
PathWord mu_inv(const PathWord& valley_free_motzkin);

PathWord theta(const PathWord& valley_free_motzkin);
PathWord theta_inv(const PathWord& uneven_bicolored_motzkin);

PathWord big_theta(const PathWord& peakless_grand_motzkin);

PathWord dyck_to_wq1(const PathWord& dyck);
PathWord wq1_fold_wq2(const PathWord& wq1);
PathWord wq2_shear_wq3(const PathWord& wq2);
PathWord dyck_to_wq3(const PathWord& dyck);
PathWord wq3_to_dyck(const PathWord& wq3);

// Stage inverses (exposed for the round-trip tests).
PathWord wq1_to_dyck(const PathWord& wq1);
PathWord wq2_unfold_wq1(const PathWord& wq2);
PathWord wq3_unshear_wq2(const PathWord& wq3);

}  // namespace symmetria
