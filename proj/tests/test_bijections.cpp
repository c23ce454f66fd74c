#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symmetria/bijections.hpp"
#include "symmetria/statistics.hpp"
#include "symmetria/verify.hpp"

using namespace symmetria;

namespace {

PathWord path(PathFamily f, std::initializer_list<Step> steps) {
    return PathWord{f, std::vector<Step>(steps), 0, 0};
}

const Step U = Step::U, D = Step::D;

}  // namespace

TEST_CASE("phi on worked examples") {
    // Pairing step i with the reflection of step 2n+1-i: UDUD pairs
    // (U,U) then (D,D), giving one horizontal step of each color.
    PathWord p = path(PathFamily::GrandDyck, {U, D, U, D});
    PathWord q = phi(p);
    CHECK(q.steps == std::vector<Step>{Step::H2, Step::H1});
    CHECK(phi_inv(q).steps == p.steps);

    // A palindrome maps to horizontals only; an antisymmetric path to U/D.
    CHECK(phi(path(PathFamily::GrandDyck, {U, U, D, D})).steps ==
          std::vector<Step>{Step::H2, Step::H2});
    CHECK(phi(path(PathFamily::GrandDyck, {U, D, D, U})).steps ==
          std::vector<Step>{Step::U, Step::D});
}

TEST_CASE("sv_to_ret on a worked example") {
    PathWord p = path(PathFamily::GrandDyck, {U, D, U, D});
    PathWord q = sv_to_ret(p);
    CHECK(validate(q));
    CHECK(sv(p) == ret(q));
}

TEST_CASE("partial_n reads the square boundary") {
    // The full square [n, n, ..., n] maps to a grand Dyck path, and ds is
    // preserved; spot-check two partitions in the 2 x 2 square.
    Partition full{{2, 2}};
    PathWord q = partial_n(full, 2);
    CHECK(validate(q));
    CHECK(ds_path(q) == ds_square(full, 2));
    CHECK(partial_n_inv(q) == full);

    Partition empty{{}};
    PathWord e = partial_n(empty, 2);
    CHECK(ds_path(e) == 2);
    CHECK(partial_n_inv(e) == empty);
}

TEST_CASE("mu and theta on worked examples") {
    // All-horizontal peakless path loses one step.
    PathWord flat = path(PathFamily::PeaklessMotzkin, {Step::H1, Step::H1, Step::H1});
    PathWord m = mu(flat);
    CHECK(m.family == PathFamily::ValleyFreeMotzkin);
    CHECK(m.steps.size() == 2);
    CHECK(mu_inv(m).steps == flat.steps);

    // A peak UD is valley-free; theta turns it into a single weight-2 step.
    PathWord peak = path(PathFamily::ValleyFreeMotzkin, {U, D});
    PathWord t = theta(peak);
    CHECK(validate(t));
    CHECK(weighted_size(t) == 2);
    CHECK(theta_inv(t).steps == peak.steps);
}

TEST_CASE("walk chain on a worked example") {
    PathWord p = path(PathFamily::Dyck, {U, U, D, D});
    PathWord w = dyck_to_wq3(p);
    CHECK(validate(w));
    CHECK(w.steps == std::vector<Step>{Step::E, Step::E});
    CHECK(wq3_to_dyck(w).steps == p.steps);
    CHECK(dyck_to_wq3(path(PathFamily::Dyck, {U, D, U, D})).steps ==
          std::vector<Step>{Step::E, Step::W});
    // Stage-by-stage composition agrees with the direct map.
    CHECK(wq2_shear_wq3(wq1_fold_wq2(dyck_to_wq1(p))).steps == w.steps);
}

TEST_CASE("exhaustive bijection suite at small sizes") {
    VerifyOptions opt;
    opt.max_n = 5;
    SuiteResult r = verify_bijections(opt);
    for (const auto& c : r.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.ok);
    }
}
