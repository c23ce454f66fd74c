#pragma once

// Exact distributions of the symmetry statistics at fixed size, their
// moments, and distances to the continuous limit laws.
//
// Each DistClass names (object family, statistic). exact_distribution()
// computes the distribution through a generating-function or DP route that
// scales to n in the hundreds; exact_distribution_oracle() enumerates the
// objects one by one and is feasible only for small n. Limit-law distances
// compare the rescaled statistic X_n / sqrt(n) against a Rayleigh or
// half-normal law via the Kolmogorov-Smirnov statistic.

#include "symmetria/numeric.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace symmetria {

enum class DistClass {
    GrandDyckDs,   // grand Dyck, degree of symmetry
    GrandDyckSv,   // grand Dyck, symmetric vertices
    GrandDyckPho,  // grand Dyck, peaks at height one
    GrandDyckHm,   // grand Dyck, midpoint height (can be negative)
    DyckDs,        // Dyck, degree of symmetry
    DyckSv,        // Dyck, symmetric vertices
    DyckHm,        // Dyck, midpoint height
    SquareDs,      // partitions in the n x n square, ds
    SquareDsh,     // partitions in the n x n square, hook symmetry dsh
    MinSquareDs,   // partitions with minimal square side n, ds
    SpDs,          // partitions with semiperimeter n, ds
    UnimodalBargraphDs,  // unimodal centered bargraphs with semiperimeter n, ds
};

const char* dist_class_name(DistClass c);
DistClass parse_dist_class(const std::string& family, const std::string& stat);

struct Histogram {
    long long n = 0;                  // object size
    std::map<long long, Int> counts;  // statistic value -> number of objects
    Int total() const;
};

// Fast route (series coefficient extraction / walk DP).
Histogram exact_distribution(DistClass c, int n);
// Exhaustive enumeration oracle; throws resource_limit_error past the cap.
Histogram exact_distribution_oracle(DistClass c, int n, const EnumLimits& limits = {});

struct Moments {
    Rat mean;
    Rat variance;
};
Moments histogram_moments(const Histogram& h);
// Closed forms, available for GrandDyckDs and GrandDyckSv (n >= 1).
Moments closed_form_moments(DistClass c, int n);

struct LimitLaw {
    enum class Kind { Rayleigh, HalfNormal };
    Kind kind = Kind::Rayleigh;
    double sigma = 1.0;

    double cdf(double t) const;
    double density(double t) const;
    std::string name() const;
};
LimitLaw parse_law(const std::string& name, double sigma);
// The limit law of X_n / sqrt(n) for the class, with its exact sigma.
// Defined for GrandDyckDs, GrandDyckSv, SquareDs, SquareDsh, SpDs,
// UnimodalBargraphDs; throws std::invalid_argument otherwise.
LimitLaw reference_law(DistClass c);

struct LawDistance {
    double kolmogorov = 0.0;       // sup-norm CDF distance of X_n/sqrt(n)
    double max_density_error = 0.0;  // max_k |P(X=k) - density(k/sqrt n)/sqrt n|
};
LawDistance limit_law_distance(const Histogram& h, const LimitLaw& law);

// CSV with header "n,k,count,total", one row per statistic value k.
void write_csv(const Histogram& h, std::ostream& out);

}  // namespace symmetria
