#pragma once

// Truncated formal power series over exact rationals.
//
// A TruncatedSeries is dense in the main variable z up to a fixed truncation
// order; each z-coefficient is a sparse polynomial (a map monomial -> Rat)
// in a small set of auxiliary marker variables. Auxiliary exponents are
// nonnegative unless the variable is flagged Laurent (used for the midpoint
// height marker, which can be negative). A per-variable exponent cap may be
// set where a generating function has unbounded auxiliary degree at fixed
// z-degree; caps are sound for cap-respecting extractions because capped
// variables are never Laurent and exponents only grow under multiplication.
//
// reciprocal() requires a monomial-free nonzero constant term, sqrt()
// requires constant term exactly 1; both are computed by the standard
// coefficient recurrences, so all arithmetic stays exact.

#include "symmetria/numeric.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace symmetria {

// z2 is a second main variable used only for diagonal extraction; it rides
// along in monomials (capped, since its degree is unbounded at fixed
// z-degree).
enum class Var : std::uint8_t { s, v, x, y, u, s1, s2, z2 };

const char* var_name(Var v);

// Product of var^exp factors; factors sorted by variable, exponents nonzero.
class Monomial {
public:
    Monomial() = default;
    static Monomial unit() { return {}; }
    static Monomial of(Var v, int exp = 1);

    bool is_unit() const { return factors_.empty(); }
    int exponent(Var v) const;
    bool any_negative() const;
    const std::vector<std::pair<Var, int>>& factors() const { return factors_; }

    Monomial times(const Monomial& o) const;
    Monomial pow(int k) const;  // any integer; multiplies every exponent by k
    Monomial without(Var v) const;

    bool operator==(const Monomial&) const = default;
    // Lexicographic by (variable, exponent) pairs; the canonical term order
    // used for maps, JSON output and pretty printing.
    bool operator<(const Monomial& o) const { return factors_ < o.factors_; }

    std::string str() const;  // e.g. "s^2y^-1", "1" for the unit

private:
    std::vector<std::pair<Var, int>> factors_;
};

class TruncatedSeries {
public:
    using Coeff = std::map<Monomial, Rat>;

    explicit TruncatedSeries(int order);

    static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
    static TruncatedSeries constant(int order, const Rat& c);
    // c * m * z^zdeg (zdeg <= order).
    static TruncatedSeries term(int order, const Rat& c, const Monomial& m, int zdeg);

    int order() const { return order_; }
    const Coeff& at(int n) const;
    Rat coeff(int n, const Monomial& m) const;
    Rat coeff_unit(int n) const { return coeff(n, Monomial::unit()); }
    bool is_zero() const;

    void add_term(int zdeg, const Monomial& m, const Rat& c);

    void set_laurent(Var v) { laurent_.insert(v); }
    bool is_laurent(Var v) const { return laurent_.count(v) != 0; }
    void set_cap(Var v, int cap);

    TruncatedSeries operator-() const;
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rat& c) const;
    bool operator==(const TruncatedSeries& o) const;

    TruncatedSeries reciprocal() const;
    TruncatedSeries sqrt() const;

    // f(z) -> f(scale * z^k); result_order defaults to the same order (the
    // input's accuracy supports up to (order+1)*k - 1).
    TruncatedSeries substitute_z(int k, const Rat& scale = Rat(1),
                                 std::optional<int> result_order = std::nullopt) const;

    // v := value (Laurent variables require value != 0).
    TruncatedSeries subst(Var v, const Rat& value) const;
    // v^e -> scale^e * m^e * z^(zpow*e); requires nonnegative exponents on v
    // when zpow > 0 or m is not a pure variable power.
    TruncatedSeries subst(Var v, const Monomial& m, int zpow,
                          const Rat& scale = Rat(1)) const;

    // Diagonal in (z, second): picks, for every n, the part of the z^n
    // coefficient whose exponent of `second` is exactly n, with `second`
    // removed. Sound when `second` is capped at >= order.
    TruncatedSeries diagonal(Var second) const;

    TruncatedSeries truncated(int new_order) const;

    // Canonical JSON: {"order": N, "terms": [{"zdeg": n, "monomial": {..},
    // "num": "..", "den": ".."}, ...]} sorted by (zdeg, monomial order).
    std::string to_json() const;
    // Human form, e.g. "1 + 2sz + (2+4s^2)z^2".
    std::string pretty() const;

private:
    void merge_flags(const TruncatedSeries& o);
    void enforce_caps();

    int order_ = 0;
    std::vector<Coeff> c_;
    std::set<Var> laurent_;
    std::map<Var, int> caps_;
};

}  // namespace symmetria
