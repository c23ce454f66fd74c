#include "symmetria/series.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symmetria {

namespace {

Rat rat_pow(const Rat& base, long long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0 to a negative power");
        return rat_pow(Rat(1) / base, -e);
    }
    Rat r = 1;
    Rat b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace

const char* var_name(Var v) {
    switch (v) {
        case Var::s: return "s";
        case Var::v: return "v";
        case Var::x: return "x";
        case Var::y: return "y";
        case Var::u: return "u";
        case Var::s1: return "s1";
        case Var::s2: return "s2";
        case Var::z2: return "z2";
    }
    return "?";
}

Monomial Monomial::of(Var v, int exp) {
    Monomial m;
    if (exp != 0) m.factors_.emplace_back(v, exp);
    return m;
}

int Monomial::exponent(Var v) const {
    for (const auto& [var, exp] : factors_)
        if (var == v) return exp;
    return 0;
}

bool Monomial::any_negative() const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [](const auto& f) { return f.second < 0; });
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < factors_.size() || j < o.factors_.size()) {
        if (j == o.factors_.size() ||
            (i < factors_.size() && factors_[i].first < o.factors_[j].first)) {
            r.factors_.push_back(factors_[i++]);
        } else if (i == factors_.size() || o.factors_[j].first < factors_[i].first) {
            r.factors_.push_back(o.factors_[j++]);
        } else {
            int e = factors_[i].second + o.factors_[j].second;
            if (e != 0) r.factors_.emplace_back(factors_[i].first, e);
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::pow(int k) const {
    Monomial r;
    if (k == 0) return r;
    for (const auto& [var, exp] : factors_) r.factors_.emplace_back(var, exp * k);
    if (k < 0)  // exponent signs flipped; keep factors sorted by variable
        std::sort(r.factors_.begin(), r.factors_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
}

Monomial Monomial::without(Var v) const {
    Monomial r;
    for (const auto& f : factors_)
        if (f.first != v) r.factors_.push_back(f);
    return r;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [var, exp] : factors_) {
        out += var_name(var);
        if (exp != 1) out += "^" + std::to_string(exp);
    }
    return out;
}

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    c_.resize(static_cast<size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::constant(int order, const Rat& c) {
    TruncatedSeries r(order);
    r.add_term(0, Monomial::unit(), c);
    return r;
}

TruncatedSeries TruncatedSeries::term(int order, const Rat& c, const Monomial& m,
                                      int zdeg) {
    if (zdeg < 0) throw std::invalid_argument("term: negative z-degree");
    TruncatedSeries r(order);
    r.add_term(zdeg, m, c);
    return r;
}

const TruncatedSeries::Coeff& TruncatedSeries::at(int n) const {
    if (n < 0 || n > order_) throw std::out_of_range("TruncatedSeries::at");
    return c_[static_cast<size_t>(n)];
}

Rat TruncatedSeries::coeff(int n, const Monomial& m) const {
    if (n < 0 || n > order_) throw std::out_of_range("TruncatedSeries::coeff");
    auto it = c_[static_cast<size_t>(n)].find(m);
    return it == c_[static_cast<size_t>(n)].end() ? Rat(0) : it->second;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Coeff& m) { return m.empty(); });
}

void TruncatedSeries::add_term(int zdeg, const Monomial& m, const Rat& c) {
    if (zdeg < 0) throw std::invalid_argument("add_term: negative z-degree");
    if (zdeg > order_ || c == 0) return;
    for (const auto& [cv, cap] : caps_)
        if (m.exponent(cv) > cap) return;
    Rat& slot = c_[static_cast<size_t>(zdeg)][m];
    slot += c;
    if (slot == 0) c_[static_cast<size_t>(zdeg)].erase(m);
}

void TruncatedSeries::set_cap(Var v, int cap) {
    if (cap < 0) throw std::invalid_argument("set_cap: negative cap");
    auto it = caps_.find(v);
    caps_[v] = (it == caps_.end()) ? cap : std::min(it->second, cap);
    enforce_caps();
}

void TruncatedSeries::merge_flags(const TruncatedSeries& o) {
    laurent_.insert(o.laurent_.begin(), o.laurent_.end());
    for (const auto& [v, cap] : o.caps_) {
        auto it = caps_.find(v);
        caps_[v] = (it == caps_.end()) ? cap : std::min(it->second, cap);
    }
    enforce_caps();
}

void TruncatedSeries::enforce_caps() {
    if (caps_.empty()) return;
    for (Coeff& m : c_) {
        for (auto it = m.begin(); it != m.end();) {
            bool drop = false;
            for (const auto& [cv, cap] : caps_)
                if (it->first.exponent(cv) > cap) { drop = true; break; }
            it = drop ? m.erase(it) : std::next(it);
        }
    }
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (Coeff& m : r.c_)
        for (auto& [mono, c] : m) c = -c;
    return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries r(std::min(order_, o.order_));
    r.laurent_ = laurent_;
    r.caps_ = caps_;
    r.merge_flags(o);
    for (int n = 0; n <= r.order_; ++n) {
        r.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)];
        for (const auto& [m, c] : o.c_[static_cast<size_t>(n)]) {
            Rat& slot = r.c_[static_cast<size_t>(n)][m];
            slot += c;
            if (slot == 0) r.c_[static_cast<size_t>(n)].erase(m);
        }
    }
    r.enforce_caps();
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + (-o);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    TruncatedSeries r(std::min(order_, o.order_));
    r.laurent_ = laurent_;
    r.caps_ = caps_;
    r.merge_flags(o);
    for (int n = 0; n <= r.order_; ++n) {
        for (int i = 0; i <= n; ++i) {
            const Coeff& a = c_[static_cast<size_t>(i)];
            const Coeff& b = o.c_[static_cast<size_t>(n - i)];
            if (a.empty() || b.empty()) continue;
            for (const auto& [ma, ca] : a)
                for (const auto& [mb, cb] : b)
                    r.add_term(n, ma.times(mb), ca * cb);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rat& c) const {
    TruncatedSeries r(order_);
    r.laurent_ = laurent_;
    r.caps_ = caps_;
    if (c == 0) return r;
    r.c_ = c_;
    for (Coeff& m : r.c_)
        for (auto& [mono, cc] : m) cc *= c;
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    // Equal iff all coefficients up to the smaller order agree.
    int n = std::min(order_, o.order_);
    for (int i = 0; i <= n; ++i)
        if (c_[static_cast<size_t>(i)] != o.c_[static_cast<size_t>(i)]) return false;
    return true;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    const Coeff& a0 = c_[0];
    if (a0.size() != 1 || !a0.begin()->first.is_unit() || a0.begin()->second == 0)
        throw std::domain_error(
            "reciprocal: constant term must be a nonzero monomial-free rational");
    Rat r0 = a0.begin()->second;
    TruncatedSeries b(order_);
    b.laurent_ = laurent_;
    b.caps_ = caps_;
    b.c_[0][Monomial::unit()] = Rat(1) / r0;
    for (int n = 1; n <= order_; ++n) {
        // r0 * b_n + sum_{k=1..n} a_k b_{n-k} = 0
        Coeff acc;
        for (int k = 1; k <= n; ++k) {
            const Coeff& ak = c_[static_cast<size_t>(k)];
            const Coeff& bnk = b.c_[static_cast<size_t>(n - k)];
            for (const auto& [ma, ca] : ak)
                for (const auto& [mb, cb] : bnk) {
                    Monomial m = ma.times(mb);
                    Rat& slot = acc[m];
                    slot += ca * cb;
                    if (slot == 0) acc.erase(m);
                }
        }
        for (const auto& [m, c] : acc) b.add_term(n, m, -c / r0);
    }
    return b;
}

TruncatedSeries TruncatedSeries::sqrt() const {
    const Coeff& a0 = c_[0];
    if (a0.size() != 1 || !a0.begin()->first.is_unit() || a0.begin()->second != 1)
        throw std::domain_error("sqrt: constant term must be exactly 1");
    TruncatedSeries b(order_);
    b.laurent_ = laurent_;
    b.caps_ = caps_;
    b.c_[0][Monomial::unit()] = 1;
    for (int n = 1; n <= order_; ++n) {
        // a_n = 2 b_n + sum_{k=1..n-1} b_k b_{n-k}
        Coeff acc = c_[static_cast<size_t>(n)];
        for (int k = 1; k <= n - 1; ++k) {
            const Coeff& bk = b.c_[static_cast<size_t>(k)];
            const Coeff& bnk = b.c_[static_cast<size_t>(n - k)];
            for (const auto& [ma, ca] : bk)
                for (const auto& [mb, cb] : bnk) {
                    Monomial m = ma.times(mb);
                    Rat& slot = acc[m];
                    slot -= ca * cb;
                    if (slot == 0) acc.erase(m);
                }
        }
        for (const auto& [m, c] : acc) b.add_term(n, m, c / 2);
    }
    return b;
}

TruncatedSeries TruncatedSeries::substitute_z(int k, const Rat& scale,
                                              std::optional<int> result_order) const {
    if (k < 1) throw std::invalid_argument("substitute_z: power must be >= 1");
    int ro = result_order.value_or(order_);
    // The input's accuracy supports z-degrees up to (order+1)*k - 1.
    long long max_ok = static_cast<long long>(order_ + 1) * k - 1;
    if (ro < 0 || ro > max_ok)
        throw std::invalid_argument("substitute_z: requested order exceeds accuracy");
    TruncatedSeries r(ro);
    r.laurent_ = laurent_;
    r.caps_ = caps_;
    Rat sc = 1;
    for (int n = 0; n <= order_; ++n) {
        if (static_cast<long long>(n) * k <= ro)
            for (const auto& [m, c] : c_[static_cast<size_t>(n)])
                r.add_term(n * k, m, c * sc);
        sc *= scale;
    }
    return r;
}

TruncatedSeries TruncatedSeries::subst(Var v, const Rat& value) const {
    TruncatedSeries r(order_);
    r.laurent_ = laurent_;
    r.laurent_.erase(v);
    r.caps_ = caps_;
    r.caps_.erase(v);
    for (int n = 0; n <= order_; ++n) {
        for (const auto& [m, c] : c_[static_cast<size_t>(n)]) {
            int e = m.exponent(v);
            if (e == 0) {
                r.add_term(n, m, c);
                continue;
            }
            if (e < 0 && value == 0)
                throw std::domain_error("subst: zero value for a Laurent variable");
            r.add_term(n, m.without(v), c * rat_pow(value, e));
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::subst(Var v, const Monomial& m, int zpow,
                                       const Rat& scale) const {
    if (zpow < 0) throw std::invalid_argument("subst: negative z power");
    TruncatedSeries r(order_);
    r.laurent_ = laurent_;
    r.laurent_.erase(v);
    r.caps_ = caps_;
    r.caps_.erase(v);
    if (m.any_negative())
        for (const auto& [var, exp] : m.factors())
            if (exp < 0) r.laurent_.insert(var);
    for (int n = 0; n <= order_; ++n) {
        for (const auto& [mono, c] : c_[static_cast<size_t>(n)]) {
            int e = mono.exponent(v);
            if (e == 0) {
                r.add_term(n, mono, c);
                continue;
            }
            if (e < 0 && zpow > 0)
                throw std::domain_error("subst: negative exponent with a z power");
            long long nz = n + static_cast<long long>(zpow) * e;
            if (nz > r.order_) continue;
            r.add_term(static_cast<int>(nz), mono.without(v).times(m.pow(e)),
                       c * rat_pow(scale, e));
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::diagonal(Var second) const {
    TruncatedSeries r(order_);
    r.laurent_ = laurent_;
    r.laurent_.erase(second);
    r.caps_ = caps_;
    r.caps_.erase(second);
    for (int n = 0; n <= order_; ++n)
        for (const auto& [m, c] : c_[static_cast<size_t>(n)])
            if (m.exponent(second) == n) r.add_term(n, m.without(second), c);
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order_)
        throw std::invalid_argument("truncated: cannot extend a series");
    TruncatedSeries r(new_order);
    r.laurent_ = laurent_;
    r.caps_ = caps_;
    for (int n = 0; n <= new_order; ++n) r.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)];
    return r;
}

std::string TruncatedSeries::to_json() const {
    nlohmann::ordered_json root;
    root["order"] = order_;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (int n = 0; n <= order_; ++n) {
        for (const auto& [m, c] : c_[static_cast<size_t>(n)]) {
            nlohmann::ordered_json t;
            t["zdeg"] = n;
            nlohmann::ordered_json mono = nlohmann::ordered_json::object();
            for (const auto& [var, exp] : m.factors()) mono[var_name(var)] = exp;
            t["monomial"] = mono;
            t["num"] = boost::multiprecision::numerator(c).str();
            t["den"] = boost::multiprecision::denominator(c).str();
            terms.push_back(t);
        }
    }
    root["terms"] = terms;
    return root.dump();
}

std::string TruncatedSeries::pretty() const {
    // One signed product like "2sz^3" or "-4/3s^2" (coefficient 1 omitted).
    auto product = [](const Rat& c, const Monomial& m) {
        std::string s = c.str();
        if (!m.is_unit()) {
            if (s == "1") s.clear();
            else if (s == "-1") s = "-";
            s += m.str();
        }
        return s;
    };
    std::string out;
    for (int n = 0; n <= order_; ++n) {
        const Coeff& cm = c_[static_cast<size_t>(n)];
        if (cm.empty()) continue;
        std::string chunk;
        for (const auto& [m, c] : cm) {
            std::string t = product(c, m);
            if (chunk.empty()) chunk = t;
            else if (t.front() == '-') chunk += "-" + t.substr(1);
            else chunk += "+" + t;
        }
        std::string zpart = n == 0 ? "" : (n == 1 ? "z" : "z^" + std::to_string(n));
        std::string piece;
        if (zpart.empty()) {
            piece = chunk;
        } else if (cm.size() == 1) {
            if (chunk == "1") chunk.clear();
            else if (chunk == "-1") chunk = "-";
            piece = chunk + zpart;
        } else {
            piece = "(" + chunk + ")" + zpart;
        }
        if (out.empty()) out = piece;
        else if (piece.front() == '-') out += " - " + piece.substr(1);
        else out += " + " + piece;
    }
    return out.empty() ? "0" : out;
}

}  // namespace symmetria
