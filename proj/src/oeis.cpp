#include "symmetria/oeis.hpp"

#include "symmetria/distributions.hpp"
#include "symmetria/gf_catalog.hpp"
#include "symmetria/walks.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef SYMMETRIA_DATA_DIR
#define SYMMETRIA_DATA_DIR "data"
#endif

namespace symmetria {

namespace {

Int coeff_int(const TruncatedSeries& f, int n, Var marker, int k) {
    Rat acc = 0;
    for (const auto& [m, c] : f.at(n))
        if (m.exponent(marker) == k) acc += c;
    if (boost::multiprecision::denominator(acc) != 1)
        throw std::logic_error("oeis: non-integer series coefficient");
    return boost::multiprecision::numerator(acc);
}

// Triangle flattened row by row; row n contributes k = k_lo(n) .. k_hi(n).
template <typename RowCount>
std::vector<Int> flatten_rows(int count, int first_row, RowCount row_counts) {
    std::vector<Int> out;
    for (int n = first_row; static_cast<int>(out.size()) < count; ++n) {
        std::vector<Int> row = row_counts(n);
        for (Int& v : row) {
            out.push_back(std::move(v));
            if (static_cast<int>(out.size()) == count) break;
        }
    }
    return out;
}

// Histogram over a contiguous statistic range as a dense row.
std::vector<Int> histogram_row(const Histogram& h, long long k_lo, long long k_hi) {
    std::vector<Int> row;
    for (long long k = k_lo; k <= k_hi; ++k) {
        auto it = h.counts.find(k);
        row.push_back(it == h.counts.end() ? Int(0) : it->second);
    }
    return row;
}

// Colored quarter-plane walk counts of length n, filtered by endpoint.
enum class Endpoint { Origin, OnXAxis, OnYAxis, Any };

Int walk_count(int n, Endpoint e, bool colored) {
    std::vector<WalkTable> dp = walk_dp(n, WalkWeighting{}, colored);
    Int total = 0;
    for (const auto& [state, c] : dp[static_cast<size_t>(n)].counts) {
        auto [x, y, k] = state;
        (void)k;
        bool keep = false;
        switch (e) {
            case Endpoint::Origin: keep = x == 0 && y == 0; break;
            case Endpoint::OnXAxis: keep = y == 0; break;
            case Endpoint::OnYAxis: keep = x == 0; break;
            case Endpoint::Any: keep = true; break;
        }
        if (keep) total += c;
    }
    return total;
}

std::vector<Int> walk_sequence(int count, Endpoint e, bool colored, int length_factor) {
    std::vector<Int> out;
    for (int n = 0; n < count; ++n) out.push_back(walk_count(length_factor * n, e, colored));
    return out;
}

Int parse_int(const nlohmann::json& v, const std::string& where) {
    if (v.is_string()) return Int(v.get<std::string>());
    if (v.is_number_integer()) return Int(v.get<long long>());
    throw std::invalid_argument("oeis fixture: " + where + " must be an integer or string");
}

}  // namespace

OeisFixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("oeis fixture: cannot open " + path);
    nlohmann::json j;
    in >> j;
    OeisFixture f;
    f.id = j.at("id").get<std::string>();
    if (f.id.size() != 7 || f.id[0] != 'A' ||
        !std::all_of(f.id.begin() + 1, f.id.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("oeis fixture: malformed id '" + f.id + "' in " + path);
    f.offset = j.at("offset").get<long long>();
    for (const auto& t : j.at("terms")) f.terms.push_back(parse_int(t, "terms"));
    f.source = j.value("source", "");
    f.note = j.value("note", "");
    return f;
}

std::vector<OeisFixture> load_fixture_dir(const std::string& dir) {
    std::vector<OeisFixture> out;
    if (!std::filesystem::is_directory(dir))
        throw std::invalid_argument("oeis fixture dir not found: " + dir);
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            out.push_back(load_fixture(entry.path().string()));
    std::sort(out.begin(), out.end(),
              [](const OeisFixture& a, const OeisFixture& b) { return a.id < b.id; });
    return out;
}

std::string default_fixture_dir() { return std::string(SYMMETRIA_DATA_DIR) + "/oeis"; }

std::vector<std::string> known_sequence_ids() {
    return {"A000891", "A001246", "A004148", "A005558", "A005817", "A018224", "A051286",
            "A108747", "A213600", "A298645", "A339754", "A341415", "A341445"};
}

std::vector<Int> computed_prefix(const std::string& id, int count) {
    if (count <= 0) return {};
    // --- triangles of statistic distributions, flattened row by row ---
    if (id == "A341415")  // grand Dyck paths by degree of symmetry; rows n>=1, k=0..n
        return flatten_rows(count, 1, [](int n) {
            return histogram_row(exact_distribution(DistClass::GrandDyckDs, n), 0, n);
        });
    if (id == "A108747")  // grand Dyck paths by symmetric vertices; rows n>=1, k=1..n
        return flatten_rows(count, 1, [](int n) {
            return histogram_row(exact_distribution(DistClass::GrandDyckSv, n), 1, n);
        });
    if (id == "A341445" || id == "A298645")  // Dyck paths by degree of symmetry
        return flatten_rows(count, 1, [](int n) {
            // ds >= 1 on Dyck paths, so rows run k = 1..n.
            return histogram_row(exact_distribution(DistClass::DyckDs, n), 1, n);
        });
    if (id == "A339754")  // Dyck paths by symmetric vertices; rows n>=1, k=1..n
        return flatten_rows(count, 1, [](int n) {
            return histogram_row(exact_distribution(DistClass::DyckSv, n), 1, n);
        });
    if (id == "A213600") {  // Dyck paths by midpoint height; row n lists b = n mod 2 .. n
        TruncatedSeries f = hm_dyck_walks(count);  // row n only needs order n
        return flatten_rows(count, 0, [&](int n) {
            std::vector<Int> row;
            for (int b = n % 2; b <= n; b += 2) row.push_back(coeff_int(f, n, Var::y, b));
            return row;
        });
    }
    // --- plain counting sequences ---
    if (id == "A051286") {
        // Uneven bicolored grand Motzkin paths by weight: G(z^2, z, 1, 1).
        TruncatedSeries g = gf_catalog(GfName::G, count - 1)
                                .subst(Var::x, Monomial{}, 1)
                                .subst(Var::y, Rat(1))
                                .subst(Var::s1, Rat(1))
                                .subst(Var::s2, Rat(1));
        std::vector<Int> out;
        for (int n = 0; n < count; ++n) out.push_back(coeff_int(g, n, Var::z2, 0));
        return out;
    }
    if (id == "A004148") {
        // a(0) = 1; a(n) = Motzkin paths of length n-1 with no valleys,
        // equivalently uneven bicolored Motzkin paths of weight n-1: F(z^2, z).
        TruncatedSeries f = gf_catalog(GfName::PEAKLESS, std::max(0, count - 2));
        std::vector<Int> out{1};
        for (int n = 0; static_cast<int>(out.size()) < count; ++n)
            out.push_back(coeff_int(f, n, Var::z2, 0));
        return out;
    }
    if (id == "A005817")  // uncolored quarter-plane walks ending on the x-axis
        return walk_sequence(count, Endpoint::OnXAxis, false, 1);
    if (id == "A005558")  // uncolored quarter-plane walks, arbitrary endpoint
        return walk_sequence(count, Endpoint::Any, false, 1);
    if (id == "A001246")  // colored walks of length 2n ending at the origin: Catalan^2
        return walk_sequence(count, Endpoint::Origin, true, 2);
    if (id == "A018224")  // colored walks of length n, arbitrary endpoint
        return walk_sequence(count, Endpoint::Any, true, 1);
    if (id == "A000891")  // colored walks of length 2n ending on the y-axis
        return walk_sequence(count, Endpoint::OnYAxis, true, 2);
    throw std::invalid_argument("oeis: no computed route for " + id);
}

SequenceCheck check_fixture(const OeisFixture& f, int min_terms) {
    SequenceCheck c;
    c.id = f.id;
    int count = static_cast<int>(f.terms.size());
    if (count < min_terms) {
        c.ok = false;
        c.detail = "fixture has only " + std::to_string(count) + " terms, need " +
                   std::to_string(min_terms);
        return c;
    }
    auto compare = [&](const std::vector<Int>& got) -> std::string {
        for (int i = 0; i < count; ++i)
            if (got[static_cast<size_t>(i)] != f.terms[static_cast<size_t>(i)]) {
                std::ostringstream os;
                os << "term " << i << ": computed " << got[static_cast<size_t>(i)]
                   << ", fixture " << f.terms[static_cast<size_t>(i)];
                return os.str();
            }
        return "";
    };
    c.compared = count;
    std::string err = compare(computed_prefix(f.id, count));
    if (err.empty()) {
        c.ok = true;
        return c;
    }
    if (f.id == "A298645") {
        // This id shares its triangle with A341445; conventions for the
        // flattening differ between sources, so also accept the variant that
        // keeps the structurally-zero k=0 column.
        std::vector<Int> alt = flatten_rows(count, 1, [](int n) {
            return histogram_row(exact_distribution(DistClass::DyckDs, n), 0, n);
        });
        if (compare(alt).empty()) {
            c.ok = true;
            c.detail = "matched with the k=0 column included";
            return c;
        }
    }
    c.ok = false;
    c.detail = err;
    return c;
}

}  // namespace symmetria
