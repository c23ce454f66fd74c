// Command-line front end: table reproduction (fast path cross-checked
// against exhaustive enumeration), series expansion, verification suites,
// and exact distributions with optional limit-law comparison.
//
// Exit codes: 0 success, 1 verification/table mismatch, 2 usage error,
// 3 enumeration resource cap exceeded.

#include "symmetria/distributions.hpp"
#include "symmetria/gf_catalog.hpp"
#include "symmetria/numeric.hpp"
#include "symmetria/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace symmetria;
using nlohmann::json;

std::string int_str(const Int& v) { return v.str(); }
std::string rat_str(const Rat& v) { return v.str(); }

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

struct TableSpec {
    DistClass cls;
    int default_max_n;
    int k_lo;   // first statistic column
    int n_lo;   // first row
};

TableSpec table_spec(const std::string& name) {
    if (name == "grand_ds") return {DistClass::GrandDyckDs, 6, 0, 1};
    if (name == "grand_sv") return {DistClass::GrandDyckSv, 6, 1, 1};
    if (name == "dyck_ds") return {DistClass::DyckDs, 7, 1, 1};
    if (name == "dyck_sv") return {DistClass::DyckSv, 7, 1, 1};
    if (name == "partitions_psp") return {DistClass::SpDs, 8, 0, 2};
    throw std::invalid_argument("unknown table: " + name);
}

std::vector<Int> dense_row(const Histogram& h, int k_lo, long long k_hi) {
    std::vector<Int> row;
    for (long long k = k_lo; k <= k_hi; ++k) {
        auto it = h.counts.find(k);
        row.push_back(it == h.counts.end() ? Int(0) : it->second);
    }
    return row;
}

int cmd_table(const std::string& name, int max_n, bool as_json) {
    TableSpec spec = table_spec(name);
    if (max_n <= 0) max_n = spec.default_max_n;

    bool all_ok = true;
    json rows = json::array();
    std::ostringstream text;
    text << "table " << name << " (rows n = " << spec.n_lo << ".." << max_n
         << ", columns k = " << spec.k_lo << "..): fast path vs enumeration\n";
    for (int n = spec.n_lo; n <= max_n; ++n) {
        Histogram fast = exact_distribution(spec.cls, n);
        Histogram slow = exact_distribution_oracle(spec.cls, n);
        long long k_hi = spec.k_lo - 1;
        for (const auto& [k, c] : fast.counts)
            if (c != 0) k_hi = std::max(k_hi, k);
        for (const auto& [k, c] : slow.counts)
            if (c != 0) k_hi = std::max(k_hi, k);
        auto frow = dense_row(fast, spec.k_lo, k_hi);
        auto srow = dense_row(slow, spec.k_lo, k_hi);
        bool ok = frow == srow;
        all_ok = all_ok && ok;

        text << "  n=" << n << ":";
        json jrow;
        jrow["n"] = n;
        jrow["k_lo"] = spec.k_lo;
        jrow["counts"] = json::array();
        for (const auto& c : frow) {
            text << " " << int_str(c);
            jrow["counts"].push_back(int_str(c));
        }
        jrow["ok"] = ok;
        if (!ok) {
            text << "   MISMATCH, enumeration gives:";
            jrow["enumeration"] = json::array();
            for (const auto& c : srow) {
                text << " " << int_str(c);
                jrow["enumeration"].push_back(int_str(c));
            }
        }
        text << "\n";
        rows.push_back(jrow);
    }

    if (as_json) {
        json doc{{"table", name}, {"rows", rows}, {"ok", all_ok}};
        std::cout << doc.dump(2) << "\n";
    } else {
        text << (all_ok ? "both routes agree\n" : "routes disagree\n");
        std::cout << text.str();
    }
    return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

int cmd_series(const std::string& name, int order, bool as_json) {
    TruncatedSeries s = gf_catalog(parse_gf_name(name), order);
    if (as_json)
        std::cout << s.to_json() << "\n";
    else
        std::cout << name << " = " << s.pretty() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const std::string& suite, const VerifyOptions& opt, bool as_json) {
    auto results = run_verify(suite, opt);
    bool ok = true;
    for (const auto& s : results) ok = ok && s.ok();
    std::cout << (as_json ? verify_report_json(results) + "\n"
                          : verify_report_text(results));
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// distribution
// ---------------------------------------------------------------------------

LimitLaw resolve_law(const std::string& law_arg, DistClass cls) {
    std::string name = law_arg;
    std::optional<double> sigma;
    if (auto pos = law_arg.find(':'); pos != std::string::npos) {
        name = law_arg.substr(0, pos);
        sigma = std::stod(law_arg.substr(pos + 1));
    }
    if (sigma) return parse_law(name, *sigma);
    // No explicit sigma: use the class's reference parameter when the
    // requested law kind matches it.
    LimitLaw ref = reference_law(cls);
    LimitLaw named = parse_law(name, 1.0);
    if (named.kind != ref.kind)
        throw std::invalid_argument("law " + name + " has no default sigma for this class");
    return ref;
}

int cmd_distribution(const std::string& family, const std::string& stat, int n,
                     const std::string& law_arg, const std::string& csv_path, bool as_json) {
    if (n < 0) throw std::invalid_argument("--n is required (flag or config file)");
    DistClass cls = parse_dist_class(family, stat);
    Histogram h = exact_distribution(cls, n);

    json doc;
    doc["class"] = dist_class_name(cls);
    doc["n"] = n;
    doc["total"] = int_str(h.total());
    json counts = json::object();
    for (const auto& [k, c] : h.counts) counts[std::to_string(k)] = int_str(c);
    doc["counts"] = counts;

    std::ostringstream text;
    text << dist_class_name(cls) << " at n = " << n << " (" << int_str(h.total())
         << " objects)\n";
    for (const auto& [k, c] : h.counts) text << "  " << k << ": " << int_str(c) << "\n";

    if (h.total() != 0) {
        Moments m = histogram_moments(h);
        doc["mean"] = rat_str(m.mean);
        doc["variance"] = rat_str(m.variance);
        text << "mean = " << rat_str(m.mean) << ", variance = " << rat_str(m.variance) << "\n";
    }

    if (!law_arg.empty()) {
        LimitLaw law = resolve_law(law_arg, cls);
        LawDistance d = limit_law_distance(h, law);
        doc["law"] = {{"name", law.name()},
                      {"kolmogorov", d.kolmogorov},
                      {"max_density_error", d.max_density_error}};
        text << "vs " << law.name() << ": sup CDF distance " << d.kolmogorov
             << ", max pointwise law error " << d.max_density_error << "\n";
    }

    if (!csv_path.empty()) {
        if (csv_path == "-") {
            write_csv(h, std::cout);
        } else {
            std::ofstream out(csv_path);
            if (!out) throw std::invalid_argument("cannot open for writing: " + csv_path);
            write_csv(h, out);
            text << "wrote " << csv_path << "\n";
        }
    }

    if (as_json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text.str();
    return 0;
}

// ---------------------------------------------------------------------------
// config file: flat JSON object; command-line flags take precedence
// ---------------------------------------------------------------------------

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    json cfg = json::parse(in, nullptr, true, true);
    if (!cfg.is_object()) throw std::invalid_argument("config must be a JSON object");
    return cfg;
}

// Applies cfg[key] to `target` unless the option was given on the command
// line. For mutually exclusive flag pairs (--json/--pretty), giving either
// one on the command line suppresses the config value of both.
template <typename T>
void apply_cfg(const json& cfg, const CLI::App* sub, const std::string& flag,
               const std::string& key, T& target, const std::string& paired_flag = {}) {
    if (!cfg.contains(key)) return;
    for (const std::string& f : {flag, paired_flag}) {
        if (f.empty()) continue;
        const CLI::Option* opt = sub->get_option_no_throw(f);
        if (opt != nullptr && opt->count() > 0) return;
    }
    target = cfg.at(key).get<T>();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetria: symmetry statistics on lattice paths, partitions and bargraphs"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path,
                   "JSON config file; command-line flags take precedence");

    // table
    auto* tab = app.add_subcommand("table", "print a statistic table from both routes");
    std::string tab_name;
    int tab_max_n = 0;
    bool tab_json = false;
    tab->add_option("name", tab_name, "one of: grand_ds, grand_sv, dyck_ds, dyck_sv, partitions_psp")
        ->required();
    tab->add_option("--max-n", tab_max_n, "largest object size (default: the table's own)");
    tab->add_flag("--json", tab_json, "emit JSON instead of text");

    // series
    auto* ser = app.add_subcommand("series", "expand a catalogued generating function");
    std::string ser_name;
    int ser_order = 64;
    bool ser_json = false, ser_pretty = false;
    ser->add_option("name", ser_name, "series name, e.g. DS_GRAND (see README for the list)")
        ->required();
    ser->add_option("--order", ser_order, "truncation order (default 64)");
    auto* jopt = ser->add_flag("--json", ser_json, "canonical JSON serialization");
    ser->add_flag("--pretty", ser_pretty, "human-readable form (default)")->excludes(jopt);

    // verify
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string ver_suite;
    VerifyOptions ver_opt;
    bool ver_json = false;
    ver->add_option("suite", ver_suite,
                    "bijections, series_identities, feq, moments, limits, oeis, or all")
        ->required();
    ver->add_option("--order", ver_opt.order, "series truncation order (default 12)");
    ver->add_option("--max-n", ver_opt.max_n, "exhaustive-enumeration ceiling (default 8)");
    ver->add_option("--fixtures", ver_opt.fixture_dir,
                    "sequence fixture directory (default: bundled data/oeis)");
    ver->add_flag("--json", ver_json, "emit the JSON report");

    // distribution
    auto* dis = app.add_subcommand("distribution", "exact histogram of a statistic");
    std::string dis_family, dis_stat, dis_law, dis_csv;
    int dis_n = -1;
    bool dis_json = false;
    dis->add_option("family", dis_family,
                    "grand_dyck, dyck, square, min_square, sp, or unimodal_bargraph")
        ->required();
    dis->add_option("stat", dis_stat, "ds, sv, pho, hm, or dsh")->required();
    dis->add_option("--n", dis_n, "object size (required here or in the config file)");
    dis->add_option("--law", dis_law, "limit law to compare against: name[:sigma]");
    dis->add_option("--csv", dis_csv, "write the histogram as CSV to this path ('-' = stdout)");
    dis->add_flag("--json", dis_json, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) {
            json cfg = load_config(config_path);
            apply_cfg(cfg, tab, "--max-n", "max_n", tab_max_n);
            apply_cfg(cfg, tab, "--json", "json", tab_json);
            apply_cfg(cfg, ser, "--order", "order", ser_order);
            apply_cfg(cfg, ser, "--json", "json", ser_json, "--pretty");
            apply_cfg(cfg, ser, "--pretty", "pretty", ser_pretty, "--json");
            apply_cfg(cfg, ver, "--order", "order", ver_opt.order);
            apply_cfg(cfg, ver, "--max-n", "max_n", ver_opt.max_n);
            apply_cfg(cfg, ver, "--fixtures", "fixtures", ver_opt.fixture_dir);
            apply_cfg(cfg, ver, "--json", "json", ver_json);
            apply_cfg(cfg, dis, "--n", "n", dis_n);
            apply_cfg(cfg, dis, "--law", "law", dis_law);
            apply_cfg(cfg, dis, "--csv", "csv", dis_csv);
            apply_cfg(cfg, dis, "--json", "json", dis_json);
        }

        if (tab->parsed()) return cmd_table(tab_name, tab_max_n, tab_json);
        if (ser->parsed()) return cmd_series(ser_name, ser_order, ser_json);
        if (ver->parsed()) return cmd_verify(ver_suite, ver_opt, ver_json);
        if (dis->parsed())
            return cmd_distribution(dis_family, dis_stat, dis_n, dis_law, dis_csv, dis_json);
    } catch (const resource_limit_error& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
