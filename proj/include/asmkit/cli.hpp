#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "asm.hpp"
#include "formulas.hpp"
#include "refined.hpp"
#include "suite.hpp"

namespace asmkit::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema = "asmkit/1";

enum class Exit { ok = 0, verify_failed = 1, invalid_config = 2, resource_cap = 3 };

enum class Format { json, csv, text };

struct RunConfig {
    std::string command;
    std::optional<AsmClass> cls;
    std::optional<Boundary> boundary;
    Statistic statistic = Statistic::first_column;
    int n = 0;
    int max_n = 0;
    std::optional<std::string> x;
    std::optional<std::string> y;
    std::optional<std::string> u;
    std::string a = "zeta6";
    std::optional<std::string> b;
    std::uint64_t seed = 42;
    int samples = 20;
    Format format = Format::json;
    std::string cache_dir;
    int threads = 1;
    Suite suite = Suite::all;
};

/// Bad user input; maps to exit code 2.
class config_error : public std::invalid_argument {
public:
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {

inline std::string count_str(std::uint64_t c) { return std::to_string(c); }

inline Json poly_json(const IntPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    if (arr.empty()) arr.push_back("0");
    return arr;
}

inline IntPoly poly_from_json(const Json& j) {
    std::vector<BigInt> c;
    for (const auto& v : j) c.emplace_back(v.get<std::string>());
    return IntPoly(std::move(c));
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

inline std::vector<BigRational> parse_list(const std::string& text) {
    std::vector<BigRational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw config_error("empty parameter list");
    return out;
}

/// One JSON document per key under the cache directory; disabled when dir is empty.
class Cache {
public:
    explicit Cache(std::string dir) : dir_(std::move(dir)) {}

    template <class Compute>
    Json get(const std::string& command, const std::string& cls, int n, const std::string& statistic,
             Compute&& compute) {
        Json key = {{"schema", schema}, {"command", command}, {"class", cls}, {"n", n}, {"statistic", statistic}};
        if (dir_.empty()) return compute();
        namespace fs = std::filesystem;
        const fs::path file = fs::path(dir_) / (command + "-" + cls + "-n" + std::to_string(n) + "-" + statistic + ".json");
        if (fs::exists(file)) {
            std::ifstream in(file);
            Json doc = Json::parse(in, nullptr, false);
            if (!doc.is_discarded() && doc.contains("key") && doc["key"] == key && doc.contains("value"))
                return doc["value"];
        }
        Json value = compute();
        std::error_code ec;
        fs::create_directories(dir_, ec);
        const fs::path tmp = file.string() + ".tmp";
        {
            std::ofstream out(tmp);
            out << Json{{"key", key}, {"value", value}}.dump() << "\n";
        }
        fs::rename(tmp, file, ec);
        return value;
    }

private:
    std::string dir_;
};

inline Json census_json(const Census& c) {
    Json rows = Json::array();
    for (const auto& [key, cnt] : c.entries()) rows.push_back({key[0], key[1], key[2], key[3], count_str(cnt)});
    return rows;
}

inline Json header(const RunConfig& cfg) {
    Json j;
    j["schema"] = schema;
    j["command"] = cfg.command;
    return j;
}

inline AsmClass require_class(const RunConfig& cfg) {
    if (!cfg.cls) throw config_error("--class is required");
    return *cfg.cls;
}

inline void require_n(const RunConfig& cfg) {
    if (cfg.n < 1) throw config_error("--n must be at least 1");
}

// ---- enumerate -------------------------------------------------------------

inline Json run_enumerate(const RunConfig& cfg, Cache& cache, std::ostream& out) {
    const AsmClass cls = require_class(cfg);
    require_n(cfg);
    const Json rows = cache.get("enumerate", std::string(class_name(cls)), cfg.n, "all",
                                [&] { return census_json(census(cls, cfg.n, cfg.threads)); });
    // by_k[k][l]
    std::vector<std::vector<BigInt>> by_kl;
    BigInt total = 0;
    for (const auto& r : rows) {
        const auto k = r[2].get<std::size_t>(), l = r[3].get<std::size_t>();
        const BigInt c(r[4].get<std::string>());
        if (by_kl.size() <= k) by_kl.resize(k + 1);
        if (by_kl[k].size() <= l) by_kl[k].resize(l + 1, BigInt(0));
        by_kl[k][l] += c;
        total += c;
    }
    std::optional<BigRational> weighted;
    if (cfg.x || cfg.y) {
        const BigRational x = cfg.x ? parse_rational(*cfg.x) : BigRational(1);
        const BigRational y = cfg.y ? parse_rational(*cfg.y) : BigRational(1);
        BigRational w(0);
        for (std::size_t k = 0; k < by_kl.size(); ++k)
            for (std::size_t l = 0; l < by_kl[k].size(); ++l)
                w += BigRational(by_kl[k][l]) * power(x, static_cast<long>(k)) * power(y, static_cast<long>(l));
        weighted = w;
    }
    Json j = header(cfg);
    j["class"] = class_name(cls);
    j["n"] = cfg.n;
    j["rows"] = class_rows(cls, cfg.n);
    j["cols"] = class_cols(cls, cfg.n);
    j["total"] = total.get_str();
    Json bk = Json::array();
    for (const auto& row : by_kl) {
        if (cls == AsmClass::uasm) {
            Json r = Json::array();
            for (const auto& c : row) r.push_back(c.get_str());
            bk.push_back(r);
        } else {
            bk.push_back(row.empty() ? std::string("0") : row[0].get_str());
        }
    }
    j[cls == AsmClass::uasm ? "by_k_l" : "by_k"] = bk;
    if (weighted) j["weighted_total"] = weighted->get_str();

    if (cfg.format == Format::csv) {
        out << (cls == AsmClass::uasm ? "k,l,count\n" : "k,count\n");
        for (std::size_t k = 0; k < by_kl.size(); ++k)
            for (std::size_t l = 0; l < by_kl[k].size(); ++l)
                if (cls == AsmClass::uasm)
                    out << k << "," << l << "," << by_kl[k][l].get_str() << "\n";
                else
                    out << k << "," << by_kl[k][l].get_str() << "\n";
    } else if (cfg.format == Format::text) {
        out << class_name(cls) << " n=" << cfg.n << " (" << class_rows(cls, cfg.n) << "x" << class_cols(cls, cfg.n)
            << "): " << total.get_str() << " matrices\n";
        if (weighted) out << "weighted total: " << weighted->get_str() << "\n";
    }
    return j;
}

// ---- refine ----------------------------------------------------------------

inline Json run_refine(const RunConfig& cfg, Cache& cache, std::ostream& out) {
    const AsmClass cls = require_class(cfg);
    require_n(cfg);
    const std::string stat(statistic_name(cfg.statistic));
    const Json polys = cache.get("refine", std::string(class_name(cls)), cfg.n, stat, [&] {
        Json arr = Json::array();
        for (const auto& p : refined_counts(cls, cfg.n, cfg.statistic, cfg.threads).counts) arr.push_back(poly_json(p));
        return arr;
    });
    std::vector<IntPoly> counts;
    for (const auto& p : polys) counts.push_back(poly_from_json(p));

    Json j = header(cfg);
    j["class"] = class_name(cls);
    j["n"] = cfg.n;
    j["statistic"] = stat;
    Json arr = Json::array();
    std::vector<std::string> flat;
    if (cfg.y) {
        const BigRational y = parse_rational(*cfg.y);
        j["y"] = y.get_str();
        for (const auto& p : counts) flat.push_back(p.evaluate(y).get_str());
    } else if (cls != AsmClass::uasm) {
        for (const auto& p : counts) flat.push_back(p.coefficient(0).get_str());
    }
    if (!flat.empty() || counts.empty()) {
        for (const auto& s : flat) arr.push_back(s);
    } else {
        for (const auto& p : counts) arr.push_back(poly_json(p));
    }
    j["counts"] = arr;

    if (cfg.format == Format::csv) {
        out << (flat.empty() ? "r,coefficients\n" : "r,count\n");
        for (std::size_t r = 0; r < counts.size(); ++r) {
            out << r + 1 << ",";
            if (!flat.empty()) {
                out << flat[r];
            } else {
                const auto& cs = counts[r].coeffs();
                for (std::size_t i = 0; i < cs.size(); ++i) out << (i ? ";" : "") << cs[i].get_str();
                if (cs.empty()) out << "0";
            }
            out << "\n";
        }
    } else if (cfg.format == Format::text) {
        out << class_name(cls) << " n=" << cfg.n << " by " << stat << ":";
        for (std::size_t r = 0; r < counts.size(); ++r) out << " " << (flat.empty() ? to_string(counts[r]) : flat[r]);
        out << "\n";
    }
    return j;
}

// ---- table -----------------------------------------------------------------

inline std::optional<BigInt> formula_total(AsmClass cls, int n) {
    switch (cls) {
        case AsmClass::asm_: return asm_total(n);
        case AsmClass::vsasm: return av_total(n);
        case AsmClass::osasm: return av_total(n);  // equal refined counts imply equal totals
        case AsmClass::uasm: return au_first(n).evaluate(BigInt(1));
    }
    return std::nullopt;
}

inline Json run_table(const RunConfig& cfg, Cache& cache, std::ostream& out, bool& mismatch) {
    const AsmClass cls = require_class(cfg);
    const int hi = cfg.max_n > 0 ? cfg.max_n : (cfg.n > 0 ? cfg.n : default_cap(cls));
    Json j = header(cfg);
    j["class"] = class_name(cls);
    Json rows = Json::array();
    if (cfg.format == Format::csv) out << "n,rows,cols,enumerated,formula\n";
    for (int n = 1; n <= hi; ++n) {
        const Json cen = cache.get("enumerate", std::string(class_name(cls)), n, "all",
                                   [&] { return census_json(census(cls, n, cfg.threads)); });
        BigInt total = 0;
        for (const auto& r : cen) total += BigInt(r[4].get<std::string>());
        const auto f = formula_total(cls, n);
        if (f && *f != total) mismatch = true;
        rows.push_back({{"n", n}, {"rows", class_rows(cls, n)}, {"cols", class_cols(cls, n)},
                        {"enumerated", total.get_str()}, {"formula", f ? f->get_str() : ""}});
        if (cfg.format == Format::csv)
            out << n << "," << class_rows(cls, n) << "," << class_cols(cls, n) << "," << total.get_str() << ","
                << (f ? f->get_str() : "") << "\n";
        else if (cfg.format == Format::text)
            out << class_name(cls) << " n=" << n << ": " << total.get_str() << (f && *f == total ? "" : " (formula mismatch)")
                << "\n";
    }
    j["rows"] = rows;
    return j;
}

// ---- partition -------------------------------------------------------------

template <ExactField F>
std::vector<F> broadcast(const std::optional<std::string>& text, std::size_t len) {
    if (!text) return std::vector<F>(len, F(1));
    const auto vals = parse_list(*text);
    if (vals.size() == 1) return std::vector<F>(len, F(vals[0]));
    if (vals.size() != len) throw config_error("expected 1 or " + std::to_string(len) + " spectral parameters");
    return std::vector<F>(vals.begin(), vals.end());
}

template <ExactField F>
Json partition_values(const RunConfig& cfg, Boundary bd, const F& a, bool at_zeta6, bool& agree) {
    const std::size_t n = static_cast<std::size_t>(cfg.n);
    SpectralAssignment<F> p{a, std::nullopt, {}, {}, {}};
    if (cfg.b) p.b = F(parse_rational(*cfg.b));
    if (bd == Boundary::os) {
        p.u = broadcast<F>(cfg.u, 2 * n);
    } else {
        p.x = broadcast<F>(cfg.x, n);
        p.y = broadcast<F>(cfg.y, n);
    }
    if (bd == Boundary::uturn && !p.b) throw config_error("--b is required for the uturn boundary");
    const F z = partition_sum(bd, p);
    Json formulas;
    auto record = [&](const char* name, auto&& eval) {
        try {
            const F v = eval();
            formulas[name] = to_string(v);
            agree = agree && v == z;
        } catch (const division_by_zero&) {
            formulas[name] = nullptr;
        }
    };
    switch (bd) {
        case Boundary::dwbc:
            record("izergin_korepin", [&] { return z_ik(p); });
            if constexpr (std::is_same_v<F, Cyclo6>)
                if (at_zeta6) record("zeta6_determinant", [&] { return z_p(p.unified()); });
            break;
        case Boundary::uturn:
            record("tsuchiya_determinant", [&] { return z_u_det(p); });
            if constexpr (std::is_same_v<F, Cyclo6>)
                if (at_zeta6) record("zeta6_determinant", [&] { return F(z_u_p(p.unified()) * u_turn_divisor(p)); });
            break;
        case Boundary::os:
            record("pfaffian", [&] { return z_o_pf(p.u, a); });
            if constexpr (std::is_same_v<F, Cyclo6>)
                if (at_zeta6) record("zeta6_determinant", [&] { return z_o_p(p.u); });
            break;
    }
    Json j;
    j["statesum"] = to_string(z);
    j["formulas"] = formulas;
    return j;
}

inline Json run_partition(const RunConfig& cfg, std::ostream& out, bool& mismatch) {
    if (!cfg.boundary) throw config_error("--boundary is required");
    require_n(cfg);
    const Boundary bd = *cfg.boundary;
    bool agree = true;
    Json vals;
    if (cfg.a == "zeta6") {
        vals = partition_values<Cyclo6>(cfg, bd, Cyclo6::zeta6(), true, agree);
    } else {
        vals = partition_values<BigRational>(cfg, bd, parse_rational(cfg.a), false, agree);
    }
    mismatch = !agree;
    Json j = header(cfg);
    j["boundary"] = boundary_name(bd);
    j["n"] = cfg.n;
    j["a"] = cfg.a;
    if (cfg.b) j["b"] = *cfg.b;
    j["states"] = std::to_string(count_states(IceLayout::make(bd, cfg.n)));
    j["statesum"] = vals["statesum"];
    j["formulas"] = vals["formulas"];
    j["agree"] = agree;
    if (cfg.format == Format::csv) {
        out << "quantity,value\nstates," << j["states"].get<std::string>() << "\nstatesum,"
            << csv_quote(j["statesum"].get<std::string>()) << "\n";
        for (const auto& [k, v] : j["formulas"].items())
            out << k << "," << (v.is_null() ? std::string("pole") : csv_quote(v.get<std::string>())) << "\n";
    } else if (cfg.format == Format::text) {
        out << boundary_name(bd) << " n=" << cfg.n << " a=" << cfg.a << ": " << j["states"].get<std::string>()
            << " states, Z = " << j["statesum"].get<std::string>() << (agree ? "" : " (formula mismatch)") << "\n";
    }
    return j;
}

// ---- verify ----------------------------------------------------------------

inline Json run_verify(const RunConfig& cfg, std::ostream& out, bool& failed) {
    if (cfg.samples < 1) throw config_error("--samples must be positive");
    const auto reports = run_suite(cfg.suite, cfg.max_n, cfg.samples, cfg.seed, cfg.threads);
    Json arr = Json::array();
    bool all = true;
    for (const auto& r : reports) {
        all = all && r.pass;
        arr.push_back({{"tag", r.tag}, {"n_min", r.n_min}, {"n_max", r.n_max}, {"samples", r.samples},
                       {"verdict", r.pass ? "pass" : "fail"}, {"witness", r.witness}, {"note", r.note}});
    }
    failed = !all;
    Json j = header(cfg);
    static const char* suite_names[] = {"identities", "partition", "functions", "all"};
    j["suite"] = suite_names[static_cast<int>(cfg.suite)];
    j["max_n"] = cfg.max_n;
    j["seed"] = std::to_string(cfg.seed);
    j["samples"] = cfg.samples;
    j["pass"] = all;
    j["reports"] = arr;
    if (cfg.format == Format::csv) {
        out << "tag,n_min,n_max,samples,verdict,witness,note\n";
        for (const auto& r : reports)
            out << r.tag << "," << r.n_min << "," << r.n_max << "," << r.samples << "," << (r.pass ? "pass" : "fail") << ","
                << csv_quote(r.witness) << "," << csv_quote(r.note) << "\n";
    } else if (cfg.format == Format::text) {
        for (const auto& r : reports)
            out << (r.pass ? "PASS " : "FAIL ") << r.tag << " n=" << r.n_min << ".." << r.n_max
                << (r.witness.empty() ? "" : " " + r.witness) << "\n";
        out << (all ? "all checks passed\n" : "some checks failed\n");
    }
    return j;
}

}  // namespace detail

/// Executes a parsed configuration, writing the report to `out`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        detail::Cache cache(cfg.cache_dir);
        bool bad = false;
        Json j;
        if (cfg.command == "enumerate") {
            j = detail::run_enumerate(cfg, cache, out);
        } else if (cfg.command == "refine") {
            j = detail::run_refine(cfg, cache, out);
        } else if (cfg.command == "table") {
            j = detail::run_table(cfg, cache, out, bad);
        } else if (cfg.command == "partition") {
            j = detail::run_partition(cfg, out, bad);
        } else if (cfg.command == "verify") {
            j = detail::run_verify(cfg, out, bad);
        } else {
            throw config_error("unknown command: " + cfg.command);
        }
        if (cfg.format == Format::json) out << j.dump(2) << "\n";
        return static_cast<int>(bad ? Exit::verify_failed : Exit::ok);
    } catch (const resource_limit& e) {
        err << "resource limit: " << e.what() << "\n";
        return static_cast<int>(Exit::resource_cap);
    } catch (const std::invalid_argument& e) {  // config_error, contract_violation
        err << "invalid configuration: " << e.what() << "\n";
        return static_cast<int>(Exit::invalid_config);
    } catch (const division_by_zero& e) {
        err << "invalid configuration: " << e.what() << "\n";
        return static_cast<int>(Exit::invalid_config);
    }
}

/// Parses argv with CLI11 and runs the selected command.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumeration of alternating-sign matrices and six-vertex partition functions", "asmkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string cls, boundary, statistic = "first-column", format = "json", suite = "all";
    const char* env_cache = std::getenv("ASMKIT_CACHE_DIR");
    cfg.cache_dir = env_cache ? env_cache : "";

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1, 256));
        sub->add_option("--cache-dir", cfg.cache_dir, "cache directory (default $ASMKIT_CACHE_DIR)");
    };
    auto class_opts = [&](CLI::App* sub) {
        sub->add_option("--class", cls, "asm, vsasm, osasm or uasm")->required()
            ->check(CLI::IsMember({"asm", "vsasm", "osasm", "uasm"}));
    };

    CLI::App* en = app.add_subcommand("enumerate", "count the members of a class");
    class_opts(en);
    en->add_option("--n", cfg.n, "class parameter n")->required();
    en->add_option("--x", cfg.x, "weight per -1 entry");
    en->add_option("--y", cfg.y, "weight per upward U-turn (uasm)");
    common(en);

    CLI::App* re = app.add_subcommand("refine", "refined counts by the row of the 1 in a boundary column");
    class_opts(re);
    re->add_option("--n", cfg.n, "class parameter n")->required();
    re->add_option("--statistic", statistic, "first-column or last-column")
        ->check(CLI::IsMember({"first-column", "last-column"}));
    re->add_option("--y", cfg.y, "evaluate the y-polynomials at this rational");
    common(re);

    CLI::App* ta = app.add_subcommand("table", "enumerated and closed-form totals for n = 1..max-n");
    class_opts(ta);
    ta->add_option("--max-n", cfg.max_n, "largest n (default: enumeration cap)");
    common(ta);

    CLI::App* pa = app.add_subcommand("partition", "partition function: state sum and closed formulas");
    pa->add_option("--boundary", boundary, "dwbc, uturn or os")->required()
        ->check(CLI::IsMember({"dwbc", "uturn", "os"}));
    pa->add_option("--n", cfg.n, "size")->required();
    pa->add_option("--a", cfg.a, "zeta6 or a rational");
    pa->add_option("--b", cfg.b, "U-turn parameter b");
    pa->add_option("--x", cfg.x, "x spectral parameters (one value or a comma list)");
    pa->add_option("--y", cfg.y, "y spectral parameters (one value or a comma list)");
    pa->add_option("--u", cfg.u, "OS spectral parameters (one value or a list of 2n)");
    common(pa);

    CLI::App* ve = app.add_subcommand("verify", "run a verification suite");
    ve->add_option("--suite", suite, "identities, partition, functions or all")
        ->check(CLI::IsMember({"identities", "partition", "functions", "all"}));
    ve->add_option("--max-n", cfg.max_n, "cap on n for every check (default: per-check caps)");
    ve->add_option("--seed", cfg.seed, "64-bit seed");
    ve->add_option("--samples", cfg.samples, "sample points per check and size");
    common(ve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "invalid configuration: " << e.what() << "\n";
        return static_cast<int>(Exit::invalid_config);
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (!cls.empty()) cfg.cls = parse_class(cls);
    if (!boundary.empty()) cfg.boundary = parse_boundary(boundary);
    cfg.statistic = statistic == "last-column" ? Statistic::last_column : Statistic::first_column;
    cfg.format = format == "csv" ? Format::csv : (format == "text" ? Format::text : Format::json);
    cfg.suite = *parse_suite(suite);
    if (cfg.a != "zeta6") {
        try {
            parse_rational(cfg.a);
        } catch (const std::exception& e) {
            err << "invalid configuration: --a must be zeta6 or a rational\n";
            return static_cast<int>(Exit::invalid_config);
        }
    }
    return run(cfg, out, err);
}

}  // namespace asmkit::cli
