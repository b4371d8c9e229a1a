// Command-line front end: systole candidate tables, margin sweeps,
// the Fuchsian brute-force oracle, and SVG figures.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypsys/common.hpp"
#include "hypsys/fuchsian.hpp"
#include "hypsys/models.hpp"
#include "hypsys/report.hpp"
#include "hypsys/svg.hpp"
#include "hypsys/verifier.hpp"

namespace {

using hypsys::models::ModelKind;

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Config {
    double guard_band = hypsys::verifier::kDefaultGuard;
    std::size_t max_elements = 10'000'000;
    int genus_cap = 1'000'000;
};

Config load_config(const std::string& path) {
    Config cfg;
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "guard_band") cfg.guard_band = std::stod(val);
        else if (key == "max_elements") cfg.max_elements = std::stoull(val);
        else if (key == "genus_cap") cfg.genus_cap = std::stoi(val);
        else throw CLI::ValidationError("--config", "unknown key " + key);
    }
    return cfg;
}

std::pair<int, int> parse_genus_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int g = std::stoi(s);
            return {g, g};
        }
        const int lo = std::stoi(s.substr(0, dots));
        const int hi = std::stoi(s.substr(dots + 2));
        if (lo < 2 || hi < lo) throw std::invalid_argument("bad range");
        return {lo, hi};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--genus", "expected N or A..B with 2 <= A <= B");
    }
}

std::vector<ModelKind> parse_models(const std::vector<std::string>& names) {
    std::vector<ModelKind> kinds;
    auto add = [&](ModelKind k) {
        for (const ModelKind existing : kinds)
            if (existing == k) return;
        kinds.push_back(k);
    };
    for (const std::string& s : names) {
        if (s == "all") {
            add(ModelKind::P1);
            add(ModelKind::P2);
            add(ModelKind::P2Star);
        } else if (s == "p1") {
            add(ModelKind::P1);
        } else if (s == "p2") {
            add(ModelKind::P2);
        } else if (s == "p2star") {
            add(ModelKind::P2Star);
        } else {
            throw CLI::ValidationError("--model", "unknown model " + s);
        }
    }
    if (kinds.empty()) kinds = {ModelKind::P1, ModelKind::P2, ModelKind::P2Star};
    return kinds;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

// ---- table ---------------------------------------------------------------

int run_table(const std::vector<std::string>& model_names, const std::string& genus,
              bool as_json, bool as_csv, bool deterministic,
              const std::string& out_path) {
    const auto [lo, hi] = parse_genus_range(genus);
    const auto kinds = parse_models(model_names);
    struct Row {
        ModelKind kind;
        int genus;
        double systole;
        bool proven;
    };
    std::vector<Row> rows;
    for (const ModelKind k : kinds)
        for (int g = lo; g <= hi; ++g) {
            const int proven_from = k == ModelKind::P1 ? 4 : 7;
            rows.push_back({k, g, hypsys::models::candidate_systole(k, g),
                            g >= proven_from});
        }
    std::ostringstream out;
    if (as_json) {
        nlohmann::ordered_json j;
        j["version"] = hypsys::kVersion;
        j["command"] = "table";
        j["params"] = {{"genus", genus}};
        if (!deterministic) j["timestamp"] = hypsys::report::iso_timestamp_utc();
        auto recs = nlohmann::ordered_json::array();
        for (const Row& r : rows)
            recs.push_back({{"model", hypsys::models::name(r.kind)},
                            {"genus", r.genus},
                            {"systole", r.systole},
                            {"status", r.proven ? "PROVEN" : "CANDIDATE"}});
        j["records"] = recs;
        out << j.dump(2) << '\n';
    } else if (as_csv) {
        out << "model,genus,systole,status\n";
        for (const Row& r : rows)
            out << hypsys::models::name(r.kind) << ',' << r.genus << ','
                << hypsys::report::format_double(r.systole) << ','
                << (r.proven ? "PROVEN" : "CANDIDATE") << '\n';
    } else {
        out << "model   genus  systole      status\n";
        char buf[96];
        for (const Row& r : rows) {
            std::snprintf(buf, sizeof buf, "%-7s %5d  %.8f  %s\n",
                          hypsys::models::name(r.kind), r.genus, r.systole,
                          r.proven ? "PROVEN" : "CANDIDATE");
            out << buf;
        }
    }
    write_output(out.str(), out_path);
    return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int run_verify(bool all, std::vector<std::string> check_names,
               const std::vector<std::string>& model_names, const std::string& genus,
               double guard, bool guard_set, const std::string& config_path,
               bool as_json, bool as_csv, bool deterministic,
               const std::string& out_path) {
    namespace vf = hypsys::verifier;
    const Config cfg = load_config(config_path);
    if (!guard_set) guard = cfg.guard_band;
    const auto [lo, hi] = parse_genus_range(genus);
    if (hi > cfg.genus_cap)
        throw CLI::ValidationError("--genus", "range exceeds configured genus cap");
    std::vector<vf::CheckId> checks;
    if (all || check_names.empty()) {
        checks = vf::all_checks();
    } else {
        for (const std::string& s : check_names) {
            const auto c = vf::check_from_cli_name(s);
            if (!c) throw CLI::ValidationError("--check", "unknown check " + s);
            checks.push_back(*c);
        }
    }
    const auto kinds = parse_models(model_names);

    hypsys::report::VerifyReport rep;
    rep.version = hypsys::kVersion;
    rep.command = "verify";
    rep.params = {{"genus", genus}, {"guard_band", hypsys::report::format_double(guard)}};
    if (!deterministic) rep.timestamp = hypsys::report::iso_timestamp_utc();
    std::vector<vf::SweepSummary> summaries;
    bool ok = true;
    for (const ModelKind k : kinds) {
        const vf::SweepReport sr = vf::sweep(checks, k, lo, hi, guard);
        ok = ok && sr.all_pass;
        rep.records.insert(rep.records.end(), sr.records.begin(), sr.records.end());
        summaries.insert(summaries.end(), sr.summaries.begin(), sr.summaries.end());
    }

    std::ostringstream out;
    if (as_json) {
        out << hypsys::report::to_json(rep).dump(2) << '\n';
    } else if (as_csv) {
        out << hypsys::report::to_csv(rep);
    } else {
        out << hypsys::report::human_verify(rep, summaries);
        out << (ok ? "RESULT: all asserted margins pass\n"
                   : "RESULT: assertion failures present\n");
    }
    write_output(out.str(), out_path);
    return ok ? kExitOk : kExitAssertion;
}

// ---- oracle ---------------------------------------------------------------

int run_oracle(const std::string& model_name, int genus, double bound_slack,
               std::size_t max_elements, bool as_json, bool deterministic,
               const std::string& config_path, const std::string& out_path) {
    namespace fc = hypsys::fuchsian;
    const Config cfg = load_config(config_path);
    if (max_elements == 0) max_elements = cfg.max_elements;
    ModelKind kind;
    if (model_name == "p1") kind = ModelKind::P1;
    else if (model_name == "p2") kind = ModelKind::P2;
    else
        throw CLI::ValidationError(
            "--model", "oracle runs on p1 or p2 (the dual domain shares p2's group)");
    const double candidate = hypsys::models::candidate_systole(kind, genus);
    const double circum = hypsys::acosh_clamped(
        hypsys::models::circumradius_check(hypsys::models::angles(kind, genus)));
    const double bound = candidate + 2.0 * circum + bound_slack;
    fc::EnumerationCaps caps{max_elements};
    const fc::OracleResult res = fc::oracle_systole(kind, genus, bound, caps);

    std::ostringstream out;
    if (as_json) {
        nlohmann::ordered_json j;
        j["version"] = hypsys::kVersion;
        j["command"] = "oracle";
        j["params"] = {{"model", model_name}, {"genus", genus}};
        if (!deterministic) j["timestamp"] = hypsys::report::iso_timestamp_utc();
        j["oracle_systole"] = res.systole;
        j["candidate_systole"] = res.candidate;
        j["abs_difference"] = std::fabs(res.systole - res.candidate);
        j["multiplicity"] = res.multiplicity;
        j["element_count"] = res.element_count;
        j["visited"] = res.visited;
        if (!deterministic) j["seconds"] = res.seconds;
        out << j.dump(2) << '\n';
    } else {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "oracle systole    %.12g\n"
                      "candidate         %.12g\n"
                      "abs difference    %.3g\n"
                      "multiplicity      %d\n"
                      "elements <= bound %zu (visited %zu)\n",
                      res.systole, res.candidate, std::fabs(res.systole - res.candidate),
                      res.multiplicity, res.element_count, res.visited);
        out << buf;
        if (!deterministic) {
            std::snprintf(buf, sizeof buf, "runtime           %.2fs\n", res.seconds);
            out << buf;
        }
    }
    write_output(out.str(), out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperbolic systole verification toolkit"};
    app.require_subcommand(1);

    // table
    auto* table = app.add_subcommand("table", "print systole candidates");
    std::vector<std::string> t_models;
    std::string t_genus, t_out;
    bool t_json = false, t_csv = false, t_det = false;
    table->add_option("--model", t_models, "p1, p2, p2star or all");
    table->add_option("--genus", t_genus, "genus N or range A..B")->required();
    auto* t_json_f = table->add_flag("--json", t_json);
    table->add_flag("--csv", t_csv)->excludes(t_json_f);
    table->add_flag("--deterministic", t_det, "omit timestamps");
    table->add_option("-o,--output", t_out, "write to file instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "run margin sweeps");
    std::vector<std::string> v_checks, v_models;
    std::string v_genus, v_out, v_config;
    bool v_all = false, v_json = false, v_csv = false, v_det = false;
    double v_guard = hypsys::verifier::kDefaultGuard;
    verify->add_flag("--all", v_all, "run every check");
    verify->add_option("--check", v_checks, "check name (repeatable)");
    verify->add_option("--model", v_models, "p1, p2, p2star or all");
    verify->add_option("--genus", v_genus, "genus N or range A..B")->required();
    auto* guard_opt =
        verify->add_option("--guard-band", v_guard, "indeterminacy band (default 1e-9)");
    verify->add_option("--config", v_config, "key=value config file");
    auto* v_json_f = verify->add_flag("--json", v_json);
    verify->add_flag("--csv", v_csv)->excludes(v_json_f);
    verify->add_flag("--deterministic", v_det, "omit timestamps");
    verify->add_option("-o,--output", v_out, "write to file instead of stdout");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force systole search");
    std::string o_model, o_out, o_config;
    int o_genus = 0;
    double o_slack = 0.5;
    std::size_t o_max = 0;
    bool o_json = false, o_det = false;
    oracle->add_option("--model", o_model, "p1 or p2")->required();
    oracle->add_option("--genus", o_genus, "genus")->required()->check(CLI::Range(2, 64));
    oracle->add_option("--bound-slack", o_slack, "extra displacement bound slack");
    oracle->add_option("--max-elements", o_max, "enumeration cap (default 10^7)");
    oracle->add_option("--config", o_config, "key=value config file");
    oracle->add_flag("--json", o_json);
    oracle->add_flag("--deterministic", o_det, "omit timestamps and runtime");
    oracle->add_option("-o,--output", o_out, "write to file instead of stdout");

    // figure
    auto* figure = app.add_subcommand("figure", "emit an SVG figure");
    std::string f_model, f_id, f_out;
    int f_genus = 0;
    figure->add_option("--model", f_model, "p1, p2 or p2star")->required();
    figure->add_option("--genus", f_genus, "genus")->required()->check(CLI::Range(2, 64));
    figure->add_option("--id", f_id, "polygon or ball")
        ->required()
        ->check(CLI::IsMember({"polygon", "ball"}));
    figure->add_option("-o,--output", f_out, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (table->parsed())
            return run_table(t_models, t_genus, t_json, t_csv, t_det, t_out);
        if (verify->parsed())
            return run_verify(v_all, v_checks, v_models, v_genus, v_guard,
                              guard_opt->count() > 0, v_config, v_json, v_csv, v_det,
                              v_out);
        if (oracle->parsed())
            return run_oracle(o_model, o_genus, o_slack, o_max, o_json, o_det, o_config,
                              o_out);
        if (figure->parsed()) {
            const auto kinds = parse_models({f_model});
            if (kinds.size() != 1)
                throw CLI::ValidationError("--model", "one model required");
            if (f_id == "polygon")
                hypsys::svg::write_polygon_figure(kinds[0], f_genus, f_out);
            else
                hypsys::svg::write_ball_figure(kinds[0], f_genus, f_out);
            return kExitOk;
        }
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const hypsys::resource_error& e) {
        std::cerr << "resource error: " << e.what()
                  << " (raise --max-elements or lower the genus)\n";
        return kExitResource;
    } catch (const hypsys::inconclusive_error& e) {
        std::cerr << "inconclusive: " << e.what()
                  << " (raise --bound-slack)\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitAssertion;
    }
    return kExitUsage;
}
