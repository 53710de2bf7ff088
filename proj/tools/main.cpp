// binpath CLI: earliest/latest paths, first-connected vectors, BAT
// enumeration, region census, exact reliability, and the verification
// harness, over edge-list network files. Built entirely on the C API.

#include "binpath/binpath.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNoPath = 3;
constexpr const char* kFormatVersion = "1";

int exit_code_for(bp_status status) {
    switch (status) {
    case BP_OK: return kExitOk;
    case BP_NO_PATH: return kExitNoPath;
    default: return kExitInputError;
    }
}

int report_failure(bp_status status) {
    std::cerr << "error: " << bp_last_error() << "\n";
    return exit_code_for(status);
}

struct NetworkHandle {
    bp_network* net = nullptr;
    ~NetworkHandle() { bp_network_free(net); }
};

struct PathHandle {
    bp_path* path = nullptr;
    ~PathHandle() { bp_path_free(path); }
};

int open_network(const std::string& file, NetworkHandle& handle) {
    const bp_status status = bp_network_parse_file(file.c_str(), &handle.net);
    if (status != BP_OK) return report_failure(status);
    for (int i = 0; i < bp_network_warning_count(handle.net); ++i)
        std::cerr << "warning: " << bp_network_warning(handle.net, i) << "\n";
    return kExitOk;
}

ordered_json network_summary(const bp_network* net) {
    return {{"n", bp_network_node_count(net)},
            {"m", bp_network_arc_count(net)},
            {"source", bp_network_source(net)},
            {"sink", bp_network_sink(net)}};
}

void emit_envelope(const std::string& command, const ordered_json& network,
                   const ordered_json& result) {
    const ordered_json envelope = {
        {"command", command}, {"network", network}, {"result", result},
        {"version", kFormatVersion}};
    std::cout << envelope.dump(2) << "\n";
}

std::string join(const std::vector<int>& values, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

int run_extreme_path(const std::string& command, const std::string& file, bool json) {
    NetworkHandle net;
    if (int rc = open_network(file, net); rc != kExitOk) return rc;
    PathHandle path;
    const bp_status status = command == "earliest" ? bp_earliest_path(net.net, &path.path)
                                                   : bp_latest_path(net.net, &path.path);
    if (status != BP_OK) return report_failure(status);

    std::vector<int> nodes(bp_path_node_count(path.path));
    for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = bp_path_node(path.path, (int)i);
    std::vector<int> arcs(bp_path_arc_count(path.path));
    for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i] = bp_path_arc(path.path, (int)i);

    if (json) {
        emit_envelope(command, network_summary(net.net),
                      {{"nodes", nodes},
                       {"arcs", arcs},
                       {"vector", bp_path_vector(path.path)},
                       {"weight",
                        {{"decimal", bp_path_weight_decimal(path.path)},
                         {"binary", bp_path_weight_binary(path.path)}}}});
    } else {
        std::cout << "path: " << join(nodes, "-") << "\n"
                  << "arcs: " << join(arcs, " ") << "\n"
                  << "vector: " << bp_path_vector(path.path) << "\n"
                  << "weight: " << bp_path_weight_decimal(path.path) << "\n"
                  << "weight-binary: " << bp_path_weight_binary(path.path) << "\n";
    }
    return kExitOk;
}

int run_xfc(const std::string& file, const std::string& method, bool json) {
    NetworkHandle net;
    if (int rc = open_network(file, net); rc != kExitOk) return rc;
    const int m = bp_network_arc_count(net.net);
    std::vector<char> bits(static_cast<std::size_t>(m) + 1);
    const bool paper = method == "paper";
    const bp_status status = bp_find_xfc(net.net, paper ? 1 : 0, bits.data(), bits.size());
    if (status != BP_OK) return report_failure(status);

    std::vector<char> correct(static_cast<std::size_t>(m) + 1);
    bool diverges = false;
    if (paper) {
        if (bp_find_xfc(net.net, 0, correct.data(), correct.size()) != BP_OK)
            return report_failure(BP_ERR_INTERNAL);
        diverges = std::string(bits.data()) != std::string(correct.data());
    }

    if (json) {
        ordered_json result = {{"method", method}, {"vector", bits.data()}};
        if (paper) {
            result["correct_vector"] = correct.data();
            result["diverges"] = diverges;
        }
        emit_envelope("xfc", network_summary(net.net), result);
    } else {
        std::cout << "method: " << method << "\n"
                  << "vector: " << bits.data() << "\n";
        if (paper) {
            std::cout << "correct-vector: " << correct.data() << "\n"
                      << "diverges: " << (diverges ? "yes" : "no") << "\n";
        }
    }
    return kExitOk;
}

int run_enum(int k, const std::string& annotate_file, bool force) {
    if (k < 1) {
        std::cerr << "error: k must be at least 1\n";
        return kExitInputError;
    }
    if (k > 24 && !force) {
        std::cerr << "error: enumerating 2^" << k << " vectors exceeds the cap of 2^24"
                  << " (use --force to override)\n";
        return kExitInputError;
    }
    NetworkHandle net;
    if (!annotate_file.empty()) {
        if (int rc = open_network(annotate_file, net); rc != kExitOk) return rc;
        if (bp_network_arc_count(net.net) != k) {
            std::cerr << "error: network has " << bp_network_arc_count(net.net)
                      << " arcs but k is " << k << "\n";
            return kExitInputError;
        }
    }

    bp_bat_iter* iter = nullptr;
    if (bp_bat_iter_new(k, &iter) != BP_OK) return report_failure(BP_ERR_ARG);
    std::vector<char> value(static_cast<std::size_t>(k) / 3 + 4);
    const char* bits = nullptr;
    while (bp_bat_iter_next(iter, &bits)) {
        if (net.net) {
            int connected = 0;
            bp_connected(net.net, bits, &connected);
            bp_vector_value_decimal(bits, value.data(), value.size());
            std::cout << bits << " " << value.data() << " " << connected << "\n";
        } else {
            std::cout << bits << "\n";
        }
    }
    bp_bat_iter_free(iter);
    return kExitOk;
}

int run_regions(const std::string& file, bool force, bool json) {
    NetworkHandle net;
    if (int rc = open_network(file, net); rc != kExitOk) return rc;
    bp_region_report* report = nullptr;
    const bp_status status = bp_region_census(net.net, force ? 1 : 0, &report);
    if (status != BP_OK) return report_failure(status);
    const std::unique_ptr<bp_region_report, void (*)(bp_region_report*)> guard(
        report, &bp_region_report_free);

    static constexpr struct {
        bp_region_vector_kind kind;
        const char* name;
    } kVectors[] = {{BP_VEC_EARLIEST, "earliest"},
                    {BP_VEC_LATEST, "latest"},
                    {BP_VEC_LAST_DISCONNECTED, "last_disconnected"},
                    {BP_VEC_MAX_VALUE_PATH, "max_value_path"}};
    static constexpr struct {
        bp_region region;
        const char* name;
    } kRegions[] = {{BP_REGION_BEFORE, "before"},
                    {BP_REGION_BETWEEN, "between"},
                    {BP_REGION_AFTER, "after"}};

    const uint64_t disc_after =
        bp_region_violations(report, BP_VIOLATION_DISCONNECTED_AFTER_LATEST);
    const uint64_t path_after = bp_region_violations(report, BP_VIOLATION_SIMPLE_PATH_AFTER_LATEST);

    if (json) {
        ordered_json result;
        for (const auto& v : kVectors)
            result[v.name] = {{"vector", bp_region_vector(report, v.kind)},
                              {"value", bp_region_value_decimal(report, v.kind)}};
        ordered_json regions;
        for (const auto& r : kRegions)
            regions[r.name] = {
                {"total", bp_region_count(report, r.region, BP_COUNT_TOTAL)},
                {"connected", bp_region_count(report, r.region, BP_COUNT_CONNECTED)},
                {"disconnected", bp_region_count(report, r.region, BP_COUNT_DISCONNECTED)},
                {"simple_paths", bp_region_count(report, r.region, BP_COUNT_SIMPLE_PATH)}};
        result["regions"] = regions;
        result["violations"] = {{"disconnected_after_latest", disc_after},
                                {"simple_paths_after_latest", path_after}};
        emit_envelope("regions", network_summary(net.net), result);
    } else {
        for (const auto& v : kVectors)
            std::cout << v.name << ": vector=" << bp_region_vector(report, v.kind)
                      << " value=" << bp_region_value_decimal(report, v.kind) << "\n";
        for (const auto& r : kRegions)
            std::cout << "region " << r.name
                      << ": total=" << bp_region_count(report, r.region, BP_COUNT_TOTAL)
                      << " connected=" << bp_region_count(report, r.region, BP_COUNT_CONNECTED)
                      << " disconnected="
                      << bp_region_count(report, r.region, BP_COUNT_DISCONNECTED)
                      << " simple-paths="
                      << bp_region_count(report, r.region, BP_COUNT_SIMPLE_PATH) << "\n";
        std::cout << "violations: disconnected-after-latest=" << disc_after
                  << " simple-paths-after-latest=" << path_after << "\n";
    }
    return kExitOk;
}

int run_reliability(const std::string& file, bool prune, bool force, bool json) {
    NetworkHandle net;
    if (int rc = open_network(file, net); rc != kExitOk) return rc;
    double probability = 0.0;
    uint64_t evaluated = 0, pruned = 0;
    const bp_status status =
        bp_reliability(net.net, prune ? 1 : 0, force ? 1 : 0, &probability, &evaluated, &pruned);
    if (status != BP_OK) return report_failure(status);

    char fixed[32];
    std::snprintf(fixed, sizeof fixed, "%.12f", probability);
    if (json) {
        emit_envelope("reliability", network_summary(net.net),
                      {{"probability", probability},
                       {"probability_text", fixed},
                       {"prune", prune},
                       {"vectors_evaluated", evaluated},
                       {"vectors_pruned", pruned}});
    } else {
        std::cout << "probability: " << fixed << "\n"
                  << "evaluated: " << evaluated << "\n"
                  << "pruned: " << pruned << "\n";
    }
    return kExitOk;
}

int run_verify(uint64_t seed, uint64_t cases, bool json) {
    bp_verify_report* report = nullptr;
    if (bp_verify_run(seed, cases, &report) != BP_OK) return report_failure(BP_ERR_INTERNAL);
    const std::unique_ptr<bp_verify_report, void (*)(bp_verify_report*)> guard(
        report, &bp_verify_report_free);
    const bool ok = bp_verify_mandatory_passed(report) != 0;

    if (json) {
        ordered_json checks = ordered_json::array();
        for (int i = 0; i < bp_verify_check_count(report); ++i) {
            checks.push_back({{"name", bp_verify_check_name(report, i)},
                              {"mandatory", bp_verify_check_mandatory(report, i) != 0},
                              {"passed", bp_verify_check_passed(report, i) != 0},
                              {"checked", bp_verify_check_observations(report, i)},
                              {"violations", bp_verify_check_violations(report, i)}});
        }
        emit_envelope("verify", nullptr,
                      {{"seed", seed},
                       {"cases", cases},
                       {"mandatory_passed", ok},
                       {"checks", checks}});
    } else {
        std::cout << "seed: " << seed << "\ncases: " << cases << "\n";
        for (int i = 0; i < bp_verify_check_count(report); ++i) {
            const bool mandatory = bp_verify_check_mandatory(report, i) != 0;
            const char* tag =
                !mandatory ? "REPORT" : bp_verify_check_passed(report, i) ? "PASS" : "FAIL";
            std::cout << tag << " " << bp_verify_check_name(report, i)
                      << " checked=" << bp_verify_check_observations(report, i)
                      << " violations=" << bp_verify_check_violations(report, i) << "\n";
        }
        std::cout << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Earliest/latest path analysis for binary-state networks"};
    app.require_subcommand(1);
    bool json = false;
    bool force = false;
    app.add_flag("--json", json, "emit a JSON envelope instead of text");
    app.add_flag("--force", force, "override the exhaustive-scan safety caps");

    std::string file;
    std::string xfc_file, xfc_method = "correct";
    int enum_k = 0;
    std::string annotate_file;
    std::string regions_file, reliability_file;
    bool prune = false;
    uint64_t seed = 42, cases = 200;

    auto* cmd_earliest = app.add_subcommand("earliest", "BAT-minimal source-sink path");
    cmd_earliest->add_option("file", file, "edge-list network file")->required();
    cmd_earliest->fallthrough();
    auto* cmd_latest = app.add_subcommand("latest", "path minimizing the reversed weights");
    cmd_latest->add_option("file", file, "edge-list network file")->required();
    cmd_latest->fallthrough();

    auto* cmd_xfc = app.add_subcommand("xfc", "first connected vector");
    cmd_xfc->add_option("file", xfc_file, "edge-list network file")->required();
    cmd_xfc->add_option("--method", xfc_method, "construction to run")
        ->check(CLI::IsMember({"paper", "correct"}));
    cmd_xfc->fallthrough();

    auto* cmd_enum = app.add_subcommand("enum", "stream all 2^k vectors in BAT order");
    cmd_enum->add_option("-k", enum_k, "vector length")->required();
    cmd_enum->add_option("--annotate", annotate_file,
                         "append decimal value and connectivity against this network");
    cmd_enum->fallthrough();

    auto* cmd_regions = app.add_subcommand("regions", "three-region census of all 2^m vectors");
    cmd_regions->add_option("file", regions_file, "edge-list network file")->required();
    cmd_regions->fallthrough();

    auto* cmd_reliability =
        app.add_subcommand("reliability", "exact two-terminal reliability by enumeration");
    cmd_reliability->add_option("file", reliability_file, "edge-list network file")->required();
    cmd_reliability->add_flag("--prune", prune, "skip all vectors below the earliest-path value");
    cmd_reliability->fallthrough();

    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite on random instances");
    cmd_verify->add_option("--seed", seed, "corpus seed");
    cmd_verify->add_option("--cases", cases, "number of random instances");
    cmd_verify->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    if (app.got_subcommand(cmd_earliest)) return run_extreme_path("earliest", file, json);
    if (app.got_subcommand(cmd_latest)) return run_extreme_path("latest", file, json);
    if (app.got_subcommand(cmd_xfc)) return run_xfc(xfc_file, xfc_method, json);
    if (app.got_subcommand(cmd_enum)) {
        if (json) {
            std::cerr << "error: enum streams plain text and does not support --json\n";
            return kExitInputError;
        }
        return run_enum(enum_k, annotate_file, force);
    }
    if (app.got_subcommand(cmd_regions)) return run_regions(regions_file, force, json);
    if (app.got_subcommand(cmd_reliability))
        return run_reliability(reliability_file, prune, force, json);
    if (app.got_subcommand(cmd_verify)) return run_verify(seed, cases, json);
    return kExitInputError;
}
