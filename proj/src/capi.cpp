#include "binpath/binpath.h"

#include "binpath/bat.hpp"
#include "binpath/errors.hpp"
#include "binpath/instance_gen.hpp"
#include "binpath/lex_weight.hpp"
#include "binpath/network.hpp"
#include "binpath/oracle.hpp"
#include "binpath/pathfind.hpp"
#include "binpath/verify.hpp"

#include <cstring>
#include <exception>
#include <new>
#include <string>

using namespace binpath;

struct bp_network {
    Network net;
    std::vector<std::string> warnings;
};

struct bp_path {
    PathResult path;
    std::string vector_str;
    std::string weight_decimal;
    std::string weight_binary;
};

struct bp_bat_iter {
    BatSequence seq;
    std::string current;
};

struct bp_region_report {
    RegionReport report;
    std::string vectors[4];
    std::string values[4];
};

struct bp_verify_report {
    VerifyReport report;
};

namespace {

thread_local std::string g_last_error;

bp_status fail(bp_status status, const char* message) {
    g_last_error = message;
    return status;
}

bp_status translate_current_exception() {
    try {
        throw;
    } catch (const ParseError& e) {
        return fail(BP_ERR_PARSE, e.what());
    } catch (const NoPathError& e) {
        return fail(BP_NO_PATH, e.what());
    } catch (const CapExceeded& e) {
        return fail(BP_ERR_CAP, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(BP_ERR_ARG, e.what());
    } catch (const std::out_of_range& e) {
        return fail(BP_ERR_ARG, e.what());
    } catch (const std::exception& e) {
        return fail(BP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(BP_ERR_INTERNAL, "unknown error");
    }
}

bp_path* make_path_handle(PathResult&& p, int arc_count) {
    auto* handle = new bp_path{std::move(p), {}, {}, {}};
    handle->vector_str = handle->path.vector.to_string();
    handle->weight_decimal = handle->path.weight.decimal();
    handle->weight_binary = handle->path.weight.bits_lsb_first(arc_count);
    return handle;
}

} // namespace

extern "C" {

const char* bp_version(void) { return "0.1.0"; }

const char* bp_last_error(void) { return g_last_error.c_str(); }

bp_status bp_network_parse(const char* text, bp_network** out) {
    if (!text || !out) return fail(BP_ERR_ARG, "null argument");
    *out = nullptr;
    try {
        auto net = Network::parse(text);
        auto warnings = net.validate();
        *out = new bp_network{std::move(net), std::move(warnings)};
        return BP_OK;
    } catch (...) {
        return translate_current_exception();
    }
}

bp_status bp_network_parse_file(const char* path, bp_network** out) {
    if (!path || !out) return fail(BP_ERR_ARG, "null argument");
    *out = nullptr;
    try {
        auto net = Network::parse_file(path);
        auto warnings = net.validate();
        *out = new bp_network{std::move(net), std::move(warnings)};
        return BP_OK;
    } catch (...) {
        return translate_current_exception();
    }
}

void bp_network_free(bp_network* net) { delete net; }

int bp_network_node_count(const bp_network* net) { return net ? net->net.node_count() : 0; }
int bp_network_arc_count(const bp_network* net) { return net ? net->net.arc_count() : 0; }
int bp_network_source(const bp_network* net) { return net ? net->net.source() : 0; }
int bp_network_sink(const bp_network* net) { return net ? net->net.sink() : 0; }

bp_status bp_network_arc(const bp_network* net, int arc_id, int* u, int* v, double* prob) {
    if (!net) return fail(BP_ERR_ARG, "null network");
    if (arc_id < 1 || arc_id > net->net.arc_count()) return fail(BP_ERR_ARG, "arc id out of range");
    const Arc& a = net->net.arc(arc_id);
    if (u) *u = a.u;
    if (v) *v = a.v;
    if (prob) *prob = net->net.arc_prob(arc_id);
    return BP_OK;
}

int bp_network_warning_count(const bp_network* net) {
    return net ? static_cast<int>(net->warnings.size()) : 0;
}

const char* bp_network_warning(const bp_network* net, int index) {
    if (!net || index < 0 || index >= static_cast<int>(net->warnings.size())) return nullptr;
    return net->warnings[index].c_str();
}

bp_status bp_connected(const bp_network* net, const char* bits, int* out_connected) {
    if (!net || !bits || !out_connected) return fail(BP_ERR_ARG, "null argument");
    try {
        const StateVector x = StateVector::from_string(bits);
        *out_connected = is_st_connected(net->net, x) ? 1 : 0;
        return BP_OK;
    } catch (...) {
        return translate_current_exception();
    }
}

bp_status bp_earliest_path(const bp_network* net, bp_path** out) {
    if (!net || !out) return fail(BP_ERR_ARG, "null argument");
    *out = nullptr;
    try {
        auto p = earliest_path(net->net);
        if (!p) return fail(BP_NO_PATH, "no source-sink path");
        *out = make_path_handle(std::move(*p), net->net.arc_count());
        return BP_OK;
    } catch (...) {
        return translate_current_exception();
    }
}

bp_status bp_latest_path(const bp_network* net, bp_path** out) {
    if (!net || !out) return fail(BP_ERR_ARG, "null argument");
    *out = nullptr;
    try {
        auto p = latest_path(net->net);
        if (!p) return fail(BP_NO_PATH, "no source-sink path");
        *out = make_path_handle(std::move(*p), net->net.arc_count());
        return BP_OK;
    } catch (...) {
        return translate_current_exception();
    }
}

void bp_path_free(bp_path* path) { delete path; }

int bp_path_node_count(const bp_path* path) {
    return path ? static_cast<int>(path->path.nodes.size()) : 0;
}

int bp_path_node(const bp_path* path, int index) {
    if (!path || index < 0 || index >= static_cast<int>(path->path.nodes.size())) return 0;
    return path->path.nodes[index];
}

int bp_path_arc_count(const bp_path* path) {
    return path ? static_cast<int>(path->path.arc_ids.size()) : 0;
}

int bp_path_arc(const bp_path* path, int index) {
    if (!path || index < 0 || index >= static_cast<int>(path->path.arc_ids.size())) return 0;
    return path->path.arc_ids[index];
}

const char* bp_path_vector(const bp_path* path) { return path ? path->vector_str.c_str() : nullptr; }

const char* bp_path_weight_decimal(const bp_path* path) {
    return path ? path->weight_decimal.c_str() : nullptr;
}

const char* bp_path_weight_binary(const bp_path* path) {
    return path ? path->weight_binary.c_str() : nullptr;
}

bp_status bp_find_xfc(const bp_network* net, int paper_method, char* bits, size_t capacity) {
    if (!net || !bits) return fail(BP_ERR_ARG, "null argument");
    if (capacity < static_cast<size_t>(net->net.arc_count()) + 1)
        return fail(BP_ERR_ARG, "bits buffer too small");
    try {
        const StateVector x =
            paper_method ? find_xfc_paper(net->net) : find_xfc_correct(net->net);
        const std::string s = x.to_string();
        std::memcpy(bits, s.c_str(), s.size() + 1);
        return BP_OK;
    } catch (...) {
        return translate_current_exception();
    }
}

bp_status bp_bat_iter_new(int k, bp_bat_iter** out) {
    if (!out) return fail(BP_ERR_ARG, "null argument");
    *out = nullptr;
    if (k < 1) return fail(BP_ERR_ARG, "k must be at least 1");
    *out = new bp_bat_iter{BatSequence(static_cast<std::size_t>(k)), {}};
    return BP_OK;
}

int bp_bat_iter_next(bp_bat_iter* iter, const char** bits_out) {
    if (!iter || !bits_out) return 0;
    auto x = iter->seq.next();
    if (!x) return 0;
    iter->current = x->to_string();
    *bits_out = iter->current.c_str();
    return 1;
}

void bp_bat_iter_free(bp_bat_iter* iter) { delete iter; }

int bp_vector_value_decimal(const char* bits, char* buf, size_t capacity) {
    if (!bits) return -1;
    try {
        const std::string s = vector_value(StateVector::from_string(bits)).decimal();
        if (buf && capacity > 0) {
            const size_t n = s.size() < capacity - 1 ? s.size() : capacity - 1;
            std::memcpy(buf, s.c_str(), n);
            buf[n] = '\0';
        }
        return static_cast<int>(s.size());
    } catch (...) {
        translate_current_exception();
        return -1;
    }
}

bp_status bp_region_census(const bp_network* net, int force, bp_region_report** out) {
    if (!net || !out) return fail(BP_ERR_ARG, "null argument");
    *out = nullptr;
    try {
        auto* handle = new bp_region_report{region_census(net->net, force != 0), {}, {}};
        const RegionReport& r = handle->report;
        handle->vectors[BP_VEC_EARLIEST] = r.earliest_vector.to_string();
        handle->vectors[BP_VEC_LATEST] = r.latest_vector.to_string();
        handle->vectors[BP_VEC_LAST_DISCONNECTED] = r.last_disconnected_vector.to_string();
        handle->vectors[BP_VEC_MAX_VALUE_PATH] = r.max_value_path_vector.to_string();
        handle->values[BP_VEC_EARLIEST] = r.earliest_value.decimal();
        handle->values[BP_VEC_LATEST] = r.latest_value.decimal();
        handle->values[BP_VEC_LAST_DISCONNECTED] = r.last_disconnected_value.decimal();
        handle->values[BP_VEC_MAX_VALUE_PATH] = vector_value(r.max_value_path_vector).decimal();
        *out = handle;
        return BP_OK;
    } catch (...) {
        return translate_current_exception();
    }
}

void bp_region_report_free(bp_region_report* report) { delete report; }

const char* bp_region_vector(const bp_region_report* report, bp_region_vector_kind which) {
    if (!report || which < 0 || which > 3) return nullptr;
    return report->vectors[which].c_str();
}

const char* bp_region_value_decimal(const bp_region_report* report, bp_region_vector_kind which) {
    if (!report || which < 0 || which > 3) return nullptr;
    return report->values[which].c_str();
}

uint64_t bp_region_count(const bp_region_report* report, bp_region region,
                         bp_region_count_kind kind) {
    if (!report) return 0;
    const RegionCounts* counts = nullptr;
    switch (region) {
    case BP_REGION_BEFORE: counts = &report->report.before; break;
    case BP_REGION_BETWEEN: counts = &report->report.between; break;
    case BP_REGION_AFTER: counts = &report->report.after; break;
    default: return 0;
    }
    switch (kind) {
    case BP_COUNT_TOTAL: return counts->total;
    case BP_COUNT_CONNECTED: return counts->connected;
    case BP_COUNT_DISCONNECTED: return counts->disconnected;
    case BP_COUNT_SIMPLE_PATH: return counts->simple_path;
    default: return 0;
    }
}

uint64_t bp_region_violations(const bp_region_report* report, bp_violation_kind which) {
    if (!report) return 0;
    return which == BP_VIOLATION_DISCONNECTED_AFTER_LATEST
               ? report->report.disconnected_after_latest
               : report->report.simple_paths_after_latest;
}

bp_status bp_reliability(const bp_network* net, int prune, int force, double* probability,
                         uint64_t* evaluated, uint64_t* pruned) {
    if (!net || !probability) return fail(BP_ERR_ARG, "null argument");
    try {
        const ReliabilityResult r = reliability_exact(net->net, prune != 0, force != 0);
        *probability = r.probability;
        if (evaluated) *evaluated = r.vectors_evaluated;
        if (pruned) *pruned = r.vectors_pruned;
        return BP_OK;
    } catch (...) {
        return translate_current_exception();
    }
}

bp_status bp_verify_run(uint64_t seed, uint64_t cases, bp_verify_report** out) {
    if (!out) return fail(BP_ERR_ARG, "null argument");
    *out = nullptr;
    try {
        *out = new bp_verify_report{run_verify(seed, cases)};
        return BP_OK;
    } catch (...) {
        return translate_current_exception();
    }
}

void bp_verify_report_free(bp_verify_report* report) { delete report; }

int bp_verify_check_count(const bp_verify_report* report) {
    return report ? static_cast<int>(report->report.checks.size()) : 0;
}

const char* bp_verify_check_name(const bp_verify_report* report, int index) {
    if (!report || index < 0 || index >= static_cast<int>(report->report.checks.size()))
        return nullptr;
    return report->report.checks[index].name.c_str();
}

int bp_verify_check_mandatory(const bp_verify_report* report, int index) {
    if (!report || index < 0 || index >= static_cast<int>(report->report.checks.size())) return 0;
    return report->report.checks[index].mandatory ? 1 : 0;
}

int bp_verify_check_passed(const bp_verify_report* report, int index) {
    if (!report || index < 0 || index >= static_cast<int>(report->report.checks.size())) return 0;
    return report->report.checks[index].passed() ? 1 : 0;
}

uint64_t bp_verify_check_observations(const bp_verify_report* report, int index) {
    if (!report || index < 0 || index >= static_cast<int>(report->report.checks.size())) return 0;
    return report->report.checks[index].checked;
}

uint64_t bp_verify_check_violations(const bp_verify_report* report, int index) {
    if (!report || index < 0 || index >= static_cast<int>(report->report.checks.size())) return 0;
    return report->report.checks[index].violations;
}

int bp_verify_mandatory_passed(const bp_verify_report* report) {
    return report && report->report.mandatory_passed() ? 1 : 0;
}

} // extern "C"
