/*
 * binpath C API.
 *
 * Lexicographically earliest/latest source-sink paths in binary-state
 * networks (Dijkstra over power-of-two arc weights), BAT-order state-vector
 * enumeration, solution-space region census, and exact two-terminal
 * reliability with earliest-path pruning.
 *
 * All objects are opaque handles created and destroyed by this library.
 * Every fallible call returns a bp_status; on failure bp_last_error() holds
 * a human-readable message for the calling thread. Strings returned as
 * `const char*` from accessor functions are owned by the handle and stay
 * valid until it is freed.
 *
 * Conventions, matching the text formats of the CLI:
 *   - nodes and arc ids are 1-based;
 *   - state vectors are '0'/'1' strings with arc a_1 first;
 *   - weights/values are arbitrary-length decimal strings, plus a binary
 *     rendering oriented like a state vector (bit of 2^(i-1) at position i).
 */

#ifndef BINPATH_H
#define BINPATH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bp_status {
    BP_OK = 0,
    BP_ERR_PARSE = 1,    /* malformed network file */
    BP_NO_PATH = 2,      /* no source-sink path (a result, not a failure) */
    BP_ERR_CAP = 3,      /* exhaustive scan above the safety cap without force */
    BP_ERR_ARG = 4,      /* invalid argument (null handle, bad index, bad bits...) */
    BP_ERR_INTERNAL = 5
} bp_status;

typedef struct bp_network bp_network;
typedef struct bp_path bp_path;
typedef struct bp_bat_iter bp_bat_iter;
typedef struct bp_region_report bp_region_report;
typedef struct bp_verify_report bp_verify_report;

/* Library version, e.g. "0.1.0". */
const char* bp_version(void);

/* Message for the most recent failed call on this thread ("" if none). */
const char* bp_last_error(void);

/* ---- network ---------------------------------------------------------- */

bp_status bp_network_parse(const char* text, bp_network** out);
bp_status bp_network_parse_file(const char* path, bp_network** out);
void bp_network_free(bp_network* net);

int bp_network_node_count(const bp_network* net);
int bp_network_arc_count(const bp_network* net);
int bp_network_source(const bp_network* net);
int bp_network_sink(const bp_network* net);

/* Endpoints and working probability of one arc; any out pointer may be NULL. */
bp_status bp_network_arc(const bp_network* net, int arc_id, int* u, int* v, double* prob);

/* Structural warnings (isolated nodes, source-sink disconnection). */
int bp_network_warning_count(const bp_network* net);
const char* bp_network_warning(const bp_network* net, int index);

/* Source-sink connectivity of the subgraph selected by `bits` (length m). */
bp_status bp_connected(const bp_network* net, const char* bits, int* out_connected);

/* ---- earliest / latest paths ------------------------------------------ */

/* Both return BP_NO_PATH (and no handle) when the sink is unreachable. */
bp_status bp_earliest_path(const bp_network* net, bp_path** out);
bp_status bp_latest_path(const bp_network* net, bp_path** out);
void bp_path_free(bp_path* path);

int bp_path_node_count(const bp_path* path);
int bp_path_node(const bp_path* path, int index);
int bp_path_arc_count(const bp_path* path);
int bp_path_arc(const bp_path* path, int index);
const char* bp_path_vector(const bp_path* path);
const char* bp_path_weight_decimal(const bp_path* path);
const char* bp_path_weight_binary(const bp_path* path);

/* ---- first connected vector ------------------------------------------- */

/* Writes the m-bit vector into bits (capacity >= m+1). With paper_method
 * nonzero uses the historical upward-scanning greedy, which can overshoot;
 * otherwise the downward-scanning construction whose result is the true
 * BAT-minimal connected vector. BP_NO_PATH when the all-arcs graph is
 * disconnected. */
bp_status bp_find_xfc(const bp_network* net, int paper_method, char* bits, size_t capacity);

/* ---- BAT enumeration --------------------------------------------------- */

/* Streams all 2^k k-bit vectors in BAT order, starting at the zero vector. */
bp_status bp_bat_iter_new(int k, bp_bat_iter** out);
/* 1 while a vector was produced, 0 at the end. *bits_out stays valid until
 * the next call on the same iterator. */
int bp_bat_iter_next(bp_bat_iter* iter, const char** bits_out);
void bp_bat_iter_free(bp_bat_iter* iter);

/* Decimal value of a '0'/'1' vector string (a_1 first). Returns the number
 * of characters required (excluding the terminator), or -1 on bad input;
 * writes at most capacity bytes including the terminator. */
int bp_vector_value_decimal(const char* bits, char* buf, size_t capacity);

/* ---- region census ----------------------------------------------------- */

typedef enum bp_region_vector_kind {
    BP_VEC_EARLIEST = 0,
    BP_VEC_LATEST = 1,
    BP_VEC_LAST_DISCONNECTED = 2,
    BP_VEC_MAX_VALUE_PATH = 3
} bp_region_vector_kind;

typedef enum bp_region { BP_REGION_BEFORE = 0, BP_REGION_BETWEEN = 1, BP_REGION_AFTER = 2 } bp_region;

typedef enum bp_region_count_kind {
    BP_COUNT_TOTAL = 0,
    BP_COUNT_CONNECTED = 1,
    BP_COUNT_DISCONNECTED = 2,
    BP_COUNT_SIMPLE_PATH = 3
} bp_region_count_kind;

typedef enum bp_violation_kind {
    BP_VIOLATION_DISCONNECTED_AFTER_LATEST = 0,
    BP_VIOLATION_SIMPLE_PATH_AFTER_LATEST = 1
} bp_violation_kind;

/* Full 2^m scan; needs force above 24 arcs. BP_NO_PATH when the network has
 * no source-sink path at all. */
bp_status bp_region_census(const bp_network* net, int force, bp_region_report** out);
void bp_region_report_free(bp_region_report* report);

const char* bp_region_vector(const bp_region_report* report, bp_region_vector_kind which);
const char* bp_region_value_decimal(const bp_region_report* report, bp_region_vector_kind which);
uint64_t bp_region_count(const bp_region_report* report, bp_region region, bp_region_count_kind kind);
uint64_t bp_region_violations(const bp_region_report* report, bp_violation_kind which);

/* ---- reliability -------------------------------------------------------- */

/* Exact two-terminal reliability under the per-arc probabilities carried by
 * the network file. With prune nonzero, all vectors below the earliest-path
 * value are skipped and counted in *pruned. Needs force above 24 arcs. */
bp_status bp_reliability(const bp_network* net, int prune, int force, double* probability,
                         uint64_t* evaluated, uint64_t* pruned);

/* ---- verification harness ---------------------------------------------- */

bp_status bp_verify_run(uint64_t seed, uint64_t cases, bp_verify_report** out);
void bp_verify_report_free(bp_verify_report* report);

int bp_verify_check_count(const bp_verify_report* report);
const char* bp_verify_check_name(const bp_verify_report* report, int index);
int bp_verify_check_mandatory(const bp_verify_report* report, int index);
int bp_verify_check_passed(const bp_verify_report* report, int index);
uint64_t bp_verify_check_observations(const bp_verify_report* report, int index);
uint64_t bp_verify_check_violations(const bp_verify_report* report, int index);
/* 1 iff every mandatory check passed. */
int bp_verify_mandatory_passed(const bp_verify_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BINPATH_H */
