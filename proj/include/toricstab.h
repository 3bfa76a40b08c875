/*
 * toricstab — exact computation of secondary/discriminant/Hurwitz weight
 * polytopes of lattice point configurations, with semistability verdicts
 * and verifiable certificates.
 *
 * C interface over the C++ core. All handles are opaque; every function is
 * safe to call from multiple threads on distinct handles. Strings returned
 * through a handle stay owned by that handle and live until it is freed.
 */

#ifndef TORICSTAB_H
#define TORICSTAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ts_status {
    TS_OK = 0,
    TS_ERR_INPUT = 1,       /* malformed input or violated precondition */
    TS_ERR_SCALE = 2,       /* enumeration guard exceeded */
    TS_ERR_ARGUMENT = 3,    /* null pointer / bad enum from the caller */
    TS_ERR_INTERNAL = 4     /* broken invariant; report a bug */
} ts_status;

typedef struct ts_config ts_config;
typedef struct ts_result ts_result;

const char* ts_version(void);

/* Message for the most recent failing call on this thread. */
const char* ts_last_error(void);

/* Parses an input document (line format or JSON object; see README).
 * On success stores a new handle in *out. */
ts_status ts_config_parse(const char* text, ts_config** out);

/* Builds a configuration from `npoints` rows of `dim` coordinates. */
ts_status ts_config_create(int dim, const long long* coords, int npoints,
                           const char* name, ts_config** out);

void ts_config_free(ts_config* config);

int ts_config_dim(const ts_config* config);
int ts_config_point_count(const ts_config* config);
int ts_config_saturated(const ts_config* config);
int ts_config_generates(const ts_config* config);
int ts_config_delzant(const ts_config* config);

typedef struct ts_options {
    const char* command;       /* analyze | triangulations | polytopes |
                                  degrees | chow-check | k-check | svg */
    const int* dilations;      /* NULL: use the input document's (default 1) */
    int num_dilations;
    int emit_certificates;     /* default 1 */
    long long max_triangulations; /* scale guard, default 100000 */
    int jobs;                  /* parallelism limit, default 1 */
    const char* heights;       /* k-check: heights document (JSON or lines) */
} ts_options;

/* Fills an options struct with the defaults above ("analyze"). */
void ts_options_init(ts_options* opts);

/* Runs one command; on success stores a result handle in *out. */
ts_status ts_run(const ts_config* config, const ts_options* opts, ts_result** out);

/* 0 when every verdict passed, 1 when some verdict failed. */
int ts_result_exit_code(const ts_result* result);

/* Canonical machine report (JSON; byte-deterministic for fixed input). */
const char* ts_result_report_json(ts_result* result);

/* Human-readable rendering of the same report. */
const char* ts_result_report_human(ts_result* result);

/* Generated figures (svg command): count, then name/bytes per index. */
int ts_result_artifact_count(const ts_result* result);
const char* ts_result_artifact_name(const ts_result* result, int index);
const char* ts_result_artifact_data(const ts_result* result, int index);

void ts_result_free(ts_result* result);

/* Re-validates the certificates in a machine report without re-running any
 * enumeration. Returns TS_OK with *valid = 1 or 0; a summary (owned by the
 * caller, release with ts_string_free) is stored in *summary when non-NULL. */
ts_status ts_verify_report(const char* report_json, int* valid, char** summary);

void ts_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* TORICSTAB_H */
