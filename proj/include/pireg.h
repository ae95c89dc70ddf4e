#ifndef PIREG_H
#define PIREG_H

/* Traffic-regulation toolkit for deterministic networks: exact rational
 * packet traces, Pi-regulation operators, minimal per-flow and interleaved
 * regulators, FIFO-system models and theorem checkers.
 *
 * All functions return a pireg_status; every value crossing the boundary is
 * a UTF-8 string (rationals are rendered p/q, integers without /1) or an
 * opaque handle. On any status other than PIREG_OK / PIREG_CHECK_FAILED,
 * pireg_last_error() describes the problem (thread-local).
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pireg_status {
  PIREG_OK = 0,
  PIREG_CHECK_FAILED = 1,   /* a check ran to completion and failed */
  PIREG_PARSE_ERROR = 2,    /* unreadable trace/config/literal or usage error */
  PIREG_CONFIG_ERROR = 3,   /* semantic config error (missing flow binding, ...) */
  PIREG_INVALID_ARGUMENT = 4,
  PIREG_IO_ERROR = 5,
  PIREG_INTERNAL_ERROR = 6
} pireg_status;

typedef struct pireg_trace pireg_trace;
typedef struct pireg_pipeline pireg_pipeline;
typedef struct pireg_report pireg_report;

const char* pireg_version(void);
const char* pireg_last_error(void);
void pireg_string_free(char* s);

/* Traces (line format: "<date> <length> <flow>"). */
pireg_status pireg_trace_parse(const char* text, pireg_trace** out);
pireg_status pireg_trace_read(const char* path, pireg_trace** out);
pireg_status pireg_trace_format(const pireg_trace* trace, char** out_text);
pireg_status pireg_trace_write(const pireg_trace* trace, const char* path);
size_t pireg_trace_size(const pireg_trace* trace);
void pireg_trace_free(pireg_trace* trace);

/* Pipelines (line-oriented stage list; see the config syntax in README). */
pireg_status pireg_pipeline_parse(const char* text, pireg_pipeline** out);
pireg_status pireg_pipeline_read(const char* path, pireg_pipeline** out);
pireg_status pireg_pipeline_run(const pireg_pipeline* pipeline, const pireg_trace* input,
                                pireg_trace** out);
void pireg_pipeline_free(pireg_pipeline* pipeline);

/* Worst-case delay table between two matched traces (tab-separated; one row
 * per flow, then an overall row; per-packet rows when per_packet != 0). */
pireg_status pireg_delays(const pireg_trace* input, const pireg_trace* output, int per_packet,
                          char** out_table);

/* Named checks. Arguments are key/value string pairs; accepted keys depend
 * on the check:
 *   theorem1:         trace, sigma | instances, seed
 *   regularity:       trace, op
 *   minimality:       trace, candidate, op | ops | instances, seed
 *   shaping-for-free: trace, system, op | ops, mode (per-flow|interleaved)
 *                     | instances, seed, mode
 *   dominance:        trace, ops | instances, seed
 *   c-conditions:     instances, seed
 * Returns PIREG_OK on pass, PIREG_CHECK_FAILED on fail; *out carries the
 * report either way. */
pireg_status pireg_check(const char* name, const char* const* keys, const char* const* values,
                         size_t nargs, pireg_report** out);
const char* pireg_report_text(const pireg_report* report);
int pireg_report_passed(const pireg_report* report);
void pireg_report_free(pireg_report* report);

/* Reproduces the built-in worked scenario and diffs it against embedded
 * reference values. corrupt_index > 0 flips one reference value first (a
 * negative control for tests); pass 0 for the honest run. */
pireg_status pireg_example(long corrupt_index, char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* PIREG_H */
