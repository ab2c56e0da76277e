/* SPDX-License-Identifier: Apache-2.0 */

#ifndef MASKEDHLS_H
#define MASKEDHLS_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum MhStatus {
  MH_STATUS_OK = 0,
  MH_STATUS_NULL_POINTER = 1,
  MH_STATUS_INVALID_UTF8 = 2,
  MH_STATUS_PARSE = 3,
  MH_STATUS_VALIDATION = 4,
  MH_STATUS_SOLVER = 5,
  MH_STATUS_EQUIVALENCE = 6,
  MH_STATUS_INVALID_ARGUMENT = 7,
  MH_STATUS_INTERNAL = 8,
} MhStatus;

typedef enum MhGadget {
  MH_GADGET_DOM = 0,
  MH_GADGET_HPC1 = 1,
  MH_GADGET_HPC2 = 2,
  MH_GADGET_COMAR = 3,
} MhGadget;

/**
 * A balanced (or fully cut) circuit together with its source design.
 */
typedef struct MhCompilation MhCompilation;

/**
 * A parsed circuit.
 */
typedef struct MhDesign MhDesign;

typedef struct MhStats {
  uint32_t inputs;
  uint32_t outputs;
  uint32_t operations;
  uint32_t annotated_registers;
  uint32_t balancing_registers;
  uint32_t total_registers;
  uint32_t latency;
  bool balanced;
} MhStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *mh_last_error(void);

/**
 * Library version as a static string.
 */
const char *mh_version(void);

/**
 * Parse a circuit written in the masked C dialect.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum MhStatus mh_design_parse_c(const char *text, struct MhDesign **out);

/**
 * Parse a circuit in the JSON netlist format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum MhStatus mh_design_parse_json(const char *text, struct MhDesign **out);

/**
 * Mask an unannotated design, producing a new design.
 *
 * # Safety
 * `design` must come from this library and `out` must be a valid pointer.
 */
enum MhStatus mh_design_mask(const struct MhDesign *design,
                             enum MhGadget gadget,
                             bool share_randoms,
                             struct MhDesign **out);

/**
 * The design as a JSON netlist.
 *
 * # Safety
 * `design` must come from this library and `out` must be a valid pointer.
 */
enum MhStatus mh_design_to_json(const struct MhDesign *design, char **out);

/**
 * # Safety
 * `design` must come from this library (or be NULL) and not be used again.
 */
void mh_design_free(struct MhDesign *design);

/**
 * Balance the design's registers by retiming.
 *
 * # Safety
 * `design` must come from this library and `out` must be a valid pointer.
 */
enum MhStatus mh_compile(const struct MhDesign *design, double clock, struct MhCompilation **out);

/**
 * Balance with one full register cut per annotation level.
 *
 * # Safety
 * `design` must come from this library and `out` must be a valid pointer.
 */
enum MhStatus mh_compile_naive(const struct MhDesign *design, struct MhCompilation **out);

/**
 * Register and latency figures of a compilation.
 *
 * # Safety
 * `comp` must come from this library and `out` must be a valid pointer.
 */
enum MhStatus mh_compilation_stats(const struct MhCompilation *comp, struct MhStats *out);

/**
 * Verilog for the compiled circuit. `module_name` may be NULL to use the
 * design name.
 *
 * # Safety
 * `comp` must come from this library, `module_name` NULL or a
 * NUL-terminated string, and `out` a valid pointer.
 */
enum MhStatus mh_compilation_verilog(const struct MhCompilation *comp,
                                     const char *module_name,
                                     char **out);

/**
 * The compiled circuit written back in the C dialect.
 *
 * # Safety
 * `comp` must come from this library and `out` must be a valid pointer.
 */
enum MhStatus mh_compilation_source(const struct MhCompilation *comp, char **out);

/**
 * Simulate the compiled circuit against the unregistered design. Returns
 * [`MhStatus::Equivalence`] if any output differs.
 *
 * # Safety
 * `comp` must come from this library.
 */
enum MhStatus mh_compilation_check(const struct MhCompilation *comp,
                                   uint64_t trials,
                                   uint64_t seed);

/**
 * # Safety
 * `comp` must come from this library (or be NULL) and not be used again.
 */
void mh_compilation_free(struct MhCompilation *comp);

/**
 * # Safety
 * `s` must be a string returned by this library (or NULL).
 */
void mh_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MASKEDHLS_H */
