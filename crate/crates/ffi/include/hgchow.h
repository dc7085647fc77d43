#ifndef HGCHOW_H
#define HGCHOW_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum {
  HG_STATUS_OK = 0,
  /**
   * A null pointer or malformed UTF-8 was passed.
   */
  HG_STATUS_INVALID_ARGUMENT = 1,
  /**
   * Genus outside the supported range (zero, or odd where even is needed).
   */
  HG_STATUS_INVALID_GENUS = 2,
  HG_STATUS_UNKNOWN_LEMMA = 3,
  /**
   * An index or parameter is out of range.
   */
  HG_STATUS_OUT_OF_RANGE = 4,
  /**
   * A polynomial failed to parse.
   */
  HG_STATUS_PARSE = 5,
  /**
   * A check ran and did not hold.
   */
  HG_STATUS_VERIFICATION_FAILED = 6,
  /**
   * An internal invariant failed.
   */
  HG_STATUS_INTERNAL = 7,
  /**
   * A Rust panic was caught.
   */
  HG_STATUS_PANIC = 8,
} HgStatus;

/**
 * Which parameter a verification runs at.
 */
typedef enum {
  HG_TARGET_KIND_GENUS = 0,
  HG_TARGET_KIND_PROJECTIVE_N = 1,
} HgTargetKind;

/**
 * A derived presentation of the Chow ring at one genus.
 */
typedef struct HgPresentation HgPresentation;

/**
 * An ordered list of verification reports.
 */
typedef struct HgReportList HgReportList;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, a static NUL-terminated string.
 */
const char *hg_version(void);

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into the library from the same thread.
 */
const char *hg_last_error_message(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a pointer obtained from this library, not yet freed.
 */
void hg_string_free(char *s);

/**
 * Derives the presentation at even genus `genus`, with graded pieces up
 * to `max_degree`.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
HgStatus hg_presentation_new(uint32_t genus, uint32_t max_degree, HgPresentation **out);

/**
 * Releases a presentation. Null is ignored.
 *
 * # Safety
 * `p` must be null or a live handle from [`hg_presentation_new`].
 */
void hg_presentation_free(HgPresentation *p);

/**
 * Order of the Picard group recorded in the presentation.
 *
 * # Safety
 * `p` must be a live handle; `out` valid for a write.
 */
HgStatus hg_presentation_picard_order(const HgPresentation *p, uint64_t *out);

/**
 * Number of defining relations.
 *
 * # Safety
 * `p` must be a live handle; `out` valid for a write.
 */
HgStatus hg_presentation_relation_count(const HgPresentation *p, size_t *out);

/**
 * The `index`-th relation as a polynomial string in `c1, c2`.
 *
 * # Safety
 * `p` must be a live handle; `out` valid for a write. The string must be
 * released with [`hg_string_free`].
 */
HgStatus hg_presentation_relation(const HgPresentation *p, size_t index, char **out);

/**
 * The presentation as JSON. Certificates are included when
 * `with_certificates` is true.
 *
 * # Safety
 * `p` must be a live handle; `out` valid for a write.
 */
HgStatus hg_presentation_to_json(const HgPresentation *p, bool with_certificates, char **out);

/**
 * Order of `Pic` at even genus `genus`.
 *
 * # Safety
 * `out` must be valid for a write.
 */
HgStatus hg_picard(uint32_t genus, uint64_t *out);

/**
 * Runs one lemma. A lemma that runs but fails still returns `Ok`; inspect
 * the list with [`hg_report_list_all_verified`].
 *
 * # Safety
 * `lemma` must be a NUL-terminated string; `out` valid for a write.
 */
HgStatus hg_verify(HgTargetKind kind, uint32_t value, const char *lemma, HgReportList **out);

/**
 * Runs every lemma at genus `genus` on `jobs` threads (0 = one per core).
 *
 * # Safety
 * `out` must be valid for a write.
 */
HgStatus hg_verify_all(uint32_t genus, size_t jobs, HgReportList **out);

/**
 * Releases a report list. Null is ignored.
 *
 * # Safety
 * `list` must be null or a live handle.
 */
void hg_report_list_free(HgReportList *list);

/**
 * Number of reports, or 0 for null.
 *
 * # Safety
 * `list` must be null or a live handle.
 */
size_t hg_report_list_len(const HgReportList *list);

/**
 * True when every report in the list verified. False for null.
 *
 * # Safety
 * `list` must be null or a live handle.
 */
bool hg_report_list_all_verified(const HgReportList *list);

/**
 * The reports as a JSON array, without timings.
 *
 * # Safety
 * `list` must be a live handle; `out` valid for a write.
 */
HgStatus hg_report_list_to_json(const HgReportList *list, char **out);

/**
 * Parses a polynomial and prints it in canonical form.
 *
 * # Safety
 * `input` must be a NUL-terminated string; `out` valid for a write.
 */
HgStatus hg_poly_normalize(const char *input, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HGCHOW_H */
