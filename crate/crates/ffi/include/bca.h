#ifndef BCA_H
#define BCA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define BCA_ABI_VERSION 1

typedef enum BcaStatus {
  BCA_STATUS_OK = 0,
  BCA_STATUS_NULL_POINTER = 1,
  BCA_STATUS_INVALID_UTF8 = 2,
  BCA_STATUS_PARSE_ERROR = 3,
  BCA_STATUS_INVALID_ARGUMENT = 4,
  BCA_STATUS_OUT_OF_SCOPE = 5,
  BCA_STATUS_INTERNAL = 6,
} BcaStatus;

/**
 * A regular open region of the real line.
 */
typedef struct BcaRegion BcaRegion;

/**
 * A finite contact structure.
 */
typedef struct BcaStructure BcaStructure;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

uint32_t bca_abi_version(void);

/**
 * Message describing the last failure on this thread. Valid until the next
 * failing call on the same thread; never null.
 */
const char *bca_last_error(void);

/**
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BcaStatus bca_structure_parse(const char *spec, struct BcaStructure **out);

/**
 * # Safety
 * `s` must come from `bca_structure_parse` and not have been freed; null is ignored.
 */
void bca_structure_free(struct BcaStructure *s);

/**
 * # Safety
 * `s` must be a live structure handle or null.
 */
uint32_t bca_structure_atom_count(const struct BcaStructure *s);

/**
 * Bitmask of the element joining the comma or space separated atom names.
 *
 * # Safety
 * `s` must be a live handle, `atoms` a NUL-terminated string, `out` valid.
 */
enum BcaStatus bca_structure_element(const struct BcaStructure *s,
                                     const char *atoms,
                                     uint32_t *out);

/**
 * # Safety
 * `s` must be a live handle and `out` valid.
 */
enum BcaStatus bca_contact(const struct BcaStructure *s, uint32_t x, uint32_t y, bool *out);

/**
 * # Safety
 * `s` must be a live handle and `out` valid.
 */
enum BcaStatus bca_well_inside(const struct BcaStructure *s, uint32_t x, uint32_t y, bool *out);

/**
 * JSON array of verdicts for the contact axioms and the Grzegorczyk conditions.
 *
 * # Safety
 * `s` must be a live handle and `out` valid.
 */
enum BcaStatus bca_check_json(const struct BcaStructure *s, char **out);

/**
 * # Safety
 * `expr` must be a NUL-terminated string and `out` valid.
 */
enum BcaStatus bca_region_parse(const char *expr, struct BcaRegion **out);

/**
 * # Safety
 * `r` must come from `bca_region_parse` and not have been freed; null is ignored.
 */
void bca_region_free(struct BcaRegion *r);

/**
 * Canonical text of a region.
 *
 * # Safety
 * `r` must be a live handle and `out` valid.
 */
enum BcaStatus bca_region_to_string(const struct BcaRegion *r, char **out);

/**
 * # Safety
 * Both handles must be live and `out` valid.
 */
enum BcaStatus bca_region_contact(const struct BcaRegion *a, const struct BcaRegion *b, bool *out);

/**
 * # Safety
 * Both handles must be live and `out` valid.
 */
enum BcaStatus bca_region_well_inside(const struct BcaRegion *a,
                                      const struct BcaRegion *b,
                                      bool *out);

/**
 * Evaluates a region expression or predicate; the result is the canonical
 * region text or `true`/`false`.
 *
 * # Safety
 * `expr` must be a NUL-terminated string and `out` valid.
 */
enum BcaStatus bca_region_eval(const char *expr, char **out);

/**
 * # Safety
 * `s` must come from this library and not have been freed; null is ignored.
 */
void bca_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BCA_H */
