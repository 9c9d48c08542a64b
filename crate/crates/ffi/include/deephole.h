#ifndef DEEPHOLE_H
#define DEEPHOLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum DhStatus {
  DH_STATUS_OK = 0,
  DH_STATUS_NULL_POINTER = 1,
  DH_STATUS_INVALID_FIELD = 2,
  DH_STATUS_NOT_IN_FIELD = 3,
  DH_STATUS_DIVISION_BY_ZERO = 4,
  DH_STATUS_INVALID_ARGUMENT = 5,
  DH_STATUS_BUDGET_EXCEEDED = 6,
  /**
   * A result does not fit the output type or buffer.
   */
  DH_STATUS_OUT_OF_RANGE = 7,
  DH_STATUS_INTERNAL = 8,
} DhStatus;

typedef enum DhOp {
  DH_OP_ADD = 0,
  DH_OP_SUB = 1,
  DH_OP_MUL = 2,
  DH_OP_DIV = 3,
  DH_OP_INV = 4,
  DH_OP_NEG = 5,
} DhOp;

typedef enum DhEvalSet {
  /**
   * All nonzero elements, ascending.
   */
  DH_EVAL_SET_STAR = 0,
  /**
   * All elements, ascending.
   */
  DH_EVAL_SET_FULL = 1,
  /**
   * The caller-supplied list.
   */
  DH_EVAL_SET_EXPLICIT = 2,
} DhEvalSet;

typedef enum DhOracle {
  DH_ORACLE_SUBSET_INTERPOLATION = 0,
  DH_ORACLE_CODEWORD_ENUMERATION = 1,
} DhOracle;

typedef enum DhVariant {
  DH_VARIANT_PUBLISHED = 0,
  DH_VARIANT_CORRECTED = 1,
} DhVariant;

typedef enum DhPointConstraint {
  DH_POINT_CONSTRAINT_NONZERO_DISTINCT = 0,
  DH_POINT_CONSTRAINT_DISTINCT_ONLY = 1,
} DhPointConstraint;

/**
 * Opaque Reed-Solomon code handle.
 */
typedef struct DhCode DhCode;

/**
 * Opaque finite field handle.
 */
typedef struct DhField DhField;

typedef struct DhVerdict {
  bool is_deep_hole;
  size_t distance;
  size_t max_agreement;
} DhVerdict;

typedef struct DhBoundReport {
  int64_t main;
  int64_t weil;
  int64_t degree_power;
  int64_t common_zero;
  int64_t margin;
  uint64_t common_degree;
  bool applies;
} DhBoundReport;

typedef struct DhEquivalence {
  bool subset_exists;
  bool deep_hole;
  size_t distance;
  bool holds;
} DhEquivalence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null if none.
 * Valid until the next failing call on the same thread.
 */
const char *dh_last_error(void);

/**
 * Library version, static storage.
 */
const char *dh_version(void);

/**
 * Creates `F_q`. `modulus` (ascending, monic, degree `m`) may be null to
 * use the default irreducible modulus.
 *
 * # Safety
 * `modulus` must be null or valid for `modulus_len` reads; `out` must be
 * valid for one write.
 */
enum DhStatus dh_field_new(uint64_t q,
                           const uint64_t *modulus,
                           size_t modulus_len,
                           struct DhField **out);

/**
 * # Safety
 * `field` must be null or a handle from [`dh_field_new`] not yet freed.
 */
void dh_field_free(struct DhField *field);

/**
 * Order `q`, or 0 for a null handle.
 *
 * # Safety
 * `field` must be null or a live handle.
 */
uint64_t dh_field_order(const struct DhField *field);

/**
 * Characteristic `p`, or 0 for a null handle.
 *
 * # Safety
 * `field` must be null or a live handle.
 */
uint64_t dh_field_characteristic(const struct DhField *field);

/**
 * Extension degree `m`, or 0 for a null handle.
 *
 * # Safety
 * `field` must be null or a live handle.
 */
uint32_t dh_field_degree(const struct DhField *field);

/**
 * `a op b` on canonical encodings; `b` is ignored by `Inv` and `Neg`.
 *
 * # Safety
 * `field` must be a live handle; `out` must be valid for one write.
 */
enum DhStatus dh_field_op(const struct DhField *field,
                          enum DhOp op,
                          uint64_t a,
                          uint64_t b,
                          uint64_t *out);

/**
 * Creates the `[n, k]` code over `field`. `eval` is read only for
 * [`DhEvalSet::Explicit`]. The code keeps its own reference to the field.
 *
 * # Safety
 * `field` must be a live handle; `eval` must be valid for `eval_len` reads
 * when used; `out` must be valid for one write.
 */
enum DhStatus dh_code_new(const struct DhField *field,
                          enum DhEvalSet kind,
                          const uint64_t *eval,
                          size_t eval_len,
                          size_t k,
                          struct DhCode **out);

/**
 * # Safety
 * `code` must be null or a handle from [`dh_code_new`] not yet freed.
 */
void dh_code_free(struct DhCode *code);

/**
 * Length `n`, or 0 for a null handle.
 *
 * # Safety
 * `code` must be null or a live handle.
 */
size_t dh_code_n(const struct DhCode *code);

/**
 * Dimension `k`, or 0 for a null handle.
 *
 * # Safety
 * `code` must be null or a live handle.
 */
size_t dh_code_k(const struct DhCode *code);

/**
 * Copies the evaluation set into `out` (capacity `cap >= n`).
 *
 * # Safety
 * `code` must be a live handle; `out` must be valid for `cap` writes.
 */
enum DhStatus dh_code_eval_set(const struct DhCode *code, uint64_t *out, size_t cap);

/**
 * Evaluates the polynomial `sum coeffs[i] x^i` (degree below `n`) on the
 * evaluation set, writing `n` values to `word`.
 *
 * # Safety
 * `code` must be a live handle; `coeffs` valid for `len` reads; `word`
 * valid for `cap` writes.
 */
enum DhStatus dh_code_word_from_poly(const struct DhCode *code,
                                     const uint64_t *coeffs,
                                     size_t len,
                                     uint64_t *word,
                                     size_t cap);

/**
 * Exact distance from `word` (length `n`) to the code. When `witness` is
 * not null it receives the `k` coefficients of a nearest codeword's
 * generator, ascending.
 *
 * # Safety
 * `code` must be a live handle; `word` valid for `len` reads; `verdict`
 * valid for one write; `witness` null or valid for `witness_cap` writes.
 */
enum DhStatus dh_code_distance(const struct DhCode *code,
                               const uint64_t *word,
                               size_t len,
                               enum DhOracle oracle,
                               size_t jobs,
                               struct DhVerdict *verdict,
                               uint64_t *witness,
                               size_t witness_cap);

/**
 * Number of deep holes among all `q^n` words.
 *
 * # Safety
 * `code` must be a live handle; `count` valid for one write.
 */
enum DhStatus dh_code_count_deep_holes(const struct DhCode *code, size_t jobs, uint64_t *count);

/**
 * Exact margin for `(q, k, d)`. Fails with `OutOfRange` when a term
 * exceeds 64 bits.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum DhStatus dh_theorem_margin(uint64_t q,
                                uint64_t k,
                                uint64_t d,
                                enum DhVariant variant,
                                struct DhBoundReport *out);

/**
 * Lower bound on the points of an absolutely irreducible degree-`d`
 * hypersurface in `F_q^n`.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum DhStatus dh_cafure_matera_lower(uint64_t q, uint64_t n, uint64_t d, int64_t *out);

/**
 * Upper bound `2 n D^3 q^{n-2}` on common zeros.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum DhStatus dh_schmidt_upper(uint64_t q, uint64_t n, uint64_t degree, int64_t *out);

/**
 * Searches for a zero of the hypersurface `L` of the tail
 * `x^{k+d} + sum low[i] x^{k+i}` with pairwise distinct coordinates.
 * Sets `*found`; on a hit writes the `k + 1` coordinates to `point`.
 *
 * # Safety
 * `field` must be a live handle; `low` valid for `d` reads; `point` valid
 * for `cap` writes; `found` valid for one write.
 */
enum DhStatus dh_find_distinct_point(const struct DhField *field,
                                     size_t k,
                                     size_t d,
                                     const uint64_t *low,
                                     enum DhPointConstraint constraint,
                                     size_t jobs,
                                     uint64_t *point,
                                     size_t cap,
                                     bool *found);

/**
 * Decides the subset-sum instance `(set, target, size)` and the deep-hole
 * question it reduces to, independently.
 *
 * # Safety
 * `field` must be a live handle; `set` valid for `len` reads; `out` valid
 * for one write.
 */
enum DhStatus dh_subset_sum_equivalence(const struct DhField *field,
                                        const uint64_t *set,
                                        size_t len,
                                        uint64_t target,
                                        size_t size,
                                        struct DhEquivalence *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEEPHOLE_H */
