/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef TCI_H
#define TCI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every exported function.
typedef enum TciStatus {
  TCI_STATUS_OK = 0,
  TCI_STATUS_NULL_POINTER = 1,
  TCI_STATUS_INVALID_UTF8 = 2,
  TCI_STATUS_PARSE = 3,
  TCI_STATUS_OUT_OF_RANGE = 4,
  TCI_STATUS_MISMATCH = 5,
  TCI_STATUS_DIMENSION_CAP = 6,
  TCI_STATUS_NOT_MULTILINEAR = 7,
  TCI_STATUS_CERTIFICATE = 8,
  TCI_STATUS_INTERNAL = 99,
} TciStatus;

// Opaque handle to an element of the twisted trace algebra.
typedef struct TciElement TciElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null after a success.
// The pointer stays valid until the next call into the library on this thread.
const char *tci_last_error_message(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string produced by this library and not yet freed.
void tci_string_free(char *s);

// Releases an element handle. Null is ignored.
//
// # Safety
// `e` must be null or a handle produced by this library and not yet freed.
void tci_element_free(struct TciElement *e);

// Parses an element from its JSON form.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum TciStatus tci_element_from_json(const char *json, struct TciElement **out);

// Serializes an element to canonical JSON.
//
// # Safety
// `e` must be a live handle; `out` must be writable.
enum TciStatus tci_element_to_json(const struct TciElement *e, bool pretty, char **out);

// # Safety
// `e` must be a live handle; `out` must be writable.
enum TciStatus tci_element_arity(const struct TciElement *e, size_t *out);

// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum TciStatus tci_element_add(const struct TciElement *a,
                               const struct TciElement *b,
                               struct TciElement **out);

// The product `a · b`.
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum TciStatus tci_element_mul(const struct TciElement *a,
                               const struct TciElement *b,
                               struct TciElement **out);

// Traces out the last tensor slot.
//
// # Safety
// `e` must be a live handle; `out` must be writable.
enum TciStatus tci_element_partial_trace(const struct TciElement *e, struct TciElement **out);

// Replaces the formal `tr(1)` by `d`.
//
// # Safety
// `e` must be a live handle; `out` must be writable.
enum TciStatus tci_element_specialize(const struct TciElement *e,
                                      int64_t d,
                                      struct TciElement **out);

// Decides whether `e` vanishes on all `d × d` matrices.
//
// # Safety
// `e` must be a live handle; `out` must be writable.
enum TciStatus tci_element_is_identity(const struct TciElement *e, size_t d, bool *out);

// The Cayley-Hamilton element for `k ≤ d + 1`. Unless `formal_lambda` is set, `tr(1)` becomes `d`.
//
// # Safety
// `out` must be writable.
enum TciStatus tci_ch(size_t k,
                      size_t d,
                      bool formal_lambda,
                      struct TciElement **out);

// The multilinear basic relation `F_{k,d}`.
//
// # Safety
// `out` must be writable.
enum TciStatus tci_fkd(size_t k, size_t d, struct TciElement **out);

// The element attached to a permutation of `n + k` points, given in 1-based cycle notation.
//
// # Safety
// `perm` must be a NUL-terminated string; `out` must be writable.
enum TciStatus tci_interpret(size_t n, size_t k, const char *perm, struct TciElement **out);

// Writes the group-algebra JSON of a multilinear element in `x1..xk`.
//
// # Safety
// `e` must be a live handle; `out` must be writable.
enum TciStatus tci_encode(const struct TciElement *e, size_t k, char **out);

// Splits a permutation of `m` points along the comma-separated subset `a`.
// The three factors are written as `"f1 | f2 | f3"`.
//
// # Safety
// `perm` and `a` must be NUL-terminated strings; `out` must be writable.
enum TciStatus tci_split(size_t m, const char *perm, const char *a, bool left, char **out);

// Builds a deduction certificate for the antisymmetrized permutation over the subset `c`
// (with `|c| = d + 1`) and writes it as JSON.
//
// # Safety
// `perm` and `c` must be NUL-terminated strings; `out` must be writable.
enum TciStatus tci_reduce(size_t d,
                          size_t m,
                          size_t k,
                          const char *perm,
                          const char *c,
                          char **out);

// Replays a certificate and compares it with its stated target.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum TciStatus tci_check_certificate(const char *json, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TCI_H */
