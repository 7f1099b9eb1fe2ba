/* C interface to the t2w weight-system library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Strings returned through char** out-parameters
 * are heap allocated and released with t2w_string_free. Every function
 * returns a t2w_status; on failure t2w_last_error() describes the problem
 * (thread-local, valid until the next call on the same thread). */
#ifndef T2W_H
#define T2W_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define T2W_API __declspec(dllexport)
#else
#  define T2W_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum t2w_status {
  T2W_OK = 0,
  T2W_DONE = 1, /* enumerator exhausted */
  T2W_ERR_PARSE = 10,
  T2W_ERR_NOT_COPRIME = 11,
  T2W_ERR_ILLEGAL_DETERMINANT = 12,
  T2W_ERR_ILLEGAL_SYSTEM = 13,
  T2W_ERR_NOT_UNIMODULAR = 14,
  T2W_ERR_ISOTROPY_MISMATCH = 15,
  T2W_ERR_ORIENTATION_MISMATCH = 16,
  T2W_ERR_ILLEGAL_JUNCTION = 17,
  T2W_ERR_NO_SOLUTION = 18,
  T2W_ERR_ILLEGAL_PARAMETERS = 19,
  T2W_ERR_OVERFLOW = 20,
  T2W_ERR_INVALID_ARGUMENT = 21,
  T2W_ERR_INTERNAL = 22
} t2w_status;

typedef enum t2w_mode { T2W_MODE_STRICT = 0, T2W_MODE_WEAK = 1 } t2w_mode;

typedef struct t2w_system t2w_system;
typedef struct t2w_decomposition t2w_decomposition;
typedef struct t2w_enumerator t2w_enumerator;

typedef struct t2w_bounds {
  int64_t max_genus;
  int64_t max_cycles; /* boundary components, circles and fixed cycles */
  int64_t max_cycle_length;
  int64_t max_weight_entry;
  int64_t max_exceptional;
  int64_t max_alpha;
} t2w_bounds;

T2W_API const char* t2w_version(void);
T2W_API const char* t2w_last_error(void);
T2W_API const char* t2w_status_name(t2w_status status);
T2W_API void t2w_string_free(char* s);

/* Documents */
T2W_API t2w_status t2w_system_parse(const char* text, size_t length, t2w_system** out);
T2W_API t2w_status t2w_system_serialize(const t2w_system* w, char** out);
T2W_API t2w_status t2w_system_clone(const t2w_system* w, t2w_system** out);
T2W_API void t2w_system_free(t2w_system* w);

/* Legality. *legal is 1 or 0; *report is "legal\n" or rule-by-rule text. */
T2W_API t2w_status t2w_system_validate(const t2w_system* w, int* legal, char** report);

/* Equivalence. Both systems must be legal. In weak mode, when isomorphic and
 * witness is non-null, *witness is "reverse=<0|1> A=[[a,b],[c,d]]". */
T2W_API t2w_status t2w_system_compare(const t2w_system* a, const t2w_system* b, t2w_mode mode,
                                      int* isomorphic, char** witness);
T2W_API t2w_status t2w_system_canonical(const t2w_system* w, t2w_mode mode, t2w_system** out);
T2W_API t2w_status t2w_system_reverse_orientation(const t2w_system* w, t2w_system** out);
T2W_API t2w_status t2w_system_basis_change(const t2w_system* w, int64_t a, int64_t b, int64_t c,
                                           int64_t d, t2w_system** out);

/* Local models */
T2W_API t2w_status t2w_system_localmodels(const t2w_system* w, char** listing);
T2W_API t2w_status t2w_space_of_directions(int64_t m, int64_t n, int64_t m2, int64_t n2,
                                           int64_t* r, int64_t* s);

/* Surgery */
T2W_API t2w_status t2w_system_is_simple(const t2w_system* w, int* simple);
T2W_API t2w_status t2w_system_decompose(const t2w_system* w, t2w_decomposition** out);
T2W_API size_t t2w_decomposition_piece_count(const t2w_decomposition* d);
T2W_API t2w_status t2w_decomposition_manifold(const t2w_decomposition* d, t2w_system** out);
T2W_API t2w_status t2w_decomposition_piece(const t2w_decomposition* d, size_t index,
                                           t2w_system** out);
/* JSON manifest; names may be null, in which case pieces are piece_1.json, ... */
T2W_API t2w_status t2w_decomposition_manifest(const t2w_decomposition* d,
                                              const char* const* piece_names,
                                              const char* manifold_name, char** out);
T2W_API t2w_status t2w_decomposition_reassemble(const t2w_decomposition* d, t2w_system** out);
T2W_API void t2w_decomposition_free(t2w_decomposition* d);

/* Generators */
T2W_API t2w_status t2w_generate_suspension(int64_t p, int64_t q, int64_t m, int64_t n,
                                           int orientation, t2w_system** out);
T2W_API t2w_status t2w_generate_weighted_projective(int64_t r1, int64_t r2, int64_t r3,
                                                    t2w_system** out);

/* Enumeration: t2w_enumerator_next returns T2W_OK with *out set, or T2W_DONE. */
T2W_API t2w_status t2w_enumerator_create(const t2w_bounds* bounds, t2w_enumerator** out);
T2W_API t2w_status t2w_enumerator_next(t2w_enumerator* e, t2w_system** out);
T2W_API void t2w_enumerator_free(t2w_enumerator* e);

#ifdef __cplusplus
}
#endif

#endif /* T2W_H */
