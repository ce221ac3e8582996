/* C interface to the g2kl engine.
 *
 * All functions return a g2kl_status. Strings handed out through char**
 * parameters are heap-allocated and must be released with g2kl_string_free.
 * A context is not thread-safe; use one context per thread.
 * Words may use the letters r,s,t or the digits 0,1,2; "" and "e" are the
 * identity. Output words are canonical digit strings. */
#ifndef G2KL_H
#define G2KL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(G2KL_BUILDING)
#    define G2KL_API __declspec(dllexport)
#  else
#    define G2KL_API __declspec(dllimport)
#  endif
#else
#  define G2KL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum g2kl_status {
  G2KL_OK = 0,
  G2KL_E_PARSE = 1,
  G2KL_E_INVALID_ARGUMENT = 2,
  G2KL_E_RESOURCE_LIMIT = 3,
  G2KL_E_INVARIANT = 4,
  G2KL_E_NOT_IN_CELL = 5,
  G2KL_E_CORRUPT_FILE = 6,
  G2KL_E_VERSION_MISMATCH = 7,
  G2KL_E_IO = 8,
  G2KL_E_INTERNAL = 9
} g2kl_status;

typedef enum g2kl_format {
  G2KL_FORMAT_TEXT = 0,
  G2KL_FORMAT_CSV = 1,
  G2KL_FORMAT_JSON = 2,
  G2KL_FORMAT_LATEX = 3
} g2kl_format;

typedef struct g2kl_config {
  size_t max_length;          /* longest accepted input element */
  size_t max_product_length;  /* cap on l(x) + l(y) in products */
  size_t max_support;         /* cap on intermediate product support */
  unsigned jobs;              /* worker threads for table commands */
} g2kl_config;

typedef struct g2kl_context g2kl_context;

G2KL_API const char* g2kl_version(void);
G2KL_API const char* g2kl_status_name(g2kl_status status);
G2KL_API void g2kl_config_default(g2kl_config* config);

/* config may be NULL for defaults. */
G2KL_API g2kl_status g2kl_context_create(const g2kl_config* config, g2kl_context** out);
G2KL_API void g2kl_context_destroy(g2kl_context* ctx);
/* Message of the last failed call on ctx; "" after a success. */
G2KL_API const char* g2kl_last_error(const g2kl_context* ctx);
G2KL_API void g2kl_string_free(char* s);

G2KL_API g2kl_status g2kl_reduce(g2kl_context* ctx, const char* word, char** canonical,
                                 size_t* length);
G2KL_API g2kl_status g2kl_bruhat_leq(g2kl_context* ctx, const char* u, const char* w, int* out);
/* P_{u,w} in q, e.g. "q^2+1"; "0" unless u <= w. */
G2KL_API g2kl_status g2kl_kl_poly(g2kl_context* ctx, const char* u, const char* w, char** out);
G2KL_API g2kl_status g2kl_mu(g2kl_context* ctx, const char* u, const char* w, int64_t* out);
G2KL_API g2kl_status g2kl_c_product(g2kl_context* ctx, const char* x, const char* y, char** out);

/* Lowest two-sided cell. */
G2KL_API g2kl_status g2kl_cell(g2kl_context* ctx, const char* w, char** out);
G2KL_API g2kl_status g2kl_mu_lowest(g2kl_context* ctx, const char* y, const char* w,
                                    int64_t* out);
G2KL_API g2kl_status g2kl_delta_table(g2kl_context* ctx, g2kl_format format, char** out);
/* All same-left-cell pairs (left cell of w0) with n_alpha <= bound_a and
 * n_beta <= bound_b; lists the pairs with nonzero mu. */
G2KL_API g2kl_status g2kl_mu_table(g2kl_context* ctx, unsigned bound_a, unsigned bound_b,
                                   g2kl_format format, char** out);

/* V(a1,b1) (x) V(a2,b2) in fundamental-weight coordinates. */
G2KL_API g2kl_status g2kl_repmult(g2kl_context* ctx, int a1, int b1, int a2, int b2,
                                  g2kl_format format, char** out);

G2KL_API g2kl_status g2kl_cache_load(g2kl_context* ctx, const char* path);
G2KL_API g2kl_status g2kl_cache_store(g2kl_context* ctx, const char* path);
G2KL_API g2kl_status g2kl_cache_info(g2kl_context* ctx, char** out);
G2KL_API g2kl_status g2kl_cache_clear(g2kl_context* ctx);

#ifdef __cplusplus
}
#endif

#endif
