/* C interface to the wnrep library. Every function returns a status code; on failure a
 * message is available from wnrep_last_error() on the calling thread. Strings returned
 * through char** are owned by the caller and released with wnrep_string_free. */
#ifndef WNREP_H
#define WNREP_H

#include <stddef.h>

#if defined(WNREP_BUILDING_LIBRARY)
#define WNREP_API __attribute__((visibility("default")))
#else
#define WNREP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wnrep_status {
  WNREP_OK = 0,
  WNREP_ERR_DIMENSION = 1,
  WNREP_ERR_VALIDATION = 2,
  WNREP_ERR_RANGE = 3,
  WNREP_ERR_PARSE = 4,
  WNREP_ERR_EMPTY_MODULE = 5,
  WNREP_ERR_NOT_ORE_INJECTIVE = 6,
  WNREP_ERR_UNSUPPORTED = 7,
  WNREP_ERR_INTERNAL = 8,
  WNREP_ERR_NULL_ARGUMENT = 9
} wnrep_status;

typedef struct wnrep_dmodule wnrep_dmodule;
typedef struct wnrep_glmodule wnrep_glmodule;
typedef struct wnrep_tensor wnrep_tensor;

/* Message of the last failed call on this thread; empty if none. */
WNREP_API const char* wnrep_last_error(void);
WNREP_API void wnrep_string_free(char* s);

WNREP_API wnrep_status wnrep_dmodule_parse(const char* text, wnrep_dmodule** out);
WNREP_API void wnrep_dmodule_free(wnrep_dmodule* m);
WNREP_API wnrep_status wnrep_dmodule_rank(const wnrep_dmodule* m, int* out);
WNREP_API wnrep_status wnrep_dmodule_describe(const wnrep_dmodule* m, char** out);

/* Parses a gl(n)-module descriptor. */
WNREP_API wnrep_status wnrep_glmodule_parse(const char* text, int n, wnrep_glmodule** out);
WNREP_API void wnrep_glmodule_free(wnrep_glmodule* m);
WNREP_API wnrep_status wnrep_glmodule_describe(const wnrep_glmodule* m, char** out);

WNREP_API wnrep_status wnrep_tensor_create(const wnrep_dmodule* P, const wnrep_glmodule* V,
                                           wnrep_tensor** out);
WNREP_API void wnrep_tensor_free(wnrep_tensor* t);
WNREP_API wnrep_status wnrep_tensor_describe(const wnrep_tensor* t, char** out);
/* Dimension of the weight space at mu (n rational strings) within the box of the radius. */
WNREP_API wnrep_status wnrep_tensor_multiplicity(const wnrep_tensor* t, const char* const* mu,
                                                 long radius, long* out);
/* 1 if T(P,V) has finite weight multiplicities, else 0. */
WNREP_API wnrep_status wnrep_finmult_criterion(const wnrep_tensor* t, int* out);
/* Case name, e.g. "TENSOR_SIMPLE". */
WNREP_API wnrep_status wnrep_classify(const wnrep_tensor* t, char** out);

typedef struct wnrep_options {
  const char* P;
  const char* V;
  const char* S;
  long window;
  long margin;
  int gen_degree;
  int samples;
  const char* format; /* "json" or "csv" */
  unsigned long long seed;
  int at;
  const char* elem;
  const char* exp;
  int n, p, m;
  const int* k_blocks;
  size_t k_block_count;
  const char* start;
  int threads; /* 0: WNREP_THREADS or 1 */
} wnrep_options;

/* Fills the defaults used by the command-line tool. */
WNREP_API void wnrep_options_init(wnrep_options* opt);
/* Runs a command (support, mult, criterion, derham, closure, localize, twist, dualize,
 * classify, levi-check). out_pass receives 1 iff all checks of the command passed. */
WNREP_API wnrep_status wnrep_run(const char* command, const wnrep_options* opt, char** out_report,
                                 int* out_pass);

#ifdef __cplusplus
}
#endif

#endif
