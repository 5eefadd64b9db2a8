/*
 * C interface to the essential ideal graph library.
 *
 * A study is an opaque, immutable handle for one modulus n. All functions
 * return an ezn_status; on failure the thread-local message from
 * ezn_last_error() describes the cause. Strings returned through char** are
 * heap-allocated and must be released with ezn_string_free().
 *
 * Handles are safe to share between threads for concurrent reads.
 */
#ifndef EZN_EZN_H
#define EZN_EZN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EZN_BUILDING_LIBRARY)
#    define EZN_API __declspec(dllexport)
#  else
#    define EZN_API __declspec(dllimport)
#  endif
#else
#  define EZN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ezn_status {
    EZN_OK = 0,
    EZN_ERROR_DOMAIN = 1,           /* n prime, n < 4, or no host graph for a prime power */
    EZN_ERROR_INVALID_ARGUMENT = 2, /* null pointer, bad enum, tolerance <= 0 */
    EZN_ERROR_BUFFER_TOO_SMALL = 3, /* *count holds the required size */
    EZN_ERROR_NUMERIC = 4,          /* eigensolver did not converge */
    EZN_ERROR_INTERNAL = 5
} ezn_status;

typedef enum ezn_matrix_kind {
    EZN_MATRIX_ADJACENCY = 0,
    EZN_MATRIX_LAPLACIAN = 1,
    EZN_MATRIX_SIGNLESS = 2,
    EZN_MATRIX_NORMALIZED = 3
} ezn_matrix_kind;

typedef enum ezn_scope { EZN_SCOPE_FULL = 0, EZN_SCOPE_SUBGRAPH = 1 } ezn_scope;

typedef enum ezn_method {
    EZN_METHOD_STRUCTURE = 0, /* class-structure route */
    EZN_METHOD_BRUTEFORCE = 1 /* dense eigensolve of the definitional graph */
} ezn_method;

typedef enum ezn_format { EZN_FORMAT_TEXT = 0, EZN_FORMAT_JSON = 1, EZN_FORMAT_CSV = 2 } ezn_format;

typedef enum ezn_export_target { EZN_EXPORT_GRAPH = 0, EZN_EXPORT_HOST = 1, EZN_EXPORT_AIG = 2 } ezn_export_target;

typedef enum ezn_export_format { EZN_EXPORT_DOT = 0, EZN_EXPORT_EDGE_LIST = 1 } ezn_export_format;

typedef struct ezn_study ezn_study;

typedef struct ezn_summary {
    uint64_t n;
    uint32_t k;
    uint64_t ideal_count;     /* T */
    uint64_t essential_count; /* m */
    uint64_t class_count;     /* 2^k - 2, or 0 for prime powers */
    uint64_t edge_count;
} ezn_summary;

typedef struct ezn_connectivity {
    uint64_t n, T, m, eta;
    double b, a;
    uint64_t kappa_formula, kappa_maxflow;
    int complement_connected;
    int b_equals_T;
    int consistent;
    char case_label[24]; /* prime-power | squarefree-k2 | squarefree-k>=3 | mixed */
    char a_vs_kappa[24]; /* equal | strict-less | not-applicable */
} ezn_connectivity;

typedef struct ezn_verify_result {
    uint64_t n;
    int skipped;          /* prime or below 4 */
    int passed;           /* every check passed (1 when skipped) */
    uint32_t checks_run;
    double max_deviation; /* worst spectrum deviation seen */
    char failed_check[48];
    char detail[256];
} ezn_verify_result;

EZN_API const char* ezn_version(void);
EZN_API const char* ezn_status_string(ezn_status status);
EZN_API const char* ezn_last_error(void);
EZN_API void ezn_string_free(char* s);

EZN_API ezn_status ezn_study_create(uint64_t n, double tolerance, ezn_study** out);
EZN_API void ezn_study_destroy(ezn_study* study);

EZN_API ezn_status ezn_study_summary(const ezn_study* study, ezn_summary* out);

/* Eigenvalues ascending. With values == NULL or capacity too small, *count
 * receives the required length and EZN_ERROR_BUFFER_TOO_SMALL is returned
 * (EZN_OK when values == NULL). */
EZN_API ezn_status ezn_study_spectrum(const ezn_study* study, ezn_matrix_kind kind, ezn_scope scope,
                                      ezn_method method, double* values, size_t capacity, size_t* count);

EZN_API ezn_status ezn_study_connectivity(const ezn_study* study, ezn_connectivity* out);
EZN_API ezn_status ezn_study_laplacian_integral(const ezn_study* study, int* integral, char** certificate);

/* Reports. analyze supports TEXT and JSON; connectivity supports all three
 * formats (CSV yields one row without header). */
EZN_API ezn_status ezn_study_analyze(const ezn_study* study, ezn_format format, char** out);
EZN_API ezn_status ezn_study_spectrum_report(const ezn_study* study, ezn_matrix_kind kind, ezn_scope scope,
                                             ezn_format format, char** out);
EZN_API ezn_status ezn_study_connectivity_report(const ezn_study* study, ezn_format format, char** out);
EZN_API ezn_status ezn_study_export(const ezn_study* study, ezn_export_target target, ezn_export_format format,
                                    char** out);

EZN_API const char* ezn_connectivity_csv_header(void);

/* Full cross-check of one n. Primes and n < 4 are reported as skipped. */
EZN_API ezn_status ezn_verify(uint64_t n, double tolerance, ezn_verify_result* out);

#ifdef __cplusplus
}
#endif

#endif /* EZN_EZN_H */
