#ifndef IHTW_H
#define IHTW_H

/* C interface to the intersection homology and blown-up cochain library.
 * Handles are opaque; every function returning ihtw_status leaves a message for
 * ihtw_last_error() on failure. Strings returned by the library stay valid until
 * the owning handle is freed. */

#include <stddef.h>

#if defined(_WIN32)
#define IHTW_API __declspec(dllexport)
#else
#define IHTW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ihtw_status {
  IHTW_OK = 0,
  IHTW_INVALID_INPUT = 1,    /* unparsable text, unknown name, bad ring or perversity */
  IHTW_INVALID_COMPLEX = 2,  /* fails the pseudomanifold checks */
  IHTW_NOT_ORIENTABLE = 3,   /* no fundamental class over the ring */
  IHTW_UNSUPPORTED = 4,      /* e.g. a non-free module over Z/m */
  IHTW_INTERNAL = 5
} ihtw_status;

typedef enum ihtw_kind {
  IHTW_HOMOLOGY = 0, /* simplicial homology, perversity ignored */
  IHTW_IH = 1,       /* intersection homology */
  IHTW_TW = 2,       /* blown-up (Thom-Whitney) cohomology */
  IHTW_GM = 3        /* cohomology of the dual of the intersection chains */
} ihtw_kind;

typedef struct ihtw_complex ihtw_complex;
typedef struct ihtw_groups ihtw_groups;
typedef struct ihtw_report ihtw_report;

/* Message of the last failed call on this thread, "" if none. */
IHTW_API const char* ihtw_last_error(void);
IHTW_API const char* ihtw_status_name(ihtw_status status);

/* Complexes: built-in names (s<n>, rp2, rp3, rp3-hex, sigma-rp3, cone:<name>,
 * susp:<name>), text in the complex file format, or a file path. */
IHTW_API ihtw_status ihtw_complex_builtin(const char* name, ihtw_complex** out);
IHTW_API ihtw_status ihtw_complex_parse(const char* text, ihtw_complex** out);
IHTW_API ihtw_status ihtw_complex_load(const char* path, ihtw_complex** out);
IHTW_API void ihtw_complex_free(ihtw_complex* complex);
IHTW_API int ihtw_complex_dimension(const ihtw_complex* complex);
IHTW_API size_t ihtw_complex_count(const ihtw_complex* complex, int dim);
/* Report of the pseudomanifold checks; passed is 1 when the complex is usable. */
IHTW_API ihtw_status ihtw_complex_validate(const ihtw_complex* complex, ihtw_report** out);

/* Groups of the given kind in degrees first..last. ring: "Z", "Q" or "Zmod:<m>".
 * perversity: "zero", "top", "clip:<k>" or "list:<v0,...,vn>"; may be NULL for
 * IHTW_HOMOLOGY. */
IHTW_API ihtw_status ihtw_compute(const ihtw_complex* complex, ihtw_kind kind, const char* ring,
                                  const char* perversity, int first, int last, ihtw_groups** out);
IHTW_API void ihtw_groups_free(ihtw_groups* groups);
IHTW_API int ihtw_groups_first(const ihtw_groups* groups);
IHTW_API int ihtw_groups_last(const ihtw_groups* groups);
/* "Z^2 + Z/2", "0", "Q", "(Z/3)^2"; NULL outside first..last. */
IHTW_API const char* ihtw_groups_string(const ihtw_groups* groups, int degree);
IHTW_API size_t ihtw_groups_rank(const ihtw_groups* groups, int degree);
IHTW_API size_t ihtw_groups_torsion_count(const ihtw_groups* groups, int degree);
/* Decimal invariant factor i of the given degree, NULL when out of range. */
IHTW_API const char* ihtw_groups_torsion(const ihtw_groups* groups, int degree, size_t i);

/* Verifications. IHTW_OK means the run completed; the verdict is in the report. */
IHTW_API ihtw_status ihtw_verify_factorization(const ihtw_complex* complex, const char* ring,
                                               const char* const* perversities, size_t count,
                                               ihtw_report** out);
IHTW_API ihtw_status ihtw_check_zero_top(const ihtw_complex* complex, const char* ring, ihtw_report** out);
IHTW_API ihtw_status ihtw_check_cap_identities(const ihtw_complex* complex, const char* ring,
                                               ihtw_report** out);
IHTW_API ihtw_status ihtw_demo_sigma_rp3(ihtw_report** out);

IHTW_API int ihtw_report_passed(const ihtw_report* report);
IHTW_API size_t ihtw_report_line_count(const ihtw_report* report);
IHTW_API const char* ihtw_report_line(const ihtw_report* report, size_t i);
IHTW_API void ihtw_report_free(ihtw_report* report);

/* GM perversities of length n + 1, in lexicographic order. */
IHTW_API size_t ihtw_gm_perversity_count(int n);
/* Writes "list:v0,...,vn" (NUL terminated) into buffer; IHTW_INVALID_INPUT if it
 * does not fit or index is out of range. */
IHTW_API ihtw_status ihtw_gm_perversity_spec(int n, size_t index, char* buffer, size_t size);
/* Writes "(v0,...,vn)" for a perversity expression. */
IHTW_API ihtw_status ihtw_perversity_values(const char* expr, int n, char* buffer, size_t size);

#ifdef __cplusplus
}
#endif

#endif
