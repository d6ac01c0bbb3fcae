#ifndef QUIVERKIT_QUIVERKIT_H
#define QUIVERKIT_QUIVERKIT_H

/*
 * C interface to quiverkit.
 *
 * Quivers and quiver morphisms are opaque, immutable handles. Every function
 * returns a qk_status; on anything other than QK_OK the message is available
 * from qk_last_error() on the same thread until the next call. Output handles
 * are owned by the caller and released with qk_quiver_free / qk_morphism_free;
 * output strings are released with qk_string_free. Output pointers are left
 * untouched on failure.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(QUIVERKIT_C_BUILD)
#define QK_API __declspec(dllexport)
#else
#define QK_API __declspec(dllimport)
#endif
#else
#define QK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qk_quiver qk_quiver;
typedef struct qk_morphism qk_morphism;

typedef enum qk_status {
  QK_OK = 0,
  QK_INVALID_ARGUMENT = 1, /* null pointer, malformed data, unknown id */
  QK_PARSE_ERROR = 2,      /* document syntax */
  QK_PRECONDITION = 3,     /* e.g. non-monic map where a mono is required */
  QK_MISMATCH = 4,         /* domain/codomain disagreement */
  QK_BUDGET_EXHAUSTED = 5, /* homomorphism search ran out of budget */
  QK_SIZE_LIMIT = 6,       /* enumeration guard exceeded */
  QK_INTERNAL = 7
} qk_status;

QK_API const char* qk_version(void);
QK_API const char* qk_last_error(void);
QK_API const char* qk_status_name(qk_status status);
QK_API void qk_string_free(char* s);

/* ---- quivers ---------------------------------------------------------- */

QK_API qk_status qk_quiver_parse(const char* text, qk_quiver** out);
/* Syntax-checks `text` and reports structural problems (duplicate ids,
 * dangling endpoints) as a JSON report instead of failing. */
QK_API qk_status qk_quiver_validate_document(const char* text, int* ok, char** report_json);
QK_API qk_status qk_quiver_serialize(const qk_quiver* q, char** out);
QK_API qk_status qk_quiver_to_dot(const qk_quiver* q, char** out);
QK_API qk_status qk_quiver_counts(const qk_quiver* q, size_t* vertices, size_t* edges);
QK_API qk_status qk_quiver_equal(const qk_quiver* a, const qk_quiver* b, int* equal);
QK_API void qk_quiver_free(qk_quiver* q);

/* ---- morphisms -------------------------------------------------------- */

QK_API qk_status qk_morphism_parse(const char* text, qk_morphism** out);
QK_API qk_status qk_morphism_serialize(const qk_morphism* m, char** out);
QK_API qk_status qk_morphism_domain(const qk_morphism* m, qk_quiver** out);
QK_API qk_status qk_morphism_codomain(const qk_morphism* m, qk_quiver** out);
/* Each flag may be NULL. */
QK_API qk_status qk_morphism_kind(const qk_morphism* m, int* mono, int* epi, int* iso);
QK_API void qk_morphism_free(qk_morphism* m);

/* ---- checks ----------------------------------------------------------- *
 * `holds` receives 1 or 0. `report_json`, when not NULL, receives an object
 * {"ok":..,"criterion":..,"violations":[..],"witness":[..]}. */

QK_API qk_status qk_is_loaded(const qk_quiver* q, int* holds, char** report_json);
QK_API qk_status qk_is_mono_injective(const qk_quiver* q, int* holds, char** report_json);
QK_API qk_status qk_is_epi_projective(const qk_quiver* q, int* holds, char** report_json);
/* QK_PRECONDITION if the map is not monic / not epic. */
QK_API qk_status qk_is_mono_essential(const qk_morphism* m, int* holds, char** report_json);
QK_API qk_status qk_is_epi_coessential(const qk_morphism* m, int* holds, char** report_json);

/* ---- constructions ---------------------------------------------------- */

QK_API qk_status qk_loading(const qk_quiver* q, qk_quiver** out);
QK_API qk_status qk_explosion(const qk_quiver* q, qk_quiver** out);
/* Embedding D -> envelope; its codomain is the envelope. */
QK_API qk_status qk_envelope(const qk_quiver* q, qk_morphism** embedding);
/* Covering map X(G) -> G; its domain is the cover. */
QK_API qk_status qk_cover(const qk_quiver* q, qk_morphism** covering_map);
QK_API qk_status qk_product(const qk_quiver* g, const qk_quiver* h, qk_morphism** first,
                            qk_morphism** second);
QK_API qk_status qk_coproduct(const qk_quiver* g, const qk_quiver* h, qk_morphism** first,
                              qk_morphism** second);
QK_API qk_status qk_equalizer(const qk_morphism* f, const qk_morphism* g,
                              qk_morphism** inclusion);
QK_API qk_status qk_coequalizer(const qk_morphism* f, const qk_morphism* g,
                                qk_morphism** quotient_map);

/* ---- search ----------------------------------------------------------- *
 * budget = 0 selects the default budget. */

QK_API qk_status qk_count_homs(const qk_quiver* g, const qk_quiver* h, uint64_t budget,
                               uint64_t* count);
/* JSON array of morphism documents. */
QK_API qk_status qk_list_homs(const qk_quiver* g, const qk_quiver* h, uint64_t budget,
                              char** json);

/* Runs the exhaustive theorem suites. `report_json` receives an array of
 * {"suite","cases","failures","first_failure","seconds"}. */
QK_API qk_status qk_verify_theorems(size_t vmax, size_t emax, uint64_t budget, int* all_passed,
                                    char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* QUIVERKIT_QUIVERKIT_H */
