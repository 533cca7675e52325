#ifndef PINPOINT_PINPOINT_H
#define PINPOINT_PINPOINT_H

/* C interface to the pinpoint library. All functions are thread-safe for
 * distinct handles; a handle may be shared by concurrent readers. Strings
 * returned through `char**` are owned by the caller and released with
 * pp_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PP_API __declspec(dllexport)
#else
#define PP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
  PP_OK = 0,
  PP_ERR_PARSE = 1,
  PP_ERR_DUPLICATE_ID = 2,
  PP_ERR_UNSUPPORTED = 3,
  PP_ERR_NOT_ENTAILED = 4,
  PP_ERR_RESOURCE_LIMIT = 5,
  PP_ERR_PRECONDITION = 6,
  PP_ERR_EMPTY_MEMBER = 7,
  PP_ERR_NO_REPAIR = 8,
  PP_ERR_CAP_EXCEEDED = 9,
  PP_ERR_DISAGREEMENT = 10,
  PP_ERR_IO = 11,
  PP_ERR_INVALID_ARGUMENT = 12,
  PP_ERR_INTERNAL = 13
} pp_status;

typedef enum pp_method {
  PP_METHOD_BLACKBOX = 0,
  PP_METHOD_HST = 1,
  PP_METHOD_MUSMEM = 2,
  PP_METHOD_BRUTE = 3
} pp_method;

typedef enum pp_profile { PP_PROFILE_EL = 0, PP_PROFILE_ALC = 1 } pp_profile;

/* An immutable ontology. */
typedef struct pp_ontology pp_ontology;

/* A list of axiom-ID sets. IDs inside a set follow ontology order. */
typedef struct pp_sets pp_sets;

typedef struct pp_bench_summary {
  size_t ontologies;
  size_t goals;
  size_t rows;
  size_t disagreements;
} pp_bench_summary;

/* Message of the last failed call on this thread, or "" if none. */
PP_API const char* pp_last_error(void);
PP_API const char* pp_status_name(pp_status status);
PP_API void pp_string_free(char* s);

PP_API pp_status pp_ontology_parse(const char* text, pp_ontology** out);
PP_API pp_status pp_ontology_load(const char* path, pp_ontology** out);
PP_API pp_status pp_ontology_generate(uint64_t seed, size_t n_axioms, pp_profile profile,
                                      pp_ontology** out);
PP_API void pp_ontology_free(pp_ontology* o);
PP_API size_t pp_ontology_size(const pp_ontology* o);
PP_API pp_status pp_ontology_serialize(const pp_ontology* o, char** out);
PP_API pp_status pp_ontology_save(const pp_ontology* o, const char* path);

PP_API size_t pp_sets_count(const pp_sets* s);
PP_API size_t pp_sets_size(const pp_sets* s, size_t i);
/* ID of member j of set i; valid until pp_sets_free. NULL when out of range. */
PP_API const char* pp_sets_id(const pp_sets* s, size_t i, size_t j);
/* One line per set, IDs comma-joined. */
PP_API pp_status pp_sets_format(const pp_sets* s, char** out);
PP_API void pp_sets_free(pp_sets* s);

/* Goals use the concept grammar, e.g. "(sub A C)". */
PP_API pp_status pp_entails(const pp_ontology* o, const char* goal, int* out);
/* Entailed inclusions between distinct concept names, one per line. */
PP_API pp_status pp_classify(const pp_ontology* o, char** out);

PP_API pp_status pp_core(const pp_ontology* o, const char* goal, pp_sets** out);
PP_API pp_status pp_justification(const pp_ontology* o, const char* goal, pp_sets** out);
PP_API pp_status pp_union(const pp_ontology* o, const char* goal, pp_method method,
                          pp_sets** out);
PP_API pp_status pp_justifications(const pp_ontology* o, const char* goal, pp_sets** out);
PP_API pp_status pp_repairs(const pp_ontology* o, const char* goal, pp_sets** out);

/* Inference trace of the saturation engine, one step per line. */
PP_API pp_status pp_trace(const pp_ontology* o, const char* goal, char** out);
/* Pinpointing formula in DIMACS format with axiom-variable comments. */
PP_API pp_status pp_dimacs(const pp_ontology* o, const char* goal, char** out);

/* `methods` is a comma-separated list of method names. Returns
 * PP_ERR_DISAGREEMENT after writing the CSV if methods disagree. */
PP_API pp_status pp_bench(const char* dir, const char* methods, const char* out_path,
                          int timing, pp_bench_summary* summary);

#ifdef __cplusplus
}
#endif

#endif /* PINPOINT_PINPOINT_H */
