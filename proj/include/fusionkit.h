/* C interface to fusionkit. Every call returns FK_OK or an error code and records a
 * thread-local message readable with fk_last_error(). Strings returned through char** are
 * JSON documents owned by the caller and released with fk_string_free(). */
#ifndef FUSIONKIT_H
#define FUSIONKIT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(FUSIONKIT_BUILDING)
#define FK_API __attribute__((visibility("default")))
#else
#define FK_API
#endif

typedef enum fk_status {
  FK_OK = 0,
  FK_INVALID_PERMUTATION = 1,
  FK_ORDER_BOUND_EXCEEDED,
  FK_UNKNOWN_CATALOG_NAME,
  FK_PARSE_ERROR,
  FK_NOT_A_SUBGROUP,
  FK_IMAGE_NOT_CONTAINED,
  FK_NOT_SYLOW,
  FK_NOT_A_P_GROUP,
  FK_SEED_NOT_INJECTIVE,
  FK_NOT_A_SUBGROUP_OF_P,
  FK_NOT_AN_ISOMORPHISM,
  FK_PRIME_MISMATCH,
  FK_NOT_STRONGLY_CLOSED,
  FK_NOT_A_SUBSYSTEM,
  FK_NOT_FULLY_NORMALIZED,
  FK_NOT_FULLY_CENTRALIZED,
  FK_NOT_SATURATED,
  FK_SATURATION_VALIDATION_FAILED,
  FK_NO_DECOMPOSITION,
  FK_NOT_CENTRIC,
  FK_THEOREM_VIOLATION,
  FK_INCONSISTENT_PARTIAL,
  FK_POSTCONDITION_VIOLATION,
  FK_INDEX_NOT_COPRIME,
  FK_NOT_NORMAL_IN_AUT_F,
  FK_CORE_UNDEFINED,
  FK_PRECONDITION_FAILED,
  FK_HOST_MISMATCH,
  FK_INTERNAL = 99
} fk_status;

typedef struct fk_group fk_group;
typedef struct fk_system fk_system;

FK_API const char* fk_last_error(void);
FK_API const char* fk_status_name(int status);
FK_API void fk_string_free(char* s);

/* A catalog name or a path to a group spec file. prime 0 takes the prime from the spec. */
FK_API int fk_group_load(const char* path_or_name, int prime, fk_group** out);
FK_API void fk_group_free(fk_group* g);
FK_API int fk_group_order(const fk_group* g);
FK_API int fk_group_prime(const fk_group* g);
/* {"name", "order", "prime", "sylow_order", "subgroups"} */
FK_API int fk_group_info(const fk_group* g, char** json);

/* Subgroup arguments are either generator lists in cycle notation separated by ';'
 * (elements of the loaded group) or canonical keys of host subgroups ("0,3,5").
 * NULL means the default: the whole group for `acting`, the Sylow subgroup of `acting`
 * inside the host for `base`. */
FK_API int fk_system_build(fk_group* g, const char* acting, const char* base, fk_system** out);
FK_API int fk_system_inner(const fk_system* ctx, const char* base, fk_system** out);
FK_API void fk_system_free(fk_system* s);
FK_API int fk_system_json(const fk_system* s, char** json);
FK_API int fk_system_equal(const fk_system* a, const fk_system* b, int* out);

FK_API int fk_saturated(const fk_system* f, char** json);
FK_API int fk_strongly_closed(const fk_system* f, char** json);
FK_API int fk_normality(const fk_system* f, const fk_system* e, char** json);
FK_API int fk_quotient(const fk_system* f, const char* kernel, fk_system** out, char** json);
FK_API int fk_opprime(const fk_system* e, fk_system** out);
/* aut_map_json NULL checks the map of e itself. */
FK_API int fk_aut_map(const fk_system* e, char** json);
FK_API int fk_map_check(const fk_system* f, const char* aut_map_json, char** json);
FK_API int fk_wedge(const fk_system* f, const fk_system* e1, const fk_system* e2, fk_system** out);
FK_API int fk_based(const fk_system* f, const char* t, char** json);
FK_API int fk_hypercentre(const fk_system* f, char** json);
FK_API int fk_perfect(const fk_system* f, char** json);
/* t NULL runs every strongly closed subgroup up to order max_t. */
FK_API int fk_theorem_a(const fk_system* f, const char* t, int max_t, char** json);

FK_API int fk_example(const char* name, char** json);
FK_API int fk_example_names(char** json);
FK_API int fk_sweep(int max_order, int max_t, int oracle, char** json);

#ifdef __cplusplus
}
#endif

#endif /* FUSIONKIT_H */
