/* C interface to the zoa constraint-deletion solver.
 *
 * All functions that can fail take a `char** err` out-parameter; on failure
 * they return NULL (pointer results) or a negative error code (int results)
 * and, when err is non-NULL, store a malloc'd message there. Free messages
 * and other returned strings with zoa_string_free. Handles are opaque.
 */
#ifndef ZOA_H
#define ZOA_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct zoa_problem zoa_problem;
typedef struct zoa_result zoa_result;

enum {
  ZOA_OK = 0,
  ZOA_ERR_INPUT = 1,   /* malformed instance, options, or witness file */
  ZOA_ERR_INTERNAL = 2 /* violated internal invariant */
};

/* Instance text in the documented line format. */
zoa_problem* zoa_problem_parse(const char* text, char** err);
zoa_problem* zoa_problem_load(const char* path, char** err);
/* Deterministic generator; family is one of zoa_generator_families().
 * size scales the instance, extra (-1 for default, 0 for a forest) adds
 * edges beyond a spanning tree, k is the stored budget. */
zoa_problem* zoa_problem_generate(const char* family, uint64_t seed, int size, int extra, int k,
                                  char** err);
void zoa_problem_free(zoa_problem* p);

/* Canonical instance text (round-trips through zoa_problem_parse). */
char* zoa_problem_dump(const zoa_problem* p, char** err);
/* Budget stored on the problem (generator option; parsed files carry 0). */
int zoa_problem_budget(const zoa_problem* p);
/* Space-separated family names; static storage, do not free. */
const char* zoa_generator_families(void);

/* Decides whether deleting at most k vertices makes the problem satisfiable.
 * strategy: "auto" (problem-specific branching) or "generic" (domain
 * enumeration). Returns ZOA_OK and a result handle, or an error code. */
int zoa_solve(const zoa_problem* p, int k, const char* strategy, zoa_result** out, char** err);
/* Finds the smallest budget in [0, max_k] with a yes answer; the result is
 * that budget's witness, or a no-result when even max_k fails. */
int zoa_solve_min(const zoa_problem* p, int max_k, const char* strategy, zoa_result** out,
                  char** err);
void zoa_result_free(zoa_result* r);

int zoa_result_yes(const zoa_result* r);
int zoa_result_witness_len(const zoa_result* r);
/* 0-based vertex id of the i-th witness entry. */
int32_t zoa_result_witness(const zoa_result* r, int i);
/* `key=value` lines (nodes, unit_rounds, max_branch, oracle_calls). */
char* zoa_result_stats(const zoa_result* r);

/* Checks a deletion set against the problem's own predicate (connectivity,
 * cycle, orientation, or assignment check). witness holds 0-based ids.
 * Returns 1 (valid), 0 (invalid), or a negative error code. */
int zoa_certify(const zoa_problem* p, const int32_t* witness, int len, char** err);

/* Dual certificate on the encoded constraint instance: `value num/2`, one
 * `cover v num/2` line per weighted vertex (1-based encoded ids), and the
 * packing structures. With cap_k >= 0 the computation stops once every cover
 * is provably larger than cap_k and emits `lb num/2` instead. */
char* zoa_certificate(const zoa_problem* p, int cap_k, char** err);

void zoa_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ZOA_H */
