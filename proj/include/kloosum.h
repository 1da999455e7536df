/* C interface to the Kloosterman-sum verification library.
 *
 * All structured results come back as JSON in a malloc'd string; release it
 * with kls_string_free. Functions return KLS_OK on success; on any other
 * status, kls_last_error() describes what went wrong (thread-local).
 */
#ifndef KLOOSUM_H
#define KLOOSUM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kls_ring kls_ring;

enum kls_status {
  KLS_OK = 0,
  KLS_CHECK_FAILED = 1,
  KLS_PARSE_ERROR = 2,
  KLS_INTERNAL_ERROR = 3,
  KLS_INVALID_ARGUMENT = 4,
};

/* Ring expressions: "Z/12", "GF(9)", "GF(3,2)", "Fp[3;0,0,1]", "triv(Z/4)",
 * "sqz(2,2)", "table:/path/to/ring.json", products with " x ".
 * max_size <= 0 selects the default cap (4096). */
int kls_ring_create(const char* spec, long max_size, kls_ring** out);
void kls_ring_free(kls_ring* ring);

/* {"descriptor", "size", "characteristic", "units", "frobenius",
 *  "local_factor_sizes", "minimal_ideals", "canonical_primitive_character"} */
int kls_ring_info(const kls_ring* ring, char** json_out);

/* Sum results: {"kind", "ring", "params", "value": {"order", "coeffs"},
 * "approx": [re, im]}. Element arguments are element indices; for Z/n the
 * index is the residue. Character selectors: "trivial" | "quadratic" |
 * "index:<k>". */
int kls_sum_kloosterman(const kls_ring* ring, long a, char** json_out);
int kls_sum_twisted(const kls_ring* ring, const char* twist, long a, char** json_out);
int kls_sum_gauss(const kls_ring* ring, const char* chi, char** json_out);
/* a = -1 selects the plain Jacobi sum (target 1). */
int kls_sum_jacobi(const kls_ring* ring, const char* chi, const char* eta, long a,
                   char** json_out);
int kls_sum_classical(long m, long n, long q, char** json_out);

/* [{"id", "statement"}, ...] */
int kls_list_checks(char** json_out);

/* Runs one check (or all when check_id is NULL) with an optional pinned twist
 * selector. Emits one JSON report per line. failures_out counts failing
 * checks; the return status is KLS_OK even when checks fail. */
int kls_verify(const kls_ring* ring, const char* check_id, const char* twist,
               char** report_jsonl_out, long* failures_out);

const char* kls_last_error(void);
void kls_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* KLOOSUM_H */
