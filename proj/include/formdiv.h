#ifndef FORMDIV_H
#define FORMDIV_H

/* C surface of the residue-class library. Every result is a heap-allocated
 * JSON document (release with fd_string_free); every call reports failure
 * through the status code and leaves a message for fd_last_error. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fd_status {
  FD_OK = 0,
  FD_INVALID_ARGUMENT = 1, /* bad number, class, or family text */
  FD_DATA_ERROR = 2,       /* catalog asset missing or malformed */
  FD_ORACLE_EXHAUSTED = 3, /* a brute-force check hit its ceiling */
  FD_INTERNAL_ERROR = 4
} fd_status;

/* x^2 + N y^2 versus x^2 - N y^2 */
typedef enum fd_sign { FD_PLUS = 1, FD_MINUS = -1 } fd_sign;

typedef struct fd_catalog fd_catalog;

const char* fd_version(void);

/* Message for the most recent failure on the calling thread; "" if the last
 * call succeeded. The pointer stays valid until the thread's next call. */
const char* fd_last_error(void);

void fd_string_free(char* s);

/* path == NULL opens the copy of the catalog embedded in the library. */
fd_status fd_catalog_open(const char* path, fd_catalog** out);
void fd_catalog_close(fd_catalog* cat);
int fd_catalog_size(const fd_catalog* cat);

/* All printed/corrected divergences, in catalog order. */
fd_status fd_catalog_errata(const fd_catalog* cat, char** json_out);

/* Re-derives the catalog's claims and reports per-record check results.
 * record_id == NULL verifies every record. bounds_json == NULL keeps the
 * default bounds; otherwise a JSON object whose keys mirror the "bounds"
 * block of the report (samples_per_class, harvest_bound, grid_bound, jobs,
 * ...). as_printed != 0 verifies the text exactly as typeset instead of the
 * corrected readings, so recorded errata show up as failures. */
fd_status fd_verify(const fd_catalog* cat, const char* record_id,
                    const char* bounds_json, int as_printed, char** json_out);

/* Admissible and forbidden residue classes of x^2 +- n y^2 mod 4n, with the
 * mod-2n reduction when the class set supports one. */
fd_status fd_classes(int64_t n, fd_sign sign, char** json_out);

/* Smallest coprime representation value = p a^2 +- q b^2, if any. Minus
 * forms search b <= search_bound; search_bound <= 0 keeps the default. */
fd_status fd_represent(int64_t value, int64_t p, int64_t q, fd_sign sign,
                       int64_t search_bound, char** json_out);

/* One row per odd prime P <= prime_max: the values of N mod P for which +-P
 * is an admissible class of x^2 +- N y^2. */
fd_status fd_character_table(fd_sign sign, int64_t prime_max, char** json_out);

/* Exhaustive never-a-square scan of a family written as in the catalog:
 * "4mn-(m+n)", "28mn+-13(m-n)", "4abc-b-c", "2abc+-c+b", ... */
fd_status fd_scan(const char* family_text, int64_t bound, int jobs,
                  char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* FORMDIV_H */
