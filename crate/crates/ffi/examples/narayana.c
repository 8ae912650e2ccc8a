/* Prints the associahedron h-matrix and checks it against OEIS A001263.
 *
 *   cargo build -p riordan-ffi
 *   cc crates/ffi/examples/narayana.c -Icrates/ffi/include \
 *      target/debug/libriordan_ffi.a -lpthread -ldl -lm -o narayana
 */
#include <stdio.h>

#include "riordan.h"

int main(void) {
    RiordanMatrix *h = NULL;
    if (riordan_polytope_matrix(RIORDAN_POLYTOPE_ASSOCIAHEDRON, RIORDAN_WHICH_H, 6, &h) != RIORDAN_STATUS_OK) {
        fprintf(stderr, "error: %s\n", riordan_last_error());
        return 1;
    }
    size_t size = 0;
    riordan_matrix_size(h, &size);
    for (size_t n = 0; n < size; n++) {
        for (size_t k = 0; k <= n; k++) {
            int64_t v = 0;
            riordan_matrix_entry_i64(h, n, k, &v);
            printf(k ? " %lld" : "%lld", (long long)v);
        }
        printf("\n");
    }
    RiordanStatus status = riordan_matrix_check_oeis(h, "A001263");
    printf("A001263: %s\n", status == RIORDAN_STATUS_OK ? "match" : riordan_last_error());
    riordan_matrix_free(h);
    return status == RIORDAN_STATUS_OK ? 0 : 1;
}
