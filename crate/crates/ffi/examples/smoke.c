/* Build: cargo build --release -p vvkit-ffi, then
   cc examples/smoke.c -Iinclude ../../target/release/libvvkit_ffi.a -lm -lpthread -ldl */
#include <stdio.h>
#include "vvkit.h"

int main(void) {
    const char *pts = "{\"dim\": 2, \"points\": [[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"],"
                      "[\"0\",\"0\",\"1\"],[\"1\",\"1\",\"1\"],[\"2\",\"3\",\"1\"]]}";
    int32_t torsion_free = -1;
    if (vvkit_vv_check(pts, &torsion_free, NULL) != VVKIT_STATUS_OK) {
        fprintf(stderr, "error: %s\n", vvkit_last_error_message());
        return 2;
    }
    VvkitIdeal *j = NULL;
    char *hs = NULL;
    if (vvkit_points_ideal(pts, &j) != VVKIT_STATUS_OK || vvkit_hilbert_series_json(j, &hs) != VVKIT_STATUS_OK) {
        fprintf(stderr, "error: %s\n", vvkit_last_error_message());
        return 2;
    }
    printf("torsion_free=%d hilbert=%s\n", torsion_free, hs);
    vvkit_string_free(hs);
    vvkit_ideal_free(j);
    return 0;
}
