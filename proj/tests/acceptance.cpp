// Acceptance suite driver: runs every criterion through the shared-library
// C API and prints one PASS/FAIL line per criterion. Exit code 0 only when
// all criteria hold.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "weylcone.h"

int main() {
    wc_verify* v = nullptr;
    wc_status s = wc_verify_run(/*seed=*/0, /*threads=*/0, /*verbose=*/0, &v);
    if (s != WC_OK) {
        std::fprintf(stderr, "acceptance: failed to run: %s (%s)\n", wc_status_name(s),
                     wc_last_error());
        return 2;
    }
    bool all = true;
    for (size_t i = 0; i < wc_verify_count(v); ++i) {
        int32_t id = 0, passed = 0;
        double seconds = 0.0;
        char name[256];
        char detail[4096];
        size_t nn = 0, nd = 0;
        if (wc_verify_item(v, i, &id, &passed, &seconds, name, sizeof(name), &nn, detail,
                           sizeof(detail), &nd) != WC_OK) {
            std::fprintf(stderr, "acceptance: could not fetch item %zu: %s\n", i, wc_last_error());
            return 2;
        }
        std::printf("%s  criterion %2d  (%7.2fs)  %s\n      %s\n", passed ? "PASS" : "FAIL", id,
                    seconds, name, detail);
        std::fflush(stdout);
        all = all && passed;
    }
    wc_verify_destroy(v);
    std::printf(all ? "acceptance: ALL CRITERIA PASSED\n" : "acceptance: FAILURES PRESENT\n");
    return all ? 0 : 1;
}
