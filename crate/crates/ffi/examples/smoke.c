#include <stdio.h>
#include <string.h>

#include "orbitrough.h"

int main(void) {
    OrGraph *g = NULL;
    if (orbitrough_graph_family("path:5", &g) != ORBITROUGH_OK) {
        return 1;
    }
    char *json = NULL;
    if (orbitrough_orbits_json(g, &json) != ORBITROUGH_OK) {
        return 2;
    }
    int ok = strcmp(json, "{\"k\":3,\"orbits\":[[0,4],[1,3],[2]]}") == 0;
    puts(json);
    orbitrough_string_free(json);

    size_t attrs[] = {0};
    size_t target[] = {1, 2};
    size_t num = 0, den = 0;
    orbitrough_rough_membership(g, attrs, 1, target, 2, 3, &num, &den);
    ok = ok && num == 2 && den == 3;

    OrGraph *bad = NULL;
    ok = ok && orbitrough_graph_family("nope:1", &bad) == ORBITROUGH_ERR_PARSE;
    ok = ok && bad == NULL && orbitrough_last_error_message() != NULL;
    orbitrough_graph_free(g);
    return ok ? 0 : 3;
}
