#include "polycert/exec.hpp"

#include <omp.h>

namespace polycert {

namespace {
int g_default_threads = 0;
}

void set_thread_limit(int n) {
    if (g_default_threads == 0) g_default_threads = omp_get_max_threads();
    omp_set_num_threads(n > 0 ? n : g_default_threads);
}

int thread_limit() { return omp_get_max_threads(); }

}  // namespace polycert
