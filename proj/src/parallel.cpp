#include "mrsim/parallel.hpp"

#include <atomic>
#include <thread>

namespace mrsim::parallel {

namespace {

int hardware_default() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
#endif
}

std::atomic<int>& worker_setting() {
    static std::atomic<int> value{0};  // 0 = hardware default
    return value;
}

}  // namespace

void set_worker_count(int n) { worker_setting().store(n > 0 ? n : 0); }

int worker_count() {
    const int v = worker_setting().load();
    return v > 0 ? v : hardware_default();
}

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

}  // namespace mrsim::parallel
