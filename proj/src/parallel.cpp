#include "curv/parallel.hpp"

#include <cstdlib>
#include <string>

namespace curv {

int worker_count() {
    long requested = 0;
    if (const char* env = std::getenv("CURV_THREADS")) {
        char* end = nullptr;
        requested = std::strtol(env, &end, 10);
        if (end == env || requested < 0) requested = 0;
    }
    if (requested == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        requested = hw == 0 ? 1 : static_cast<long>(hw);
    }
    if (requested > 256) requested = 256;
    return static_cast<int>(requested);
}

}  // namespace curv
