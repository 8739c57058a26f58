#include "toricflip/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace toricflip::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend detect() {
    const bool avx2 = avx2_table() != nullptr && cpu_has_avx2();
    if (const char* env = std::getenv("TORICFLIP_KERNELS")) {
        std::string v(env);
        if (v == "scalar") return Backend::Scalar;
        if (v == "avx2" && avx2) return Backend::Avx2;
    }
    return avx2 ? Backend::Avx2 : Backend::Scalar;
}

struct State {
    std::atomic<const KernelTable*> table;
    std::atomic<Backend> backend;
    State() {
        Backend b = detect();
        backend.store(b);
        table.store(b == Backend::Avx2 ? avx2_table() : &scalar_table());
    }
};

State& state() {
    static State s;
    return s;
}

}  // namespace

bool backend_available(Backend b) {
    if (b == Backend::Scalar) return true;
    return avx2_table() != nullptr && cpu_has_avx2();
}

void set_backend(Backend b) {
    if (!backend_available(b))
        throw std::invalid_argument("kernel backend not available: " + std::string(backend_name(b)));
    state().backend.store(b);
    state().table.store(b == Backend::Avx2 ? avx2_table() : &scalar_table());
}

Backend active_backend() { return state().backend.load(); }

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

const KernelTable& active() { return *state().table.load(std::memory_order_relaxed); }

}  // namespace toricflip::kernels
