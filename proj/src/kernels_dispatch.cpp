#include <atomic>
#include <stdexcept>

#include "dhsim/kernels.hpp"

namespace dhsim::kernels {

namespace detail {
extern const Kernels scalar_table;
const Kernels* avx2_table_ptr();
}  // namespace detail

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Kernels* pick_best() {
    if (const Kernels* t = detail::avx2_table_ptr(); t != nullptr && cpu_has_avx2_fma())
        return t;
    return &detail::scalar_table;
}

std::atomic<const Kernels*> g_active{nullptr};

}  // namespace

bool supported(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
            return detail::avx2_table_ptr() != nullptr && cpu_has_avx2_fma();
    }
    return false;
}

const Kernels& table(Isa isa) {
    if (isa == Isa::Avx2) {
        if (const Kernels* t = detail::avx2_table_ptr()) return *t;
        throw std::runtime_error("AVX2 kernels not built into this binary");
    }
    return detail::scalar_table;
}

const Kernels& active() {
    const Kernels* t = g_active.load(std::memory_order_acquire);
    if (t == nullptr) {
        t = pick_best();
        g_active.store(t, std::memory_order_release);
    }
    return *t;
}

void force(Isa isa) {
    if (!supported(isa)) throw std::runtime_error("requested kernel ISA not supported here");
    g_active.store(&table(isa), std::memory_order_release);
}

void reset_dispatch() { g_active.store(pick_best(), std::memory_order_release); }

}  // namespace dhsim::kernels
