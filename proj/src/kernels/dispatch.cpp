#include "ng/kernels/similarity.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ng::kernels {

namespace {

constexpr std::array kAll = {
    KernelInfo{"scalar", &similarity_batch_scalar},
#if defined(NG_HAVE_AVX2)
    KernelInfo{"avx2", &similarity_batch_avx2},
#endif
#if defined(NG_HAVE_NEON)
    KernelInfo{"neon", &similarity_batch_neon},
#endif
};

bool cpu_supports(std::string_view name) {
    if (name == "scalar") return true;
#if defined(NG_HAVE_AVX2) && defined(__GNUC__)
    if (name == "avx2") return __builtin_cpu_supports("avx2") != 0;
#endif
#if defined(NG_HAVE_NEON)
    if (name == "neon") return true;  // baseline on aarch64
#endif
    return false;
}

KernelInfo pick() {
    if (const char* forced = std::getenv("NG_KERNEL")) {
        for (const KernelInfo& k : kAll) {
            if (forced == std::string_view(k.name)) {
                if (!cpu_supports(k.name))
                    throw std::runtime_error(std::string("NG_KERNEL=") + forced + " is not supported on this CPU");
                return k;
            }
        }
        throw std::runtime_error(std::string("NG_KERNEL=") + forced + " is not compiled into this binary");
    }
    for (auto it = kAll.rbegin(); it != kAll.rend(); ++it)
        if (cpu_supports(it->name)) return *it;
    return kAll.front();
}

} // namespace

std::span<const KernelInfo> available_kernels() { return {kAll.data(), kAll.size()}; }

KernelInfo active_kernel() {
    static const KernelInfo chosen = pick();
    return chosen;
}

} // namespace ng::kernels
