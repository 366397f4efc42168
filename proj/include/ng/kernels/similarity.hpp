#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace ng::kernels {

// Raw view of one inventory, the unit of work for the similarity kernels.
// `words[i]` / `weights[i]` for i < count; `weight_sum` is the exact integer
// sum of the weights.
struct InventoryView {
    const std::int32_t* words;
    const std::int32_t* weights;
    std::int32_t count;
    std::int64_t weight_sum;
};

// similarity_batch_*: for every inventory k computes
//
//     out[k] = (1 / weight_sum_k) * sum_i weights[i] / (eps + |words[i] - x|)
//
// All variants accumulate an inventory into four partial sums striped by slot
// index (slot i feeds partial i & 3) and combine them as
// (p0 + p2) + (p1 + p3). Every per-slot operation is a correctly rounded
// IEEE double operation in each variant, so the results are bit-identical
// across scalar, AVX2 and NEON. The equivalence tests assert exactly that.
void similarity_batch_scalar(const InventoryView* invs, std::size_t n,
                             double x, double eps, double* out);

#if defined(NG_HAVE_AVX2)
void similarity_batch_avx2(const InventoryView* invs, std::size_t n,
                           double x, double eps, double* out);
#endif

#if defined(NG_HAVE_NEON)
void similarity_batch_neon(const InventoryView* invs, std::size_t n,
                           double x, double eps, double* out);
#endif

using SimilarityBatchFn = void (*)(const InventoryView*, std::size_t,
                                   double, double, double*);

struct KernelInfo {
    const char* name;
    SimilarityBatchFn fn;
};

// Every variant compiled into this binary, scalar first.
std::span<const KernelInfo> available_kernels();

// The variant the dispatcher would pick on this machine: the widest one the
// CPU supports, or the one named by the NG_KERNEL environment variable
// (throws std::runtime_error for an unknown or unsupported name).
KernelInfo active_kernel();

} // namespace ng::kernels
