#include "ng/kernels/similarity.hpp"

#if defined(NG_HAVE_NEON)

#include <arm_neon.h>

#include <cmath>

namespace ng::kernels {

// NEON variant: four slots per iteration as two double pairs. The pair
// accumulators hold stripes {0,1} and {2,3}, matching the scalar kernel's
// striping, so the output is bit-identical to it.
void similarity_batch_neon(const InventoryView* invs, std::size_t n,
                           double x, double eps, double* out) {
    const float64x2_t vx = vdupq_n_f64(x);
    const float64x2_t veps = vdupq_n_f64(eps);

    for (std::size_t k = 0; k < n; ++k) {
        const InventoryView& v = invs[k];
        float64x2_t acc01 = vdupq_n_f64(0.0);
        float64x2_t acc23 = vdupq_n_f64(0.0);
        std::int32_t i = 0;
        for (; i + 4 <= v.count; i += 4) {
            const int32x4_t wi = vld1q_s32(v.words + i);
            const int32x4_t gi = vld1q_s32(v.weights + i);
            const float64x2_t word01 = vcvtq_f64_s64(vmovl_s32(vget_low_s32(wi)));
            const float64x2_t word23 = vcvtq_f64_s64(vmovl_s32(vget_high_s32(wi)));
            const float64x2_t weight01 = vcvtq_f64_s64(vmovl_s32(vget_low_s32(gi)));
            const float64x2_t weight23 = vcvtq_f64_s64(vmovl_s32(vget_high_s32(gi)));
            const float64x2_t den01 = vaddq_f64(veps, vabsq_f64(vsubq_f64(word01, vx)));
            const float64x2_t den23 = vaddq_f64(veps, vabsq_f64(vsubq_f64(word23, vx)));
            acc01 = vaddq_f64(acc01, vdivq_f64(weight01, den01));
            acc23 = vaddq_f64(acc23, vdivq_f64(weight23, den23));
        }
        double partial[4];
        vst1q_f64(partial + 0, acc01);
        vst1q_f64(partial + 2, acc23);
        for (; i < v.count; ++i) {
            const double den = eps + std::fabs(static_cast<double>(v.words[i]) - x);
            partial[i & 3] += static_cast<double>(v.weights[i]) / den;
        }
        const double sum = (partial[0] + partial[2]) + (partial[1] + partial[3]);
        out[k] = sum / static_cast<double>(v.weight_sum);
    }
}

} // namespace ng::kernels

#endif // NG_HAVE_NEON
