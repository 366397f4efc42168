#include "ng/kernels/similarity.hpp"

#if defined(NG_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>

namespace ng::kernels {

// AVX2 variant: four slots per iteration. Conversions, abs, add and divide
// are all correctly rounded per lane, and the lane sums land in the same four
// stripes the scalar kernel uses, so the output is bit-identical to it.
void similarity_batch_avx2(const InventoryView* invs, std::size_t n,
                           double x, double eps, double* out) {
    const __m256d vx = _mm256_set1_pd(x);
    const __m256d veps = _mm256_set1_pd(eps);
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFLL));

    for (std::size_t k = 0; k < n; ++k) {
        const InventoryView& v = invs[k];
        __m256d acc = _mm256_setzero_pd();
        std::int32_t i = 0;
        for (; i + 4 <= v.count; i += 4) {
            const __m128i wi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(v.words + i));
            const __m128i gi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(v.weights + i));
            const __m256d word = _mm256_cvtepi32_pd(wi);
            const __m256d weight = _mm256_cvtepi32_pd(gi);
            const __m256d dist = _mm256_and_pd(_mm256_sub_pd(word, vx), abs_mask);
            const __m256d den = _mm256_add_pd(veps, dist);
            acc = _mm256_add_pd(acc, _mm256_div_pd(weight, den));
        }
        alignas(32) double partial[4];
        _mm256_store_pd(partial, acc);
        for (; i < v.count; ++i) {
            const double den = eps + std::fabs(static_cast<double>(v.words[i]) - x);
            partial[i & 3] += static_cast<double>(v.weights[i]) / den;
        }
        const double sum = (partial[0] + partial[2]) + (partial[1] + partial[3]);
        out[k] = sum / static_cast<double>(v.weight_sum);
    }
}

} // namespace ng::kernels

#endif // NG_HAVE_AVX2
