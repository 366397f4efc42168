#include "ng/kernels/similarity.hpp"

#include <cmath>

namespace ng::kernels {

// Reference kernel. The striped four-way accumulation is part of the kernel
// contract; see similarity.hpp.
void similarity_batch_scalar(const InventoryView* invs, std::size_t n,
                             double x, double eps, double* out) {
    for (std::size_t k = 0; k < n; ++k) {
        const InventoryView& v = invs[k];
        double partial[4] = {0.0, 0.0, 0.0, 0.0};
        for (std::int32_t i = 0; i < v.count; ++i) {
            const double den = eps + std::fabs(static_cast<double>(v.words[i]) - x);
            partial[i & 3] += static_cast<double>(v.weights[i]) / den;
        }
        const double sum = (partial[0] + partial[2]) + (partial[1] + partial[3]);
        out[k] = sum / static_cast<double>(v.weight_sum);
    }
}

} // namespace ng::kernels
