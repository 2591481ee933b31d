// Reference implementation of the grid minimizer: one plain loop nest over
// (tau1, tau2, corner), no vectorization hints, no threads.

#include "grid_kernel.hpp"

namespace fde::detail {

GridHit scan_serial(const CumulativeBounds& g) {
    GridHit best;
    const int n = static_cast<int>(g.tau.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            for (int corner = 0; corner < 4; ++corner) {
                const double v = corner_value(g, i, j, corner);
                if (v < best.value) best = {v, i, j, corner};
            }
        }
    }
    return best;
}

}  // namespace fde::detail
