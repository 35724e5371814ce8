#include "sftkit/entropy.hpp"

#include <cmath>

#include "sftkit/compiled.hpp"

namespace sftkit::entropy {

BigUint count_admissible_blocks_sided(const core::SftSpec& X, int n) {
    if (n < 1) throw InputError("side length must be >= 1");
    core::CompiledSpec cs(X);
    return core::count_admissible(cs, Box::sided(X.dim(), n));
}

EntropyEstimate entropy_upper_bound(const core::SftSpec& X, int n) {
    EntropyEstimate e;
    e.side = n;
    e.count = count_admissible_blocks_sided(X, n);
    if (!e.count.is_zero()) {
        double cells = std::pow(static_cast<double>(n), X.dim());
        e.value = e.count.log2() / cells;
    }
    return e;
}

}  // namespace sftkit::entropy
