#pragma once

#include "sphfsi/vec.hpp"

namespace sphfsi {

/// Neumaier-compensated accumulator. Reductions that must agree across
/// worker partitions to 1e-12 relative use this instead of plain sums.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

template <int D>
struct KahanVec {
    std::array<KahanSum, D> c{};

    void add(const Vec<D>& x) {
        for (int i = 0; i < D; ++i) c[i].add(x[i]);
    }
    Vec<D> value() const {
        Vec<D> r;
        for (int i = 0; i < D; ++i) r[i] = c[i].value();
        return r;
    }
};

}  // namespace sphfsi
