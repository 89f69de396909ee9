#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sphfsi/store.hpp"
#include "sphfsi/vec.hpp"

namespace sphfsi {

/// Geometric region: bounding box plus membership predicate.
template <int D>
struct Region {
    Box<D> bounds{};
    std::function<bool(const Vec<D>&)> contains;
};

template <int D>
Region<D> box_region(const Box<D>& b) {
    return {b, [b](const Vec<D>& p) { return b.contains(p); }};
}

template <int D>
Region<D> ball_region(const Vec<D>& center, double diameter) {
    const double r = 0.5 * diameter;
    Box<D> b;
    for (int i = 0; i < D; ++i) {
        b.lo[i] = center[i] - r;
        b.hi[i] = center[i] + r;
    }
    return {b, [center, r](const Vec<D>& p) { return norm_sq(p - center) <= r * r; }};
}

/// Visits the regular lattice covering `bounds`, anchored at the minimum
/// corner plus dx/2, in lexicographic index order (last axis fastest).
template <int D, typename F>
void for_each_lattice_point(const Box<D>& bounds, double dx, F&& visit) {
    if (!(dx > 0.0)) throw std::invalid_argument("lattice spacing must be positive");
    std::array<std::int64_t, D> n;
    for (int a = 0; a < D; ++a) {
        const double extent = bounds.hi[a] - bounds.lo[a];
        if (extent < 0.0) return;
        n[a] = static_cast<std::int64_t>(std::floor(extent / dx + 1e-12));
        // include points at lo + dx/2 + k*dx inside [lo, hi], with slack for roundoff
        if (bounds.lo[a] + (0.5 + static_cast<double>(n[a])) * dx > bounds.hi[a] + 1e-9 * dx) --n[a];
        ++n[a];
        if (n[a] <= 0) return;
    }
    std::array<std::int64_t, D> idx{};
    while (true) {
        Vec<D> p;
        for (int a = 0; a < D; ++a) p[a] = bounds.lo[a] + (0.5 + static_cast<double>(idx[a])) * dx;
        visit(p);
        int a = D - 1;
        while (a >= 0) {
            if (++idx[a] < n[a]) break;
            idx[a] = 0;
            --a;
        }
        if (a < 0) break;
    }
}

/// Places particles of one phase on a regular grid with spacing dx inside a
/// region. Mass is rho0 * dx^d; enumeration order is deterministic, so
/// re-seeding the same config is bit-identical.
template <int D>
std::vector<std::size_t> seed_lattice(ParticleStore<D>& store, const Region<D>& region, double dx,
                                      PhaseTag tag, MaterialId mat_id, const Material& mat) {
    if (!(dx > 0.0)) throw std::invalid_argument("seed_lattice: dx must be positive");
    const double m = mat.reference_density * std::pow(dx, D);
    std::vector<std::size_t> added;
    for_each_lattice_point<D>(region.bounds, dx, [&](const Vec<D>& p) {
        if (!region.contains(p)) return;
        added.push_back(store.add(p, m, tag, mat_id));
    });
    return added;
}

}  // namespace sphfsi
