#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sphfsi/material.hpp"
#include "sphfsi/vec.hpp"

namespace sphfsi {

inline constexpr double kKernelSupportScale = 3.0;  // r_c = 3 h
inline constexpr double kVerletSkinFactor = 0.1;    // pair radius r_c + 0.1 h

/// Piecewise-constant time schedule: value of the first piece whose t_end
/// has not passed; the last value persists beyond the final t_end.
struct Schedule {
    struct Piece {
        double t_end;
        double value;
    };
    std::vector<Piece> pieces;

    bool empty() const { return pieces.empty(); }
    double value_at(double t) const {
        for (const auto& p : pieces)
            if (t <= p.t_end) return p.value;
        return pieces.back().value;
    }
};

/// Rigid wall group with prescribed translation. Boundary particles of the
/// group drift with velocity(t); acceleration enters the pressure
/// extrapolation and defaults to a central difference of velocity(t).
template <int D>
struct WallGroup {
    std::string name;
    std::function<Vec<D>(double)> velocity;      // null = fixed wall
    std::function<Vec<D>(double)> acceleration;  // null = differentiate velocity

    Vec<D> velocity_at(double t) const { return velocity ? velocity(t) : Vec<D>::zero(); }
    Vec<D> acceleration_at(double t) const {
        if (acceleration) return acceleration(t);
        if (!velocity) return Vec<D>::zero();
        const double e = 1e-6;
        return (velocity(t + e) - velocity(t - e)) / (2.0 * e);
    }
};

struct OutputPlan {
    double snapshot_interval = 0.0;    // 0 = no snapshots
    double trajectory_interval = 0.0;  // 0 = no body trajectories
    bool shepard_grid = false;         // filtered velocity/temperature grid dumps
    double grid_spacing = 0.0;         // 0 = particle spacing
    std::string directory = "out";
};

enum class TransitionMode : std::uint8_t { None, Temperature, Concentration };

struct GeometryDecl {
    std::string name;
    int dimension;
};

template <int D>
struct ScenarioConfig {
    std::string name;
    double dx = 0.0;
    double smoothing_length = 0.0;  // defaults to dx
    Box<D> domain{};
    std::array<bool, D> periodic{};
    std::array<std::array<bool, 2>, D> wall_faces{};  // [axis][side], side 0 = low
    double cell_edge_override = 0.0;                  // 0 = derive from support radius

    MaterialTable materials;
    std::vector<Vec<D>> body_force;  // per material, per unit mass

    double contact_stiffness = 0.0;  // k_c
    double contact_damping = 0.0;    // d_c

    double t_end = 0.0;
    double dt_override = 0.0;  // 0 = derive from step restrictions
    double velocity_scale_hint = 0.0;

    int workers = 1;
    std::uint64_t seed = 0;
    bool transport_velocity = true;
    TransitionMode transition_mode = TransitionMode::None;

    std::vector<WallGroup<D>> wall_groups;
    std::vector<Schedule> dirichlet_temperature;    // indexed by group
    std::vector<Schedule> dirichlet_concentration;  // indexed by group

    OutputPlan output;
    std::vector<GeometryDecl> geometry;  // primitives used during setup

    double h() const { return smoothing_length > 0.0 ? smoothing_length : dx; }
    double support_radius() const { return kKernelSupportScale * h(); }
    Vec<D> body_force_of(MaterialId m) const {
        return m < body_force.size() ? body_force[m] : Vec<D>::zero();
    }
    int wall_layers() const { return static_cast<int>(std::floor(support_radius() / dx)); }
};

/// Reports every violated setup invariant; an empty list means the
/// configuration is usable. Never aborts.
template <int D>
std::vector<std::string> validate_config(const ScenarioConfig<D>& cfg) {
    std::vector<std::string> violations;
    auto fail = [&](std::string msg) { violations.push_back(std::move(msg)); };

    if (!(cfg.dx > 0.0)) fail("initial particle spacing dx must be positive");
    if (cfg.smoothing_length < 0.0) fail("smoothing length must be non-negative");
    const double rc = cfg.support_radius();
    if (cfg.cell_edge_override > 0.0 && cfg.cell_edge_override < rc)
        fail("cell edge < support radius");

    for (int a = 0; a < D; ++a) {
        const double extent = cfg.domain.hi[a] - cfg.domain.lo[a];
        if (!(extent > 0.0)) fail("domain extent must be positive on axis " + std::to_string(a));
        if (cfg.periodic[a]) {
            if (extent < 2.0 * rc)
                fail("periodic axis " + std::to_string(a) + " shorter than twice the support radius");
            if (cfg.dx > 0.0) {
                const double cells = extent / cfg.dx;
                if (std::abs(cells - std::round(cells)) > 1e-9 * cells)
                    fail("periodic axis " + std::to_string(a) + " extent is not a multiple of dx");
            }
            if (cfg.wall_faces[a][0] || cfg.wall_faces[a][1])
                fail("wall requested on periodic axis " + std::to_string(a));
        }
    }

    if (cfg.materials.size() == 0) fail("no materials defined");
    for (MaterialId m = 0; m < cfg.materials.size(); ++m) {
        const Material& mat = cfg.materials[m];
        if (!(mat.reference_density > 0.0))
            fail("material '" + mat.name + "' has non-positive reference density");
        if (mat.melt_target != kNoMaterial && mat.melt_target >= cfg.materials.size())
            fail("material '" + mat.name + "' melts into a missing material");
        if (mat.solidify_target != kNoMaterial && mat.solidify_target >= cfg.materials.size())
            fail("material '" + mat.name + "' solidifies into a missing material");
    }

    if (cfg.workers < 1) fail("worker count must be at least 1");
    if (cfg.contact_stiffness < 0.0) fail("contact stiffness must be non-negative");
    if (cfg.contact_damping < 0.0) fail("contact damping must be non-negative");

    for (const auto& g : cfg.geometry)
        if (g.dimension != D)
            fail("geometry primitive '" + g.name + "' is " + std::to_string(g.dimension) +
                 "D in a " + std::to_string(D) + "D scenario");

    for (const auto& s : cfg.dirichlet_temperature)
        for (std::size_t i = 1; i < s.pieces.size(); ++i)
            if (s.pieces[i].t_end < s.pieces[i - 1].t_end)
                fail("temperature schedule pieces out of order");
    for (const auto& s : cfg.dirichlet_concentration)
        for (std::size_t i = 1; i < s.pieces.size(); ++i)
            if (s.pieces[i].t_end < s.pieces[i - 1].t_end)
                fail("concentration schedule pieces out of order");

    return violations;
}

}  // namespace sphfsi
