#pragma once

#include <cstdint>
#include <vector>

#include "sphfsi/material.hpp"
#include "sphfsi/vec.hpp"

namespace sphfsi {

enum class Kind : std::uint8_t { Fluid = 0, Rigid = 1, Boundary = 2 };

/// Phase tag: every particle carries exactly one at any time. The meaning of
/// `id` depends on the kind: fluid phase index, rigid body id, or wall group id.
struct PhaseTag {
    Kind kind = Kind::Fluid;
    std::uint32_t id = 0;
};

inline constexpr std::uint8_t kNoDirichlet = 0xff;

/// Structure-of-arrays store of all particles. Workers write only fields of
/// particles they own; reads of foreign entries happen between write phases.
template <int D>
struct ParticleStore {
    std::vector<Vec<D>> pos;
    std::vector<Vec<D>> vel;
    std::vector<Vec<D>> vel_adv;   // transport (advection) velocity
    std::vector<Vec<D>> acc;       // du/dt from the momentum equation
    std::vector<Vec<D>> acc_bg;    // background-pressure acceleration (transport formulation)
    std::vector<double> density;
    std::vector<double> pressure;
    std::vector<double> mass;
    std::vector<double> temperature;
    std::vector<double> dT_dt;
    std::vector<double> concentration;
    std::vector<double> dC_dt;
    std::vector<Kind> kind;
    std::vector<std::uint32_t> group;      // body id / wall group id / fluid phase
    std::vector<MaterialId> material;
    std::vector<Vec<D>> body_frame_pos;    // chi_rk, rigid particles only
    std::vector<double> wall_pressure;     // extrapolated, rigid + boundary
    std::vector<Vec<D>> wall_velocity;     // no-slip interaction velocity
    std::vector<std::uint8_t> dirichlet_T; // schedule group or kNoDirichlet
    std::vector<std::uint8_t> dirichlet_C;
    std::vector<std::uint32_t> owner;      // owning worker

    std::size_t size() const { return pos.size(); }

    std::size_t add(const Vec<D>& position, double m, PhaseTag tag, MaterialId mat) {
        pos.push_back(position);
        vel.push_back(Vec<D>::zero());
        vel_adv.push_back(Vec<D>::zero());
        acc.push_back(Vec<D>::zero());
        acc_bg.push_back(Vec<D>::zero());
        density.push_back(0.0);
        pressure.push_back(0.0);
        mass.push_back(m);
        temperature.push_back(0.0);
        dT_dt.push_back(0.0);
        concentration.push_back(0.0);
        dC_dt.push_back(0.0);
        kind.push_back(tag.kind);
        group.push_back(tag.id);
        material.push_back(mat);
        body_frame_pos.push_back(Vec<D>::zero());
        wall_pressure.push_back(0.0);
        wall_velocity.push_back(Vec<D>::zero());
        dirichlet_T.push_back(kNoDirichlet);
        dirichlet_C.push_back(kNoDirichlet);
        owner.push_back(0);
        return size() - 1;
    }

    PhaseTag tag(std::size_t i) const { return {kind[i], group[i]}; }

    void reserve(std::size_t n) {
        pos.reserve(n);
        vel.reserve(n);
        vel_adv.reserve(n);
        acc.reserve(n);
        acc_bg.reserve(n);
        density.reserve(n);
        pressure.reserve(n);
        mass.reserve(n);
        temperature.reserve(n);
        dT_dt.reserve(n);
        concentration.reserve(n);
        dC_dt.reserve(n);
        kind.reserve(n);
        group.reserve(n);
        material.reserve(n);
        body_frame_pos.reserve(n);
        wall_pressure.reserve(n);
        wall_velocity.reserve(n);
        dirichlet_T.reserve(n);
        dirichlet_C.reserve(n);
        owner.reserve(n);
    }
};

}  // namespace sphfsi
