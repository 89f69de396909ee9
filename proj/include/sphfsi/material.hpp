#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "sphfsi/vec.hpp"

namespace sphfsi {

using MaterialId = std::uint16_t;
inline constexpr MaterialId kNoMaterial = std::numeric_limits<MaterialId>::max();

/// Per-phase constants. Reference pressure p0 = rho0 c^2 is derived, never stored.
struct Material {
    std::string name;
    double reference_density = 1.0;    // rho0
    double kinematic_viscosity = 0.0;  // nu
    double heat_capacity = 0.0;        // c_p
    double conductivity = 0.0;         // kappa
    double diffusivity = 0.0;          // D
    double speed_of_sound = 0.0;       // c, > 0 for fluids
    double background_pressure = 0.0;  // p_b of the transport velocity formulation

    double transition_temperature = std::numeric_limits<double>::quiet_NaN();    // T_t
    double transition_concentration = std::numeric_limits<double>::quiet_NaN();  // C_t
    MaterialId melt_target = kNoMaterial;      // fluid material a melting particle adopts
    MaterialId solidify_target = kNoMaterial;  // solid material a solidifying particle adopts

    double dynamic_viscosity() const { return reference_density * kinematic_viscosity; }
    double reference_pressure() const { return reference_density * speed_of_sound * speed_of_sound; }
    bool has_transition_temperature() const { return !std::isnan(transition_temperature); }
    bool has_transition_concentration() const { return !std::isnan(transition_concentration); }
};

class MaterialTable {
public:
    MaterialId add(Material m) {
        materials_.push_back(std::move(m));
        return static_cast<MaterialId>(materials_.size() - 1);
    }
    const Material& operator[](MaterialId id) const { return materials_[id]; }
    Material& operator[](MaterialId id) { return materials_[id]; }
    std::size_t size() const { return materials_.size(); }

    MaterialId find(const std::string& name) const {
        for (std::size_t i = 0; i < materials_.size(); ++i)
            if (materials_[i].name == name) return static_cast<MaterialId>(i);
        return kNoMaterial;
    }

private:
    std::vector<Material> materials_;
};

/// Equation of state of the weakly compressible model, p = c^2 (rho - rho0).
inline double eos_pressure(double density, const Material& m) {
    const double c = m.speed_of_sound;
    return c * c * (density - m.reference_density);
}

/// Inverse of the equation of state, rho = rho0 + p / c^2.
inline double eos_density(double pressure, const Material& m) {
    const double c = m.speed_of_sound;
    return m.reference_density + pressure / (c * c);
}

}  // namespace sphfsi
