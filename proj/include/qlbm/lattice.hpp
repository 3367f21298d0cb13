// Copyright 2026 The qlbm-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file lattice.hpp
/// Classical D1Q3 lattice-Boltzmann reference: velocity set, equilibria,
/// moments, the collide-and-stream update, and the Gaussian-hill
/// advection-diffusion problem with its analytical solution.
///
/// Lattice units throughout: dx = dt = 1 and dt/tau = 1 (the distributions
/// relax fully to equilibrium each step), which fixes the diffusivity at
/// cs^2 * (tau - dt/2) = 1/6.

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qlbm/errors.hpp"

namespace qlbm::lattice {

/// The three-velocity 1-D set: rest weight 2/3, movers 1/6 each, speeds
/// {0, +1, -1}, speed of sound cs^2 = 1/3.
struct VelocitySetD1Q3 {
    static constexpr double w0 = 2.0 / 3.0;
    static constexpr double w1 = 1.0 / 6.0;
    static constexpr double w2 = 1.0 / 6.0;
    static constexpr std::array<int, 3> c = {0, +1, -1};
    static constexpr double cs_sq = 1.0 / 3.0;
};

/// Per-cell mass density on a periodic 1-D lattice.
struct DensityField {
    std::vector<double> values;

    DensityField() = default;
    explicit DensityField(std::size_t cells, double fill = 0.0)
        : values(cells, fill) {}
    explicit DensityField(std::vector<double> v) : values(std::move(v)) {}

    std::size_t size() const { return values.size(); }
    double &operator[](std::size_t k) { return values[k]; }
    double operator[](std::size_t k) const { return values[k]; }

    /// Serial sum of all cells (deterministic).
    double total_mass() const;

    bool operator==(const DensityField &) const = default;
};

/// Advection velocity, either one value for the whole lattice or one per
/// cell. Uniform fields work for any lattice size.
class VelocityField {
  public:
    static VelocityField uniform(double u) { return VelocityField(u); }
    static VelocityField per_cell(std::vector<double> u) {
        return VelocityField(std::move(u));
    }

    bool is_uniform() const { return values_.empty(); }

    /// Velocity at cell k. Per-cell fields bounds-check against their size.
    double at(std::size_t k) const {
        if (is_uniform()) {
            return uniform_;
        }
        if (k >= values_.size()) {
            throw LayoutError(qlbm::detail::strf(
                "velocity lookup at cell %zu outside field of %zu cells", k,
                values_.size()));
        }
        return values_[k];
    }

    std::size_t size() const { return values_.size(); }
    const std::vector<double> &values() const { return values_; }

    bool operator==(const VelocityField &) const = default;

  private:
    explicit VelocityField(double u) : uniform_(u) {}
    explicit VelocityField(std::vector<double> u) : values_(std::move(u)) {
        if (values_.empty()) {
            throw DomainError("per-cell velocity field must not be empty");
        }
    }

    double uniform_ = 0.0;
    std::vector<double> values_; // empty means uniform
};

/// Which equilibrium closure the collision uses: `linear` keeps only the
/// first-order velocity term; `nonlinear` includes the quadratic terms.
enum class EquilibriumMode { linear, nonlinear };

/// Equilibrium populations (f0, f1, f2) for density rho and velocity u.
/// Throws DomainError if rho < 0 or u is outside the admissible range of the
/// chosen mode (|u| <= 1/3 linear, |u| <= 1/2 nonlinear).
std::array<double, 3> equilibrium(double rho, double u, EquilibriumMode mode);

/// Density and velocity moments of a population triple.
struct Moments {
    double rho;
    double u;
};

/// rho = f0+f1+f2, u = (f1-f2)/rho. A zero-density cell with zero momentum
/// reports u = 0; zero density with nonzero momentum is a DegeneracyError.
Moments moments(double f0, double f1, double f2);

/// One collide-and-stream update of the classical solver.
struct StepResult {
    DensityField rho;
    VelocityField u;
};

/// Full-relaxation collide (project onto equilibrium) followed by periodic
/// streaming. With update_velocity the post-stream velocity moment replaces
/// the advection field (self-consistent flow); otherwise the input velocity
/// is carried through unchanged (advection-diffusion of a passive density).
StepResult classical_step(const DensityField &rho, const VelocityField &u,
                          EquilibriumMode mode, bool update_velocity = false);

/// Gaussian hill on an `ambient` background, and the lattice diffusivity
/// that governs its spreading.
struct GaussianParams {
    double rho0 = 0.1;        // hill amplitude above the ambient level
    double ambient = 0.1;     // background density
    double x0 = 16.0;         // hill center
    double sigma0 = 4.0;      // initial standard deviation
    double diffusivity = 1.0 / 6.0; // cs^2 * (tau - dt/2) in lattice units
};

/// rho(x, 0) = ambient + rho0 * exp(-(x-x0)^2 / (2 sigma0^2)), with the
/// distance to the center taken through the nearest periodic image.
DensityField initial_gaussian(const GaussianParams &params,
                              std::size_t cells);

/// Advection-diffusion solution at time t: the hill drifts by u*t, spreads
/// to sigma^2 = sigma0^2 + 2*D*t, and its amplitude scales accordingly.
double analytic_gaussian(double x, double t, double u,
                         const GaussianParams &params, std::size_t cells);

/// The analytic solution sampled at every cell center.
DensityField analytic_gaussian_field(double t, double u,
                                     const GaussianParams &params,
                                     std::size_t cells);

} // namespace qlbm::lattice
