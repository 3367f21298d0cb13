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

#include "qlbm/lattice.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace qlbm::lattice {

using V = VelocitySetD1Q3;

double DensityField::total_mass() const {
    double total = 0.0;
    for (double v : values) {
        total += v;
    }
    return total;
}

std::array<double, 3> equilibrium(double rho, double u,
                                  EquilibriumMode mode) {
    if (rho < 0.0) {
        throw DomainError(
            detail::strf("equilibrium requires rho >= 0; got %.17g", rho));
    }
    switch (mode) {
        case EquilibriumMode::linear: {
            // Populations stay nonnegative only while |u| <= cs^2.
            if (std::abs(u) > V::cs_sq) {
                throw DomainError(detail::strf(
                    "linear equilibrium requires |u| <= cs^2 = 1/3; got "
                    "u = %.17g",
                    u));
            }
            const double drift = u / V::cs_sq;
            return {V::w0 * rho, V::w1 * rho * (1.0 + drift),
                    V::w2 * rho * (1.0 - drift)};
        }
        case EquilibriumMode::nonlinear: {
            // The square-completed form is realizable only for |u| <= 1/2.
            if (std::abs(u) > 0.5) {
                throw DomainError(detail::strf(
                    "nonlinear equilibrium requires |u| <= 1/2; got "
                    "u = %.17g",
                    u));
            }
            const double up = u + 0.5;
            const double um = u - 0.5;
            return {V::w0 * rho * (1.0 - 1.5 * u * u),
                    3.0 * V::w1 * rho * up * up + rho * V::w1 / 4.0,
                    3.0 * V::w2 * rho * um * um + rho * V::w2 / 4.0};
        }
    }
    throw DomainError("unknown equilibrium mode");
}

Moments moments(double f0, double f1, double f2) {
    const double rho = f0 + f1 + f2;
    const double momentum = f1 - f2;
    if (rho <= 0.0) {
        if (rho == 0.0 && momentum == 0.0) {
            return {0.0, 0.0};
        }
        throw DegeneracyError(detail::strf(
            "cannot form a velocity moment from populations summing to "
            "%.17g",
            rho));
    }
    return {rho, momentum / rho};
}

StepResult classical_step(const DensityField &rho, const VelocityField &u,
                          EquilibriumMode mode, bool update_velocity) {
    const std::size_t n = rho.size();
    if (n == 0) {
        throw DomainError("classical step on an empty field");
    }
    if (!u.is_uniform() && u.size() != n) {
        throw LayoutError(detail::strf(
            "velocity field of %zu cells does not match density of %zu",
            u.size(), n));
    }

    // Collide: full relaxation projects each cell onto its equilibrium.
    std::vector<double> f0(n), f1(n), f2(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::array<double, 3> eq = equilibrium(rho[k], u.at(k), mode);
        f0[k] = eq[0];
        f1[k] = eq[1];
        f2[k] = eq[2];
    }

    // Stream: movers arrive from the periodic neighbors.
    StepResult out{DensityField(n), u};
    std::vector<double> u_new(update_velocity ? n : 0);
    for (std::size_t k = 0; k < n; ++k) {
        const double arr0 = f0[k];
        const double arr1 = f1[(k + n - 1) % n];
        const double arr2 = f2[(k + 1) % n];
        if (update_velocity) {
            const Moments m = moments(arr0, arr1, arr2);
            out.rho[k] = m.rho;
            u_new[k] = m.u;
        } else {
            out.rho[k] = arr0 + arr1 + arr2;
        }
    }
    if (update_velocity) {
        out.u = VelocityField::per_cell(std::move(u_new));
    }
    return out;
}

namespace {

/// Displacement from x to the nearest periodic image of the center.
double wrapped_distance(double x, double center, double period) {
    double d = x - center;
    d -= period * std::round(d / period);
    return d;
}

void check_gaussian(const GaussianParams &params) {
    if (!(params.sigma0 > 0.0)) {
        throw DomainError(detail::strf(
            "Gaussian width sigma0 must be positive; got %.17g",
            params.sigma0));
    }
    if (params.rho0 < 0.0 || params.ambient < 0.0) {
        throw DomainError("Gaussian amplitude and ambient density must be "
                          "nonnegative");
    }
    if (params.diffusivity < 0.0) {
        throw DomainError(detail::strf(
            "diffusivity must be nonnegative; got %.17g",
            params.diffusivity));
    }
}

} // namespace

DensityField initial_gaussian(const GaussianParams &params,
                              std::size_t cells) {
    check_gaussian(params);
    if (cells == 0) {
        throw DomainError("Gaussian field needs at least one cell");
    }
    const double period = static_cast<double>(cells);
    DensityField rho(cells);
    for (std::size_t k = 0; k < cells; ++k) {
        const double d =
            wrapped_distance(static_cast<double>(k), params.x0, period);
        rho[k] = params.ambient +
                 params.rho0 *
                     std::exp(-(d * d) /
                              (2.0 * params.sigma0 * params.sigma0));
    }
    return rho;
}

double analytic_gaussian(double x, double t, double u,
                         const GaussianParams &params, std::size_t cells) {
    check_gaussian(params);
    if (cells == 0) {
        throw DomainError("Gaussian field needs at least one cell");
    }
    if (t < 0.0) {
        throw DomainError(detail::strf("time must be nonnegative; got %.17g",
                                       t));
    }
    const double period = static_cast<double>(cells);
    const double sigma_sq =
        params.sigma0 * params.sigma0 + 2.0 * params.diffusivity * t;
    const double amplitude =
        params.rho0 * params.sigma0 * params.sigma0 / sigma_sq;
    const double d = wrapped_distance(x, params.x0 + u * t, period);
    return params.ambient + amplitude * std::exp(-(d * d) / (2.0 * sigma_sq));
}

DensityField analytic_gaussian_field(double t, double u,
                                     const GaussianParams &params,
                                     std::size_t cells) {
    DensityField rho(cells);
    for (std::size_t k = 0; k < cells; ++k) {
        rho[k] = analytic_gaussian(static_cast<double>(k), t, u, params,
                                   cells);
    }
    return rho;
}

} // namespace qlbm::lattice
