// SPDX-License-Identifier: Apache-2.0
//
// rischan: channel simulator and link-budget engine for RIS-assisted mmWave links
// Copyright (C) 2026 The rischan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "rischan/geometry.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

namespace rischan {

using cdouble = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;

// Uniform rectangular array in the local yOz plane: m_h elements along y,
// m_v along z. A uniform linear array is m_v = 1.
struct ArrayGeometry
{
    std::size_t m_h = 1;
    std::size_t m_v = 1;
    double spacing = 0.005; // meters

    std::size_t size() const { return m_h * m_v; }

    // Throws std::invalid_argument on zero counts or non-positive spacing.
    void validate() const;

    friend bool operator==(const ArrayGeometry &, const ArrayGeometry &) = default;

    static ArrayGeometry single() { return {1, 1, 0.5}; }
};

// Most square m_h x m_v factorization of n (m_v <= m_h), with the given spacing.
ArrayGeometry square_layout(std::size_t n, double spacing);

// Per-element phase of the steering vector, radians. Element (p, q) sits at
// flattened index q * m_h + p and carries
//   -2*pi*(d/lambda) * (p cos(azimuth) cos(el) + q sin(el))
// where el is the elevation from the horizontal plane.
Eigen::VectorXd steering_phases(const ArrayGeometry &geom, const Direction &dir, double wavelength);

// exp(j * steering_phases). Every entry is unit modulus; entry 0 is exactly 1.
ComplexVector steering_vector(const ArrayGeometry &geom, const Direction &dir, double wavelength);

} // namespace rischan
