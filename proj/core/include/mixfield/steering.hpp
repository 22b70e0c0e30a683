// SPDX-License-Identifier: Apache-2.0
//
// mixfield - interference analysis for mixed near-/far-field XL-array links
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

#include <complex>
#include <vector>

#include "mixfield/array_geometry.hpp"

namespace mixfield
{
    using ComplexVector = std::vector<std::complex<double>>;

    // Far-field user placement: spatial angle psi = 2 d cos(phi) / lambda, open interval (-1, 1).
    struct FarFieldDirection
    {
        double psi = 0.0;

        // psi = cos(phi) for a physical angle-of-departure phi [rad] (valid for d = lambda / 2).
        static FarFieldDirection from_aod(double phi);
    };

    // Near-field user placement: spatial angle theta in (-1, 1) and distance r [m] from the array center.
    struct NearFieldPoint
    {
        double theta = 0.0;
        double r = 1.0;
    };

    // Both throw std::invalid_argument on angles outside (-1, 1) or r <= 0.
    void validate(FarFieldDirection dir);
    void validate(NearFieldPoint p);

    // a(psi): entry n = exp(j pi n psi) / sqrt(N)
    ComplexVector far_steering(const ArrayConfig &cfg, FarFieldDirection dir);

    // Exact distance between element n at (0, delta_n d) and the user.
    double element_distance(const ArrayConfig &cfg, NearFieldPoint p, int n);

    // b(theta, r): entry n = exp(-j 2 pi (r_n - r) / lambda) / sqrt(N), with the exact r_n.
    ComplexVector near_steering(const ArrayConfig &cfg, NearFieldPoint p);

    // b^H a
    std::complex<double> inner_product(const ComplexVector &b, const ComplexVector &a);
}
