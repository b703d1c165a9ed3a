// Copyright 2026 The scalesym Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <optional>
#include <string>

#include "scalesym/lattice.hpp"

namespace scalesym {

/// Direction-family parameter k = a + b*sqrt(3). Pure integers have b = 0;
/// the triangular probe uses pure sqrt(3) multiples (a = 0).
struct KCandidate {
    Int a{0};
    Int b{0};

    bool pure_integer() const { return b == 0; }
    double value() const;
    std::string str() const;
    friend bool operator==(const KCandidate& lhs, const KCandidate& rhs) {
        return lhs.a == rhs.a && lhs.b == rhs.b;
    }
};

enum class FamilyTag {
    k_family,          ///< tan(theta) is the positive root of x^2 = 1 - k x
    triangular_known,  ///< tan(pi/12) = 2 - sqrt(3) on the triangular lattice
    custom,
};

/// A directional scaling: scale factor S_r along the direction theta,
/// identity perpendicular to it, drag point fixed at the origin. Exact data
/// only; theta itself is never stored, just tan(theta) inside a quadratic
/// tower together with S_r = tan(theta)^2.
///
/// apply_exact uses the conjugation form
///     T(z) = ((S_r + 1)/2) z + ((S_r - 1)/2) e^{2 i theta} conj(z),
/// with e^{2 i theta} = (1 - x^2 + 2 i x)/(1 + x^2) for x = tan(theta),
/// which agrees with resolving z into components along and across the
/// direction (apply_float evaluates that resolution form in doubles).
struct DirectionalScaling {
    LatticeKind kind = LatticeKind::square;
    RingPtr ring;
    TowerElement tan_theta;
    TowerElement scale;  ///< S_r = tan_theta^2, reduced
    FamilyTag tag = FamilyTag::custom;
    std::optional<KCandidate> k;

    // Precomputed operator pieces: T(z) = half_plus * z + half_minus * conj(z).
    TowerElement half_plus;
    TowerElement half_minus;

    double theta_radians() const;
    double theta_degrees() const;
};

/// Family member for integer k >= 1 on the square lattice: tan(theta) is
/// the positive root of x^2 = 1 - k x, numerically (sqrt(k^2+4) - k)/2.
DirectionalScaling square_family(long long k);

/// The known triangular case: theta = pi/12, tan(theta) = 2 - sqrt(3),
/// S_r = 7 - 4 sqrt(3).
DirectionalScaling triangular_known();

/// Family member with k = a + b*sqrt(3) (must be positive) on either
/// lattice; the tower gains a formal generator x with x^2 = 1 - k x.
DirectionalScaling family_scaling(LatticeKind kind, const KCandidate& k);

/// Arbitrary tan(theta) from `ring`; the scale is forced to tan(theta)^2
/// (the only scale law in scope). `ring` must host the lattice unit and,
/// for the triangular kind, sqrt3.
DirectionalScaling custom_scaling(LatticeKind kind, const TowerElement& tan_theta,
                                  FamilyTag tag = FamilyTag::custom,
                                  std::optional<KCandidate> k = std::nullopt);

/// Exact image of a lattice point. Throws KindMismatchError when the point
/// and transform kinds differ.
TowerElement apply_exact(const DirectionalScaling& ds, const LatticePoint& p);

/// Resolution form in doubles: S_r (x cos + y sin)(cos, sin) +
/// (-x sin + y cos)(-sin, cos) with theta = atan(embed(tan_theta)). Serves
/// as the independent floating-point oracle for apply_exact.
std::array<double, 2> apply_float(const DirectionalScaling& ds, std::array<double, 2> xy);

/// sqrt(2) - 1 in Q(sqrt2); squares to 3 - 2 sqrt(2).
TowerElement silver_ratio();
/// 2 - sqrt(3) in Q(sqrt3); squares to 7 - 4 sqrt(3).
TowerElement platinum_ratio();
/// (sqrt(5) - 1)/2 in Q(sqrt5); squares to (3 - sqrt(5))/2.
TowerElement golden_ratio();

/// Seeded float-vs-exact cross validation: draws `samples` points with
/// |m|, |n| <= 1000 (the first sample is always the origin) and reports the
/// largest |embed(apply_exact) - apply_float| over them.
struct FloatAgreement {
    long long samples = 0;
    double max_deviation = 0.0;
    bool pass = false;
};
FloatAgreement check_float_agreement(const DirectionalScaling& ds, long long samples, double tol,
                                     unsigned long long seed);

}  // namespace scalesym
