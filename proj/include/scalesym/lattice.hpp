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
#include <string_view>
#include <utility>

#include "scalesym/tower.hpp"

namespace scalesym {

/// Square lattice = Gaussian integers m + n*i; triangular lattice =
/// Eisenstein integers m + n*omega with omega = (-1 + i sqrt(3))/2.
enum class LatticeKind { square, triangular };

std::string_view kind_name(LatticeKind kind);
/// The basis unit adjoined to 1: "i" or "omega".
std::string_view unit_name(LatticeKind kind);

/// Integer coordinate pair (m, n), read as m + n*unit.
struct LatticePoint {
    Int m;
    Int n;
    LatticeKind kind = LatticeKind::square;

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
        return a.kind == b.kind && a.m == b.m && a.n == b.n;
    }
    friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
    friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
    std::string str() const;
};

/// Row-major 2x2 integer matrix mapping (m, n) -> (a m + b n, c m + d n).
struct IntMatrix2 {
    Int a, b, c, d;

    Int det() const { return a * d - b * c; }
    LatticePoint apply(const LatticePoint& p) const;
    friend IntMatrix2 operator*(const IntMatrix2& lhs, const IntMatrix2& rhs);
    friend bool operator==(const IntMatrix2& lhs, const IntMatrix2& rhs) {
        return lhs.a == rhs.a && lhs.b == rhs.b && lhs.c == rhs.c && lhs.d == rhs.d;
    }
    /// (g, M') with g = gcd of |entries| and M = g * M'. Throws
    /// ZeroMatrixError on the zero matrix.
    std::pair<Int, IntMatrix2> primitive() const;
    /// Exact integer inverse; requires |det| = 1.
    IntMatrix2 unimodular_inverse() const;
    std::string str() const;
};

/// Canonical ring for each lattice kind: Q(i) for square, Q(sqrt3, omega)
/// for triangular (sqrt3 is needed for Cartesian coordinates and for the
/// imaginary unit i = (sqrt3 + 2 sqrt3 omega)/3). Cached instances.
RingPtr square_ring();
RingPtr triangular_ring();
RingPtr canonical_ring(LatticeKind kind);

/// m + n*unit as an element of the canonical ring of p.kind.
TowerElement point_to_elem(const LatticePoint& p);
/// m + n*unit injected into `ring`, which must contain the unit generator.
TowerElement point_to_elem(const LatticePoint& p, const RingPtr& ring);

/// Exact Cartesian coordinates in the canonical ring: square -> (m, n);
/// triangular -> (m - n/2, n*sqrt(3)/2).
std::pair<TowerElement, TowerElement> point_cartesian(const LatticePoint& p);
/// Floating-point Cartesian coordinates.
std::array<double, 2> point_xy(const LatticePoint& p);

// Arithmetic of the lattice points viewed as Gaussian/Eisenstein integers.
LatticePoint point_mul(const LatticePoint& p, const LatticePoint& q);
LatticePoint point_conj(const LatticePoint& p);
Int point_norm(const LatticePoint& p);
/// z / g when the quotient is again a lattice integer; absent otherwise.
std::optional<LatticePoint> point_div_exact(const LatticePoint& z, const LatticePoint& g);

}  // namespace scalesym
