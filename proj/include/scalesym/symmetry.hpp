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

#include <optional>
#include <string>
#include <vector>

#include "scalesym/transform.hpp"

namespace scalesym {

/// Exact factorization of a lattice-preserving directional scaling as
/// scalar * (integer matrix): T(p) = scalar * (M p) for every lattice
/// point, checked exactly on both basis vectors at construction.
struct InducedMap {
    TowerElement scalar;  ///< final scalar, gcd already folded in
    IntMatrix2 matrix;    ///< primitive (entry gcd 1)
    bool primitive = true;
    Int fold_gcd;       ///< gcd divided out of the raw matrix
    IntMatrix2 raw;     ///< matrix before primitive normalization
};

/// Outcome of verifying one transform.
struct SymmetryReport {
    DirectionalScaling transform;
    std::optional<InducedMap> induced;
    Int det;               ///< det of the primitive matrix (0 when unverified)
    Int det_raw;           ///< det of the raw matrix, k^2 + 4 for the family
    Int sublattice_index;  ///< |det| of the primitive matrix
    bool verified = false;
    std::string notes;
};

struct GridReport {
    long long checked = 0;
    long long failures = 0;
    bool injective = false;
};

struct IdealCheckReport {
    bool is_principal = false;
    std::optional<LatticePoint> generator;
    Int index;
};

/// Candidate enumeration for the symmetry search.
struct SearchSpec {
    enum class Form { integer_range, sqrt3_multiples, mixed_q3 };

    LatticeKind kind = LatticeKind::square;
    Form form = Form::integer_range;
    long long lo_a = 0, hi_a = 0;  ///< integer part (integer_range, mixed_q3)
    long long lo_b = 0, hi_b = 0;  ///< sqrt(3) part (sqrt3_multiples, mixed_q3)
    long long grid_radius = 20;    ///< confirmation sweep radius
};

/// Divides the basis images by the baseline scalar s = x^2/(1+x^2) and
/// reads off the integer matrix; the matrix gcd is folded back into the
/// scalar and the matrix kept primitive. Absent iff either quotient fails
/// the integrality test - the decisive lattice-preservation predicate.
std::optional<InducedMap> try_induced_map(const DirectionalScaling& ds);

/// As try_induced_map but throws NotLatticePreservingError on failure.
InducedMap induced_map(const DirectionalScaling& ds);

/// One verified report per k in 1..k_max. det_raw equals k^2 + 4 for every
/// member; a non-verified entry would flag a broken family identity.
std::vector<SymmetryReport> verify_square_family(long long k_max);

/// The triangular pi/12 case: scalar 2 - sqrt(3), matrix [[0,1],[-1,4]],
/// determinant 1 (the image is the full lattice).
SymmetryReport verify_triangular();

SymmetryReport make_report(const DirectionalScaling& ds, std::optional<InducedMap> induced,
                           std::string notes);

/// Exhaustive check over |m|, |n| <= radius that apply_exact(p) equals
/// scalar * (M p) exactly, plus grid injectivity of p -> M p. Requires a
/// transform for which induced_map succeeds.
GridReport grid_coincidence_check(const DirectionalScaling& ds, long long radius);

/// Tests whether M Z^2 is g * Z[unit] for the single lattice integer
/// g = first column: divides column 2 by g exactly and checks the quotient
/// pair {1, c2/g} is a Z-basis of Z[unit]. Index reported is |det M|.
IdealCheckReport image_ideal_check(const IntMatrix2& m, LatticeKind kind);
IdealCheckReport image_ideal_check(const InducedMap& im, LatticeKind kind);

/// Runs the x^2 = 1 - k x scheme over every candidate k in the spec,
/// keeping only candidates whose induced map exists and whose grid sweep is
/// clean. Results are ordered by candidate (ascending k, then (a, b)).
std::vector<SymmetryReport> search(const SearchSpec& spec);

}  // namespace scalesym
