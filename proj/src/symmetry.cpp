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

#include "scalesym/symmetry.hpp"

#include <algorithm>
#include <utility>

namespace scalesym {

std::optional<InducedMap> try_induced_map(const DirectionalScaling& ds) {
    if (!(ds.scale == ds.tan_theta * ds.tan_theta))
        throw Error("induced_map requires the scheme's scale law S_r = tan^2(theta)");

    const RingPtr& ring = ds.ring;
    const TowerElement one = ring->one();
    // Baseline scalar s = x^2 / (1 + x^2).
    const TowerElement s = ds.scale * (one + ds.scale).inverse();
    const TowerElement inv_s = s.inverse();

    const LatticePoint e1{1, 0, ds.kind}, e2{0, 1, ds.kind};
    const TowerElement u = apply_exact(ds, e1);
    const TowerElement v = apply_exact(ds, e2);

    const auto unit = unit_name(ds.kind);
    const auto pu = (u * inv_s).integer_pair(unit);
    const auto pv = (v * inv_s).integer_pair(unit);
    if (!pu || !pv) return std::nullopt;

    const IntMatrix2 raw{pu->first, pv->first, pu->second, pv->second};
    auto [g, prim] = raw.primitive();

    InducedMap im;
    im.scalar = s * Rational(g);
    im.matrix = prim;
    im.primitive = true;
    im.fold_gcd = g;
    im.raw = raw;

    // The defining identity must hold exactly on both basis vectors.
    if (u != im.scalar * point_to_elem(prim.apply(e1), ring) ||
        v != im.scalar * point_to_elem(prim.apply(e2), ring))
        throw Error("internal: induced map failed its defining identity");
    return im;
}

InducedMap induced_map(const DirectionalScaling& ds) {
    auto im = try_induced_map(ds);
    if (!im)
        throw NotLatticePreservingError(
            "transform does not carry the lattice onto a scalar multiple of an integer "
            "sublattice");
    return *im;
}

SymmetryReport make_report(const DirectionalScaling& ds, std::optional<InducedMap> induced,
                           std::string notes) {
    SymmetryReport rep;
    rep.transform = ds;
    rep.verified = induced.has_value();
    rep.notes = std::move(notes);
    if (induced) {
        rep.det = induced->matrix.det();
        rep.det_raw = induced->raw.det();
        rep.sublattice_index = int_abs(rep.det);
    } else {
        rep.det = 0;
        rep.det_raw = 0;
        rep.sublattice_index = 0;
    }
    rep.induced = std::move(induced);
    return rep;
}

std::vector<SymmetryReport> verify_square_family(long long k_max) {
    if (k_max < 1) throw Error("k_max must be >= 1");
    std::vector<SymmetryReport> out;
    out.reserve(static_cast<std::size_t>(k_max));
    for (long long k = 1; k <= k_max; ++k) {
        DirectionalScaling ds = square_family(k);
        out.push_back(make_report(ds, try_induced_map(ds), "k=" + std::to_string(k)));
    }
    return out;
}

SymmetryReport verify_triangular() {
    DirectionalScaling ds = triangular_known();
    return make_report(ds, induced_map(ds), "triangular pi/12");
}

GridReport grid_coincidence_check(const DirectionalScaling& ds, long long radius) {
    if (radius < 1) throw Error("grid radius must be >= 1");
    const InducedMap im = induced_map(ds);

    GridReport rep;
    std::vector<std::pair<Int, Int>> images;
    images.reserve(static_cast<std::size_t>((2 * radius + 1) * (2 * radius + 1)));
    for (long long m = -radius; m <= radius; ++m) {
        for (long long n = -radius; n <= radius; ++n) {
            const LatticePoint p{m, n, ds.kind};
            const LatticePoint q = im.matrix.apply(p);
            if (apply_exact(ds, p) != im.scalar * point_to_elem(q, ds.ring)) ++rep.failures;
            images.emplace_back(q.m, q.n);
            ++rep.checked;
        }
    }
    std::sort(images.begin(), images.end());
    rep.injective = std::adjacent_find(images.begin(), images.end()) == images.end();
    return rep;
}

IdealCheckReport image_ideal_check(const IntMatrix2& m, LatticeKind kind) {
    const Int dt = m.det();
    if (dt == 0) throw ZeroMatrixError("image_ideal_check requires a nonzero determinant");

    IdealCheckReport rep;
    rep.index = int_abs(dt);
    const LatticePoint col1{m.a, m.c, kind};
    const LatticePoint col2{m.b, m.d, kind};
    const auto q2 = point_div_exact(col2, col1);
    // {1, q2} is a Z-basis of Z[unit] iff |det [[1, q2.m], [0, q2.n]]| = 1.
    if (q2 && int_abs(q2->n) == 1) {
        rep.is_principal = true;
        rep.generator = col1;
    }
    return rep;
}

IdealCheckReport image_ideal_check(const InducedMap& im, LatticeKind kind) {
    return image_ideal_check(im.matrix, kind);
}

std::vector<SymmetryReport> search(const SearchSpec& spec) {
    std::vector<KCandidate> candidates;
    switch (spec.form) {
        case SearchSpec::Form::integer_range:
            if (spec.lo_a > spec.hi_a) throw Error("empty integer candidate range");
            for (long long a = spec.lo_a; a <= spec.hi_a; ++a)
                candidates.push_back({Int(a), Int(0)});
            break;
        case SearchSpec::Form::sqrt3_multiples:
            if (spec.lo_b > spec.hi_b) throw Error("empty sqrt(3) candidate range");
            for (long long b = spec.lo_b; b <= spec.hi_b; ++b)
                candidates.push_back({Int(0), Int(b)});
            break;
        case SearchSpec::Form::mixed_q3:
            if (spec.lo_a > spec.hi_a || spec.lo_b > spec.hi_b)
                throw Error("empty mixed candidate range");
            for (long long a = spec.lo_a; a <= spec.hi_a; ++a)
                for (long long b = spec.lo_b; b <= spec.hi_b; ++b)
                    candidates.push_back({Int(a), Int(b)});
            break;
    }

    std::vector<SymmetryReport> out;
    for (const KCandidate& k : candidates) {
        if (!(k.value() > 0.0)) continue;  // only positive directions are in scope
        DirectionalScaling ds = family_scaling(spec.kind, k);
        auto im = try_induced_map(ds);
        if (!im) continue;
        const GridReport grid = grid_coincidence_check(ds, spec.grid_radius);
        if (grid.failures != 0 || !grid.injective) continue;
        out.push_back(make_report(ds, std::move(im), "k=" + k.str()));
    }
    return out;
}

}  // namespace scalesym
