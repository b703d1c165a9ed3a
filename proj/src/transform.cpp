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

#include "scalesym/transform.hpp"

#include <cmath>
#include <random>

namespace scalesym {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

/// The element i of `ring`: the generator itself on the square side, and
/// (sqrt3 + 2 sqrt3 omega)/3 on the triangular side (from 2 omega + 1 = i sqrt3).
TowerElement imaginary_unit(const RingPtr& ring, LatticeKind kind) {
    if (kind == LatticeKind::square) return ring->gen("i");
    TowerElement s3 = ring->gen("sqrt3");
    TowerElement w = ring->gen("omega");
    return (s3 + (s3 * w) * Rational(2)) * Rational(Int(1), Int(3));
}

DirectionalScaling make_scaling(LatticeKind kind, const RingPtr& ring,
                                const TowerElement& tan_theta, FamilyTag tag,
                                std::optional<KCandidate> k) {
    DirectionalScaling ds;
    ds.kind = kind;
    ds.ring = ring;
    ds.tan_theta = tan_theta;
    ds.scale = tan_theta * tan_theta;
    ds.tag = tag;
    ds.k = std::move(k);

    const TowerElement one = ring->one();
    const TowerElement i_elem = imaginary_unit(ring, kind);
    // e^{2 i theta} = (1 - x^2 + 2 i x) / (1 + x^2)
    const TowerElement e2it =
        (one - ds.scale + (i_elem * tan_theta) * Rational(2)) * (one + ds.scale).inverse();
    const Rational half(Int(1), Int(2));
    ds.half_plus = (ds.scale + one) * half;
    ds.half_minus = ((ds.scale - one) * half) * e2it;
    return ds;
}

}  // namespace

double KCandidate::value() const { return to_double(a) + to_double(b) * kSqrt3; }

std::string KCandidate::str() const {
    if (b == 0) return a.str();
    std::string root = (b == 1) ? "sqrt(3)" : (b == -1) ? "-sqrt(3)" : b.str() + "*sqrt(3)";
    if (a == 0) return root;
    return a.str() + (b > 0 ? "+" : "") + root;
}

double DirectionalScaling::theta_radians() const { return std::atan(tan_theta.embed().real()); }

double DirectionalScaling::theta_degrees() const { return theta_radians() * 180.0 / M_PI; }

DirectionalScaling square_family(long long k) {
    if (k < 1) throw Error("family parameter k must be >= 1");
    return family_scaling(LatticeKind::square, KCandidate{Int(k), Int(0)});
}

DirectionalScaling triangular_known() {
    auto ring = triangular_ring();
    TowerElement tan = ring->from_int(2) - ring->gen("sqrt3");
    return make_scaling(LatticeKind::triangular, ring, tan, FamilyTag::triangular_known,
                        std::nullopt);
}

DirectionalScaling family_scaling(LatticeKind kind, const KCandidate& k) {
    const double kd = k.value();
    if (!(kd > 0.0)) throw Error("family parameter k must be positive, got " + k.str());

    RingPtr base = canonical_ring(kind);
    if (kind == LatticeKind::square && k.b != 0) {
        // Mixed candidates on the square lattice need sqrt3 below x.
        base = base->extend("sqrt3", base->zero(), base->from_int(3), {kSqrt3, 0.0});
    }
    TowerElement alpha = base->from_int(-k.a);
    if (k.b != 0) alpha = alpha - base->gen("sqrt3") * Rational(k.b);

    // Positive root of x^2 + k x - 1 = 0, in the cancellation-free form.
    const double x_num = 2.0 / (std::sqrt(kd * kd + 4.0) + kd);
    RingPtr ring = base->extend("x", alpha, base->one(), {x_num, 0.0});
    return make_scaling(kind, ring, ring->gen("x"), FamilyTag::k_family, k);
}

DirectionalScaling custom_scaling(LatticeKind kind, const TowerElement& tan_theta, FamilyTag tag,
                                  std::optional<KCandidate> k) {
    return make_scaling(kind, tan_theta.ring(), tan_theta, tag, std::move(k));
}

TowerElement apply_exact(const DirectionalScaling& ds, const LatticePoint& p) {
    if (p.kind != ds.kind)
        throw KindMismatchError("point kind does not match the transform's lattice");
    TowerElement z = point_to_elem(p, ds.ring);
    TowerElement zbar = z.conjugated(unit_name(ds.kind));
    return ds.half_plus * z + ds.half_minus * zbar;
}

std::array<double, 2> apply_float(const DirectionalScaling& ds, std::array<double, 2> xy) {
    const double theta = ds.theta_radians();
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double sr = ds.scale.embed().real();
    const double par = xy[0] * c + xy[1] * s;
    const double perp = -xy[0] * s + xy[1] * c;
    return {sr * par * c - perp * s, sr * par * s + perp * c};
}

TowerElement silver_ratio() {
    auto ring = sqrt_ring(2);
    return ring->gen("sqrt2") - ring->one();
}

TowerElement platinum_ratio() {
    auto ring = sqrt_ring(3);
    return ring->from_int(2) - ring->gen("sqrt3");
}

TowerElement golden_ratio() {
    auto ring = sqrt_ring(5);
    return (ring->gen("sqrt5") - ring->one()) * Rational(Int(1), Int(2));
}

FloatAgreement check_float_agreement(const DirectionalScaling& ds, long long samples, double tol,
                                     unsigned long long seed) {
    std::mt19937_64 rng(seed);
    auto draw = [&rng]() -> long long {
        return static_cast<long long>(rng() % 2001ull) - 1000;
    };
    FloatAgreement out;
    out.samples = samples;
    for (long long i = 0; i < samples; ++i) {
        LatticePoint p{0, 0, ds.kind};
        if (i > 0) {
            p.m = draw();
            p.n = draw();
        }
        const std::complex<double> exact = apply_exact(ds, p).embed();
        const std::array<double, 2> flt = apply_float(ds, point_xy(p));
        const double dev = std::hypot(exact.real() - flt[0], exact.imag() - flt[1]);
        if (dev > out.max_deviation) out.max_deviation = dev;
    }
    out.pass = out.max_deviation <= tol;
    return out;
}

}  // namespace scalesym
