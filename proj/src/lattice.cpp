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

#include "scalesym/lattice.hpp"

#include <cmath>

namespace scalesym {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

void require_same_kind(const LatticePoint& a, const LatticePoint& b) {
    if (a.kind != b.kind) throw KindMismatchError("lattice points have different kinds");
}

}  // namespace

std::string_view kind_name(LatticeKind kind) {
    return kind == LatticeKind::square ? "square" : "triangular";
}

std::string_view unit_name(LatticeKind kind) {
    return kind == LatticeKind::square ? "i" : "omega";
}

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
    require_same_kind(a, b);
    return {a.m + b.m, a.n + b.n, a.kind};
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
    require_same_kind(a, b);
    return {a.m - b.m, a.n - b.n, a.kind};
}

std::string LatticePoint::str() const {
    return "(" + m.str() + ", " + n.str() + ")";
}

LatticePoint IntMatrix2::apply(const LatticePoint& p) const {
    return {a * p.m + b * p.n, c * p.m + d * p.n, p.kind};
}

IntMatrix2 operator*(const IntMatrix2& lhs, const IntMatrix2& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

std::pair<Int, IntMatrix2> IntMatrix2::primitive() const {
    Int g = int_gcd(int_gcd(int_abs(a), int_abs(b)), int_gcd(int_abs(c), int_abs(d)));
    if (g == 0) throw ZeroMatrixError("zero matrix has no primitive form");
    return {g, IntMatrix2{a / g, b / g, c / g, d / g}};
}

IntMatrix2 IntMatrix2::unimodular_inverse() const {
    const Int dt = det();
    if (dt != 1 && dt != -1)
        throw Error("matrix is not unimodular: det = " + dt.str());
    // adjugate / det with det = +-1
    return {d / dt, -b / dt, -c / dt, a / dt};
}

std::string IntMatrix2::str() const {
    return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
}

RingPtr square_ring() {
    static const RingPtr ring = [] {
        auto base = TowerRing::rationals();
        return base->extend("i", base->zero(), base->from_int(-1), {0.0, 1.0});
    }();
    return ring;
}

RingPtr triangular_ring() {
    static const RingPtr ring = [] {
        auto r1 = sqrt_ring(3);
        return r1->extend("omega", -r1->one(), -r1->one(), {-0.5, kSqrt3 / 2.0});
    }();
    return ring;
}

RingPtr canonical_ring(LatticeKind kind) {
    return kind == LatticeKind::square ? square_ring() : triangular_ring();
}

TowerElement point_to_elem(const LatticePoint& p) {
    return point_to_elem(p, canonical_ring(p.kind));
}

TowerElement point_to_elem(const LatticePoint& p, const RingPtr& ring) {
    std::vector<Rational> c(ring->dimension());
    c[0] = Rational(p.m);
    c[std::size_t{1} << ring->generator_index(unit_name(p.kind))] = Rational(p.n);
    return ring->make(std::move(c));
}

std::pair<TowerElement, TowerElement> point_cartesian(const LatticePoint& p) {
    auto ring = canonical_ring(p.kind);
    if (p.kind == LatticeKind::square)
        return {ring->from_int(p.m), ring->from_int(p.n)};
    // m + n*omega = (m - n/2) + i * n*sqrt(3)/2
    TowerElement x = ring->from_rational(Rational(p.m) - Rational(p.n) / 2);
    TowerElement y = ring->gen("sqrt3") * (Rational(p.n) / 2);
    return {std::move(x), std::move(y)};
}

std::array<double, 2> point_xy(const LatticePoint& p) {
    const double m = to_double(p.m);
    const double n = to_double(p.n);
    if (p.kind == LatticeKind::square) return {m, n};
    return {m - n / 2.0, n * kSqrt3 / 2.0};
}

LatticePoint point_mul(const LatticePoint& p, const LatticePoint& q) {
    require_same_kind(p, q);
    if (p.kind == LatticeKind::square)
        return {p.m * q.m - p.n * q.n, p.m * q.n + p.n * q.m, p.kind};
    // (m1 + n1 w)(m2 + n2 w) with w^2 = -1 - w
    return {p.m * q.m - p.n * q.n, p.m * q.n + p.n * q.m - p.n * q.n, p.kind};
}

LatticePoint point_conj(const LatticePoint& p) {
    if (p.kind == LatticeKind::square) return {p.m, -p.n, p.kind};
    // conj(omega) = -1 - omega
    return {p.m - p.n, -p.n, p.kind};
}

Int point_norm(const LatticePoint& p) {
    if (p.kind == LatticeKind::square) return p.m * p.m + p.n * p.n;
    return p.m * p.m - p.m * p.n + p.n * p.n;
}

std::optional<LatticePoint> point_div_exact(const LatticePoint& z, const LatticePoint& g) {
    require_same_kind(z, g);
    const Int norm = point_norm(g);
    if (norm == 0) return std::nullopt;
    const LatticePoint w = point_mul(z, point_conj(g));
    if (w.m % norm != 0 || w.n % norm != 0) return std::nullopt;
    return LatticePoint{w.m / norm, w.n / norm, z.kind};
}

}  // namespace scalesym
