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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "scalesym/transform.hpp"

using namespace scalesym;

TEST_CASE("square family members") {
    auto ds2 = square_family(2);
    CHECK(std::abs(ds2.tan_theta.embed().real() - 0.4142135624) < 1e-9);  // tan(pi/8)
    CHECK(std::abs(ds2.scale.embed().real() - 0.1715728753) < 1e-9);
    CHECK(std::abs(ds2.theta_degrees() - 22.5) < 1e-9);

    auto ds1 = square_family(1);
    CHECK(std::abs(ds1.tan_theta.embed().real() - 0.6180339887) < 1e-9);  // golden ratio
    CHECK(std::abs(ds1.theta_degrees() - 31.7175) < 5e-4);

    auto ds3 = square_family(3);
    const double root = (std::sqrt(13.0) - 3.0) / 2.0;  // solves x^2 + 3x - 1 = 0
    CHECK(std::abs(ds3.tan_theta.embed().real() - root) < 1e-12);

    CHECK_THROWS_AS(square_family(0), Error);

    // scale law and direction window hold across the family
    for (long long k : {1, 2, 3, 7, 20, 200}) {
        auto ds = square_family(k);
        CHECK(ds.scale == ds.tan_theta * ds.tan_theta);
        const double t = ds.tan_theta.embed().real();
        CHECK(t > 0.0);
        CHECK(t < 1.0);
    }
}

TEST_CASE("triangular known case") {
    auto ds = triangular_known();
    CHECK(std::abs(ds.scale.embed().real() - 0.0717967697) < 1e-9);      // 7 - 4 sqrt3
    CHECK(std::abs(ds.tan_theta.embed().real() - 0.2679491924) < 1e-9);  // tan(pi/12)
    CHECK(std::abs(ds.theta_degrees() - 15.0) < 1e-9);

    // tan(pi/12) satisfies x^2 + 2 sqrt3 x - 1 = 0 exactly
    auto ring = ds.ring;
    auto residual = ds.tan_theta * ds.tan_theta +
                    ring->gen("sqrt3") * Rational(2) * ds.tan_theta - ring->one();
    CHECK(residual.is_zero());
}

TEST_CASE("named ratios") {
    auto lam = silver_ratio();
    auto s2 = lam.ring();
    CHECK(lam * lam == s2->from_int(3) - s2->gen("sqrt2") * Rational(2));

    auto mu = platinum_ratio();
    auto s3 = mu.ring();
    CHECK(mu * mu == s3->from_int(7) - s3->gen("sqrt3") * Rational(4));

    auto phi = golden_ratio();
    auto s5 = phi.ring();
    CHECK(phi * phi == (s5->from_int(3) - s5->gen("sqrt5")) * Rational(Int(1), Int(2)));

    // the k = 2 direction is the silver ratio; the k = 1 direction the golden
    CHECK(std::abs(square_family(2).tan_theta.embed().real() - lam.embed().real()) < 1e-12);
    CHECK(std::abs(square_family(1).tan_theta.embed().real() - phi.embed().real()) < 1e-12);
    // the triangular direction is the platinum ratio
    CHECK(std::abs(triangular_known().tan_theta.embed().real() - mu.embed().real()) < 1e-12);
}

TEST_CASE("apply_exact on the paper's sample points") {
    auto ds2 = square_family(2);
    const auto z = apply_exact(ds2, {1, 0, LatticeKind::square}).embed();
    CHECK(std::abs(z.real() - 0.2928932) < 1e-6);  // (2 - sqrt2)/2 * (1 - i)
    CHECK(std::abs(z.imag() + 0.2928932) < 1e-6);

    auto tri = triangular_known();
    const auto w = apply_exact(tri, {1, 0, LatticeKind::triangular}).embed();
    CHECK(std::abs(w.real() - 0.1339746) < 1e-6);  // (2 - sqrt3) * (-omega)
    CHECK(std::abs(w.imag() + 0.2320508) < 1e-6);

    CHECK(apply_exact(ds2, {0, 0, LatticeKind::square}).is_zero());

    CHECK_THROWS_AS(apply_exact(ds2, {1, 0, LatticeKind::triangular}), KindMismatchError);
}

TEST_CASE("apply_float matches the worked k = 1 example") {
    auto ds1 = square_family(1);
    const auto out = apply_float(ds1, {1.0, 0.0});
    // (5 - sqrt5)/10 * (2, -1)
    CHECK(std::abs(out[0] - 0.5527864) < 1e-6);
    CHECK(std::abs(out[1] + 0.2763932) < 1e-6);

    auto tri = triangular_known();
    const auto w = apply_float(tri, point_xy({1, 0, LatticeKind::triangular}));
    CHECK(std::abs(w[0] - 0.1339746) < 1e-6);
    CHECK(std::abs(w[1] + 0.2320508) < 1e-6);
}

TEST_CASE("S_r = 1 is the identity scaling") {
    // tan(theta) = 1 forces S_r = 1; the operator collapses to the identity
    auto sq = square_ring();
    auto ds = custom_scaling(LatticeKind::square, sq->one());
    const auto out = apply_float(ds, {0.3, -1.7});
    CHECK(std::abs(out[0] - 0.3) < 1e-15);
    CHECK(std::abs(out[1] + 1.7) < 1e-15);
    const LatticePoint p{4, -9, LatticeKind::square};
    CHECK(apply_exact(ds, p) == point_to_elem(p, sq));
}

TEST_CASE("exact and float paths agree within 1e-9 relative") {
    std::mt19937 rng(314);
    std::uniform_int_distribution<long long> d(-1000, 1000);
    std::vector<DirectionalScaling> cases;
    for (long long k : {1, 2, 3, 4, 5, 10, 25, 50}) cases.push_back(square_family(k));
    cases.push_back(triangular_known());
    for (const auto& ds : cases) {
        for (int t = 0; t < 100; ++t) {
            const LatticePoint p{d(rng), d(rng), ds.kind};
            const auto exact = apply_exact(ds, p).embed();
            const auto xy = point_xy(p);
            const auto flt = apply_float(ds, xy);
            const double z = std::hypot(xy[0], xy[1]);
            CHECK(std::hypot(exact.real() - flt[0], exact.imag() - flt[1]) <=
                  1e-9 * (1.0 + z));
        }
    }
}

TEST_CASE("both formulations agree to 1e-12 near the origin") {
    // embed(apply_exact) evaluates the conjugation form; apply_float the
    // resolution form. On unit-scale inputs they agree to double precision.
    for (auto ds : {square_family(1), square_family(2), triangular_known()}) {
        for (long long m = -3; m <= 3; ++m) {
            for (long long n = -3; n <= 3; ++n) {
                const LatticePoint p{m, n, ds.kind};
                const auto exact = apply_exact(ds, p).embed();
                const auto flt = apply_float(ds, point_xy(p));
                CHECK(std::abs(exact.real() - flt[0]) < 1e-12);
                CHECK(std::abs(exact.imag() - flt[1]) < 1e-12);
            }
        }
    }
}

TEST_CASE("apply_exact is additive") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<long long> d(-500, 500);
    for (auto ds : {square_family(3), triangular_known()}) {
        for (int t = 0; t < 100; ++t) {
            const LatticePoint p{d(rng), d(rng), ds.kind};
            const LatticePoint q{d(rng), d(rng), ds.kind};
            CHECK(apply_exact(ds, p + q) == apply_exact(ds, p) + apply_exact(ds, q));
        }
    }
}

TEST_CASE("eigen-structure of the float path") {
    for (auto ds : {square_family(1), square_family(2), triangular_known()}) {
        const double theta = ds.theta_radians();
        const double c = std::cos(theta), s = std::sin(theta);
        const double sr = ds.scale.embed().real();

        const auto fixed = apply_float(ds, {-s, c});
        CHECK(std::abs(fixed[0] + s) < 1e-12);
        CHECK(std::abs(fixed[1] - c) < 1e-12);

        const auto scaled = apply_float(ds, {c, s});
        CHECK(std::abs(scaled[0] - sr * c) < 1e-12);
        CHECK(std::abs(scaled[1] - sr * s) < 1e-12);
    }
}

TEST_CASE("conjugation form reproduces the raw expansion with S_r = x^2") {
    // T(m + ni) = {n x^3 - n x + 2 m x^2 + i(m x^3 - m x + n x^4 + n)}/(1 + x^2)
    std::mt19937 rng(777);
    std::uniform_int_distribution<long long> d(-50, 50);
    for (long long k : {1, 2, 3, 7}) {
        auto ds = square_family(k);
        auto ring = ds.ring;
        auto x = ring->gen("x");
        auto i = ring->gen("i");
        auto x2 = x * x, x3 = x2 * x, x4 = x3 * x;
        auto inv_denom = (ring->one() + x2).inverse();
        for (int t = 0; t < 50; ++t) {
            const long long m = d(rng), n = d(rng);
            auto real_part = (x3 - x) * Rational(n) + x2 * Rational(2 * m);
            auto imag_part = (x3 - x) * Rational(m) + x4 * Rational(n) + ring->from_int(n);
            auto expanded = (real_part + i * imag_part) * inv_denom;
            CHECK(apply_exact(ds, {m, n, LatticeKind::square}) == expanded);
        }
    }
}

TEST_CASE("seeded float agreement driver") {
    auto fa = check_float_agreement(square_family(3), 2000, 1e-9, 42);
    CHECK(fa.pass);
    CHECK(fa.samples == 2000);

    // single sample is the origin: zero deviation
    auto fa1 = check_float_agreement(square_family(3), 1, 1e-30, 42);
    CHECK(fa1.max_deviation == 0.0);
    CHECK(fa1.pass);

    // below machine epsilon must fail once real points enter
    auto fa2 = check_float_agreement(square_family(3), 1000, 1e-30, 42);
    CHECK_FALSE(fa2.pass);
}
