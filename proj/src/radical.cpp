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

#include "scalesym/radical.hpp"

#include <cmath>
#include <vector>

namespace scalesym {

namespace {

void add_term(RadicalForm& f, const Int& d, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = f.terms.emplace(d, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) f.terms.erase(it);
    }
}

/// sqrt of a nonnegative rational as a radical form: sqrt(p/q) = sqrt(pq)/q.
RadicalForm sqrt_of_rational(const Rational& r) {
    const Int p = rat_num(r), q = rat_den(r);
    auto [f, g] = squarefree_split(p * q);
    RadicalForm out;
    add_term(out, g, Rational(f) / q);
    return out;
}

}  // namespace

std::pair<Int, Int> squarefree_split(const Int& d) {
    if (d < 1) throw Error("squarefree_split requires d >= 1");
    Int rem = d, f = 1;
    for (Int p = 2; p * p <= rem; p += (p == 2 ? 1 : 2)) {
        while (rem % (p * p) == 0) {
            rem /= p * p;
            f *= p;
        }
    }
    return {f, rem};
}

RadicalForm RadicalForm::from_rational(const Rational& r) {
    RadicalForm out;
    add_term(out, 1, r);
    return out;
}

bool RadicalForm::is_rational() const {
    for (const auto& [d, c] : terms)
        if (d != 1 && c != 0) return false;
    return true;
}

RadicalForm operator+(const RadicalForm& a, const RadicalForm& b) {
    RadicalForm out = a;
    for (const auto& [d, c] : b.terms) add_term(out, d, c);
    return out;
}

RadicalForm operator*(const RadicalForm& a, const RadicalForm& b) {
    RadicalForm out;
    for (const auto& [d1, c1] : a.terms) {
        for (const auto& [d2, c2] : b.terms) {
            auto [f, g] = squarefree_split(d1 * d2);
            add_term(out, g, c1 * c2 * f);
        }
    }
    return out;
}

RadicalForm operator*(const RadicalForm& a, const Rational& r) {
    RadicalForm out;
    for (const auto& [d, c] : a.terms) add_term(out, d, c * r);
    return out;
}

double RadicalForm::value() const {
    double acc = 0.0;
    for (const auto& [d, c] : terms) acc += to_double(c) * std::sqrt(to_double(d));
    return acc;
}

std::string RadicalForm::str() const {
    if (terms.empty()) return "0";

    // One shared positive denominator, everything else integral.
    Int denom = 1;
    for (const auto& [d, c] : terms) denom = int_lcm(denom, rat_den(c));
    std::vector<std::pair<Int, Int>> parts;  // (d, integer coefficient)
    Int overall = denom;
    for (const auto& [d, c] : terms) {
        Int num = rat_num(c) * (denom / rat_den(c));
        overall = int_gcd(overall, int_abs(num));
        parts.emplace_back(d, std::move(num));
    }
    if (overall > 1) {
        denom /= overall;
        for (auto& [d, num] : parts) num /= overall;
    }

    std::string numer;
    for (const auto& [d, num] : parts) {
        const bool neg = num < 0;
        const Int mag = int_abs(num);
        if (numer.empty())
            numer += neg ? "-" : "";
        else
            numer += neg ? "-" : "+";
        if (d == 1)
            numer += mag.str();
        else if (mag == 1)
            numer += "sqrt(" + d.str() + ")";
        else
            numer += mag.str() + "*sqrt(" + d.str() + ")";
    }
    if (denom == 1) return numer;
    if (parts.size() == 1 && parts[0].first == 1) return numer + "/" + denom.str();
    return "(" + numer + ")/" + denom.str();
}

std::optional<RadicalForm> radical_form(const TowerElement& e) {
    const RingPtr& ring = e.ring();
    if (!ring) return std::nullopt;
    const std::size_t n = ring->generator_count();

    // Radical expansions of the generators themselves, built bottom-up; a
    // generator with no flat real form (i, omega) stays disengaged and only
    // poisons monomials that actually use it.
    std::vector<std::optional<RadicalForm>> gen_rad(n);
    auto span_form = [&](const std::vector<Rational>& coeffs,
                         std::size_t upto) -> std::optional<RadicalForm> {
        RadicalForm acc;
        for (std::size_t mask = 0; mask < coeffs.size(); ++mask) {
            if (coeffs[mask] == 0) continue;
            RadicalForm term = RadicalForm::from_rational(coeffs[mask]);
            for (std::size_t j = 0; j < upto; ++j) {
                if ((mask >> j) & 1u) {
                    if (!gen_rad[j]) return std::nullopt;
                    term = term * *gen_rad[j];
                }
            }
            acc = acc + term;
        }
        return acc;
    };

    for (std::size_t j = 0; j < n; ++j) {
        const auto& g = ring->generator(j);
        if (std::abs(g.numeric.imag()) > 1e-9) continue;  // complex generator
        auto alpha = span_form(g.alpha, j);
        auto beta = span_form(g.beta, j);
        if (!alpha || !beta) continue;
        const RadicalForm disc = *alpha * *alpha + *beta * Rational(4);
        if (!disc.is_rational()) continue;  // nested radical, not flattened
        auto it = disc.terms.find(1);
        const Rational disc_val = it == disc.terms.end() ? Rational(0) : it->second;
        if (disc_val < 0) continue;
        const RadicalForm sqrt_disc = sqrt_of_rational(disc_val);
        const Rational half(Int(1), Int(2));
        const RadicalForm plus = (*alpha + sqrt_disc) * half;
        const RadicalForm minus = (*alpha + sqrt_disc * Rational(-1)) * half;
        gen_rad[j] = std::abs(plus.value() - g.numeric.real()) <=
                             std::abs(minus.value() - g.numeric.real())
                         ? plus
                         : minus;
    }

    return span_form(e.coeffs(), n);
}

std::optional<std::string> radical_string(const TowerElement& e) {
    auto form = radical_form(e);
    if (!form) return std::nullopt;
    return form->str();
}

}  // namespace scalesym
