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

#include <map>
#include <optional>
#include <string>

#include "scalesym/tower.hpp"

namespace scalesym {

/// A real value written as a finite sum of rational multiples of square
/// roots of distinct square-free positive integers: sum of c_d * sqrt(d),
/// with d = 1 carrying the rational part.
struct RadicalForm {
    std::map<Int, Rational> terms;

    static RadicalForm from_rational(const Rational& r);
    bool is_rational() const;

    friend RadicalForm operator+(const RadicalForm& a, const RadicalForm& b);
    friend RadicalForm operator*(const RadicalForm& a, const RadicalForm& b);
    friend RadicalForm operator*(const RadicalForm& a, const Rational& r);

    double value() const;

    /// Canonical string per the report grammar: terms in ascending d, a
    /// single shared positive denominator, overall gcd reduced. Examples:
    /// "0", "7", "3/2", "2-sqrt(3)", "3-2*sqrt(2)", "(2-sqrt(2))/2".
    std::string str() const;
};

/// d = f^2 * g with g square-free; returns (f, g). Requires d >= 1.
std::pair<Int, Int> squarefree_split(const Int& d);

/// Rewrites an element as a flat radical sum when possible: every generator
/// the element touches must be a real quadratic irrationality whose
/// discriminant is rational (sqrt generators and family roots qualify;
/// i and omega do not). Absent when the element has no such form.
std::optional<RadicalForm> radical_form(const TowerElement& e);

/// radical_form + str; absent when no flat radical form exists.
std::optional<std::string> radical_string(const TowerElement& e);

}  // namespace scalesym
