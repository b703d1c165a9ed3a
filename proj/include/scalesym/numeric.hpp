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

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <optional>
#include <string>

namespace scalesym {

/// Arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator (the backend canonicalizes on every operation),
/// so equality is structural.
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }
inline double to_double(const Int& v) { return v.template convert_to<double>(); }

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int int_abs(const Int& a) { return boost::multiprecision::abs(a); }

/// "p" when integral, "p/q" otherwise.
inline std::string rational_str(const Rational& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline std::optional<long long> to_int64(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v < lo || v > hi) return std::nullopt;
    return v.template convert_to<long long>();
}

}  // namespace scalesym
