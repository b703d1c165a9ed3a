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

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scalesym/errors.hpp"
#include "scalesym/numeric.hpp"

namespace scalesym {

class TowerRing;
using RingPtr = std::shared_ptr<const TowerRing>;

/// Exact element of a tower of quadratic extensions of the rationals.
///
/// An element over n generators t_0, ..., t_{n-1} is a dense vector of 2^n
/// rational coefficients indexed by square-free monomials: bit j of the
/// index selects generator t_j. Every operation reduces eagerly through the
/// relations t_j^2 = alpha_j t_j + beta_j, so no generator ever appears
/// squared and equality is plain coefficient comparison.
///
/// Elements are immutable values. They carry an identity reference to their
/// ring; combining elements of two distinct rings throws SpecMismatchError
/// even when the rings were built from identical descriptions.
class TowerElement {
  public:
    TowerElement() = default;

    const RingPtr& ring() const { return ring_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// True when every non-constant coefficient vanishes.
    bool is_rational() const;
    /// The constant coefficient; requires is_rational().
    Rational rational_value() const;

    TowerElement operator-() const;
    friend TowerElement operator+(const TowerElement& a, const TowerElement& b);
    friend TowerElement operator-(const TowerElement& a, const TowerElement& b);
    friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
    friend TowerElement operator*(const TowerElement& a, const Rational& r);
    friend TowerElement operator*(const Rational& r, const TowerElement& a);
    friend bool operator==(const TowerElement& a, const TowerElement& b);
    friend bool operator!=(const TowerElement& a, const TowerElement& b) { return !(a == b); }

    /// Exact multiplicative inverse via the recursive norm method: writing
    /// a = p + q t over the top generator, a^{-1} = sigma(a) / N(a) with
    /// sigma(a) = p + q(alpha - t) and N(a) = a sigma(a) in the subtower.
    /// Throws NotInvertibleError when a norm vanishes at any level (the
    /// tower need not be a field when a relation is reducible).
    TowerElement inverse() const;

    /// Substitutes t -> alpha - t for the named generator (the other root
    /// of its relation). The substitution is an involution, and a ring
    /// homomorphism whenever no later generator's relation involves the
    /// conjugated one; that condition is checked and violations throw.
    TowerElement conjugated(std::string_view generator) const;

    /// Evaluates the coefficients against the generators' numeric values.
    std::complex<double> embed() const;

    /// (A, B) iff the element is exactly A + B*unit with A, B rational
    /// integers and every other coefficient zero; absent otherwise.
    std::optional<std::pair<Int, Int>> integer_pair(std::string_view unit) const;

    std::string str() const;

  private:
    friend class TowerRing;
    TowerElement(RingPtr ring, std::vector<Rational> coeffs)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

    RingPtr ring_;
    std::vector<Rational> coeffs_;
};

/// Immutable ring context for a tower of quadratic extensions.
///
/// Built incrementally: start from rationals() and extend() one generator
/// at a time. Generator j's relation t_j^2 = alpha t_j + beta takes alpha
/// and beta as elements of the ring being extended, so a relation can only
/// reference earlier generators. Each generator carries a numeric value
/// used by embed(); extend() rejects numerics that violate the relation.
class TowerRing : public std::enable_shared_from_this<TowerRing> {
  public:
    struct Generator {
        std::string name;
        std::vector<Rational> alpha;  // coefficients over the preceding subtower
        std::vector<Rational> beta;
        std::complex<double> numeric;
    };

    /// The trivial tower Q (no generators). One shared instance.
    static RingPtr rationals();

    /// A new ring with one more generator. `alpha` and `beta` must be
    /// elements of *this*. Throws MalformedSpecError on structural misuse
    /// and NumericMismatchError when `numeric` fails the relation.
    RingPtr extend(std::string name, const TowerElement& alpha, const TowerElement& beta,
                   std::complex<double> numeric) const;

    std::size_t generator_count() const { return gens_.size(); }
    std::size_t dimension() const { return std::size_t{1} << gens_.size(); }
    const Generator& generator(std::size_t j) const { return gens_[j]; }
    const std::vector<Generator>& generators() const { return gens_; }
    std::optional<std::size_t> find_generator(std::string_view name) const;
    /// Like find_generator but throws UnknownGeneratorError.
    std::size_t generator_index(std::string_view name) const;
    bool has_generator(std::string_view name) const { return find_generator(name).has_value(); }

    TowerElement zero() const;
    TowerElement one() const;
    TowerElement from_rational(const Rational& value) const;
    TowerElement from_int(const Int& value) const { return from_rational(Rational(value)); }
    TowerElement gen(std::string_view name) const;
    TowerElement make(std::vector<Rational> coeffs) const;

    const std::vector<std::complex<double>>& monomial_numerics() const { return monomial_numeric_; }
    std::string monomial_name(std::size_t mask) const;

    struct Private {};
    TowerRing(Private, std::vector<Generator> gens);

  private:
    RingPtr self() const { return shared_from_this(); }

    std::vector<Generator> gens_;
    std::vector<std::complex<double>> monomial_numeric_;
};

/// Q(sqrt(d)) with generator named "sqrt<d>"; instances are cached so the
/// same d always yields the same ring object. Requires d >= 2.
RingPtr sqrt_ring(long long d);

}  // namespace scalesym
