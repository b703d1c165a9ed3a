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

#include "scalesym/tower.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <span>
#include <sstream>

namespace scalesym {

namespace {

using CSpan = std::span<const Rational>;
using Span = std::span<Rational>;

bool span_zero(CSpan s) {
    for (const auto& c : s)
        if (c != 0) return false;
    return true;
}

/// out += a * b over the first n generators. Spans have length 2^n; the
/// high half of an index range carries generator t_{n-1}. Reduction through
/// t^2 = alpha t + beta happens here, eagerly, so results stay square-free.
void mul_acc(const std::vector<TowerRing::Generator>& gens, std::size_t n, CSpan a, CSpan b,
             Span out) {
    if (span_zero(a) || span_zero(b)) return;
    if (n == 0) {
        out[0] += a[0] * b[0];
        return;
    }
    const std::size_t h = std::size_t{1} << (n - 1);
    CSpan p1 = a.first(h), q1 = a.subspan(h);
    CSpan p2 = b.first(h), q2 = b.subspan(h);
    Span lo = out.first(h), hi = out.subspan(h);

    mul_acc(gens, n - 1, p1, p2, lo);
    mul_acc(gens, n - 1, p1, q2, hi);
    mul_acc(gens, n - 1, q1, p2, hi);
    if (!span_zero(q1) && !span_zero(q2)) {
        std::vector<Rational> qq(h);
        mul_acc(gens, n - 1, q1, q2, qq);
        const auto& g = gens[n - 1];
        mul_acc(gens, n - 1, qq, CSpan(g.beta), lo);   // t^2 contributes beta ...
        mul_acc(gens, n - 1, qq, CSpan(g.alpha), hi);  // ... plus alpha * t
    }
}

void negate_span(Span s) {
    for (auto& c : s) c = -c;
}

/// Inverse over the first n generators; recursive norm descent.
std::vector<Rational> inv_level(const std::vector<TowerRing::Generator>& gens, std::size_t n,
                                CSpan a) {
    if (n == 0) {
        if (a[0] == 0) throw NotInvertibleError("division by zero in the base field");
        return {Rational(1) / a[0]};
    }
    const std::size_t h = std::size_t{1} << (n - 1);
    CSpan p = a.first(h), q = a.subspan(h);
    std::vector<Rational> out(std::size_t{2} << (n - 1));
    Span out_lo = Span(out).first(h), out_hi = Span(out).subspan(h);

    if (span_zero(q)) {
        auto sub = inv_level(gens, n - 1, p);
        std::copy(sub.begin(), sub.end(), out_lo.begin());
        return out;
    }

    const auto& g = gens[n - 1];
    // N(a) = p^2 + alpha p q - beta q^2, an element of the subtower.
    std::vector<Rational> norm(h), pq(h), qq(h);
    mul_acc(gens, n - 1, p, p, norm);
    mul_acc(gens, n - 1, p, q, pq);
    mul_acc(gens, n - 1, pq, CSpan(g.alpha), norm);
    mul_acc(gens, n - 1, q, q, qq);
    negate_span(qq);
    mul_acc(gens, n - 1, qq, CSpan(g.beta), norm);
    if (span_zero(norm))
        throw NotInvertibleError("norm vanishes: element is zero or a zero divisor");

    auto inv_norm = inv_level(gens, n - 1, norm);

    // sigma(a) = (p + q alpha) - q t
    std::vector<Rational> sig_lo(p.begin(), p.end());
    mul_acc(gens, n - 1, q, CSpan(g.alpha), sig_lo);
    std::vector<Rational> sig_hi(q.begin(), q.end());
    negate_span(sig_hi);

    mul_acc(gens, n - 1, sig_lo, inv_norm, out_lo);
    mul_acc(gens, n - 1, sig_hi, inv_norm, out_hi);
    return out;
}

/// Substitution t_target -> alpha - t_target, applied over n generators.
void conj_level(const std::vector<TowerRing::Generator>& gens, std::size_t n, std::size_t target,
                CSpan in, Span out) {
    const std::size_t h = std::size_t{1} << (n - 1);
    CSpan in_lo = in.first(h), in_hi = in.subspan(h);
    Span out_lo = out.first(h), out_hi = out.subspan(h);
    if (target == n - 1) {
        std::copy(in_lo.begin(), in_lo.end(), out_lo.begin());
        mul_acc(gens, n - 1, in_hi, CSpan(gens[target].alpha), out_lo);
        for (std::size_t i = 0; i < h; ++i) out_hi[i] = -in_hi[i];
    } else {
        conj_level(gens, n - 1, target, in_lo, out_lo);
        conj_level(gens, n - 1, target, in_hi, out_hi);
    }
}

void require_same_ring(const TowerElement& a, const TowerElement& b) {
    if (!a.ring() || !b.ring()) throw SpecMismatchError("operation on an uninitialized element");
    if (a.ring().get() != b.ring().get())
        throw SpecMismatchError("elements belong to different towers");
}

}  // namespace

// ---------------------------------------------------------------------------
// TowerElement

bool TowerElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool TowerElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational TowerElement::rational_value() const {
    if (!is_rational()) throw Error("element is not rational: " + str());
    return coeffs_[0];
}

TowerElement TowerElement::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& v : c) v = -v;
    return TowerElement(ring_, std::move(c));
}

TowerElement operator+(const TowerElement& a, const TowerElement& b) {
    require_same_ring(a, b);
    std::vector<Rational> c(a.coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return TowerElement(a.ring_, std::move(c));
}

TowerElement operator-(const TowerElement& a, const TowerElement& b) {
    require_same_ring(a, b);
    std::vector<Rational> c(a.coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
    return TowerElement(a.ring_, std::move(c));
}

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
    require_same_ring(a, b);
    std::vector<Rational> c(a.coeffs_.size());
    mul_acc(a.ring_->generators(), a.ring_->generator_count(), CSpan(a.coeffs_),
            CSpan(b.coeffs_), Span(c));
    return TowerElement(a.ring_, std::move(c));
}

TowerElement operator*(const TowerElement& a, const Rational& r) {
    std::vector<Rational> c(a.coeffs_);
    for (auto& v : c) v *= r;
    return TowerElement(a.ring_, std::move(c));
}

TowerElement operator*(const Rational& r, const TowerElement& a) { return a * r; }

bool operator==(const TowerElement& a, const TowerElement& b) {
    require_same_ring(a, b);
    return a.coeffs_ == b.coeffs_;
}

TowerElement TowerElement::inverse() const {
    if (!ring_) throw SpecMismatchError("operation on an uninitialized element");
    auto c = inv_level(ring_->generators(), ring_->generator_count(), CSpan(coeffs_));
    return TowerElement(ring_, std::move(c));
}

TowerElement TowerElement::conjugated(std::string_view generator) const {
    if (!ring_) throw SpecMismatchError("operation on an uninitialized element");
    const std::size_t g = ring_->generator_index(generator);
    const auto& gens = ring_->generators();
    // The substitution extends to a homomorphism only when no later relation
    // involves the conjugated generator.
    for (std::size_t j = g + 1; j < gens.size(); ++j) {
        for (std::size_t mask = 0; mask < gens[j].alpha.size(); ++mask) {
            if ((mask >> g) & 1u) {
                if (gens[j].alpha[mask] != 0 || gens[j].beta[mask] != 0)
                    throw Error("conjugation by '" + std::string(generator) +
                                "' does not commute with the relation of '" + gens[j].name + "'");
            }
        }
    }
    std::vector<Rational> out(coeffs_.size());
    conj_level(gens, ring_->generator_count(), g, CSpan(coeffs_), Span(out));
    return TowerElement(ring_, std::move(out));
}

std::complex<double> TowerElement::embed() const {
    std::complex<double> acc{0.0, 0.0};
    const auto& nums = ring_->monomial_numerics();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) acc += to_double(coeffs_[i]) * nums[i];
    }
    return acc;
}

std::optional<std::pair<Int, Int>> TowerElement::integer_pair(std::string_view unit) const {
    const std::size_t u = ring_->generator_index(unit);
    const std::size_t ubit = std::size_t{1} << u;
    for (std::size_t mask = 0; mask < coeffs_.size(); ++mask) {
        if (mask == 0 || mask == ubit) continue;
        if (coeffs_[mask] != 0) return std::nullopt;
    }
    if (!is_integer(coeffs_[0]) || !is_integer(coeffs_[ubit])) return std::nullopt;
    return std::make_pair(rat_num(coeffs_[0]), rat_num(coeffs_[ubit]));
}

std::string TowerElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t mask = 0; mask < coeffs_.size(); ++mask) {
        if (coeffs_[mask] == 0) continue;
        if (!first) os << " + ";
        os << "(" << rational_str(coeffs_[mask]) << ")";
        if (mask != 0) os << "*" << ring_->monomial_name(mask);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// TowerRing

TowerRing::TowerRing(Private, std::vector<Generator> gens) : gens_(std::move(gens)) {
    monomial_numeric_.assign(dimension(), {1.0, 0.0});
    for (std::size_t mask = 1; mask < dimension(); ++mask) {
        std::complex<double> v{1.0, 0.0};
        for (std::size_t j = 0; j < gens_.size(); ++j)
            if ((mask >> j) & 1u) v *= gens_[j].numeric;
        monomial_numeric_[mask] = v;
    }
}

RingPtr TowerRing::rationals() {
    static const RingPtr base = std::make_shared<TowerRing>(Private{}, std::vector<Generator>{});
    return base;
}

RingPtr TowerRing::extend(std::string name, const TowerElement& alpha, const TowerElement& beta,
                          std::complex<double> numeric) const {
    if (name.empty()) throw MalformedSpecError("generator name must be nonempty");
    if (find_generator(name))
        throw MalformedSpecError("duplicate generator name '" + name + "'");
    if (alpha.ring().get() != this || beta.ring().get() != this)
        throw MalformedSpecError(
            "relation coefficients for '" + name +
            "' must be elements of the preceding subtower");

    const std::complex<double> lhs = numeric * numeric;
    const std::complex<double> rhs = alpha.embed() * numeric + beta.embed();
    const double scale = 1.0 + std::abs(lhs) + std::abs(rhs);
    if (std::abs(lhs - rhs) > 1e-12 * scale)
        throw NumericMismatchError("numeric value for '" + name +
                                   "' violates its quadratic relation");

    std::vector<Generator> gens(gens_);
    gens.push_back(Generator{std::move(name), alpha.coeffs(), beta.coeffs(), numeric});
    return std::make_shared<TowerRing>(Private{}, std::move(gens));
}

std::optional<std::size_t> TowerRing::find_generator(std::string_view name) const {
    for (std::size_t j = 0; j < gens_.size(); ++j)
        if (gens_[j].name == name) return j;
    return std::nullopt;
}

std::size_t TowerRing::generator_index(std::string_view name) const {
    if (auto j = find_generator(name)) return *j;
    throw UnknownGeneratorError("no generator named '" + std::string(name) + "'");
}

TowerElement TowerRing::zero() const { return TowerElement(self(), std::vector<Rational>(dimension())); }

TowerElement TowerRing::one() const { return from_rational(Rational(1)); }

TowerElement TowerRing::from_rational(const Rational& value) const {
    std::vector<Rational> c(dimension());
    c[0] = value;
    return TowerElement(self(), std::move(c));
}

TowerElement TowerRing::gen(std::string_view name) const {
    std::vector<Rational> c(dimension());
    c[std::size_t{1} << generator_index(name)] = 1;
    return TowerElement(self(), std::move(c));
}

TowerElement TowerRing::make(std::vector<Rational> coeffs) const {
    if (coeffs.size() != dimension())
        throw MalformedSpecError("coefficient vector has wrong length for this tower");
    return TowerElement(self(), std::move(coeffs));
}

std::string TowerRing::monomial_name(std::size_t mask) const {
    std::string out;
    for (std::size_t j = 0; j < gens_.size(); ++j) {
        if ((mask >> j) & 1u) {
            if (!out.empty()) out += "*";
            out += gens_[j].name;
        }
    }
    return out.empty() ? "1" : out;
}

RingPtr sqrt_ring(long long d) {
    if (d < 2) throw MalformedSpecError("sqrt_ring requires d >= 2");
    static std::mutex mu;
    static std::map<long long, RingPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    auto base = TowerRing::rationals();
    auto ring = base->extend("sqrt" + std::to_string(d), base->zero(), base->from_int(d),
                             {std::sqrt(static_cast<double>(d)), 0.0});
    cache.emplace(d, ring);
    return ring;
}

}  // namespace scalesym
