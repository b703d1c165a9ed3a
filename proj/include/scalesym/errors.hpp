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

#include <stdexcept>

namespace scalesym {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A tower description is inconsistent (duplicate generator name, relation
/// coefficients taken from a foreign ring, malformed coefficient vector).
class MalformedSpecError : public Error {
  public:
    using Error::Error;
};

/// The floating-point value attached to a generator does not satisfy the
/// generator's quadratic relation.
class NumericMismatchError : public Error {
  public:
    using Error::Error;
};

/// Two elements of distinct towers were combined. Towers are never coerced.
class SpecMismatchError : public Error {
  public:
    using Error::Error;
};

/// Inversion hit a vanishing norm (the ring need not be a field).
class NotInvertibleError : public Error {
  public:
    using Error::Error;
};

class UnknownGeneratorError : public Error {
  public:
    using Error::Error;
};

/// A lattice point or transform of one kind was used with the other kind.
class KindMismatchError : public Error {
  public:
    using Error::Error;
};

/// A transform failed the integrality predicate: its induced map does not
/// carry the lattice into a scalar multiple of itself. Searches rely on
/// this as a negative signal rather than a fault.
class NotLatticePreservingError : public Error {
  public:
    using Error::Error;
};

class ZeroMatrixError : public Error {
  public:
    using Error::Error;
};

}  // namespace scalesym
