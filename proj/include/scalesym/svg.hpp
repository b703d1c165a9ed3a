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

#include <string>

#include "scalesym/symmetry.hpp"

namespace scalesym {

/// Figure-style rendering: original lattice points for |m|, |n| <= radius
/// as open circles, their images under the transform as filled dots, and
/// the scaling direction as a line through the origin. 40 user units per
/// lattice unit, origin centered, fixed styling; output bytes depend only
/// on the inputs.
std::string render_lattice_svg(const DirectionalScaling& ds, const InducedMap& im,
                               long long radius);

}  // namespace scalesym
