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

#include "scalesym/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace scalesym {

namespace {

constexpr double kUnit = 40.0;  // user units per lattice unit

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string render_lattice_svg(const DirectionalScaling& ds, const InducedMap& im,
                               long long radius) {
    const double r = static_cast<double>(radius);
    double half_w, half_h;
    if (ds.kind == LatticeKind::square) {
        half_w = half_h = kUnit * (r + 1.0);
    } else {
        half_w = kUnit * (1.5 * r + 1.0);
        half_h = kUnit * (0.8660254037844386 * r + 1.0);
    }
    const long long w = 2 * static_cast<long long>(std::ceil(half_w));
    const long long h = 2 * static_cast<long long>(std::ceil(half_h));
    const double cx = w / 2.0, cy = h / 2.0;
    auto px = [&](double x) { return cx + kUnit * x; };
    auto py = [&](double y) { return cy - kUnit * y; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";

    // Scaling direction through the origin.
    const double theta = ds.theta_radians();
    const double len = std::hypot(cx, cy);
    os << "<line x1=\"" << num(cx - len * std::cos(theta)) << "\" y1=\""
       << num(cy + len * std::sin(theta)) << "\" x2=\"" << num(cx + len * std::cos(theta))
       << "\" y2=\"" << num(cy - len * std::sin(theta))
       << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

    const double scalar = im.scalar.embed().real();
    for (long long m = -radius; m <= radius; ++m) {
        for (long long n = -radius; n <= radius; ++n) {
            const LatticePoint p{m, n, ds.kind};
            const auto xy = point_xy(p);
            os << "<circle cx=\"" << num(px(xy[0])) << "\" cy=\"" << num(py(xy[1]))
               << "\" r=\"3.2\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
        }
    }
    for (long long m = -radius; m <= radius; ++m) {
        for (long long n = -radius; n <= radius; ++n) {
            const LatticePoint p{m, n, ds.kind};
            const auto xy = point_xy(im.matrix.apply(p));
            os << "<circle cx=\"" << num(px(scalar * xy[0])) << "\" cy=\""
               << num(py(scalar * xy[1]))
               << "\" r=\"2.0\" fill=\"#c02020\" stroke=\"none\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace scalesym
