// SPDX-License-Identifier: Apache-2.0
//
// rsma-uplink: outage and fairness evaluation for two-user uplink RSMA
// Copyright (C) 2026 rsma-uplink contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RSMA_DUAL_HPP
#define RSMA_DUAL_HPP

#include <cmath>

namespace rsma
{

// Forward-mode dual number: value v and tangent d.
struct Dual
{
    double v = 0.0;
    double d = 0.0;

    constexpr Dual() = default;
    constexpr Dual(double value) : v(value) {}
    constexpr Dual(double value, double tangent) : v(value), d(tangent) {}

    Dual &operator+=(const Dual &o) { v += o.v; d += o.d; return *this; }
    Dual &operator-=(const Dual &o) { v -= o.v; d -= o.d; return *this; }
    Dual &operator*=(const Dual &o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
    Dual &operator/=(const Dual &o) { d = (d * o.v - v * o.d) / (o.v * o.v); v /= o.v; return *this; }
};

inline Dual operator+(Dual a, const Dual &b) { return a += b; }
inline Dual operator-(Dual a, const Dual &b) { return a -= b; }
inline Dual operator*(Dual a, const Dual &b) { return a *= b; }
inline Dual operator/(Dual a, const Dual &b) { return a /= b; }
inline Dual operator-(const Dual &a) { return {-a.v, -a.d}; }

inline bool operator<(const Dual &a, const Dual &b) { return a.v < b.v; }
inline bool operator>(const Dual &a, const Dual &b) { return a.v > b.v; }
inline bool operator<=(const Dual &a, const Dual &b) { return a.v <= b.v; }
inline bool operator>=(const Dual &a, const Dual &b) { return a.v >= b.v; }

inline Dual exp(const Dual &a)
{
    const double e = std::exp(a.v);
    return {e, e * a.d};
}

inline Dual expm1(const Dual &a) { return {std::expm1(a.v), std::exp(a.v) * a.d}; }

inline Dual log(const Dual &a) { return {std::log(a.v), a.d / a.v}; }

inline Dual sqrt(const Dual &a)
{
    const double s = std::sqrt(a.v);
    return {s, a.d / (2.0 * s)};
}

// Real exponent. A zero base has a zero tangent contribution when the tangent is zero.
inline Dual pow(const Dual &a, double p)
{
    const double r = std::pow(a.v, p);
    if (a.d == 0.0)
        return {r, 0.0};
    return {r, p * std::pow(a.v, p - 1.0) * a.d};
}

inline Dual pow(const Dual &a, int p)
{
    return pow(a, static_cast<double>(p));
}

inline double value_of(double a) { return a; }
inline double value_of(const Dual &a) { return a.v; }

} // namespace rsma

#endif
