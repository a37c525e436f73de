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

#ifndef RSMA_CUS_JOINT_CDF_HPP
#define RSMA_CUS_JOINT_CDF_HPP

#include "rsma/analytic_context.hpp"
#include "rsma/dual.hpp"

namespace rsma
{

// Joint CDF of X (gain of the largest-CDF user) and Y (gain of the second-largest-CDF user)
// under CDF-based scheduling. The (x, y) plane splits into four regions:
//   I   x >= (R^a + 1) y
//   II  y <= x < (R^a + 1) y
//   III x < y < (R^a + 1) x
//   IV  y >= (R^a + 1) x
enum class JointCase
{
    I = 1,
    II = 2,
    III = 3,
    IV = 4
};

JointCase joint_case(double x, double y, double r_alpha);

// Region expression evaluated regardless of where (x, y) lies. Unclamped.
// Instantiated for double and Dual; the Dual form carries the tangent of x and y.
template <typename T>
T joint_cdf_case(JointCase region, const T &x, const T &y, const AnalyticContext &ctx);

// Dispatched and unclamped; 0 when x <= 0 or y <= 0.
double joint_cdf_raw(double x, double y, const AnalyticContext &ctx);

// Dispatched and clamped to [0, 1].
double joint_cdf(double x, double y, const AnalyticContext &ctx);

// Partial derivatives of the dispatched region expression (0 when x <= 0 or y <= 0).
double joint_cdf_dx(double x, double y, const AnalyticContext &ctx);
double joint_cdf_dy(double x, double y, const AnalyticContext &ctx);

// Partial derivatives of a fixed region expression.
double joint_cdf_case_dx(JointCase region, double x, double y, const AnalyticContext &ctx);
double joint_cdf_case_dy(JointCase region, double x, double y, const AnalyticContext &ctx);

// Marginal CDF of the largest-CDF user's gain: sum_l Psi_l (1 - exp(-mu_l x))^K (unclamped).
double marginal_cdf_first_raw(double x, const AnalyticContext &ctx);
double marginal_cdf_first(double x, const AnalyticContext &ctx);

// Marginal CDF of the second-largest-CDF user's gain:
// K sum Psi (1 - e^{-mu y})^{K-1} - (K-1) sum Psi (1 - e^{-mu y})^K.
double marginal_cdf_second_raw(double y, const AnalyticContext &ctx);
double marginal_cdf_second(double y, const AnalyticContext &ctx);

} // namespace rsma

#endif
