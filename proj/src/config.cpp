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

#include "rsma/config.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rsma
{

void SystemConfig::validate() const
{
    auto fail = [](const std::string &field, const std::string &why) {
        throw std::invalid_argument(field + ": " + why);
    };
    if (K < 2)
        fail("system.users", "at least 2 users are required");
    if (!(radius_m > 0.0) || !std::isfinite(radius_m))
        fail("system.radius_m", "must be positive");
    if (!(alpha > 2.0) || !std::isfinite(alpha))
        fail("system.path_loss_exponent", "must exceed 2");
    if (!std::isfinite(noise_power_dbm))
        fail("system.noise_dbm", "must be finite");
    if (!std::isfinite(p_max_dbm))
        fail("system.power_dbm", "must be finite");
    const std::pair<const char *, std::size_t> orders_list[] = {
        {"quadrature.L", orders.L}, {"quadrature.M", orders.M}, {"quadrature.Q", orders.Q},
        {"quadrature.N", orders.N}, {"quadrature.B", orders.B}, {"quadrature.outer", orders.outer}};
    for (const auto &[name, order] : orders_list)
        if (order < 1)
            fail(name, "order must be at least 1");
    const std::pair<const char *, double> rate_list[] = {{"targets.primary", targets.primary},
                                                         {"targets.secondary", targets.secondary},
                                                         {"targets.first", targets.first},
                                                         {"targets.second", targets.second}};
    for (const auto &[name, rate] : rate_list)
        if (!(rate >= 0.0) || !std::isfinite(rate))
            fail(name, "target rate must be non-negative");
}

double SystemConfig::rho() const { return rho_at(p_max_dbm); }

double SystemConfig::rho_at(double power_dbm) const { return db_to_linear(power_dbm - noise_power_dbm); }

std::string SystemConfig::fingerprint_text() const
{
    std::ostringstream os;
    os.precision(17);
    os << "K=" << K << ";R=" << radius_m << ";alpha=" << alpha << ";noise=" << noise_power_dbm
       << ";pmax=" << p_max_dbm << ";orders=" << orders.L << ',' << orders.M << ',' << orders.Q << ','
       << orders.N << ',' << orders.B << ',' << orders.outer << ";targets=" << targets.primary << ','
       << targets.secondary << ',' << targets.first << ',' << targets.second;
    return os.str();
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double target_sinr(double rate) { return std::exp2(rate) - 1.0; }

std::uint64_t fnv1a(const std::string &text)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text)
    {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace rsma
