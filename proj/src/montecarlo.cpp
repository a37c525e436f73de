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


#include "rsma/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rsma
{

double proportion_half_width(double p, std::uint64_t n)
{
    if (n == 0)
        return 0.0;
    return 1.96 * std::sqrt(std::max(p * (1.0 - p), 0.0) / double(n));
}

unsigned resolve_workers(unsigned requested)
{
    if (requested > 0)
        return requested;
    if (const char *env = std::getenv("RSMA_WORKERS"))
    {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return unsigned(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace
{

// Runs fn(block, trials_in_block) for every block and returns the partial results in block order.
template <typename Partial, typename Fn>
std::vector<Partial> run_blocks(std::uint64_t trials, unsigned workers, Fn &&fn)
{
    if (trials == 0)
        throw std::invalid_argument("Monte Carlo needs at least one trial");
    const std::uint64_t blocks = (trials + mc_block_size - 1) / mc_block_size;
    std::vector<Partial> parts(blocks);
    std::atomic<std::uint64_t> next{0};
    const auto work = [&] {
        for (std::uint64_t b = next++; b < blocks; b = next++)
        {
            const std::uint64_t n = std::min(mc_block_size, trials - b * mc_block_size);
            parts[b] = fn(b, n);
        }
    };
    const unsigned w = unsigned(std::min<std::uint64_t>(resolve_workers(workers), blocks));
    if (w <= 1)
        work();
    else
    {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < w; ++t)
            pool.emplace_back(work);
        for (auto &th : pool)
            th.join();
    }
    return parts;
}

void validate_options(const SystemConfig &cfg, const McOptions &opt)
{
    cfg.validate();
    if (opt.distances && opt.distances->size() != cfg.K)
        throw std::invalid_argument("McOptions.distances: need one distance per user");
    if (opt.gains && opt.gains->size() != cfg.K)
        throw std::invalid_argument("McOptions.gains: need one gain per user");
}

// Draws the channel of one trial according to the options.
class ChannelSource
{
  public:
    ChannelSource(const SystemConfig &cfg, const McOptions &opt) : cfg_(cfg), opt_(opt)
    {
        if (opt.gains)
        {
            fixed_.gains = *opt.gains;
            fixed_.distances = opt.distances ? *opt.distances : std::vector<double>(cfg.K, cfg.radius_m);
            fixed_.cdf_values.resize(cfg.K);
            for (std::size_t k = 0; k < cfg.K; ++k)
                fixed_.cdf_values[k] = conditional_gain_cdf(fixed_.gains[k], fixed_.distances[k], cfg.alpha);
        }
    }

    const ChannelRealization &draw(RandomStream &rng)
    {
        if (opt_.gains)
            return fixed_;
        if (opt_.distances)
            sample_realization_at(cfg_, *opt_.distances, rng, real_);
        else
            sample_realization(cfg_, rng, real_);
        return real_;
    }

  private:
    const SystemConfig &cfg_;
    const McOptions &opt_;
    ChannelRealization fixed_, real_;
};

std::uint64_t fingerprint(const SystemConfig &cfg, Scheme scheme, const std::string &what, double rho)
{
    std::ostringstream os;
    os.precision(17);
    os << cfg.fingerprint_text() << ";scheme=" << to_string(scheme) << ";" << what << ";rho=" << rho;
    return fnv1a(os.str());
}

EstimateResult proportion(const std::string &metric, std::uint64_t hits, const McOptions &opt,
                          std::uint64_t fp)
{
    EstimateResult r;
    r.metric = metric;
    r.trials = opt.trials;
    r.estimate = double(hits) / double(opt.trials);
    r.half_width = proportion_half_width(r.estimate, opt.trials);
    r.seed = opt.seed;
    r.fingerprint = fp;
    r.insufficient = r.estimate < mc_insufficient_below;
    return r;
}

// Running mean and variance of a block, merged in block order.
struct Moments
{
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double v)
    {
        ++n;
        const double d = v - mean;
        mean += d / double(n);
        m2 += d * (v - mean);
    }

    void merge(const Moments &o)
    {
        if (o.n == 0)
            return;
        const double total = double(n + o.n);
        const double d = o.mean - mean;
        mean += d * double(o.n) / total;
        m2 += o.m2 + d * d * double(n) * double(o.n) / total;
        n += o.n;
    }

    EstimateResult result(const std::string &metric, const McOptions &opt, std::uint64_t fp) const
    {
        EstimateResult r;
        r.metric = metric;
        r.trials = n;
        r.estimate = mean;
        r.half_width = n > 1 ? 1.96 * std::sqrt(m2 / double(n - 1) / double(n)) : 0.0;
        r.seed = opt.seed;
        r.fingerprint = fp;
        return r;
    }
};

bool cognitive(Strategy s) { return s == Strategy::CPA || s == Strategy::NOMA; }

} // namespace

TransmissionOutcome transmit(Strategy strategy, const ScheduledPair &pair, double rho, const TargetRates &targets,
                             bool swap_roles)
{
    double g1 = pair.gain_first, g2 = pair.gain_second;
    if (cognitive(strategy))
    {
        if (swap_roles)
            std::swap(g1, g2);
        const RateTargets t{targets.primary, targets.secondary};
        return strategy == Strategy::CPA ? cpa_decide(rho * g1, rho * g2, t)
                                         : noma_cpa_baseline(rho * g1, rho * g2, t);
    }
    const RateTargets t{targets.first, targets.second};
    switch (strategy)
    {
    case Strategy::FPA:
        return fpa_decide(rho * g1, rho * g2, t);
    case Strategy::OMA:
        return oma_baseline(g1, g2, rho, t);
    case Strategy::HYBRID:
        return hybrid_baseline(g1, g2, rho, t);
    default:
        break;
    }
    throw std::logic_error("transmit: unhandled strategy");
}

std::vector<OutageEstimate> estimate_outage_sweep(const SystemConfig &cfg, Scheme scheme, Strategy strategy,
                                                  const std::vector<double> &rhos, const McOptions &opt)
{
    validate_options(cfg, opt);
    struct Counts
    {
        std::vector<std::uint64_t> first, second;
    };
    const auto parts = run_blocks<Counts>(opt.trials, opt.workers, [&](std::uint64_t block, std::uint64_t n) {
        Counts c{std::vector<std::uint64_t>(rhos.size()), std::vector<std::uint64_t>(rhos.size())};
        RandomStream rng(opt.seed, block);
        ChannelSource source(cfg, opt);
        for (std::uint64_t t = 0; t < n; ++t)
        {
            const ScheduledPair pair = select(scheme, source.draw(rng), rng);
            for (std::size_t k = 0; k < rhos.size(); ++k)
            {
                const TransmissionOutcome o = transmit(strategy, pair, rhos[k], cfg.targets, opt.swap_roles);
                c.first[k] += o.outage_first;
                c.second[k] += o.outage_second;
            }
        }
        return c;
    });

    std::vector<OutageEstimate> out(rhos.size());
    const std::string tag = std::string("strategy=") + std::string(to_string(strategy)) +
                            (opt.swap_roles ? ";swapped" : "");
    for (std::size_t k = 0; k < rhos.size(); ++k)
    {
        std::uint64_t a = 0, b = 0;
        for (const auto &p : parts)
        {
            a += p.first[k];
            b += p.second[k];
        }
        const std::uint64_t fp = fingerprint(cfg, scheme, tag, rhos[k]);
        out[k].first = proportion("outage_first", a, opt, fp);
        out[k].second = proportion("outage_second", b, opt, fp);
    }
    return out;
}

OutageEstimate estimate_outage(const SystemConfig &cfg, Scheme scheme, Strategy strategy, double rho,
                               const McOptions &opt)
{
    return estimate_outage_sweep(cfg, scheme, strategy, {rho}, opt).front();
}

std::vector<EstimateResult> estimate_ergodic_rate_sweep(const SystemConfig &cfg, Scheme scheme, Strategy strategy,
                                                        const std::vector<double> &rhos, const McOptions &opt,
                                                        RateMetric metric)
{
    validate_options(cfg, opt);
    const auto parts =
        run_blocks<std::vector<Moments>>(opt.trials, opt.workers, [&](std::uint64_t block, std::uint64_t n) {
            std::vector<Moments> m(rhos.size());
            RandomStream rng(opt.seed, block);
            ChannelSource source(cfg, opt);
            for (std::uint64_t t = 0; t < n; ++t)
            {
                const ScheduledPair pair = select(scheme, source.draw(rng), rng);
                for (std::size_t k = 0; k < rhos.size(); ++k)
                {
                    const TransmissionOutcome o = transmit(strategy, pair, rhos[k], cfg.targets, opt.swap_roles);
                    switch (metric)
                    {
                    case RateMetric::second:
                        m[k].add(o.rate_second);
                        break;
                    case RateMetric::first:
                        m[k].add(o.rate_first);
                        break;
                    case RateMetric::sum:
                        m[k].add(o.rate_first + o.rate_second);
                        break;
                    }
                }
            }
            return m;
        });

    const char *name = metric == RateMetric::sum ? "rate_sum" : metric == RateMetric::first ? "rate_first"
                                                                                              : "rate_second";
    std::vector<EstimateResult> out;
    for (std::size_t k = 0; k < rhos.size(); ++k)
    {
        Moments total;
        for (const auto &p : parts)
            total.merge(p[k]);
        const std::string tag = std::string("strategy=") + std::string(to_string(strategy)) + ";" + name;
        out.push_back(total.result(name, opt, fingerprint(cfg, scheme, tag, rhos[k])));
    }
    return out;
}

EstimateResult estimate_ergodic_rate(const SystemConfig &cfg, Scheme scheme, Strategy strategy, double rho,
                                     const McOptions &opt, RateMetric metric)
{
    return estimate_ergodic_rate_sweep(cfg, scheme, strategy, {rho}, opt, metric).front();
}

bool outcome_consistent(const TransmissionOutcome &o, double eta_i, double eta_j)
{
    if (!(o.beta >= 0.0 && o.beta <= 1.0))
        return false;
    if (!(o.rate_first >= 0.0 && o.rate_second >= 0.0))
        return false;
    if (!(o.sinr_i1 >= 0.0 && o.sinr_j >= 0.0 && o.sinr_i2 >= 0.0))
        return false;
    const double capacity = std::log2(1.0 + eta_i + eta_j);
    return o.rate_first + o.rate_second <= capacity + 1e-9 * std::max(1.0, capacity);
}

double FairnessStats::rate_percentile(double q) const
{
    if (rates.empty())
        throw std::logic_error("rate_percentile: no stored rates");
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("rate_percentile: q outside [0, 1]");
    // nearest-rank
    const std::size_t n = rates.size();
    std::size_t rank = std::size_t(std::ceil(q * double(n)));
    rank = std::clamp<std::size_t>(rank, 1, n);
    return rates[rank - 1];
}

double FairnessStats::rate_cdf(double x) const
{
    if (rates.empty())
        throw std::logic_error("rate_cdf: no stored rates");
    return double(std::upper_bound(rates.begin(), rates.end(), x) - rates.begin()) / double(rates.size());
}

FairnessReport estimate_fairness(const SystemConfig &cfg, Scheme scheme, const std::vector<Strategy> &strategies,
                                 double rho, const McOptions &opt, bool keep_rates)
{
    validate_options(cfg, opt);
    if (strategies.empty())
        throw std::invalid_argument("estimate_fairness: no strategies");
    const std::size_t S = strategies.size();
    const auto index_of = [&](Strategy s) -> int {
        for (std::size_t k = 0; k < S; ++k)
            if (strategies[k] == s)
                return int(k);
        return -1;
    };
    const int i_noma = index_of(Strategy::NOMA), i_oma = index_of(Strategy::OMA), i_hyb = index_of(Strategy::HYBRID);
    const RateTargets targets{cfg.targets.first, cfg.targets.second};

    struct Part
    {
        std::vector<Moments> jain;
        std::vector<std::vector<double>> rates;
        std::uint64_t bound_violations = 0, mismatches = 0, failures = 0, checks = 0;
    };
    const auto parts = run_blocks<Part>(opt.trials, opt.workers, [&](std::uint64_t block, std::uint64_t n) {
        Part p;
        p.jain.resize(S);
        p.rates.resize(S);
        RandomStream rng(opt.seed, block);
        ChannelSource source(cfg, opt);
        std::vector<double> J(S);
        for (std::uint64_t t = 0; t < n; ++t)
        {
            const ScheduledPair pair = select(scheme, source.draw(rng), rng);
            const double g1 = pair.gain_first, g2 = pair.gain_second;
            const bool spot = (block * mc_block_size + t) % 100 == 0;
            for (std::size_t k = 0; k < S; ++k)
            {
                TransmissionOutcome o;
                switch (strategies[k])
                {
                case Strategy::FPA:
                    o = fpa_decide(rho * g1, rho * g2, targets);
                    break;
                case Strategy::NOMA:
                    o = noma_strong_first(rho * g1, rho * g2, targets);
                    break;
                case Strategy::OMA:
                    o = oma_baseline(g1, g2, rho, targets);
                    break;
                case Strategy::HYBRID:
                    o = hybrid_baseline(g1, g2, rho, targets);
                    break;
                case Strategy::CPA:
                    o = cpa_decide(rho * g1, rho * g2, {cfg.targets.primary, cfg.targets.secondary});
                    break;
                }
                J[k] = jain_index(o);
                p.jain[k].add(J[k]);
                if (!(J[k] >= 0.5 - 1e-12 && J[k] <= 1.0 + 1e-12))
                    ++p.bound_violations;
                if (keep_rates)
                {
                    p.rates[k].push_back(o.rate_first);
                    p.rates[k].push_back(o.rate_second);
                }
                if (spot)
                {
                    ++p.checks;
                    if (!outcome_consistent(o, rho * g1, rho * g2))
                        ++p.failures;
                }
            }
            if (i_noma >= 0 && i_oma >= 0 && i_hyb >= 0 && J[i_hyb] != std::max(J[i_noma], J[i_oma]))
                ++p.mismatches;
        }
        return p;
    });

    FairnessReport rep;
    for (std::size_t k = 0; k < S; ++k)
    {
        FairnessStats st;
        st.strategy = strategies[k];
        Moments total;
        for (const auto &p : parts)
        {
            total.merge(p.jain[k]);
            if (keep_rates)
                st.rates.insert(st.rates.end(), p.rates[k].begin(), p.rates[k].end());
        }
        std::sort(st.rates.begin(), st.rates.end());
        const std::string tag = std::string("fairness=") + std::string(to_string(strategies[k]));
        st.jain = total.result("jain", opt, fingerprint(cfg, scheme, tag, rho));
        rep.strategies.push_back(std::move(st));
    }
    for (const auto &p : parts)
    {
        rep.jain_bound_violations += p.bound_violations;
        rep.hybrid_mismatches += p.mismatches;
        rep.invariant_failures += p.failures;
        rep.invariant_checks += p.checks;
    }
    return rep;
}

std::vector<EstimateResult> estimate_admission(const SystemConfig &cfg, Scheme scheme, const McOptions &opt)
{
    validate_options(cfg, opt);
    const auto parts =
        run_blocks<std::vector<std::uint64_t>>(opt.trials, opt.workers, [&](std::uint64_t block, std::uint64_t n) {
            std::vector<std::uint64_t> c(cfg.K);
            RandomStream rng(opt.seed, block);
            ChannelSource source(cfg, opt);
            for (std::uint64_t t = 0; t < n; ++t)
            {
                const ScheduledPair pair = select(scheme, source.draw(rng), rng);
                ++c[pair.first];
                ++c[pair.second];
            }
            return c;
        });
    std::vector<EstimateResult> out;
    for (std::size_t k = 0; k < cfg.K; ++k)
    {
        std::uint64_t hits = 0;
        for (const auto &p : parts)
            hits += p[k];
        const std::uint64_t fp = fingerprint(cfg, scheme, "admission;user=" + std::to_string(k), 0.0);
        out.push_back(proportion("admission", hits, opt, fp));
    }
    return out;
}

std::vector<std::pair<double, double>> sample_scheduled_gains(const SystemConfig &cfg, Scheme scheme,
                                                              const McOptions &opt)
{
    validate_options(cfg, opt);
    using Gains = std::vector<std::pair<double, double>>;
    const auto parts = run_blocks<Gains>(opt.trials, opt.workers, [&](std::uint64_t block, std::uint64_t n) {
        Gains g;
        g.reserve(n);
        RandomStream rng(opt.seed, block);
        ChannelSource source(cfg, opt);
        for (std::uint64_t t = 0; t < n; ++t)
        {
            const ScheduledPair pair = select(scheme, source.draw(rng), rng);
            g.emplace_back(pair.gain_first, pair.gain_second);
        }
        return g;
    });
    Gains out;
    out.reserve(opt.trials);
    for (const auto &p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

} // namespace rsma
