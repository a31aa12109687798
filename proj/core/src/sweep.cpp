// SPDX-License-Identifier: Apache-2.0
//
// mmlink: link-level spectral efficiency simulator for mmWave downlinks
// Copyright (C) 2026 The mmlink authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "mmlink/sweep.hpp"

#include "mmlink/csv.hpp"
#include "mmlink/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>

namespace mmlink {

namespace {

constexpr std::size_t kPathBlock = 1024;

[[noreturn]] void grid_error(const std::string &field, const std::string &what)
{
    throw std::invalid_argument(field + ": " + what);
}

void check_range(const AngleRange &r, const std::string &prefix, double lo, double hi, double must_contain)
{
    if (!std::isfinite(r.min_deg) || !std::isfinite(r.max_deg))
        grid_error(prefix + "_min_deg", "range bounds must be finite");
    if (!(r.step_deg > 0.0))
        grid_error(prefix + "_step_deg", "must be positive");
    if (r.min_deg > r.max_deg)
        grid_error(prefix + "_min_deg", "must not exceed " + prefix + "_max_deg");
    if (r.min_deg < lo)
        grid_error(prefix + "_min_deg", format_shortest(r.min_deg) + " is below " + format_shortest(lo));
    if (r.max_deg > hi)
        grid_error(prefix + "_max_deg", format_shortest(r.max_deg) + " is above " + format_shortest(hi));
    const double n = (r.max_deg - r.min_deg) / r.step_deg;
    if (std::abs(n - std::round(n)) > 1e-9 * std::max(1.0, n))
        grid_error(prefix + "_step_deg", format_shortest(r.step_deg) + " does not divide the range [" +
                                             format_shortest(r.min_deg) + ", " + format_shortest(r.max_deg) + "]");
    const double k = (must_contain - r.min_deg) / r.step_deg;
    if (must_contain < r.min_deg || must_contain > r.max_deg || std::abs(k - std::round(k)) > 1e-9)
        grid_error(prefix + "_step_deg", "grid must contain the aligned orientation " + format_shortest(must_contain));
}

std::size_t find_index(const std::vector<double> &values, double v, const char *what)
{
    for (std::size_t i = 0; i < values.size(); ++i)
        if (std::abs(values[i] - v) < 1e-9)
            return i;
    throw std::out_of_range(std::string(what) + " " + format_shortest(v) + " is not on the grid");
}

// Neumaier step written with selects so the row loop vectorizes.
inline void neumaier(double &sum, double &comp, double v)
{
    const double t = sum + v;
    const bool sum_larger = std::abs(sum) >= std::abs(v);
    const double big = sum_larger ? sum : v;
    const double small = sum_larger ? v : sum;
    comp += (big - t) + small;
    sum = t;
}

// sum[j] += t[p] * r[p][j] over the block, compensated per cell.
#if defined(__GNUC__) && !defined(__clang__) && defined(__x86_64__)
__attribute__((target_clones("avx2", "default")))
#endif
void accumulate_rows(double *__restrict sum, double *__restrict comp, const double *__restrict t,
                     const double *__restrict r, std::size_t n, std::size_t nb)
{
    for (std::size_t p = 0; p < n; ++p)
    {
        const double tp = t[p];
        const double *__restrict rp = r + p * nb;
        for (std::size_t j = 0; j < nb; ++j)
            neumaier(sum[j], comp[j], tp * rp[j]);
    }
}

} // namespace

std::vector<double> AngleRange::values() const
{
    const auto n = static_cast<std::size_t>(std::llround((max_deg - min_deg) / step_deg));
    std::vector<double> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        v[i] = min_deg + static_cast<double>(i) * step_deg;
    return v;
}

void SweepGrid::validate() const
{
    // The panel steers at most 90 deg away from its boresight at 180 deg.
    check_range(alpha, "alpha", 90.0, 270.0, 180.0);
    check_range(beta, "beta", -180.0, 180.0, 0.0);
    if (distances_m.empty())
        grid_error("distances_m", "must not be empty");
    for (double d : distances_m)
        if (!(d > 0.0))
            grid_error("distances_m", "distances must be positive");
    for (double s : snr_db)
        if (!std::isfinite(s))
            grid_error("snr_db", "values must be finite");
}

std::vector<double> SweepGrid::snr_values_db() const
{
    if (!snr_db.empty())
        return snr_db;
    std::vector<double> v;
    for (int s = 0; s <= 30; ++s)
        v.push_back(s);
    return v;
}

double SweepResult::k_at(double alpha_deg, double beta_deg) const
{
    return k_db[index(find_index(alphas, alpha_deg, "alpha"), find_index(betas, beta_deg, "beta"))];
}

double SweepResult::power_at(double alpha_deg, double beta_deg) const
{
    return power[index(find_index(alphas, alpha_deg, "alpha"), find_index(betas, beta_deg, "beta"))];
}

SweepResult beam_sweep(const PathEnsemble &ensemble, const AntennaSetup &antennas, const SweepGrid &grid)
{
    grid.validate();
    antennas.validate();
    if (ensemble.paths.empty())
        throw std::invalid_argument("beam_sweep: empty ensemble");

    SweepResult res;
    res.scenario = ensemble.scenario;
    res.alphas = grid.alpha.values();
    res.betas = grid.beta.values();
    const std::size_t na = res.alphas.size();
    const std::size_t nb = res.betas.size();

    std::vector<double> steer(na);
    for (std::size_t i = 0; i < na; ++i)
        steer[i] = wrap_azimuth_deg(res.alphas[i] - AntennaSetup::kTxBoresightDeg);
    std::vector<MountedAntenna> rxs;
    rxs.reserve(nb);
    for (double b : res.betas)
        rxs.push_back(antennas.rx_for_beta(b));

    std::vector<double> sum(na * nb, 0.0), comp(na * nb, 0.0);
    std::vector<double> rx_gain(kPathBlock * nb), tx_gain(na * kPathBlock);
    std::vector<BeamOrientation> tx_dirs(kPathBlock);
    const auto &paths = ensemble.paths;

    for (std::size_t start = 0; start < paths.size(); start += kPathBlock)
    {
        const std::size_t n = std::min(kPathBlock, paths.size() - start);
        const auto sn = static_cast<std::ptrdiff_t>(n);
        const auto sna = static_cast<std::ptrdiff_t>(na);

        for (std::size_t p = 0; p < n; ++p)
        {
            const auto &aod = paths[start + p].aod;
            tx_dirs[p] = {wrap_azimuth_deg(aod.azimuth_deg - AntennaSetup::kTxBoresightDeg), aod.elevation_deg};
        }
        const SteeringEvaluator tx(antennas.gnb_geometry, antennas.gnb_element,
                                   std::span<const BeamOrientation>(tx_dirs.data(), n));

#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t p = 0; p < sn; ++p)
            for (std::size_t j = 0; j < nb; ++j)
                rx_gain[static_cast<std::size_t>(p) * nb + j] = db_to_linear(rxs[j].gain_dbi(paths[start + p].aoa));

#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < sna; ++i)
        {
            double *row = tx_gain.data() + static_cast<std::size_t>(i) * n;
            tx.linear_gains(steer[i], std::span<double>(row, n));
            for (std::size_t p = 0; p < n; ++p)
                row[p] *= paths[start + p].power_weight;
        }

#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < sna; ++i)
            accumulate_rows(sum.data() + i * nb, comp.data() + i * nb, tx_gain.data() + static_cast<std::size_t>(i) * n,
                            rx_gain.data(), n, nb);
    }

    res.power.resize(na * nb);
    for (std::size_t k = 0; k < na * nb; ++k)
        res.power[k] = (sum[k] + comp[k]) / ensemble.trials;
    res.omni_power = ensemble_omni_power(ensemble);

    const std::size_t ref = res.index(find_index(res.alphas, 180.0, "alpha"), find_index(res.betas, 0.0, "beta"));
    res.reference_power = res.power[ref];
    if (!(res.reference_power > 0.0))
        throw std::domain_error("reference power at (180, 0) is zero");

    res.k_db.resize(na * nb);
    for (std::size_t k = 0; k < na * nb; ++k)
        res.k_db[k] = k == ref ? 0.0 : linear_to_db(res.power[k] / res.reference_power);

    // Lexicographic: larger K, then smaller |beta|, |alpha - 180|, alpha, beta.
    auto key = [&](std::size_t ia, std::size_t ib) {
        return std::make_tuple(-res.k_db[res.index(ia, ib)], std::abs(res.betas[ib]),
                               std::abs(res.alphas[ia] - 180.0), res.alphas[ia], res.betas[ib]);
    };
    std::size_t best_a = 0, best_b = 0;
    for (std::size_t ia = 0; ia < na; ++ia)
        for (std::size_t ib = 0; ib < nb; ++ib)
            if (key(ia, ib) < key(best_a, best_b))
            {
                best_a = ia;
                best_b = ib;
            }
    res.optimum = {res.alphas[best_a], res.betas[best_b], res.k_db[res.index(best_a, best_b)]};
    return res;
}

SweepResult beam_sweep(const LinkScenario &scenario, const TapProfile &profile, const MonteCarloConfig &cfg,
                       const SweepGrid &grid, const AntennaSetup &antennas)
{
    grid.validate();
    return beam_sweep(generate_ensemble(profile, scenario, cfg), antennas, grid);
}

Curves efficiency_curves(const SweepResult &sweep, const std::vector<double> &snr_db, KeMode mode)
{
    const double k_e = environment_factor(sweep.scenario, mode).k_e;
    const double ka_s = sweep.k_a_straight();
    const double ka_o = sweep.k_a_optimal();
    Curves c;
    for (double s : snr_db)
    {
        const double snr = db_to_linear(s);
        c.x.push_back(s);
        c.straight.push_back(spectral_efficiency(ka_s, k_e, snr));
        c.optimal.push_back(spectral_efficiency(ka_o, k_e, snr));
    }
    return c;
}

double DistanceComparison::straight_ratio(double d1, double d2) const
{
    return curves.straight[find_index(curves.x, d1, "distance")] / curves.straight[find_index(curves.x, d2, "distance")];
}

double DistanceComparison::optimal_ratio(double d1, double d2) const
{
    return curves.optimal[find_index(curves.x, d1, "distance")] / curves.optimal[find_index(curves.x, d2, "distance")];
}

DistanceComparison distance_comparison(const LinkScenario &scenario_template, const TapProfile &profile,
                                       const MonteCarloConfig &cfg, const SweepGrid &grid,
                                       const AntennaSetup &antennas, double snr_db, KeMode mode)
{
    grid.validate();
    DistanceComparison out;
    out.snr_db = snr_db;
    for (double d : grid.distances_m)
    {
        LinkScenario sc = scenario_template;
        sc.distance_m = d;
        SweepResult r = beam_sweep(sc, profile, cfg, grid, antennas);
        const Curves c = efficiency_curves(r, {snr_db}, mode);
        out.curves.x.push_back(d);
        out.curves.straight.push_back(c.straight.front());
        out.curves.optimal.push_back(c.optimal.front());
        out.sweeps.push_back(std::move(r));
    }
    return out;
}

} // namespace mmlink
