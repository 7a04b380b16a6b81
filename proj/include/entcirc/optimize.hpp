// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "entcirc/errors.hpp"

namespace entcirc {

struct NmOptions {
    int max_evals = 500;
    double ftol = 1e-9;
    double xtol = 1e-7;
};

struct NmResult {
    std::vector<double> x;
    double fval = 0.0;
    int evals = 0;
    bool converged = false;
};

// Derivative-free downhill-simplex minimization with optional box bounds.
// Trial vertices are clamped to [lo, hi] componentwise when bounds are given.
template <typename Fn>
NmResult nelder_mead(Fn&& f, std::vector<double> x0, const std::vector<double>& lo,
                     const std::vector<double>& hi, const NmOptions& opt = {}) {
    const std::size_t n = x0.size();
    if (n == 0) throw InvalidArgument("nelder_mead: empty start point");
    const bool bounded = !lo.empty();
    if (bounded && (lo.size() != n || hi.size() != n)) {
        throw InvalidArgument("nelder_mead: bounds dimension mismatch");
    }

    auto clamp = [&](std::vector<double>& x) {
        if (!bounded) return;
        for (std::size_t i = 0; i < n; ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
    };

    int evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return f(x);
    };

    clamp(x0);
    std::vector<std::vector<double>> simplex;
    simplex.reserve(n + 1);
    simplex.push_back(x0);
    for (std::size_t i = 0; i < n; ++i) {
        auto v = x0;
        const double step = bounded ? 0.15 * (hi[i] - lo[i])
                                    : std::max(0.1 * std::abs(x0[i]), 0.1);
        v[i] += (bounded && x0[i] + step > hi[i]) ? -step : step;
        clamp(v);
        simplex.push_back(std::move(v));
    }

    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fv[i] = eval(simplex[i]);

    std::vector<std::size_t> order(n + 1);
    constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;

    NmResult result;
    while (true) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });

        const std::size_t best = order[0], worst = order[n], second = order[n - 1];

        double fspread = 0.0, xspread = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            fspread = std::max(fspread, std::abs(fv[i] - fv[best]));
            for (std::size_t j = 0; j < n; ++j) {
                xspread = std::max(xspread, std::abs(simplex[i][j] - simplex[best][j]));
            }
        }
        if (fspread <= opt.ftol && xspread <= opt.xtol) {
            result.converged = true;
            break;
        }
        if (evals >= opt.max_evals) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double coef) {
            std::vector<double> x(n);
            for (std::size_t j = 0; j < n; ++j) {
                x[j] = centroid[j] + coef * (centroid[j] - simplex[worst][j]);
            }
            clamp(x);
            return x;
        };

        auto xr = blend(kReflect);
        const double fr = eval(xr);
        if (fr < fv[best]) {
            auto xe = blend(kExpand);
            const double fe = eval(xe);
            if (fe < fr) {
                simplex[worst] = std::move(xe);
                fv[worst] = fe;
            } else {
                simplex[worst] = std::move(xr);
                fv[worst] = fr;
            }
        } else if (fr < fv[second]) {
            simplex[worst] = std::move(xr);
            fv[worst] = fr;
        } else {
            const bool outside = fr < fv[worst];
            auto xc = blend(outside ? kContract : -kContract);
            const double fc = eval(xc);
            if (fc < (outside ? fr : fv[worst])) {
                simplex[worst] = std::move(xc);
                fv[worst] = fc;
            } else {
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t j = 0; j < n; ++j) {
                        simplex[i][j] =
                            simplex[best][j] + kShrink * (simplex[i][j] - simplex[best][j]);
                    }
                    clamp(simplex[i]);
                    fv[i] = eval(simplex[i]);
                }
            }
        }
    }

    std::size_t ibest = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (fv[i] < fv[ibest]) ibest = i;
    }
    result.x = simplex[ibest];
    result.fval = fv[ibest];
    result.evals = evals;
    return result;
}

}  // namespace entcirc
