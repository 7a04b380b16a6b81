// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "entcirc/closedform.hpp"
#include "entcirc/disorder.hpp"
#include "entcirc/dynamics.hpp"
#include "entcirc/ecp.hpp"
#include "entcirc/errors.hpp"
#include "entcirc/ggm.hpp"
#include "entcirc/qstate.hpp"
#include "entcirc/rng.hpp"
#include "entcirc/states.hpp"
#include "entcirc/unitary.hpp"

namespace entcirc {

inline constexpr const char* kVersion = "0.1.0";

// One experiment invocation: name, reproducibility knobs, and the flat
// key/value parameter map (JSON config file keys mirror CLI flags; CLI wins).
struct ExperimentConfig {
    std::string experiment;
    std::uint64_t seed = 20240901;
    int threads = 1;
    std::string out = ".";
    nlohmann::json params = nlohmann::json::object();

    std::string get_str(const std::string& key, const std::string& fallback) const {
        if (params.contains(key)) return params.at(key).get<std::string>();
        return fallback;
    }
    double get_double(const std::string& key, double fallback) const {
        if (params.contains(key)) return params.at(key).get<double>();
        return fallback;
    }
    int get_int(const std::string& key, int fallback) const {
        if (params.contains(key)) return params.at(key).get<int>();
        return fallback;
    }
    bool get_bool(const std::string& key, bool fallback) const {
        if (params.contains(key)) return params.at(key).get<bool>();
        return fallback;
    }
};

namespace detail {

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string now_utc_iso8601() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

inline double parse_double(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InvalidArgument(std::string("could not parse number for ") + what + ": '" + s + "'");
    }
}

inline int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InvalidArgument(std::string("could not parse integer for ") + what + ": '" + s + "'");
    }
}

}  // namespace detail

// Named state constructors for CLI specs. Grammar (':'-separated fields):
//   ghz | w | wbar | haar:N | wclass | g_ghz:theta | g_w:theta1:theta2 |
//   dicke:N:k | product:N | basis:N:index
// Random families (haar, wclass) consume draws from the stream, so repeated
// specs yield independent states.
inline StateVector make_state(const std::string& spec, RngStream& rng) {
    const auto parts = detail::split(spec, ':');
    const std::string& name = parts[0];
    auto want = [&](std::size_t n) {
        if (parts.size() != n + 1) {
            throw InvalidArgument("state spec '" + spec + "' needs " + std::to_string(n) +
                                  " parameter(s)");
        }
    };
    if (name == "ghz") {
        want(0);
        return ghz();
    }
    if (name == "w") {
        want(0);
        return w();
    }
    if (name == "wbar") {
        want(0);
        return wbar();
    }
    if (name == "wclass") {
        want(0);
        return random_w_class(rng);
    }
    if (name == "haar") {
        want(1);
        return haar_random(detail::parse_int(parts[1], "haar size"), rng);
    }
    if (name == "g_ghz") {
        want(1);
        return g_ghz(detail::parse_double(parts[1], "g_ghz theta"));
    }
    if (name == "g_w") {
        want(2);
        return g_w(detail::parse_double(parts[1], "g_w theta1"),
                   detail::parse_double(parts[2], "g_w theta2"));
    }
    if (name == "dicke") {
        want(2);
        return dicke(detail::parse_int(parts[1], "dicke size"),
                     detail::parse_int(parts[2], "dicke excitations"));
    }
    if (name == "product") {
        want(1);
        return StateVector::basis(detail::parse_int(parts[1], "product size"), 0);
    }
    if (name == "basis") {
        want(2);
        return StateVector::basis(detail::parse_int(parts[1], "basis size"),
                                  static_cast<std::uint64_t>(
                                      detail::parse_int(parts[2], "basis index")));
    }
    throw InvalidArgument("unknown state spec '" + spec + "'");
}

inline UnitaryParams parse_params(const std::string& s) {
    const auto parts = detail::split(s, ',');
    if (parts.size() != 3) throw InvalidArgument("params must be 'ax,ay,az': '" + s + "'");
    return UnitaryParams(detail::parse_double(parts[0], "alpha_x"),
                         detail::parse_double(parts[1], "alpha_y"),
                         detail::parse_double(parts[2], "alpha_z"));
}

inline std::pair<int, int> parse_link(const std::string& s) {
    const auto parts = detail::split(s, ',');
    if (parts.size() != 2) throw InvalidArgument("link must be 'a,b': '" + s + "'");
    return {detail::parse_int(parts[0], "link qubit a"), detail::parse_int(parts[1], "link qubit b")};
}

namespace detail {

// Data files carry a reproducibility header; the generated line is the only
// part excluded from byte-identity across reruns.
inline void write_csv_header(std::ofstream& os, const ExperimentConfig& cfg,
                             const std::string& schema) {
    os << "# entcirc " << kVersion << "\n";
    os << "# experiment: " << cfg.experiment << "\n";
    os << "# generated: " << now_utc_iso8601() << "\n";
    os << "# seed: " << cfg.seed << "\n";
    os << "# threads: " << cfg.threads << "\n";
    os << "# params:";
    for (const auto& item : cfg.params.items()) os << ' ' << item.key() << '=' << item.value().dump();
    os << "\n";
    os << "# units: angles in radians; times in units of 1/J; ggm dimensionless\n";
    os << "# schema: " << schema << "\n";
}

inline std::ofstream open_artifact(const ExperimentConfig& cfg, const std::string& name) {
    std::filesystem::create_directories(cfg.out);
    const auto path = std::filesystem::path(cfg.out) / name;
    std::ofstream os(path);
    if (!os) throw Error("cannot open output file: " + path.string());
    return os;
}

inline void write_summary(const ExperimentConfig& cfg, nlohmann::json body,
                          const std::string& name = {}) {
    body["experiment"] = cfg.experiment;
    body["seed"] = cfg.seed;
    body["version"] = kVersion;
    auto os = open_artifact(cfg, name.empty() ? cfg.experiment + "_summary.json" : name);
    os << body.dump(2) << "\n";
}

inline std::pair<StateVector, StateVector> make_pair_states(const ExperimentConfig& cfg,
                                                            RngStream& rng,
                                                            const std::string& fallback) {
    const auto specs = split(cfg.get_str("pair", fallback), ',');
    if (specs.size() != 2) throw InvalidArgument("pair must name two states, e.g. 'ghz,w'");
    StateVector a = make_state(specs[0], rng);
    StateVector b = make_state(specs[1], rng);
    return {std::move(a), std::move(b)};
}

inline std::pair<int, int> default_link(const StateVector& a, const ExperimentConfig& cfg) {
    const std::string link = cfg.get_str("link", "");
    if (!link.empty()) return parse_link(link);
    return {a.num_qubits() - 1, a.num_qubits()};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Experiment runners
// ---------------------------------------------------------------------------

inline int run_ggm(const ExperimentConfig& cfg) {
    RngStream rng(cfg.seed, 0);
    const std::string spec = cfg.get_str("state", "ghz");
    const StateVector s = make_state(spec, rng);
    const GgmResult full = ggm_full(s, true);
    const GgmResult restricted = ggm_restricted(s, cfg.get_int("max-cut-size", 2));

    nlohmann::json j;
    j["state"] = spec;
    j["num_qubits"] = s.num_qubits();
    j["ggm"] = full.value;
    j["witness_cut"] = full.witness_cut;
    j["lambda_max"] = full.lambda_max;
    j["ggm_restricted"] = restricted.value;
    nlohmann::json cuts = nlohmann::json::array();
    for (const auto& [mask, lam] : full.per_cut) {
        cuts.push_back({{"cut", mask}, {"lambda_max", lam}});
    }
    j["per_cut"] = cuts;
    detail::write_summary(cfg, j);
    std::printf("GGM(%s) = %.12f (witness cut mask %u)\n", spec.c_str(), full.value,
                full.witness_cut);
    return 0;
}

inline int run_merge(const ExperimentConfig& cfg) {
    RngStream rng(cfg.seed, 0);
    auto [a, b] = detail::make_pair_states(cfg, rng, "ghz,ghz");
    const auto link = detail::default_link(a, cfg);
    const UnitaryParams p = parse_params(cfg.get_str("params", "0,0,0"));
    const StateVector merged = merge_pair(a, b, link.first, link.second, p);
    const double gout = ggm_full(merged).value;

    nlohmann::json j;
    j["pair"] = cfg.get_str("pair", "ghz,ghz");
    j["link"] = {link.first, link.second};
    j["params"] = {p.alpha_x, p.alpha_y, p.alpha_z};
    j["g1"] = unit_ggm(a);
    j["g2"] = unit_ggm(b);
    j["ggm_out"] = gout;
    j["cap"] = merge_ggm_cap(a, b, link.first, link.second);
    detail::write_summary(cfg, j);
    std::printf("merged GGM = %.12f\n", gout);
    return 0;
}

inline int run_optimize(const ExperimentConfig& cfg) {
    RngStream rng(cfg.seed, 0);
    auto [a, b] = detail::make_pair_states(cfg, rng, "ghz,ghz");
    const auto link = detail::default_link(a, cfg);
    OptimizeOptions opt;
    opt.restarts = cfg.get_int("restarts", 24);
    opt.seed = cfg.seed;
    const OptimizeReport rep = optimize_merge(a, b, link.first, link.second, opt);
    const double g1 = unit_ggm(a), g2 = unit_ggm(b);

    nlohmann::json j;
    j["pair"] = cfg.get_str("pair", "ghz,ghz");
    j["link"] = {link.first, link.second};
    j["g1"] = g1;
    j["g2"] = g2;
    j["min_input_ggm"] = std::min(g1, g2);
    j["best_ggm"] = rep.best_ggm;
    j["best_params"] = {rep.best_params.alpha_x, rep.best_params.alpha_y,
                        rep.best_params.alpha_z};
    j["restarts_used"] = rep.restarts_used;
    j["converged"] = rep.converged;
    detail::write_summary(cfg, j);
    std::printf("best GGM = %.12f at (%.6f, %.6f, %.6f)%s\n", rep.best_ggm,
                rep.best_params.alpha_x, rep.best_params.alpha_y, rep.best_params.alpha_z,
                rep.converged ? "" : " [did not converge]");
    return 0;
}

inline int run_prop_check(const ExperimentConfig& cfg) {
    RngStream rng(cfg.seed, 0);
    auto [a, b] = detail::make_pair_states(cfg, rng, "haar:3,haar:3");
    const auto link = detail::default_link(a, cfg);
    OptimizeOptions opt;
    opt.restarts = cfg.get_int("restarts", 24);
    opt.seed = cfg.seed;
    const PropositionCheck rec = proposition_check(a, b, link.first, link.second, opt);

    nlohmann::json j;
    j["pair"] = cfg.get_str("pair", "haar:3,haar:3");
    j["g1"] = rec.g1;
    j["g2"] = rec.g2;
    j["best_ggm"] = rec.best_ggm;
    j["gap"] = rec.gap;
    j["out_of_hypothesis"] = rec.out_of_hypothesis;
    j["converged"] = rec.report.converged;
    detail::write_summary(cfg, j);
    std::printf("G1=%.6f G2=%.6f best=%.6f gap=%.2e%s\n", rec.g1, rec.g2, rec.best_ggm, rec.gap,
                rec.out_of_hypothesis ? " [out of hypothesis: an input has zero GGM]" : "");
    return 0;
}

inline int run_scan(const ExperimentConfig& cfg) {
    RngStream rng(cfg.seed, 0);
    auto [a, b] = detail::make_pair_states(cfg, rng, "ghz,ghz");
    const auto link = detail::default_link(a, cfg);
    const int grid = cfg.get_int("grid", 32);
    const double tolerance = cfg.get_double("tolerance", 1e-3);
    const ScanResult res =
        scan_unitary_space(a, b, link.first, link.second, grid, tolerance, cfg.threads);

    auto os = detail::open_artifact(cfg, "scan.csv");
    detail::write_csv_header(os, cfg, "alpha_x:rad,alpha_y:rad,alpha_z:rad,ggm:1,in_s_u:flag");
    os << "alpha_x,alpha_y,alpha_z,ggm,in_s_u\n";
    std::size_t idx = 0;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            for (int k = 0; k < grid; ++k, ++idx) {
                os << detail::fmt17(res.axis[static_cast<std::size_t>(i)]) << ','
                   << detail::fmt17(res.axis[static_cast<std::size_t>(j)]) << ','
                   << detail::fmt17(res.axis[static_cast<std::size_t>(k)]) << ','
                   << detail::fmt17(res.ggm[idx]) << ',' << int(res.s_u_mask[idx]) << "\n";
            }
        }
    }

    nlohmann::json j;
    j["pair"] = cfg.get_str("pair", "ghz,ghz");
    j["grid"] = grid;
    j["points"] = res.ggm.size();
    j["g1"] = res.g1;
    j["g2"] = res.g2;
    j["tolerance"] = tolerance;
    j["threshold"] = res.threshold;
    j["s_u_fraction"] = res.s_u_fraction;
    detail::write_summary(cfg, j);
    std::printf("S_U fraction = %.4f (threshold %.6f, %d^3 grid)\n", res.s_u_fraction,
                res.threshold, grid);
    return 0;
}

inline int run_table1(const ExperimentConfig& cfg) {
    const int samples = cfg.get_int("samples", 2000);
    const int bins = cfg.get_int("bins", 40);
    OptimizeOptions opt;
    opt.restarts = cfg.get_int("restarts", 24);

    const auto splits = standard_splits();
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < splits.size(); ++r) {
        const ResourceStats stats = resource_distribution(
            splits[r], samples, cfg.seed + r, cfg.threads, opt, bins);
        auto os = detail::open_artifact(cfg, "table1_row" + std::to_string(r + 1) + ".csv");
        detail::write_csv_header(os, cfg, "bin_left:1,bin_right:1,frequency:1");
        os << "bin_left,bin_right,frequency\n";
        for (std::size_t b = 0; b < stats.histogram.frequency.size(); ++b) {
            os << detail::fmt17(stats.histogram.edges[b]) << ','
               << detail::fmt17(stats.histogram.edges[b + 1]) << ','
               << detail::fmt17(stats.histogram.frequency[b]) << "\n";
        }
        rows.push_back({{"row", r + 1},
                        {"split", splits[r].label},
                        {"mean", stats.mean},
                        {"stddev", stats.stddev},
                        {"samples", samples}});
        std::printf("row %zu %-18s mean %.4f  std %.4f\n", r + 1, splits[r].label.c_str(),
                    stats.mean, stats.stddev);
    }
    nlohmann::json j;
    j["rows"] = rows;
    j["samples_per_row"] = samples;
    detail::write_summary(cfg, j);
    return 0;
}

inline int run_chain(const ExperimentConfig& cfg) {
    RngStream rng(cfg.seed, 0);
    const std::string unit_spec = cfg.get_str("unit", "ghz");
    const StateVector unit = make_state(unit_spec, rng);
    const int m = cfg.get_int("m", 3);
    std::vector<UnitaryParams> ps;
    const std::string params_str = cfg.get_str("params", "");
    for (int k = 0; k + 1 < m; ++k) {
        if (!params_str.empty()) {
            ps.push_back(parse_params(params_str));
        } else {
            ps.emplace_back(rng.uniform(0.0, UnitaryParams::kMax),
                            rng.uniform(0.0, UnitaryParams::kMax),
                            rng.uniform(0.0, UnitaryParams::kMax));
        }
    }
    const StateVector via_recursion = chain_state(unit, m, ps);
    const StateVector via_pipeline = chain_state_sequential(unit, m, ps);
    const double fid = fidelity(via_recursion, via_pipeline);
    const double g = ggm_full(via_recursion).value;

    nlohmann::json j;
    j["unit"] = unit_spec;
    j["m"] = m;
    j["num_qubits"] = via_recursion.num_qubits();
    nlohmann::json jp = nlohmann::json::array();
    for (const auto& p : ps) jp.push_back({p.alpha_x, p.alpha_y, p.alpha_z});
    j["params"] = jp;
    j["ggm"] = g;
    j["fidelity_vs_sequential"] = fid;
    detail::write_summary(cfg, j);
    std::printf("chain m=%d: GGM = %.12f, recursion-vs-pipeline fidelity = %.15f\n", m, g, fid);
    return 0;
}

inline int run_triangle(const ExperimentConfig& cfg) {
    RngStream rng(cfg.seed, 0);
    const std::string unit_spec = cfg.get_str("unit", "ghz");
    std::array<StateVector, 3> units{make_state(unit_spec, rng), make_state(unit_spec, rng),
                                     make_state(unit_spec, rng)};
    nlohmann::json j;
    j["unit"] = unit_spec;
    if (cfg.get_bool("optimize", false)) {
        TriangleOptimizeReport rep;
        {
            OptimizeOptions opt;
            opt.restarts = cfg.get_int("restarts", 8);
            opt.seed = cfg.seed;
            rep = optimize_triangle(units, opt);
        }
        nlohmann::json jp = nlohmann::json::array();
        for (const auto& p : rep.best_params) jp.push_back({p.alpha_x, p.alpha_y, p.alpha_z});
        j["params"] = jp;
        j["ggm"] = rep.best_ggm;
        j["optimized"] = true;
        j["restarts_used"] = rep.restarts_used;
        detail::write_summary(cfg, j);
        std::printf("triangle optimized GGM = %.12f\n", rep.best_ggm);
        return 0;
    }
    const UnitaryParams p = parse_params(cfg.get_str("params", "0,0.78539816339744831,0.78539816339744831"));
    const StateVector s = triangle_step(units, {p, p, p});
    const double g = ggm_full(s).value;
    j["params"] = {{p.alpha_x, p.alpha_y, p.alpha_z},
                   {p.alpha_x, p.alpha_y, p.alpha_z},
                   {p.alpha_x, p.alpha_y, p.alpha_z}};
    j["ggm"] = g;
    j["optimized"] = false;
    detail::write_summary(cfg, j);
    std::printf("triangle GGM = %.12f\n", g);
    return 0;
}

inline int run_dynamics(const ExperimentConfig& cfg) {
    RngStream rng(cfg.seed, 0);
    const std::string units_spec = cfg.get_str("units", "ghz,ghz");
    std::vector<StateVector> units;
    for (const auto& spec : detail::split(units_spec, ',')) units.push_back(make_state(spec, rng));

    std::vector<std::pair<int, int>> links;
    for (const auto& ls : detail::split(cfg.get_str("links", "2,3"), ';')) {
        links.push_back(parse_link(ls));
    }
    const HamiltonianParams hp{cfg.get_double("j", 1.0), cfg.get_double("gamma", 0.0),
                               cfg.get_double("delta", 0.0)};
    const double t_max = cfg.get_double("t-max", 20.0);
    const double dt = cfg.get_double("dt", 0.05);
    const std::vector<HamiltonianParams> hps(links.size(), hp);
    const TimeSeries series =
        ggm_timeseries(units, links, hps, time_grid(t_max, dt), cfg.threads, units_spec);

    auto os = detail::open_artifact(cfg, "dynamics.csv");
    detail::write_csv_header(os, cfg, "t:1/J,ggm:1");
    os << "t,ggm\n";
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        os << detail::fmt17(series.times[i]) << ',' << detail::fmt17(series.values[i]) << "\n";
    }

    const auto plateaus = find_plateaus(series, cfg.get_double("plateau-eps", 1e-6));
    const auto period = revival_period(units, links, hps, t_max, dt);
    nlohmann::json j;
    j["units"] = units_spec;
    j["j"] = hp.j;
    j["gamma"] = hp.gamma;
    j["delta"] = hp.delta;
    j["t_max"] = t_max;
    j["dt"] = dt;
    if (period) {
        j["revival_period"] = *period;
    } else {
        j["revival_period"] = nullptr;
    }
    nlohmann::json jp = nlohmann::json::array();
    for (const auto& pl : plateaus) {
        jp.push_back({{"t_begin", series.times[pl.begin]},
                      {"t_end", series.times[pl.end]},
                      {"level", pl.level}});
    }
    j["plateaus"] = jp;
    detail::write_summary(cfg, j);
    if (period) {
        std::printf("dynamics: %zu time points, revival period %.6f, %zu plateaus\n",
                    series.times.size(), *period, plateaus.size());
    } else {
        std::printf("dynamics: %zu time points, no revival within horizon, %zu plateaus\n",
                    series.times.size(), plateaus.size());
    }
    return 0;
}

inline int run_dicke(const ExperimentConfig& cfg) {
    const int n_aux = cfg.get_int("n-aux", 4);
    const HamiltonianParams hp{cfg.get_double("j", 1.0), 0.0, 0.0};
    const double t = cfg.get_double("t", M_PI / hp.j);
    const StateVector grown = dicke_growth(n_aux, hp, t);
    const int n = grown.num_qubits();
    const double fid_dicke = fidelity(grown, dicke(n, 1));

    nlohmann::json j;
    j["n_aux"] = n_aux;
    j["num_qubits"] = n;
    j["j"] = hp.j;
    j["t"] = t;
    j["ggm"] = ggm_full(grown).value;
    j["total_sigma_z"] = total_sigma_z(grown);
    j["fidelity_to_single_excitation_dicke"] = fid_dicke;
    detail::write_summary(cfg, j);
    std::printf("dicke growth: %d qubits, GGM = %.10f, overlap with D(%d,1) = %.10f\n", n,
                j["ggm"].get<double>(), n, fid_dicke);
    return 0;
}

inline int run_disorder(const ExperimentConfig& cfg) {
    RngStream rng(cfg.seed, 0);
    const std::string units_spec = cfg.get_str("units", "w,w");
    std::vector<StateVector> units;
    for (const auto& spec : detail::split(units_spec, ',')) units.push_back(make_state(spec, rng));
    std::vector<std::pair<int, int>> links;
    for (const auto& ls : detail::split(cfg.get_str("links", "2,3"), ';')) {
        links.push_back(parse_link(ls));
    }

    DisorderSpec spec;
    spec.mean_j = cfg.get_double("mean-j", 0.5);
    spec.sigma_j = cfg.get_double("sigma-j", 0.1);
    spec.nodes = cfg.get_int("nodes", 64);
    spec.samples = cfg.get_int("mc-samples", 10000);
    spec.seed = cfg.seed;
    const std::string scheme = cfg.get_str("scheme", "gauss_hermite");
    if (scheme == "gauss_hermite") {
        spec.scheme = DisorderSpec::Scheme::gauss_hermite;
    } else if (scheme == "monte_carlo") {
        spec.scheme = DisorderSpec::Scheme::monte_carlo;
    } else {
        throw InvalidArgument("scheme must be gauss_hermite or monte_carlo");
    }

    const HamiltonianParams hp{spec.mean_j, cfg.get_double("gamma", 0.0),
                               cfg.get_double("delta", 0.0)};
    const double t_max = cfg.get_double("t-max", 80.0);
    const double dt = cfg.get_double("dt", 0.5);
    const TimeSeries avg =
        quench_avg_ggm(units, links, hp, spec, time_grid(t_max, dt), cfg.threads, units_spec);

    auto os = detail::open_artifact(cfg, "disorder.csv");
    detail::write_csv_header(os, cfg, "t:1/J,avg_ggm:1");
    os << "t,avg_ggm\n";
    for (std::size_t i = 0; i < avg.times.size(); ++i) {
        os << detail::fmt17(avg.times[i]) << ',' << detail::fmt17(avg.values[i]) << "\n";
    }

    nlohmann::json j;
    j["units"] = units_spec;
    j["mean_j"] = spec.mean_j;
    j["sigma_j"] = spec.sigma_j;
    j["scheme"] = scheme;
    j["t_max"] = t_max;
    j["dt"] = dt;
    const double window = cfg.get_double("window", 5.0);
    const double eps = cfg.get_double("flatness-eps", 1e-3);
    j["saturation_criterion"] = {{"window_width", window}, {"flatness_eps", eps}};
    try {
        const SaturationResult sat = saturation(avg, window, eps);
        j["t_c"] = sat.t_c;
        j["g_s"] = sat.g_s;
        std::printf("disorder: t_c = %.3f, g_s = %.6f\n", sat.t_c, sat.g_s);
    } catch (const NoSaturation&) {
        j["t_c"] = nullptr;
        j["g_s"] = nullptr;
        j["note"] = "flatness criterion not met within the time horizon";
        std::printf("disorder: no saturation within t_max = %.1f under the configured criterion\n",
                    t_max);
    }
    detail::write_summary(cfg, j);
    return 0;
}

inline int run_tc_fit(const ExperimentConfig& cfg) {
    std::vector<double> sigmas, tcs, gss;
    nlohmann::json j;

    const std::string input = cfg.get_str("input", "");
    if (!input.empty()) {
        // Fit an existing (sigma_j, t_c[, g_s]) table.
        std::ifstream is(input);
        if (!is) throw Error("cannot open input file: " + input);
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty() || line[0] == '#') continue;
            const auto cells = detail::split(line, ',');
            if (cells.size() < 2 || cells[0] == "sigma_j") continue;
            sigmas.push_back(detail::parse_double(cells[0], "sigma_j"));
            tcs.push_back(detail::parse_double(cells[1], "t_c"));
            gss.push_back(cells.size() > 2 ? detail::parse_double(cells[2], "g_s") : 0.0);
        }
        j["input"] = input;
    } else {
        // Run the full sweep: disorder-averaged series per sigma, saturation
        // detection with the matched criterion, then the exponential fit.
        const std::string sig_str = cfg.get_str("sigmas", "0.01,0.02,0.03,0.04,0.05,0.06,0.07,0.08,0.09,0.10");
        const int nodes = cfg.get_int("nodes", 256);
        const double dt = cfg.get_double("dt", 0.5);
        const double window = cfg.get_double("window", 5.0);
        const double eps = cfg.get_double("flatness-eps", 0.02);
        const double horizon_scale = cfg.get_double("horizon-scale", 8.0);
        RngStream rng(cfg.seed, 0);
        const std::string units_spec = cfg.get_str("units", "w,w");
        std::vector<StateVector> units;
        for (const auto& spec : detail::split(units_spec, ','))
            units.push_back(make_state(spec, rng));
        const HamiltonianParams hp{cfg.get_double("mean-j", 0.5), 0.0, 0.0};

        for (const auto& cell : detail::split(sig_str, ',')) {
            const double sigma = detail::parse_double(cell, "sigma");
            DisorderSpec spec;
            spec.mean_j = hp.j;
            spec.sigma_j = sigma;
            spec.nodes = nodes;
            const double t_max = horizon_scale / sigma;
            const TimeSeries avg = quench_avg_ggm(units, {{2, 3}}, hp, spec,
                                                  time_grid(t_max, dt), cfg.threads);
            const SaturationResult sat = saturation(avg, window, eps);
            sigmas.push_back(sigma);
            tcs.push_back(sat.t_c);
            gss.push_back(sat.g_s);
            std::printf("sigma %.3f: t_c = %.2f, g_s = %.6f\n", sigma, sat.t_c, sat.g_s);
        }
        j["units"] = units_spec;
        j["nodes"] = nodes;
        j["criterion"] = {{"window_width", window}, {"flatness_eps", eps}, {"dt", dt},
                          {"horizon_scale", horizon_scale}};
    }

    auto os = detail::open_artifact(cfg, "tc_fit.csv");
    detail::write_csv_header(os, cfg, "sigma_j:1,t_c:1/J,g_s:1");
    os << "sigma_j,t_c,g_s\n";
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        os << detail::fmt17(sigmas[i]) << ',' << detail::fmt17(tcs[i]) << ','
           << detail::fmt17(gss[i]) << "\n";
    }

    const FitResult fit = fit_tc(sigmas, tcs, cfg.seed);
    j["fit"] = {{"b", fit.b}, {"c", fit.c}, {"d", fit.d}, {"relative_residual", fit.residual}};
    detail::write_summary(cfg, j);
    std::printf("fit: t_c = %.3f + %.3f exp(-%.3f (sigma - 0.01)), rel residual %.4f\n", fit.b,
                fit.c, fit.d, fit.residual);
    return 0;
}

inline int run_suppression(const ExperimentConfig& cfg) {
    const std::string family_str = cfg.get_str("family", "g_ghz");
    UnitFamily family;
    double sigma_default, theta_lo, theta_hi, tmax_default;
    if (family_str == "g_ghz") {
        family = UnitFamily::g_ghz;
        sigma_default = 0.1;
        theta_lo = 0.1;
        theta_hi = M_PI / 4.0;
        tmax_default = 80.0;
    } else if (family_str == "g_w") {
        family = UnitFamily::g_w;
        sigma_default = 0.3;
        theta_lo = 0.3;
        theta_hi = 1.2;
        tmax_default = 30.0;
    } else {
        throw InvalidArgument("family must be g_ghz or g_w");
    }

    const int n_theta = cfg.get_int("n-theta", 10);
    if (n_theta < 2) throw InvalidArgument("n-theta must be >= 2");
    std::vector<double> thetas(static_cast<std::size_t>(n_theta));
    const double lo = cfg.get_double("theta-min", theta_lo);
    const double hi = cfg.get_double("theta-max", theta_hi);
    for (int i = 0; i < n_theta; ++i) {
        thetas[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n_theta - 1);
    }

    DisorderSpec spec;
    spec.mean_j = cfg.get_double("mean-j", 0.5);
    spec.sigma_j = cfg.get_double("sigma-j", sigma_default);
    spec.nodes = cfg.get_int("nodes", 64);
    const double t_max = cfg.get_double("t-max", tmax_default);
    const double dt = cfg.get_double("dt", 0.5);

    const auto points = suppression_sweep(family, thetas, spec, t_max, dt, cfg.threads);

    auto os = detail::open_artifact(cfg, "suppression.csv");
    detail::write_csv_header(os, cfg, "theta:rad,ratio:1");
    os << "theta,ratio\n";
    for (const auto& pt : points) {
        os << detail::fmt17(pt.theta) << ',' << detail::fmt17(pt.ratio) << "\n";
    }

    nlohmann::json j;
    j["family"] = family_str;
    j["sigma_j"] = spec.sigma_j;
    j["mean_j"] = spec.mean_j;
    j["t_max"] = t_max;
    nlohmann::json jp = nlohmann::json::array();
    for (const auto& pt : points) {
        jp.push_back({{"theta", pt.theta},
                      {"g_input", pt.g_input},
                      {"g_s", pt.g_s},
                      {"ratio", pt.ratio}});
    }
    j["points"] = jp;
    detail::write_summary(cfg, j);
    std::printf("suppression sweep (%s): %d theta points written\n", family_str.c_str(), n_theta);
    return 0;
}

inline int run_decompose(const ExperimentConfig& cfg) {
    const UnitaryParams p = parse_params(cfg.get_str("params", "0,0,0"));
    const GateSequence seq = decompose_u_d(p);
    const Eigen::Matrix4cd target = u_d(p);
    const Eigen::Matrix4cd rebuilt = reconstruct(seq);
    const double fid = std::abs((rebuilt.adjoint() * target).trace()) / 4.0;

    auto os = detail::open_artifact(cfg, "decompose_circuit.txt");
    os << to_circuit_text(seq);

    nlohmann::json j;
    j["params"] = {p.alpha_x, p.alpha_y, p.alpha_z};
    j["cnot_count"] = seq.cnot_count();
    j["rotation_count"] = seq.rotation_count();
    j["global_phase"] = seq.global_phase;
    j["reconstruction_fidelity"] = fid;
    detail::write_summary(cfg, j);
    std::printf("decomposition: %d CNOTs, %d rotations, reconstruction fidelity %.14f\n",
                seq.cnot_count(), seq.rotation_count(), fid);
    return 0;
}

inline int run(const ExperimentConfig& cfg) {
    if (cfg.threads < 1) throw InvalidArgument("threads must be >= 1");
    if (cfg.experiment == "ggm") return run_ggm(cfg);
    if (cfg.experiment == "merge") return run_merge(cfg);
    if (cfg.experiment == "optimize") return run_optimize(cfg);
    if (cfg.experiment == "scan") return run_scan(cfg);
    if (cfg.experiment == "table1") return run_table1(cfg);
    if (cfg.experiment == "chain") return run_chain(cfg);
    if (cfg.experiment == "triangle") return run_triangle(cfg);
    if (cfg.experiment == "dynamics") return run_dynamics(cfg);
    if (cfg.experiment == "dicke") return run_dicke(cfg);
    if (cfg.experiment == "disorder") return run_disorder(cfg);
    if (cfg.experiment == "tc-fit") return run_tc_fit(cfg);
    if (cfg.experiment == "suppression") return run_suppression(cfg);
    if (cfg.experiment == "decompose") return run_decompose(cfg);
    if (cfg.experiment == "prop-check") return run_prop_check(cfg);
    throw InvalidArgument("unknown experiment: " + cfg.experiment);
}

}  // namespace entcirc
