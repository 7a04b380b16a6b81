// SPDX-License-Identifier: MIT
//
// Command-line front end: one subcommand per experiment. Every flag mirrors
// a flat key in the JSON config file (--config); flags given on the command
// line override file values.

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entcirc/harness.hpp"

namespace {

using Applier = std::function<void(nlohmann::json&)>;

template <typename T>
void add_opt(CLI::App* sub, std::vector<Applier>& appliers, const std::string& flag,
             const std::string& key, const std::string& desc) {
    auto val = std::make_shared<T>();
    CLI::Option* opt = sub->add_option(flag, *val, desc);
    appliers.push_back([opt, val, key](nlohmann::json& params) {
        if (opt->count() > 0) params[key] = *val;
    });
}

void add_switch(CLI::App* sub, std::vector<Applier>& appliers, const std::string& flag,
                const std::string& key, const std::string& desc) {
    auto val = std::make_shared<bool>(false);
    CLI::Option* opt = sub->add_flag(flag, *val, desc);
    appliers.push_back([opt, val, key](nlohmann::json& params) {
        if (opt->count() > 0) params[key] = *val;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement circulation simulator"};
    app.set_version_flag("--version", std::string("entcirc ") + entcirc::kVersion);
    app.require_subcommand(1);

    std::uint64_t seed = 20240901;
    int threads = 1;
    std::string out = ".";
    std::string config_path;
    auto* seed_opt = app.add_option("--seed", seed, "base RNG seed");
    auto* threads_opt = app.add_option("--threads", threads, "worker thread count");
    auto* out_opt = app.add_option("--out", out, "output directory");
    app.add_option("--config", config_path, "JSON config file (flat keys; CLI flags override)");

    std::map<std::string, std::vector<Applier>> appliers;
    auto sub = [&](const std::string& name, const std::string& desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    {
        auto* s = sub("ggm", "GGM of a named state, with per-cut detail");
        auto& a = appliers["ggm"];
        add_opt<std::string>(s, a, "--state", "state", "state spec (e.g. ghz, w, haar:4, dicke:6:1)");
        add_opt<int>(s, a, "--max-cut-size", "max-cut-size", "cut-size cap for the restricted GGM");
    }
    {
        auto* s = sub("merge", "merge two units with a fixed link unitary");
        auto& a = appliers["merge"];
        add_opt<std::string>(s, a, "--pair", "pair", "two unit specs, comma separated");
        add_opt<std::string>(s, a, "--link", "link", "global link qubits 'a,b'");
        add_opt<std::string>(s, a, "--params", "params", "unitary angles 'ax,ay,az' (radians)");
    }
    {
        auto* s = sub("optimize", "maximize the merged GGM over the link unitary");
        auto& a = appliers["optimize"];
        add_opt<std::string>(s, a, "--pair", "pair", "two unit specs, comma separated");
        add_opt<std::string>(s, a, "--link", "link", "global link qubits 'a,b'");
        add_opt<int>(s, a, "--restarts", "restarts", "multistart count");
    }
    {
        auto* s = sub("scan", "grid scan of the merged GGM over all three angles");
        auto& a = appliers["scan"];
        add_opt<std::string>(s, a, "--pair", "pair", "two unit specs, comma separated");
        add_opt<std::string>(s, a, "--link", "link", "global link qubits 'a,b'");
        add_opt<int>(s, a, "--grid", "grid", "points per axis (inclusive over [0, pi/2])");
        add_opt<double>(s, a, "--tolerance", "tolerance", "S_U membership slack");
    }
    {
        auto* s = sub("table1", "resource distributions for the five standard 6-qubit splits");
        auto& a = appliers["table1"];
        add_opt<int>(s, a, "--samples", "samples", "random input pairs per row");
        add_opt<int>(s, a, "--bins", "bins", "histogram bins over [0, 1/2]");
        add_opt<int>(s, a, "--restarts", "restarts", "optimizer restarts per pair");
    }
    {
        auto* s = sub("chain", "build an m-unit linear chain via the closed-form recursion");
        auto& a = appliers["chain"];
        add_opt<std::string>(s, a, "--unit", "unit", "3-qubit unit spec");
        add_opt<int>(s, a, "--m", "m", "number of units");
        add_opt<std::string>(s, a, "--params", "params", "angles 'ax,ay,az' reused per link (random if omitted)");
    }
    {
        auto* s = sub("triangle", "merge three units on a triangle");
        auto& a = appliers["triangle"];
        add_opt<std::string>(s, a, "--unit", "unit", "3-qubit unit spec (used for all three)");
        add_opt<std::string>(s, a, "--params", "params", "angles 'ax,ay,az' used on every link");
        add_switch(s, a, "--optimize", "optimize", "optimize all nine angles instead");
        add_opt<int>(s, a, "--restarts", "restarts", "optimizer restarts");
    }
    {
        auto* s = sub("dynamics", "GGM time series under the pair-exchange Hamiltonian");
        auto& a = appliers["dynamics"];
        add_opt<std::string>(s, a, "--units", "units", "unit specs, comma separated");
        add_opt<std::string>(s, a, "--links", "links", "links 'a,b;c,d;...'");
        add_opt<double>(s, a, "--j", "j", "exchange coupling J");
        add_opt<double>(s, a, "--gamma", "gamma", "XY anisotropy");
        add_opt<double>(s, a, "--delta", "delta", "ZZ coefficient");
        add_opt<double>(s, a, "--t-max", "t-max", "time horizon (units of 1/J)");
        add_opt<double>(s, a, "--dt", "dt", "time step");
        add_opt<double>(s, a, "--plateau-eps", "plateau-eps", "flatness threshold for plateaus");
    }
    {
        auto* s = sub("dicke", "grow a single-excitation Dicke-like state from a W seed");
        auto& a = appliers["dicke"];
        add_opt<int>(s, a, "--n-aux", "n-aux", "auxiliary qubits to absorb");
        add_opt<double>(s, a, "--j", "j", "exchange coupling J");
        add_opt<double>(s, a, "--t", "t", "per-pair evolution time");
    }
    {
        auto* s = sub("disorder", "disorder-averaged GGM dynamics");
        auto& a = appliers["disorder"];
        add_opt<std::string>(s, a, "--units", "units", "unit specs, comma separated");
        add_opt<std::string>(s, a, "--links", "links", "links 'a,b;c,d;...'");
        add_opt<double>(s, a, "--mean-j", "mean-j", "mean coupling");
        add_opt<double>(s, a, "--sigma-j", "sigma-j", "coupling standard deviation");
        add_opt<std::string>(s, a, "--scheme", "scheme", "gauss_hermite or monte_carlo");
        add_opt<int>(s, a, "--nodes", "nodes", "quadrature nodes");
        add_opt<int>(s, a, "--mc-samples", "mc-samples", "Monte Carlo samples");
        add_opt<double>(s, a, "--gamma", "gamma", "XY anisotropy");
        add_opt<double>(s, a, "--delta", "delta", "ZZ coefficient");
        add_opt<double>(s, a, "--t-max", "t-max", "time horizon");
        add_opt<double>(s, a, "--dt", "dt", "time step");
        add_opt<double>(s, a, "--window", "window", "saturation window width");
        add_opt<double>(s, a, "--flatness-eps", "flatness-eps", "saturation flatness threshold");
    }
    {
        auto* s = sub("tc-fit", "saturation-time sweep over sigma_j and exponential fit");
        auto& a = appliers["tc-fit"];
        add_opt<std::string>(s, a, "--input", "input", "existing sigma_j,t_c CSV to fit (skips the sweep)");
        add_opt<std::string>(s, a, "--sigmas", "sigmas", "comma-separated sigma_j values");
        add_opt<std::string>(s, a, "--units", "units", "unit specs, comma separated");
        add_opt<double>(s, a, "--mean-j", "mean-j", "mean coupling");
        add_opt<int>(s, a, "--nodes", "nodes", "quadrature nodes");
        add_opt<double>(s, a, "--dt", "dt", "time step");
        add_opt<double>(s, a, "--window", "window", "saturation window width");
        add_opt<double>(s, a, "--flatness-eps", "flatness-eps", "saturation flatness threshold");
        add_opt<double>(s, a, "--horizon-scale", "horizon-scale", "t_max = horizon-scale / sigma");
    }
    {
        auto* s = sub("suppression", "suppression ratio g_s / G_input across a unit family");
        auto& a = appliers["suppression"];
        add_opt<std::string>(s, a, "--family", "family", "g_ghz or g_w");
        add_opt<int>(s, a, "--n-theta", "n-theta", "number of theta points");
        add_opt<double>(s, a, "--theta-min", "theta-min", "first theta");
        add_opt<double>(s, a, "--theta-max", "theta-max", "last theta");
        add_opt<double>(s, a, "--mean-j", "mean-j", "mean coupling");
        add_opt<double>(s, a, "--sigma-j", "sigma-j", "coupling standard deviation");
        add_opt<int>(s, a, "--nodes", "nodes", "quadrature nodes");
        add_opt<double>(s, a, "--t-max", "t-max", "time horizon");
        add_opt<double>(s, a, "--dt", "dt", "time step");
    }
    {
        auto* s = sub("decompose", "CNOT + rotation circuit for a link unitary");
        auto& a = appliers["decompose"];
        add_opt<std::string>(s, a, "--params", "params", "unitary angles 'ax,ay,az' (radians)");
    }
    {
        auto* s = sub("prop-check", "optimized merge vs. min(G1, G2) for one pair");
        auto& a = appliers["prop-check"];
        add_opt<std::string>(s, a, "--pair", "pair", "two unit specs, comma separated");
        add_opt<std::string>(s, a, "--link", "link", "global link qubits 'a,b'");
        add_opt<int>(s, a, "--restarts", "restarts", "multistart count");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        entcirc::ExperimentConfig cfg;
        cfg.seed = seed;
        cfg.threads = threads;
        cfg.out = out;

        if (!config_path.empty()) {
            std::ifstream is(config_path);
            if (!is) throw entcirc::Error("cannot open config file: " + config_path);
            nlohmann::json file = nlohmann::json::parse(is);
            if (!file.is_object()) throw entcirc::Error("config file must hold a JSON object");
            for (const auto& item : file.items()) {
                if (item.key() == "seed") {
                    if (seed_opt->count() == 0) cfg.seed = item.value().get<std::uint64_t>();
                } else if (item.key() == "threads") {
                    if (threads_opt->count() == 0) cfg.threads = item.value().get<int>();
                } else if (item.key() == "out") {
                    if (out_opt->count() == 0) cfg.out = item.value().get<std::string>();
                } else if (item.key() == "experiment") {
                    // informational; the subcommand decides
                } else {
                    cfg.params[item.key()] = item.value();
                }
            }
        }

        CLI::App* chosen = app.get_subcommands().front();
        cfg.experiment = chosen->get_name();
        for (const auto& apply : appliers[cfg.experiment]) apply(cfg.params);

        return entcirc::run(cfg);
    } catch (const entcirc::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
