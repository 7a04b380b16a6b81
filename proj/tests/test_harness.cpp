// SPDX-License-Identifier: MIT
//
// Experiment harness: state-spec grammar, config parsing, artifact layout,
// and rerun reproducibility of the emitted files.

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "entcirc/harness.hpp"

using namespace entcirc;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
    const fs::path p = fs::temp_directory_path() / ("entcirc_test_" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

// All header lines except the generation timestamp take part in byte
// identity.
std::string drop_generated(const std::string& text) {
    std::istringstream is(text);
    std::string out, line;
    while (std::getline(is, line)) {
        if (line.rfind("# generated:", 0) == 0) continue;
        out += line;
        out += '\n';
    }
    return out;
}

nlohmann::json load_json(const fs::path& p) {
    std::ifstream is(p);
    REQUIRE(is.good());
    return nlohmann::json::parse(is);
}

}  // namespace

TEST_CASE("state specs resolve to the named constructors", "[harness]") {
    RngStream rng(11, 0);
    CHECK(fidelity(make_state("ghz", rng), ghz()) == Catch::Approx(1.0).margin(1e-15));
    CHECK(fidelity(make_state("w", rng), w()) == Catch::Approx(1.0).margin(1e-15));
    CHECK(fidelity(make_state("wbar", rng), wbar()) == Catch::Approx(1.0).margin(1e-15));
    CHECK(fidelity(make_state("g_ghz:0.3", rng), g_ghz(0.3)) == Catch::Approx(1.0).margin(1e-15));
    CHECK(fidelity(make_state("g_w:0.4:0.9", rng), g_w(0.4, 0.9)) ==
          Catch::Approx(1.0).margin(1e-15));
    CHECK(fidelity(make_state("dicke:4:2", rng), dicke(4, 2)) == Catch::Approx(1.0).margin(1e-15));
    CHECK(fidelity(make_state("product:3", rng), StateVector::basis(3, 0)) ==
          Catch::Approx(1.0).margin(1e-15));
    CHECK(fidelity(make_state("basis:3:5", rng), StateVector::basis(3, 5)) ==
          Catch::Approx(1.0).margin(1e-15));

    const StateVector h = make_state("haar:4", rng);
    CHECK(h.num_qubits() == 4);
    CHECK(h.norm_sq() == Catch::Approx(1.0).margin(1e-12));

    // Random families consume the stream: repeated specs differ.
    const StateVector a = make_state("haar:3", rng);
    const StateVector b = make_state("haar:3", rng);
    CHECK(fidelity(a, b) < 1.0 - 1e-6);
    const StateVector wc = make_state("wclass", rng);
    CHECK(wc.num_qubits() == 3);

    CHECK_THROWS_AS(make_state("nope", rng), InvalidArgument);
    CHECK_THROWS_AS(make_state("ghz:3", rng), InvalidArgument);
    CHECK_THROWS_AS(make_state("haar", rng), InvalidArgument);
    CHECK_THROWS_AS(make_state("haar:x", rng), InvalidArgument);
    CHECK_THROWS(make_state("haar:0", rng));
    CHECK_THROWS(make_state("basis:2:9", rng));
    CHECK_THROWS(make_state("dicke:3:5", rng));
}

TEST_CASE("parameter and link parsing", "[harness]") {
    const UnitaryParams p = parse_params("0.1,0.2,0.3");
    CHECK(p.alpha_x == 0.1);
    CHECK(p.alpha_y == 0.2);
    CHECK(p.alpha_z == 0.3);
    CHECK_THROWS_AS(parse_params("0.1,0.2"), InvalidArgument);
    CHECK_THROWS_AS(parse_params("a,b,c"), InvalidArgument);
    CHECK_THROWS_AS(parse_params("1.6,0,0"), InvalidArgument);

    const auto link = parse_link("2,3");
    CHECK(link.first == 2);
    CHECK(link.second == 3);
    CHECK_THROWS_AS(parse_link("2"), InvalidArgument);
    CHECK_THROWS_AS(parse_link("2,x"), InvalidArgument);
}

TEST_CASE("config accessors fall back per key", "[harness]") {
    ExperimentConfig cfg;
    cfg.params["a"] = 1.5;
    cfg.params["b"] = "hi";
    cfg.params["c"] = 7;
    cfg.params["d"] = true;
    CHECK(cfg.get_double("a", 0.0) == 1.5);
    CHECK(cfg.get_str("b", "z") == "hi");
    CHECK(cfg.get_int("c", 0) == 7);
    CHECK(cfg.get_bool("d", false));
    CHECK(cfg.get_double("missing", 2.25) == 2.25);
    CHECK(cfg.get_str("missing", "z") == "z");
    CHECK(cfg.get_int("missing", -4) == -4);
    CHECK_FALSE(cfg.get_bool("missing", false));
}

TEST_CASE("ggm experiment writes a complete summary", "[harness]") {
    const fs::path dir = fresh_dir("ggm");
    ExperimentConfig cfg;
    cfg.experiment = "ggm";
    cfg.seed = 5;
    cfg.out = dir.string();
    cfg.params["state"] = "w";
    REQUIRE(run(cfg) == 0);

    const auto j = load_json(dir / "ggm_summary.json");
    CHECK(j.at("experiment") == "ggm");
    CHECK(j.at("seed") == 5);
    CHECK(j.at("version") == std::string(kVersion));
    CHECK(j.at("state") == "w");
    CHECK(j.at("num_qubits") == 3);
    CHECK(j.at("ggm").get<double>() == Catch::Approx(1.0 / 3.0).margin(1e-12));
    CHECK(j.at("witness_cut") == 1);
    CHECK(j.at("per_cut").size() == 3);
    fs::remove_all(dir);
}

TEST_CASE("scan artifacts are byte-identical across reruns", "[harness]") {
    auto run_into = [](const fs::path& dir) {
        ExperimentConfig cfg;
        cfg.experiment = "scan";
        cfg.seed = 99;
        cfg.out = dir.string();
        cfg.params["pair"] = "ghz,ghz";
        cfg.params["grid"] = 4;
        REQUIRE(run(cfg) == 0);
    };
    const fs::path d1 = fresh_dir("scan1");
    const fs::path d2 = fresh_dir("scan2");
    run_into(d1);
    run_into(d2);

    const std::string csv1 = slurp(d1 / "scan.csv");
    const std::string csv2 = slurp(d2 / "scan.csv");
    CHECK(drop_generated(csv1) == drop_generated(csv2));
    CHECK(csv1.find("# schema: alpha_x:rad,alpha_y:rad,alpha_z:rad,ggm:1,in_s_u:flag") !=
          std::string::npos);
    CHECK(csv1.find("# units:") != std::string::npos);
    CHECK(csv1.find("# seed: 99") != std::string::npos);

    // Summaries carry no timestamp at all, so they match byte for byte.
    CHECK(slurp(d1 / "scan_summary.json") == slurp(d2 / "scan_summary.json"));

    const auto j = load_json(d1 / "scan_summary.json");
    CHECK(j.at("grid") == 4);
    const double frac = j.at("s_u_fraction").get<double>();
    CHECK(frac >= 0.0);
    CHECK(frac <= 1.0);
    fs::remove_all(d1);
    fs::remove_all(d2);
}

TEST_CASE("decompose experiment emits circuit text and exact rebuild", "[harness]") {
    const fs::path dir = fresh_dir("decompose");
    ExperimentConfig cfg;
    cfg.experiment = "decompose";
    cfg.out = dir.string();
    cfg.params["params"] = "0.3,0.2,0.1";
    REQUIRE(run(cfg) == 0);

    const std::string circuit = slurp(dir / "decompose_circuit.txt");
    CHECK(circuit.find("CNOT") != std::string::npos);
    CHECK(circuit.find("PHASE") != std::string::npos);

    const auto j = load_json(dir / "decompose_summary.json");
    CHECK(j.at("reconstruction_fidelity").get<double>() == Catch::Approx(1.0).margin(1e-12));
    CHECK(j.at("cnot_count").get<int>() <= 3);
    CHECK(j.at("rotation_count").get<int>() <= 5);
    fs::remove_all(dir);
}

TEST_CASE("chain experiment reports unit recursion fidelity", "[harness]") {
    const fs::path dir = fresh_dir("chain");
    ExperimentConfig cfg;
    cfg.experiment = "chain";
    cfg.seed = 3;
    cfg.out = dir.string();
    cfg.params["unit"] = "ghz";
    cfg.params["m"] = 3;
    REQUIRE(run(cfg) == 0);

    const auto j = load_json(dir / "chain_summary.json");
    CHECK(j.at("m") == 3);
    CHECK(j.at("num_qubits") == 9);
    CHECK(j.at("fidelity_vs_sequential").get<double>() == Catch::Approx(1.0).margin(1e-12));
    fs::remove_all(dir);
}

TEST_CASE("dispatch validates experiment name and thread count", "[harness]") {
    ExperimentConfig cfg;
    cfg.experiment = "not-an-experiment";
    CHECK_THROWS_AS(run(cfg), InvalidArgument);
    cfg.experiment = "ggm";
    cfg.threads = 0;
    CHECK_THROWS_AS(run(cfg), InvalidArgument);
}
