// SPDX-License-Identifier: MIT
//
// Closed-form marginal eigenvalues versus a generic numerical route
// (partial trace + Hermitian eigensolver) on the same states.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "entcirc/closedform.hpp"
#include "entcirc/ggm.hpp"
#include "entcirc/qstate.hpp"
#include "entcirc/rng.hpp"
#include "entcirc/states.hpp"

using namespace entcirc;

namespace {

UnitaryParams random_params(RngStream& rng) {
    return {rng.uniform(0.0, UnitaryParams::kMax), rng.uniform(0.0, UnitaryParams::kMax),
            rng.uniform(0.0, UnitaryParams::kMax)};
}

SchmidtPair random_schmidt(RngStream& rng) {
    const double g1 = rng.uniform(0.5, 1.0);
    const double g2 = rng.uniform(0.5, g1);
    return {g1, g2};
}

double top_eig(const StateVector& s, const std::vector<int>& keep) {
    return eigvals_hermitian(reduced_density(s, keep)).front();
}

void check_spectrum(const StateVector& s, const std::vector<int>& keep,
                    std::array<double, 4> predicted, double tol) {
    auto numeric = eigvals_hermitian(reduced_density(s, keep));
    // Nonzero support has rank <= 4 for these marginals.
    REQUIRE(numeric.size() >= 4);
    for (std::size_t i = 4; i < numeric.size(); ++i) CHECK(std::abs(numeric[i]) < tol);
    numeric.resize(4);
    std::sort(predicted.begin(), predicted.end(), std::greater<double>());
    for (int i = 0; i < 4; ++i) {
        CHECK(predicted[static_cast<std::size_t>(i)] ==
              Catch::Approx(numeric[static_cast<std::size_t>(i)]).margin(tol));
    }
}

}  // namespace

TEST_CASE("schmidt pair validation", "[closedform]") {
    CHECK_THROWS_AS(SchmidtPair(0.4, 0.6, 0.5, 0.5), InvalidArgument);  // gamma1 < delta1
    CHECK_THROWS_AS(SchmidtPair(0.7, 0.3, 0.8, 0.2), InvalidArgument);  // gamma2 > gamma1
    CHECK_THROWS_AS(SchmidtPair(0.7, 0.2, 0.6, 0.4), InvalidArgument);  // sums != 1
    CHECK_THROWS_AS(SchmidtPair(1.2, -0.2, 0.5, 0.5), InvalidArgument); // out of [0,1]
    const SchmidtPair ok(0.8, 0.6);
    CHECK(ok.delta1 == Catch::Approx(0.2).margin(1e-15));
    CHECK(ok.delta2 == Catch::Approx(0.4).margin(1e-15));
}

TEST_CASE("four-party state at the identity point", "[closedform]") {
    const SchmidtPair sp(0.7, 0.55);
    const StateVector s = four_party_state(sp, UnitaryParams{});
    CHECK(std::abs(s.amplitude(0b0000) - cxd{std::sqrt(0.7 * 0.55), 0.0}) < 1e-15);
    CHECK(std::abs(s.amplitude(0b0011) - cxd{std::sqrt(0.7 * 0.45), 0.0}) < 1e-15);
    CHECK(std::abs(s.amplitude(0b1100) - cxd{std::sqrt(0.3 * 0.55), 0.0}) < 1e-15);
    CHECK(std::abs(s.amplitude(0b1111) - cxd{std::sqrt(0.3 * 0.45), 0.0}) < 1e-15);
    // Only those four components are populated before the unitary acts.
    double rest = 0.0;
    for (std::uint64_t i : {1ull, 2ull, 4ull, 5ull, 6ull, 7ull, 8ull, 9ull, 10ull, 11ull, 13ull, 14ull})
        rest += std::abs(s.amplitude(i));
    CHECK(rest < 1e-15);
}

TEST_CASE("single-party maxima match the numeric marginals", "[closedform]") {
    RngStream rng(301, 0);
    for (int rep = 0; rep < 40; ++rep) {
        const SchmidtPair sp = random_schmidt(rng);
        const UnitaryParams p = random_params(rng);
        const StateVector s = four_party_state(sp, p);
        const auto predicted = prop1_eigs(sp, p);
        for (int q = 0; q < 4; ++q) {
            CHECK(predicted[static_cast<std::size_t>(q)] ==
                  Catch::Approx(top_eig(s, {q})).margin(1e-12));
        }
        // The ordering convention makes the first entry the overall maximum.
        CHECK(predicted[0] >= predicted[1] - 1e-12);
        CHECK(predicted[0] >= predicted[2] - 1e-12);
        CHECK(predicted[0] >= predicted[3] - 1e-12);
    }
}

TEST_CASE("link-qubit populations are a complementary pair", "[closedform]") {
    RngStream rng(307, 0);
    for (int rep = 0; rep < 20; ++rep) {
        const SchmidtPair sp = random_schmidt(rng);
        const UnitaryParams p = random_params(rng);
        const auto e = eps12(sp, p);
        // Both are probabilities, and at the identity they reduce to the
        // input Schmidt weights.
        CHECK(e.eps1 >= -1e-12);
        CHECK(e.eps1 <= 1.0 + 1e-12);
        CHECK(e.eps2 >= -1e-12);
        CHECK(e.eps2 <= 1.0 + 1e-12);
        // Numeric cross-check: eps1 is a population of the qubit-1 marginal.
        const StateVector s = four_party_state(sp, p);
        const auto eigs = eigvals_hermitian(reduced_density(s, {1}));
        const double hi = std::max(e.eps1, 1.0 - e.eps1);
        CHECK(hi == Catch::Approx(eigs.front()).margin(1e-12));
    }
    // At the identity the first branch returns the qubit-1 weight directly;
    // the second branch is phrased as the complementary population of qubit 2
    // (both are eigenvalues of the same marginal, and downstream consumers
    // only ever use max(eps, 1 - eps)).
    const SchmidtPair sp(0.8, 0.65);
    const auto id = eps12(sp, UnitaryParams{});
    CHECK(id.eps1 == Catch::Approx(0.8).margin(1e-14));
    CHECK(id.eps2 == Catch::Approx(1.0 - 0.65).margin(1e-14));
}

TEST_CASE("two-party eigenvalue branches match the numeric spectra", "[closedform]") {
    RngStream rng(311, 0);
    auto contains = [](const std::vector<double>& spec, double v) {
        for (double x : spec)
            if (std::abs(x - v) < 1e-11) return true;
        return false;
    };
    for (int rep = 0; rep < 40; ++rep) {
        const SchmidtPair sp = random_schmidt(rng);
        const UnitaryParams p = random_params(rng);
        const StateVector s = four_party_state(sp, p);
        const auto eb = appendix_b_eigs(sp, p);
        // The single-party value is the top eigenvalue outright; the
        // two-party values are eigenvalue branches (members of the spectrum,
        // not necessarily its maximum).
        CHECK(eb.lambda1_1 == Catch::Approx(top_eig(s, {0})).margin(1e-12));
        CHECK(contains(eigvals_hermitian(reduced_density(s, {0, 1})), eb.lambda2_12));
        CHECK(contains(eigvals_hermitian(reduced_density(s, {0, 2})), eb.lambda2_13));
    }
}

TEST_CASE("GHZ-GHZ merge spectra", "[closedform]") {
    RngStream rng(313, 0);
    for (int rep = 0; rep < 25; ++rep) {
        const UnitaryParams p = random_params(rng);
        const StateVector merged = apply_two_qubit(tensor(ghz(), ghz()), u_d(p), 2, 3);
        check_spectrum(merged, {0, 1, 2}, ghzghz_rho123_spectrum(p), 1e-12);
        check_spectrum(merged, {0, 1, 3}, ghzghz_rho124_spectrum(p), 1e-12);

        const auto eigs = ghzghz_eigs(p);
        CHECK(eigs.lambda1_1 == Catch::Approx(top_eig(merged, {0})).margin(1e-12));
        CHECK(eigs.lambda3_123 ==
              Catch::Approx(ghzghz_rho123_spectrum(p)[0]).margin(1e-14));
        CHECK(eigs.lambda3_124 ==
              Catch::Approx(ghzghz_rho124_spectrum(p)[0]).margin(1e-14));

        // Swapping alpha_x and alpha_y permutes amplitudes but not spectra.
        if (p.alpha_x != p.alpha_y) {
            const UnitaryParams q(p.alpha_y, p.alpha_x, p.alpha_z);
            auto a = ghzghz_rho123_spectrum(p);
            auto b = ghzghz_rho123_spectrum(q);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            for (int i = 0; i < 4; ++i)
                CHECK(a[static_cast<std::size_t>(i)] ==
                      Catch::Approx(b[static_cast<std::size_t>(i)]).margin(1e-14));
        }
    }
}

TEST_CASE("GHZ-W merge branches live in the numeric spectra", "[closedform]") {
    RngStream rng(317, 0);
    for (int rep = 0; rep < 25; ++rep) {
        const UnitaryParams p = random_params(rng);
        const StateVector merged = apply_two_qubit(tensor(ghz(), w()), u_d(p), 2, 3);
        const auto eigs = ghzw_eigs(p);
        // Untouched W-side qubits keep their (2/3, 1/3) marginal.
        CHECK(eigs.lambda1_5 == Catch::Approx(2.0 / 3.0).margin(0.0));
        CHECK(top_eig(merged, {4}) == Catch::Approx(2.0 / 3.0).margin(1e-12));
        CHECK(top_eig(merged, {5}) == Catch::Approx(2.0 / 3.0).margin(1e-12));
        // Branch membership in the corresponding three-qubit spectra.
        auto contains = [](const std::vector<double>& spec, double v) {
            for (double x : spec)
                if (std::abs(x - v) < 1e-11) return true;
            return false;
        };
        CHECK(contains(eigvals_hermitian(reduced_density(merged, {0, 1, 2})), eigs.lambda3_123));
        CHECK(contains(eigvals_hermitian(reduced_density(merged, {0, 1, 3})), eigs.lambda3_124));
    }
}

TEST_CASE("GHZ-GHZ closed forms agree with the four-party reduction", "[closedform]") {
    // A GHZ unit is a (1/2, 1/2) Schmidt form; the four-party state carries
    // the same two-party spectra as the full six-qubit merge.
    RngStream rng(331, 0);
    const SchmidtPair half(0.5, 0.5);
    auto contains = [](const std::vector<double>& spec, double v) {
        for (double x : spec)
            if (std::abs(x - v) < 1e-11) return true;
        return false;
    };
    for (int rep = 0; rep < 10; ++rep) {
        const UnitaryParams p = random_params(rng);
        const auto eb = appendix_b_eigs(half, p);
        const StateVector merged = apply_two_qubit(tensor(ghz(), ghz()), u_d(p), 2, 3);
        // The collapse of each untouched half is an isometry, so the
        // four-party branch values reappear in the six-qubit spectra.
        CHECK(contains(eigvals_hermitian(reduced_density(merged, {0, 1, 2})), eb.lambda2_12));
        CHECK(contains(eigvals_hermitian(reduced_density(merged, {0, 1, 3})), eb.lambda2_13));
    }
}
