#include <algorithm>
#include <cmath>

#include "braidqi/kaon.hpp"
#include "doctest.h"

using namespace braidqi;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("flavor-basis entangled states have the documented sign pattern") {
    const auto st = kaon_bell_states();
    CHECK(std::abs(st[0].amp[0] - kInvSqrt2) < 1e-15);  // (|KK> + |KbKb>)/sqrt2
    CHECK(std::abs(st[0].amp[3] - kInvSqrt2) < 1e-15);
    CHECK(std::abs(st[1].amp[3] + kInvSqrt2) < 1e-15);  // (|KK> - |KbKb>)/sqrt2
    CHECK(std::abs(st[2].amp[1] - kInvSqrt2) < 1e-15);  // (|KKb> + |KbK>)/sqrt2
    CHECK(std::abs(st[2].amp[2] - kInvSqrt2) < 1e-15);
    CHECK(std::abs(st[3].amp[2] + kInvSqrt2) < 1e-15);  // (|KKb> - |KbK>)/sqrt2
    for (const TwoQubitState& s : st) CHECK(std::abs(entanglement_entropy(s) - 1.0) < 1e-12);
}

TEST_CASE("mixture parameter t saturates at one half") {
    CHECK(mixture_t({cxd{0.0, 0.0}, 0.0}) == 0.0);
    CHECK(mixture_t({cxd{1.0, 0.0}, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mixture_t({cxd{0.0, -1.0}, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mixture_t({cxd{0.5, 0.0}, 0.0}) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(mixture_t({cxd{2.0, 0.0}, 0.0}) == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("mixture density matches the closed diagonal forms at the edges") {
    const MixtureDensity pure = rho_mixture({cxd{0.0, 0.0}, 1.0});
    CHECK(std::abs(pure.rho.at(1, 1) - cxd{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(pure.rho.at(0, 0)) < 1e-15);
    CHECK(std::abs(pure.rho.at(2, 2)) < 1e-15);
    CHECK(std::abs(pure.rho.at(3, 3)) < 1e-15);
    CHECK(pure.physical);

    const MixtureDensity even = rho_mixture({cxd{0.0, 0.0}, 0.0});
    CHECK(std::abs(even.rho.at(0, 0) - cxd{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(even.rho.at(3, 3) - cxd{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(even.rho.at(1, 1)) < 1e-15);
    CHECK(even.physical);
}

TEST_CASE("mixture density is a valid state across the parameter square") {
    for (const double lam : {0.0, 0.3, 0.5, 0.8, 1.0}) {
        for (const double eps : {0.0, 0.5, 1.0, 2.0}) {
            const MixtureDensity md = rho_mixture({cxd{eps, 0.0}, lam});
            CHECK(md.physical);
            double sum = 0.0;
            for (const double v : md.eigenvalues) sum += v;
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS((void)rho_mixture({cxd{0.0, 0.0}, 1.5}), std::invalid_argument);
    CHECK_THROWS_AS((void)rho_mixture({cxd{0.0, 0.0}, -0.1}), std::invalid_argument);
}

TEST_CASE("violation functional equals one exactly for the pure unmixed case") {
    CHECK(horodecki_M({cxd{0.0, 0.0}, 1.0}) == 1.0);
    // At lambda = 1, |eps| = 1: M = max{4 t^2, 8 t^2} = 2 with t = 1/2.
    CHECK(horodecki_M({cxd{1.0, 0.0}, 1.0}) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(horodecki_M({cxd{0.0, 0.0}, 0.5}) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("derived violation threshold disagrees with the displayed closed form") {
    // |eps| = 1 => t = 1/2: displayed 1/(2(1-t)) = 1, derived 1/sqrt(2).
    const ViolationThreshold at_one = violation_threshold(cxd{1.0, 0.0});
    CHECK(at_one.verbatim_lambda == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(at_one.derived_lambda == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));

    // t = 0.4 (|eps| in {1/2, 2}): displayed 1/(2*0.6) = 0.8333...,
    // derived min(1/(1+t^2), 1/(2 sqrt2 t)) = 1/1.16.
    for (const double eps : {0.5, 2.0}) {
        const ViolationThreshold vt = violation_threshold(cxd{eps, 0.0});
        CHECK(vt.verbatim_lambda == doctest::Approx(1.0 / 1.2).epsilon(1e-14));
        CHECK(vt.derived_lambda == doctest::Approx(1.0 / 1.16).epsilon(1e-8));
    }

    // eps = 0: no violation at any mixing fraction, so the derived value is 1.
    const ViolationThreshold vt0 = violation_threshold(cxd{0.0, 0.0});
    CHECK(vt0.verbatim_lambda == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(vt0.derived_lambda == 1.0);
}

TEST_CASE("threshold marks the onset of violation of the functional") {
    const cxd eps{1.0, 0.0};
    const ViolationThreshold vt = violation_threshold(eps);
    const double below = vt.derived_lambda - 1e-6;
    const double above = vt.derived_lambda + 1e-6;
    CHECK(horodecki_M({eps, below}) <= 1.0);
    CHECK(horodecki_M({eps, above}) > 1.0);
}

TEST_CASE("mixing fraction from the decay ratio matches the printed number") {
    CHECK(lambda_from_eta(2.27e-3) == doctest::Approx(0.99546).epsilon(5e-5));
    CHECK(lambda_from_eta(0.0) == 1.0);
    CHECK(lambda_from_eta(0.5) == 0.0);
    CHECK_THROWS_AS((void)lambda_from_eta(-0.1), std::invalid_argument);
    CHECK_THROWS_AS((void)lambda_from_eta(0.6), std::invalid_argument);
}

TEST_CASE("composite and single entropies reach the anchor values") {
    CHECK(std::abs(entropy_pair({1.0, 1.0})) < 1e-12);
    CHECK(entropy_pair({1.0, 0.0}) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
    CHECK(entropy_single({1.0, 0.5}) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    // The repaired coefficient agrees at alpha = 1 because the third term drops.
    CHECK(entropy_pair_corrected({1.0, 0.0}) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
    CHECK(std::abs(entropy_pair_corrected({1.0, 1.0})) < 1e-12);
}

TEST_CASE("displayed and repaired composite entropies differ away from the pure case") {
    const ContaminatedSource src{0.8, 0.5};
    const double verbatim = entropy_pair(src);
    const double corrected = entropy_pair_corrected(src);
    CHECK(verbatim == doctest::Approx(1.5166662819468248).epsilon(1e-12));
    CHECK(corrected == doctest::Approx(1.6364955728889845).epsilon(1e-12));
    CHECK(std::abs(verbatim - corrected) > 0.1);
}

TEST_CASE("assembled source operator reproduces the repaired entropy exactly") {
    for (const double alpha : {0.3, 0.8}) {
        for (const double v : {0.25, 0.5, 1.0}) {
            const SourceAssembly sa = contaminated_source({alpha, v});
            CHECK(sa.assembled_check.valid);
            CHECK(std::abs(sa.entropy_direct - sa.entropy_formula_corrected) < 1e-12);
        }
    }
}

TEST_CASE("assembled source spectrum is the predicted weight multiset") {
    const SourceAssembly sa = contaminated_source({0.8, 0.5});
    REQUIRE(sa.assembled_eigenvalues.size() == 8);
    std::vector<double> expected = {0.05, 0.05, 0.05, 0.05, 0.1, 0.1, 0.1, 0.5};
    std::vector<double> got = sa.assembled_eigenvalues;
    std::sort(got.begin(), got.end());
    for (size_t i = 0; i < expected.size(); ++i)
        CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("displayed fully random block is not positive semidefinite") {
    const SourceAssembly sa = contaminated_source({0.5, 0.5});
    REQUIRE(!sa.rho_r_eigenvalues.empty());
    CHECK(!sa.rho_r_physical);
    CHECK(sa.rho_r_eigenvalues.front() == doctest::Approx(-0.5).epsilon(1e-12));
    // Corrected block is exactly I/4.
    CHECK(frobenius_distance(sa.rho_r_corrected, scale(0.25, ComplexMatrix::identity(4))) == 0.0);
    // The displayed single-particle term evaluates to the zero operator.
    CHECK(sa.verbatim_single_block_trace == 0.0);
    CHECK(sa.verbatim_trace_deficit == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("entropy crossing exists for the repaired formula but not the displayed one at v = 1") {
    const EntanglementBoundary eb = entanglement_boundary(1.0);
    CHECK(!eb.verbatim_found);
    CHECK(eb.corrected_found);
    CHECK(eb.alpha_star_corrected == doctest::Approx(0.62986938371398882).epsilon(1e-8));
    CHECK(eb.criterion_alpha == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(eb.quoted_alpha == doctest::Approx(0.71033).epsilon(1e-14));
    // The crossing point actually equalizes the two entropies.
    const double s_pair = entropy_pair_corrected({eb.alpha_star_corrected, 1.0});
    const double s_single = entropy_single({eb.alpha_star_corrected, 1.0});
    CHECK(std::abs(s_pair - s_single) < 1e-8);
}

TEST_CASE("entropy crossings at lower purity match the pinned roots") {
    const EntanglementBoundary eb09 = entanglement_boundary(0.9);
    CHECK(eb09.corrected_found);
    CHECK(eb09.alpha_star_corrected == doctest::Approx(0.8279612365829266).epsilon(1e-8));

    const EntanglementBoundary eb075 = entanglement_boundary(0.75);
    CHECK(eb075.verbatim_found);
    CHECK(eb075.alpha_star_verbatim == doctest::Approx(0.9989248107327506).epsilon(1e-7));
    CHECK(eb075.corrected_found);
    CHECK(eb075.alpha_star_corrected == doctest::Approx(0.9989273327488142).epsilon(1e-7));
}
