#include <doctest.h>

#include <cmath>

#include "frechet_approx/barron/bounds.hpp"
#include "frechet_approx/barron/fourier_profile.hpp"
#include "frechet_approx/checks/gevrey.hpp"
#include "frechet_approx/checks/inclusion.hpp"
#include "frechet_approx/core/numeric.hpp"

using namespace fapx;

TEST_SUITE("inclusion") {
TEST_CASE("gaussian with sub-linear weight is finite for every h")
{
    const FourierProfile g = FourierProfile::gaussian(1, 1.0);
    const InclusionReport rep = gs_to_barron_check(&g, 0.5, {0.5, 1.0, 2.0});
    REQUIRE(rep.entries.size() == 3);
    for (const InclusionEntry& e : rep.entries) {
        CHECK(e.finite);
        CHECK(std::isfinite(e.norm));
        CHECK(e.norm > 0.0);
        REQUIRE(e.analytic.has_value());
        CHECK(*e.analytic);
    }
    CHECK(rep.entries[0].norm < rep.entries[1].norm);
    CHECK(rep.entries[1].norm < rep.entries[2].norm);
    CHECK(rep.monotone);
    CHECK(rep.agrees_with_analytic);
}

TEST_CASE("gaussian against a quadratic weight diverges")
{
    const FourierProfile g = FourierProfile::gaussian(1, 1.0);
    const InclusionReport rep = gs_to_barron_check(&g, 2.0, {1.0});
    REQUIRE(rep.entries.size() == 1);
    CHECK_FALSE(rep.entries[0].finite);
    CHECK(rep.entries[0].analytic == false);
    CHECK(rep.agrees_with_analytic);
}

TEST_CASE("quadratic weight is finite below the gaussian rate")
{
    // fhat ~ exp(-xi^2 / 4): finite iff h < 1/4.
    const FourierProfile g = FourierProfile::gaussian(1, 1.0);
    const InclusionReport rep = gs_to_barron_check(&g, 2.0, {0.0, 0.1, 0.2, 0.5});
    CHECK(rep.entries[0].finite);
    CHECK(rep.entries[1].finite);
    CHECK(rep.entries[2].finite);
    CHECK_FALSE(rep.entries[3].finite);
    CHECK(rep.monotone);
    CHECK(rep.agrees_with_analytic);
    // Closed form at h = 0.1: (1/sqrt 2) sqrt(pi / 0.15)
    CHECK(rep.entries[1].norm == doctest::Approx(std::sqrt(kPi / 0.15) / std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("zero function is finite everywhere")
{
    const InclusionReport rep = gs_to_barron_check(nullptr, 0.5, {0.5, 1.0, 2.0});
    for (const InclusionEntry& e : rep.entries) {
        CHECK(e.finite);
        CHECK(e.norm == 0.0);
    }
}

TEST_CASE("reports are deterministic and serializable")
{
    const FourierProfile g = FourierProfile::gaussian(1, 1.0);
    nlohmann::ordered_json a = gs_to_barron_check(&g, 0.5, {1.0});
    nlohmann::ordered_json b = gs_to_barron_check(&g, 0.5, {1.0});
    CHECK(a.dump() == b.dump());
    CHECK_FALSE(to_text(gs_to_barron_check(&g, 0.5, {1.0})).empty());
}
}

TEST_SUITE("gevrey") {
TEST_CASE("explicit hermite derivatives of the gaussian")
{
    // d^n e^{-x^2} = (-1)^n H_n(x) e^{-x^2}
    const FourierProfile g = FourierProfile::gaussian(1, 1.0);
    auto hermite = [](int n, double x) {
        switch (n) {
        case 0: return 1.0;
        case 1: return 2 * x;
        case 2: return 4 * x * x - 2;
        case 3: return 8 * x * x * x - 12 * x;
        case 4: return 16 * std::pow(x, 4) - 48 * x * x + 12;
        default: return 32 * std::pow(x, 5) - 160 * std::pow(x, 3) + 120 * x;
        }
    };
    for (int n = 0; n <= 5; ++n) {
        for (double x : {-1.7, -0.3, 0.0, 0.8, 2.2}) {
            const double expected = (n % 2 ? -1.0 : 1.0) * hermite(n, x) * std::exp(-x * x);
            const std::vector<double> pt{x};
            CHECK(g.spatial_derivative(pt, MultiIndex{n}).real() == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("one-dimensional demo")
{
    const GevreyReport rep = gevrey_gaussian_demo({1.0}, 8);
    CHECK(rep.all_within);
    REQUIRE(rep.rows.size() == 9);
    CHECK(rep.rows[0].max_ratio <= 1.0);
    CHECK(rep.rows[0].max_ratio == doctest::Approx(1.0 / (kCharlierConstant * std::exp(0.5))));
    for (const GevreyRow& row : rep.rows)
        CHECK(row.max_ratio <= 1.0);
}

TEST_CASE("two-dimensional demo")
{
    const GevreyReport rep = gevrey_gaussian_demo({1.0, 1.0}, 4, 401);
    CHECK(rep.all_within);
    CHECK(rep.rows.size() == 15);
    const std::string text = to_text(rep);
    CHECK(text.find("bump") != std::string::npos);
}
}
