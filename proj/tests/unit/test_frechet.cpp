#include <doctest.h>

#include <cmath>
#include <limits>

#include "frechet_approx/core/errors.hpp"
#include "frechet_approx/core/numeric.hpp"
#include "frechet_approx/frechet/frechet.hpp"
#include "frechet_approx/seminorms/sobolev.hpp"

using namespace fapx;

namespace {

const BoxDomain kCircle = BoxDomain::cube(1, 0.0, 2.0 * kPi);

SeminormSequence constant_stub(int levels, double value)
{
    std::vector<SeminormFn> fns(levels, [value](const SpectralFunction&) { return value; });
    return SeminormSequence::custom(kCircle, fns);
}

} // namespace

TEST_SUITE("frechet") {
TEST_CASE("identical arguments give zero plus the tail")
{
    const FrechetMetric metric(SeminormSequence::sobolev_ladder(kCircle), 10);
    const SpectralFunction f(kCircle, {Atom{1.0, {2.0}}, Atom{Complex(0.0, 0.5), {-1.0}}});
    const DistanceResult d = frechet_distance(f, f, metric);
    CHECK(d.value == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(d.tail_bound == std::ldexp(1.0, -10));
}

TEST_CASE("unit seminorm stub sums the geometric series")
{
    const FrechetMetric metric(constant_stub(11, 1.0), 10);
    const SpectralFunction z(kCircle);
    const DistanceResult d = frechet_distance(z, z, metric);
    CHECK(d.value == doctest::Approx((2.0 - std::ldexp(1.0, -10)) / 2.0).epsilon(1e-15));
    CHECK(d.tail_bound == doctest::Approx(9.765625e-4));
}

TEST_CASE("series with infinite entries")
{
    const std::vector<double> p{0.0, std::numeric_limits<double>::infinity()};
    const DistanceResult d = frechet_series(p);
    CHECK(d.value == doctest::Approx(0.5));
    CHECK(d.tail_bound == doctest::Approx(0.5));
}

TEST_CASE("domain mismatch")
{
    const FrechetMetric metric(SeminormSequence::sobolev_ladder(kCircle), 4);
    const SpectralFunction f(kCircle);
    const SpectralFunction g(BoxDomain::cube(1, 0.0, 1.0));
    CHECK_THROWS_AS(frechet_distance(f, g, metric), InputError);
}

TEST_CASE("best error")
{
    const FrechetMetric metric(SeminormSequence::sobolev_ladder(kCircle), 10);
    const double unit = 1.0 / std::sqrt(2.0 * kPi);
    const SpectralFunction target(kCircle, {Atom{unit, {1.0}}});
    const SpectralFunction zero(kCircle);
    const SpectralFunction other(kCircle, {Atom{unit, {2.0}}});

    const std::vector<SpectralFunction> with_target{other, target, zero};
    const BestError hit = best_error(target, with_target, metric, 2);
    CHECK(hit.index == 1);
    CHECK(hit.best.value == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(hit.all.size() == 3);

    const std::vector<SpectralFunction> only_zero{zero};
    double expected = 0.0;
    for (int ell = 0; ell <= 10; ++ell) {
        const double p = sobolev_norm(target, ell);
        expected += std::ldexp(1.0, -ell) * p / (1.0 + p);
    }
    CHECK(sobolev_norm(target, 0) == doctest::Approx(1.0));
    CHECK(best_error(target, only_zero, metric).best.value == doctest::Approx(expected).epsilon(1e-13));

    CHECK_THROWS_AS(best_error(target, std::vector<SpectralFunction>{}, metric), InputError);
}

TEST_CASE("truncated upper bound")
{
    for (int ell = 0; ell < 6; ++ell)
        CHECK(truncated_upper_bound(0.0, 3.0, ell) == std::ldexp(1.0, -ell));
    CHECK(truncated_upper_bound(std::numeric_limits<double>::infinity(), 1.0, 0) == doctest::Approx(2.0));
    CHECK(truncated_upper_bound(1.0, 1.0, 2) == doctest::Approx(1.125));
    CHECK_THROWS_AS(truncated_upper_bound(-1.0, 1.0, 2), InputError);
    CHECK_THROWS_AS(truncated_upper_bound(1.0, -1.0, 2), InputError);
}

TEST_CASE("truncation level from tolerance")
{
    CHECK(default_truncation_level(0.25) == 4);
    CHECK(default_truncation_level(1e-3) == 12);
}
}
