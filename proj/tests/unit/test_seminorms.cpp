#include <doctest.h>

#include <cmath>
#include <numbers>

#include "frechet_approx/core/errors.hpp"
#include "frechet_approx/core/grid_function.hpp"
#include "frechet_approx/core/numeric.hpp"
#include "frechet_approx/seminorms/gram.hpp"
#include "frechet_approx/seminorms/seminorm_sequence.hpp"
#include "frechet_approx/seminorms/sobolev.hpp"
#include "frechet_approx/seminorms/symbol.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace fapx;
using fapx::testing::Gen;

namespace {

const BoxDomain kCircle = BoxDomain::cube(1, 0.0, 2.0 * kPi);

// sin(nx)/sqrt(pi) as two atoms.
SpectralFunction normalized_sine(int n)
{
    const Complex c = 1.0 / (Complex(0.0, 2.0) * std::sqrt(kPi));
    return SpectralFunction(kCircle, {Atom{c, {double(n)}}, Atom{-c, {-double(n)}}});
}

} // namespace

TEST_SUITE("gram") {
TEST_CASE("single frequency gives the volume")
{
    const GramMatrix g = gram({{1.7}}, BoxDomain::cube(1, 0.0, 1.0));
    CHECK(std::abs(g.entries(0, 0) - Complex(1.0, 0.0)) < 1e-15);
}

TEST_CASE("orthogonal frequencies")
{
    const GramMatrix g = gram({{0.0}, {2.0 * kPi}}, BoxDomain::cube(1, 0.0, 1.0));
    CHECK(std::abs(g.entries(0, 1)) < 1e-15);
    CHECK(std::abs(g.entries(1, 0)) < 1e-15);
}

TEST_CASE("half period off-diagonal matches the hand integral and trapezoid")
{
    const GramMatrix g = gram({{0.0}, {kPi}}, BoxDomain::cube(1, 0.0, 1.0));
    // entries(n, m) = int exp(i (theta_n - theta_m) x): (0, 1) has delta = -pi.
    const Complex hand = (std::polar(1.0, kPi) - 1.0) / Complex(0.0, kPi);
    CHECK(std::abs(hand - Complex(0.0, 2.0 / kPi)) < 1e-15);
    CHECK(std::abs(g.entries(1, 0) - hand) < 1e-14);
    CHECK(std::abs(g.entries(0, 1) - std::conj(hand)) < 1e-14);
    const Complex trap = fapx::testing::trapezoid([](double x) { return std::polar(1.0, kPi * x); }, 0.0, 1.0, 1000000);
    CHECK(std::abs(g.entries(1, 0) - trap) < 1e-9);
}

TEST_CASE("multi-dimensional entries factorize")
{
    const BoxDomain box({0.0, -1.0}, {1.0, 2.0});
    const std::vector<double> delta{0.3, -1.1};
    const Complex expected =
        fapx::testing::trapezoid([](double x) { return std::polar(1.0, 0.3 * x); }, 0.0, 1.0, 200000) *
        fapx::testing::trapezoid([](double y) { return std::polar(1.0, -1.1 * y); }, -1.0, 2.0, 200000);
    CHECK(std::abs(box_exponential_integral(delta, box) - expected) < 1e-9);
}
}

TEST_SUITE("sobolev") {
TEST_CASE("normalized sine values")
{
    for (int n : {1, 2, 3, 7}) {
        const SpectralFunction f = normalized_sine(n);
        CHECK(sobolev_norm(f, 0) == doctest::Approx(1.0).epsilon(1e-13));
        for (int k = 1; k <= 4; ++k)
            CHECK(derivative_norm(f, MultiIndex{k}) == doctest::Approx(std::pow(n, k)).epsilon(1e-12));
    }
    const SpectralFunction f3 = normalized_sine(3);
    CHECK(derivative_norm(f3, MultiIndex{2}) == doctest::Approx(9.0).epsilon(1e-13));
    // H^2 norm squared = 1 + 9 + 81
    CHECK(sobolev_norm(f3, 2) == doctest::Approx(std::sqrt(91.0)).epsilon(1e-13));
    CHECK(sobolev_norm(f3, 1) == doctest::Approx(std::sqrt(10.0)).epsilon(1e-13));
}

TEST_CASE("zero function and order cap")
{
    const SpectralFunction z(kCircle);
    for (int ell = 0; ell <= 12; ++ell)
        CHECK(sobolev_norm(z, ell) == 0.0);
    CHECK_THROWS_AS(sobolev_norm(normalized_sine(1), 13), InputError);
    CHECK_THROWS_AS(sobolev_norm(normalized_sine(1), -1), InputError);
}

TEST_CASE("closed form agrees with a Simpson oracle on non-periodic atoms")
{
    Gen gen;
    const BoxDomain box = BoxDomain::cube(1, -0.5, 1.25);
    for (int trial = 0; trial < 20; ++trial) {
        const SpectralFunction f = gen.atoms(box, 4, 6.0);
        for (int ell = 0; ell <= 3; ++ell) {
            const double oracle = fapx::testing::sobolev_norm_simpson_1d(f, ell, 20000);
            CHECK(sobolev_norm(f, ell) == doctest::Approx(oracle).epsilon(1e-8));
        }
    }
}

TEST_CASE("kernel form")
{
    const std::vector<double> t{2.0, 3.0}, p{1.0, -1.0};
    // products theta_j phi_j = (2, -3); ell = 2: 1 + 2 - 3 + 4 + (-6) + 9 = 7
    CHECK(sobolev_kernel(t, p, 2) == doctest::Approx(7.0));
    CHECK(sobolev_kernel(t, p, 0) == doctest::Approx(1.0));
}

TEST_CASE("inner product is consistent with the norm")
{
    Gen gen;
    const BoxDomain box = BoxDomain::cube(2, 0.0, 1.0);
    const SpectralFunction f = gen.atoms(box, 5, 4.0);
    const Complex self = sobolev_inner(f, f, 2);
    CHECK(std::abs(self.imag()) < 1e-10 * self.real());
    CHECK(std::sqrt(self.real()) == doctest::Approx(sobolev_norm(f, 2)).epsilon(1e-10));
}

TEST_CASE("grid norm examples")
{
    const BoxDomain unit = BoxDomain::cube(1, 0.0, 1.0);
    const std::vector<int> res{16};
    const GridFunction ones = sample(SpectralFunction(unit, {Atom{1.0, {0.0}}}), res);
    CHECK(sobolev_norm_grid(ones, 0).value == doctest::Approx(1.0).epsilon(1e-14));

    const std::vector<int> res256{256};
    const GridNormResult s = sobolev_norm_grid(sample(normalized_sine(3), res256), 1);
    CHECK(std::abs(s.value - std::sqrt(10.0)) < 1e-6);
    CHECK_FALSE(s.under_resolved);

    const GridNormResult z = sobolev_norm_grid(sample(SpectralFunction(kCircle), res256), 3);
    CHECK(z.value == 0.0);
}

TEST_CASE("under-resolved grid is flagged, not rejected")
{
    const std::vector<int> res{16};
    const GridNormResult r = sobolev_norm_grid(sample(normalized_sine(7), res), 1);
    CHECK(r.under_resolved);
}

TEST_CASE("spectral derivative of a periodic atom")
{
    const std::vector<int> res{64};
    const GridFunction g = spectral_derivative(sample(normalized_sine(3), res), MultiIndex{1});
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double x = g.node(k)[0];
        CHECK(std::abs(g[k] - 3.0 * std::cos(3.0 * x) / std::sqrt(kPi)) < 1e-12);
    }
}
}

TEST_SUITE("symbol") {
TEST_CASE("examples")
{
    const BoxDomain unit = BoxDomain::cube(1, 0.0, 1.0);
    const SpectralFunction two(kCircle, {Atom{2.0, {0.0}}});
    CHECK(symbol_seminorm(two, WeightSpec::constant(1.0), kSupNorm, 0) == doctest::Approx(2.0).epsilon(1e-14));

    CHECK(symbol_seminorm(normalized_sine(3), WeightSpec::constant(1.0), 2.0, 1) ==
          doctest::Approx(3.0).epsilon(1e-6));

    const SpectralFunction one(unit, {Atom{1.0, {0.0}}});
    CHECK(symbol_seminorm(one, WeightSpec::exponential(1.0, 1.0), kSupNorm, 0) ==
          doctest::Approx(std::numbers::e).epsilon(1e-14));
}

TEST_CASE("unsupported exponent")
{
    const SpectralFunction one(kCircle, {Atom{1.0, {0.0}}});
    CHECK_THROWS_AS(symbol_seminorm(one, WeightSpec::constant(1.0), 3.0, 0), InputError);
}

TEST_CASE("grid and spectral inputs agree")
{
    const std::vector<int> res{256};
    const SpectralFunction f = normalized_sine(2);
    const WeightSpec w = WeightSpec::bracket_power(1.0);
    CHECK(symbol_seminorm(sample(f, res), w, 2.0, 2) ==
          doctest::Approx(symbol_seminorm(f, w, 2.0, 2)).epsilon(1e-3));
}

TEST_CASE("weight json round trip")
{
    const WeightSpec w = WeightSpec::exponential(2.0, 0.5);
    nlohmann::ordered_json j = w;
    const WeightSpec back = weight_from_json(j);
    CHECK(back.kind == w.kind);
    CHECK(back.c == w.c);
    CHECK(back.beta == w.beta);
}
}

TEST_SUITE("seminorm_sequence") {
TEST_CASE("sobolev ladder evaluates through the cap")
{
    const SeminormSequence seq = SeminormSequence::sobolev_ladder(kCircle);
    CHECK(seq.max_index() == 12);
    const std::vector<double> v = seq.evaluate_through(normalized_sine(3), 2);
    REQUIRE(v.size() == 3);
    CHECK(v[0] == doctest::Approx(1.0));
    CHECK(v[1] == doctest::Approx(std::sqrt(10.0)));
    CHECK(v[2] == doctest::Approx(std::sqrt(91.0)));
    CHECK_THROWS_AS(seq.evaluate(normalized_sine(1), 13), InputError);
}

TEST_CASE("custom sequence past its end is an error")
{
    const SeminormSequence seq = SeminormSequence::custom(kCircle, {[](const SpectralFunction&) { return 1.0; }});
    CHECK(seq.evaluate(SpectralFunction(kCircle), 0) == 1.0);
    CHECK_THROWS_AS(seq.evaluate(SpectralFunction(kCircle), 1), InputError);
}
}
