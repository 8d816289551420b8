#include <doctest.h>

#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

#include "frechet_approx/barron/barron_norm.hpp"
#include "frechet_approx/barron/fourier_profile.hpp"
#include "frechet_approx/core/grid_function.hpp"
#include "frechet_approx/core/numeric.hpp"
#include "frechet_approx/fit/bandlimited.hpp"
#include "frechet_approx/fit/cosine.hpp"
#include "frechet_approx/frechet/frechet.hpp"
#include "frechet_approx/seminorms/gram.hpp"
#include "frechet_approx/seminorms/sobolev.hpp"
#include "frechet_approx/seminorms/symbol.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace fapx;
using fapx::testing::Gen;

namespace {

constexpr int kCases = 200;

SpectralFunction scaled(const SpectralFunction& f, Complex lambda)
{
    std::vector<Atom> atoms(f.atoms().begin(), f.atoms().end());
    for (Atom& a : atoms)
        a.amplitude *= lambda;
    return SpectralFunction(f.domain(), std::move(atoms));
}

} // namespace

TEST_CASE("frechet metric axioms")
{
    Gen gen;
    for (int i = 0; i < kCases; ++i) {
        const BoxDomain box = gen.box(static_cast<std::size_t>(gen.integer(1, 2)));
        const FrechetMetric metric(SeminormSequence::sobolev_ladder(box), gen.integer(2, 8));
        const SpectralFunction f = gen.atoms(box, 3, 5.0);
        const SpectralFunction g = gen.atoms(box, 3, 5.0);
        const SpectralFunction h = gen.atoms(box, 3, 5.0);
        const double fg = frechet_distance(f, g, metric).value;
        const double gf = frechet_distance(g, f, metric).value;
        const double gh = frechet_distance(g, h, metric).value;
        const double fh = frechet_distance(f, h, metric).value;
        CHECK(frechet_distance(f, f, metric).value <= 1e-12);
        CHECK(fg >= 0.0);
        CHECK(fg < 2.0);
        CHECK(std::abs(fg - gf) <= 1e-12 * (1.0 + fg));
        CHECK(fh <= fg + gh + 1e-12);
    }
}

TEST_CASE("sobolev seminorm axioms")
{
    Gen gen;
    for (int i = 0; i < kCases; ++i) {
        const BoxDomain box = gen.box(static_cast<std::size_t>(gen.integer(1, 2)));
        const int ell = gen.integer(0, 4);
        const SpectralFunction f = gen.atoms(box, 4, 6.0);
        const SpectralFunction g = gen.atoms(box, 4, 6.0);
        const Complex lambda = gen.complex(3.0);
        const double pf = sobolev_norm(f, ell);
        CHECK(pf >= 0.0);
        CHECK(sobolev_norm(scaled(f, lambda), ell) == doctest::Approx(std::abs(lambda) * pf).epsilon(1e-10));
        CHECK(sobolev_norm(f + g, ell) <= pf + sobolev_norm(g, ell) + 1e-12);
        // The ladder is non-decreasing in the order.
        CHECK(sobolev_norm(f, ell + 1) >= pf * (1.0 - 1e-12));
    }
}

TEST_CASE("symbol seminorm axioms")
{
    Gen gen;
    const BoxDomain box = BoxDomain::cube(1, -1.0, 1.0);
    for (int i = 0; i < kCases; ++i) {
        const SpectralFunction f = gen.atoms(box, 3, 4.0);
        const SpectralFunction g = gen.atoms(box, 3, 4.0);
        const double p = (i % 3 == 0) ? 1.0 : (i % 3 == 1 ? 2.0 : kSupNorm);
        const WeightSpec w = WeightSpec::exponential(gen.uniform(0.0, 1.0), 0.5);
        const int ell = gen.integer(0, 2);
        const SymbolQuadrature q{257};
        const double pf = symbol_seminorm(f, w, p, ell, q);
        const Complex lambda = gen.complex(2.0);
        CHECK(symbol_seminorm(scaled(f, lambda), w, p, ell, q) == doctest::Approx(std::abs(lambda) * pf).epsilon(1e-10));
        CHECK(symbol_seminorm(f + g, w, p, ell, q) <= pf + symbol_seminorm(g, w, p, ell, q) + 1e-12);
    }
}

TEST_CASE("gram matrices are hermitian positive semidefinite")
{
    Gen gen;
    for (int i = 0; i < kCases; ++i) {
        const BoxDomain box = gen.box(static_cast<std::size_t>(gen.integer(1, 3)));
        const int n = gen.integer(1, 8);
        std::vector<std::vector<double>> freqs;
        for (int k = 0; k < n; ++k) {
            std::vector<double> t(box.dim());
            for (double& v : t)
                v = gen.uniform(-10.0, 10.0);
            freqs.push_back(t);
        }
        const GramMatrix G = gram(freqs, box);
        CHECK((G.entries - G.entries.adjoint()).norm() <= 1e-14 * G.entries.norm());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(G.entries);
        CHECK(eig.eigenvalues().minCoeff() >= -1e-12 * box.volume() * n);
        for (int k = 0; k < n; ++k)
            CHECK(std::abs(G.entries(k, k) - box.volume()) <= 1e-13 * box.volume());
    }
}

TEST_CASE("cosine greedy residuals are non-increasing")
{
    Gen gen;
    CosineFitConfig cfg;
    cfg.theta_max = 16.0 * kPi;
    cfg.polish_sweeps = 2;
    for (int i = 0; i < kCases; ++i) {
        const BoxDomain box = BoxDomain::cube(1, 0.0, gen.uniform(0.5, 2.0));
        const SpectralFunction target = gen.atoms(box, 5, 30.0);
        cfg.order = gen.integer(0, 2);
        const auto [net, rep] = fit_cosine(target, gen.integer(1, 4), std::numeric_limits<double>::infinity(), cfg);
        const double start = sobolev_norm(target, cfg.order);
        double previous = start;
        for (double r : rep.residuals) {
            CHECK(r <= previous * (1.0 + 1e-12));
            previous = r;
        }
        CHECK(rep.final_error <= start * (1.0 + 1e-12));
        CHECK(net.network.size() <= rep.residuals.size());
    }
}

TEST_CASE("bandlimited pursuit: monotone residuals and discrete parseval")
{
    Gen gen;
    BandlimitedFitConfig cfg;
    cfg.w_points = 17;
    cfg.b_points = 17;
    for (int i = 0; i < kCases; ++i) {
        const double omega = gen.uniform(1.0, 4.0);
        const int points = 16 * gen.integer(1, 4);
        std::vector<Complex> samples(points);
        // Smooth random profile: a few random dictionary-like bumps.
        const int bumps = gen.integer(1, 3);
        std::vector<std::pair<double, double>> wb;
        std::vector<Complex> amps;
        for (int k = 0; k < bumps; ++k) {
            wb.emplace_back(gen.uniform(-4.0, 4.0), gen.uniform(-4.0, 4.0));
            amps.push_back(gen.complex());
        }
        const double h = 2.0 * omega / points;
        for (int k = 0; k < points; ++k) {
            const double xi = -omega + (k + 0.5) * h;
            for (int b = 0; b < bumps; ++b)
                samples[k] += amps[b] / (1.0 + std::pow(wb[b].first * xi + wb[b].second, 2));
        }
        const BandlimitedTarget target(1, omega, points, samples);
        const BandlimitedFit fit = fit_bandlimited(target, gen.integer(1, 5), cfg);
        double previous = target.l2_norm(target.samples());
        for (double r : fit.report.residuals) {
            CHECK(r <= previous * (1.0 + 1e-12));
            previous = r;
        }
        CHECK(fit.report.parseval_relative_gap <= 1e-6);
        // Parseval for the raw target as well.
        const double freq = target.l2_norm(target.samples());
        CHECK(spatial_l2_norm(target, target.samples()) == doctest::Approx(freq).epsilon(1e-6));
    }
}

TEST_CASE("closed-form sobolev norms agree with quadrature")
{
    Gen gen;
    for (int i = 0; i < kCases; ++i) {
        const BoxDomain box = BoxDomain::cube(1, gen.uniform(-1.0, 0.0), gen.uniform(0.5, 1.5));
        const SpectralFunction f = gen.atoms(box, 3, 8.0);
        const int ell = gen.integer(0, 2);
        const double oracle = fapx::testing::sobolev_norm_simpson_1d(f, ell, 4000);
        CHECK(sobolev_norm(f, ell) == doctest::Approx(oracle).epsilon(1e-6));
    }
}

TEST_CASE("closed-form box integrals agree with quadrature")
{
    Gen gen;
    for (int i = 0; i < kCases; ++i) {
        const BoxDomain box = BoxDomain::cube(1, gen.uniform(-2.0, 0.0), gen.uniform(0.5, 2.0));
        const std::vector<double> delta{gen.uniform(-20.0, 20.0)};
        const Complex oracle = fapx::testing::trapezoid([&](double x) { return std::polar(1.0, delta[0] * x); },
                                                        box.lower(0), box.upper(0), 20000);
        CHECK(std::abs(box_exponential_integral(delta, box) - oracle) <= 1e-6 * box.volume());
    }
}

TEST_CASE("closed-form barron norms agree with quadrature")
{
    Gen gen;
    for (int i = 0; i < kCases; ++i) {
        const double a = gen.uniform(0.2, 3.0);
        const BarronWeight w{gen.uniform(0.2, 1.0), gen.uniform(0.0, 1.5)};
        const FourierProfile g = FourierProfile::gaussian(1, a, gen.complex(2.0));
        const double value = barron_norm(g, w);
        // Even integrand: twice a trapezoid over [0, L], with a fine panel near
        // the origin where |xi|^beta has a kink.
        const double L = 2.0 * std::sqrt(4.0 * a * 45.0) + 20.0;
        auto integrand = [&](double xi) { return Complex(w(xi) * g.radial_abs(xi)); };
        const double oracle = 2.0 * (fapx::testing::trapezoid(integrand, 0.0, 1.0, 1000000) +
                                     fapx::testing::trapezoid(integrand, 1.0, L, 200000))
                                        .real();
        CHECK(value == doctest::Approx(oracle).epsilon(1e-6));
    }
}

TEST_CASE("sampling reproduces evaluation")
{
    Gen gen;
    for (int i = 0; i < kCases; ++i) {
        const BoxDomain box = gen.box(static_cast<std::size_t>(gen.integer(1, 2)));
        const SpectralFunction f = gen.atoms(box, 4, 10.0);
        std::vector<int> res(box.dim());
        for (int& r : res)
            r = gen.integer(2, 12);
        const GridFunction g = sample(f, res);
        const std::size_t k = static_cast<std::size_t>(gen.integer(0, static_cast<int>(g.size()) - 1));
        CHECK(std::abs(g[k] - f.evaluate(g.node(k))) <= 1e-13 * (1.0 + f.l1_amplitude()));
    }
}
