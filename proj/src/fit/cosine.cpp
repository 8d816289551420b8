#include "frechet_approx/fit/cosine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <mutex>
#include <vector>

#include <Eigen/Eigenvalues>

#include "frechet_approx/core/errors.hpp"
#include "frechet_approx/core/parallel.hpp"
#include "frechet_approx/seminorms/gram.hpp"
#include "frechet_approx/seminorms/sobolev.hpp"

namespace fapx {
namespace {

using LComplex = std::complex<long double>;
using Theta = std::vector<double>;

// <e_phi, e_theta>_{H^ell(U)} = K_ell(phi, theta) \int_U exp(i (phi - theta) . x) dx
LComplex atom_inner(const Theta& phi, const Theta& theta, int ell, const BoxDomain& domain)
{
    return sobolev_kernel(phi, theta, ell) * box_exponential_integral_ld(phi, theta, domain);
}

class TargetOracle {
public:
    virtual ~TargetOracle() = default;
    virtual const BoxDomain& domain() const = 0;
    /// <t, e_theta>_H
    virtual LComplex inner(const Theta& theta) const = 0;
    /// ||t - sum c_n e_{theta_n}||_H
    virtual double residual_norm(const std::vector<Theta>& thetas, const std::vector<Complex>& coeffs) const = 0;
    /// <e_phi, e_theta>_H in the inner product the target is measured in.
    virtual LComplex atom_inner(const Theta& phi, const Theta& theta, int ell) const
    {
        return fapx::atom_inner(phi, theta, ell, domain());
    }
    /// Largest |theta_j| the target can resolve on axis j.
    virtual double frequency_limit(std::size_t) const { return std::numeric_limits<double>::infinity(); }
};

class SpectralOracle final : public TargetOracle {
public:
    SpectralOracle(const SpectralFunction& t, int ell) : target_(t.canonicalize()), ell_(ell) {}
    const BoxDomain& domain() const override { return target_.domain(); }
    LComplex inner(const Theta& theta) const override
    {
        LComplex sum = 0.0L;
        for (const Atom& a : target_.atoms())
            sum += LComplex(a.amplitude) * fapx::atom_inner(a.frequency, theta, ell_, domain());
        return sum;
    }
    double residual_norm(const std::vector<Theta>& thetas, const std::vector<Complex>& coeffs) const override
    {
        std::vector<Atom> atoms;
        for (std::size_t n = 0; n < thetas.size(); ++n)
            atoms.push_back(Atom{-coeffs[n], thetas[n]});
        return sobolev_norm(target_ + SpectralFunction(domain(), std::move(atoms)), ell_);
    }

private:
    SpectralFunction target_;
    int ell_;
};

class GridOracle final : public TargetOracle {
public:
    GridOracle(const GridFunction& t, int ell) : domain_(t.domain()), alphas_(multi_indices_up_to(t.dim(), ell))
    {
        // Frequencies beyond the sampling Nyquist band alias onto lower ones.
        for (std::size_t j = 0; j < t.dim(); ++j)
            limit_.push_back(kPi * (t.resolution()[j] - 1) / domain_.side(j));
        res_ = t.resolution();
        nodes_.reserve(t.size());
        for (std::size_t i = 0; i < t.size(); ++i)
            nodes_.push_back(t.node(i));
        cell_ = t.cell_volume();
        for (const MultiIndex& a : alphas_) {
            GridFunction g = spectral_derivative(t, a);
            derivs_.emplace_back(g.samples().begin(), g.samples().end());
        }
    }
    const BoxDomain& domain() const override { return domain_; }
    double frequency_limit(std::size_t j) const override { return limit_[j]; }
    // Periodic trapezoid rule applied to e_phi conj(e_theta): a product of
    // geometric sums over the nodes a_j + k h_j, k < n_j.
    LComplex atom_inner(const Theta& phi, const Theta& theta, int ell) const override
    {
        LComplex prod = sobolev_kernel(phi, theta, ell);
        for (std::size_t j = 0; j < phi.size(); ++j) {
            const long double delta = static_cast<long double>(phi[j]) - theta[j];
            const long double h = domain_.side(j) / res_[j];
            const long double z = delta * h;
            const LComplex start = std::polar(1.0L, delta * domain_.lower(j));
            LComplex sum;
            if (std::abs(std::remainder(z, 2.0L * kPi)) < 1e-9L) {
                // Near a multiple of 2 pi every term has the same phase up to O(z - 2 pi m).
                sum = 0.0L;
                for (int k = 0; k < res_[j]; ++k)
                    sum += std::polar(1.0L, delta * k * h);
            } else {
                sum = (1.0L - std::polar(1.0L, z * res_[j])) / (1.0L - std::polar(1.0L, z));
            }
            prod *= start * sum * h;
        }
        return prod;
    }
    LComplex inner(const Theta& theta) const override
    {
        std::vector<Complex> w;
        for (const MultiIndex& a : alphas_)
            w.push_back(std::conj(derivative_factor(theta, a)));
        Complex sum{0.0, 0.0};
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            Complex local{0.0, 0.0};
            for (std::size_t k = 0; k < alphas_.size(); ++k)
                local += w[k] * derivs_[k][i];
            double phase = 0.0;
            for (std::size_t j = 0; j < theta.size(); ++j)
                phase -= theta[j] * nodes_[i][j];
            sum += local * std::polar(1.0, phase);
        }
        return LComplex(sum * cell_);
    }
    double residual_norm(const std::vector<Theta>& thetas, const std::vector<Complex>& coeffs) const override
    {
        double total = 0.0;
        for (std::size_t k = 0; k < alphas_.size(); ++k) {
            std::vector<Complex> scaled;
            for (std::size_t n = 0; n < thetas.size(); ++n)
                scaled.push_back(coeffs[n] * derivative_factor(thetas[n], alphas_[k]));
            for (std::size_t i = 0; i < nodes_.size(); ++i) {
                Complex r = derivs_[k][i];
                for (std::size_t n = 0; n < thetas.size(); ++n) {
                    double phase = 0.0;
                    for (std::size_t j = 0; j < thetas[n].size(); ++j)
                        phase += thetas[n][j] * nodes_[i][j];
                    r -= scaled[n] * std::polar(1.0, phase);
                }
                total += std::norm(r);
            }
        }
        return std::sqrt(total * cell_);
    }

private:
    BoxDomain domain_;
    std::vector<MultiIndex> alphas_;
    std::vector<std::vector<double>> nodes_;
    std::vector<std::vector<Complex>> derivs_;
    std::vector<double> limit_;
    std::vector<int> res_;
    double cell_ = 0.0;
};

class GreedyCosine {
public:
    GreedyCosine(const TargetOracle& oracle, const CosineFitConfig& config) : oracle_(oracle), config_(config)
    {
        const BoxDomain& dom = oracle.domain();
        for (std::size_t j = 0; j < dom.dim(); ++j) {
            step_.push_back(kPi / dom.side(j));
            bound_.push_back(std::min(config.theta_max, oracle.frequency_limit(j)));
            count_.push_back(static_cast<int>(std::floor(2.0 * bound_.back() / step_.back())) + 1);
        }
    }

    // <r, e_theta> with the atom `skip` left out of the approximant.
    LComplex residual_inner(const Theta& theta, std::size_t skip = static_cast<std::size_t>(-1)) const
    {
        LComplex r = oracle_.inner(theta);
        for (std::size_t n = 0; n < thetas_.size(); ++n)
            if (n != skip)
                r -= LComplex(coeffs_[n]) * oracle_.atom_inner(thetas_[n], theta, config_.order);
        return r;
    }

    long double self_norm2(const Theta& theta) const
    {
        return oracle_.atom_inner(theta, theta, config_.order).real();
    }

    // |<r, e_theta>| / ||e_theta||
    long double score_ld(const Theta& theta, std::size_t skip = static_cast<std::size_t>(-1)) const
    {
        return std::abs(residual_inner(theta, skip)) / std::sqrt(self_norm2(theta));
    }

    double score(const Theta& theta) const { return static_cast<double>(score_ld(theta)); }

    Theta coarse_node(std::size_t flat) const
    {
        Theta theta(step_.size());
        for (std::size_t j = step_.size(); j-- > 0;) {
            const int k = static_cast<int>(flat % count_[j]);
            flat /= count_[j];
            theta[j] = -bound_[j] + k * step_[j];
        }
        return theta;
    }

    std::pair<Theta, double> select() const
    {
        std::size_t total = 1;
        for (int c : count_)
            total *= static_cast<std::size_t>(c);
        std::size_t best_index = 0;
        double best = -1.0;
        std::mutex guard;
        parallel_for(total, config_.workers, [&](std::size_t begin, std::size_t end) {
            std::size_t local_index = begin;
            double local = -1.0;
            for (std::size_t i = begin; i < end; ++i) {
                const double s = score(coarse_node(i));
                if (s > local) {
                    local = s;
                    local_index = i;
                }
            }
            std::lock_guard lock(guard);
            if (local > best || (local == best && local_index < best_index)) {
                best = local;
                best_index = local_index;
            }
        });
        Theta theta = coarse_node(best_index);
        refine(theta, best);
        return {theta, best};
    }

    // Coordinate-wise golden-section search within half a grid step.
    void refine(Theta& theta, double& best) const
    {
        long double value = score_ld(theta);
        for (int sweep = 0; sweep < 2; ++sweep)
            for (std::size_t j = 0; j < theta.size(); ++j)
                golden(theta, j, value, static_cast<std::size_t>(-1));
        best = static_cast<double>(value);
    }

    // Maximizes score_ld along axis j of theta; keeps theta when no probe beats `value`.
    void golden(Theta& theta, std::size_t j, long double& value, std::size_t skip) const
    {
        const double g = 0.5 * (std::sqrt(5.0) - 1.0);
        Theta probe = theta;
        auto f = [&](double t) {
            probe[j] = t;
            return score_ld(probe, skip);
        };
        double a = std::max(theta[j] - 0.5 * step_[j], -bound_[j]);
        double b = std::min(theta[j] + 0.5 * step_[j], bound_[j]);
        double c = b - g * (b - a), d = a + g * (b - a);
        long double fc = f(c), fd = f(d);
        while (b - a > config_.refine_tolerance) {
            if (fc > fd) {
                b = d; d = c; fd = fc;
                c = b - g * (b - a); fc = f(c);
            } else {
                a = c; c = d; fc = fd;
                d = a + g * (b - a); fd = f(d);
            }
        }
        const double t = 0.5 * (a + b);
        const long double ft = f(t);
        if (ft > value) {
            value = ft;
            theta[j] = t;
        }
    }

    // Coordinate-wise refinement of every frequency against the residual of
    // the others, followed by a joint least-squares solve. Kept only when the
    // residual decreases.
    void polish(FitReport& report)
    {
        if (thetas_.empty() || config_.polish_sweeps <= 0)
            return;
        const auto saved_thetas = thetas_;
        const auto saved_coeffs = coeffs_;
        for (int sweep = 0; sweep < config_.polish_sweeps; ++sweep) {
            double moved = 0.0;
            for (std::size_t n = 0; n < thetas_.size(); ++n) {
                long double value = score_ld(thetas_[n], n);
                const Theta before = thetas_[n];
                for (std::size_t j = 0; j < thetas_[n].size(); ++j)
                    golden(thetas_[n], j, value, n);
                const LComplex c = residual_inner(thetas_[n], n) / self_norm2(thetas_[n]);
                coeffs_[n] = Complex(static_cast<double>(c.real()), static_cast<double>(c.imag()));
                for (std::size_t j = 0; j < before.size(); ++j)
                    moved = std::max(moved, std::abs(thetas_[n][j] - before[j]));
            }
            if (moved <= config_.refine_tolerance)
                break;
        }
        double r = std::numeric_limits<double>::infinity();
        if (solve() <= config_.max_condition)
            r = oracle_.residual_norm(thetas_, coeffs_);
        if (r < residuals_.back()) {
            residuals_.back() = r;
            report.parameters = thetas_;
        } else {
            thetas_ = saved_thetas;
            coeffs_ = saved_coeffs;
        }
    }

    // Least squares on the Gram matrix; returns the condition number.
    double solve()
    {
        const std::size_t n = thetas_.size();
        using Mat = Eigen::Matrix<LComplex, Eigen::Dynamic, Eigen::Dynamic>;
        using Vec = Eigen::Matrix<LComplex, Eigen::Dynamic, 1>;
        Mat A(n, n);
        Vec b(n);
        for (std::size_t i = 0; i < n; ++i) {
            b(i) = oracle_.inner(thetas_[i]);
            for (std::size_t m = 0; m <= i; ++m) {
                // A(i, m) = <e_m, e_i>
                A(i, m) = oracle_.atom_inner(thetas_[m], thetas_[i], config_.order);
                A(m, i) = std::conj(A(i, m));
            }
        }
        Eigen::SelfAdjointEigenSolver<Mat> eig(A);
        const auto& lambda = eig.eigenvalues();
        const long double lo = lambda.minCoeff(), hi = lambda.maxCoeff();
        const double cond = lo > 0.0L ? static_cast<double>(hi / lo) : std::numeric_limits<double>::infinity();
        if (!(cond <= config_.max_condition))
            return cond;
        Vec y = eig.eigenvectors().adjoint() * b;
        for (Eigen::Index i = 0; i < y.size(); ++i)
            y(i) /= lambda(i);
        Vec c = eig.eigenvectors() * y;
        coeffs_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            coeffs_[i] = Complex(static_cast<double>(c(i).real()), static_cast<double>(c(i).imag()));
        return cond;
    }

    // Adds theta (with conditioning retries); false when the step does not
    // reduce the residual, in which case the previous state is restored.
    bool add(Theta theta, FitReport& report)
    {
        const auto saved = coeffs_;
        for (int retry = 0;; ++retry) {
            thetas_.push_back(theta);
            if (solve() <= config_.max_condition)
                break;
            thetas_.pop_back();
            if (retry >= config_.max_retries)
                throw FitError("cosine fit: Gram matrix ill-conditioned after retries");
            ++report.conditioning_retries;
            theta[retry % theta.size()] += 0.5 * step_[retry % theta.size()];
        }
        const double r = oracle_.residual_norm(thetas_, coeffs_);
        if (!residuals_.empty() && !(r < residuals_.back())) {
            thetas_.pop_back();
            coeffs_ = saved;
            return false;
        }
        residuals_.push_back(r);
        return true;
    }

    std::vector<Theta> thetas_;
    std::vector<Complex> coeffs_;
    std::vector<double> residuals_;

private:
    const TargetOracle& oracle_;
    const CosineFitConfig& config_;
    std::vector<double> step_;
    std::vector<double> bound_;
    std::vector<int> count_;
};

std::pair<CosineNetwork, FitReport> run_fit(const TargetOracle& oracle, int N, double budget,
                                            const CosineFitConfig& config, const SpectralFunction* warm)
{
    if (N < 1)
        throw InputError("fit_cosine: N must be at least 1");
    if (config.order < 0 || config.order > kDefaultMaxSobolevOrder)
        throw InputError("fit_cosine: error-norm order out of range");
    if (!(budget > 0.0))
        throw InputError("fit_cosine: budget must be positive");
    if (warm && warm->domain() != oracle.domain())
        throw InputError("fit_cosine: warm start lives on a different domain");
    const auto start = std::chrono::steady_clock::now();

    FitReport report;
    report.method = "cosine";
    report.width = N;
    GreedyCosine greedy(oracle, config);
    const double initial = oracle.residual_norm({}, {});
    greedy.residuals_.push_back(initial);

    if (warm) {
        const SpectralFunction start_atoms = warm->canonicalize();
        for (const Atom& a : start_atoms.atoms()) {
            if (static_cast<int>(greedy.thetas_.size()) >= N)
                break;
            if (greedy.add(a.frequency, report))
                report.parameters.push_back(a.frequency);
        }
    }
    while (static_cast<int>(greedy.thetas_.size()) < N) {
        if (greedy.residuals_.back() == 0.0) {
            report.early_stop = true;
            break;
        }
        auto [theta, s] = greedy.select();
        if (!(s > 0.0) || !greedy.add(theta, report)) {
            report.early_stop = true;
            break;
        }
        report.parameters.push_back(theta);
    }
    greedy.polish(report);

    std::vector<Atom> atoms;
    double l1 = 0.0;
    for (std::size_t n = 0; n < greedy.thetas_.size(); ++n) {
        atoms.push_back(Atom{greedy.coeffs_[n], greedy.thetas_[n]});
        l1 += std::abs(greedy.coeffs_[n]);
    }
    report.residuals.assign(greedy.residuals_.begin() + 1, greedy.residuals_.end());
    report.final_error = greedy.residuals_.back();
    if (std::isfinite(budget) && l1 > budget) {
        report.budget_rescaled = true;
        report.rescale_factor = budget / l1;
        std::vector<Complex> scaled;
        for (Atom& a : atoms) {
            a.amplitude *= report.rescale_factor;
            scaled.push_back(a.amplitude);
        }
        report.final_error = oracle.residual_norm(greedy.thetas_, scaled);
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CosineNetwork net{SpectralFunction(oracle.domain(), std::move(atoms)), budget};
    return {std::move(net), std::move(report)};
}

} // namespace

void to_json(nlohmann::ordered_json& j, const CosineFitConfig& c)
{
    j = nlohmann::ordered_json{{"order", c.order},
                               {"theta_max", c.theta_max},
                               {"refine_tolerance", c.refine_tolerance},
                               {"max_condition", c.max_condition},
                               {"max_retries", c.max_retries},
                               {"polish_sweeps", c.polish_sweeps}};
}

CosineFitConfig cosine_config_from_json(const nlohmann::ordered_json& j)
{
    CosineFitConfig c;
    try {
        c.order = j.value("order", c.order);
        c.theta_max = j.value("theta_max", c.theta_max);
        c.refine_tolerance = j.value("refine_tolerance", c.refine_tolerance);
        c.max_condition = j.value("max_condition", c.max_condition);
        c.max_retries = j.value("max_retries", c.max_retries);
        c.polish_sweeps = j.value("polish_sweeps", c.polish_sweeps);
    } catch (const nlohmann::ordered_json::exception& e) {
        throw InputError(std::string("cosine fitter config: ") + e.what());
    }
    if (!(c.theta_max > 0.0) || !(c.refine_tolerance > 0.0) || c.max_retries < 0 || c.polish_sweeps < 0)
        throw InputError("cosine fitter config: parameters out of range");
    return c;
}

std::pair<CosineNetwork, FitReport> fit_cosine(const SpectralFunction& target, int N, double budget,
                                               const CosineFitConfig& config, const SpectralFunction* warm)
{
    SpectralOracle oracle(target, config.order);
    return run_fit(oracle, N, budget, config, warm);
}

std::pair<CosineNetwork, FitReport> fit_cosine(const GridFunction& target, int N, double budget,
                                               const CosineFitConfig& config, const SpectralFunction* warm)
{
    GridOracle oracle(target, config.order);
    return run_fit(oracle, N, budget, config, warm);
}

} // namespace fapx
