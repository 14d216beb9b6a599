// SPDX-License-Identifier: Apache-2.0
#pragma once

// Independent check of the sharp pointwise error through the extremal
// function. For f in the class,
//   f(x) - Ũ_n(f; x) = (1/π) ∫ φ(x - t) u(t) dt
// for an explicit zero-mean kernel u depending on (ψ, β, Λ, M, x). Over the
// unit L2 ball of φ the supremum is ‖u‖₂/π, attained by φ(x - t) = u(t)/‖u‖₂.
// This module builds u harmonic by harmonic, synthesizes the extremal f, and
// measures its error through the full sampling → coefficients → method
// pipeline. Random unit-norm φ give sound lower bounds.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "trigerr/detail/series.hpp"
#include "trigerr/error.hpp"
#include "trigerr/exact_errors.hpp"
#include "trigerr/interpolation.hpp"
#include "trigerr/kernel.hpp"
#include "trigerr/linear_methods.hpp"
#include "trigerr/trig_polynomial.hpp"

namespace trigerr {

/// The kernel u(t), truncated after `blocks` aliasing blocks.
struct DualKernel {
    int n = 0;
    double x = 0.0;
    std::int64_t blocks = 0;
    /// Harmonics of u; the constant term is always zero.
    TrigPolynomial u;
    /// Upper bound on the sum of squared amplitudes of the dropped blocks.
    double tail_bound = 0.0;

    /// Σ (cos² + sin² coefficients) over the kept harmonics.
    [[nodiscard]] double amplitude_square_sum() const {
        double s = 0.0;
        for (std::size_t k = 1; k <= u.degree(); ++k) {
            s += u.cos_coeff(k) * u.cos_coeff(k) + u.sin_coeff(k) * u.sin_coeff(k);
        }
        return s;
    }

    /// (1/√π) (Σ amplitudes²)^{1/2}, the truncated sharp error.
    [[nodiscard]] double truncated_error() const {
        return std::sqrt(amplitude_square_sum() / std::numbers::pi);
    }

    /// Bound on the gap between the full and the truncated sharp error.
    [[nodiscard]] double truncation_gap() const {
        const double a = amplitude_square_sum();
        return (std::sqrt(a + tail_bound) - std::sqrt(a)) / std::sqrt(std::numbers::pi);
    }
};

/// Kernel harmonics at ν: with A, B the two coefficient differences and φ the
/// harmonic phase, ψ(ν)[A cos(νt - φ) - B sin(νt - φ)] contributes
/// ψ(ν)(A cos φ + B sin φ) to cos νt and ψ(ν)(A sin φ - B cos φ) to sin νt.
///   ν ≤ n:              A = 1 - λ_ν, B = μ_ν, φ = β_ν π/2
///   ν = m(2n+1) + j:    A = cos mθ - λ_|j|, B = sin mθ + μ_|j|, φ = β_ν π/2 + mθ
inline DualKernel build_dual_kernel(const PsiSequence& psi, const BetaSequence& beta,
                                    const MultiplierSet& mults, double x, std::int64_t blocks) {
    if (blocks < 1) throw ValidationError("kernel block count must be >= 1");
    const int n = mults.n();
    const std::int64_t period = 2 * n + 1;
    const double theta = detail::block_phase(n, x);
    const auto degree = static_cast<std::size_t>(blocks * period + n);

    DualKernel kernel{n, x, blocks, TrigPolynomial::zero(degree), 0.0};
    auto put = [&](std::int64_t nu, double a, double b, double extra_phase) {
        const auto [c0, s0] = detail::quarter_turn(beta(nu));
        const double c1 = std::cos(extra_phase);
        const double s1 = std::sin(extra_phase);
        const double c = c0 * c1 - s0 * s1;
        const double s = s0 * c1 + c0 * s1;
        const double amplitude = psi(nu);
        kernel.u.set_harmonic(static_cast<std::size_t>(nu), amplitude * (a * c + b * s),
                              amplitude * (a * s - b * c));
    };

    for (int k = 1; k <= n; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        put(k, 1.0 - mults.lambda(idx), mults.mu(idx), 0.0);
    }
    double max_lambda = 0.0;
    double max_mu = 0.0;
    double at_node = 0.0;
    for (int j = 0; j <= n; ++j) {
        const auto idx = static_cast<std::size_t>(j);
        max_lambda = std::max(max_lambda, std::abs(mults.lambda(idx)));
        max_mu = std::max(max_mu, std::abs(mults.mu(idx)));
        const double dl = 1.0 - mults.lambda(idx);
        at_node = std::max(at_node, dl * dl + mults.mu(idx) * mults.mu(idx));
    }
    for (std::int64_t m = 1; m <= blocks; ++m) {
        const double angle = static_cast<double>(m) * theta;
        const double cm = std::cos(angle);
        const double sm = std::sin(angle);
        for (int j = -n; j <= n; ++j) {
            const auto idx = static_cast<std::size_t>(std::abs(j));
            put(m * period + j, cm - mults.lambda(idx), sm + mults.mu(idx), angle);
        }
    }
    const double factor = theta == 0.0 ? at_node
                                       : (1.0 + max_lambda) * (1.0 + max_lambda) +
                                             (1.0 + max_mu) * (1.0 + max_mu);
    kernel.tail_bound = factor * psi.tail((blocks + 1) * period - n);
    return kernel;
}

/// Smallest power-of-two block count whose kernel truncation gap is at most
/// `rel` times the truncated error, capped so the kernel degree stays below
/// `max_degree`.
inline std::int64_t adaptive_kernel_blocks(const PsiSequence& psi, const MultiplierSet& mults,
                                           double x, double rel = 1e-3,
                                           std::size_t max_degree = 200'000) {
    const std::int64_t period = 2 * mults.n() + 1;
    const BetaSequence beta = BetaSequence::constant(0.0);
    std::int64_t blocks = 1;
    for (;;) {
        const std::int64_t next = 2 * blocks;
        if (static_cast<std::size_t>(next * period + mults.n()) > max_degree) return blocks;
        const DualKernel kernel = build_dual_kernel(psi, beta, mults, x, blocks);
        if (kernel.truncation_gap() <= rel * kernel.truncated_error()) return blocks;
        blocks = next;
    }
}

/// φ* = u / ‖u‖₂.
inline TrigPolynomial extremal_phi(const DualKernel& kernel) {
    const double norm = kernel.u.l2_norm();
    if (!(norm > 0.0)) {
        throw DegenerateInputError("kernel is identically zero; the sharp error is 0");
    }
    TrigPolynomial phi = TrigPolynomial::zero(kernel.u.degree());
    for (std::size_t k = 1; k <= phi.degree(); ++k) {
        phi.set_harmonic(k, kernel.u.cos_coeff(k) / norm, kernel.u.sin_coeff(k) / norm);
    }
    return phi;
}

/// g(x - s) as a polynomial in s.
inline TrigPolynomial reflect_shift(const TrigPolynomial& g, double x) {
    TrigPolynomial out = TrigPolynomial::zero(g.degree());
    out.set_a0(g.a0());
    for (std::size_t k = 1; k <= g.degree(); ++k) {
        const double kx = static_cast<double>(k) * x;
        const double c = std::cos(kx);
        const double s = std::sin(kx);
        const double a = g.cos_coeff(k);
        const double b = g.sin_coeff(k);
        out.set_harmonic(k, a * c + b * s, a * s - b * c);
    }
    return out;
}

/// |f(x) - Ũ_n(f; x)| for the f synthesized from φ, computed by sampling f
/// at the nodes, forming Fourier–Lagrange coefficients and applying the
/// method. Also returns a rounding allowance for that pipeline.
struct AchievedError {
    double value = 0.0;
    double rounding = 0.0;
};

inline AchievedError achieved_error(const PsiSequence& psi, const BetaSequence& beta,
                                    const MultiplierSet& mults, double x,
                                    const TrigPolynomial& phi) {
    const ClassMemberSpec spec{0.0, phi, psi, beta};
    const TrigPolynomial f = synthesize_f(spec, phi.degree());
    const std::vector<double> samples = f.sample_at_nodes(mults.n());
    const DiscreteCoeffs coeffs = fourier_lagrange_coeffs(samples, mults.n());
    const double error = std::abs(f(x) - apply_method(coeffs, mults, x));

    // Evaluating cos kx at large k loses about k|x| ulps of argument.
    double mass = 0.0;
    for (std::size_t k = 1; k <= f.degree(); ++k) {
        mass += (std::abs(f.cos_coeff(k)) + std::abs(f.sin_coeff(k))) *
                (1.0 + static_cast<double>(k) * std::abs(x));
    }
    double scale = 1.0;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(mults.n()); ++k) {
        scale += std::abs(mults.lambda(k)) + std::abs(mults.mu(k));
    }
    return {error, 64.0 * detail::kEps * static_cast<double>(2 * mults.n() + 2) * scale * mass};
}

struct MonteCarloOptions {
    std::int64_t samples = 256;
    std::size_t degree = 0;  // 0 selects 4(2n+1)
    std::uint64_t seed = 42;
    /// Evaluated before the random draws.
    std::vector<TrigPolynomial> injected;
};

/// Largest |f(x) - Ũ_n(f; x)| over random φ of unit L2 norm: independent
/// standard Gaussian coefficients, normalized. Sample i draws from its own
/// engine seeded by (seed, i), so results do not depend on evaluation order.
inline double monte_carlo_sup(const PsiSequence& psi, const BetaSequence& beta,
                              const MultiplierSet& mults, double x,
                              const MonteCarloOptions& options) {
    const std::size_t degree =
        options.degree == 0 ? static_cast<std::size_t>(4 * (2 * mults.n() + 1)) : options.degree;
    if (degree < static_cast<std::size_t>(mults.n()) + 1) {
        throw ValidationError("Monte-Carlo degree must be >= n + 1");
    }
    if (options.samples < 0) throw ValidationError("sample count must be nonnegative");

    double best = 0.0;
    for (const TrigPolynomial& phi : options.injected) {
        best = std::max(best, achieved_error(psi, beta, mults, x, phi).value);
    }
    for (std::int64_t i = 0; i < options.samples; ++i) {
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                          static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
        std::mt19937_64 engine(seq);
        std::normal_distribution<double> gauss;
        std::vector<double> a(degree), b(degree);
        for (std::size_t k = 0; k < degree; ++k) {
            a[k] = gauss(engine);
            b[k] = gauss(engine);
        }
        TrigPolynomial phi(0.0, std::move(a), std::move(b));
        const double norm = phi.l2_norm();
        if (!(norm > 0.0)) continue;
        for (std::size_t k = 1; k <= degree; ++k) {
            phi.set_harmonic(k, phi.cos_coeff(k) / norm, phi.sin_coeff(k) / norm);
        }
        best = std::max(best, achieved_error(psi, beta, mults, x, phi).value);
    }
    return best;
}

inline double monte_carlo_sup(const PsiSequence& psi, const BetaSequence& beta,
                              const MultiplierSet& mults, double x, std::int64_t samples,
                              std::size_t degree, std::uint64_t seed) {
    MonteCarloOptions options;
    options.samples = samples;
    options.degree = degree;
    options.seed = seed;
    return monte_carlo_sup(psi, beta, mults, x, options);
}

struct VerificationReport {
    double theoretical = 0.0;
    double achieved = 0.0;
    std::optional<double> mc_max;
    double delta = 0.0;
    bool pass = false;
};

/// Theoretical value (general series at tolerance `tol`) against the error of
/// the extremal f built from `blocks` kernel blocks. δ collects the series
/// truncation bound, the gap of the truncated kernel, the pipeline rounding
/// and tol. With `mc_samples` > 0 a Monte-Carlo sup is also required to stay
/// below theoretical + δ.
inline VerificationReport verify_attainment(const PsiSequence& psi, const BetaSequence& beta,
                                            const MultiplierSet& mults, double x,
                                            std::int64_t blocks, double tol,
                                            std::int64_t mc_samples = 0,
                                            std::uint64_t seed = 42) {
    const ErrorResult theory = pointwise_error_general(psi, mults, x, tol);
    const DualKernel kernel = build_dual_kernel(psi, beta, mults, x, blocks);

    VerificationReport report;
    report.theoretical = theory.value;
    double rounding = 0.0;
    try {
        const TrigPolynomial phi = reflect_shift(extremal_phi(kernel), x);
        const AchievedError achieved = achieved_error(psi, beta, mults, x, phi);
        report.achieved = achieved.value;
        rounding = achieved.rounding;
    } catch (const DegenerateInputError&) {
        report.achieved = 0.0;
    }
    report.delta = theory.truncation_bound + kernel.truncation_gap() + rounding + tol;
    report.pass = std::abs(report.achieved - report.theoretical) <= report.delta;
    if (mc_samples > 0) {
        MonteCarloOptions options;
        options.samples = mc_samples;
        options.seed = seed;
        report.mc_max = monte_carlo_sup(psi, beta, mults, x, options);
        report.pass = report.pass && *report.mc_max <= report.theoretical + report.delta;
    }
    return report;
}

}  // namespace trigerr
