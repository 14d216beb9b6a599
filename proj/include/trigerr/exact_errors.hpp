// SPDX-License-Identifier: Apache-2.0
#pragma once

// Sharp worst-case errors of the methods Ũ_n over the classes C^ψ_{β,2}:
//
//   pointwise, any multipliers   (1/√π) [ Σ_{k≤n} ((1-λ_k)² + μ_k²) ψ²(k)
//                                  + Σ_{m≥1} Σ_{|j|≤n} ((cos mθ - λ_|j|)² + (sin mθ + μ_|j|)²) ψ²(m(2n+1)+j) ]^{1/2}
//   pointwise, interpolation     (2/√π) [ Σ_{m≥1} sin²(mθ/2) S_m ]^{1/2}
//   uniform, interpolation       (2/√π) [ Σ_{l≥1} S_{2l-1} ]^{1/2}
//
// with θ = (2n+1)x and S_m = Σ_{|j|≤n} ψ²(m(2n+1)+j) the m-th aliasing block.
// Closed forms for ψ(k) = q^k and integral forms for ψ(k) = k^{-r} follow.
//
// Truncation. Blocks are summed whole. The dropped blocks are either bounded
// (any ψ) by ((1+L)² + (1+U)²) tail(first dropped index), L = max|λ|,
// U = max|μ|, or, for the built-in families, estimated: their non-oscillating
// part exactly through progression sums of ψ², their oscillating part by
// summation by parts with a certified remainder. The reported
// truncation_bound covers |value - exact| in both cases.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "trigerr/detail/series.hpp"
#include "trigerr/error.hpp"
#include "trigerr/kernel.hpp"
#include "trigerr/linear_methods.hpp"

namespace trigerr {

struct ErrorResult {
    double value = 0.0;
    /// Bound on |value - exact|.
    double truncation_bound = 0.0;
    /// ψ² terms summed for series evaluators; quadrature refinement levels
    /// for the integral evaluators.
    std::int64_t terms_used = 0;
};

/// How dropped aliasing blocks are accounted for.
enum class TailMode {
    /// Estimate when ψ supports it, otherwise bound.
    automatic,
    /// Report the partial sum and a one-sided remainder bound only.
    bound_only,
};

/// Finite-prefix convexity report for α_m = m S_m.
struct AlphaSequenceReport {
    std::int64_t checked_up_to = 0;
    bool is_convex_on_prefix = true;
    std::optional<std::int64_t> first_violation;
    /// α_M ≤ α_{M-1} at the end of the prefix.
    bool nonincreasing_at_end = true;
};

namespace detail {

inline constexpr std::int64_t kMaxBlocks = std::int64_t{1} << 22;

/// (2n+1)x reduced to [-π, π]. A residue within the rounding of the product
/// is taken as a node and returned as exactly 0.
inline double block_phase(int n, double x) {
    const double product = static_cast<double>(2 * n + 1) * x;
    const double theta = std::remainder(product, 2.0 * std::numbers::pi);
    if (std::abs(theta) <= 8.0 * kEps * (std::abs(product) + 1.0)) return 0.0;
    return theta;
}

inline void require_n(int n) {
    if (n < 1) throw ValidationError("n must be >= 1");
}

inline void require_tol(double tol) {
    if (!(tol > 0.0)) throw ValidationError("tol must be positive");
}

/// Square-sum state of a block series: the square of the result is
/// `scale * (sum + tail)` with |tail error| ≤ `tail_error`.
struct SquareEstimate {
    double sum = 0.0;
    double tail = 0.0;
    double tail_error = 0.0;
    bool one_sided = false;
};

/// Running sum with Neumaier compensation.
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        comp_ += std::abs(sum_) >= std::abs(v) ? (sum_ - t) + v : (v - t) + sum_;
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// `block_terms` is the number of ψ² values combined inside one block; block
/// sums are accumulated with compensation, so rounding does not grow with the
/// number of blocks.
inline ErrorResult finish(const SquareEstimate& est, double scale, std::int64_t terms,
                          int block_terms) {
    const double square = std::max(est.sum + est.tail, 0.0);
    const double rounding = 4.0 * kEps * static_cast<double>(block_terms + 8) * std::abs(est.sum);
    const double err = est.tail_error + rounding;
    double bound = 0.0;
    if (est.one_sided) {
        const double root = std::sqrt(square);
        bound = std::max(std::sqrt(square + err) - root,
                         root - std::sqrt(std::max(square - rounding, 0.0)));
    } else {
        bound = sqrt_error(square, err);
    }
    const double root_scale = std::sqrt(scale);
    return {root_scale * std::sqrt(square), root_scale * bound, terms};
}

/// Interpolation series (2/√π)[Σ_m sin²(mθ/2) S_m]^{1/2}. With `half_turn`
/// the phase is exactly θ = π (odd blocks only).
class InterpSeries {
public:
    InterpSeries(const PsiSequence& psi, int n, double theta, bool half_turn)
        : psi_(psi), n_(n), period_(2 * n + 1), theta_(half_turn ? std::numbers::pi : theta),
          half_turn_(half_turn) {}

    [[nodiscard]] double block(std::int64_t m) const {
        double s = 0.0;
        for (int j = n_; j >= -n_; --j) s += psi_.squared(m * period_ + j);
        return s;
    }

    [[nodiscard]] double weight(std::int64_t m) const {
        if (half_turn_) return (m % 2 == 1) ? 1.0 : 0.0;
        const double h = std::sin(0.5 * static_cast<double>(m) * theta_);
        return h * h;
    }

    void add_blocks(std::int64_t upto) {
        for (; blocks_ < upto; ++blocks_) {
            const std::int64_t m = blocks_ + 1;
            const double w = weight(m);
            if (w != 0.0) sum_.add(w * block(m));
        }
    }

    [[nodiscard]] std::int64_t blocks() const noexcept { return blocks_; }

    [[nodiscard]] SquareEstimate estimate(TailMode mode) const {
        const std::int64_t first_dropped = (blocks_ + 1) * period_ - n_;
        const double sum = sum_.value();
        SquareEstimate crude{sum, 0.0, psi_.tail(first_dropped), true};
        if (!half_turn_ && theta_ == 0.0) return {sum, 0.0, 0.0, false};
        if (mode == TailMode::bound_only || !psi_.completely_monotone()) return crude;

        const auto total = psi_.progression_sum(first_dropped, 1);
        if (!total) return crude;
        const double rel = 4.0 * kEps * static_cast<double>(period_ + 1);
        const auto osc = oscillatory_tail([this](std::int64_t m) { return block(m); }, blocks_,
                                          theta_, rel);
        double osc_re = osc.value.real();
        double osc_err = osc.error;
        if (!(osc_err < total->value)) {
            osc_re = 0.0;
            osc_err = total->value;
        }
        SquareEstimate accelerated{sum, 0.5 * (total->value - osc_re),
                                   0.5 * (total->error + osc_err), false};
        // Prefer whichever accounting gives the tighter bound.
        return accelerated.tail_error < crude.tail_error ? accelerated : crude;
    }

private:
    const PsiSequence& psi_;
    int n_;
    std::int64_t period_;
    double theta_;
    bool half_turn_;
    std::int64_t blocks_ = 0;
    CompensatedSum sum_;
};

/// The general series for arbitrary multipliers.
class GeneralSeries {
public:
    GeneralSeries(const PsiSequence& psi, const MultiplierSet& mults, double theta)
        : psi_(psi), mults_(mults), n_(mults.n()), period_(2 * mults.n() + 1), theta_(theta) {
        for (int k = 1; k <= n_; ++k) {
            const auto idx = static_cast<std::size_t>(k);
            const double dl = 1.0 - mults.lambda(idx);
            const double mu = mults.mu(idx);
            sum_.add((dl * dl + mu * mu) * psi.squared(k));
        }
        for (int j = 0; j <= n_; ++j) {
            const auto idx = static_cast<std::size_t>(j);
            max_abs_lambda_ = std::max(max_abs_lambda_, std::abs(mults.lambda(idx)));
            max_abs_mu_ = std::max(max_abs_mu_, std::abs(mults.mu(idx)));
        }
    }

    void add_blocks(std::int64_t upto) {
        for (; blocks_ < upto; ++blocks_) {
            const std::int64_t m = blocks_ + 1;
            const double angle = static_cast<double>(m) * theta_;
            const double c = std::cos(angle);
            const double s = std::sin(angle);
            double block = 0.0;
            for (int j = n_; j >= -n_; --j) {
                const auto idx = static_cast<std::size_t>(std::abs(j));
                const double dc = c - mults_.lambda(idx);
                const double ds = s + mults_.mu(idx);
                block += (dc * dc + ds * ds) * psi_.squared(m * period_ + j);
            }
            sum_.add(block);
        }
    }

    [[nodiscard]] std::int64_t blocks() const noexcept { return blocks_; }

    /// Coefficient factor dominating every dropped block term.
    [[nodiscard]] double remainder_factor() const {
        if (theta_ == 0.0) {
            double f = 0.0;
            for (int j = 0; j <= n_; ++j) {
                const auto idx = static_cast<std::size_t>(j);
                const double dl = 1.0 - mults_.lambda(idx);
                const double mu = mults_.mu(idx);
                f = std::max(f, dl * dl + mu * mu);
            }
            return f;
        }
        return (1.0 + max_abs_lambda_) * (1.0 + max_abs_lambda_) +
               (1.0 + max_abs_mu_) * (1.0 + max_abs_mu_);
    }

    [[nodiscard]] SquareEstimate estimate(TailMode mode) const {
        const std::int64_t first_dropped = (blocks_ + 1) * period_ - n_;
        const double sum = sum_.value();
        SquareEstimate crude{sum, 0.0, remainder_factor() * psi_.tail(first_dropped), true};
        if (mode == TailMode::bound_only || !psi_.completely_monotone()) return crude;

        // Each dropped term expands to (1 + λ² + μ²) - 2λ cos mθ + 2μ sin mθ.
        const double rel = 4.0 * kEps;
        double tail = 0.0;
        double err = 0.0;
        for (int j = -n_; j <= n_; ++j) {
            const auto idx = static_cast<std::size_t>(std::abs(j));
            const double l = mults_.lambda(idx);
            const double mu = mults_.mu(idx);
            const auto plain = psi_.progression_sum((blocks_ + 1) * period_ + j, period_);
            if (!plain) return crude;
            if (theta_ == 0.0) {
                const double w = (1.0 - l) * (1.0 - l) + mu * mu;
                tail += w * plain->value;
                err += w * plain->error;
                continue;
            }
            const double w = 1.0 + l * l + mu * mu;
            tail += w * plain->value;
            err += w * plain->error;
            if (l == 0.0 && mu == 0.0) continue;
            const auto osc = oscillatory_tail(
                [this, j](std::int64_t m) { return psi_.squared(m * period_ + j); }, blocks_,
                theta_, rel);
            double re = osc.value.real();
            double im = osc.value.imag();
            double osc_err = osc.error;
            if (!(osc_err < plain->value)) {
                re = 0.0;
                im = 0.0;
                osc_err = plain->value;
            }
            tail += -2.0 * l * re + 2.0 * mu * im;
            err += 2.0 * std::hypot(l, mu) * osc_err;
        }
        SquareEstimate accelerated{sum, tail, err, false};
        return accelerated.tail_error < crude.tail_error ? accelerated : crude;
    }

private:
    const PsiSequence& psi_;
    const MultiplierSet& mults_;
    int n_;
    std::int64_t period_;
    double theta_;
    double max_abs_lambda_ = 0.0;
    double max_abs_mu_ = 0.0;
    std::int64_t blocks_ = 0;
    CompensatedSum sum_;
};

/// Adds blocks in doubling steps until the root-level bound is below tol.
template <class Series>
ErrorResult run_adaptive(Series& series, double scale, double tol, TailMode mode, int n) {
    const std::int64_t period = 2 * n + 1;
    std::int64_t target = 1;
    ErrorResult result;
    for (;;) {
        series.add_blocks(target);
        const SquareEstimate est = series.estimate(mode);
        result = finish(est, scale, n + target * period, 2 * n + 1);
        if (result.truncation_bound < tol) return result;
        const ErrorResult floor =
            finish({est.sum, est.tail, 0.0, false}, scale, result.terms_used, 2 * n + 1);
        if (floor.truncation_bound >= tol) {
            throw TruncationError("tol " + to_text(tol) + " is below the rounding floor " +
                                      to_text(floor.truncation_bound),
                                  result.truncation_bound);
        }
        if (target >= kMaxBlocks) {
            throw TruncationError("block series did not reach tol " + detail::to_text(tol) +
                                      " within " + std::to_string(kMaxBlocks) + " blocks",
                                  result.truncation_bound);
        }
        target *= 2;
    }
}

}  // namespace detail

/// Sharp pointwise error of Ũ_n(Λ; M) at x over C^ψ_{β,2}; independent of β.
inline ErrorResult pointwise_error_general(const PsiSequence& psi, const MultiplierSet& mults,
                                           double x, double tol,
                                           TailMode mode = TailMode::automatic) {
    detail::require_tol(tol);
    detail::GeneralSeries series(psi, mults, detail::block_phase(mults.n(), x));
    return detail::run_adaptive(series, 1.0 / std::numbers::pi, tol, mode, mults.n());
}

/// The same series summed over exactly `blocks` aliasing blocks.
inline ErrorResult pointwise_error_general_blocks(const PsiSequence& psi,
                                                  const MultiplierSet& mults, double x,
                                                  std::int64_t blocks,
                                                  TailMode mode = TailMode::automatic) {
    if (blocks < 1) throw ValidationError("block count must be >= 1");
    detail::GeneralSeries series(psi, mults, detail::block_phase(mults.n(), x));
    series.add_blocks(blocks);
    return detail::finish(series.estimate(mode), 1.0 / std::numbers::pi,
                          mults.n() + blocks * (2 * mults.n() + 1), 2 * mults.n() + 1);
}

/// Sharp pointwise error of the interpolation polynomial S̃_n at x.
inline ErrorResult pointwise_error_interp(const PsiSequence& psi, int n, double x, double tol,
                                          TailMode mode = TailMode::automatic) {
    detail::require_n(n);
    detail::require_tol(tol);
    detail::InterpSeries series(psi, n, detail::block_phase(n, x), false);
    return detail::run_adaptive(series, 4.0 / std::numbers::pi, tol, mode, n);
}

inline ErrorResult pointwise_error_interp_blocks(const PsiSequence& psi, int n, double x,
                                                 std::int64_t blocks,
                                                 TailMode mode = TailMode::automatic) {
    detail::require_n(n);
    if (blocks < 1) throw ValidationError("block count must be >= 1");
    detail::InterpSeries series(psi, n, detail::block_phase(n, x), false);
    series.add_blocks(blocks);
    return detail::finish(series.estimate(mode), 4.0 / std::numbers::pi, n + blocks * (2 * n + 1),
                          2 * n + 1);
}

/// α_m = m S_m for m = 1..M and a check that its second differences are
/// nonnegative (up to 1e-15 max(1, α_m)) for m = 2..M-1. Covers the prefix
/// only; nothing is claimed about m > M.
inline AlphaSequenceReport alpha_convexity_check(const PsiSequence& psi, int n, std::int64_t M) {
    detail::require_n(n);
    if (M < 3) throw ValidationError("convexity prefix must have M >= 3");
    detail::InterpSeries blocks(psi, n, 0.0, false);
    std::vector<double> alpha(static_cast<std::size_t>(M) + 1, 0.0);
    for (std::int64_t m = 1; m <= M; ++m) {
        alpha[static_cast<std::size_t>(m)] = static_cast<double>(m) * blocks.block(m);
    }
    AlphaSequenceReport report;
    report.checked_up_to = M;
    for (std::int64_t m = 2; m < M; ++m) {
        const auto i = static_cast<std::size_t>(m);
        const double second = alpha[i + 1] - 2.0 * alpha[i] + alpha[i - 1];
        if (second < -1e-15 * std::max(1.0, alpha[i])) {
            report.is_convex_on_prefix = false;
            report.first_violation = m;
            break;
        }
    }
    report.nonincreasing_at_end =
        alpha[static_cast<std::size_t>(M)] <= alpha[static_cast<std::size_t>(M - 1)];
    return report;
}

/// Default prefix length for the convexity precondition of the uniform error.
inline constexpr std::int64_t kConvexityPrefix = 50;

/// Sharp uniform error of S̃_n, (2/√π)[Σ_l S_{2l-1}]^{1/2}, attained at
/// x = π/(2n+1). Valid when α_m is convex; that hypothesis is checked on a
/// finite prefix (plus α non-increasing at its end) and a failure is reported
/// as a PreconditionError.
inline ErrorResult uniform_error_convex(const PsiSequence& psi, int n, double tol,
                                        std::int64_t prefix = kConvexityPrefix,
                                        TailMode mode = TailMode::automatic) {
    detail::require_n(n);
    detail::require_tol(tol);
    if (prefix < kConvexityPrefix) {
        throw ValidationError("convexity prefix must be at least " +
                              std::to_string(kConvexityPrefix));
    }
    const AlphaSequenceReport report = alpha_convexity_check(psi, n, prefix);
    if (!report.is_convex_on_prefix) {
        throw PreconditionError("alpha_m is not convex at m = " +
                                    std::to_string(*report.first_violation),
                                report.first_violation);
    }
    if (!report.nonincreasing_at_end) {
        throw PreconditionError("alpha_m is increasing at the end of the checked prefix (m = " +
                                    std::to_string(prefix) + ")",
                                prefix);
    }
    detail::InterpSeries series(psi, n, std::numbers::pi, true);
    return detail::run_adaptive(series, 4.0 / std::numbers::pi, tol, mode, n);
}

// Poisson kernels, ψ(k) = q^k.

namespace detail {
inline void require_q(double q) {
    if (!(q > 0.0 && q < 1.0)) throw ValidationError("q must lie in (0,1)");
}
}  // namespace detail

/// |sin((2n+1)x/2)| 2q^{n+1}/sqrt(π(1-q²)) sqrt((1+ρ)/(1 - 2ρ cos(2n+1)x + ρ²)),
/// ρ = q^{2(2n+1)}.
inline double poisson_pointwise(double q, int n, double x) {
    detail::require_q(q);
    detail::require_n(n);
    const double half_sin = std::sin(0.5 * detail::block_phase(n, x));
    const double rho = std::pow(q, 2.0 * (2 * n + 1));
    // 1 - 2ρ cos θ + ρ² = (1-ρ)² + 4ρ sin²(θ/2)
    const double denom = (1.0 - rho) * (1.0 - rho) + 4.0 * rho * half_sin * half_sin;
    return std::abs(half_sin) * 2.0 * std::pow(q, n + 1) /
           std::sqrt(std::numbers::pi * (1.0 - q * q)) * std::sqrt((1.0 + rho) / denom);
}

/// 2q^{n+1} / sqrt(π(1-q²)(1+q^{2(2n+1)})).
inline double poisson_uniform(double q, int n) {
    detail::require_q(q);
    detail::require_n(n);
    return 2.0 * std::pow(q, n + 1) /
           std::sqrt(std::numbers::pi * (1.0 - q * q) * (1.0 + std::pow(q, 2.0 * (2 * n + 1))));
}

/// Γ(x) for x > 0.
inline double gamma_fn(double x) {
    if (!(x > 0.0)) throw ValidationError("gamma_fn requires x > 0");
    return std::tgamma(x);
}

// Weyl kernels, ψ(k) = k^{-r}.

namespace detail {

inline void require_r(double r) {
    if (!(r > 0.5) || !std::isfinite(r)) throw ValidationError("r must be greater than 1/2");
}

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    std::int64_t levels = 0;
};

/// ∫_0^1 ρ^{-n/N} (1+ρ) ln^{2r-1}(1/ρ) / ((1-ρ^{1/N})(1 - 2ρ cos θ + ρ²)) dρ,
/// N = 2n+1, for sin(θ/2) ≠ 0.
///
/// With u = -ln ρ the integrand becomes
///   h(u) = u^{2r-1} e^{-u(n+1)/N} (1+e^{-u}) / ((1-e^{-u/N})(1 - 2e^{-u} cos θ + e^{-2u})),
/// decaying exponentially and behaving like N u^{2r-2} / (2(1 - cos θ)) as
/// u → 0. For r < 1 that endpoint is singular; u = t^p with p = 1/(2r-1)
/// turns it into a bounded integrand with a finite limit at t = 0. The range
/// is split at u = 2|sin(θ/2)|, where the denominator changes scale, and at
/// u = 1; finite pieces use tanh-sinh, the infinite one exp-sinh.
inline QuadratureResult weyl_integral(double r, int n, double half_sin, double tol) {
    const double period = 2.0 * n + 1.0;
    const double s2 = half_sin * half_sin;
    const double exponent = 2.0 * r - 1.0;
    const double p = r < 1.0 ? 1.0 / exponent : 1.0;

    auto h = [=](double u) -> double {
        if (!(u > 0.0)) return r == 1.0 ? period / (2.0 * s2) : 0.0;  // r >= 1 only
        const double e = std::exp(-u);
        const double em1 = std::expm1(-u);
        const double denom = em1 * em1 + 4.0 * e * s2;
        const double lead = std::exp(exponent * std::log(u) - u * (n + 1.0) / period);
        return lead * (1.0 + e) / (-std::expm1(-u / period) * denom);
    };
    // Integrand in t, u = t^p; for r < 1 its limit at t = 0 is p N / (2 sin²(θ/2)).
    auto h_sub = [=](double t) -> double {
        const double u = t > 0.0 ? std::pow(t, p) : 0.0;
        if (!(u > 0.0)) return r < 1.0 ? p * period / (2.0 * s2) : h(0.0);
        return h(u) * p * u / t;
    };

    const double quad_tol = std::max(tol, 4.0 * kEps);
    const double split = std::min(2.0 * std::abs(half_sin), 1.0);

    QuadratureResult out;
    auto accumulate = [&](double value, double error, std::size_t levels) {
        out.value += value;
        out.error += error;
        out.levels += static_cast<std::int64_t>(levels);
    };

    boost::math::quadrature::tanh_sinh<double> finite;
    {
        double err = 0.0, l1 = 0.0;
        std::size_t levels = 0;
        const double v = finite.integrate(h_sub, 0.0, std::pow(split, 1.0 / p), quad_tol, &err,
                                          &l1, &levels);
        accumulate(v, err, levels);
    }
    if (split < 1.0) {
        double err = 0.0, l1 = 0.0;
        std::size_t levels = 0;
        const double v = finite.integrate(h, split, 1.0, quad_tol, &err, &l1, &levels);
        accumulate(v, err, levels);
    }
    {
        boost::math::quadrature::exp_sinh<double> infinite;
        double err = 0.0, l1 = 0.0;
        std::size_t levels = 0;
        const double v = infinite.integrate(h, 1.0, std::numeric_limits<double>::infinity(),
                                            quad_tol, &err, &l1, &levels);
        accumulate(v, err, levels);
    }
    return out;
}

inline ErrorResult weyl_error(double r, int n, double x, double tol, bool uniform) {
    require_r(r);
    require_n(n);
    require_tol(tol);
    const double half_sin = uniform ? 1.0 : std::sin(0.5 * block_phase(n, x));
    if (half_sin == 0.0) return {0.0, 0.0, 0};

    const QuadratureResult integral = weyl_integral(r, n, half_sin, tol);
    if (!(integral.value > 0.0) || !std::isfinite(integral.value) ||
        integral.error > tol * integral.value) {
        throw QuadratureError("quadrature did not reach relative tolerance " +
                                  detail::to_text(tol),
                              integral.value, integral.error);
    }
    const double prefactor = 2.0 * std::abs(half_sin) /
                             std::sqrt(std::numbers::pi * gamma_fn(2.0 * r)) /
                             std::pow(2.0 * n + 1.0, r);
    return {prefactor * std::sqrt(integral.value),
            prefactor * sqrt_error(integral.value, integral.error), integral.levels};
}

}  // namespace detail

/// Sharp uniform error of S̃_n for ψ(k) = k^{-r}:
///   2 / (sqrt(πΓ(2r)) (2n+1)^r) [∫_0^1 ρ^{-n/(2n+1)} ln^{2r-1}(1/ρ) / ((1-ρ^{1/(2n+1)})(1+ρ)) dρ]^{1/2}.
/// `tol` is the relative error target of the integral.
inline ErrorResult sobolev_uniform(double r, int n, double tol) {
    return detail::weyl_error(r, n, 0.0, tol, true);
}

/// Sharp pointwise error of S̃_n for ψ(k) = k^{-r}; zero when (2n+1)x is a
/// multiple of 2π.
inline ErrorResult sobolev_pointwise(double r, int n, double x, double tol) {
    return detail::weyl_error(r, n, x, tol, false);
}

}  // namespace trigerr
