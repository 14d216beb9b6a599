// SPDX-License-Identifier: Apache-2.0
#pragma once

// Self-check suites run by `trigerr verify`:
//   aliasing   sampled Fourier–Lagrange coefficients against folded true ones
//   crossform  block series against the Poisson and Weyl closed forms, and
//              the general series against the interpolation series
//   duality    extremal-function attainment and Monte-Carlo soundness
// Every random choice comes from a seeded engine, so a run is reproducible.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "trigerr/error.hpp"
#include "trigerr/exact_errors.hpp"
#include "trigerr/interpolation.hpp"
#include "trigerr/kernel.hpp"
#include "trigerr/linear_methods.hpp"
#include "trigerr/oracle.hpp"
#include "trigerr/trig_polynomial.hpp"

namespace trigerr {

struct Check {
    std::string suite;
    std::string name;
    double value = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

namespace detail {

/// Draws with a fixed mapping from engine output, so values do not depend on
/// the standard library's distribution implementations.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    /// Integer in [lo, hi].
    int integer(int lo, int hi) {
        return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    std::uint64_t bits() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline TrigPolynomial random_polynomial(Draw& draw, std::size_t degree) {
    std::vector<double> a(degree), b(degree);
    for (std::size_t k = 0; k < degree; ++k) {
        a[k] = draw.uniform(-1.0, 1.0);
        b[k] = draw.uniform(-1.0, 1.0);
    }
    return {draw.uniform(-1.0, 1.0), std::move(a), std::move(b)};
}

inline std::string label(std::string_view head, double v) {
    return std::string(head) + detail::to_text(v);
}

inline Check compare(std::string_view suite, std::string name, double value, double reference,
                     double tolerance) {
    return {std::string(suite), std::move(name), value, reference, tolerance,
            std::abs(value - reference) <= tolerance};
}

}  // namespace detail

/// β_k uniform in [-2, 2), a pure function of (seed, k).
inline BetaSequence random_beta(std::uint64_t seed) {
    return BetaSequence([seed](std::int64_t k) {
        const std::uint64_t h =
            detail::splitmix64(seed ^ detail::splitmix64(static_cast<std::uint64_t>(k)));
        return -2.0 + 4.0 * static_cast<double>(h >> 11) * 0x1.0p-53;
    });
}

/// Largest per-coefficient gap between sampled and folded coefficients.
inline double aliasing_gap(const TrigPolynomial& f, int n) {
    const DiscreteCoeffs sampled = fourier_lagrange_coeffs(f.sample_at_nodes(n), n);
    const DiscreteCoeffs folded = aliased_coeffs(fourier_series(f), n, 1e-300);
    double gap = 0.0;
    for (std::size_t k = 0; k < sampled.a.size(); ++k) {
        gap = std::max(gap, std::abs(sampled.a[k] - folded.a[k]));
    }
    for (std::size_t k = 0; k < sampled.b.size(); ++k) {
        gap = std::max(gap, std::abs(sampled.b[k] - folded.b[k]));
    }
    return gap;
}

inline std::vector<Check> aliasing_suite(std::uint64_t seed, int cases = 25) {
    std::vector<Check> out;
    detail::Draw draw(seed);
    {
        TrigPolynomial f = TrigPolynomial::zero(4);
        f.set_harmonic(4, 1.0, 0.0);
        const DiscreteCoeffs c = aliased_coeffs(fourier_series(f), 1, 1e-300);
        out.push_back(detail::compare("aliasing", "cos 4x, n=1: a_1", c.a[1], 1.0, 0.0));
    }
    {
        TrigPolynomial f = TrigPolynomial::zero(2);
        f.set_harmonic(2, 0.0, 1.0);
        const DiscreteCoeffs c = aliased_coeffs(fourier_series(f), 1, 1e-300);
        out.push_back(detail::compare("aliasing", "sin 2x, n=1: b_1", c.b[0], -1.0, 0.0));
    }
    for (int i = 0; i < cases; ++i) {
        const int n = draw.integer(1, 8);
        const auto degree = static_cast<std::size_t>(draw.integer(0, 10 * (2 * n + 1)));
        const TrigPolynomial f = detail::random_polynomial(draw, degree);
        out.push_back(detail::compare(
            "aliasing",
            "random n=" + std::to_string(n) + " degree=" + std::to_string(degree),
            aliasing_gap(f, n), 0.0, 1e-11));
    }
    return out;
}

inline std::vector<Check> crossform_suite(std::uint64_t seed, int points = 3) {
    std::vector<Check> out;
    detail::Draw draw(seed);
    constexpr double tol = 1e-13;
    const double pi = std::numbers::pi;

    for (const double q : {0.3, 0.5, 0.9}) {
        const PsiSequence psi = PsiSequence::geometric(q);
        for (const int n : {1, 5, 20}) {
            const std::string tag = "q=" + detail::to_text(q) + " n=" + std::to_string(n);
            for (int i = 0; i < points; ++i) {
                const double x = draw.uniform(-pi, pi);
                const ErrorResult series = pointwise_error_interp(psi, n, x, tol);
                out.push_back(detail::compare("crossform",
                                              detail::label("poisson " + tag + " x=", x),
                                              series.value, poisson_pointwise(q, n, x),
                                              1e-10 + series.truncation_bound));
            }
            const ErrorResult mid = pointwise_error_interp(psi, n, pi / (2 * n + 1), tol);
            out.push_back(detail::compare("crossform", "poisson uniform " + tag, mid.value,
                                          poisson_uniform(q, n),
                                          1e-10 + mid.truncation_bound));
        }
    }

    for (const double r : {0.75, 1.0, 2.0}) {
        const PsiSequence psi = PsiSequence::power(r);
        for (const int n : {1, 5, 20}) {
            const std::string tag = "r=" + detail::to_text(r) + " n=" + std::to_string(n);
            for (int i = 0; i < points; ++i) {
                const double x = draw.uniform(-pi, pi);
                const ErrorResult series = pointwise_error_interp(psi, n, x, tol);
                const ErrorResult integral = sobolev_pointwise(r, n, x, 1e-12);
                out.push_back(detail::compare(
                    "crossform", detail::label("weyl " + tag + " x=", x), series.value,
                    integral.value,
                    1e-7 * integral.value + series.truncation_bound + integral.truncation_bound));
            }
            const ErrorResult series = pointwise_error_interp(psi, n, pi / (2 * n + 1), tol);
            const ErrorResult integral = sobolev_uniform(r, n, 1e-12);
            out.push_back(detail::compare(
                "crossform", "weyl uniform " + tag, series.value, integral.value,
                1e-7 * integral.value + series.truncation_bound + integral.truncation_bound));
        }
    }

    const PsiSequence families[] = {PsiSequence::geometric(0.5), PsiSequence::power(1.0)};
    for (const PsiSequence& psi : families) {
        for (const int n : {1, 5}) {
            const MultiplierSet interp = preset_multipliers("interp", n);
            for (int i = 0; i < points; ++i) {
                const double x = draw.uniform(-pi, pi);
                const ErrorResult general = pointwise_error_general(psi, interp, x, tol);
                const ErrorResult special = pointwise_error_interp(psi, n, x, tol);
                out.push_back(detail::compare(
                    "crossform",
                    detail::label(std::string("general/interp ") +
                                      std::string(to_string(psi.family())) + " n=" +
                                      std::to_string(n) + " x=",
                                  x),
                    general.value, special.value, 1e-12));
            }
        }
    }
    return out;
}

struct DualityCase {
    PsiSequence psi;
    MultiplierSet mults;
    double x;
    std::string name;
};

inline DualityCase random_duality_case(detail::Draw& draw) {
    const bool geometric = draw.unit() < 0.5;
    const double param = geometric ? draw.uniform(0.2, 0.9) : draw.uniform(0.75, 3.0);
    const int n = draw.integer(1, 10);
    const bool interp = draw.unit() < 0.5;
    const double x = draw.uniform(-std::numbers::pi, std::numbers::pi);
    PsiSequence psi = geometric ? PsiSequence::geometric(param) : PsiSequence::power(param);
    std::string name = std::string(geometric ? "q=" : "r=") + detail::to_text(param) +
                       " n=" + std::to_string(n) + (interp ? " interp" : " zero") +
                       " x=" + detail::to_text(x);
    return {std::move(psi), preset_multipliers(interp ? "interp" : "zero", n), x,
            std::move(name)};
}

inline std::vector<Check> duality_suite(std::uint64_t seed, int cases = 10,
                                        std::int64_t mc_samples = 64) {
    std::vector<Check> out;
    detail::Draw draw(seed);
    for (int i = 0; i < cases; ++i) {
        const DualityCase c = random_duality_case(draw);
        const BetaSequence beta = random_beta(draw.bits());
        const std::int64_t blocks = adaptive_kernel_blocks(c.psi, c.mults, c.x);
        const VerificationReport report = verify_attainment(c.psi, beta, c.mults, c.x, blocks,
                                                            1e-12, mc_samples, draw.bits());
        out.push_back(detail::compare("duality", "attainment " + c.name, report.achieved,
                                      report.theoretical, report.delta));
        out.push_back({"duality", "monte-carlo " + c.name, report.mc_max.value_or(0.0),
                       report.theoretical + report.delta, 0.0,
                       report.mc_max.value_or(0.0) <= report.theoretical + report.delta});
    }
    return out;
}

}  // namespace trigerr
