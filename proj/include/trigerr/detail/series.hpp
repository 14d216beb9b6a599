// SPDX-License-Identifier: Apache-2.0
#pragma once

// Series helpers shared by the kernel and error modules: Hurwitz zeta sums for
// power tails and the oscillatory-tail estimate used to accelerate the
// aliasing-block series.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

namespace trigerr {

/// A value together with an upper bound on its absolute error.
struct SumEstimate {
    double value = 0.0;
    double error = 0.0;
};

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// B_{2j} / (2j)! for j = 1..kEulerMaclaurinOrder + 1.
inline constexpr int kEulerMaclaurinOrder = 10;

inline const std::array<double, kEulerMaclaurinOrder + 1>& scaled_bernoulli() {
    static const auto table = [] {
        std::array<double, kEulerMaclaurinOrder + 1> t{};
        for (int j = 1; j <= kEulerMaclaurinOrder + 1; ++j) {
            t[j - 1] = boost::math::bernoulli_b2n<double>(j) /
                       boost::math::factorial<double>(static_cast<unsigned>(2 * j));
        }
        return t;
    }();
    return table;
}

/// Hurwitz zeta ζ(s, a) = Σ_{k≥0} (k + a)^{-s} for s > 1, a > 0, by
/// Euler–Maclaurin summation after shifting the argument past max(16, s).
/// The reported error is twice the first omitted correction plus rounding;
/// k^{-s} is completely monotone, so the remainder is bounded by that term.
inline SumEstimate hurwitz_zeta(double s, double a) {
    const double shift_to = std::max(16.0, s);
    const auto head_terms =
        a < shift_to ? static_cast<std::int64_t>(std::ceil(shift_to - a)) : std::int64_t{0};

    double head = 0.0;
    for (std::int64_t k = head_terms - 1; k >= 0; --k) head += std::pow(a + static_cast<double>(k), -s);

    const double b = a + static_cast<double>(head_terms);
    double tail = std::pow(b, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(b, -s);

    const auto& bern = scaled_bernoulli();
    double rising = s;                 // s (s+1) ... (s+2j-2)
    double power = std::pow(b, -s - 1.0);  // b^{-s-2j+1}
    double omitted = 0.0;
    for (int j = 1; j <= kEulerMaclaurinOrder + 1; ++j) {
        const double term = bern[j - 1] * rising * power;
        if (j <= kEulerMaclaurinOrder) {
            tail += term;
        } else {
            omitted = std::abs(term);
        }
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        power /= b * b;
    }
    const double value = head + tail;
    return {value, 2.0 * omitted + static_cast<double>(head_terms + 8) * kEps * value};
}

struct OscillatoryTail {
    std::complex<double> value;
    double error = 0.0;
};

/// Σ_{m>M} a(m) e^{imθ} for a completely monotone sequence a, by repeated
/// summation by parts:
///   Σ_{m>M} a_m z^m = z^M Σ_{p=1}^{P} ω^p Δ^{p-1}a_{M+1} + ω^P Σ_{m>M} Δ^P a_m z^m,
/// ω = z / (1 - z). Complete monotonicity makes Δ^P a sign-definite, so the
/// remainder is at most |ω|^P |Δ^{P-1} a_{M+1}|. The order P is picked to
/// minimize that bound plus the rounding carried by the finite differences.
/// `rel_error` is the relative error of each evaluated a(m).
/// Requires sin(θ/2) ≠ 0; returns an infinite error bound otherwise.
template <class Sequence>
OscillatoryTail oscillatory_tail(const Sequence& a, std::int64_t last_included, double theta,
                                 double rel_error, int max_order = 12) {
    const double half_sin = std::sin(0.5 * theta);
    if (half_sin == 0.0) return {{0.0, 0.0}, std::numeric_limits<double>::infinity()};

    // ω = z/(1 - z) = i e^{iθ/2} / (2 sin(θ/2)), free of cancellation near z = 1.
    const std::complex<double> omega =
        std::complex<double>(0.0, 1.0) * std::polar(1.0, 0.5 * theta) / (2.0 * half_sin);
    const double omega_abs = 1.0 / (2.0 * std::abs(half_sin));

    std::vector<double> diff(static_cast<std::size_t>(max_order));
    for (int p = 0; p < max_order; ++p) diff[p] = a(last_included + 1 + p);
    const double scale = std::abs(diff[0]);

    std::complex<double> sum{0.0, 0.0};
    std::complex<double> omega_pow{1.0, 0.0};
    double omega_abs_pow = 1.0;
    double rounding = 0.0;
    double best_bound = std::numeric_limits<double>::infinity();
    std::complex<double> best_sum{0.0, 0.0};

    for (int p = 1; p <= max_order; ++p) {
        // diff[0] holds Δ^{p-1} a_{M+1}; its rounding is at most 2^{p-1} rel_error scale.
        omega_pow *= omega;
        omega_abs_pow *= omega_abs;
        const double diff_rounding = std::ldexp(rel_error * scale, p - 1);
        sum += omega_pow * diff[0];
        rounding += omega_abs_pow * diff_rounding;
        const double bound = omega_abs_pow * (std::abs(diff[0]) + diff_rounding) + rounding;
        if (bound < best_bound) {
            best_bound = bound;
            best_sum = sum;
        }
        for (int q = 0; q + 1 < max_order - p + 1; ++q) diff[q] = diff[q + 1] - diff[q];
    }
    const std::complex<double> lead =
        std::polar(1.0, std::fmod(static_cast<double>(last_included) * theta, 2.0 * std::numbers::pi));
    return {lead * best_sum, best_bound};
}

/// Width of the interval [sqrt(max(S - e, 0)), sqrt(S + e)] around sqrt(S),
/// measured on the side that is larger.
inline double sqrt_error(double square, double square_error) {
    const double s = std::max(square, 0.0);
    const double root = std::sqrt(s);
    const double upper = std::sqrt(s + square_error) - root;
    const double lower = root - std::sqrt(std::max(s - square_error, 0.0));
    return std::max(upper, lower);
}

}  // namespace detail
}  // namespace trigerr
