// SPDX-License-Identifier: Apache-2.0
#pragma once

// Trigonometric interpolation on the 2n+1 equispaced nodes x_i = 2πi/(2n+1):
// Fourier–Lagrange coefficients, the interpolant, the aliasing relations that
// express those coefficients through the true Fourier coefficients, and the
// synthesis of class members f from φ in coefficient space.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trigerr/error.hpp"
#include "trigerr/kernel.hpp"
#include "trigerr/trig_polynomial.hpp"

namespace trigerr {

/// x_i = 2πi/(2n+1), i = 0..2n.
inline std::vector<double> nodes(int n) {
    if (n < 1) throw ValidationError("n must be >= 1");
    const int count = 2 * n + 1;
    std::vector<double> x(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        x[static_cast<std::size_t>(i)] = 2.0 * std::numbers::pi * i / count;
    }
    return x;
}

/// Fourier–Lagrange coefficients of order n: `a` holds a_0..a_n, `b` holds
/// b_1..b_n (so b_k is b[k-1]).
struct DiscreteCoeffs {
    int n = 0;
    std::vector<double> a;
    std::vector<double> b;

    [[nodiscard]] TrigPolynomial to_polynomial() const {
        return {a.at(0), std::vector<double>(a.begin() + 1, a.end()), b};
    }
};

/// a_k = 2/(2n+1) Σ_i f(x_i) cos kx_i and b_k = 2/(2n+1) Σ_i f(x_i) sin kx_i
/// by direct summation.
inline DiscreteCoeffs fourier_lagrange_coeffs(std::span<const double> samples, int n) {
    if (n < 1) throw ValidationError("n must be >= 1");
    const auto count = static_cast<std::size_t>(2 * n + 1);
    if (samples.size() != count) {
        throw ShapeError("expected " + std::to_string(count) + " samples, got " +
                         std::to_string(samples.size()));
    }
    std::vector<double> cos_table(count), sin_table(count);
    for (std::size_t j = 0; j < count; ++j) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(count);
        cos_table[j] = std::cos(angle);
        sin_table[j] = std::sin(angle);
    }

    DiscreteCoeffs c{n, std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0),
                     std::vector<double>(static_cast<std::size_t>(n), 0.0)};
    const double scale = 2.0 / static_cast<double>(count);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
        double ca = 0.0;
        double cb = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t j = k * i % count;
            ca += samples[i] * cos_table[j];
            cb += samples[i] * sin_table[j];
        }
        c.a[k] = scale * ca;
        if (k >= 1) c.b[k - 1] = scale * cb;
    }
    return c;
}

/// S̃_n(f; x) = a_0/2 + Σ_{k=1}^n (a_k cos kx + b_k sin kx).
inline double eval_interpolant(const DiscreteCoeffs& coeffs, double x) {
    double sum = 0.0;
    for (int k = coeffs.n; k >= 1; --k) {
        const double kx = k * x;
        sum += coeffs.a[static_cast<std::size_t>(k)] * std::cos(kx) +
               coeffs.b[static_cast<std::size_t>(k - 1)] * std::sin(kx);
    }
    return 0.5 * coeffs.a[0] + sum;
}

/// Fourier coefficients of a continuous 2π-periodic function, with a bound
/// abs_tail(K) ≥ Σ_{k≥K} (|a_k| + |b_k|).
struct FourierSeries {
    double a0 = 0.0;
    std::function<std::pair<double, double>(std::int64_t)> harmonic;
    std::function<double(std::int64_t)> abs_tail;
};

inline FourierSeries fourier_series(const TrigPolynomial& f) {
    const auto degree = static_cast<std::int64_t>(f.degree());
    auto harmonic = [f](std::int64_t k) {
        const auto idx = static_cast<std::size_t>(k);
        return std::pair{f.cos_coeff(idx), f.sin_coeff(idx)};
    };
    auto tail = [f, degree](std::int64_t K) {
        double sum = 0.0;
        for (std::int64_t k = degree; k >= std::max<std::int64_t>(K, 1); --k) {
            const auto idx = static_cast<std::size_t>(k);
            sum += std::abs(f.cos_coeff(idx)) + std::abs(f.sin_coeff(idx));
        }
        return sum;
    };
    return {f.a0(), harmonic, tail};
}

/// Fourier–Lagrange coefficients from true Fourier coefficients:
///   a_k^{(n)} = a_k + Σ_{m≥1} (a_{m(2n+1)+k} + a_{m(2n+1)-k}),
///   b_k^{(n)} = b_k + Σ_{m≥1} (b_{m(2n+1)+k} - b_{m(2n+1)-k}).
/// The m-series stops once abs_tail of the first dropped index is below tol.
inline DiscreteCoeffs aliased_coeffs(const FourierSeries& full, int n, double tol) {
    if (n < 1) throw ValidationError("n must be >= 1");
    if (!(tol > 0.0)) throw ValidationError("tol must be positive");
    const std::int64_t period = 2 * n + 1;
    constexpr std::int64_t kMaxIndex = 100'000'000;

    // Smallest M whose dropped indices, all ≥ (M+1)(2n+1) - n, have tail < tol.
    auto dropped_tail = [&](std::int64_t M) { return full.abs_tail((M + 1) * period - n); };
    std::int64_t hi = 0;
    while (!(dropped_tail(hi) < tol)) {
        hi = hi == 0 ? 1 : 2 * hi;
        if (hi * period > kMaxIndex) {
            throw TruncationError("aliasing series cannot be truncated below tol",
                                  dropped_tail(hi));
        }
    }
    std::int64_t lo = hi / 2;
    if (hi > 0 && dropped_tail(lo) < tol) hi = lo;
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        (dropped_tail(mid) < tol ? hi : lo) = mid;
    }
    const std::int64_t blocks = hi;

    DiscreteCoeffs c{n, std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0),
                     std::vector<double>(static_cast<std::size_t>(n), 0.0)};
    c.a[0] = full.a0;
    for (std::int64_t m = blocks; m >= 1; --m) c.a[0] += 2.0 * full.harmonic(m * period).first;
    for (std::int64_t k = 1; k <= n; ++k) {
        double a = 0.0;
        double b = 0.0;
        for (std::int64_t m = blocks; m >= 1; --m) {
            const auto [a_plus, b_plus] = full.harmonic(m * period + k);
            const auto [a_minus, b_minus] = full.harmonic(m * period - k);
            a += a_plus + a_minus;
            b += b_plus - b_minus;
        }
        const auto [ak, bk] = full.harmonic(k);
        c.a[static_cast<std::size_t>(k)] = ak + a;
        c.b[static_cast<std::size_t>(k - 1)] = bk + b;
    }
    return c;
}

/// f = a0/2 + (1/π) ∫ φ(x - t) Ψ_β(t) dt with φ a finite trigonometric
/// polynomial of zero mean and ‖φ‖₂ ≤ 1.
struct ClassMemberSpec {
    double a0 = 0.0;
    TrigPolynomial phi;
    PsiSequence psi;
    BetaSequence beta;
};

enum class MembershipCheck { enforce, skip };

/// Class-membership tolerance on ‖φ‖₂ ≤ 1.
inline constexpr double kMembershipTolerance = 1e-12;

/// Convolution in coefficient space. With θ_k = β_k π/2 and φ's k-th harmonic
/// (c_k, d_k),
///   a_k = ψ(k) (c_k cos θ_k - d_k sin θ_k),
///   b_k = ψ(k) (c_k sin θ_k + d_k cos θ_k),
/// since (1/π)∫cos(k(x-t)) cos(kt-θ) dt = cos(kx-θ) and likewise for sine.
inline TrigPolynomial synthesize_f(const ClassMemberSpec& spec, std::size_t truncation,
                                   MembershipCheck check = MembershipCheck::enforce) {
    const TrigPolynomial& phi = spec.phi;
    if (phi.degree() > truncation) {
        throw ValidationError("phi degree " + std::to_string(phi.degree()) +
                              " exceeds truncation " + std::to_string(truncation));
    }
    if (check == MembershipCheck::enforce) {
        if (phi.a0() != 0.0) throw ValidationError("phi must have zero mean");
        const double norm = phi.l2_norm();
        if (norm > 1.0 + kMembershipTolerance) {
            throw ValidationError("phi lies outside the unit L2 ball (norm " +
                                  detail::to_text(norm) + ")");
        }
    }
    TrigPolynomial f = TrigPolynomial::zero(phi.degree());
    f.set_a0(spec.a0);
    for (std::size_t k = 1; k <= phi.degree(); ++k) {
        const auto index = static_cast<std::int64_t>(k);
        const double amplitude = spec.psi(index);
        const auto [cos_theta, sin_theta] = detail::quarter_turn(spec.beta(index));
        const double c = phi.cos_coeff(k);
        const double d = phi.sin_coeff(k);
        f.set_harmonic(k, amplitude * (c * cos_theta - d * sin_theta),
                       amplitude * (c * sin_theta + d * cos_theta));
    }
    return f;
}

}  // namespace trigerr
