// SPDX-License-Identifier: Apache-2.0
#pragma once

// Linear polynomial methods built on Fourier–Lagrange coefficients: one row
// (λ_k, μ_k), k = 0..n, of the multiplier matrices and the polynomial
//   Ũ_n(f; x) = a_0/2 + Σ_{k=1}^n [λ_k (a_k cos kx + b_k sin kx)
//                                 + μ_k (-b_k cos kx + a_k sin kx)].
//
// The row conditions λ_0 = 1, μ_0 = 0 are enforced exactly. The limits
// λ_k → 1, μ_k → 0 as n → ∞ involve the whole matrix and cannot be checked on
// a single row; they are not enforced.

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trigerr/error.hpp"
#include "trigerr/interpolation.hpp"
#include "trigerr/trig_polynomial.hpp"

namespace trigerr {

class MultiplierSet {
public:
    [[nodiscard]] int n() const noexcept { return n_; }

    /// λ_k; zero for k > n.
    [[nodiscard]] double lambda(std::size_t k) const noexcept {
        return k < lambda_.size() ? lambda_[k] : 0.0;
    }
    /// μ_k; zero for k > n.
    [[nodiscard]] double mu(std::size_t k) const noexcept {
        return k < mu_.size() ? mu_[k] : 0.0;
    }

    [[nodiscard]] std::span<const double> lambdas() const noexcept { return lambda_; }
    [[nodiscard]] std::span<const double> mus() const noexcept { return mu_; }

    friend MultiplierSet validate_multipliers(std::vector<double> lambda, std::vector<double> mu,
                                              int n);

private:
    MultiplierSet(int n, std::vector<double> lambda, std::vector<double> mu)
        : n_(n), lambda_(std::move(lambda)), mu_(std::move(mu)) {}

    int n_;
    std::vector<double> lambda_;
    std::vector<double> mu_;
};

inline MultiplierSet validate_multipliers(std::vector<double> lambda, std::vector<double> mu,
                                          int n) {
    if (n < 1) throw ValidationError("n must be >= 1");
    const auto expected = static_cast<std::size_t>(n) + 1;
    if (lambda.size() != expected || mu.size() != expected) {
        throw ShapeError("multiplier rows must have n+1 = " + std::to_string(expected) +
                         " entries");
    }
    for (std::size_t k = 0; k < expected; ++k) {
        if (!std::isfinite(lambda[k]) || !std::isfinite(mu[k])) {
            throw ValidationError("multipliers must be finite");
        }
    }
    if (lambda[0] != 1.0) throw ValidationError("λ_0 must equal 1");
    if (mu[0] != 0.0) throw ValidationError("μ_0 must equal 0");
    return MultiplierSet(n, std::move(lambda), std::move(mu));
}

/// "interp": λ_k = 1 for 0 ≤ k ≤ n, μ ≡ 0, so Ũ_n = S̃_n.
/// "zero":   λ_0 = 1, λ_k = 0 otherwise, μ ≡ 0, so Ũ_n = a_0/2.
inline MultiplierSet preset_multipliers(std::string_view name, int n) {
    if (n < 1) throw ValidationError("n must be >= 1");
    const auto size = static_cast<std::size_t>(n) + 1;
    std::vector<double> mu(size, 0.0);
    if (name == "interp") return validate_multipliers(std::vector<double>(size, 1.0), mu, n);
    if (name == "zero") {
        std::vector<double> lambda(size, 0.0);
        lambda[0] = 1.0;
        return validate_multipliers(std::move(lambda), std::move(mu), n);
    }
    throw ValidationError("unknown multiplier preset '" + std::string(name) + "'");
}

/// Ũ_n(f) as a trigonometric polynomial of degree n.
inline TrigPolynomial method_polynomial(const DiscreteCoeffs& coeffs, const MultiplierSet& mults) {
    if (coeffs.n != mults.n()) throw ShapeError("coefficient order differs from multiplier order");
    TrigPolynomial u = TrigPolynomial::zero(static_cast<std::size_t>(coeffs.n));
    u.set_a0(coeffs.a[0]);
    for (std::size_t k = 1; k <= static_cast<std::size_t>(coeffs.n); ++k) {
        const double a = coeffs.a[k];
        const double b = coeffs.b[k - 1];
        const double l = mults.lambda(k);
        const double m = mults.mu(k);
        u.set_harmonic(k, l * a - m * b, l * b + m * a);
    }
    return u;
}

inline double apply_method(const DiscreteCoeffs& coeffs, const MultiplierSet& mults, double x) {
    if (coeffs.n != mults.n()) throw ShapeError("coefficient order differs from multiplier order");
    double sum = 0.0;
    for (int k = coeffs.n; k >= 1; --k) {
        const auto idx = static_cast<std::size_t>(k);
        const double a = coeffs.a[idx];
        const double b = coeffs.b[idx - 1];
        const double c = std::cos(k * x);
        const double s = std::sin(k * x);
        sum += mults.lambda(idx) * (a * c + b * s) + mults.mu(idx) * (-b * c + a * s);
    }
    return 0.5 * coeffs.a[0] + sum;
}

}  // namespace trigerr
