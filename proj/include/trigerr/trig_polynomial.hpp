// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "trigerr/error.hpp"

namespace trigerr {

/// a0/2 + Σ_{k=1}^{N} (a_k cos kx + b_k sin kx).
///
/// `cos_coeffs()[k-1]` is a_k and `sin_coeffs()[k-1]` is b_k; both have exactly
/// `degree()` entries.
class TrigPolynomial {
public:
    TrigPolynomial() = default;

    TrigPolynomial(double a0, std::vector<double> a, std::vector<double> b)
        : a0_(a0), a_(std::move(a)), b_(std::move(b)) {
        if (a_.size() != b_.size()) {
            throw ShapeError("cosine and sine coefficient sequences differ in length");
        }
    }

    static TrigPolynomial zero(std::size_t degree) {
        return {0.0, std::vector<double>(degree, 0.0), std::vector<double>(degree, 0.0)};
    }

    [[nodiscard]] std::size_t degree() const noexcept { return a_.size(); }
    [[nodiscard]] double a0() const noexcept { return a0_; }
    [[nodiscard]] std::span<const double> cos_coeffs() const noexcept { return a_; }
    [[nodiscard]] std::span<const double> sin_coeffs() const noexcept { return b_; }

    /// a_k and b_k for 1 ≤ k; zero past the degree.
    [[nodiscard]] double cos_coeff(std::size_t k) const noexcept {
        return k >= 1 && k <= a_.size() ? a_[k - 1] : 0.0;
    }
    [[nodiscard]] double sin_coeff(std::size_t k) const noexcept {
        return k >= 1 && k <= b_.size() ? b_[k - 1] : 0.0;
    }

    void set_a0(double v) noexcept { a0_ = v; }
    void set_harmonic(std::size_t k, double cos_coeff, double sin_coeff) {
        if (k < 1 || k > a_.size()) throw ShapeError("harmonic index outside the degree");
        a_[k - 1] = cos_coeff;
        b_[k - 1] = sin_coeff;
    }

    [[nodiscard]] double operator()(double x) const {
        double sum = 0.0;
        for (std::size_t k = a_.size(); k >= 1; --k) {
            const double kx = static_cast<double>(k) * x;
            sum += a_[k - 1] * std::cos(kx) + b_[k - 1] * std::sin(kx);
        }
        return 0.5 * a0_ + sum;
    }

    /// Values at x_i = 2πi/(2n+1), i = 0..2n. The phase k·i is reduced modulo
    /// 2n+1 in integers, so high harmonics are sampled without argument growth.
    [[nodiscard]] std::vector<double> sample_at_nodes(int n) const {
        const auto count = static_cast<std::size_t>(2 * n + 1);
        std::vector<double> cos_table(count), sin_table(count);
        for (std::size_t j = 0; j < count; ++j) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) /
                                 static_cast<double>(count);
            cos_table[j] = std::cos(angle);
            sin_table[j] = std::sin(angle);
        }
        std::vector<double> values(count);
        for (std::size_t i = 0; i < count; ++i) {
            double sum = 0.0;
            for (std::size_t k = a_.size(); k >= 1; --k) {
                const std::size_t j = (k % count) * i % count;
                sum += a_[k - 1] * cos_table[j] + b_[k - 1] * sin_table[j];
            }
            values[i] = 0.5 * a0_ + sum;
        }
        return values;
    }

    /// ‖f‖₂ over [-π, π]: sqrt(π (a0²/2 + Σ (a_k² + b_k²))).
    [[nodiscard]] double l2_norm() const {
        double sum = 0.5 * a0_ * a0_;
        for (std::size_t k = 0; k < a_.size(); ++k) sum += a_[k] * a_[k] + b_[k] * b_[k];
        return std::sqrt(std::numbers::pi * sum);
    }

    friend bool operator==(const TrigPolynomial&, const TrigPolynomial&) = default;

private:
    double a0_ = 0.0;
    std::vector<double> a_;
    std::vector<double> b_;
};

}  // namespace trigerr
