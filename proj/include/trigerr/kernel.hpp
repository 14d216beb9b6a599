// SPDX-License-Identifier: Apache-2.0
#pragma once

// Kernel classes: the coefficient sequence ψ(k) with certified tails, the
// phase sequence β_k, and the harmonics ψ(k) cos(kt - β_k π/2) of the kernel.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "trigerr/detail/series.hpp"
#include "trigerr/error.hpp"

namespace trigerr {

enum class PsiFamily { geometric, power, custom };

inline std::string_view to_string(PsiFamily family) {
    switch (family) {
        case PsiFamily::geometric: return "geometric";
        case PsiFamily::power: return "power";
        case PsiFamily::custom: return "custom";
    }
    return "custom";
}

/// Coefficient sequence ψ(k), k ≥ 1, of a square-summable kernel.
///
/// Every sequence carries `tail(K)`, an upper bound on Σ_{k≥K} ψ²(k) that the
/// series evaluators use to certify truncation. The built-in families also
/// provide accurate arithmetic-progression sums of ψ² and are completely
/// monotone in k, which lets the evaluators estimate oscillatory tails rather
/// than only bound them.
///
/// Instances are immutable and cheap to copy.
class PsiSequence {
public:
    using Eval = std::function<double(std::int64_t)>;

    /// ψ(k) = q^k, 0 < q < 1.
    static PsiSequence geometric(double q) {
        if (!(q > 0.0 && q < 1.0)) throw ValidationError("q must lie in (0,1)");
        PsiSequence p(PsiFamily::geometric, q);
        return p;
    }

    /// ψ(k) = k^{-r}, r > 1/2.
    static PsiSequence power(double r) {
        if (!(r > 0.5) || !std::isfinite(r)) throw ValidationError("r must be greater than 1/2");
        PsiSequence p(PsiFamily::power, r);
        return p;
    }

    /// Caller-supplied ψ and a majorant of its squared tail. The majorant is
    /// spot-checked against brute-force partial sums at a few K; the library
    /// does not derive one.
    static PsiSequence custom(Eval eval, Eval tail) {
        if (!eval || !tail) throw ValidationError("custom psi needs both eval and tail");
        PsiSequence p(PsiFamily::custom, std::numeric_limits<double>::quiet_NaN());
        p.custom_ = std::make_shared<const Custom>(Custom{std::move(eval), std::move(tail)});
        double previous = std::numeric_limits<double>::infinity();
        for (std::int64_t K : {1, 2, 10, 100, 1000}) {
            double partial = 0.0;
            for (std::int64_t k = K + 1000; k >= K; --k) partial += p.squared(k);
            const double bound = p.tail(K);
            if (!(bound >= partial) || !std::isfinite(bound)) {
                throw ValidationError("custom psi tail(" + std::to_string(K) +
                                      ") is below the partial sum of psi^2");
            }
            if (bound > previous) {
                throw ValidationError("custom psi tail must be non-increasing in K");
            }
            previous = bound;
        }
        return p;
    }

    [[nodiscard]] PsiFamily family() const noexcept { return family_; }

    /// q for the geometric family, r for the power family.
    [[nodiscard]] std::optional<double> param() const noexcept {
        if (family_ == PsiFamily::custom) return std::nullopt;
        return param_;
    }

    [[nodiscard]] double operator()(std::int64_t k) const {
        switch (family_) {
            case PsiFamily::geometric: return std::pow(param_, static_cast<double>(k));
            case PsiFamily::power: return std::pow(static_cast<double>(k), -param_);
            case PsiFamily::custom: return custom_->eval(k);
        }
        return 0.0;
    }

    [[nodiscard]] double squared(std::int64_t k) const {
        switch (family_) {
            case PsiFamily::geometric: return std::pow(param_, 2.0 * static_cast<double>(k));
            case PsiFamily::power: return std::pow(static_cast<double>(k), -2.0 * param_);
            case PsiFamily::custom: {
                const double v = custom_->eval(k);
                return v * v;
            }
        }
        return 0.0;
    }

    /// Upper bound on Σ_{k≥K} ψ²(k), K ≥ 1. Exact for the geometric family;
    /// K^{-2r} + K^{1-2r}/(2r-1) (integral test) for the power family.
    [[nodiscard]] double tail(std::int64_t K) const {
        const auto k = static_cast<double>(K);
        switch (family_) {
            case PsiFamily::geometric: return std::pow(param_, 2.0 * k) / (1.0 - param_ * param_);
            case PsiFamily::power: {
                const double s = 2.0 * param_;
                return std::pow(k, -s) + std::pow(k, 1.0 - s) / (s - 1.0);
            }
            case PsiFamily::custom: return custom_->tail(K);
        }
        return 0.0;
    }

    /// Σ_{m≥0} ψ²(start + m·stride) with an error bound, for the built-in
    /// families; nullopt for custom sequences.
    [[nodiscard]] std::optional<SumEstimate> progression_sum(std::int64_t start,
                                                             std::int64_t stride) const {
        const auto a = static_cast<double>(start);
        const auto d = static_cast<double>(stride);
        switch (family_) {
            case PsiFamily::geometric: {
                const double v = std::pow(param_, 2.0 * a) / (1.0 - std::pow(param_, 2.0 * d));
                return SumEstimate{v, 8.0 * detail::kEps * v};
            }
            case PsiFamily::power: {
                const double s = 2.0 * param_;
                const SumEstimate z = detail::hurwitz_zeta(s, a / d);
                const double scale = std::pow(d, -s);
                return SumEstimate{scale * z.value,
                                   scale * z.error + 4.0 * detail::kEps * scale * z.value};
            }
            case PsiFamily::custom: return std::nullopt;
        }
        return std::nullopt;
    }

    /// ψ² is completely monotone in k (true for both built-in families).
    [[nodiscard]] bool completely_monotone() const noexcept {
        return family_ != PsiFamily::custom;
    }

private:
    struct Custom {
        Eval eval;
        Eval tail;
    };

    PsiSequence(PsiFamily family, double param) : family_(family), param_(param) {}

    PsiFamily family_;
    double param_;
    std::shared_ptr<const Custom> custom_;
};

/// make_psi(family, param) for the two parametric families.
inline PsiSequence make_psi(PsiFamily family, double param) {
    switch (family) {
        case PsiFamily::geometric: return PsiSequence::geometric(param);
        case PsiFamily::power: return PsiSequence::power(param);
        case PsiFamily::custom: break;
    }
    throw ValidationError("custom psi must be built with PsiSequence::custom");
}

/// Upper bound on Σ_{k≥K} ψ²(k).
inline double tail_bound(const PsiSequence& psi, std::int64_t K) {
    if (K < 1) throw ValidationError("tail index K must be >= 1");
    return psi.tail(K);
}

namespace detail {

/// Locale-independent parse of a whole string as a double.
inline std::optional<double> parse_real(std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
    return value;
}

}  // namespace detail

/// Parses "geometric:q=<real>" or "power:r=<real>".
inline PsiSequence parse_psi(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw ValidationError("psi spec must look like geometric:q=<real> or power:r=<real>");
    }
    const std::string_view name = spec.substr(0, colon);
    const std::string_view rest = spec.substr(colon + 1);

    std::string_view key;
    PsiFamily family{};
    if (name == "geometric") {
        family = PsiFamily::geometric;
        key = "q=";
    } else if (name == "power") {
        family = PsiFamily::power;
        key = "r=";
    } else {
        throw ValidationError("unknown psi family '" + std::string(name) + "'");
    }
    if (rest.substr(0, key.size()) != key) {
        throw ValidationError("psi family " + std::string(name) + " expects " + std::string(key) +
                              "<real>");
    }
    const std::string_view number = rest.substr(key.size());
    const std::optional<double> value = detail::parse_real(number);
    if (!value) throw ValidationError("cannot parse psi parameter '" + std::string(number) + "'");
    return make_psi(family, *value);
}

/// Phase sequence β_k, k ≥ 1; the kernel harmonic at k is shifted by β_k π/2.
class BetaSequence {
public:
    using Eval = std::function<double(std::int64_t)>;

    explicit BetaSequence(Eval eval) : eval_(std::move(eval)) {
        if (!eval_) throw ValidationError("beta sequence needs an evaluator");
    }

    static BetaSequence constant(double beta) {
        return BetaSequence([beta](std::int64_t) { return beta; });
    }

    [[nodiscard]] double operator()(std::int64_t k) const { return eval_(k); }

private:
    Eval eval_;
};

namespace detail {

/// (cos(βπ/2), sin(βπ/2)), exact when β is an integer.
inline std::pair<double, double> quarter_turn(double beta) {
    double r = std::fmod(beta, 4.0);
    if (r < 0.0) r += 4.0;
    if (r == std::floor(r)) {
        switch (static_cast<int>(r)) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double angle = r * std::numbers::pi / 2.0;
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace detail

struct KernelHarmonic {
    std::int64_t k = 0;
    double cos_coeff = 0.0;
    double sin_coeff = 0.0;
};

/// ψ(k) cos(kt - β_k π/2) = cos_coeff cos kt + sin_coeff sin kt.
inline KernelHarmonic kernel_harmonic(const PsiSequence& psi, const BetaSequence& beta,
                                      std::int64_t k) {
    if (k < 1) throw ValidationError("harmonic index k must be >= 1");
    const double amplitude = psi(k);
    const auto [c, s] = detail::quarter_turn(beta(k));
    return {k, amplitude * c, amplitude * s};
}

}  // namespace trigerr
