#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "trigerr/interpolation.hpp"
#include "trigerr/suites.hpp"

using namespace trigerr;
using std::numbers::pi;

namespace {

TrigPolynomial random_poly(std::mt19937_64& engine, std::size_t degree) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> a(degree), b(degree);
    for (std::size_t k = 0; k < degree; ++k) {
        a[k] = u(engine);
        b[k] = u(engine);
    }
    return {u(engine), a, b};
}

TrigPolynomial single(std::size_t k, double c, double s) {
    TrigPolynomial p = TrigPolynomial::zero(k);
    p.set_harmonic(k, c, s);
    return p;
}

/// (1/π) ∫ φ(x - t) Ψ(t) dt by the trapezoid rule on `points` nodes, which is
/// exact for trigonometric polynomials of degree below points/2.
double numeric_convolution(const TrigPolynomial& phi, const PsiSequence& psi,
                           const BetaSequence& beta, double x, int points) {
    double sum = 0.0;
    for (int i = 0; i < points; ++i) {
        const double t = -pi + 2.0 * pi * i / points;
        double kernel = 0.0;
        for (std::size_t k = 1; k <= phi.degree(); ++k) {
            const auto kk = static_cast<std::int64_t>(k);
            kernel += psi(kk) * std::cos(static_cast<double>(k) * t - beta(kk) * pi / 2.0);
        }
        sum += phi(x - t) * kernel;
    }
    return sum * (2.0 * pi / points) / pi;
}

}  // namespace

TEST(Nodes, Examples) {
    const auto x1 = nodes(1);
    ASSERT_EQ(x1.size(), 3u);
    EXPECT_EQ(x1[0], 0.0);
    EXPECT_DOUBLE_EQ(x1[1], 2.0 * pi / 3.0);
    EXPECT_DOUBLE_EQ(x1[2], 4.0 * pi / 3.0);
    for (int n : {2, 7, 40}) {
        const auto x = nodes(n);
        ASSERT_EQ(x.size(), static_cast<std::size_t>(2 * n + 1));
        for (std::size_t i = 1; i < x.size(); ++i) {
            EXPECT_NEAR(x[i] - x[i - 1], 2.0 * pi / (2 * n + 1), 1e-15);
        }
        EXPECT_LT(x.back(), 2.0 * pi);
    }
    EXPECT_THROW(nodes(0), ValidationError);
}

TEST(FourierLagrange, CosineExamples) {
    const TrigPolynomial f = single(1, 1.0, 0.0);
    const DiscreteCoeffs c = fourier_lagrange_coeffs(f.sample_at_nodes(1), 1);
    EXPECT_NEAR(c.a[0], 0.0, 1e-15);
    EXPECT_NEAR(c.a[1], 1.0, 1e-15);
    EXPECT_NEAR(c.b[0], 0.0, 1e-15);

    const DiscreteCoeffs c4 = fourier_lagrange_coeffs(single(4, 1.0, 0.0).sample_at_nodes(1), 1);
    EXPECT_NEAR(c4.a[0], 0.0, 1e-15);
    EXPECT_NEAR(c4.a[1], 1.0, 1e-15);
    EXPECT_NEAR(c4.b[0], 0.0, 1e-15);
    for (double x : {0.1, 1.0, 2.0, -3.0}) EXPECT_NEAR(eval_interpolant(c4, x), std::cos(x), 1e-15);
}

TEST(FourierLagrange, Constant) {
    for (int n : {1, 3, 9}) {
        const std::vector<double> ones(static_cast<std::size_t>(2 * n + 1), 1.0);
        const DiscreteCoeffs c = fourier_lagrange_coeffs(ones, n);
        EXPECT_NEAR(c.a[0], 2.0, 1e-15);
        for (std::size_t k = 1; k < c.a.size(); ++k) EXPECT_NEAR(c.a[k], 0.0, 1e-15);
        for (double b : c.b) EXPECT_NEAR(b, 0.0, 1e-15);
    }
}

TEST(FourierLagrange, WrongSampleCount) {
    EXPECT_THROW(fourier_lagrange_coeffs(std::vector<double>(4, 0.0), 1), ShapeError);
    EXPECT_THROW(fourier_lagrange_coeffs(std::vector<double>(3, 0.0), 0), ValidationError);
}

TEST(Interpolant, ReproducesSamplesAtNodes) {
    std::mt19937_64 engine(1);
    std::uniform_int_distribution<int> order(1, 20), degree(0, 40);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = order(engine);
        const TrigPolynomial f = random_poly(engine, static_cast<std::size_t>(degree(engine)));
        const auto samples = f.sample_at_nodes(n);
        const DiscreteCoeffs c = fourier_lagrange_coeffs(samples, n);
        const auto x = nodes(n);
        for (std::size_t i = 0; i < x.size(); ++i) {
            worst = std::max(worst, std::abs(eval_interpolant(c, x[i]) - samples[i]));
        }
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(Interpolant, ReproducesLowDegreePolynomials) {
    std::mt19937_64 engine(2);
    std::uniform_real_distribution<double> where(-10.0, 10.0);
    for (int n : {1, 4, 12}) {
        const TrigPolynomial f = random_poly(engine, static_cast<std::size_t>(n));
        const DiscreteCoeffs c = fourier_lagrange_coeffs(f.sample_at_nodes(n), n);
        for (int i = 0; i < 1000; ++i) {
            const double x = where(engine);
            EXPECT_NEAR(eval_interpolant(c, x), f(x), 1e-12);
        }
    }
}

TEST(AliasedCoeffs, Examples) {
    const DiscreteCoeffs c = aliased_coeffs(fourier_series(single(4, 1.0, 0.0)), 1, 1e-14);
    EXPECT_EQ(c.a[1], 1.0);
    EXPECT_EQ(c.a[0], 0.0);
    const DiscreteCoeffs s = aliased_coeffs(fourier_series(single(2, 0.0, 1.0)), 1, 1e-14);
    EXPECT_EQ(s.b[0], -1.0);
    const DiscreteCoeffs sampled = fourier_lagrange_coeffs(single(2, 0.0, 1.0).sample_at_nodes(1), 1);
    EXPECT_NEAR(sampled.b[0], -1.0, 1e-15);
}

TEST(AliasedCoeffs, LowDegreeUnchanged) {
    std::mt19937_64 engine(3);
    const TrigPolynomial f = random_poly(engine, 5);
    const DiscreteCoeffs c = aliased_coeffs(fourier_series(f), 5, 1e-14);
    EXPECT_EQ(c.a[0], f.a0());
    for (std::size_t k = 1; k <= 5; ++k) {
        EXPECT_EQ(c.a[k], f.cos_coeff(k));
        EXPECT_EQ(c.b[k - 1], f.sin_coeff(k));
    }
}

TEST(AliasedCoeffs, MatchSampledCoefficients) {
    std::mt19937_64 engine(4);
    std::uniform_int_distribution<int> order(1, 10);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = order(engine);
        std::uniform_int_distribution<int> degree(0, 10 * (2 * n + 1));
        const TrigPolynomial f = random_poly(engine, static_cast<std::size_t>(degree(engine)));
        EXPECT_LE(aliasing_gap(f, n), 1e-11);
    }
}

TEST(AliasedCoeffs, InfiniteSpectrumTruncation) {
    // f with a_k = 2^{-k}: the folded series converges geometrically.
    FourierSeries full{0.0,
                       [](std::int64_t k) { return std::pair{std::ldexp(1.0, -static_cast<int>(k)), 0.0}; },
                       [](std::int64_t K) { return std::ldexp(1.0, 1 - static_cast<int>(K)); }};
    const DiscreteCoeffs c = aliased_coeffs(full, 2, 1e-13);
    // a_0^{(2)} = 2 Σ_{m≥1} 2^{-5m} = 2/31
    EXPECT_NEAR(c.a[0], 2.0 / 31.0, 1e-13);
    FourierSeries stubborn{0.0, [](std::int64_t) { return std::pair{0.0, 0.0}; },
                           [](std::int64_t) { return 1.0; }};
    try {
        aliased_coeffs(stubborn, 1, 1e-3);
        FAIL();
    } catch (const TruncationError& e) {
        EXPECT_EQ(e.achieved_bound(), 1.0);
    }
}

TEST(SynthesizeF, Examples) {
    const double q = 0.5;
    const PsiSequence psi = PsiSequence::geometric(q);
    const TrigPolynomial phi = single(1, 1.0 / std::sqrt(pi), 0.0);

    const TrigPolynomial f0 = synthesize_f({0.0, phi, psi, BetaSequence::constant(0.0)}, 1);
    EXPECT_NEAR(f0.cos_coeff(1), q / std::sqrt(pi), 1e-16);
    EXPECT_EQ(f0.sin_coeff(1), 0.0);

    const TrigPolynomial f1 = synthesize_f({0.0, phi, psi, BetaSequence::constant(1.0)}, 1);
    EXPECT_EQ(f1.cos_coeff(1), 0.0);
    EXPECT_NEAR(f1.sin_coeff(1), q / std::sqrt(pi), 1e-16);

    const TrigPolynomial zero = synthesize_f({3.0, TrigPolynomial::zero(0), psi, BetaSequence::constant(0.0)}, 4);
    EXPECT_EQ(zero(0.7), 1.5);
}

TEST(SynthesizeF, MatchesNumericConvolution) {
    std::mt19937_64 engine(5);
    const PsiSequence psi = PsiSequence::power(1.3);
    const BetaSequence beta = random_beta(99);
    TrigPolynomial phi = random_poly(engine, 6);
    phi.set_a0(0.0);
    const double norm = phi.l2_norm();
    for (std::size_t k = 1; k <= 6; ++k) {
        phi.set_harmonic(k, phi.cos_coeff(k) / norm, phi.sin_coeff(k) / norm);
    }
    const TrigPolynomial f = synthesize_f({0.4, phi, psi, beta}, 6);
    for (double x : {-2.0, 0.0, 0.3, 1.7, 3.0}) {
        EXPECT_NEAR(f(x), 0.2 + numeric_convolution(phi, psi, beta, x, 64), 1e-14) << x;
    }
}

TEST(SynthesizeF, MembershipChecks) {
    const PsiSequence psi = PsiSequence::geometric(0.5);
    const BetaSequence beta = BetaSequence::constant(0.0);
    EXPECT_THROW(synthesize_f({0.0, single(1, 1.0, 0.0), psi, beta}, 1), ValidationError);
    TrigPolynomial with_mean = single(1, 0.1, 0.0);
    with_mean.set_a0(0.2);
    EXPECT_THROW(synthesize_f({0.0, with_mean, psi, beta}, 1), ValidationError);
    EXPECT_THROW(synthesize_f({0.0, single(3, 0.1, 0.0), psi, beta}, 2), ValidationError);
    EXPECT_NO_THROW(synthesize_f({0.0, single(1, 1.0, 0.0), psi, beta}, 1, MembershipCheck::skip));
}

TEST(SynthesizeF, Linear) {
    std::mt19937_64 engine(6);
    const PsiSequence psi = PsiSequence::power(0.9);
    const BetaSequence beta = random_beta(3);
    for (int trial = 0; trial < 20; ++trial) {
        const TrigPolynomial p = random_poly(engine, 12);
        const TrigPolynomial r = random_poly(engine, 12);
        const double alpha = 1.7;
        const double gamma = -0.4;
        std::vector<double> a(12), b(12);
        for (std::size_t k = 1; k <= 12; ++k) {
            a[k - 1] = alpha * p.cos_coeff(k) + gamma * r.cos_coeff(k);
            b[k - 1] = alpha * p.sin_coeff(k) + gamma * r.sin_coeff(k);
        }
        const auto skip = MembershipCheck::skip;
        const TrigPolynomial fp = synthesize_f({0.0, p, psi, beta}, 12, skip);
        const TrigPolynomial fr = synthesize_f({0.0, r, psi, beta}, 12, skip);
        const TrigPolynomial fc = synthesize_f({0.0, TrigPolynomial(0.0, a, b), psi, beta}, 12, skip);
        for (std::size_t k = 1; k <= 12; ++k) {
            EXPECT_NEAR(fc.cos_coeff(k), alpha * fp.cos_coeff(k) + gamma * fr.cos_coeff(k), 1e-14);
            EXPECT_NEAR(fc.sin_coeff(k), alpha * fp.sin_coeff(k) + gamma * fr.sin_coeff(k), 1e-14);
        }
    }
}

TEST(TrigPolynomial, ShapeAndNorm) {
    EXPECT_THROW(TrigPolynomial(0.0, {1.0}, {}), ShapeError);
    const TrigPolynomial p = single(2, 1.0, 0.0);
    EXPECT_NEAR(p.l2_norm(), std::sqrt(pi), 1e-15);
    EXPECT_EQ(p.cos_coeff(5), 0.0);
    TrigPolynomial q = p;
    EXPECT_THROW(q.set_harmonic(3, 1.0, 1.0), ShapeError);
}
