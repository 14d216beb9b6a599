#include <cmath>
#include <cstdint>
#include <random>

#include <gtest/gtest.h>

#include "trigerr/kernel.hpp"

using namespace trigerr;

TEST(PsiSequence, GeometricValues) {
    const PsiSequence psi = make_psi(PsiFamily::geometric, 0.5);
    EXPECT_DOUBLE_EQ(psi(3), 0.125);
    EXPECT_DOUBLE_EQ(psi.squared(3), 0.015625);
    EXPECT_EQ(psi.family(), PsiFamily::geometric);
    EXPECT_EQ(psi.param(), 0.5);
}

TEST(PsiSequence, PowerValues) {
    const PsiSequence psi = make_psi(PsiFamily::power, 1.0);
    EXPECT_DOUBLE_EQ(psi(4), 0.25);
    EXPECT_DOUBLE_EQ(psi.squared(4), 0.0625);
}

TEST(PsiSequence, RejectsOutOfRangeParameters) {
    for (double q : {0.0, 1.0, -0.3, 1.5, std::nan("")}) {
        try {
            make_psi(PsiFamily::geometric, q);
            FAIL() << "accepted q = " << q;
        } catch (const ValidationError& e) {
            EXPECT_STREQ(e.what(), "q must lie in (0,1)");
        }
    }
    EXPECT_THROW(make_psi(PsiFamily::power, 0.5), ValidationError);
    EXPECT_THROW(make_psi(PsiFamily::power, 0.2), ValidationError);
    EXPECT_THROW(make_psi(PsiFamily::custom, 1.0), ValidationError);
}

TEST(TailBound, GeometricIsExact) {
    const PsiSequence psi = PsiSequence::geometric(0.5);
    EXPECT_NEAR(tail_bound(psi, 3), 1.0 / 48.0, 4 * std::ldexp(1.0 / 48.0, -52));
    for (double q : {0.1, 0.3, 0.5, 0.9, 0.99}) {
        const PsiSequence p = PsiSequence::geometric(q);
        for (std::int64_t K : {1, 2, 7, 40}) {
            const double exact = std::pow(q, 2.0 * K) / (1.0 - q * q);
            EXPECT_LE(std::abs(tail_bound(p, K) - exact), 4.0 * (std::nextafter(exact, 2.0 * exact) - exact)) << q << " " << K;
        }
    }
}

TEST(TailBound, PowerBracketsTrueTail) {
    const PsiSequence psi = PsiSequence::power(1.0);
    const double bound = tail_bound(psi, 10);
    // Σ_{k≥10} k^{-2} = 0.10516633568168574...
    EXPECT_GE(bound, 0.10516633568168574);
    EXPECT_LE(bound, 0.11);
}

TEST(TailBound, DominatesLongPartialSums) {
    for (const PsiSequence& psi :
         {PsiSequence::geometric(0.3), PsiSequence::geometric(0.95), PsiSequence::power(0.51),
          PsiSequence::power(0.75), PsiSequence::power(1.0), PsiSequence::power(3.0)}) {
        for (std::int64_t K : {1, 2, 3, 10, 99, 1000, 10000}) {
            double partial = 0.0;
            for (std::int64_t k = K + 1'000'000; k >= K; --k) partial += psi.squared(k);
            EXPECT_GE(tail_bound(psi, K), partial) << to_string(psi.family()) << " K=" << K;
        }
    }
}

TEST(TailBound, NonIncreasing) {
    for (const PsiSequence& psi : {PsiSequence::geometric(0.7), PsiSequence::power(0.8)}) {
        for (std::int64_t K = 1; K < 500; ++K) EXPECT_LE(psi.tail(K + 1), psi.tail(K));
    }
    EXPECT_THROW(tail_bound(PsiSequence::power(1.0), 0), ValidationError);
}

TEST(PsiSequence, ProgressionSumsMatchBruteForce) {
    for (const PsiSequence& psi : {PsiSequence::geometric(0.8), PsiSequence::power(1.5)}) {
        for (auto [start, stride] : {std::pair<std::int64_t, std::int64_t>{1, 1}, {4, 7}, {30, 41}}) {
            const auto est = psi.progression_sum(start, stride);
            ASSERT_TRUE(est.has_value());
            const std::int64_t terms = 2'000'000;
            double brute = 0.0;
            for (std::int64_t m = terms - 1; m >= 0; --m) brute += psi.squared(start + m * stride);
            // Σ_{m≥terms} ψ²(start + m·stride) ≤ ∫ from start + (terms-1)·stride, divided by stride.
            const double last = static_cast<double>(start + (terms - 1) * stride);
            const double rest = psi.family() == PsiFamily::power
                                    ? 1.0 / (2.0 * static_cast<double>(stride) * last * last)
                                    : 0.0;
            EXPECT_GE(est->value, brute - est->error - 1e-15);
            EXPECT_LE(est->value, brute + rest + est->error + 1e-15);
        }
    }
}

TEST(PsiSequence, CustomNeedsDominatingTail) {
    auto eval = [](std::int64_t k) { return 1.0 / static_cast<double>(k); };
    auto good = [](std::int64_t K) { return 2.0 / static_cast<double>(K); };
    auto bad = [](std::int64_t K) { return 0.1 / static_cast<double>(K * K); };
    const PsiSequence psi = PsiSequence::custom(eval, good);
    EXPECT_EQ(psi.family(), PsiFamily::custom);
    EXPECT_FALSE(psi.param().has_value());
    EXPECT_DOUBLE_EQ(psi(5), 0.2);
    EXPECT_FALSE(psi.progression_sum(1, 3).has_value());
    EXPECT_THROW(PsiSequence::custom(eval, bad), ValidationError);
    EXPECT_THROW(PsiSequence::custom(eval, nullptr), ValidationError);
}

TEST(ParsePsi, AcceptsBothFamilies) {
    EXPECT_EQ(parse_psi("geometric:q=0.25").param(), 0.25);
    EXPECT_EQ(parse_psi("power:r=1.5").family(), PsiFamily::power);
    EXPECT_EQ(parse_psi("power:r=+2").param(), 2.0);
}

TEST(ParsePsi, RejectsMalformed) {
    for (const char* s : {"", "geometric", "geometric:r=0.5", "poisson:q=0.5", "power:r=",
                          "power:r=1x", "geometric:q=1.5"}) {
        EXPECT_THROW(parse_psi(s), ValidationError) << s;
    }
}

TEST(KernelHarmonic, PhaseExamples) {
    const PsiSequence psi = PsiSequence::geometric(0.5);
    const KernelHarmonic h0 = kernel_harmonic(psi, BetaSequence::constant(0.0), 2);
    EXPECT_EQ(h0.cos_coeff, 0.25);
    EXPECT_EQ(h0.sin_coeff, 0.0);
    const KernelHarmonic h1 = kernel_harmonic(psi, BetaSequence::constant(1.0), 2);
    EXPECT_EQ(h1.cos_coeff, 0.0);
    EXPECT_EQ(h1.sin_coeff, 0.25);
    const KernelHarmonic h3 = kernel_harmonic(psi, BetaSequence::constant(-1.0), 1);
    EXPECT_EQ(h3.sin_coeff, -0.5);
    EXPECT_THROW(kernel_harmonic(psi, BetaSequence::constant(0.0), 0), ValidationError);
}

TEST(KernelHarmonic, PreservesAmplitude) {
    std::mt19937_64 engine(7);
    std::uniform_real_distribution<double> phase(-10.0, 10.0);
    std::uniform_int_distribution<std::int64_t> index(1, 5000);
    const PsiSequence psi = PsiSequence::power(0.8);
    for (int i = 0; i < 1000; ++i) {
        const double beta = phase(engine);
        const std::int64_t k = index(engine);
        const KernelHarmonic h = kernel_harmonic(psi, BetaSequence::constant(beta), k);
        const double amp = h.cos_coeff * h.cos_coeff + h.sin_coeff * h.sin_coeff;
        EXPECT_LE(std::abs(amp - psi.squared(k)), 1e-14 * psi.squared(k));
    }
}
