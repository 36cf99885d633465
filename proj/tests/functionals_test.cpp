#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "bohrlab/functionals.hpp"
#include "bohrlab/radii.hpp"
#include "bohrlab/witnesses.hpp"
#include "oracles.hpp"

using namespace bohrlab;

namespace
{

const double kThird = 1.0 / 3.0;

// Closed form of |f(-r)| + sum |a_k| r^k for (a - z)/(1 - a z).
double theorem5_closed_form(double a, double r)
{
    return 2.0 * (1.0 - a * a) * r / (1.0 - a * a * r * r) + a;
}

} // namespace

TEST(BohrSum, Values)
{
    EXPECT_DOUBLE_EQ(bohr_sum(identity_series(8), kThird), kThird);
    EXPECT_NEAR(bohr_sum(mobius_series(0.5), kThird), 0.8, 1e-15);
    for (int i = 0; i < 100; ++i) {
        const double a = i / 100.0;
        EXPECT_LE(bohr_sum(mobius_series(a), kThird), 1.0);
    }
    EXPECT_THROW(bohr_sum(identity_series(8), 1.0), std::domain_error);
}

TEST(RationalFirstTerm, MobiusExtremalIsIdenticallyOne)
{
    EXPECT_NEAR(corollary2_lhs(mobius_series(0.5), 0.5, kThird).value, 1.0, 1e-12);
    for (int i = 0; i < 20; ++i) {
        const double a = 0.05 * i;
        for (int j = 0; j <= 20; ++j) {
            const double r = kThird * j / 20.0;
            const Evaluation e = corollary2_lhs(extremal_corollary2(a), a, r);
            EXPECT_NEAR(e.value, 1.0, 1e-12) << "a=" << a << " r=" << r;
            EXPECT_EQ(e.truncation_bound, 0.0);
            EXPECT_FALSE(e.informational);
        }
    }
}

TEST(RationalFirstTerm, ZeroFunctionAndBeyondRadiusFlag)
{
    EXPECT_NEAR(corollary2_lhs(make_series({}), 0.0, kThird).value, 2.0 / 3.0, 1e-15);
    const Evaluation beyond = corollary2_lhs(mobius_series(0.5), 0.5, 0.4);
    EXPECT_TRUE(beyond.informational);
    EXPECT_THROW(corollary2_lhs(mobius_series(0.5), 1.0, 0.2), std::domain_error);
}

TEST(HarmonicRationalTerm, ExtremalIsIdenticallyOne)
{
    for (const double k : {0.0, 0.3, 0.7, 1.0}) {
        for (int i = 0; i < 10; ++i) {
            const double a = 0.09 * i;
            const HarmonicPair p = extremal_theorem3(a, k);
            for (int j = 0; j <= 10; ++j) {
                const double r = kThird * j / 10.0;
                EXPECT_NEAR(theorem3_lhs(p, a, r).value, 1.0, 1e-12);
            }
        }
    }
}

TEST(HarmonicRationalTerm, ReducesToAnalyticAtZeroDilatation)
{
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const TruncatedSeries h = random_bounded_at(rng, rng.uniform(0.0, 0.95));
        const double a = std::abs(h[0]);
        const HarmonicPair p = make_harmonic_pair(h, make_series({}), 0.0);
        for (const double r : {0.0, 0.1, 0.2, kThird}) {
            EXPECT_NEAR(theorem3_lhs(p, a, r).value, corollary2_lhs(h, a, r).value, 1e-14);
        }
    }
}

TEST(HarmonicRationalTerm, ZeroPairWithFullDilatation)
{
    const HarmonicPair p = make_harmonic_pair(make_series({}), make_series({}), 1.0);
    EXPECT_NEAR(theorem3_lhs(p, 0.0, kThird).value, kThird, 1e-15);
}

TEST(ModulusPlusMajorant, ExtremalMatchesClosedForm)
{
    for (int i = 0; i < 20; ++i) {
        const double a = 0.049 * i;
        const TruncatedSeries f = extremal_theorem5(a);
        for (int j = 0; j <= 20; ++j) {
            const double r = 0.5 * j / 20.0;
            const Evaluation e = theorem5_lhs(f, -r);
            const double direct = (r + a) / (1.0 + a * r) + r * (1.0 - a * a) / (1.0 - a * r);
            EXPECT_NEAR(e.value, direct, 1e-12);
            EXPECT_NEAR(e.value, theorem5_closed_form(a, r), 1e-12);
            EXPECT_LT(e.truncation_bound, 1e-15);
        }
    }
}

TEST(ModulusPlusMajorant, EqualsOneAtSharpRadius)
{
    for (const double a : {theorem5_threshold(), 0.5, 0.7, 0.9}) {
        const double ra = theorem5_radius(a).value;
        EXPECT_NEAR(theorem5_lhs(extremal_theorem5(a), -ra).value, 1.0, 1e-10);
    }
    EXPECT_NEAR(theorem5_lhs(identity_series(), 0.2).value, 0.4, 1e-16);
    EXPECT_THROW(theorem5_lhs(identity_series(), 1.0), std::domain_error);
}

TEST(HarmonicModulusPlusMajorant, ExtremalWithUnitLambda)
{
    for (const double a : {0.0, 0.3, 0.6}) {
        const HarmonicPair p = extremal_theorem3(a, 1.0);
        for (const double r : {0.1, 0.2, 0.3}) {
            const double expected = (r + a) / (1.0 + a * r) + 2.0 * r * (1.0 - a * a) / (1.0 - r * a);
            EXPECT_NEAR(theorem6_lhs(p, r).value, expected, 1e-14);
        }
    }
    const HarmonicPair zero = make_harmonic_pair(identity_series(), make_series({}), 0.0);
    EXPECT_NEAR(theorem6_lhs(zero, 0.1).value, 0.2, 1e-16);
}

TEST(HarmonicModulusPlusMajorant, ReducesToAnalyticWithoutCoanalyticPart)
{
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        const TruncatedSeries h = random_bounded_at(rng, 0.6);
        const HarmonicPair p = make_harmonic_pair(h, make_series({}), 0.0);
        const Complex z = std::polar(0.25, 0.3 * t);
        EXPECT_EQ(theorem6_lhs(p, z).value, theorem5_lhs(h, z).value);
    }
}

TEST(HarmonicTailBound, Values)
{
    EXPECT_NEAR(lemma2_bound(0.0, 1.0, 0.3), 0.6, 1e-15);
    EXPECT_NEAR(lemma2_bound(0.5, 0.0, kThird), 0.3, 1e-15);
    EXPECT_THROW(lemma2_bound(1.0, 0.0, 0.2), std::domain_error);
    EXPECT_THROW(lemma2_bound(0.5, 1.5, 0.2), std::domain_error);
    EXPECT_THROW(lemma2_bound(0.5, 0.5, 0.4), std::domain_error);
}

TEST(HarmonicTailBound, MatchesMobiusTailAtZeroDilatation)
{
    for (int i = 0; i < 20; ++i) {
        const double a = 0.05 * i;
        const TruncatedSeries m = mobius_series(a);
        for (const double r : {0.05, 0.2, kThird}) {
            EXPECT_NEAR(lemma2_bound(a, 0.0, r), m.tail()->majorant(r), 1e-15);
            EXPECT_NEAR(lemma2_bound(a, 0.0, r), oracle::majorant(oracle::mobius(a, 200), r, 1), 1e-14);
        }
    }
}

TEST(HarmonicTailBound, DominatesRandomHarmonicWitnesses)
{
    Rng rng(99);
    for (int t = 0; t < 100; ++t) {
        const double k = rng.uniform(0.0, 1.0);
        const TruncatedSeries h = random_bounded_at(rng, rng.uniform(0.0, 0.95));
        const HarmonicPair p = harmonic_witness(h, k, random_bounded(rng));
        const double a = std::abs(h[0]);
        const double sums = majorant_tail(p.h, kThird) + majorant_tail(p.g, kThird);
        EXPECT_LE(sums, lemma2_bound(a, k, kThird) + 1e-12);
    }
}

TEST(SchwarzPick, ValuesAndDomination)
{
    EXPECT_DOUBLE_EQ(schwarz_pick_bound(0.0, 0.3), 0.3);
    EXPECT_NEAR(schwarz_pick_bound(0.5, kThird), 5.0 / 7.0, 1e-15);
    EXPECT_THROW(schwarz_pick_bound(1.0, 0.3), std::domain_error);

    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        const double a = rng.uniform(0.0, 0.95);
        const TruncatedSeries f = random_bounded_at(rng, a);
        for (const double r : {0.1, 0.3, 0.6}) {
            for (int j = 0; j < 64; ++j) {
                const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / 64.0);
                EXPECT_LE(std::abs(f(z)), schwarz_pick_bound(a, r) + 1e-12);
            }
        }
    }
}

TEST(HarmonicPair, Validation)
{
    EXPECT_THROW(make_harmonic_pair(identity_series(), make_series({1.0}), 0.5), std::invalid_argument);
    EXPECT_THROW(make_harmonic_pair(identity_series(), make_series({}), 1.5), std::domain_error);
    EXPECT_THROW(make_harmonic_pair(identity_series(8), make_series({}, 9), 0.5), std::invalid_argument);
    EXPECT_NO_THROW(make_harmonic_pair(identity_series(), make_series({}), 1.0));
}

TEST(HarmonicPair, DilatationFromQuasiconformality)
{
    EXPECT_EQ(dilatation_from_quasiconformality(1.0), 0.0);
    EXPECT_NEAR(dilatation_from_quasiconformality(3.0), 0.5, 1e-16);
    EXPECT_THROW(dilatation_from_quasiconformality(0.5), std::domain_error);
}

TEST(ClassicalBohr, BlaschkeWitnessesAtOneThird)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        EXPECT_LE(bohr_sum(random_bounded(rng), kThird), 1.0 + 1e-9);
    }
}
