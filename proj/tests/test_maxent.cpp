#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "optcode/error.hpp"
#include "optcode/maxent.hpp"
#include "optcode/reference.hpp"
#include "oracles.hpp"

using namespace optcode;
using namespace optcode::maxent;

namespace {

constexpr double kPi = std::numbers::pi;

// Values computed to 30 digits with mpmath.
constexpr double kZeta1_5 = 2.612375348685488343348567567924;
constexpr double kHurwitz2_1_5 = 0.934802200544679309417245499938;

}  // namespace

TEST(RiemannZeta, ClosedForms) {
  EXPECT_NEAR(riemann_zeta(2.0), kPi * kPi / 6.0, 1e-13);
  EXPECT_NEAR(riemann_zeta(4.0), std::pow(kPi, 4) / 90.0, 1e-13);
  EXPECT_NEAR(riemann_zeta(1.5), kZeta1_5, 1e-12);
  EXPECT_THROW(riemann_zeta(1.0), DomainError);
}

TEST(RiemannZeta, AgreesWithSummation) {
  for (double s : {1.1, 1.5, 2.5, 3.0, 7.0}) {
    EXPECT_NEAR(riemann_zeta(s), oracle::hurwitz_by_summation(s, 1.0), 1e-10) << s;
  }
}

TEST(HurwitzZeta, Values) {
  EXPECT_NEAR(hurwitz_zeta(2.0, 0.5), kPi * kPi / 2.0, 1e-12);
  EXPECT_NEAR(hurwitz_zeta(2.0, 1.5), kHurwitz2_1_5, 1e-12);
  for (double s : {1.2, 2.0, 3.3}) {
    for (double b : {0.1, 0.5, 1.0, 2.5, 40.0}) {
      EXPECT_NEAR(hurwitz_zeta(s, b), oracle::hurwitz_by_summation(s, b), 1e-9 * hurwitz_zeta(s, b))
          << s << " " << b;
    }
    EXPECT_NEAR(hurwitz_zeta(s, 1.0), riemann_zeta(s), 1e-10);
  }
  EXPECT_THROW(hurwitz_zeta(2.0, 0.0), DomainError);
}

TEST(FamilyPmfs, Examples) {
  EXPECT_NEAR(zeta_pmf(ZetaParams{2.0}, 1), 6.0 / (kPi * kPi), 1e-14);
  EXPECT_NEAR(zeta_pmf(ZetaParams{2.0}, 2), 1.5 / (kPi * kPi), 1e-14);
  EXPECT_NEAR(zipf_mandelbrot_pmf(ZipfMandelbrotParams{2.0, 0.5}, 1), 0.47544223172076499, 1e-13);
  EXPECT_DOUBLE_EQ(geometric_pmf(GeometricParams{0.5}, 1), 0.5);
  EXPECT_DOUBLE_EQ(geometric_pmf(GeometricParams{0.5}, 3), 0.125);
  EXPECT_THROW(ZetaParams{1.0}, DomainError);
  EXPECT_THROW((ZipfMandelbrotParams{2.0, 0.0}), DomainError);
  EXPECT_THROW(GeometricParams{1.0}, DomainError);
}

TEST(FamilyPmfs, ZipfMandelbrotWithUnitOffsetIsShiftedZeta) {
  // (i+1)^-a / zeta(a, 2) = zeta_pmf(i+1) / (1 - zeta_pmf(1)).
  for (double a : {1.5, 2.0, 3.0}) {
    const double head = zeta_pmf(ZetaParams{a}, 1);
    for (Rank i = 1; i <= 50; ++i) {
      EXPECT_NEAR(zipf_mandelbrot_pmf(ZipfMandelbrotParams{a, 1.0}, i),
                  zeta_pmf(ZetaParams{a}, i + 1) / (1.0 - head), 1e-12);
    }
  }
}

TEST(Normalization, LawsSumToOne) {
  const ZetaLaw zeta(ZetaParams{2.0});
  const ZipfMandelbrotLaw zm(ZipfMandelbrotParams{2.2, 3.0});
  const GeometricLaw geo(GeometricParams{0.2});
  for (const RankLaw* law : std::initializer_list<const RankLaw*>{&zeta, &zm, &geo}) {
    double head = 0.0;
    for (Rank i = 1000; i >= 1; --i) head += law->pmf(i);
    EXPECT_NEAR(head + law->survival(1000), 1.0, 1e-9);
    EXPECT_NEAR(law->survival(0), 1.0, 1e-12);
    EXPECT_NEAR(law->survival(3), law->survival(2) - law->pmf(3), 1e-12);
  }
}

TEST(Maxent, GeometricAndZetaIdentities) {
  for (double a : {0.1, 0.5, 1.0, 2.0}) {
    const MaxentSpec spec(a, LengthLaw::linear());
    const GeometricParams g{-std::expm1(-a)};
    for (Rank i = 1; i <= 100; ++i) EXPECT_NEAR(maxent_pmf(spec, i), geometric_pmf(g, i), 1e-12);
  }
  for (double a : {1.5, 2.0, 3.0}) {
    const MaxentSpec spec(a, LengthLaw::logarithmic(std::numbers::e));
    for (Rank i = 1; i <= 100; ++i) EXPECT_NEAR(maxent_pmf(spec, i), zeta_pmf(ZetaParams{a}, i), 1e-10);
  }
  const MaxentSpec half(std::log(2.0), LengthLaw::linear());
  EXPECT_NEAR(maxent_pmf(half, 1), 0.5, 1e-15);
  EXPECT_NEAR(maxent_pmf(half, 2), 0.25, 1e-15);
}

TEST(Maxent, LogarithmicBaseGivesEffectiveExponent) {
  const MaxentSpec spec(3.0, LengthLaw::logarithmic(2.0));
  const double s = effective_exponent(3.0, 2.0);
  for (Rank i = 1; i <= 20; ++i) EXPECT_NEAR(maxent_pmf(spec, i), zeta_pmf(ZetaParams{s}, i), 1e-10);
  EXPECT_THROW(partition_function(MaxentSpec(0.5, LengthLaw::logarithmic(std::numbers::e))), DomainError);
}

TEST(Maxent, TruncatedTendsToUniform) {
  const MaxentSpec spec(1e-9, LengthLaw::linear(), 3);
  for (Rank i = 1; i <= 3; ++i) EXPECT_NEAR(maxent_pmf(spec, i), 1.0 / 3.0, 1e-8);
  EXPECT_EQ(maxent_pmf(spec, 4), 0.0);
  const MaxentSpec custom(1.0, LengthLaw::custom([](Rank i) { return std::sqrt(double(i)); }), 50);
  double total = 0.0;
  for (Rank i = 1; i <= 50; ++i) total += maxent_pmf(custom, i);
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_THROW(partition_function(MaxentSpec(1.0, LengthLaw::custom([](Rank) { return 1.0; }))),
               DomainError);
}

TEST(Maxent, OptimalCodeLawMatchesDirectSum) {
  for (std::uint64_t n : {1u, 2u, 26u}) {
    const double a = n == 1 ? 0.7 : std::log(static_cast<double>(n)) + 0.4;
    const MaxentSpec spec(a, LengthLaw::optimal_code(n, 1));
    // Block sum: N^l strings of weight e^{-a l}.
    double z = 0.0;
    for (unsigned l = 200; l >= 1; --l) z += std::pow(double(n), l) * std::exp(-a * l);
    EXPECT_NEAR(partition_function(spec), z, 1e-12 * z);
    const MaxentLaw law(spec);
    double head = 0.0;
    for (Rank i = 2000; i >= 1; --i) head += law.pmf(i);
    EXPECT_NEAR(head + law.survival(2000), 1.0, 1e-9);
  }
}

TEST(Entropy, Examples) {
  const std::vector<double> uniform(8, 0.125);
  EXPECT_NEAR(entropy(uniform, EntropyUnit::bits).value, 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(entropy(std::vector<double>{1.0}).value, 0.0);
  const GeometricParams half{0.5};
  const auto h = entropy([&](Rank i) { return geometric_pmf(half, i); }, 60, EntropyUnit::bits);
  EXPECT_NEAR(h.value, 2.0, 1e-12);
  EXPECT_THROW(entropy([&](Rank i) { return geometric_pmf(half, i); }, 3), DomainError);
}

TEST(Sampler, FirstRankFrequencies) {
  const RankSampler geo(std::make_shared<GeometricLaw>(GeometricParams{0.5}));
  const auto g = geo.sample(3, 100000);
  const double g1 = double(std::count(g.begin(), g.end(), Rank{1})) / g.size();
  EXPECT_NEAR(g1, 0.5, 0.01);
  const RankSampler zeta(std::make_shared<ZetaLaw>(ZetaParams{2.0}));
  const auto z = zeta.sample(3, 100000);
  const double z1 = double(std::count(z.begin(), z.end(), Rank{1})) / z.size();
  EXPECT_NEAR(z1, 6.0 / (kPi * kPi), 0.01);
  EXPECT_EQ(zeta.sample(99, 1), zeta.sample(99, 1));
}

TEST(Sampler, InvertsBeyondTable) {
  const auto law = std::make_shared<ZetaLaw>(ZetaParams{1.3});
  const RankSampler small(law, 1e-12, 64);
  for (double v : {0.9, 0.5, 0.1, 1e-3, 1e-5}) {
    const Rank i = small.invert(v);
    EXPECT_LT(law->survival(i), v);
    if (i > 1) EXPECT_GE(law->survival(i - 1), v);
  }
  EXPECT_EQ(small.invert(1.0), 1u);
  // P(X > 2^63) is about 1.7e-6 here, so smaller v cannot be represented.
  EXPECT_EQ(small.invert(1e-9), RankSampler::kMaxRank);
}

TEST(Sampler, MatchesSerialReference) {
  const RankSampler s(std::make_shared<ZipfMandelbrotLaw>(ZipfMandelbrotParams{1.8, 2.0}));
  EXPECT_EQ(s.sample(5, 70000), reference::sample(s, 5, 70000));
}

TEST(Fit, RecoversGeneratingParameters) {
  const RankSampler geo(std::make_shared<GeometricLaw>(GeometricParams{0.3}));
  const auto gfit = fit_mle(RankCounts::from_samples(geo.sample(17, 100000)), Family::geometric);
  EXPECT_NEAR(gfit.param("q"), 0.3, 0.01);
  const RankSampler zeta(std::make_shared<ZetaLaw>(ZetaParams{2.0}));
  const auto zfit = fit_mle(RankCounts::from_samples(zeta.sample(17, 100000)), Family::zeta);
  EXPECT_NEAR(zfit.param("alpha"), 2.0, 0.05);
  EXPECT_FALSE(zfit.at_boundary);
}

TEST(Fit, ZetaFitMaximizesLikelihood) {
  const RankSampler zeta(std::make_shared<ZetaLaw>(ZetaParams{2.5}));
  const auto data = RankCounts::from_samples(zeta.sample(2, 20000));
  const auto fit = fit_mle(data, Family::zeta);
  const double a = fit.param("alpha");
  EXPECT_NEAR(fit.log_likelihood, log_likelihood(data, ZetaLaw(ZetaParams{a})), 1e-6);
  for (double d : {-0.01, 0.01}) {
    EXPECT_LT(log_likelihood(data, ZetaLaw(ZetaParams{a + d})), fit.log_likelihood);
  }
}

TEST(Fit, ZipfMandelbrotRecoversOffset) {
  const RankSampler zm(std::make_shared<ZipfMandelbrotLaw>(ZipfMandelbrotParams{2.0, 3.0}));
  const auto fit = fit_mle(RankCounts::from_samples(zm.sample(8, 200000)), Family::zipf_mandelbrot);
  EXPECT_NEAR(fit.param("alpha"), 2.0, 0.15);
  EXPECT_NEAR(fit.param("b"), 3.0, 1.0);
}

TEST(Fit, DegenerateInput) {
  EXPECT_THROW(fit_mle(RankCounts::from_frequencies(std::vector<std::uint64_t>{10}), Family::zeta),
               DomainError);
  EXPECT_EQ(family_from_string("zm"), Family::zipf_mandelbrot);
  EXPECT_THROW(family_from_string("lognormal"), DomainError);
}
