// Copyright 2026 The tricount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "tricount/model_fit.hpp"

namespace tricount {
namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

std::vector<FitPoint> sample(double n1, double beta, std::vector<double> grid) {
  std::vector<FitPoint> pts;
  for (double ne : grid) pts.push_back({ne, std::pow(ne / n1, beta)});
  return pts;
}

TEST(FitPowerLaw, RecoversStateOfTheArtModel) {
  auto pts = sample(1e8, 4.0 / 3.0, {1e4, 1e5, 1e6, 1e7, 1e8, 1e9});
  auto fit = fit_power_law(pts);
  EXPECT_NEAR(fit.beta, 4.0 / 3.0, 1e-9);
  EXPECT_LT(rel(fit.n1, 1e8), 1e-6);
  EXPECT_EQ(fit.num_points, 6u);
  EXPECT_LT(fit.residual_rms, 1e-12);
  EXPECT_FALSE(fit.snapped);
}

TEST(FitPowerLaw, TwoPointLine) {
  const std::vector<FitPoint> pts = {{10, 10}, {100, 100}};
  auto fit = fit_power_law(pts);
  EXPECT_NEAR(fit.alpha, 1.0, 1e-12);
  EXPECT_NEAR(fit.beta, 1.0, 1e-12);
  EXPECT_NEAR(fit.n1, 1.0, 1e-12);
}

TEST(FitPowerLaw, RecoversPearceRow) {
  auto pts = sample(2e8, 4.0 / 3.0, {1e6, 1e7, 1e8, 1e9, 1e10, 1e11, 2.7e11});
  auto fit = fit_power_law(pts);
  EXPECT_LT(rel(fit.n1, 2e8), 1e-6);
  EXPECT_NEAR(fit.beta, 4.0 / 3.0, 1e-9);
}

TEST(FitPowerLaw, Errors) {
  EXPECT_THROW(fit_power_law(std::vector<FitPoint>{{10, 1}}), UnderdeterminedError);
  EXPECT_THROW(fit_power_law(std::vector<FitPoint>{{10, 1}, {10, 2}}), UnderdeterminedError);
  EXPECT_THROW(fit_power_law(std::vector<FitPoint>{}), UnderdeterminedError);
  EXPECT_THROW(fit_power_law(std::vector<FitPoint>{{10, 1}, {0, 2}}), DomainError);
  EXPECT_THROW(fit_power_law(std::vector<FitPoint>{{10, 1}, {100, -2}}), DomainError);
  // Decreasing time with size gives a negative exponent.
  EXPECT_THROW(fit_power_law(std::vector<FitPoint>{{10, 2}, {100, 1}}), DomainError);
}

TEST(FitPowerLaw, MinNeFilter) {
  // Small graphs follow a different law; the filter keeps only the tail.
  auto pts = sample(1e8, 4.0 / 3.0, {1e6, 1e7, 1e8, 1e9});
  pts.push_back({1e3, 1e-2});
  pts.push_back({1e4, 1e-2});
  FitOptions opt;
  opt.min_ne = 1e6;
  auto fit = fit_power_law(pts, opt);
  EXPECT_EQ(fit.num_points, 4u);
  EXPECT_NEAR(fit.beta, 4.0 / 3.0, 1e-9);
  EXPECT_GT(std::abs(fit_power_law(pts).beta - 4.0 / 3.0), 0.1);
  opt.min_ne = 1e9;
  EXPECT_THROW(fit_power_law(pts, opt), UnderdeterminedError);
}

TEST(FitPowerLaw, SnapToExponentGrid) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> noise(0.0, 0.02);
  std::vector<FitPoint> pts;
  for (double ne = 1e5; ne <= 1e10; ne *= 3) pts.push_back({ne, std::pow(ne / 5e7, 1.3) * std::pow(10.0, noise(rng))});
  FitOptions opt;
  opt.snap = true;
  auto fit = fit_power_law(pts, opt);
  EXPECT_TRUE(fit.snapped);
  EXPECT_EQ(fit.beta, 4.0 / 3.0);
  EXPECT_NEAR(fit.n1, normalize(fit.alpha, fit.beta), 1e-12 * fit.n1);
  // With beta fixed, the refit intercept zeroes the mean log residual.
  double mean_residual = 0.0;
  for (const auto& p : pts) mean_residual += std::log10(p.t_tri) - std::log10(fit.alpha) - fit.beta * std::log10(p.n_e);
  EXPECT_NEAR(mean_residual / pts.size(), 0.0, 1e-12);
  EXPECT_EQ(nearest_snap_exponent(0.2), 1.0);
  EXPECT_EQ(nearest_snap_exponent(1.6), 5.0 / 3.0);
  EXPECT_EQ(nearest_snap_exponent(2.5), 5.0 / 3.0);
}

TEST(FitPowerLaw, ExactRecoveryProperty) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> log_alpha(-14.0, -2.0), beta_dist(0.5, 2.0);
  for (int rep = 0; rep < 200; ++rep) {
    const double alpha = std::pow(10.0, log_alpha(rng)), beta = beta_dist(rng);
    std::vector<FitPoint> pts;
    for (double ne = 1e3; ne <= 1e10; ne *= 10) pts.push_back({ne, alpha * std::pow(ne, beta)});
    auto fit = fit_power_law(pts);
    ASSERT_LT(rel(fit.beta, beta), 1e-9);
    ASSERT_LT(rel(fit.n1, normalize(alpha, beta)), 1e-6);
    ASSERT_LT(rel(fit.n1, normalize(fit.alpha, fit.beta)), 1e-12);
  }
}

TEST(FitPowerLaw, ScaleEquivariance) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> jitter(0.5, 2.0);
  std::vector<FitPoint> pts;
  for (double ne = 1e4; ne <= 1e9; ne *= 7) pts.push_back({ne, 1e-9 * std::pow(ne, 1.2) * jitter(rng)});
  const auto base = fit_power_law(pts);
  for (double c : {1e-3, 0.5, 3.0, 1e4}) {
    auto scaled = pts;
    for (auto& p : scaled) p.t_tri *= c;
    const auto fit = fit_power_law(scaled);
    EXPECT_NEAR(fit.beta, base.beta, 1e-9);
    EXPECT_LT(rel(fit.alpha, base.alpha * c), 1e-9);
  }
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(1.0, 4.0 / 3.0), 1.0);
  EXPECT_EQ(normalize(1.0, 1.0), 1.0);
  EXPECT_LT(rel(normalize(0.25, 1.0), 4.0), 1e-15);
  const double alpha = std::pow(2e8, -4.0 / 3.0);
  EXPECT_LT(rel(normalize(alpha, 4.0 / 3.0), 2e8), 1e-12);
  EXPECT_THROW(normalize(1.0, 0.0), DomainError);
  EXPECT_THROW(normalize(0.0, 1.0), DomainError);
}

TEST(Normalize, IdentityRoundTrip) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> log_alpha(-15.0, 0.0), beta_dist(0.5, 2.0);
  for (int rep = 0; rep < 500; ++rep) {
    const double alpha = std::pow(10.0, log_alpha(rng)), beta = beta_dist(rng);
    EXPECT_LT(rel(alpha_from_n1(normalize(alpha, beta), beta), alpha), 1e-12);
  }
}

TEST(EvaluateTime, Examples) {
  const auto soa = state_of_the_art();
  EXPECT_EQ(evaluate_time(soa, 1e8), 1.0);
  for (const auto& r : reference_table()) EXPECT_EQ(evaluate_time(r, r.n1), 1.0);
  // Hutchison row at its largest graph, frozen from a 50-digit evaluation of
  // (1.6e7 / 3e4)^(5/3).
  const ReferenceModel hutchison{"Hutchison-UWash-2017", 3e4, 5.0 / 3.0, 1.6e7};
  EXPECT_LT(rel(evaluate_time(hutchison, 1.6e7), 35075.016168255574776769583), 1e-12);
  EXPECT_THROW(evaluate_time(soa, 0.0), DomainError);
}

TEST(EvaluateRate, Examples) {
  const auto soa = state_of_the_art();
  EXPECT_LT(rel(evaluate_rate(soa, 1e8), 1e8), 1e-12);
  EXPECT_LT(rel(evaluate_rate(soa, 8e8), 0.5e8), 1e-12);
  for (const auto& r : reference_table()) EXPECT_LT(rel(evaluate_rate(r, r.n1), r.n1), 1e-12);
}

TEST(EvaluateRate, TimesTimeIsEdges) {
  for (const auto& r : reference_table()) {
    for (double ne = 1e3; ne < 1e12; ne *= 3.7) {
      EXPECT_LT(rel(evaluate_rate(r, ne) * evaluate_time(r, ne), ne), 1e-12) << r.label;
    }
  }
  PowerLawFit fit{1e-10, 1.2, normalize(1e-10, 1.2), 0.0, 2, false};
  EXPECT_LT(rel(evaluate_rate(fit, 1e7) * evaluate_time(fit, 1e7), 1e7), 1e-12);
}

TEST(ReferenceTable, Rows) {
  const auto rows = reference_table();
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows[1].label, "Pearce-LLNL-2017");
  EXPECT_EQ(rows[1].max_ne, 2.7e11);
  EXPECT_EQ(rows[1].n1, 2e8);
  EXPECT_EQ(rows[1].beta, 4.0 / 3.0);
  EXPECT_EQ(rows[5].label, "Smith-UMN-2017");
  EXPECT_EQ(rows[5].n1, 1e6);
  EXPECT_EQ(rows[5].beta, 1.0);
  EXPECT_EQ(rows.back().label, "state-of-the-art");
  EXPECT_EQ(rows.back().n1, 1e8);
}

TEST(LogGrid, EndpointsAndSpacing) {
  auto g = log_grid(1e4, 1e11, 8);
  ASSERT_EQ(g.size(), 8u);
  EXPECT_EQ(g.front(), 1e4);
  EXPECT_EQ(g.back(), 1e11);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(rel(g[i] / g[i - 1], 10.0), 1e-12);
  EXPECT_EQ(log_grid(5.0, 50.0, 1), std::vector<double>{5.0});
  EXPECT_THROW(log_grid(0.0, 1.0, 3), DomainError);
  EXPECT_THROW(log_grid(10.0, 1.0, 3), DomainError);
  EXPECT_THROW(log_grid(1.0, 10.0, 0), DomainError);
}

TEST(Compare, FitEqualToSoaHasUnitRatios) {
  PowerLawFit fit{alpha_from_n1(1e8, 4.0 / 3.0), 4.0 / 3.0, 1e8, 0.0, 6, false};
  const auto grid = log_grid(1e4, 1e11, 8);
  auto table = compare(fit, {}, grid);
  ASSERT_EQ(table.series.size(), 1u);
  for (const auto& p : table.series[0].points) EXPECT_NEAR(p.time_ratio_to_soa, 1.0, 1e-12);
}

TEST(Compare, SlowerFitRatio) {
  PowerLawFit fit{alpha_from_n1(1e7, 4.0 / 3.0), 4.0 / 3.0, 1e7, 0.0, 6, false};
  const std::vector<double> grid = {1e3, 1e6, 1e9};
  auto table = compare(fit, {}, grid);
  for (const auto& p : table.series[0].points) {
    EXPECT_LT(rel(p.time_ratio_to_soa, std::pow(10.0, 4.0 / 3.0)), 1e-12);
  }
}

TEST(Compare, ReferenceTableOnTwoPointGrid) {
  const auto refs = reference_table();
  const std::vector<double> grid = {1e6, 1e8};
  auto table = compare(std::nullopt, refs, grid);
  ASSERT_EQ(table.series.size(), 12u);
  for (const auto& s : table.series) EXPECT_EQ(s.points.size(), 2u);
  EXPECT_EQ(table.series.back().points[1].time_s, 1.0);
  EXPECT_THROW(compare(std::nullopt, refs, std::vector<double>{}), DomainError);
}

}  // namespace
}  // namespace tricount
