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

// Power-law execution-time models T = alpha * N_e^beta, their normalized
// form T = (N_e / N1)^beta with N1 = alpha^(-1/beta), least-squares fits
// in log10-log10 space, and the published reference coefficients.

#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tricount/error.hpp"

namespace tricount {

class UnderdeterminedError : public Error {
 public:
  using Error::Error;
};

/// Anything with a normalized (n1, beta) pair.
template <typename M>
concept PowerLawModel = requires(const M& m) {
  { m.n1 } -> std::convertible_to<double>;
  { m.beta } -> std::convertible_to<double>;
};

struct PowerLawFit {
  double alpha = 0.0;         // seconds per N_e^beta
  double beta = 0.0;
  double n1 = 0.0;            // edges processed in one second
  double residual_rms = 0.0;  // RMS of log10 residuals
  std::uint64_t num_points = 0;
  bool snapped = false;
};

struct ReferenceModel {
  std::string label;
  double n1 = 0.0;
  double beta = 0.0;
  double max_ne = 0.0;
};

struct FitPoint {
  double n_e = 0.0;
  double t_tri = 0.0;
};

struct FitOptions {
  /// Replace the fitted exponent by the nearest of {1, 4/3, 5/3} and refit
  /// alpha with the exponent held fixed.
  bool snap = false;
  /// Points with n_e below this are ignored.
  double min_ne = 0.0;
};

inline constexpr std::array<double, 3> kSnapExponents = {1.0, 4.0 / 3.0, 5.0 / 3.0};

/// N1 = alpha^(-1/beta).
inline double normalize(double alpha, double beta) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  if (beta == 0.0 || !std::isfinite(beta)) throw DomainError("beta must be finite and non-zero");
  return std::pow(alpha, -1.0 / beta);
}

/// Inverse of normalize: alpha = N1^(-beta).
inline double alpha_from_n1(double n1, double beta) {
  if (!(n1 > 0.0)) throw DomainError("n1 must be positive");
  return std::pow(n1, -beta);
}

inline double nearest_snap_exponent(double beta) {
  double best = kSnapExponents[0];
  for (double b : kSnapExponents) {
    if (std::abs(b - beta) < std::abs(best - beta)) best = b;
  }
  return best;
}

inline PowerLawFit fit_power_law(std::span<const FitPoint> points, const FitOptions& opt = {}) {
  std::vector<double> xs, ys;
  for (const auto& p : points) {
    if (p.n_e < opt.min_ne) continue;
    if (!(p.n_e > 0.0) || !(p.t_tri > 0.0)) {
      throw DomainError("power-law fit needs positive n_e and t_tri");
    }
    xs.push_back(std::log10(p.n_e));
    ys.push_back(std::log10(p.t_tri));
  }
  const std::size_t n = xs.size();
  double x_mean = 0.0, y_mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x_mean += xs[i];
    y_mean += ys[i];
  }
  if (n > 0) {
    x_mean /= static_cast<double>(n);
    y_mean /= static_cast<double>(n);
  }
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
    sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
  }
  if (n < 2 || sxx == 0.0) {
    throw UnderdeterminedError("power-law fit needs at least two distinct n_e values, got " +
                               std::to_string(n) + " usable points");
  }

  PowerLawFit fit;
  fit.num_points = n;
  fit.beta = sxy / sxx;
  if (opt.snap) {
    fit.beta = nearest_snap_exponent(fit.beta);
    fit.snapped = true;
  }
  // With beta fixed, the least-squares intercept is the mean residual; for
  // the unsnapped slope this is the ordinary OLS intercept.
  const double log_alpha = y_mean - fit.beta * x_mean;
  if (!(fit.beta > 0.0)) {
    throw DomainError("fitted exponent " + std::to_string(fit.beta) + " is not positive");
  }
  fit.alpha = std::pow(10.0, log_alpha);
  fit.n1 = std::pow(10.0, -log_alpha / fit.beta);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (log_alpha + fit.beta * xs[i]);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / static_cast<double>(n));
  return fit;
}

/// (n_e / n1)^beta seconds.
template <PowerLawModel M>
double evaluate_time(const M& model, double n_e) {
  if (!(n_e > 0.0)) throw DomainError("n_e must be positive");
  return std::pow(n_e / model.n1, model.beta);
}

/// Edges per second, n_e / evaluate_time.
template <PowerLawModel M>
double evaluate_rate(const M& model, double n_e) {
  return n_e / evaluate_time(model, n_e);
}

inline ReferenceModel state_of_the_art() {
  // max_ne has no published value for this row; the largest graph among the
  // reference submissions is used so plots span the same range.
  return {"state-of-the-art", 1e8, 4.0 / 3.0, 2.7e11};
}

/// Published per-submission coefficients for large N_e, followed by the
/// state-of-the-art row.
inline std::vector<ReferenceModel> reference_table() {
  return {
      {"Bisson-Nvidia-2017", 3e7, 4.0 / 3.0, 1.5e9},
      {"Pearce-LLNL-2017", 2e8, 4.0 / 3.0, 2.7e11},
      {"Voegele-UTAustin-2017", 3e7, 4.0 / 3.0, 1.8e9},
      {"Wolf-Sandia-2017", 3e7, 4.0 / 3.0, 1.8e9},
      {"Hu-GWU-2017", 5e7, 4.0 / 3.0, 3.4e10},
      {"Smith-UMN-2017", 1e6, 1.0, 1.2e9},
      {"Tom-UMN-2017", 5e7, 1.0, 1.8e9},
      {"Date-UIUC-2017", 3e6, 4.0 / 3.0, 2.6e8},
      {"Hutchison-UWash-2017", 3e4, 5.0 / 3.0, 1.6e7},
      {"Low-CMU-2017", 1e8, 1.0, 1.8e9},
      {"Mowlaei-UPitt-2017", 5e7, 1.0, 1.8e9},
      state_of_the_art(),
  };
}

/// `points` values log-spaced over [lo, hi], endpoints included.
inline std::vector<double> log_grid(double lo, double hi, std::size_t points) {
  if (!(lo > 0.0) || !(hi >= lo)) throw DomainError("grid needs 0 < lo <= hi");
  if (points == 0) throw DomainError("grid needs at least one point");
  if (points == 1) return {lo};
  std::vector<double> grid(points);
  const double a = std::log10(lo), b = std::log10(hi);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

struct ComparisonPoint {
  double n_e = 0.0;
  double time_s = 0.0;
  double rate_eps = 0.0;
  double time_ratio_to_soa = 0.0;  // time_s / state-of-the-art time
};

struct ModelSeries {
  std::string label;
  double n1 = 0.0;
  double beta = 0.0;
  bool is_fit = false;
  std::vector<ComparisonPoint> points;
};

struct ComparisonTable {
  std::vector<double> grid;
  std::vector<ModelSeries> series;
};

namespace detail {

template <PowerLawModel M>
ModelSeries make_series(std::string label, const M& model, std::span<const double> grid,
                        bool is_fit) {
  const auto soa = state_of_the_art();
  ModelSeries s{std::move(label), model.n1, model.beta, is_fit, {}};
  s.points.reserve(grid.size());
  for (double ne : grid) {
    const double t = evaluate_time(model, ne);
    s.points.push_back({ne, t, ne / t, t / evaluate_time(soa, ne)});
  }
  return s;
}

}  // namespace detail

/// Evaluates every reference (and the fit, when given, as the last series)
/// on `grid`.
inline ComparisonTable compare(const std::optional<PowerLawFit>& fit,
                               std::span<const ReferenceModel> refs, std::span<const double> grid,
                               const std::string& fit_label = "fit") {
  if (grid.empty()) throw DomainError("comparison grid is empty");
  ComparisonTable table;
  table.grid.assign(grid.begin(), grid.end());
  for (const auto& r : refs) table.series.push_back(detail::make_series(r.label, r, grid, false));
  if (fit) table.series.push_back(detail::make_series(fit_label, *fit, grid, true));
  return table;
}

}  // namespace tricount
