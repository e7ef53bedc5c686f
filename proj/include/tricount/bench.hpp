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

// Timed trials of the counting kernels. One untimed warm-up, then `trials`
// timed runs; the record keeps the minimum and median trial time and the
// edge rate n_e / median.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tricount/csr.hpp"
#include "tricount/error.hpp"
#include "tricount/tri_algos.hpp"

namespace tricount {

struct MeasurementRecord {
  std::string graph_name;
  std::string algorithm;
  std::uint64_t num_vertices = 0;
  std::uint64_t n_e = 0;  // undirected edges
  std::uint64_t nnz = 0;  // stored entries of A, 2 * n_e
  std::uint64_t trials = 0;
  double time_s_min = 0.0;
  double time_s_median = 0.0;
  double rate_eps = 0.0;
  bool include_aux = false;
  count_t n_t = 0;
  /// Median below ten clock ticks; not serialized to CSV.
  bool low_confidence = false;

  friend bool operator==(const MeasurementRecord&, const MeasurementRecord&) = default;
};

/// Middle order statistic for odd sizes, mean of the two middle values for
/// even sizes. Throws DomainError on empty input.
inline double median(std::span<const double> xs) {
  if (xs.empty()) throw DomainError("median of an empty sample");
  std::vector<double> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

/// Smallest observable step of steady_clock, measured once.
inline double clock_resolution_seconds() {
  static const double resolution = [] {
    using Clock = std::chrono::steady_clock;
    Clock::duration best = Clock::duration::max();
    for (int i = 0; i < 200; ++i) {
      const auto t0 = Clock::now();
      auto t1 = Clock::now();
      while (t1 == t0) t1 = Clock::now();
      best = std::min(best, t1 - t0);
    }
    return std::chrono::duration<double>(best).count();
  }();
  return resolution;
}

struct BenchOptions {
  std::uint64_t trials = 1;
  bool include_aux = false;
  /// Cross-check every n_t against count_oracle.
  bool verify = false;
  KernelOptions kernel;
};

inline MeasurementRecord run_benchmark(const AdjacencyMatrix& adj, const std::string& graph_name,
                                       Algorithm algorithm, const BenchOptions& opt = {}) {
  if (opt.trials < 1) throw DomainError("trials must be >= 1");
  MeasurementRecord rec;
  rec.graph_name = graph_name;
  rec.algorithm = std::string(to_string(algorithm));
  rec.num_vertices = adj.num_vertices();
  rec.n_e = adj.num_edges();
  rec.nnz = adj.nnz();
  rec.trials = opt.trials;
  rec.include_aux = opt.include_aux;

  const count_t expected = count_triangles(adj, algorithm, opt.kernel).n_t;  // warm-up
  std::vector<double> times;
  times.reserve(opt.trials);
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    const auto r = count_triangles(adj, algorithm, opt.kernel);
    if (r.n_t != expected) {
      throw NondeterminismError(rec.algorithm + " on " + graph_name + ": trial " +
                                std::to_string(t) + " counted " + std::to_string(r.n_t) +
                                " triangles, warm-up counted " + std::to_string(expected));
    }
    times.push_back(r.kernel_seconds + (opt.include_aux ? r.aux_seconds : 0.0));
  }
  rec.n_t = expected;
  if (opt.verify) {
    const auto check = count_oracle(adj, opt.kernel.threads).n_t;
    if (check != expected) {
      throw ConsistencyError(rec.algorithm + " on " + graph_name + " counted " +
                             std::to_string(expected) + " triangles, oracle counted " +
                             std::to_string(check));
    }
  }
  rec.time_s_min = *std::min_element(times.begin(), times.end());
  rec.time_s_median = median(times);
  rec.rate_eps = rec.n_e == 0 ? 0.0 : static_cast<double>(rec.n_e) / rec.time_s_median;
  rec.low_confidence = rec.time_s_median < 10.0 * clock_resolution_seconds();
  return rec;
}

/// One graph of a sweep. `load` runs lazily so a failing input only costs
/// its own records.
struct SweepGraph {
  std::string name;
  std::function<AdjacencyMatrix()> load;
};

struct SweepEntry {
  std::string graph_name;
  std::string algorithm;
  std::optional<MeasurementRecord> record;
  std::string error;  // set iff record is empty

  bool ok() const noexcept { return record.has_value(); }
};

/// graphs x algorithms in order; per-graph and per-run failures become
/// error entries instead of aborting the sweep.
inline std::vector<SweepEntry> sweep(const std::vector<SweepGraph>& graphs,
                                     std::span<const Algorithm> algorithms,
                                     const BenchOptions& opt = {}) {
  if (graphs.empty() || algorithms.empty()) throw DomainError("sweep needs graphs and algorithms");
  std::vector<SweepEntry> out;
  out.reserve(graphs.size() * algorithms.size());
  for (const auto& g : graphs) {
    std::optional<AdjacencyMatrix> adj;
    std::string load_error;
    try {
      adj = g.load();
    } catch (const std::exception& e) {
      load_error = e.what();
    }
    for (auto algo : algorithms) {
      SweepEntry entry{g.name, std::string(to_string(algo)), std::nullopt, load_error};
      if (adj) {
        try {
          entry.record = run_benchmark(*adj, g.name, algo, opt);
        } catch (const std::exception& e) {
          entry.error = e.what();
        }
      }
      out.push_back(std::move(entry));
    }
  }
  return out;
}

}  // namespace tricount
