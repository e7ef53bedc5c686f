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

// Triangle counting kernels written as sparse linear algebra.
//
//   ae      P = A * E (adjacency times incidence). P(i, j) == 2 exactly when
//           vertex i is adjacent to both endpoints of edge j, i.e. i is the
//           apex over base edge j. Every triangle has three such
//           (apex, base) pairs:  n_t = |{P == 2}| / 3.
//   a2a     C = (A * A) o A.  Each triangle is a closed walk counted for
//           each of its 6 ordered vertex pairs:  n_t = sum(C) / 6.
//   lu      B = L * U with the strict lower/upper split, C = A o B.
//           B(i, j) counts common neighbors k < min(i, j), so a triangle
//           is seen through its smallest vertex, once at (i, j) and once
//           at (j, i):  n_t = sum(C) / 2.
//   oracle  sorted-neighbor intersection over edges u < v, keeping
//           common neighbors w > v.
//
// Every reduction is checked to be exact; a remainder means the inputs
// were not a valid adjacency / incidence pair.

#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tricount/csr.hpp"
#include "tricount/error.hpp"
#include "tricount/parallel.hpp"

namespace tricount {

enum class Algorithm { kAe, kA2a, kLu, kOracle };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::kAe, Algorithm::kA2a, Algorithm::kLu,
                                              Algorithm::kOracle};

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kAe:
      return "ae";
    case Algorithm::kA2a:
      return "a2a";
    case Algorithm::kLu:
      return "lu";
    case Algorithm::kOracle:
      return "oracle";
  }
  return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (auto a : kAllAlgorithms) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

struct TriangleCount {
  count_t n_t = 0;
  Algorithm algorithm = Algorithm::kOracle;
  double kernel_seconds = 0.0;
  double aux_seconds = 0.0;  // incidence build (ae) or triangular split (lu)
};

struct KernelOptions {
  unsigned threads = 1;
  /// Compute the a2a / lu masked products with masked_spgemm instead of
  /// materializing the full product and then applying the Hadamard mask.
  bool fused = true;
  /// Relabel vertices by ascending degree before the lu split. Off by
  /// default: the reference formulation uses natural index order.
  bool degree_order = false;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

inline count_t exact_div(count_t total, count_t divisor, const char* what) {
  if (total % divisor != 0) {
    throw ConsistencyError(std::string(what) + " = " + std::to_string(total) +
                           " is not divisible by " + std::to_string(divisor));
  }
  return total / divisor;
}

inline CsrMatrix masked_product(const CsrMatrix& mask, const CsrMatrix& a, const CsrMatrix& b,
                                const KernelOptions& opt) {
  if (opt.fused) return masked_spgemm(mask, a, b, opt.threads);
  return hadamard(mask, spgemm(a, b, opt.threads));
}

}  // namespace detail

/// Number of stored entries of `m` whose value equals `value`.
inline std::uint64_t count_values_equal(const CsrMatrix& m, count_t value) {
  std::uint64_t hits = 0;
  for (offset_t k = 0; k < m.nnz(); ++k) hits += (m.value_at(k) == value);
  return hits;
}

/// Adjacency-times-incidence count. `incidence` must be built from the
/// same canonical edge set as `adj`.
inline TriangleCount count_ae(const AdjacencyMatrix& adj, const CsrMatrix& incidence,
                              const KernelOptions& opt = {}) {
  if (incidence.num_rows() != adj.num_vertices() || incidence.num_cols() != adj.num_edges()) {
    throw DimensionError("count_ae: incidence is " + std::to_string(incidence.num_rows()) + "x" +
                         std::to_string(incidence.num_cols()) + ", expected " +
                         std::to_string(adj.num_vertices()) + "x" +
                         std::to_string(adj.num_edges()));
  }
  TriangleCount r;
  r.algorithm = Algorithm::kAe;
  const auto start = detail::Clock::now();
  const CsrMatrix hits = spgemm(adj.csr(), incidence, opt.threads);
  const std::uint64_t apexes = count_values_equal(hits, 2);
  r.n_t = detail::exact_div(apexes, 3, "nnz(C) for ae");
  r.kernel_seconds = detail::seconds_since(start);
  return r;
}

/// As above, building the incidence matrix from `adj` (timed as aux).
inline TriangleCount count_ae(const AdjacencyMatrix& adj, const KernelOptions& opt = {}) {
  const auto start = detail::Clock::now();
  const CsrMatrix incidence = incidence_from_edges(edges_from_adjacency(adj));
  const double aux = detail::seconds_since(start);
  auto r = count_ae(adj, incidence, opt);
  r.aux_seconds = aux;
  return r;
}

inline TriangleCount count_a2a(const AdjacencyMatrix& adj, const KernelOptions& opt = {}) {
  TriangleCount r;
  r.algorithm = Algorithm::kA2a;
  const auto start = detail::Clock::now();
  const auto& a = adj.csr();
  const CsrMatrix c = detail::masked_product(a, a, a, opt);
  r.n_t = detail::exact_div(sum_values(c), 6, "sum(C) for a2a");
  r.kernel_seconds = detail::seconds_since(start);
  return r;
}

/// Vertex order by ascending degree, ties by id: perm[v] is v's new label.
inline std::vector<vertex_t> degree_ordering(const AdjacencyMatrix& adj) {
  std::vector<vertex_t> order(adj.num_vertices());
  std::iota(order.begin(), order.end(), vertex_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](vertex_t x, vertex_t y) { return adj.degree(x) < adj.degree(y); });
  std::vector<vertex_t> perm(order.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) perm[order[rank]] = static_cast<vertex_t>(rank);
  return perm;
}

namespace detail {

inline count_t lu_masked_sum(const AdjacencyMatrix& adj, const TriangularParts& parts,
                             const KernelOptions& opt) {
  return sum_values(masked_product(adj.csr(), parts.lower, parts.upper, opt));
}

}  // namespace detail

inline TriangleCount count_lu(const AdjacencyMatrix& adj, const KernelOptions& opt = {}) {
  TriangleCount r;
  r.algorithm = Algorithm::kLu;
  auto start = detail::Clock::now();
  std::optional<AdjacencyMatrix> reordered;
  if (opt.degree_order) reordered = relabel(adj, degree_ordering(adj));
  const AdjacencyMatrix& a = reordered ? *reordered : adj;
  const TriangularParts parts = triangular_split(a);
  r.aux_seconds = detail::seconds_since(start);
  start = detail::Clock::now();
  r.n_t = detail::exact_div(detail::lu_masked_sum(a, parts, opt), 2, "sum(C) for lu");
  r.kernel_seconds = detail::seconds_since(start);
  return r;
}

/// Reference count by merge intersection of sorted neighbor lists.
inline TriangleCount count_oracle(const AdjacencyMatrix& adj, unsigned threads = 1) {
  TriangleCount r;
  r.algorithm = Algorithm::kOracle;
  const auto start = detail::Clock::now();
  const std::uint64_t n = adj.num_vertices();
  std::vector<count_t> partial(block_count(n, threads), 0);
  for_each_block(n, threads, [&](std::size_t blk, std::size_t begin, std::size_t end) {
    count_t local = 0;
    for (std::size_t u = begin; u < end; ++u) {
      const auto nu = adj.neighbors(u);
      for (auto v : nu) {
        if (v <= u) continue;
        const auto nv = adj.neighbors(v);
        // Only w > v, so each triangle u < v < w is seen once.
        auto pu = std::upper_bound(nu.begin(), nu.end(), v);
        auto pv = std::upper_bound(nv.begin(), nv.end(), v);
        while (pu != nu.end() && pv != nv.end()) {
          if (*pu < *pv) {
            ++pu;
          } else if (*pv < *pu) {
            ++pv;
          } else {
            ++local;
            ++pu;
            ++pv;
          }
        }
      }
    }
    partial[blk] = local;
  });
  r.n_t = std::accumulate(partial.begin(), partial.end(), count_t{0});
  r.kernel_seconds = detail::seconds_since(start);
  return r;
}

/// The triangles themselves as sorted vertex triples (u < v < w). Test and
/// inspection use only; output grows with n_t.
inline std::vector<std::array<vertex_t, 3>> enumerate_triangles(const AdjacencyMatrix& adj) {
  std::vector<std::array<vertex_t, 3>> out;
  for (std::uint64_t u = 0; u < adj.num_vertices(); ++u) {
    const auto nu = adj.neighbors(u);
    for (auto v : nu) {
      if (v <= u) continue;
      const auto nv = adj.neighbors(v);
      std::vector<vertex_t> common;
      std::set_intersection(std::upper_bound(nu.begin(), nu.end(), v), nu.end(),
                            std::upper_bound(nv.begin(), nv.end(), v), nv.end(),
                            std::back_inserter(common));
      for (auto w : common) out.push_back({static_cast<vertex_t>(u), v, w});
    }
  }
  return out;
}

inline TriangleCount count_triangles(const AdjacencyMatrix& adj, Algorithm algorithm,
                                     const KernelOptions& opt = {}) {
  switch (algorithm) {
    case Algorithm::kAe:
      return count_ae(adj, opt);
    case Algorithm::kA2a:
      return count_a2a(adj, opt);
    case Algorithm::kLu:
      return count_lu(adj, opt);
    case Algorithm::kOracle:
      return count_oracle(adj, opt.threads);
  }
  throw DomainError("unknown algorithm");
}

}  // namespace tricount
