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

// Synthetic graphs for edge-count sweeps: deterministic Kronecker powers of
// a seed graph and seeded Erdos-Renyi G(n, p).

#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tricount/csr.hpp"
#include "tricount/error.hpp"
#include "tricount/graph_io.hpp"

namespace tricount {

/// Name of the pseudo-random engine behind erdos_renyi. std::mt19937_64 is
/// fully specified by the standard, so sequences match across platforms;
/// the unit-interval mapping below is done by hand for the same reason.
inline constexpr const char* kRngName = "mt19937_64";

struct GenLimits {
  std::uint64_t max_vertices = std::uint64_t{1} << 24;
  std::uint64_t max_nnz = std::uint64_t{1} << 28;
};

/// k-fold Kronecker product of `seed` with itself, diagonal removed.
/// The product of symmetric patterns is symmetric, and a zero-diagonal
/// seed gives a zero-diagonal product, so the result is a valid adjacency
/// matrix with num_vertices(seed)^k vertices.
inline AdjacencyMatrix kronecker_power(const AdjacencyMatrix& seed, int k,
                                       const GenLimits& limits = {}) {
  if (k < 1) throw DomainError("kronecker power must be >= 1");
  const std::uint64_t n0 = seed.num_vertices();
  std::uint64_t n = 1, nz = 1;
  for (int i = 0; i < k; ++i) {
    if (n0 != 0 && n > limits.max_vertices / n0) {
      throw SizeError("kronecker power " + std::to_string(k) + " of a " + std::to_string(n0) +
                      "-vertex seed exceeds the vertex cap " + std::to_string(limits.max_vertices));
    }
    n *= n0;
    if (seed.nnz() != 0 && nz > limits.max_nnz / seed.nnz()) {
      throw SizeError("kronecker power " + std::to_string(k) + " exceeds the nnz cap " +
                      std::to_string(limits.max_nnz));
    }
    nz *= seed.nnz();
  }
  if (n > limits.max_vertices) throw SizeError("kronecker result exceeds the vertex cap");
  check_index_range(n, "kronecker vertex count");

  const CsrMatrix& s = seed.csr();
  CsrMatrix cur = s;
  for (int step = 1; step < k; ++step) {
    const std::uint64_t rows = cur.num_rows() * n0;
    std::vector<offset_t> offsets(rows + 1, 0);
    std::vector<vertex_t> cols;
    cols.reserve(cur.nnz() * s.nnz());
    for (std::uint64_t i1 = 0; i1 < cur.num_rows(); ++i1) {
      for (std::uint64_t i2 = 0; i2 < n0; ++i2) {
        const std::uint64_t row = i1 * n0 + i2;
        for (auto j1 : cur.row(i1)) {
          for (auto j2 : s.row(i2)) {
            const std::uint64_t col = std::uint64_t{j1} * n0 + j2;
            if (col != row) cols.push_back(static_cast<vertex_t>(col));
          }
        }
        offsets[row + 1] = cols.size();
      }
    }
    cur = CsrMatrix::from_parts_unchecked(rows, rows, std::move(offsets), std::move(cols));
  }
  return AdjacencyMatrix::adopt_unchecked(std::move(cur));
}

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::string erdos_renyi_name(std::uint64_t n, double p, std::uint64_t rng_seed) {
  std::ostringstream name;
  name << "er-n" << n << "-p" << p << "-s" << rng_seed;
  return name.str();
}

/// G(n, p): each unordered pair {u, v} is kept independently with
/// probability p, visiting pairs in (u, v) lexicographic order with one
/// engine draw per pair. The output is canonical.
inline EdgeList erdos_renyi(std::uint64_t n, double p, std::uint64_t rng_seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("erdos_renyi: p must lie in [0, 1]");
  check_index_range(n, "vertex count");
  EdgeList out;
  out.num_vertices = n;
  out.name = erdos_renyi_name(n, p, rng_seed);
  std::mt19937_64 rng(rng_seed);
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = u + 1; v < n; ++v) {
      if (unit_uniform(rng) < p) {
        out.edges.push_back({static_cast<vertex_t>(u), static_cast<vertex_t>(v)});
      }
    }
  }
  return out;
}

enum class GenKind { kKroneckerPower, kErdosRenyi };

struct GenSpec {
  GenKind kind = GenKind::kErdosRenyi;
  EdgeList seed_graph;  // kronecker
  int power = 1;        // kronecker
  std::uint64_t n = 0;  // erdos-renyi
  double p = 0.0;       // erdos-renyi
  std::uint64_t rng_seed = 0;

  void validate() const {
    if (kind == GenKind::kKroneckerPower && power < 1) throw DomainError("power must be >= 1");
    if (kind == GenKind::kErdosRenyi && !(p >= 0.0 && p <= 1.0)) {
      throw DomainError("p must lie in [0, 1]");
    }
  }

  /// One-line `key=value` description, written as a comment header next to
  /// generated edge lists.
  std::string describe() const {
    std::ostringstream out;
    if (kind == GenKind::kKroneckerPower) {
      out << "generator=kronecker-power seed_graph=" << (seed_graph.name.empty() ? "-" : seed_graph.name)
          << " seed_vertices=" << seed_graph.num_vertices << " seed_edges=" << seed_graph.size()
          << " power=" << power;
    } else {
      out << "generator=erdos-renyi n=" << n << " p=" << p << " rng=" << kRngName
          << " rng_seed=" << rng_seed;
    }
    return out.str();
  }
};

/// Canonical edge list for `spec`.
inline EdgeList generate(const GenSpec& spec, const GenLimits& limits = {}) {
  spec.validate();
  if (spec.kind == GenKind::kErdosRenyi) return erdos_renyi(spec.n, spec.p, spec.rng_seed);
  auto seed = adjacency_from_edges(canonicalize(spec.seed_graph));
  auto name = (spec.seed_graph.name.empty() ? std::string("seed") : spec.seed_graph.name) +
              "-kron" + std::to_string(spec.power);
  return edges_from_adjacency(kronecker_power(seed, spec.power, limits), name);
}

/// Edge list text with the spec recorded on a leading comment line.
inline std::string write_generated(const EdgeList& edges, const GenSpec& spec,
                                   const TsvDialect& dialect = {}) {
  std::ostringstream out;
  const char prefix = dialect.comment_prefixes.empty() ? '#' : dialect.comment_prefixes.front();
  out << prefix << ' ' << spec.describe() << '\n';
  write_tsv(edges, dialect, out);
  return out.str();
}

}  // namespace tricount
