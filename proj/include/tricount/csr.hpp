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

// Compressed sparse row storage, edge lists, and the handful of sparse
// linear-algebra primitives the triangle counters are written in:
// SpGEMM over the integer-count semiring, its masked (fused) form, the
// Hadamard product, and the strict lower/upper split.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tricount/error.hpp"
#include "tricount/parallel.hpp"

namespace tricount {

using vertex_t = std::uint32_t;
using offset_t = std::uint64_t;
using count_t = std::uint64_t;

inline constexpr std::uint64_t kMaxIndex = std::numeric_limits<vertex_t>::max();

struct Edge {
  vertex_t u = 0;
  vertex_t v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raw vertex-pair records. May hold duplicates, self-loops and both
/// orientations until passed through canonicalize().
struct EdgeList {
  std::vector<Edge> edges;
  std::uint64_t num_vertices = 0;
  std::string name;

  std::size_t size() const noexcept { return edges.size(); }
  bool empty() const noexcept { return edges.empty(); }

  /// Throws MalformedInputError if an id is outside [0, num_vertices).
  void validate() const {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (e.u >= num_vertices || e.v >= num_vertices) {
        throw MalformedInputError("edge " + std::to_string(i) + " (" +
                                  std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") has a vertex id outside [0, " +
                                  std::to_string(num_vertices) + ")");
      }
    }
  }

  friend bool operator==(const EdgeList& a, const EdgeList& b) {
    return a.num_vertices == b.num_vertices && a.edges == b.edges;
  }
};

/// True when every edge has u < v, edges are strictly increasing
/// lexicographically (hence no duplicates) and ids are in range.
inline bool is_canonical(const EdgeList& list) {
  for (std::size_t i = 0; i < list.edges.size(); ++i) {
    const auto& e = list.edges[i];
    if (e.u >= e.v || e.v >= list.num_vertices) return false;
    if (i > 0 && !(list.edges[i - 1] < e)) return false;
  }
  return true;
}

/// Simple-graph normalization: drops self-loops, orients every edge u < v,
/// removes duplicates and sorts lexicographically. num_vertices and name are
/// kept.
inline EdgeList canonicalize(const EdgeList& in) {
  EdgeList out;
  out.num_vertices = in.num_vertices;
  out.name = in.name;
  out.edges.reserve(in.edges.size());
  for (const auto& e : in.edges) {
    if (e.u == e.v) continue;
    out.edges.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  return out;
}

/// Compressed sparse row matrix. A matrix with an empty `values` array is a
/// pattern matrix: every stored entry reads as 1.
class CsrMatrix {
 public:
  CsrMatrix() : row_offsets_(1, 0) {}

  /// Validating constructor; throws MalformedInputError on any invariant
  /// violation.
  CsrMatrix(std::uint64_t num_rows, std::uint64_t num_cols,
            std::vector<offset_t> row_offsets, std::vector<vertex_t> col_indices,
            std::vector<count_t> values = {})
      : num_rows_(num_rows),
        num_cols_(num_cols),
        row_offsets_(std::move(row_offsets)),
        col_indices_(std::move(col_indices)),
        values_(std::move(values)) {
    validate();
  }

  /// Skips validation. For kernels whose output is valid by construction.
  static CsrMatrix from_parts_unchecked(std::uint64_t num_rows, std::uint64_t num_cols,
                                        std::vector<offset_t> row_offsets,
                                        std::vector<vertex_t> col_indices,
                                        std::vector<count_t> values = {}) {
    CsrMatrix m;
    m.num_rows_ = num_rows;
    m.num_cols_ = num_cols;
    m.row_offsets_ = std::move(row_offsets);
    m.col_indices_ = std::move(col_indices);
    m.values_ = std::move(values);
    return m;
  }

  static CsrMatrix zeros(std::uint64_t num_rows, std::uint64_t num_cols) {
    return from_parts_unchecked(num_rows, num_cols,
                                std::vector<offset_t>(num_rows + 1, 0), {});
  }

  static CsrMatrix identity(std::uint64_t n) {
    std::vector<offset_t> offsets(n + 1);
    std::iota(offsets.begin(), offsets.end(), offset_t{0});
    std::vector<vertex_t> cols(n);
    std::iota(cols.begin(), cols.end(), vertex_t{0});
    return from_parts_unchecked(n, n, std::move(offsets), std::move(cols));
  }

  std::uint64_t num_rows() const noexcept { return num_rows_; }
  std::uint64_t num_cols() const noexcept { return num_cols_; }
  std::uint64_t nnz() const noexcept { return col_indices_.size(); }
  bool is_valued() const noexcept { return !values_.empty(); }

  std::span<const offset_t> row_offsets() const noexcept { return row_offsets_; }
  std::span<const vertex_t> col_indices() const noexcept { return col_indices_; }
  std::span<const count_t> values() const noexcept { return values_; }

  std::span<const vertex_t> row(std::uint64_t i) const noexcept {
    return std::span<const vertex_t>(col_indices_)
        .subspan(row_offsets_[i], row_offsets_[i + 1] - row_offsets_[i]);
  }

  std::uint64_t row_size(std::uint64_t i) const noexcept {
    return row_offsets_[i + 1] - row_offsets_[i];
  }

  /// Value of the stored entry at position `k` of col_indices.
  count_t value_at(offset_t k) const noexcept { return values_.empty() ? 1 : values_[k]; }

  /// Value of (i, j); 0 if not stored.
  count_t at(std::uint64_t i, std::uint64_t j) const noexcept {
    auto r = row(i);
    auto it = std::lower_bound(r.begin(), r.end(), j);
    if (it == r.end() || *it != j) return 0;
    return value_at(row_offsets_[i] + static_cast<offset_t>(it - r.begin()));
  }

  void validate() const {
    if (row_offsets_.size() != num_rows_ + 1) {
      throw MalformedInputError("row_offsets must have num_rows + 1 entries");
    }
    if (row_offsets_.front() != 0) throw MalformedInputError("row_offsets[0] must be 0");
    if (row_offsets_.back() != col_indices_.size()) {
      throw MalformedInputError("row_offsets[num_rows] must equal nnz");
    }
    if (!values_.empty() && values_.size() != col_indices_.size()) {
      throw MalformedInputError("values length must equal nnz");
    }
    if (!std::is_sorted(row_offsets_.begin(), row_offsets_.end())) {
      throw MalformedInputError("row_offsets must be non-decreasing");
    }
    for (std::uint64_t i = 0; i < num_rows_; ++i) {
      for (offset_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
        if (col_indices_[k] >= num_cols_) {
          throw MalformedInputError("column index out of range in row " + std::to_string(i));
        }
        if (k > row_offsets_[i] && col_indices_[k - 1] >= col_indices_[k]) {
          throw MalformedInputError("columns not strictly increasing in row " +
                                    std::to_string(i));
        }
      }
    }
    for (auto v : values_) {
      if (v == 0) throw MalformedInputError("stored values must be >= 1");
    }
  }

  /// Same entries regardless of representation (pattern vs all-ones values).
  friend bool operator==(const CsrMatrix& a, const CsrMatrix& b) {
    if (a.num_rows_ != b.num_rows_ || a.num_cols_ != b.num_cols_ ||
        a.row_offsets_ != b.row_offsets_ || a.col_indices_ != b.col_indices_) {
      return false;
    }
    for (offset_t k = 0; k < a.nnz(); ++k) {
      if (a.value_at(k) != b.value_at(k)) return false;
    }
    return true;
  }

 private:
  std::uint64_t num_rows_ = 0;
  std::uint64_t num_cols_ = 0;
  std::vector<offset_t> row_offsets_;
  std::vector<vertex_t> col_indices_;
  std::vector<count_t> values_;
};

inline std::uint64_t nnz(const CsrMatrix& m) noexcept { return m.nnz(); }

/// Exact total of stored values; pattern matrices sum as all-ones.
inline count_t sum_values(const CsrMatrix& m) noexcept {
  if (!m.is_valued()) return m.nnz();
  auto v = m.values();
  return std::accumulate(v.begin(), v.end(), count_t{0});
}

/// Undirected simple graph stored as a symmetric, zero-diagonal pattern
/// matrix. Construction either validates (from_csr) or goes through
/// adjacency_from_edges, which is correct by construction.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;

  /// Throws MalformedInputError unless `m` is square, pattern (or all-ones),
  /// symmetric and has an empty diagonal. All-ones values are dropped.
  static AdjacencyMatrix from_csr(CsrMatrix m) {
    m.validate();
    if (m.num_rows() != m.num_cols()) throw MalformedInputError("adjacency must be square");
    for (offset_t k = 0; k < m.nnz(); ++k) {
      if (m.value_at(k) != 1) throw MalformedInputError("adjacency must be pattern-only");
    }
    for (std::uint64_t i = 0; i < m.num_rows(); ++i) {
      for (auto j : m.row(i)) {
        if (j == i) throw MalformedInputError("adjacency has a self-loop at " + std::to_string(i));
        if (m.at(j, i) == 0) {
          throw MalformedInputError("adjacency is not symmetric at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
        }
      }
    }
    AdjacencyMatrix a;
    a.csr_ = CsrMatrix::from_parts_unchecked(
        m.num_rows(), m.num_cols(),
        std::vector<offset_t>(m.row_offsets().begin(), m.row_offsets().end()),
        std::vector<vertex_t>(m.col_indices().begin(), m.col_indices().end()));
    return a;
  }

  static AdjacencyMatrix adopt_unchecked(CsrMatrix m) {
    AdjacencyMatrix a;
    a.csr_ = std::move(m);
    return a;
  }

  const CsrMatrix& csr() const noexcept { return csr_; }
  std::uint64_t num_vertices() const noexcept { return csr_.num_rows(); }
  /// Undirected edge count, nnz / 2.
  std::uint64_t num_edges() const noexcept { return csr_.nnz() / 2; }
  std::uint64_t nnz() const noexcept { return csr_.nnz(); }
  std::span<const vertex_t> neighbors(std::uint64_t v) const noexcept { return csr_.row(v); }
  std::uint64_t degree(std::uint64_t v) const noexcept { return csr_.row_size(v); }

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

 private:
  CsrMatrix csr_;
};

inline void check_index_range(std::uint64_t n, const char* what) {
  if (n > kMaxIndex + 1) {
    throw SizeError(std::string(what) + " " + std::to_string(n) +
                    " exceeds the 32-bit index range");
  }
}

/// Symmetric CSR from a canonical edge list; nnz = 2 * edges.size().
inline AdjacencyMatrix adjacency_from_edges(const EdgeList& list) {
  list.validate();
  check_index_range(list.num_vertices, "vertex count");
  const std::uint64_t n = list.num_vertices;
  std::vector<offset_t> offsets(n + 1, 0);
  for (const auto& e : list.edges) {
    if (e.u == e.v) {
      throw MalformedInputError("self-loop at vertex " + std::to_string(e.u) +
                                "; canonicalize the edge list first");
    }
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<vertex_t> cols(offsets.back());
  std::vector<offset_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& e : list.edges) {
    cols[cursor[e.u]++] = e.v;
    cols[cursor[e.v]++] = e.u;
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    auto first = cols.begin() + static_cast<std::ptrdiff_t>(offsets[i]);
    auto last = cols.begin() + static_cast<std::ptrdiff_t>(offsets[i + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw MalformedInputError("duplicate edge at vertex " + std::to_string(i) +
                                "; canonicalize the edge list first");
    }
  }
  return AdjacencyMatrix::adopt_unchecked(
      CsrMatrix::from_parts_unchecked(n, n, std::move(offsets), std::move(cols)));
}

/// Canonical (u < v, lexicographic) edge list of an adjacency matrix.
inline EdgeList edges_from_adjacency(const AdjacencyMatrix& a, std::string name = {}) {
  EdgeList out;
  out.num_vertices = a.num_vertices();
  out.name = std::move(name);
  out.edges.reserve(a.num_edges());
  for (std::uint64_t u = 0; u < a.num_vertices(); ++u) {
    for (auto v : a.neighbors(u)) {
      if (v > u) out.edges.push_back({static_cast<vertex_t>(u), v});
    }
  }
  return out;
}

/// Renames vertex v to perm[v]. `perm` must be a permutation of
/// [0, num_vertices).
inline AdjacencyMatrix relabel(const AdjacencyMatrix& a, std::span<const vertex_t> perm) {
  if (perm.size() != a.num_vertices()) throw DimensionError("relabel: permutation size mismatch");
  std::vector<std::uint8_t> seen(perm.size(), 0);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw MalformedInputError("relabel: not a permutation");
    seen[p] = 1;
  }
  EdgeList moved;
  moved.num_vertices = a.num_vertices();
  moved.edges.reserve(a.num_edges());
  for (std::uint64_t u = 0; u < a.num_vertices(); ++u) {
    for (auto v : a.neighbors(u)) {
      if (v > u) moved.edges.push_back({perm[u], perm[v]});
    }
  }
  return adjacency_from_edges(canonicalize(moved));
}

/// Vertex-by-edge incidence matrix; column j holds the two endpoints of
/// edges[j].
inline CsrMatrix incidence_from_edges(const EdgeList& list) {
  list.validate();
  check_index_range(list.edges.size(), "edge count");
  const std::uint64_t n = list.num_vertices;
  std::vector<offset_t> offsets(n + 1, 0);
  for (std::size_t j = 0; j < list.edges.size(); ++j) {
    const auto& e = list.edges[j];
    if (e.u == e.v) {
      throw MalformedInputError("self-loop in edge " + std::to_string(j) +
                                " cannot form an incidence column");
    }
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<vertex_t> cols(offsets.back());
  std::vector<offset_t> cursor(offsets.begin(), offsets.end() - 1);
  // Edge indices are visited in increasing order, so rows come out sorted.
  for (std::size_t j = 0; j < list.edges.size(); ++j) {
    cols[cursor[list.edges[j].u]++] = static_cast<vertex_t>(j);
    cols[cursor[list.edges[j].v]++] = static_cast<vertex_t>(j);
  }
  return CsrMatrix::from_parts_unchecked(n, list.edges.size(), std::move(offsets),
                                         std::move(cols));
}

inline CsrMatrix transpose(const CsrMatrix& m) {
  check_index_range(m.num_rows(), "row count");
  std::vector<offset_t> offsets(m.num_cols() + 1, 0);
  for (auto j : m.col_indices()) ++offsets[j + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<vertex_t> cols(m.nnz());
  std::vector<count_t> vals(m.is_valued() ? m.nnz() : 0);
  std::vector<offset_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::uint64_t i = 0; i < m.num_rows(); ++i) {
    for (offset_t k = m.row_offsets()[i]; k < m.row_offsets()[i + 1]; ++k) {
      auto dst = cursor[m.col_indices()[k]]++;
      cols[dst] = static_cast<vertex_t>(i);
      if (m.is_valued()) vals[dst] = m.values()[k];
    }
  }
  return CsrMatrix::from_parts_unchecked(m.num_cols(), m.num_rows(), std::move(offsets),
                                         std::move(cols), std::move(vals));
}

namespace detail {

struct RowBlock {
  std::vector<offset_t> row_sizes;
  std::vector<vertex_t> cols;
  std::vector<count_t> vals;
};

inline CsrMatrix stitch(std::uint64_t num_rows, std::uint64_t num_cols,
                        std::vector<RowBlock>& blocks, bool valued) {
  std::vector<offset_t> offsets;
  offsets.reserve(num_rows + 1);
  offsets.push_back(0);
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.cols.size();
  std::vector<vertex_t> cols;
  std::vector<count_t> vals;
  cols.reserve(total);
  if (valued) vals.reserve(total);
  for (auto& b : blocks) {
    for (auto s : b.row_sizes) offsets.push_back(offsets.back() + s);
    cols.insert(cols.end(), b.cols.begin(), b.cols.end());
    if (valued) vals.insert(vals.end(), b.vals.begin(), b.vals.end());
    b = RowBlock{};
  }
  return CsrMatrix::from_parts_unchecked(num_rows, num_cols, std::move(offsets),
                                         std::move(cols), std::move(vals));
}

}  // namespace detail

/// C = A * B over (+, *) on unsigned counts; pattern inputs read as ones,
/// so on pattern operands C(i,j) is the number of k with A(i,k), B(k,j)
/// both stored. The result is always valued. Row-parallel Gustavson with a
/// dense accumulator per block; output is identical for every thread count.
inline CsrMatrix spgemm(const CsrMatrix& a, const CsrMatrix& b, unsigned threads = 1) {
  if (a.num_cols() != b.num_rows()) {
    throw DimensionError("spgemm: A is " + std::to_string(a.num_rows()) + "x" +
                         std::to_string(a.num_cols()) + " but B has " +
                         std::to_string(b.num_rows()) + " rows");
  }
  std::vector<detail::RowBlock> blocks(block_count(a.num_rows(), threads));
  for_each_block(a.num_rows(), threads, [&](std::size_t blk, std::size_t begin, std::size_t end) {
    auto& out = blocks[blk];
    out.row_sizes.reserve(end - begin);
    std::vector<count_t> acc(b.num_cols(), 0);
    std::vector<vertex_t> touched;
    for (std::size_t i = begin; i < end; ++i) {
      for (offset_t ka = a.row_offsets()[i]; ka < a.row_offsets()[i + 1]; ++ka) {
        const auto k = a.col_indices()[ka];
        const count_t av = a.value_at(ka);
        for (offset_t kb = b.row_offsets()[k]; kb < b.row_offsets()[k + 1]; ++kb) {
          const auto j = b.col_indices()[kb];
          if (acc[j] == 0) touched.push_back(j);
          acc[j] += av * b.value_at(kb);
        }
      }
      std::sort(touched.begin(), touched.end());
      for (auto j : touched) {
        out.cols.push_back(j);
        out.vals.push_back(acc[j]);
        acc[j] = 0;
      }
      out.row_sizes.push_back(touched.size());
      touched.clear();
    }
  });
  return detail::stitch(a.num_rows(), b.num_cols(), blocks, true);
}

/// Entry-wise product. Stored iff stored in both; value is the product of
/// values (pattern reads as 1). Pattern ∘ pattern stays pattern.
inline CsrMatrix hadamard(const CsrMatrix& a, const CsrMatrix& b) {
  if (a.num_rows() != b.num_rows() || a.num_cols() != b.num_cols()) {
    throw DimensionError("hadamard: shape mismatch");
  }
  const bool valued = a.is_valued() || b.is_valued();
  std::vector<offset_t> offsets(a.num_rows() + 1, 0);
  std::vector<vertex_t> cols;
  std::vector<count_t> vals;
  for (std::uint64_t i = 0; i < a.num_rows(); ++i) {
    offset_t pa = a.row_offsets()[i], ea = a.row_offsets()[i + 1];
    offset_t pb = b.row_offsets()[i], eb = b.row_offsets()[i + 1];
    while (pa < ea && pb < eb) {
      const auto ca = a.col_indices()[pa], cb = b.col_indices()[pb];
      if (ca < cb) {
        ++pa;
      } else if (cb < ca) {
        ++pb;
      } else {
        cols.push_back(ca);
        if (valued) vals.push_back(a.value_at(pa) * b.value_at(pb));
        ++pa;
        ++pb;
      }
    }
    offsets[i + 1] = cols.size();
  }
  return CsrMatrix::from_parts_unchecked(a.num_rows(), a.num_cols(), std::move(offsets),
                                         std::move(cols), std::move(vals));
}

/// Fused mask ∘ (A * B): only products landing on a stored entry of `mask`
/// are accumulated, so A * B is never materialized. Equal, entry for entry,
/// to hadamard(mask, spgemm(a, b)).
inline CsrMatrix masked_spgemm(const CsrMatrix& mask, const CsrMatrix& a, const CsrMatrix& b,
                               unsigned threads = 1) {
  if (a.num_cols() != b.num_rows()) throw DimensionError("masked_spgemm: inner dimension mismatch");
  if (mask.num_rows() != a.num_rows() || mask.num_cols() != b.num_cols()) {
    throw DimensionError("masked_spgemm: mask shape mismatch");
  }
  std::vector<detail::RowBlock> blocks(block_count(a.num_rows(), threads));
  for_each_block(a.num_rows(), threads, [&](std::size_t blk, std::size_t begin, std::size_t end) {
    auto& out = blocks[blk];
    out.row_sizes.reserve(end - begin);
    std::vector<count_t> acc(b.num_cols(), 0);
    std::vector<std::uint8_t> allowed(b.num_cols(), 0);
    for (std::size_t i = begin; i < end; ++i) {
      auto mrow = mask.row(i);
      if (mrow.empty()) {
        out.row_sizes.push_back(0);
        continue;
      }
      for (auto j : mrow) allowed[j] = 1;
      for (offset_t ka = a.row_offsets()[i]; ka < a.row_offsets()[i + 1]; ++ka) {
        const auto k = a.col_indices()[ka];
        const count_t av = a.value_at(ka);
        for (offset_t kb = b.row_offsets()[k]; kb < b.row_offsets()[k + 1]; ++kb) {
          const auto j = b.col_indices()[kb];
          if (allowed[j]) acc[j] += av * b.value_at(kb);
        }
      }
      std::size_t emitted = 0;
      for (offset_t km = mask.row_offsets()[i]; km < mask.row_offsets()[i + 1]; ++km) {
        const auto j = mask.col_indices()[km];
        if (acc[j] != 0) {
          out.cols.push_back(j);
          out.vals.push_back(mask.value_at(km) * acc[j]);
          ++emitted;
        }
        acc[j] = 0;
        allowed[j] = 0;
      }
      out.row_sizes.push_back(emitted);
    }
  });
  return detail::stitch(a.num_rows(), b.num_cols(), blocks, true);
}

struct TriangularParts {
  CsrMatrix lower;  // col < row
  CsrMatrix upper;  // col > row
};

/// Strictly lower and strictly upper parts of A in natural index order.
/// For an adjacency matrix upper == transpose(lower).
inline TriangularParts triangular_split(const AdjacencyMatrix& adj) {
  const auto& a = adj.csr();
  const std::uint64_t n = a.num_rows();
  std::vector<offset_t> lo(n + 1, 0), up(n + 1, 0);
  std::vector<vertex_t> lc, uc;
  lc.reserve(a.nnz() / 2);
  uc.reserve(a.nnz() / 2);
  for (std::uint64_t i = 0; i < n; ++i) {
    auto r = a.row(i);
    auto split = std::lower_bound(r.begin(), r.end(), i);
    lc.insert(lc.end(), r.begin(), split);
    // Diagonal is empty for a valid adjacency, so everything past `split`
    // is strictly upper.
    uc.insert(uc.end(), split, r.end());
    lo[i + 1] = lc.size();
    up[i + 1] = uc.size();
  }
  return {CsrMatrix::from_parts_unchecked(n, n, std::move(lo), std::move(lc)),
          CsrMatrix::from_parts_unchecked(n, n, std::move(up), std::move(uc))};
}

}  // namespace tricount
