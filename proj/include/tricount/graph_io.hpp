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

// Tab-separated edge-list files:
//
//   line    = int ws int [ws int] '\n'
//   ws      = one tab (strict) | any run of spaces/tabs (lenient)
//   comment = line starting with one of the comment prefixes
//
// Integers are unsigned base-10 ASCII. The optional third column is a
// weight; it is validated and discarded.

#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tricount/csr.hpp"
#include "tricount/error.hpp"

namespace tricount {

struct TsvDialect {
  /// Exactly one tab between fields when set; any run of blanks otherwise.
  bool strict_tabs = false;
  int index_base = 1;
  /// Governs output only: write_tsv appends a weight of 1 when set. A
  /// third input column is always accepted.
  bool has_weight_column = true;
  std::string comment_prefixes = "#%";

  void validate() const {
    if (index_base != 0 && index_base != 1) throw DomainError("index_base must be 0 or 1");
  }
};

struct ParseStats {
  std::uint64_t lines = 0;       // every line read, including comments
  std::uint64_t data_lines = 0;  // lines that produced an edge
};

namespace detail {

inline bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

inline std::uint64_t parse_field(std::string_view field, std::size_t line_no) {
  if (field.empty()) throw ParseError(line_no, "empty field");
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line_no, "integer out of range: '" + std::string(field) + "'");
  }
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line_no, "not an unsigned integer: '" + std::string(field) + "'");
  }
  return value;
}

inline void split_fields(std::string_view line, bool strict, std::size_t line_no,
                         std::vector<std::string_view>& out) {
  out.clear();
  if (strict) {
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      out.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    return;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_blank(line[j])) ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  (void)line_no;
}

}  // namespace detail

/// Streams `in` line by line into an edge list. Ids are shifted down by
/// index_base and num_vertices is max id + 1. Line order is preserved.
inline EdgeList parse_tsv(std::istream& in, const TsvDialect& dialect = {},
                          ParseStats* stats = nullptr) {
  dialect.validate();
  EdgeList out;
  std::uint64_t max_id = 0;
  bool any = false;
  std::string line;
  std::vector<std::string_view> fields;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    while (!view.empty() && detail::is_blank(view.back())) view.remove_suffix(1);
    if (view.empty()) continue;
    if (dialect.comment_prefixes.find(view.front()) != std::string::npos) continue;
    detail::split_fields(view, dialect.strict_tabs, line_no, fields);
    if (fields.size() < 2) throw ParseError(line_no, "expected at least two fields");
    if (fields.size() > 3) throw ParseError(line_no, "expected at most three fields");
    std::uint64_t ids[2];
    for (int f = 0; f < 2; ++f) {
      const auto raw = detail::parse_field(fields[f], line_no);
      if (raw < static_cast<std::uint64_t>(dialect.index_base)) {
        throw ParseError(line_no, "vertex id " + std::to_string(raw) +
                                      " is negative after shifting by index base " +
                                      std::to_string(dialect.index_base));
      }
      ids[f] = raw - dialect.index_base;
      if (ids[f] >= kMaxIndex) {
        throw ParseError(line_no, "vertex id " + std::to_string(raw) + " exceeds 32-bit range");
      }
    }
    if (fields.size() == 3) detail::parse_field(fields[2], line_no);
    out.edges.push_back({static_cast<vertex_t>(ids[0]), static_cast<vertex_t>(ids[1])});
    max_id = std::max({max_id, ids[0], ids[1]});
    any = true;
  }
  if (in.bad()) throw IoError("read error after line " + std::to_string(line_no));
  out.num_vertices = any ? max_id + 1 : 0;
  if (stats) {
    stats->lines = line_no;
    stats->data_lines = out.edges.size();
  }
  return out;
}

inline EdgeList parse_tsv(std::string_view text, const TsvDialect& dialect = {},
                          ParseStats* stats = nullptr) {
  std::istringstream in{std::string(text)};
  return parse_tsv(in, dialect, stats);
}

inline void write_tsv(const EdgeList& edges, const TsvDialect& dialect, std::ostream& out) {
  dialect.validate();
  const std::uint64_t base = static_cast<std::uint64_t>(dialect.index_base);
  for (const auto& e : edges.edges) {
    out << (e.u + base) << '\t' << (e.v + base);
    if (dialect.has_weight_column) out << "\t1";
    out << '\n';
  }
}

inline std::string write_tsv(const EdgeList& edges, const TsvDialect& dialect = {}) {
  std::ostringstream out;
  write_tsv(edges, dialect, out);
  return out.str();
}

/// Renumbers vertices densely in order of first appearance.
inline EdgeList compact_ids(const EdgeList& in) {
  EdgeList out;
  out.name = in.name;
  out.edges.reserve(in.edges.size());
  std::unordered_map<vertex_t, vertex_t> remap;
  auto id_of = [&](vertex_t v) {
    auto [it, inserted] = remap.try_emplace(v, static_cast<vertex_t>(remap.size()));
    return it->second;
  };
  for (const auto& e : in.edges) {
    const auto u = id_of(e.u);
    out.edges.push_back({u, id_of(e.v)});
  }
  out.num_vertices = remap.size();
  return out;
}

struct LoadOptions {
  bool compact_ids = false;
};

struct LoadedGraph {
  std::string name;
  AdjacencyMatrix adjacency;
  std::uint64_t n_e = 0;         // undirected edges after canonicalization
  std::uint64_t line_count = 0;  // lines in the source file
  std::uint64_t raw_edges = 0;   // records before canonicalization
};

/// parse -> canonicalize -> adjacency.
inline LoadedGraph load_graph(const std::filesystem::path& path, const TsvDialect& dialect = {},
                              const LoadOptions& options = {}) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  ParseStats stats;
  EdgeList raw = parse_tsv(in, dialect, &stats);
  raw.name = path.stem().string();
  if (options.compact_ids) raw = compact_ids(raw);
  EdgeList canon = canonicalize(raw);
  LoadedGraph g;
  g.name = raw.name;
  g.adjacency = adjacency_from_edges(canon);
  g.n_e = canon.size();
  g.line_count = stats.lines;
  g.raw_edges = raw.size();
  return g;
}

}  // namespace tricount
