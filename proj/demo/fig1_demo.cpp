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

// Counts the triangles of a four-vertex, five-edge graph with every kernel
// and prints the intermediate reductions.
//
//   a --- b
//   |  /  |
//   c --- d      triangles {a,b,c} and {b,c,d}

#include <iostream>

#include "tricount/tricount.hpp"

int main() {
  using namespace tricount;
  EdgeList g;
  g.num_vertices = 4;
  g.edges = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  const auto adj = adjacency_from_edges(canonicalize(g));
  const auto& a = adj.csr();

  const auto a2 = spgemm(a, a);
  std::cout << "sum((A*A) o A) = " << sum_values(hadamard(a2, a)) << '\n';
  const auto [lower, upper] = triangular_split(adj);
  std::cout << "sum(A o (L*U)) = " << sum_values(hadamard(a, spgemm(lower, upper))) << '\n';
  const auto hits = spgemm(a, incidence_from_edges(canonicalize(g)));
  std::cout << "nnz(A*E == 2)  = " << count_values_equal(hits, 2) << '\n';

  for (auto algo : kAllAlgorithms) {
    std::cout << to_string(algo) << ": " << count_triangles(adj, algo).n_t << '\n';
  }
  for (const auto& t : enumerate_triangles(adj)) {
    std::cout << "{" << char('a' + t[0]) << "," << char('a' + t[1]) << "," << char('a' + t[2])
              << "}\n";
  }
}
