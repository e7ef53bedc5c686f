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

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace tricount {

// Splits [0, n) into `threads` contiguous blocks and calls
// fn(block_index, begin, end) for each. Block boundaries depend only on
// (n, threads), so callers that combine per-block results in block order
// get the same answer as a serial run.
template <typename Fn>
void for_each_block(std::size_t n, unsigned threads, Fn&& fn) {
  const std::size_t blocks =
      std::max<std::size_t>(1, std::min<std::size_t>(threads, n == 0 ? 1 : n));
  auto bounds = [&](std::size_t b) { return n * b / blocks; };
  if (blocks == 1) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  std::vector<std::exception_ptr> errors(blocks);
  {
    std::vector<std::jthread> pool;
    pool.reserve(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      pool.emplace_back([&, b] {
        try {
          fn(b, bounds(b), bounds(b + 1));
        } catch (...) {
          errors[b] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline std::size_t block_count(std::size_t n, unsigned threads) {
  return std::max<std::size_t>(1, std::min<std::size_t>(threads, n == 0 ? 1 : n));
}

}  // namespace tricount
