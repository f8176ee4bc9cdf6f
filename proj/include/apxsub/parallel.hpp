// Copyright 2026 The Authors.
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
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace apxsub {

// Worker count: APXSUB_THREADS if set to a positive integer, otherwise the
// hardware concurrency. Only affects speed, never results.
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("APXSUB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// Calls body(begin, end) on contiguous chunks of [0, count). Exceptions from
// workers are rethrown on the calling thread (first one wins).
template <typename Body>
void parallel_chunks(std::uint64_t count, unsigned threads, Body&& body) {
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(std::max(1U, threads), std::max<std::uint64_t>(1, count)));
  if (threads <= 1) {
    body(std::uint64_t{0}, count);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::uint64_t step = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::min(count, t * step);
    const std::uint64_t end = std::min(count, begin + step);
    pool.emplace_back([&, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace apxsub
