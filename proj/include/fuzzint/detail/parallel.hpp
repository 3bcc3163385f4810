/*
 *   Copyright 2026 The fuzzint Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FUZZINT_DETAIL_PARALLEL_HPP
#define FUZZINT_DETAIL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace fuzzint::detail {

/// Worker count: FUZZINT_THREADS when set to a positive integer, else the hardware concurrency.
inline std::size_t worker_count()
{
  if (const char* env = std::getenv("FUZZINT_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) {
        return static_cast<std::size_t>(n);
      }
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Runs probe(i) for i in [0, count) and returns the lowest index whose probe
/// produced a hit, with that hit. Indices above the best hit found so far are
/// skipped, so the answer matches a sequential scan regardless of scheduling.
template <class Probe>
auto first_hit(std::size_t count, Probe probe) -> std::optional<std::pair<std::size_t, typename decltype(probe(std::size_t{}))::value_type>>
{
  using Hit = typename decltype(probe(std::size_t{}))::value_type;
  using Result = std::optional<std::pair<std::size_t, Hit>>;

  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto hit = probe(i)) {
        return Result(std::in_place, i, std::move(*hit));
      }
    }
    return std::nullopt;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::mutex mutex;
  Result result;
  std::exception_ptr failure;

  auto work = [&] {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || i >= best.load()) {
          return;
        }
        if (auto hit = probe(i)) {
          std::lock_guard lock(mutex);
          if (!result || i < result->first) {
            result.emplace(i, std::move(*hit));
            best.store(i);
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(mutex);
      if (!failure) {
        failure = std::current_exception();
      }
      best.store(0);
    }
  };

  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(work);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return result;
}

} // namespace fuzzint::detail

#endif
