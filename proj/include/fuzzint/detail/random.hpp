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

#ifndef FUZZINT_DETAIL_RANDOM_HPP
#define FUZZINT_DETAIL_RANDOM_HPP

#include <cstdint>
#include <random>

namespace fuzzint::detail {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Generator for stream `stream` of `seed`; streams of one seed are independent,
/// so case i of a suite can be regenerated in isolation.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0)
{
  return std::mt19937_64(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

template <class Int, class Rng>
Int uniform_int(Rng& rng, Int lo, Int hi)
{
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

} // namespace fuzzint::detail

#endif
