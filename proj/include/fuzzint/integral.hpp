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

#ifndef FUZZINT_INTEGRAL_HPP
#define FUZZINT_INTEGRAL_HPP

#include <algorithm>
#include <vector>

#include "fuzzint/capacity.hpp"
#include "fuzzint/semicopula.hpp"

namespace fuzzint {

enum class IntegralMethod { exact_threshold, grid_oracle };

inline const char* to_string(IntegralMethod m) noexcept
{
  return m == IntegralMethod::exact_threshold ? "exact-threshold" : "grid-oracle";
}

struct IntegralResult {
  Value value;
  /// Smallest threshold t attaining the maximum of S(t, μ({f ≥ t})).
  Value argmax_threshold;
  IntegralMethod method = IntegralMethod::exact_threshold;
};

namespace detail {

inline IntegralResult maximize_over(const Semicopula& s, const Capacity& mu, const SimpleFunction& f,
                                    const std::vector<Value>& thresholds, IntegralMethod method)
{
  require_same_space(mu.space(), f.space());
  if (mu.realization() != f.realization()) {
    throw realization_mismatch("capacity and function use different realizations");
  }
  IntegralResult best{Value::zero(f.realization()), Value::zero(f.realization()), method};
  bool first = true;
  for (const auto& t : thresholds) {
    Value v = s(t, mu(superlevel_set(f, t)));
    if (first || v > best.value) {
      best.value = std::move(v);
      best.argmax_threshold = t;
      first = false;
    }
  }
  return best;
}

} // namespace detail

/// I_S(μ, f) = sup_t S(t, μ({f ≥ t})). On a finite space t ↦ μ({f ≥ t}) is a
/// step function that is left-continuous at the values of f and S is
/// non-decreasing in t, so the supremum is attained at t = 0 or at a value of f.
inline IntegralResult eval_integral(const Semicopula& s, const Capacity& mu, const SimpleFunction& f)
{
  std::vector<Value> thresholds{Value::zero(f.realization())};
  for (auto& v : f.distinct_values()) {
    if (!v.is_zero()) {
      thresholds.push_back(std::move(v));
    }
  }
  return detail::maximize_over(s, mu, f, thresholds, IntegralMethod::exact_threshold);
}

/// Brute-force maximum over the uniform grid joined with the values of f.
inline IntegralResult eval_integral_grid(const Semicopula& s, const Capacity& mu, const SimpleFunction& f,
                                         const Value& grid_step)
{
  if (grid_step.realization() != f.realization()) {
    throw realization_mismatch("grid step and function use different realizations");
  }
  std::vector<Value> thresholds = uniform_grid(grid_step);
  for (const auto& v : f.values()) {
    thresholds.push_back(v);
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  return detail::maximize_over(s, mu, f, thresholds, IntegralMethod::grid_oracle);
}

/// I_S(μ, f·1_A)
inline IntegralResult eval_integral_restricted(const Semicopula& s, const Capacity& mu, const SimpleFunction& f,
                                               SubsetMask subset)
{
  if (subset > f.space().full_mask()) {
    throw domain_error("subset outside the space");
  }
  return eval_integral(s, mu, restricted(f, subset));
}

} // namespace fuzzint

#endif
