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

#ifndef FUZZINT_REPORT_HPP
#define FUZZINT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzint/capacity.hpp"
#include "fuzzint/scalar.hpp"

namespace fuzzint {

enum class Verdict { holds_on_sample, fails };

inline const char* to_string(Verdict v) noexcept
{
  return v == Verdict::holds_on_sample ? "holds-on-sample" : "fails";
}

struct NamedValue {
  std::string name;
  Value value;

  friend bool operator==(const NamedValue&, const NamedValue&) = default;
};

/// Integral-level inputs of a witness. Fields a law does not use stay empty.
struct Instance {
  std::optional<Capacity> capacity;
  std::optional<SimpleFunction> f;
  std::optional<SimpleFunction> g;
  std::optional<Value> shift;
  std::optional<SubsetMask> subset;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// A violating input with the two sides of the failed relation
/// ("lhs <= rhs" or "lhs == rhs").
struct Witness {
  std::vector<NamedValue> inputs;
  std::string property;
  std::string relation;
  Value lhs;
  Value rhs;
  std::optional<Instance> instance;

  const Value& input(const std::string& name) const
  {
    for (const auto& nv : inputs) {
      if (nv.name == name) {
        return nv.value;
      }
    }
    throw contract_error("witness has no input named '" + name + "'");
  }

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Verdict of a law check. A fails verdict always carries a witness.
struct CheckReport {
  std::string law_id;
  Verdict verdict = Verdict::holds_on_sample;
  std::optional<Witness> witness;
  std::string sample_description;
  /// Cases examined; on failure, cases up to and including the witness.
  std::uint64_t cases = 0;
  /// The scan stopped at its budget before covering the whole sample space.
  bool partial = false;

  bool holds() const noexcept { return verdict == Verdict::holds_on_sample; }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

inline CheckReport holds_report(std::string law_id, std::string description, std::uint64_t cases, bool partial = false)
{
  return CheckReport{std::move(law_id), Verdict::holds_on_sample, std::nullopt, std::move(description), cases, partial};
}

inline CheckReport fails_report(std::string law_id, Witness w, std::string description, std::uint64_t cases,
                                bool partial = false)
{
  return CheckReport{std::move(law_id), Verdict::fails, std::move(w), std::move(description), cases, partial};
}

} // namespace fuzzint

#endif
