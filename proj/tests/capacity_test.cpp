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

#include <random>

#include <gtest/gtest.h>

#include "fuzzint/capacity.hpp"

using namespace fuzzint;
using namespace fuzzint::literals;

namespace {

RawCapacity example_raw(const Value& beta)
{
  const FiniteSpace space({"a", "b"});
  return RawCapacity{space, {{0, "0"_q}, {1, "0.5"_q}, {2, beta}, {3, "1"_q}}, false};
}

// Independent monotonicity oracle: every pair A ⊆ B, not only covering pairs.
bool monotone_all_pairs(const Capacity& mu)
{
  const SubsetMask full = mu.space().full_mask();
  for (SubsetMask b = 0; b <= full; ++b) {
    for (SubsetMask a = b;; a = (a - 1) & b) {
      if (mu(a) > mu(b)) {
        return false;
      }
      if (a == 0) {
        break;
      }
    }
  }
  return true;
}

} // namespace

TEST(FiniteSpace, LabelsAndKeys)
{
  const FiniteSpace space({"b", "a", "c"});
  EXPECT_EQ(space.parse_subset_key("a,b"), 0b011U);
  EXPECT_EQ(space.parse_subset_key("a, b"), 0b011U);
  EXPECT_EQ(space.subset_key(0b011), "a,b");
  EXPECT_EQ(space.subset_key(0), "∅");
  EXPECT_EQ(space.parse_subset_key("∅"), 0U);
  EXPECT_THROW(space.parse_subset_key("a,z"), parse_error);
  EXPECT_THROW(FiniteSpace({"a", "a"}), parse_error);
  EXPECT_THROW(FiniteSpace::with_size(17), domain_error);
  EXPECT_THROW(FiniteSpace(std::vector<std::string>{}), domain_error);
  EXPECT_EQ(FiniteSpace::with_size(16).full_mask(), 0xFFFFU);
}

TEST(ValidateCapacity, WorkedExampleCapacity)
{
  const Capacity mu = validate_capacity(example_raw("0.3"_q));
  EXPECT_EQ(mu(1), "1/2"_q);
  EXPECT_EQ(mu(2), "3/10"_q);
  EXPECT_EQ(mu.realization(), Realization::exact);
}

TEST(ValidateCapacity, MinimalOnePointSpace)
{
  const FiniteSpace space({"x"});
  const Capacity mu = validate_capacity({space, {{0, "0"_q}, {1, "1"_q}}, false});
  EXPECT_EQ(mu(1), "1"_q);
}

TEST(ValidateCapacity, MonotonicityBreach)
{
  const FiniteSpace space({"a", "b"});
  try {
    validate_capacity({space, {{0, "0"_q}, {1, "0.6"_q}, {2, "0.2"_q}, {3, "0.5"_q}}, false});
    FAIL() << "expected capacity_error";
  } catch (const capacity_error& e) {
    EXPECT_EQ(e.kind(), capacity_error::Kind::monotonicity);
    EXPECT_EQ(e.first(), 1U);
    EXPECT_EQ(e.second(), 3U);
  }
}

TEST(ValidateCapacity, BoundaryAndMissing)
{
  const FiniteSpace space({"a", "b"});
  try {
    validate_capacity({space, {{1, "0.5"_q}, {2, "0.5"_q}, {3, "0.9"_q}}, false});
    FAIL();
  } catch (const capacity_error& e) {
    EXPECT_EQ(e.kind(), capacity_error::Kind::boundary);
    EXPECT_EQ(e.first(), 3U);
  }
  try {
    validate_capacity({space, {{0, "0.1"_q}, {1, "0.5"_q}, {2, "0.5"_q}, {3, "1"_q}}, false});
    FAIL();
  } catch (const capacity_error& e) {
    EXPECT_EQ(e.kind(), capacity_error::Kind::boundary);
    EXPECT_EQ(e.first(), 0U);
  }
  try {
    validate_capacity({space, {{1, "0.5"_q}, {3, "1"_q}}, false});
    FAIL();
  } catch (const capacity_error& e) {
    EXPECT_EQ(e.kind(), capacity_error::Kind::missing_subset);
    EXPECT_EQ(e.first(), 2U);
  }
  EXPECT_THROW(validate_capacity({space, {{1, "0.5"_q}, {2, Value::floating(0.5)}, {3, "1"_q}}, false}),
               capacity_error);
}

TEST(ValidateCapacity, LowerEnvelopeCompletion)
{
  const FiniteSpace space = FiniteSpace::with_size(3);
  // Empty table: zero below X.
  const Capacity empty = validate_capacity({space, {}, true});
  for (SubsetMask m = 0; m < space.full_mask(); ++m) {
    EXPECT_EQ(empty(m), "0"_q);
  }
  EXPECT_EQ(empty(space.full_mask()), "1"_q);

  // Two-value capacity μ = b off {∅, X}, entered through the singletons.
  const Value b = "2/7"_q;
  const Capacity two = validate_capacity({space, {{1, b}, {2, b}, {4, b}}, true});
  for (SubsetMask m = 1; m < space.full_mask(); ++m) {
    EXPECT_EQ(two(m), b);
  }

  const Capacity partial = validate_capacity({space, {{1, "0.2"_q}, {2, "0.5"_q}, {5, "0.6"_q}}, true});
  EXPECT_EQ(partial(3), "1/2"_q);
  EXPECT_EQ(partial(5), "3/5"_q);
  EXPECT_EQ(partial(4), "0"_q);
  EXPECT_EQ(partial(6), "1/2"_q);
}

TEST(Superlevel, WorkedExampleValues)
{
  const Capacity mu = validate_capacity(example_raw("0.3"_q));
  const SimpleFunction f(mu.space(), {"1"_q, "0.4"_q});
  EXPECT_EQ(superlevel_measure(mu, f, "0.5"_q), "1/2"_q);
  EXPECT_EQ(superlevel_measure(mu, f, "0"_q), "1"_q);
  EXPECT_THROW(superlevel_measure(mu, f, Value::floating(0.5)), realization_mismatch);
}

TEST(Superlevel, UniformAdditiveBruteForce)
{
  const FiniteSpace space = FiniteSpace::with_size(4);
  const Capacity mu = uniform_capacity(space);
  const SimpleFunction f(space, {"0.1"_q, "0.2"_q, "0.3"_q, "0.4"_q});
  const Value t = "0.25"_q;
  // Oracle: count qualifying points and divide by n.
  int count = 0;
  for (const auto& v : f.values()) {
    count += v >= t;
  }
  EXPECT_EQ(count, 2);
  EXPECT_EQ(superlevel_measure(mu, f, t), Value::exact(count, 4));
}

TEST(Superlevel, NonIncreasingInThreshold)
{
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const FiniteSpace space = FiniteSpace::with_size(1 + seed % 6);
    const Capacity mu = random_capacity(space, seed);
    const SimpleFunction f = random_function(space, seed);
    std::vector<Value> ts{"0"_q, "1"_q};
    const auto distinct = f.distinct_values();
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      ts.push_back(distinct[i]);
      if (i + 1 < distinct.size()) {
        ts.push_back(Value::exact((distinct[i].as_rational() + distinct[i + 1].as_rational()) / 2));
      }
    }
    std::sort(ts.begin(), ts.end());
    for (std::size_t i = 1; i < ts.size(); ++i) {
      ASSERT_GE(superlevel_measure(mu, f, ts[i - 1]), superlevel_measure(mu, f, ts[i]));
    }
  }
}

TEST(RandomCapacity, GeneratorContract)
{
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const FiniteSpace space = FiniteSpace::with_size(n);
    const Capacity mu = random_capacity(space, seed);
    ASSERT_EQ(mu(0), "0"_q);
    ASSERT_EQ(mu(space.full_mask()), "1"_q);
    ASSERT_TRUE(monotone_all_pairs(mu)) << "seed " << seed;
    ASSERT_EQ(capacity_from_table(space, mu.table()), mu);
    for (const auto& v : mu.table()) {
      ASSERT_LE(boost::multiprecision::denominator(v.as_rational()), 64);
    }
  }
}

TEST(RandomCapacity, DeterministicPerSeed)
{
  const FiniteSpace space = FiniteSpace::with_size(4);
  EXPECT_EQ(random_capacity(space, 42), random_capacity(space, 42));
  EXPECT_EQ(random_comonotone_pair(space, 9).first, random_comonotone_pair(space, 9).first);
  EXPECT_EQ(random_capacity(space, 3).to(Realization::floating).realization(), Realization::floating);
}

TEST(RandomCapacity, AdditiveAndPossibilityModes)
{
  const FiniteSpace space({"a", "b"});
  CapacityGenOptions additive{CapacityMode::additive, 0, {"0.5"_q, "0.5"_q}};
  EXPECT_EQ(random_capacity(space, 1, additive)(1), "1/2"_q);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const FiniteSpace s3 = FiniteSpace::with_size(3);
    const Capacity add = random_capacity(s3, seed, {CapacityMode::additive});
    const Capacity pos = random_capacity(s3, seed, {CapacityMode::possibility});
    for (SubsetMask a = 0; a <= s3.full_mask(); ++a) {
      for (SubsetMask b = 0; b <= s3.full_mask(); ++b) {
        if ((a & b) == 0) {
          ASSERT_EQ(add(a | b).as_rational(), add(a).as_rational() + add(b).as_rational());
        }
        ASSERT_EQ(pos(a | b), v_join(pos(a), pos(b)));
      }
    }
  }
}

TEST(RandomComonotonePair, ProductOfDifferencesNonNegative)
{
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const FiniteSpace space = FiniteSpace::with_size(1 + seed % 6);
    const auto [f, g] = random_comonotone_pair(space, seed);
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        const rational prod = (f[i].as_rational() - f[j].as_rational()) * (g[i].as_rational() - g[j].as_rational());
        ASSERT_GE(prod, 0);
      }
    }
  }
}

TEST(SimpleFunctionOps, ShiftAndRestrict)
{
  const FiniteSpace space({"a", "b"});
  const SimpleFunction f(space, {"0"_q, "0.4"_q});
  EXPECT_EQ(shifted(f, "0.2"_q)[1], "3/5"_q);
  EXPECT_EQ(shifted(f, "0.6"_q)[1], "1"_q);
  EXPECT_THROW(shifted(f, "0.7"_q), domain_error);
  EXPECT_EQ(restricted(f, 1)[1], "0"_q);
  EXPECT_THROW(SimpleFunction(space, {"0"_q}), domain_error);
  EXPECT_THROW(SimpleFunction(space, {"0"_q, Value::floating(0.3)}), realization_mismatch);
}
