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

#include "fuzzint/scalar.hpp"

using namespace fuzzint;
using namespace fuzzint::literals;

namespace {

Value random_exact(std::mt19937_64& rng)
{
  const auto den = std::uniform_int_distribution<std::int64_t>(1, 97)(rng);
  const auto num = std::uniform_int_distribution<std::int64_t>(0, den)(rng);
  return Value::exact(num, den);
}

void expect_in_unit(const Value& v)
{
  EXPECT_GE(v, Value::zero(v.realization()));
  EXPECT_LE(v, Value::one(v.realization()));
}

} // namespace

TEST(Scalar, JoinExamples)
{
  EXPECT_EQ(v_join("0.4"_q, "0.5"_q), "1/2"_q);
  EXPECT_EQ(v_join("1/3"_q, "2/7"_q), "1/3"_q);
  const Value x = "5/9"_q;
  EXPECT_EQ(v_join(x, Value::zero(Realization::exact)), x);
}

TEST(Scalar, MeetExamples)
{
  EXPECT_EQ(v_meet("0.8"_q, "0.5"_q), "1/2"_q);
  EXPECT_EQ(v_meet("1/2"_q, "1/2"_q), "1/2"_q);
  const Value x = "2/11"_q;
  EXPECT_EQ(v_meet(x, Value::one(Realization::exact)), x);
}

TEST(Scalar, ClampedArithmetic)
{
  EXPECT_EQ(v_add_clamped("0.7"_q, "0.6"_q), "1"_q);
  EXPECT_EQ(v_sub_floored("0.3"_q, "0.5"_q), "0"_q);
  EXPECT_EQ(v_add_clamped("1/4"_q, "1/4"_q), "1/2"_q);
  EXPECT_EQ(v_mul("4/5"_q, "1/2"_q), "2/5"_q);
  EXPECT_EQ(v_complement("3/10"_q), "7/10"_q);
}

TEST(Scalar, MixedRealizationRejected)
{
  const Value e = "1/2"_q;
  const Value f = Value::floating(0.5);
  EXPECT_THROW(v_join(e, f), realization_mismatch);
  EXPECT_THROW(v_meet(e, f), realization_mismatch);
  EXPECT_THROW(v_add_clamped(e, f), realization_mismatch);
  EXPECT_THROW(v_sub_floored(f, e), realization_mismatch);
  EXPECT_THROW((void)(e < f), realization_mismatch);
}

TEST(Scalar, OutOfRangeRejected)
{
  EXPECT_THROW(Value::exact(3, 2), domain_error);
  EXPECT_THROW(Value::exact(-1, 2), domain_error);
  EXPECT_THROW(Value::floating(1.5), domain_error);
  EXPECT_THROW(parse_value("1.01"), domain_error);
  EXPECT_THROW(parse_value("5/4"), domain_error);
}

TEST(Scalar, ExactDecimalParsing)
{
  EXPECT_EQ(parse_value("0.4"), Value::exact(2, 5));
  EXPECT_EQ(parse_value(".125"), Value::exact(1, 8));
  EXPECT_EQ(parse_value("2.5e-1"), Value::exact(1, 4));
  EXPECT_EQ(parse_value("6/8"), Value::exact(3, 4));
  EXPECT_EQ(parse_value("1"), Value::one(Realization::exact));
  EXPECT_EQ(render(parse_value("0.40")), "2/5");
  EXPECT_THROW(parse_value("abc"), parse_error);
  EXPECT_THROW(parse_value("1/0"), parse_error);
  EXPECT_THROW(parse_value(""), parse_error);
  EXPECT_THROW(parse_value("0.1.2"), parse_error);
}

TEST(Scalar, LowestTerms)
{
  EXPECT_EQ(render(Value::exact(50, 100)), "1/2");
  EXPECT_EQ(render(Value::exact(0, 7)), "0");
  EXPECT_EQ(render(Value::exact(9, 9)), "1");
}

TEST(Scalar, FloatRendering)
{
  EXPECT_EQ(render(Value::floating(0.1)), "0.1");
  EXPECT_EQ(render(Value::floating(1.0)), "1");
  EXPECT_EQ(parse_value("2/5", Realization::floating), Value::floating(0.4));
}

TEST(Scalar, ToleranceComparisons)
{
  const Value a = Value::floating(0.3);
  const Value b = Value::floating(0.1 + 0.2);
  EXPECT_NE(a, b);
  EXPECT_TRUE(eq_tol(a, b));
  EXPECT_TRUE(le_tol(b, a));
  EXPECT_FALSE(eq_tol(a, b, Tolerance{1e-20}));
  EXPECT_FALSE(le_tol("1/3"_q, "1/4"_q));
}

TEST(ScalarProperty, ClosedLatticeAndRoundTrip)
{
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 10000; ++i) {
    const Value x = random_exact(rng);
    const Value y = random_exact(rng);
    const Value j = v_join(x, y);
    const Value m = v_meet(x, y);
    for (const auto& v : {j, m, v_add_clamped(x, y), v_sub_floored(x, y), v_mul(x, y), v_complement(x)}) {
      expect_in_unit(v);
    }
    // Against direct min/max on the rationals.
    EXPECT_EQ(j.as_rational(), std::max(x.as_rational(), y.as_rational()));
    EXPECT_EQ(m.as_rational(), std::min(x.as_rational(), y.as_rational()));
    EXPECT_EQ(v_join(x, v_meet(x, y)), x);
    EXPECT_EQ(v_meet(x, v_join(x, y)), x);
    EXPECT_EQ(v_join(x, y), v_join(y, x));
    EXPECT_EQ(parse_value(render(x)), x);
    const Value fx = x.to(Realization::floating);
    EXPECT_EQ(parse_value(render(fx), Realization::floating), fx);
  }
}

TEST(Value, LargeDenominatorsFallBackToBigRationals)
{
  const std::int64_t big = std::int64_t{1} << 62;
  const Value x = Value::exact(1, big);
  const Value y = Value::exact(3, big - 1);
  const rational qx(1, big);
  const rational qy(3, big - 1);

  const Value p = v_mul(x, y);
  EXPECT_EQ(p.as_rational(), qx * qy);
  EXPECT_EQ(v_add_clamped(x, y).as_rational(), qx + qy);
  EXPECT_EQ(v_sub_floored(y, x).as_rational(), qy - qx);
  EXPECT_EQ(v_complement(p).as_rational(), 1 - qx * qy);
  EXPECT_TRUE(p < x);
  EXPECT_TRUE(p > Value::zero(Realization::exact));
  EXPECT_FALSE(p.is_zero());

  // Results that shrink back into 64 bits compare equal to their small form.
  const Value back = v_add_clamped(v_complement(p), p);
  EXPECT_TRUE(back.is_one());
  EXPECT_EQ(v_sub_floored(v_add_clamped(p, "1/2"_q), p), "1/2"_q);
  EXPECT_EQ(Value::exact(rational(big_int(1) << 70, big_int(1) << 71)), "1/2"_q);
  EXPECT_EQ(render(p), rational(qx * qy).str());
}

TEST(Value, InlineArithmeticMatchesRationalOracle)
{
  std::mt19937_64 rng(42);
  auto draw = [&] {
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 1'000'000'007ULL);
    const std::int64_t num = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(den + 1));
    return std::pair(Value::exact(num, den), rational(num, den));
  };
  for (int i = 0; i < 10000; ++i) {
    const auto [x, qx] = draw();
    const auto [y, qy] = draw();
    const rational sum = qx + qy;
    const rational diff = qx - qy;
    ASSERT_EQ(v_add_clamped(x, y).as_rational(), sum > 1 ? rational(1) : sum);
    ASSERT_EQ(v_sub_floored(x, y).as_rational(), diff < 0 ? rational(0) : diff);
    ASSERT_EQ(v_mul(x, y).as_rational(), qx * qy);
    ASSERT_EQ(v_complement(x).as_rational(), 1 - qx);
    ASSERT_EQ(compare(x, y), qx < qy ? -1 : (qy < qx ? 1 : 0));
    ASSERT_DOUBLE_EQ(x.as_double(), qx.convert_to<double>());
  }
}
