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

#ifndef FUZZINT_LAWS_HPP
#define FUZZINT_LAWS_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzint/capacity.hpp"
#include "fuzzint/detail/parallel.hpp"
#include "fuzzint/integral.hpp"
#include "fuzzint/report.hpp"
#include "fuzzint/semicopula.hpp"

namespace fuzzint {

/// Law identifiers shared by the checkers, the search module and the CLI.
namespace law {
inline constexpr const char* shift = "shift";
inline constexpr const char* three = "three";
inline constexpr const char* weak_subadd = "weak-subadd";
inline constexpr const char* restricted_subadd = "restricted-subadd";
inline constexpr const char* cor_a = "cor-a";
inline constexpr const char* cor_b = "cor-b";
inline constexpr const char* cor_c = "cor-c";
inline constexpr const char* luka_dom = "luka-dom";
inline constexpr const char* maxitivity = "maxitivity";
inline constexpr const char* commuting = "commuting";
inline constexpr const char* idempotency = "idempotency";

inline const std::vector<std::string>& all()
{
  static const std::vector<std::string> ids{shift,      three,    weak_subadd, restricted_subadd, cor_a, cor_b,
                                            cor_c,      luka_dom, maxitivity,  commuting,         idempotency};
  return ids;
}
} // namespace law

struct Sides {
  Value lhs;
  Value rhs;
};

// ---------------------------------------------------------------------------
// Pointwise conditions on semicopulas

/// S(c+a, b) against S(c, b) + a; requires a + c ≤ 1.
inline Sides condition_shift_sides(const Semicopula& s, const Value& a, const Value& b, const Value& c)
{
  return {s(v_add_clamped(c, a), b), v_add_clamped(s(c, b), a)};
}

/// S₁(x+y, z) against S₂(x, z) + S₃(y, z); requires x + y ≤ 1.
inline Sides condition_three_sides(const Semicopula& s1, const Semicopula& s2, const Semicopula& s3, const Value& x,
                                   const Value& y, const Value& z)
{
  return {s1(v_add_clamped(x, y), z), v_add_clamped(s2(x, z), s3(y, z))};
}

/// S_L(x, y) against S(x, y).
inline Sides lukasiewicz_sides(const Semicopula& s, const Value& x, const Value& y)
{
  return {Semicopula::lukasiewicz()(x, y), s(x, y)};
}

namespace detail {

/// Lexicographic scan of grid triples (i outer, j, k inner) restricted to the
/// admissible ones, stopping after `budget` admissible triples (0 = no limit).
/// `sum_pair` selects which two coordinates must sum to at most 1.
enum class SumPair { outer_inner, outer_middle };

template <class Test>
CheckReport scan_grid_triples(const std::string& law_id, const std::vector<Value>& grid, SumPair pair,
                              std::uint64_t budget, const std::string& step_text, Test test)
{
  const std::size_t m = grid.size();
  const Value one = Value::one(grid.front().realization());
  std::vector<std::vector<char>> fits(m, std::vector<char>(m));
  for (std::size_t i = 0; i < m; ++i) {
    const Value room = v_sub_floored(one, grid[i]);
    for (std::size_t k = 0; k < m; ++k) {
      fits[i][k] = grid[k] <= room;
    }
  }
  auto admissible = [&](std::size_t i, std::size_t j, std::size_t k) {
    return pair == SumPair::outer_inner ? fits[i][k] : fits[i][j];
  };

  std::vector<std::uint64_t> prefix(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t row = 0;
    for (std::size_t k = 0; k < m; ++k) {
      row += fits[i][k];
    }
    prefix[i + 1] = prefix[i] + row * m;
  }
  const std::uint64_t total = prefix[m];
  const std::uint64_t limit = budget == 0 ? total : std::min(budget, total);
  const bool partial = limit < total;

  auto probe = [&](std::size_t i) -> std::optional<std::pair<std::uint64_t, Witness>> {
    if (prefix[i] >= limit) {
      return std::nullopt;
    }
    std::uint64_t seen = prefix[i];
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        if (!admissible(i, j, k)) {
          continue;
        }
        if (seen >= limit) {
          return std::nullopt;
        }
        ++seen;
        if (auto w = test(grid[i], grid[j], grid[k])) {
          return std::pair(seen, std::move(*w));
        }
      }
    }
    return std::nullopt;
  };

  std::string desc = "grid step " + step_text + " (" + std::to_string(m) + " points per axis), "
                     + std::to_string(limit) + " of " + std::to_string(total) + " admissible triples";
  if (auto hit = first_hit(m, probe)) {
    return fails_report(law_id, std::move(hit->second.second), std::move(desc), hit->second.first, partial);
  }
  return holds_report(law_id, std::move(desc), limit, partial);
}

} // namespace detail

/// S(c+a, b) ≤ S(c, b) + a over all grid triples with a + c ≤ 1, scanned with
/// a outermost, then b, then c. The first violation is the witness.
inline CheckReport check_condition_shift(const Semicopula& s, const Value& grid_step, Tolerance tol = {},
                                         std::uint64_t budget = 0)
{
  return detail::scan_grid_triples(
      law::shift, uniform_grid(grid_step), detail::SumPair::outer_inner, budget, render(grid_step),
      [&](const Value& a, const Value& b, const Value& c) -> std::optional<Witness> {
        auto [lhs, rhs] = condition_shift_sides(s, a, b, c);
        if (le_tol(lhs, rhs, tol)) {
          return std::nullopt;
        }
        return Witness{{{"a", a}, {"b", b}, {"c", c}}, "S(c+a,b) <= S(c,b)+a", "<=", lhs, rhs, std::nullopt};
      });
}

/// S₁(x+y, z) ≤ S₂(x, z) + S₃(y, z) over grid triples with x + y ≤ 1 (x outer, then y, then z).
inline CheckReport check_condition_three(const Semicopula& s1, const Semicopula& s2, const Semicopula& s3,
                                         const Value& grid_step, Tolerance tol = {}, std::uint64_t budget = 0)
{
  return detail::scan_grid_triples(
      law::three, uniform_grid(grid_step), detail::SumPair::outer_middle, budget, render(grid_step),
      [&](const Value& x, const Value& y, const Value& z) -> std::optional<Witness> {
        auto [lhs, rhs] = condition_three_sides(s1, s2, s3, x, y, z);
        if (le_tol(lhs, rhs, tol)) {
          return std::nullopt;
        }
        return Witness{{{"x", x}, {"y", y}, {"z", z}}, "S1(x+y,z) <= S2(x,z)+S3(y,z)", "<=", lhs, rhs, std::nullopt};
      });
}

/// S_L ≤ S on the grid, (x, y) in lexicographic order.
inline CheckReport check_lukasiewicz_dominated(const Semicopula& s, const Value& grid_step, Tolerance tol = {})
{
  const auto grid = uniform_grid(grid_step);
  const std::size_t m = grid.size();
  auto probe = [&](std::size_t i) -> std::optional<std::pair<std::size_t, Witness>> {
    for (std::size_t j = 0; j < m; ++j) {
      auto [lhs, rhs] = lukasiewicz_sides(s, grid[i], grid[j]);
      if (!le_tol(lhs, rhs, tol)) {
        return std::pair(j, Witness{{{"x", grid[i]}, {"y", grid[j]}}, "S_L(x,y) <= S(x,y)", "<=", lhs, rhs,
                                    std::nullopt});
      }
    }
    return std::nullopt;
  };
  const std::string desc = grid_description(grid_step, m);
  if (auto hit = detail::first_hit(m, probe)) {
    return fails_report(law::luka_dom, std::move(hit->second.second), desc, hit->first * m + hit->second.first + 1);
  }
  return holds_report(law::luka_dom, desc, static_cast<std::uint64_t>(m) * m);
}

// ---------------------------------------------------------------------------
// Integral-level instance checks

namespace detail {

inline CheckReport instance_verdict(std::string law_id, std::string property, std::string relation, Value lhs,
                                    Value rhs, Instance inst, std::vector<NamedValue> inputs, Tolerance tol)
{
  const bool ok = relation == "==" ? eq_tol(lhs, rhs, tol) : le_tol(lhs, rhs, tol);
  if (ok) {
    return holds_report(std::move(law_id), "single instance", 1);
  }
  return fails_report(std::move(law_id),
                      Witness{std::move(inputs), std::move(property), std::move(relation), std::move(lhs),
                              std::move(rhs), std::move(inst)},
                      "single instance", 1);
}

} // namespace detail

/// I_S(μ, f+a) ≤ I_S(μ, f) + a; throws domain_error unless f + a ≤ 1.
inline CheckReport check_weak_subadditivity_instance(const Semicopula& s, const Capacity& mu, const SimpleFunction& f,
                                                     const Value& a, Tolerance tol = {})
{
  const auto lifted = shifted(f, a);
  Value lhs = eval_integral(s, mu, lifted).value;
  Value rhs = v_add_clamped(eval_integral(s, mu, f).value, a);
  return detail::instance_verdict(law::weak_subadd, "I(f+a) <= I(f)+a", "<=", std::move(lhs), std::move(rhs),
                                  Instance{mu, f, std::nullopt, a, std::nullopt}, {{"a", a}}, tol);
}

/// Two-point instance that turns a violation (a, b, c) of S(c+a,b) ≤ S(c,b)+a
/// into a violation of weak subadditivity: μ = b on both singletons, f = (0, c).
struct ShiftWitnessInstance {
  Capacity capacity;
  SimpleFunction f;
  Value shift;
};

inline ShiftWitnessInstance witness_from_shift_violation(const Semicopula& s, const Value& a, const Value& b,
                                                         const Value& c)
{
  const Realization r = a.realization();
  if (c > v_complement(a)) {
    throw contract_error("triple requires a + c <= 1");
  }
  auto [lhs, rhs] = condition_shift_sides(s, a, b, c);
  if (lhs <= rhs) {
    throw contract_error("(a,b,c) = (" + render(a) + ", " + render(b) + ", " + render(c)
                         + ") does not violate S(c+a,b) <= S(c,b)+a for " + s.name());
  }
  const FiniteSpace space = FiniteSpace::with_size(2);
  Capacity mu = capacity_from_table(space, {Value::zero(r), b, b, Value::one(r)});
  SimpleFunction f(space, {Value::zero(r), c});
  return {std::move(mu), std::move(f), a};
}

/// I_{S₁}(μ, (f+a)·1_A) ≤ I_{S₂}(μ, f·1_A) + I_{S₃}(μ, a·1_A)
inline CheckReport check_restricted_subadditivity_instance(const Semicopula& s1, const Semicopula& s2,
                                                           const Semicopula& s3, const Capacity& mu,
                                                           const SimpleFunction& f, const Value& a, SubsetMask subset,
                                                           Tolerance tol = {})
{
  const auto lifted = shifted(f, a);
  const auto level = SimpleFunction::constant(f.space(), a);
  Value lhs = eval_integral_restricted(s1, mu, lifted, subset).value;
  Value rhs = v_add_clamped(eval_integral_restricted(s2, mu, f, subset).value,
                            eval_integral_restricted(s3, mu, level, subset).value);
  return detail::instance_verdict(law::restricted_subadd, "I1((f+a)1_A) <= I2(f 1_A)+I3(a 1_A)", "<=",
                                  std::move(lhs), std::move(rhs), Instance{mu, f, std::nullopt, a, subset},
                                  {{"a", a}}, tol);
}

/// Instance realizing a violation (x, y, z) of S₁(x+y,z) ≤ S₂(x,z)+S₃(y,z) at
/// integral level: f = x·1_A, shift y, μ(A) = z on a two-point space with A = {a}.
struct RestrictedWitnessInstance {
  Capacity capacity;
  SimpleFunction f;
  Value shift;
  SubsetMask subset;
};

inline RestrictedWitnessInstance witness_from_condition_three_violation(const Semicopula& s1, const Semicopula& s2,
                                                                        const Semicopula& s3, const Value& x,
                                                                        const Value& y, const Value& z)
{
  const Realization r = x.realization();
  if (y > v_complement(x)) {
    throw contract_error("triple requires x + y <= 1");
  }
  auto [lhs, rhs] = condition_three_sides(s1, s2, s3, x, y, z);
  if (lhs <= rhs) {
    throw contract_error("(x,y,z) does not violate S1(x+y,z) <= S2(x,z)+S3(y,z)");
  }
  const FiniteSpace space = FiniteSpace::with_size(2);
  Capacity mu = capacity_from_table(space, {Value::zero(r), z, Value::zero(r), Value::one(r)});
  SimpleFunction f(space, {x, Value::zero(r)});
  return {std::move(mu), std::move(f), y, SubsetMask{1}};
}

enum class CorollaryVariant { a, b, c };

inline const char* law_id(CorollaryVariant v) noexcept
{
  switch (v) {
  case CorollaryVariant::a:
    return law::cor_a;
  case CorollaryVariant::b:
    return law::cor_b;
  case CorollaryVariant::c:
    break;
  }
  return law::cor_c;
}

/// Restricted subadditivity with S₁ = S₂ = S and S₃ = S (a), M (b: addend a ∧ μ(A))
/// or Π (c: addend a·μ(A)).
inline CheckReport check_corollary_variant(CorollaryVariant variant, const Semicopula& s, const Capacity& mu,
                                           const SimpleFunction& f, const Value& a, SubsetMask subset,
                                           Tolerance tol = {})
{
  const Semicopula s3 = variant == CorollaryVariant::a   ? s
                        : variant == CorollaryVariant::b ? Semicopula::min()
                                                         : Semicopula::product();
  auto report = check_restricted_subadditivity_instance(s, s, s3, mu, f, a, subset, tol);
  report.law_id = law_id(variant);
  return report;
}

/// (f(x) - f(y))(g(x) - g(y)) ≥ 0 for all x, y in A.
inline bool is_comonotone(const SimpleFunction& f, const SimpleFunction& g, std::optional<SubsetMask> subset = {})
{
  require_same_space(f.space(), g.space());
  const SubsetMask a = subset.value_or(f.space().full_mask());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!(a & (SubsetMask{1} << i))) {
      continue;
    }
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (!(a & (SubsetMask{1} << j))) {
        continue;
      }
      const int df = compare(f[i], f[j]);
      const int dg = compare(g[i], g[j]);
      if (df * dg < 0) {
        return false;
      }
    }
  }
  return true;
}

namespace detail {

inline void require_comonotone(const SimpleFunction& f, const SimpleFunction& g)
{
  if (!is_comonotone(f, g)) {
    throw contract_error("f and g are not comonotone");
  }
}

} // namespace detail

/// I_S(μ, f ∨ g) = I_S(μ, f) ∨ I_S(μ, g) for comonotone f, g.
inline CheckReport check_comonotone_maxitivity(const Semicopula& s, const Capacity& mu, const SimpleFunction& f,
                                               const SimpleFunction& g, Tolerance tol = {})
{
  detail::require_comonotone(f, g);
  Value lhs = eval_integral(s, mu, pointwise_join(f, g)).value;
  Value rhs = v_join(eval_integral(s, mu, f).value, eval_integral(s, mu, g).value);
  return detail::instance_verdict(law::maxitivity, "I(f v g) == I(f) v I(g)", "==", std::move(lhs), std::move(rhs),
                                  Instance{mu, f, g, std::nullopt, std::nullopt}, {}, tol);
}

/// I_S(μ, f ∘ g) = I_S(μ, f) ∘ I_S(μ, g) for comonotone f, g.
inline CheckReport check_commuting_instance(const Semicopula& s, const BinaryOp& op, const Capacity& mu,
                                            const SimpleFunction& f, const SimpleFunction& g, Tolerance tol = {})
{
  detail::require_comonotone(f, g);
  Value lhs = eval_integral(s, mu, pointwise(f, g, op)).value;
  Value rhs = op(eval_integral(s, mu, f).value, eval_integral(s, mu, g).value);
  return detail::instance_verdict(law::commuting, "I(f o g) == I(f) o I(g) for o = " + op.name(), "==",
                                  std::move(lhs), std::move(rhs), Instance{mu, f, g, std::nullopt, std::nullopt}, {},
                                  tol);
}

/// Commuting with I_S on f = g = 1_A forces μ(A) ∘ μ(A) = μ(A). For each grid
/// value x this builds μ(A) = x on a two-point space and compares
/// I_S(μ, 1_A ∘ 1_A) with x ∘ x. The first x that breaks it is the witness.
inline CheckReport check_idempotency(const BinaryOp& op, const Semicopula& s, const Value& grid_step,
                                     Tolerance tol = {})
{
  const auto grid = uniform_grid(grid_step);
  const Realization r = grid_step.realization();
  const FiniteSpace space = FiniteSpace::with_size(2);
  const SubsetMask a_set = 1;
  const auto indicator = SimpleFunction::indicator(space, a_set, r);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Value& x = grid[i];
    Capacity mu = capacity_from_table(space, {Value::zero(r), x, Value::zero(r), Value::one(r)});
    Value lhs = eval_integral(s, mu, pointwise(indicator, indicator, op)).value;
    const Value ix = eval_integral(s, mu, indicator).value;
    Value rhs = op(ix, ix);
    if (!eq_tol(lhs, rhs, tol)) {
      return fails_report(law::idempotency,
                          Witness{{{"x", x}},
                                  "I(1_A o 1_A) == mu(A) o mu(A) for o = " + op.name(),
                                  "==",
                                  std::move(lhs),
                                  std::move(rhs),
                                  Instance{std::move(mu), indicator, indicator, std::nullopt, a_set}},
                          grid_description(grid_step, grid.size()), i + 1);
    }
  }
  return holds_report(law::idempotency, grid_description(grid_step, grid.size()), grid.size());
}

} // namespace fuzzint

#endif
