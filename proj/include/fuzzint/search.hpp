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

#ifndef FUZZINT_SEARCH_HPP
#define FUZZINT_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzint/capacity.hpp"
#include "fuzzint/detail/parallel.hpp"
#include "fuzzint/detail/random.hpp"
#include "fuzzint/laws.hpp"
#include "fuzzint/report.hpp"
#include "fuzzint/semicopula.hpp"

namespace fuzzint {

/// What to hunt for and where. Semicopulas: one entry, or three (S₁, S₂, S₃)
/// for "three" and "restricted-subadd". `op` is required by "commuting" and
/// "idempotency".
struct SearchSpec {
  std::string law_id;
  std::vector<Semicopula> semicopulas;
  std::optional<BinaryOp> op;
  std::size_t n = 2;
  std::uint32_t denominator = 10;
  std::uint64_t budget = 100000;
  std::uint64_t seed = 0;
  Tolerance tolerance{};
};

inline bool is_pointwise_law(const std::string& id)
{
  return id == law::shift || id == law::three || id == law::luka_dom || id == law::idempotency;
}

inline bool is_integral_law(const std::string& id)
{
  return id == law::weak_subadd || id == law::restricted_subadd || id == law::cor_a || id == law::cor_b
         || id == law::cor_c || id == law::maxitivity || id == law::commuting;
}

namespace detail {

inline bool uses_pair(const std::string& id) { return id == law::maxitivity || id == law::commuting; }
inline bool uses_subset(const std::string& id)
{
  return id == law::restricted_subadd || id == law::cor_a || id == law::cor_b || id == law::cor_c;
}

/// S₁, S₂, S₃ from a one- or three-element list.
inline std::vector<Semicopula> three_semicopulas(const std::vector<Semicopula>& s)
{
  if (s.size() == 1) {
    return {s[0], s[0], s[0]};
  }
  if (s.size() != 3) {
    throw domain_error("expected one or three semicopulas");
  }
  return s;
}

inline void validate(const SearchSpec& spec)
{
  if (!is_pointwise_law(spec.law_id) && !is_integral_law(spec.law_id)) {
    throw domain_error("unknown law '" + spec.law_id + "'");
  }
  if (spec.semicopulas.empty()) {
    throw domain_error("at least one semicopula is required");
  }
  if (spec.n < 1 || spec.n > 6) {
    throw domain_error("space size n must be in [1, 6]");
  }
  if (spec.denominator < 1 || spec.denominator > 64) {
    throw domain_error("denominator must be in [1, 64]");
  }
  if (spec.budget < 1) {
    throw domain_error("budget must be at least 1");
  }
  if ((spec.law_id == law::commuting || spec.law_id == law::idempotency) && !spec.op) {
    throw domain_error("law '" + spec.law_id + "' needs an operator");
  }
}

} // namespace detail

/// Calls visit(numerators) for every capacity on `space` whose values are k/d,
/// in lexicographic order of the values listed by increasing subset mask.
/// numerators[mask] is μ(mask)·d. Stops when visit returns false.
inline void for_each_grid_capacity(const FiniteSpace& space, std::uint32_t d,
                                   const std::function<bool(const std::vector<std::uint32_t>&)>& visit)
{
  const SubsetMask full = space.full_mask();
  std::vector<std::uint32_t> num(space.subset_count(), 0);
  num[full] = d;
  bool go = true;
  std::function<void(SubsetMask)> fill = [&](SubsetMask mask) {
    if (!go) {
      return;
    }
    if (mask >= full) {
      go = visit(num);
      return;
    }
    std::uint32_t lower = 0;
    for (std::size_t i = 0; i < space.size(); ++i) {
      const SubsetMask bit = SubsetMask{1} << i;
      if (mask & bit) {
        lower = std::max(lower, num[mask & ~bit]);
      }
    }
    for (std::uint32_t k = lower; k <= d && go; ++k) {
      num[mask] = k;
      fill(mask + 1);
    }
  };
  fill(1);
}

inline Capacity grid_capacity(const FiniteSpace& space, const std::vector<std::uint32_t>& numerators, std::uint32_t d)
{
  std::vector<Value> table;
  for (auto k : numerators) {
    table.push_back(Value::exact(k, d));
  }
  return capacity_from_table(space, table);
}

inline SimpleFunction grid_function(const FiniteSpace& space, const std::vector<std::uint32_t>& numerators,
                                    std::uint32_t d)
{
  std::vector<Value> v;
  for (auto k : numerators) {
    v.push_back(Value::exact(k, d));
  }
  return SimpleFunction(space, std::move(v));
}

/// Runs the law's instance checker on a fully specified instance.
inline CheckReport check_instance(const std::string& law_id, const std::vector<Semicopula>& semicopulas,
                                  const std::optional<BinaryOp>& op, const Instance& inst, Tolerance tol = {})
{
  auto need = [&](bool present, const char* what) {
    if (!present) {
      throw contract_error(std::string("instance for law '") + law_id + "' lacks " + what);
    }
  };
  need(inst.capacity.has_value(), "a capacity");
  need(inst.f.has_value(), "f");
  const Semicopula& s = semicopulas.at(0);
  if (law_id == law::weak_subadd) {
    need(inst.shift.has_value(), "the shift a");
    return check_weak_subadditivity_instance(s, *inst.capacity, *inst.f, *inst.shift, tol);
  }
  if (detail::uses_subset(law_id)) {
    need(inst.shift.has_value(), "the shift a");
    const SubsetMask subset = inst.subset.value_or(inst.f->space().full_mask());
    if (law_id == law::restricted_subadd) {
      auto s3 = detail::three_semicopulas(semicopulas);
      return check_restricted_subadditivity_instance(s3[0], s3[1], s3[2], *inst.capacity, *inst.f, *inst.shift,
                                                     subset, tol);
    }
    const auto variant = law_id == law::cor_a   ? CorollaryVariant::a
                         : law_id == law::cor_b ? CorollaryVariant::b
                                                : CorollaryVariant::c;
    return check_corollary_variant(variant, s, *inst.capacity, *inst.f, *inst.shift, subset, tol);
  }
  need(inst.g.has_value(), "g");
  if (law_id == law::maxitivity) {
    return check_comonotone_maxitivity(s, *inst.capacity, *inst.f, *inst.g, tol);
  }
  if (law_id == law::commuting) {
    need(op.has_value(), "an operator");
    return check_commuting_instance(s, *op, *inst.capacity, *inst.f, *inst.g, tol);
  }
  throw domain_error("law '" + law_id + "' has no instance checker");
}

/// Re-evaluates a witness with the laws-module checker it came from.
inline CheckReport replay(const std::string& law_id, const std::vector<Semicopula>& semicopulas,
                          const std::optional<BinaryOp>& op, const Witness& w, Tolerance tol = {})
{
  auto pointwise_report = [&](Sides sides, std::vector<NamedValue> inputs, std::string property) {
    if (le_tol(sides.lhs, sides.rhs, tol)) {
      return holds_report(law_id, "replay", 1);
    }
    return fails_report(law_id,
                        Witness{std::move(inputs), std::move(property), "<=", sides.lhs, sides.rhs, std::nullopt},
                        "replay", 1);
  };
  if (law_id == law::shift) {
    return pointwise_report(
        condition_shift_sides(semicopulas.at(0), w.input("a"), w.input("b"), w.input("c")), w.inputs, w.property);
  }
  if (law_id == law::three) {
    auto s = detail::three_semicopulas(semicopulas);
    return pointwise_report(condition_three_sides(s[0], s[1], s[2], w.input("x"), w.input("y"), w.input("z")),
                            w.inputs, w.property);
  }
  if (law_id == law::luka_dom) {
    return pointwise_report(lukasiewicz_sides(semicopulas.at(0), w.input("x"), w.input("y")), w.inputs,
                            w.property);
  }
  if (law_id == law::idempotency) {
    if (!op || !w.instance) {
      throw contract_error("idempotency replay needs the operator and the witness instance");
    }
    return check_commuting_instance(semicopulas.at(0), *op, *w.instance->capacity, *w.instance->f,
                                    *w.instance->g, tol);
  }
  if (!w.instance) {
    throw contract_error("witness carries no instance to replay");
  }
  return check_instance(law_id, semicopulas, op, *w.instance, tol);
}

/// Exhaustive scan of a pointwise inequality on the 1/d grid, in the checker's
/// fixed lexicographic order; stops after `budget` cases with a partial flag.
inline CheckReport search_pointwise(const SearchSpec& spec)
{
  detail::validate(spec);
  if (!is_pointwise_law(spec.law_id)) {
    throw domain_error("law '" + spec.law_id + "' is not a pointwise law");
  }
  if (spec.denominator < 2) {
    throw domain_error("pointwise search needs denominator >= 2");
  }
  const Value step = Value::exact(1, spec.denominator);
  const Semicopula& s = spec.semicopulas.front();
  if (spec.law_id == law::shift) {
    return check_condition_shift(s, step, spec.tolerance, spec.budget);
  }
  if (spec.law_id == law::three) {
    auto s3 = detail::three_semicopulas(spec.semicopulas);
    return check_condition_three(s3[0], s3[1], s3[2], step, spec.tolerance, spec.budget);
  }
  if (spec.law_id == law::luka_dom) {
    return check_lukasiewicz_dominated(s, step, spec.tolerance);
  }
  return check_idempotency(*spec.op, s, step, spec.tolerance);
}

namespace detail {

/// Function-side part of an integral-law case.
struct Tuple {
  std::vector<std::uint32_t> f;
  std::vector<std::uint32_t> g;
  std::uint32_t shift = 0;
  SubsetMask subset = 0;
};

inline bool comonotone_numerators(const std::vector<std::uint32_t>& f, const std::vector<std::uint32_t>& g)
{
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      const long df = static_cast<long>(f[i]) - static_cast<long>(f[j]);
      const long dg = static_cast<long>(g[i]) - static_cast<long>(g[j]);
      if ((df > 0 && dg < 0) || (df < 0 && dg > 0)) {
        return false;
      }
    }
  }
  return true;
}

/// All function tuples of a law in lexicographic order, or nullopt once more
/// than `cap` have been produced.
inline std::optional<std::vector<Tuple>> enumerate_tuples(const std::string& law_id, std::size_t n, std::uint32_t d,
                                                          std::uint64_t cap)
{
  std::uint64_t functions = 1;
  for (std::size_t i = 0; i < n; ++i) {
    functions *= d + 1;
    if (functions > cap) {
      return std::nullopt;
    }
  }
  auto digits = [&](std::uint64_t index) {
    std::vector<std::uint32_t> v(n);
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<std::uint32_t>(index % (d + 1));
      index /= d + 1;
    }
    return v;
  };
  std::vector<Tuple> out;
  const SubsetMask full = static_cast<SubsetMask>((1U << n) - 1);
  for (std::uint64_t fi = 0; fi < functions; ++fi) {
    auto f = digits(fi);
    if (uses_pair(law_id)) {
      for (std::uint64_t gi = 0; gi < functions; ++gi) {
        auto g = digits(gi);
        if (comonotone_numerators(f, g)) {
          out.push_back(Tuple{f, std::move(g), 0, 0});
          if (out.size() > cap) {
            return std::nullopt;
          }
        }
      }
      continue;
    }
    const std::uint32_t top = *std::max_element(f.begin(), f.end());
    for (std::uint32_t a = 0; a + top <= d; ++a) {
      const SubsetMask last = uses_subset(law_id) ? full : 0;
      for (SubsetMask m = 0; m <= last; ++m) {
        out.push_back(Tuple{f, {}, a, uses_subset(law_id) ? m : full});
        if (out.size() > cap) {
          return std::nullopt;
        }
      }
    }
  }
  return out;
}

inline Instance make_instance(const std::string& law_id, const FiniteSpace& space, Capacity mu, const Tuple& t,
                              std::uint32_t d)
{
  Instance inst;
  inst.capacity = std::move(mu);
  inst.f = grid_function(space, t.f, d);
  if (uses_pair(law_id)) {
    inst.g = grid_function(space, t.g, d);
  } else {
    inst.shift = Value::exact(t.shift, d);
  }
  if (uses_subset(law_id)) {
    inst.subset = t.subset;
  }
  return inst;
}

inline Instance random_instance(const std::string& law_id, const FiniteSpace& space, std::uint32_t d,
                                std::uint64_t seed, std::uint64_t index)
{
  const std::uint64_t case_seed = splitmix64(seed ^ splitmix64(index + 1));
  auto rng = make_rng(case_seed, 3);
  Instance inst;
  inst.capacity = random_capacity(space, case_seed, CapacityGenOptions{CapacityMode::uniform, d, {}});
  if (uses_pair(law_id)) {
    auto [f, g] = random_comonotone_pair(space, case_seed, d);
    inst.f = std::move(f);
    inst.g = std::move(g);
    return inst;
  }
  inst.f = random_function(space, case_seed, d);
  const rational room = (1 - inst.f->max().as_rational()) * d;
  const auto room_k = static_cast<std::uint32_t>(boost::multiprecision::numerator(room));
  inst.shift = Value::exact(uniform_int<std::uint32_t>(rng, 0, room_k), d);
  if (uses_subset(law_id)) {
    inst.subset = uniform_int<SubsetMask>(rng, 0, space.full_mask());
  }
  return inst;
}

} // namespace detail

/// Counterexample hunt for an integral-level law on an n-point space with
/// values on the 1/d grid. When every (capacity, function tuple) combination
/// fits in the budget the scan is exhaustive (capacities outermost, each in
/// increasing-mask lexicographic order); otherwise `budget` seeded random
/// cases are drawn and the report is flagged partial.
inline CheckReport search_integral_law(const SearchSpec& spec)
{
  detail::validate(spec);
  if (!is_integral_law(spec.law_id)) {
    throw domain_error("law '" + spec.law_id + "' is not an integral-level law");
  }
  const FiniteSpace space = FiniteSpace::with_size(spec.n);
  const std::uint32_t d = spec.denominator;
  const std::string where = "n=" + std::to_string(spec.n) + ", d=" + std::to_string(d);

  auto run_case = [&](const Instance& inst) -> std::optional<Witness> {
    auto r = check_instance(spec.law_id, spec.semicopulas, spec.op, inst, spec.tolerance);
    if (r.holds()) {
      return std::nullopt;
    }
    return std::move(*r.witness);
  };

  std::vector<std::vector<std::uint32_t>> capacities;
  bool fits = true;
  for_each_grid_capacity(space, d, [&](const std::vector<std::uint32_t>& num) {
    capacities.push_back(num);
    fits = capacities.size() <= spec.budget;
    return fits;
  });
  std::optional<std::vector<detail::Tuple>> tuples;
  if (fits) {
    tuples = detail::enumerate_tuples(spec.law_id, spec.n, d, spec.budget / capacities.size());
  }

  if (tuples && !tuples->empty()) {
    const std::uint64_t per = tuples->size();
    const std::uint64_t total = per * capacities.size();
    auto probe = [&](std::size_t ci) -> std::optional<std::pair<std::uint64_t, Witness>> {
      const Capacity mu = grid_capacity(space, capacities[ci], d);
      for (std::uint64_t ti = 0; ti < per; ++ti) {
        if (auto w = run_case(detail::make_instance(spec.law_id, space, mu, (*tuples)[ti], d))) {
          return std::pair(ci * per + ti + 1, std::move(*w));
        }
      }
      return std::nullopt;
    };
    const std::string desc = "exhaustive, " + where + ", " + std::to_string(capacities.size()) + " capacities x "
                             + std::to_string(per) + " function tuples";
    if (auto hit = detail::first_hit(capacities.size(), probe)) {
      return fails_report(spec.law_id, std::move(hit->second.second), desc, hit->second.first);
    }
    return holds_report(spec.law_id, desc, total);
  }

  auto probe = [&](std::size_t i) -> std::optional<Witness> {
    return run_case(detail::random_instance(spec.law_id, space, d, spec.seed, i));
  };
  const std::string desc = "sampled, " + where + ", seed " + std::to_string(spec.seed) + ", "
                           + std::to_string(spec.budget) + " random cases";
  if (auto hit = detail::first_hit(static_cast<std::size_t>(spec.budget), probe)) {
    return fails_report(spec.law_id, std::move(hit->second), desc, hit->first + 1, true);
  }
  return holds_report(spec.law_id, desc, spec.budget, true);
}

/// Property suite for an integral-level law: `cases` random instances, each
/// on a space of 1 to 6 points with its own denominator in [1, 64].
inline CheckReport check_random_cases(const std::string& law_id, const std::vector<Semicopula>& semicopulas,
                                      const std::optional<BinaryOp>& op, std::uint64_t cases, std::uint64_t seed,
                                      Tolerance tol = {})
{
  if (!is_integral_law(law_id)) {
    throw domain_error("law '" + law_id + "' is not an integral-level law");
  }
  if (law_id == law::commuting && !op) {
    throw domain_error("law 'commuting' needs an operator");
  }
  auto probe = [&](std::size_t i) -> std::optional<Witness> {
    auto rng = detail::make_rng(seed, 1000003ULL + i);
    const auto n = detail::uniform_int<std::size_t>(rng, 1, 6);
    const auto d = detail::uniform_int<std::uint32_t>(rng, 1, 64);
    auto inst = detail::random_instance(law_id, FiniteSpace::with_size(n), d, seed, i);
    auto r = check_instance(law_id, semicopulas, op, inst, tol);
    if (r.holds()) {
      return std::nullopt;
    }
    return std::move(*r.witness);
  };
  const std::string desc = "random suite, seed " + std::to_string(seed) + ", " + std::to_string(cases) + " cases";
  if (auto hit = detail::first_hit(static_cast<std::size_t>(cases), probe)) {
    return fails_report(law_id, std::move(hit->second), desc, hit->first + 1);
  }
  return holds_report(law_id, desc, cases);
}

/// Dispatches to search_pointwise or search_integral_law.
inline CheckReport search(const SearchSpec& spec)
{
  return is_pointwise_law(spec.law_id) ? search_pointwise(spec) : search_integral_law(spec);
}

} // namespace fuzzint

#endif
