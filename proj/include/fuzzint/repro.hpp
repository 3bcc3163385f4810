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

#ifndef FUZZINT_REPRO_HPP
#define FUZZINT_REPRO_HPP

#include <string>
#include <vector>

#include "fuzzint/capacity.hpp"
#include "fuzzint/integral.hpp"
#include "fuzzint/laws.hpp"

namespace fuzzint {

/// The Shilkret-integral counterexample to commuting with ∧ on X = {a, b}:
/// μ({a}) = 1/2, μ({b}) = β, f = (1, 2/5), g = (4/5, 3/5).
struct ReproCase {
  Capacity capacity;
  SimpleFunction f;
  SimpleFunction g;
};

inline ReproCase repro_case(const Value& beta, Realization r = Realization::exact)
{
  const FiniteSpace space({"a", "b"});
  auto q = [r](std::int64_t p, std::int64_t d) { return Value::exact(p, d).to(r); };
  Capacity mu = capacity_from_table(space, {q(0, 1), q(1, 2), beta.to(r), q(1, 1)});
  SimpleFunction f(space, {q(1, 1), q(2, 5)});
  SimpleFunction g(space, {q(4, 5), q(3, 5)});
  return {std::move(mu), std::move(f), std::move(g)};
}

struct ReproLine {
  std::string name;
  Value expected;
  Value actual;
  bool ok = false;
};

struct ReproReport {
  std::vector<ReproLine> lines;
  /// I(f ∧ g) < I(f) ∧ I(g)
  bool strict_failure = false;
  bool ok = false;
};

inline ReproReport run_repro(const Value& beta = Value::exact(3, 10), Realization r = Realization::exact,
                             Tolerance tol = {})
{
  const ReproCase c = repro_case(beta, r);
  const Semicopula pi = Semicopula::product();
  auto q = [r](std::int64_t p, std::int64_t d) { return Value::exact(p, d).to(r); };

  const Value i_f = eval_integral(pi, c.capacity, c.f).value;
  const Value i_g = eval_integral(pi, c.capacity, c.g).value;
  const Value i_fg = eval_integral(pi, c.capacity, pointwise_meet(c.f, c.g)).value;

  ReproReport report;
  report.lines = {{"I_prod(mu, f)", q(1, 2), i_f, eq_tol(i_f, q(1, 2), tol)},
                  {"I_prod(mu, g)", q(3, 5), i_g, eq_tol(i_g, q(3, 5), tol)},
                  {"I_prod(mu, f meet g)", q(2, 5), i_fg, eq_tol(i_fg, q(2, 5), tol)}};
  const Value rhs = v_meet(i_f, i_g);
  report.strict_failure = i_fg < rhs && !eq_tol(i_fg, rhs, tol) && is_comonotone(c.f, c.g);
  report.ok = report.strict_failure;
  for (const auto& l : report.lines) {
    report.ok = report.ok && l.ok;
  }
  return report;
}

} // namespace fuzzint

#endif
