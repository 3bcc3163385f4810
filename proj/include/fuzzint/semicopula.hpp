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

#ifndef FUZZINT_SEMICOPULA_HPP
#define FUZZINT_SEMICOPULA_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzint/detail/parallel.hpp"
#include "fuzzint/error.hpp"
#include "fuzzint/report.hpp"
#include "fuzzint/scalar.hpp"

namespace fuzzint {

enum class SemicopulaKind { min, product, lukasiewicz, drastic, user_defined };

/// Binary operation on [0,1]² with neutral element 1, non-decreasing in both
/// arguments. Builtins evaluate in both realizations; user-defined evaluators
/// are float only.
class Semicopula {
 public:
  using FloatEvaluator = std::function<double(double, double)>;

  /// M(x,y) = x ∧ y
  static Semicopula min() { return Semicopula(SemicopulaKind::min, "min"); }
  /// Π(x,y) = x·y
  static Semicopula product() { return Semicopula(SemicopulaKind::product, "prod"); }
  /// S_L(x,y) = (x + y - 1) ∨ 0
  static Semicopula lukasiewicz() { return Semicopula(SemicopulaKind::lukasiewicz, "lukasiewicz"); }
  /// S_D(x,y) = x ∧ y if x ∨ y = 1, else 0
  static Semicopula drastic() { return Semicopula(SemicopulaKind::drastic, "drastic"); }

  static Semicopula user_defined(std::string name, FloatEvaluator eval)
  {
    Semicopula s(SemicopulaKind::user_defined, std::move(name));
    s.eval_ = std::move(eval);
    return s;
  }

  SemicopulaKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  bool is_builtin() const noexcept { return kind_ != SemicopulaKind::user_defined; }

  Value operator()(const Value& x, const Value& y) const
  {
    x.require_same(y);
    switch (kind_) {
    case SemicopulaKind::min:
      return v_meet(x, y);
    case SemicopulaKind::product:
      return v_mul(x, y);
    case SemicopulaKind::lukasiewicz:
      return v_sub_floored(x, v_complement(y));
    case SemicopulaKind::drastic:
      if (x.is_one()) {
        return y;
      }
      if (y.is_one()) {
        return x;
      }
      return Value::zero(x.realization());
    case SemicopulaKind::user_defined:
      break;
    }
    if (x.is_exact()) {
      throw unsupported_realization("semicopula '" + name_ + "' is user-defined and has no exact evaluation");
    }
    return Value::floating(eval_(x.as_double(), y.as_double()));
  }

 private:
  Semicopula(SemicopulaKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  SemicopulaKind kind_;
  std::string name_;
  FloatEvaluator eval_;
};

inline Value s_eval(const Semicopula& s, const Value& x, const Value& y) { return s(x, y); }

inline std::vector<Semicopula> builtin_semicopulas()
{
  return {Semicopula::min(), Semicopula::product(), Semicopula::lukasiewicz(), Semicopula::drastic()};
}

/// "min", "prod", "lukasiewicz" or "drastic".
inline Semicopula builtin_semicopula(std::string_view name)
{
  for (auto& s : builtin_semicopulas()) {
    if (s.name() == name) {
      return s;
    }
  }
  if (name == "product") {
    return Semicopula::product();
  }
  throw parse_error("unknown semicopula '" + std::string(name) + "'");
}

enum class OperatorClass { semicopula, t_coseminorm, unconstrained };

inline const char* to_string(OperatorClass c) noexcept
{
  switch (c) {
  case OperatorClass::semicopula:
    return "semicopula";
  case OperatorClass::t_coseminorm:
    return "t-coseminorm";
  case OperatorClass::unconstrained:
    break;
  }
  return "unconstrained";
}

/// General operator ∘ : [0,1]² → [0,1].
class BinaryOp {
 public:
  using Evaluator = std::function<Value(const Value&, const Value&)>;

  BinaryOp(std::string name, OperatorClass claimed, Evaluator eval)
      : name_(std::move(name)), claimed_(claimed), eval_(std::move(eval))
  {
  }

  /// Float-only operator; exact inputs raise unsupported_realization.
  static BinaryOp from_double(std::string name, std::function<double(double, double)> fn,
                              OperatorClass claimed = OperatorClass::unconstrained)
  {
    std::string label = name;
    return BinaryOp(std::move(name), claimed,
                    [fn = std::move(fn), label = std::move(label)](const Value& x, const Value& y) {
                      x.require_same(y);
                      if (x.is_exact()) {
                        throw unsupported_realization("operator '" + label + "' has no exact evaluation");
                      }
                      return Value::floating(fn(x.as_double(), y.as_double()));
                    });
  }

  const std::string& name() const noexcept { return name_; }
  OperatorClass claimed_class() const noexcept { return claimed_; }
  Value operator()(const Value& x, const Value& y) const { return eval_(x, y); }

 private:
  std::string name_;
  OperatorClass claimed_;
  Evaluator eval_;
};

inline BinaryOp as_binary_op(const Semicopula& s)
{
  return BinaryOp(s.name(), OperatorClass::semicopula, [s](const Value& x, const Value& y) { return s(x, y); });
}

/// x ∨ y, the t-coseminorm dual to M.
inline BinaryOp join_op()
{
  return BinaryOp("join", OperatorClass::t_coseminorm, [](const Value& x, const Value& y) { return v_join(x, y); });
}

/// x ∧ y
inline BinaryOp meet_op()
{
  return BinaryOp("meet", OperatorClass::semicopula, [](const Value& x, const Value& y) { return v_meet(x, y); });
}

namespace detail {

inline std::string dual_name(const std::string& name)
{
  if (name == "join") {
    return "meet";
  }
  if (name == "meet") {
    return "join";
  }
  if (name.rfind("co:", 0) == 0) {
    return name.substr(3);
  }
  return "co:" + name;
}

inline OperatorClass dual_class(OperatorClass c)
{
  switch (c) {
  case OperatorClass::semicopula:
    return OperatorClass::t_coseminorm;
  case OperatorClass::t_coseminorm:
    return OperatorClass::semicopula;
  case OperatorClass::unconstrained:
    break;
  }
  return OperatorClass::unconstrained;
}

} // namespace detail

/// op*(x,y) = 1 - op(1-x, 1-y). Applying it twice gives back op's values.
inline BinaryOp dual(const BinaryOp& op)
{
  return BinaryOp(detail::dual_name(op.name()), detail::dual_class(op.claimed_class()),
                  [op](const Value& x, const Value& y) { return v_complement(op(v_complement(x), v_complement(y))); });
}

/// S*(x,y) = 1 - S(1-x, 1-y)
inline BinaryOp coseminorm_of(const Semicopula& s) { return dual(as_binary_op(s)); }

/// Operator by CLI name: a builtin semicopula name, "meet", "join", or
/// "co:<name>" for the dual of any of these.
inline BinaryOp parse_operator(std::string_view name)
{
  if (name.rfind("co:", 0) == 0) {
    return dual(parse_operator(name.substr(3)));
  }
  if (name == "meet") {
    return meet_op();
  }
  if (name == "join" || name == "max") {
    return join_op();
  }
  return as_binary_op(builtin_semicopula(name));
}

/// {0, step, 2·step, ..., 1}; 1 is appended when step does not divide it.
inline std::vector<Value> uniform_grid(const Value& step)
{
  const Realization r = step.realization();
  if (step.is_zero() || step > Value::exact(1, 2).to(r)) {
    throw domain_error("grid step must lie in (0, 1/2], got " + render(step));
  }
  std::vector<Value> grid;
  if (r == Realization::exact) {
    const rational& s = step.as_rational();
    for (rational k = 0; k * s <= 1; k += 1) {
      grid.push_back(Value::exact(k * s));
    }
  } else {
    const double s = step.as_double();
    for (std::size_t k = 0;; ++k) {
      const double v = static_cast<double>(k) * s;
      if (v > 1.0 - 1e-12) {
        break;
      }
      grid.push_back(Value::floating(v));
    }
  }
  if (!grid.back().is_one()) {
    grid.push_back(Value::one(r));
  }
  return grid;
}

inline std::string grid_description(const Value& step, std::size_t points)
{
  return "grid step " + render(step) + " (" + std::to_string(points) + " points per axis)";
}

/// Audits neutrality of 1, coordinatewise monotonicity and range on the
/// uniform grid. Pairs are scanned in lexicographic (x, y) order and the
/// first violation is reported.
inline CheckReport audit_axioms(const BinaryOp& op, const Value& grid_step, Tolerance tol = {})
{
  const auto grid = uniform_grid(grid_step);
  const std::size_t m = grid.size();
  const Realization r = grid_step.realization();

  struct Eval {
    std::optional<Value> value;
    std::string error;
  };
  auto eval = [&](const Value& x, const Value& y) -> Eval {
    try {
      return {op(x, y), {}};
    } catch (const domain_error& e) {
      return {std::nullopt, e.what()};
    }
  };

  auto probe = [&](std::size_t i) -> std::optional<std::pair<std::size_t, Witness>> {
    const Value& x = grid[i];
    for (std::size_t j = 0; j < m; ++j) {
      const Value& y = grid[j];
      auto found = [j](Witness w) { return std::optional(std::pair(j, std::move(w))); };
      auto here = eval(x, y);
      if (!here.value) {
        return found(Witness{{{"x", x}, {"y", y}}, "range: " + here.error, "in [0,1]", Value::zero(r), Value::zero(r),
                             std::nullopt});
      }
      const Value& v = *here.value;
      if (y.is_one() && !eq_tol(v, x, tol)) {
        return found(Witness{{{"x", x}, {"y", y}}, "neutrality", "==", v, x, std::nullopt});
      }
      if (x.is_one() && !eq_tol(v, y, tol)) {
        return found(Witness{{{"x", x}, {"y", y}}, "neutrality", "==", v, y, std::nullopt});
      }
      if (i + 1 < m) {
        auto right = eval(grid[i + 1], y);
        if (right.value && !le_tol(v, *right.value, tol)) {
          return found(Witness{{{"x", x}, {"x_next", grid[i + 1]}, {"y", y}}, "monotone-x", "<=", v,
                               *right.value, std::nullopt});
        }
      }
      if (j + 1 < m) {
        auto up = eval(x, grid[j + 1]);
        if (up.value && !le_tol(v, *up.value, tol)) {
          return found(Witness{{{"x", x}, {"y", y}, {"y_next", grid[j + 1]}}, "monotone-y", "<=", v, *up.value,
                               std::nullopt});
        }
      }
    }
    return std::nullopt;
  };

  const std::string desc = grid_description(grid_step, m);
  if (auto hit = detail::first_hit(m, probe)) {
    const std::uint64_t cases = static_cast<std::uint64_t>(hit->first) * m + hit->second.first + 1;
    return fails_report("axioms:" + op.name(), std::move(hit->second.second), desc, cases);
  }
  return holds_report("axioms:" + op.name(), desc, static_cast<std::uint64_t>(m) * m);
}

inline CheckReport audit_axioms(const Semicopula& s, const Value& grid_step, Tolerance tol = {})
{
  return audit_axioms(as_binary_op(s), grid_step, tol);
}

} // namespace fuzzint

#endif
