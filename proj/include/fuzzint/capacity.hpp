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

#ifndef FUZZINT_CAPACITY_HPP
#define FUZZINT_CAPACITY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fuzzint/detail/random.hpp"
#include "fuzzint/error.hpp"
#include "fuzzint/scalar.hpp"

namespace fuzzint {

/// Subset of a finite space: bit i set iff point i belongs to the subset.
using SubsetMask = std::uint32_t;

inline constexpr std::size_t max_space_size = 16;

inline bool is_subset(SubsetMask a, SubsetMask b) noexcept { return (a & ~b) == 0; }

/// A finite point set X with labelled points; the measurable sets are all of 2^X.
class FiniteSpace {
 public:
  explicit FiniteSpace(std::vector<std::string> labels) : labels_(std::move(labels))
  {
    if (labels_.empty() || labels_.size() > max_space_size) {
      throw domain_error("space size must be in [1, 16], got " + std::to_string(labels_.size()));
    }
    std::set<std::string> seen;
    for (const auto& l : labels_) {
      if (l.empty() || l.find(',') != std::string::npos || l == "∅") {
        throw parse_error("invalid point label '" + l + "'");
      }
      if (!seen.insert(l).second) {
        throw parse_error("duplicate point label '" + l + "'");
      }
    }
  }

  /// n points labelled a, b, c, ...
  static FiniteSpace with_size(std::size_t n)
  {
    if (n == 0 || n > max_space_size) {
      throw domain_error("space size must be in [1, 16], got " + std::to_string(n));
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.emplace_back(1, static_cast<char>('a' + i));
    }
    return FiniteSpace(std::move(labels));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  SubsetMask full_mask() const noexcept { return static_cast<SubsetMask>((1UL << labels_.size()) - 1); }
  std::size_t subset_count() const noexcept { return std::size_t{1} << labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::size_t index_of(const std::string& label) const
  {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
      throw parse_error("unknown point label '" + label + "'");
    }
    return static_cast<std::size_t>(it - labels_.begin());
  }

  /// Canonical key: member labels sorted lexicographically, comma-joined; "∅" for the empty set.
  std::string subset_key(SubsetMask mask) const
  {
    std::vector<std::string> members;
    for (std::size_t i = 0; i < size(); ++i) {
      if (mask & (SubsetMask{1} << i)) {
        members.push_back(labels_[i]);
      }
    }
    if (members.empty()) {
      return "∅";
    }
    std::sort(members.begin(), members.end());
    std::string key = members.front();
    for (std::size_t i = 1; i < members.size(); ++i) {
      key += "," + members[i];
    }
    return key;
  }

  /// Accepts any order of labels ("b,a" reads as {a,b}); "" and "∅" are the empty set.
  SubsetMask parse_subset_key(const std::string& key) const
  {
    SubsetMask mask = 0;
    if (key.empty() || key == "∅") {
      return mask;
    }
    std::size_t start = 0;
    while (start <= key.size()) {
      std::size_t end = key.find(',', start);
      if (end == std::string::npos) {
        end = key.size();
      }
      std::string label = key.substr(start, end - start);
      label.erase(0, label.find_first_not_of(' '));
      label.erase(label.find_last_not_of(' ') + 1);
      mask |= SubsetMask{1} << index_of(label);
      start = end + 1;
    }
    return mask;
  }

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Raised by validate_capacity; names the violated constraint and the witnessing subsets.
class capacity_error : public error {
 public:
  enum class Kind { boundary, monotonicity, missing_subset, realization };

  capacity_error(Kind kind, std::string what, SubsetMask first = 0, SubsetMask second = 0)
      : error(std::move(what)), kind_(kind), first_(first), second_(second)
  {
  }

  Kind kind() const noexcept { return kind_; }
  /// Offending subset; for monotonicity the smaller set A of the pair A ⊆ B.
  SubsetMask first() const noexcept { return first_; }
  SubsetMask second() const noexcept { return second_; }

 private:
  Kind kind_;
  SubsetMask first_;
  SubsetMask second_;
};

/// Unvalidated subset-value table as read from input.
struct RawCapacity {
  FiniteSpace space;
  std::map<SubsetMask, Value> values;
  /// Fill unspecified subsets with max{μ(B) : B ⊆ A, B specified}.
  bool lower_envelope = false;
};

class Capacity;
Capacity validate_capacity(const RawCapacity& raw);

/// Monotone normalized set function on 2^X, stored as a dense table indexed by mask.
class Capacity {
 public:
  const FiniteSpace& space() const noexcept { return space_; }
  const Value& operator()(SubsetMask mask) const { return table_.at(mask); }
  const std::vector<Value>& table() const noexcept { return table_; }
  Realization realization() const noexcept { return table_.front().realization(); }

  /// Same set function in another realization (exact -> float rounds).
  Capacity to(Realization r) const
  {
    Capacity c = *this;
    for (auto& v : c.table_) {
      v = v.to(r);
    }
    return c;
  }

  friend bool operator==(const Capacity& a, const Capacity& b)
  {
    return a.space_ == b.space_ && a.table_ == b.table_;
  }

 private:
  Capacity(FiniteSpace space, std::vector<Value> table) : space_(std::move(space)), table_(std::move(table)) {}

  friend Capacity validate_capacity(const RawCapacity& raw);

  FiniteSpace space_;
  std::vector<Value> table_;
};

inline Capacity validate_capacity(const RawCapacity& raw)
{
  const FiniteSpace& space = raw.space;
  const SubsetMask full = space.full_mask();
  std::optional<Realization> realization;
  for (const auto& [mask, v] : raw.values) {
    if (mask > full) {
      throw capacity_error(capacity_error::Kind::missing_subset, "subset mask outside the space", mask);
    }
    if (realization && *realization != v.realization()) {
      throw capacity_error(capacity_error::Kind::realization, "capacity mixes exact and float values", mask);
    }
    realization = v.realization();
  }
  const Realization r = realization.value_or(Realization::exact);

  std::vector<Value> table(space.subset_count(), Value::zero(r));
  if (auto it = raw.values.find(0); it != raw.values.end()) {
    table[0] = it->second;
  }
  for (SubsetMask mask = 1; mask <= full; ++mask) {
    if (auto it = raw.values.find(mask); it != raw.values.end()) {
      table[mask] = it->second;
    } else if (mask == full && raw.lower_envelope) {
      table[mask] = Value::one(r);
    } else if (raw.lower_envelope) {
      // Every specified B ⊊ A lies below some A \ {x}.
      Value env = Value::zero(r);
      for (std::size_t i = 0; i < space.size(); ++i) {
        const SubsetMask bit = SubsetMask{1} << i;
        if (mask & bit) {
          env = v_join(env, table[mask & ~bit]);
        }
      }
      table[mask] = env;
    } else {
      throw capacity_error(capacity_error::Kind::missing_subset,
                           "no value for subset {" + space.subset_key(mask) + "}", mask);
    }
  }

  for (SubsetMask mask = 0; mask < full; ++mask) {
    for (std::size_t i = 0; i < space.size(); ++i) {
      const SubsetMask bit = SubsetMask{1} << i;
      if (mask & bit) {
        continue;
      }
      if (table[mask] > table[mask | bit]) {
        throw capacity_error(capacity_error::Kind::monotonicity,
                             "not monotone: μ({" + space.subset_key(mask) + "}) = " + render(table[mask]) + " > μ({"
                                 + space.subset_key(mask | bit) + "}) = " + render(table[mask | bit]),
                             mask, mask | bit);
      }
    }
  }
  if (!table[0].is_zero()) {
    throw capacity_error(capacity_error::Kind::boundary, "μ(∅) = " + render(table[0]) + " ≠ 0", 0);
  }
  if (!table[full].is_one()) {
    throw capacity_error(capacity_error::Kind::boundary, "μ(X) = " + render(table[full]) + " ≠ 1", full);
  }
  return Capacity(space, std::move(table));
}

/// Capacity from a full table (index = mask); throws capacity_error like validate_capacity.
inline Capacity capacity_from_table(const FiniteSpace& space, const std::vector<Value>& table)
{
  if (table.size() != space.subset_count()) {
    throw capacity_error(capacity_error::Kind::missing_subset, "table size does not match 2^n");
  }
  RawCapacity raw{space, {}, false};
  for (SubsetMask m = 0; m < table.size(); ++m) {
    raw.values.emplace(m, table[m]);
  }
  return validate_capacity(raw);
}

/// [0,1]-valued function on a finite space, one value per point.
class SimpleFunction {
 public:
  SimpleFunction(FiniteSpace space, std::vector<Value> values) : space_(std::move(space)), values_(std::move(values))
  {
    if (values_.size() != space_.size()) {
      throw domain_error("function has " + std::to_string(values_.size()) + " values for a space of "
                         + std::to_string(space_.size()) + " points");
    }
    for (const auto& v : values_) {
      values_.front().require_same(v);
    }
  }

  static SimpleFunction constant(const FiniteSpace& space, const Value& c)
  {
    return SimpleFunction(space, std::vector<Value>(space.size(), c));
  }

  static SimpleFunction indicator(const FiniteSpace& space, SubsetMask mask, Realization r = Realization::exact)
  {
    std::vector<Value> v;
    for (std::size_t i = 0; i < space.size(); ++i) {
      v.push_back((mask & (SubsetMask{1} << i)) ? Value::one(r) : Value::zero(r));
    }
    return SimpleFunction(space, std::move(v));
  }

  const FiniteSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Value& operator[](std::size_t i) const { return values_.at(i); }
  const std::vector<Value>& values() const noexcept { return values_; }
  Realization realization() const noexcept { return values_.front().realization(); }

  Value max() const { return *std::max_element(values_.begin(), values_.end()); }
  Value min() const { return *std::min_element(values_.begin(), values_.end()); }

  /// Distinct values in ascending order.
  std::vector<Value> distinct_values() const
  {
    std::vector<Value> out = values_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  SimpleFunction to(Realization r) const
  {
    SimpleFunction f = *this;
    for (auto& v : f.values_) {
      v = v.to(r);
    }
    return f;
  }

  friend bool operator==(const SimpleFunction& a, const SimpleFunction& b)
  {
    return a.space_ == b.space_ && a.values_ == b.values_;
  }

 private:
  FiniteSpace space_;
  std::vector<Value> values_;
};

inline void require_same_space(const FiniteSpace& a, const FiniteSpace& b)
{
  if (!(a == b)) {
    throw domain_error("operands live on different spaces");
  }
}

/// Pointwise combination h(x) = op(f(x), g(x)).
template <class Op>
SimpleFunction pointwise(const SimpleFunction& f, const SimpleFunction& g, Op&& op)
{
  require_same_space(f.space(), g.space());
  std::vector<Value> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.push_back(op(f[i], g[i]));
  }
  return SimpleFunction(f.space(), std::move(out));
}

inline SimpleFunction pointwise_join(const SimpleFunction& f, const SimpleFunction& g)
{
  return pointwise(f, g, [](const Value& x, const Value& y) { return v_join(x, y); });
}

inline SimpleFunction pointwise_meet(const SimpleFunction& f, const SimpleFunction& g)
{
  return pointwise(f, g, [](const Value& x, const Value& y) { return v_meet(x, y); });
}

/// f + a; requires f + a ≤ 1 everywhere.
inline SimpleFunction shifted(const SimpleFunction& f, const Value& a)
{
  std::vector<Value> out;
  for (const auto& v : f.values()) {
    const bool overflow = v.is_exact() ? v > v_complement(a) : v.as_double() + a.as_double() > 1.0 + 1e-12;
    if (overflow) {
      throw domain_error("f + a exceeds 1 (f = " + render(v) + ", a = " + render(a) + ")");
    }
    out.push_back(v_add_clamped(v, a));
  }
  return SimpleFunction(f.space(), std::move(out));
}

/// f · 1_A: f on A, zero elsewhere.
inline SimpleFunction restricted(const SimpleFunction& f, SubsetMask mask)
{
  std::vector<Value> out;
  const Value zero = Value::zero(f.realization());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.push_back((mask & (SubsetMask{1} << i)) ? f[i] : zero);
  }
  return SimpleFunction(f.space(), std::move(out));
}

/// {x : f(x) ≥ t}
inline SubsetMask superlevel_set(const SimpleFunction& f, const Value& t)
{
  SubsetMask mask = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] >= t) {
      mask |= SubsetMask{1} << i;
    }
  }
  return mask;
}

/// μ({f ≥ t})
inline Value superlevel_measure(const Capacity& mu, const SimpleFunction& f, const Value& t)
{
  require_same_space(mu.space(), f.space());
  if (mu.realization() != f.realization()) {
    throw realization_mismatch("capacity and function use different realizations");
  }
  return mu(superlevel_set(f, t));
}

enum class CapacityMode { uniform, additive, possibility };

struct CapacityGenOptions {
  CapacityMode mode = CapacityMode::uniform;
  /// Common denominator of generated values; 0 draws one from [1, 64].
  std::uint32_t denominator = 0;
  /// Point weights for additive/possibility modes; drawn at random when empty.
  std::vector<Value> weights;
  Realization realization = Realization::exact;
};

namespace detail {

inline std::uint32_t pick_denominator(std::mt19937_64& rng, std::uint32_t requested)
{
  if (requested > 0) {
    return requested;
  }
  return uniform_int<std::uint32_t>(rng, 1, 64);
}

} // namespace detail

/// Additive capacity μ(A) = Σ_{i∈A} w_i / Σ w.
inline Capacity additive_capacity(const FiniteSpace& space, const std::vector<Value>& weights)
{
  if (weights.size() != space.size()) {
    throw domain_error("one weight per point required");
  }
  rational total = 0;
  for (const auto& w : weights) {
    total += w.as_rational();
  }
  if (total == 0) {
    throw domain_error("weights sum to zero");
  }
  std::vector<Value> table;
  for (SubsetMask m = 0; m < space.subset_count(); ++m) {
    rational s = 0;
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (m & (SubsetMask{1} << i)) {
        s += weights[i].as_rational();
      }
    }
    table.push_back(Value::exact(s / total));
  }
  return capacity_from_table(space, table);
}

/// Possibility measure μ(A) = max_{i∈A} w_i / max w.
inline Capacity possibility_capacity(const FiniteSpace& space, const std::vector<Value>& weights)
{
  if (weights.size() != space.size()) {
    throw domain_error("one weight per point required");
  }
  rational top = 0;
  for (const auto& w : weights) {
    top = std::max(top, w.as_rational());
  }
  if (top == 0) {
    throw domain_error("all weights are zero");
  }
  std::vector<Value> table;
  for (SubsetMask m = 0; m < space.subset_count(); ++m) {
    rational s = 0;
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (m & (SubsetMask{1} << i)) {
        s = std::max(s, weights[i].as_rational());
      }
    }
    table.push_back(Value::exact(s / top));
  }
  return capacity_from_table(space, table);
}

/// Uniform additive capacity μ(A) = |A| / n.
inline Capacity uniform_capacity(const FiniteSpace& space)
{
  return additive_capacity(space, std::vector<Value>(space.size(), Value::one(Realization::exact)));
}

/// Random capacity, deterministic per (space, seed, options). Uniform mode draws
/// k/d i.i.d. per nonempty proper subset and repairs monotonicity by an upward sweep.
inline Capacity random_capacity(const FiniteSpace& space, std::uint64_t seed, const CapacityGenOptions& opt = {})
{
  auto rng = detail::make_rng(seed);
  const std::uint32_t d = detail::pick_denominator(rng, opt.denominator);

  Capacity mu = [&] {
    switch (opt.mode) {
    case CapacityMode::additive:
    case CapacityMode::possibility: {
      std::vector<Value> w = opt.weights;
      if (w.empty()) {
        for (std::size_t i = 0; i < space.size(); ++i) {
          w.push_back(Value::exact(detail::uniform_int<std::uint32_t>(rng, 1, d), d));
        }
      }
      return opt.mode == CapacityMode::additive ? additive_capacity(space, w) : possibility_capacity(space, w);
    }
    case CapacityMode::uniform:
      break;
    }
    const SubsetMask full = space.full_mask();
    std::vector<std::uint32_t> raw(space.subset_count(), 0);
    for (SubsetMask m = 1; m < full; ++m) {
      raw[m] = detail::uniform_int<std::uint32_t>(rng, 0, d);
    }
    raw[full] = d;
    for (SubsetMask m = 1; m < full; ++m) {
      for (std::size_t i = 0; i < space.size(); ++i) {
        const SubsetMask bit = SubsetMask{1} << i;
        if (m & bit) {
          raw[m] = std::max(raw[m], raw[m & ~bit]);
        }
      }
    }
    std::vector<Value> table;
    for (auto k : raw) {
      table.push_back(Value::exact(k, d));
    }
    return capacity_from_table(space, table);
  }();
  return opt.realization == Realization::exact ? mu : mu.to(opt.realization);
}

/// Random function with values k/d (d drawn from [1, 64] when 0).
inline SimpleFunction random_function(const FiniteSpace& space, std::uint64_t seed, std::uint32_t denominator = 0,
                                      Realization r = Realization::exact)
{
  auto rng = detail::make_rng(seed, 1);
  const std::uint32_t d = detail::pick_denominator(rng, denominator);
  std::vector<Value> v;
  for (std::size_t i = 0; i < space.size(); ++i) {
    v.push_back(Value::exact(detail::uniform_int<std::uint32_t>(rng, 0, d), d).to(r));
  }
  return SimpleFunction(space, std::move(v));
}

/// Two functions that are both non-decreasing along one shared random
/// permutation of the points, hence comonotone.
inline std::pair<SimpleFunction, SimpleFunction> random_comonotone_pair(const FiniteSpace& space, std::uint64_t seed,
                                                                        std::uint32_t denominator = 0,
                                                                        Realization r = Realization::exact)
{
  auto rng = detail::make_rng(seed, 2);
  const std::uint32_t d = detail::pick_denominator(rng, denominator);
  std::vector<std::size_t> order(space.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  auto sorted_draw = [&] {
    std::vector<std::uint32_t> k(space.size());
    for (auto& x : k) {
      x = detail::uniform_int<std::uint32_t>(rng, 0, d);
    }
    std::sort(k.begin(), k.end());
    std::vector<Value> v(space.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
      v[order[i]] = Value::exact(k[i], d).to(r);
    }
    return SimpleFunction(space, std::move(v));
  };
  auto f = sorted_draw();
  auto g = sorted_draw();
  return {std::move(f), std::move(g)};
}

} // namespace fuzzint

#endif
