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

#ifndef FUZZINT_IO_HPP
#define FUZZINT_IO_HPP

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "fuzzint/capacity.hpp"
#include "fuzzint/integral.hpp"
#include "fuzzint/report.hpp"
#include "fuzzint/scalar.hpp"

// JSON schemas:
//   capacity  {"points": ["a","b"], "mu": {"a": "1/2", "b": "3/10", "a,b": "1"}, "complete": "lower-envelope"}
//   function  {"f": {"a": "1", "b": "2/5"}}
//   instance  capacity fields plus "f", "g", "a" (shift) and "subset"
//   report    {"law_id", "verdict", "realization", "sample", "cases", "partial", "witness"?}
// Values are strings ("p/q" or decimals); plain JSON numbers are read through
// their shortest decimal spelling. Subset keys are comma-joined labels in any
// order and are written back sorted.

namespace fuzzint::io {

using json = nlohmann::json;

inline json to_json(const Value& v) { return render(v); }

inline Value value_from_json(const json& j, Realization r, const std::string& field)
{
  try {
    if (j.is_string()) {
      return parse_value(j.get<std::string>(), r);
    }
    if (j.is_number_integer() || j.is_number_unsigned()) {
      return parse_value(std::to_string(j.get<long long>()), r);
    }
    if (j.is_number_float()) {
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, j.get<double>());
      return parse_value(std::string(buf, ptr), r);
    }
  } catch (const error& e) {
    throw parse_error("field '" + field + "': " + e.what());
  }
  throw parse_error("field '" + field + "' must be a string or number");
}

inline const json& require(const json& j, const std::string& key, const std::string& context = {})
{
  if (!j.is_object() || !j.contains(key)) {
    throw parse_error("missing field '" + (context.empty() ? key : context + "." + key) + "'");
  }
  return j.at(key);
}

inline json to_json(const FiniteSpace& space) { return space.labels(); }

inline FiniteSpace space_from_json(const json& j)
{
  const json& points = require(j, "points");
  if (!points.is_array()) {
    throw parse_error("field 'points' must be an array of labels");
  }
  std::vector<std::string> labels;
  for (const auto& p : points) {
    if (!p.is_string()) {
      throw parse_error("field 'points' must contain strings");
    }
    labels.push_back(p.get<std::string>());
  }
  return FiniteSpace(std::move(labels));
}

/// Full table: every nonempty subset under its canonical key.
inline json to_json(const Capacity& mu)
{
  json out;
  out["points"] = to_json(mu.space());
  json table = json::object();
  for (SubsetMask m = 1; m <= mu.space().full_mask(); ++m) {
    table[mu.space().subset_key(m)] = to_json(mu(m));
  }
  out["mu"] = std::move(table);
  return out;
}

inline RawCapacity raw_capacity_from_json(const json& j, Realization r)
{
  RawCapacity raw{space_from_json(j), {}, false};
  const json& mu = require(j, "mu");
  if (!mu.is_object()) {
    throw parse_error("field 'mu' must be an object");
  }
  for (const auto& [key, v] : mu.items()) {
    SubsetMask mask = 0;
    try {
      mask = raw.space.parse_subset_key(key);
    } catch (const error& e) {
      throw parse_error("field 'mu." + key + "': " + e.what());
    }
    if (raw.values.count(mask)) {
      throw parse_error("field 'mu." + key + "' repeats subset {" + raw.space.subset_key(mask) + "}");
    }
    raw.values.emplace(mask, value_from_json(v, r, "mu." + key));
  }
  if (j.contains("complete")) {
    const json& mode = j.at("complete");
    if (mode == "lower-envelope") {
      raw.lower_envelope = true;
    } else if (mode != "none") {
      throw parse_error("field 'complete' must be \"lower-envelope\" or \"none\"");
    }
  }
  return raw;
}

inline Capacity capacity_from_json(const json& j, Realization r = Realization::exact)
{
  return validate_capacity(raw_capacity_from_json(j, r));
}

inline json to_json(const SimpleFunction& f)
{
  json out = json::object();
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[f.space().label(i)] = to_json(f[i]);
  }
  return out;
}

inline SimpleFunction function_from_json(const json& j, const FiniteSpace& space, Realization r,
                                         const std::string& field = "f")
{
  if (!j.is_object()) {
    throw parse_error("field '" + field + "' must be an object mapping labels to values");
  }
  std::vector<std::optional<Value>> values(space.size());
  for (const auto& [label, v] : j.items()) {
    std::size_t i = 0;
    try {
      i = space.index_of(label);
    } catch (const error& e) {
      throw parse_error("field '" + field + "." + label + "': " + e.what());
    }
    values[i] = value_from_json(v, r, field + "." + label);
  }
  std::vector<Value> out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!values[i]) {
      throw parse_error("field '" + field + "' has no value for point '" + space.label(i) + "'");
    }
    out.push_back(*values[i]);
  }
  return SimpleFunction(space, std::move(out));
}

inline json to_json(const Instance& inst)
{
  json out = json::object();
  if (inst.capacity) {
    out = to_json(*inst.capacity);
  }
  if (inst.f) {
    out["f"] = to_json(*inst.f);
  }
  if (inst.g) {
    out["g"] = to_json(*inst.g);
  }
  if (inst.shift) {
    out["a"] = to_json(*inst.shift);
  }
  if (inst.subset) {
    const FiniteSpace& space = inst.capacity ? inst.capacity->space() : inst.f->space();
    out["subset"] = space.subset_key(*inst.subset);
  }
  return out;
}

inline Instance instance_from_json(const json& j, Realization r)
{
  Instance inst;
  const FiniteSpace space = space_from_json(j);
  if (j.contains("mu")) {
    inst.capacity = capacity_from_json(j, r);
  }
  if (j.contains("f")) {
    inst.f = function_from_json(j.at("f"), space, r, "f");
  }
  if (j.contains("g")) {
    inst.g = function_from_json(j.at("g"), space, r, "g");
  }
  if (j.contains("a")) {
    inst.shift = value_from_json(j.at("a"), r, "a");
  }
  if (j.contains("subset")) {
    if (!j.at("subset").is_string()) {
      throw parse_error("field 'subset' must be a string of comma-joined labels");
    }
    inst.subset = space.parse_subset_key(j.at("subset").get<std::string>());
  }
  return inst;
}

inline json to_json(const Witness& w)
{
  json inputs = json::object();
  for (const auto& nv : w.inputs) {
    inputs[nv.name] = to_json(nv.value);
  }
  json out{{"inputs", std::move(inputs)},
           {"property", w.property},
           {"relation", w.relation},
           {"lhs", to_json(w.lhs)},
           {"rhs", to_json(w.rhs)}};
  if (w.instance) {
    out["instance"] = to_json(*w.instance);
  }
  return out;
}

inline Witness witness_from_json(const json& j, Realization r)
{
  Witness w;
  for (const auto& [name, v] : require(j, "inputs", "witness").items()) {
    w.inputs.push_back({name, value_from_json(v, r, "witness.inputs." + name)});
  }
  w.property = require(j, "property", "witness").get<std::string>();
  w.relation = require(j, "relation", "witness").get<std::string>();
  w.lhs = value_from_json(require(j, "lhs", "witness"), r, "witness.lhs");
  w.rhs = value_from_json(require(j, "rhs", "witness"), r, "witness.rhs");
  if (j.contains("instance")) {
    w.instance = instance_from_json(j.at("instance"), r);
  }
  return w;
}

inline Realization report_realization(const CheckReport& report)
{
  if (report.witness) {
    return report.witness->lhs.realization();
  }
  return Realization::exact;
}

inline json to_json(const CheckReport& report)
{
  json out{{"law_id", report.law_id},
           {"verdict", to_string(report.verdict)},
           {"realization", to_string(report_realization(report))},
           {"sample", report.sample_description},
           {"cases", report.cases},
           {"partial", report.partial}};
  if (report.witness) {
    out["witness"] = to_json(*report.witness);
  }
  return out;
}

inline CheckReport report_from_json(const json& j)
{
  CheckReport report;
  report.law_id = require(j, "law_id").get<std::string>();
  const std::string verdict = require(j, "verdict").get<std::string>();
  if (verdict == "fails") {
    report.verdict = Verdict::fails;
  } else if (verdict == "holds-on-sample") {
    report.verdict = Verdict::holds_on_sample;
  } else {
    throw parse_error("field 'verdict' must be \"holds-on-sample\" or \"fails\"");
  }
  const Realization r = j.value("realization", std::string("exact")) == "float" ? Realization::floating
                                                                                : Realization::exact;
  report.sample_description = j.value("sample", std::string());
  report.cases = j.value("cases", std::uint64_t{0});
  report.partial = j.value("partial", false);
  if (j.contains("witness")) {
    report.witness = witness_from_json(j.at("witness"), r);
  }
  if (report.verdict == Verdict::fails && !report.witness) {
    throw parse_error("a failing report needs a 'witness'");
  }
  return report;
}

inline json to_json(const IntegralResult& r)
{
  return json{{"value", to_json(r.value)}, {"argmax_t", to_json(r.argmax_threshold)}, {"method", to_string(r.method)}};
}

enum class Format { json, text };

inline std::string emit_text(const CheckReport& report)
{
  std::ostringstream os;
  os << report.law_id << ": " << to_string(report.verdict) << (report.partial ? " (partial)" : "") << "\n";
  os << "  sample: " << report.sample_description << "\n";
  os << "  cases:  " << report.cases << "\n";
  if (report.witness) {
    const Witness& w = *report.witness;
    os << "  witness:";
    for (const auto& nv : w.inputs) {
      os << " " << nv.name << "=" << render(nv.value);
    }
    os << "\n  " << w.property << ": lhs " << render(w.lhs) << " vs rhs " << render(w.rhs) << " (expected lhs "
       << w.relation << " rhs)\n";
    if (w.instance) {
      os << "  instance: " << to_json(*w.instance).dump() << "\n";
    }
  }
  return os.str();
}

inline std::string emit_report(const CheckReport& report, Format format = Format::json)
{
  if (format == Format::text) {
    return emit_text(report);
  }
  return to_json(report).dump(2) + "\n";
}

inline json read_json_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in) {
    throw parse_error(path + ": cannot open file");
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
}

/// Runs `read` and prefixes any parse failure with the file path.
template <class Read>
auto with_path(const std::string& path, Read read) -> decltype(read())
{
  try {
    return read();
  } catch (const capacity_error&) {
    throw;
  } catch (const json::exception& e) {
    throw parse_error(path + ": " + e.what());
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

struct Inputs {
  Capacity capacity;
  SimpleFunction f;
  std::optional<SimpleFunction> g;
};

/// Capacity file plus function file ({"f": {...}} with optional "g").
inline Inputs parse_inputs(const std::string& capacity_path, const std::string& function_path, Realization r)
{
  Capacity mu = with_path(capacity_path, [&] { return capacity_from_json(read_json_file(capacity_path), r); });
  json fj = read_json_file(function_path);
  return with_path(function_path, [&] {
    SimpleFunction f = function_from_json(require(fj, "f"), mu.space(), r, "f");
    std::optional<SimpleFunction> g;
    if (fj.contains("g")) {
      g = function_from_json(fj.at("g"), mu.space(), r, "g");
    }
    return Inputs{mu, std::move(f), std::move(g)};
  });
}

} // namespace fuzzint::io

#endif
