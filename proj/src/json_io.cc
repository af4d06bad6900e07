// Copyright 2026 The wreathrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wreathrep/json_io.h"

namespace wreathrep {

Json ToJson(const Partition& p) {
  Json j = Json::array();
  for (int part : p.parts()) j.push_back(part);
  return j;
}

Partition PartitionFromJson(const Json& j) {
  return Partition(j.get<std::vector<int>>());
}

Json ToJson(const MultiplicityVector& v) {
  Json j = Json::array();
  for (const auto& [lambda, mult] : v.entries()) {
    j.push_back(Json{{"partition", ToJson(lambda)}, {"mult", mult}});
  }
  return j;
}

MultiplicityVector MultiplicityVectorFromJson(const Json& j, int level_size) {
  MultiplicityVector v(level_size);
  for (const Json& entry : j) {
    v.Add(PartitionFromJson(entry.at("partition")),
          entry.at("mult").get<std::int64_t>());
  }
  return v;
}

Json ToJson(const ClassFunction& f) {
  Json values = Json::array();
  for (const Partition& rho : PartitionsOf(f.level_size())) {
    const BigInt v = f.at(rho);
    Json value = v.convert_to<std::int64_t>();
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
      value = v.str();
    }
    values.push_back(Json{{"type", ToJson(rho)}, {"value", value}});
  }
  return Json{{"N", f.level_size()}, {"values", values}};
}

ClassFunction ClassFunctionFromJson(const Json& j) {
  ClassFunction f(j.at("N").get<int>());
  for (const Json& entry : j.at("values")) {
    const Json& value = entry.at("value");
    f.Set(PartitionFromJson(entry.at("type")),
          value.is_string() ? BigInt(value.get<std::string>())
                            : BigInt(value.get<std::int64_t>()));
  }
  return f;
}

Json ToJson(const GroupedObject& x) {
  Json j = Json::array();
  for (const auto& block : x.Blocks()) {
    Json b = Json::array();
    for (int p : block) b.push_back(p + 1);
    j.push_back(b);
  }
  return j;
}

GroupedObject GroupedObjectFromJson(const Json& j, FamilyKind kind) {
  std::vector<std::vector<int>> blocks;
  for (const Json& b : j) {
    std::vector<int> block;
    for (const Json& p : b) block.push_back(p.get<int>() - 1);
    blocks.push_back(std::move(block));
  }
  return GroupedObject(kind, std::move(blocks));
}

Json ToJson(const FormalMatchingSum& s) {
  Json j = Json::array();
  for (const auto& [m, coeff] : s.terms()) {
    Json edges = Json::array();
    for (const auto& [a, b] : m) edges.push_back(Json::array({a + 1, b + 1}));
    j.push_back(Json{{"matching", edges}, {"coeff", coeff}});
  }
  return j;
}

Json ToJson(const LevelResult& r) {
  Json j{{"family", FamilyKindName(r.family.kind)},
         {"m", r.family.m},
         {"n", r.family.n},
         {"method", MethodName(r.method)},
         {"uniqueness", UniquenessName(r.uniqueness)},
         {"multiplicities", ToJson(r.multiplicities)}};
  if (!r.solutions.empty()) {
    Json sols = Json::array();
    for (const auto& s : r.solutions) sols.push_back(ToJson(s));
    j["solutions"] = sols;
  }
  return j;
}

LevelResult LevelResultFromJson(const Json& j) {
  LevelResult r;
  r.family = Family{ParseFamilyKind(j.at("family").get<std::string>()),
                    j.at("m").get<int>(), j.at("n").get<int>()};
  r.method = ParseMethod(j.at("method").get<std::string>());
  const auto u = j.at("uniqueness").get<std::string>();
  if (u == "unique") {
    r.uniqueness = Uniqueness::kUnique;
  } else if (u == "ambiguous") {
    r.uniqueness = Uniqueness::kAmbiguous;
  } else if (u == "not_applicable") {
    r.uniqueness = Uniqueness::kNotApplicable;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown uniqueness '" + u + "'");
  }
  r.multiplicities =
      MultiplicityVectorFromJson(j.at("multiplicities"), r.family.degree());
  if (j.contains("solutions")) {
    for (const Json& s : j.at("solutions")) {
      r.solutions.push_back(MultiplicityVectorFromJson(s, r.family.degree()));
    }
  }
  return r;
}

std::string LevelResultToJson(const LevelResult& r) { return ToJson(r).dump(); }

LevelResult LevelResultFromJson(const std::string& text) {
  return LevelResultFromJson(Json::parse(text));
}

Json ToJson(const Report& r) {
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    checks.push_back(
        Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return Json{{"suite", r.suite}, {"passed", r.all_passed()}, {"checks", checks}};
}

std::string ToTsv(const MultiplicityVector& v) {
  std::string out;
  for (const auto& [lambda, mult] : v.entries()) {
    out += lambda.ToString(',') + '\t' + std::to_string(mult) + '\n';
  }
  return out;
}

}  // namespace wreathrep
