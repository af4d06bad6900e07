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

#ifndef WREATHREP_JSON_IO_H_
#define WREATHREP_JSON_IO_H_

#include <string>

#include "json.hpp"
#include "wreathrep/characters.h"
#include "wreathrep/decomposer.h"
#include "wreathrep/group_objects.h"
#include "wreathrep/matching_iso.h"
#include "wreathrep/partition.h"
#include "wreathrep/report.h"

namespace wreathrep {

using Json = nlohmann::ordered_json;

// [9,4,2]
Json ToJson(const Partition& p);
Partition PartitionFromJson(const Json& j);

// [{"partition":[6],"mult":1},...] in descending lex order.
Json ToJson(const MultiplicityVector& v);
MultiplicityVector MultiplicityVectorFromJson(const Json& j, int level_size);

// {"N":6,"values":[{"type":[3,3],"value":-1},...]}; every class of S_N is
// listed, zeros included.
Json ToJson(const ClassFunction& f);
ClassFunction ClassFunctionFromJson(const Json& j);

// [[1,2,3],[4,5,6]] with 1-based points.
Json ToJson(const GroupedObject& x);
GroupedObject GroupedObjectFromJson(const Json& j, FamilyKind kind);

// [{"matching":[[1,2],[3,4]],"coeff":2},...]
Json ToJson(const FormalMatchingSum& s);

// {"family":"C","m":3,"n":5,"method":"recursion","uniqueness":"unique",
//  "multiplicities":[...]} plus "solutions" when ambiguous.
Json ToJson(const LevelResult& r);
LevelResult LevelResultFromJson(const Json& j);

std::string LevelResultToJson(const LevelResult& r);
LevelResult LevelResultFromJson(const std::string& text);

// {"suite":...,"passed":bool,"checks":[{"name":...,"passed":...,"detail":...}]}
Json ToJson(const Report& r);

// One "4,2<TAB>1" line per partition.
std::string ToTsv(const MultiplicityVector& v);

}  // namespace wreathrep

#endif  // WREATHREP_JSON_IO_H_
