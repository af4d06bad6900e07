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

#ifndef WREATHREP_DECOMPOSER_H_
#define WREATHREP_DECOMPOSER_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wreathrep/group_objects.h"
#include "wreathrep/partition.h"
#include "wreathrep/report.h"

namespace wreathrep {

enum class Method { kRecursion, kOracle, kClosedForm };
enum class Uniqueness { kUnique, kAmbiguous, kNotApplicable };

const char* MethodName(Method method);
Method ParseMethod(const std::string& text);
const char* UniquenessName(Uniqueness u);

// Decomposition of Ind_H^{S_mn}(1) for H = family.WithN(level).
struct LevelResult {
  Family family;  // family.n is the level
  MultiplicityVector multiplicities;
  Method method = Method::kRecursion;
  Uniqueness uniqueness = Uniqueness::kNotApplicable;
  // Every solution found by the level solver when uniqueness is ambiguous;
  // multiplicities then holds the oracle's adjudication.
  std::vector<MultiplicityVector> solutions;
};

// Level n^-: the restriction of level n to S_{mn-1}.
struct RestrictedLevel {
  MultiplicityVector multiplicities;
};

inline constexpr int kDefaultSolutionCap = 16;

// All even partitions of 2n with multiplicity one.
LevelResult ClosedFormM2(int n);

// Induces level n-1 up to S_{mn-1}: a horizontal (m-1)-strip for C, m-1
// single boxes for D.
RestrictedLevel RestrictedTarget(const LevelResult& prev);

struct SolveOptions {
  int solution_cap = kDefaultSolutionCap;
  // Branching order over the partitions of N; empty means descending lex.
  std::vector<Partition> order;
};

struct SolveStats {
  std::int64_t nodes = 0;
  std::int64_t propagations = 0;
};

// Every nonnegative integer vector a over partitions of N with a((N)) = 1
// and RestrictVector(a) = target, sorted in descending lex order of their
// entries. Throws kNoSolution when none exists and kSolutionCapExceeded when
// more than options.solution_cap exist.
std::vector<MultiplicityVector> SolveLevel(const RestrictedLevel& target,
                                           int total,
                                           const SolveOptions& options = {},
                                           SolveStats* stats = nullptr);

enum class LevelKind { kFull, kMinus };

// Computes levels and memoizes them in memory (and on disk when cache_dir
// is set). Not thread-safe; use one instance per worker.
class Decomposer {
 public:
  struct Options {
    int solution_cap = kDefaultSolutionCap;
    std::int64_t enumeration_cap = kDefaultEnumerationCap;
    std::optional<std::filesystem::path> cache_dir;
  };

  Decomposer() = default;
  explicit Decomposer(Options options) : options_(std::move(options)) {}

  // Level family.n by the given method. kClosedForm requires m = 2.
  // Oracle decompositions are refused (TooLargeError) when the coset count
  // exceeds enumeration_cap, mirroring the enumeration oracle's limit.
  const LevelResult& Decompose(const Family& family, Method method);

  // Level n^- computed from level n-1 by the recursion.
  RestrictedLevel Restricted(const Family& family);

  // Multiplicity of the pattern's instance at level n (size mn) or n^-
  // (size mn-1); patterns without an instance count as 0.
  std::int64_t MultOfPattern(const Family& family,
                             const PartitionPattern& pattern, LevelKind kind);

  // Every recursion step solved so far: (family at level n) -> uniqueness.
  const std::vector<std::pair<Family, Uniqueness>>& audit() const {
    return audit_;
  }

 private:
  using Key = std::tuple<int, int, int, int>;
  static Key MakeKey(const Family& f, Method method);
  LevelResult Compute(const Family& family, Method method);
  std::optional<LevelResult> LoadCached(const Family& family, Method method);
  void StoreCached(const LevelResult& result);

  Options options_;
  std::map<Key, LevelResult> levels_;
  std::vector<std::pair<Family, Uniqueness>> audit_;
};

// The multiplicity claims about Ind from C_{3,n}, checked for
// 5 <= n <= n_max by the recursion.
Report VerifySection4(Decomposer& decomposer, int n_max);

// Recursion against the wreath oracle (and the closed form when m = 2) for
// levels 1..n_max.
Report VerifyMethodAgreement(Decomposer& decomposer, const Family& family,
                             int n_max);

}  // namespace wreathrep

#endif  // WREATHREP_DECOMPOSER_H_
