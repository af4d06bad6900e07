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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero when any of them fails. Time limits are wall-clock seconds.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "wreathrep/characters.h"
#include "wreathrep/decomposer.h"
#include "wreathrep/group_objects.h"
#include "wreathrep/matching_iso.h"
#include "wreathrep/partition.h"
#include "wreathrep/young_rules.h"

namespace wreathrep {
namespace {

using testing::Parts;

constexpr double kTableLimit = 10.0;
constexpr double kEvenLimit = 30.0;
constexpr double kDualOracleLimit = 300.0;
constexpr double kPatternLimit = 120.0;
constexpr double kIsoLimit = 180.0;
constexpr double kPropertyLimit = 120.0;

// Published decompositions for m = 3, each partition listed once per copy.
const std::map<int, std::vector<Parts>> kPublishedRows = {
    {2, {{4, 2}, {6}}},
    {3, {{4, 4, 1}, {5, 2, 2}, {6, 3}, {7, 2}, {9}}},
    {4, {{4, 4, 4}, {5, 4, 2, 1}, {6, 2, 2, 2}, {6, 4, 2}, {6, 6}, {7, 3, 2},
         {7, 4, 1}, {8, 2, 2}, {8, 4}, {9, 3}, {10, 2}, {12}}},
    {5, {{5, 4, 4, 2}, {5, 5, 3, 1, 1}, {6, 4, 2, 2, 1}, {6, 4, 4, 1},
         {6, 5, 2, 2}, {6, 6, 3}, {7, 2, 2, 2, 2}, {7, 4, 2, 2}, {7, 4, 3, 1},
         {7, 4, 4}, {7, 5, 2, 1}, {7, 6, 2}, {8, 3, 2, 2}, {8, 4, 2, 1},
         {8, 4, 3}, {8, 5, 2}, {8, 6, 1}, {9, 2, 2, 2}, {9, 4, 2}, {9, 4, 2},
         {9, 6}, {10, 3, 2}, {10, 4, 1}, {10, 5}, {11, 2, 2}, {11, 4},
         {12, 3}, {13, 2}, {15}}},
};

// Level n^- multiplicities for n >= 6, keyed by tail pattern.
const std::vector<std::pair<std::string, std::int64_t>> kMinusTable = {
    {"0", 1},   {"1", 1},   {"11", 0},  {"2", 2},   {"21", 1},  {"3", 2},
    {"111", 0}, {"4", 3},   {"31", 2},  {"22", 2},  {"211", 0}, {"1111", 0},
    {"5", 3},   {"41", 3},  {"32", 3},  {"311", 0}, {"221", 1}};

const std::vector<std::string> kSingletonPatterns = {"0",  "2", "3",  "4",
                                                     "22", "5", "41", "32"};
const std::vector<std::string> kAbsentPatterns = {"1",   "21",  "31",
                                                  "221", "311", "411"};

using Big = boost::multiprecision::cpp_int;

Big BigFact(int n) {
  Big r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Standard tableaux counted by a memoized box-removal recursion.
Big Dim(const Parts& shape) {
  static std::map<Parts, Big> memo;
  if (shape.empty()) return 1;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  Big total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
    if (!corner) continue;
    Parts smaller = shape;
    if (--smaller[i] == 0) smaller.pop_back();
    total += Dim(smaller);
  }
  memo.emplace(shape, total);
  return total;
}

Big IndependentSubgroupOrder(const Family& f) {
  const Big base = f.kind == FamilyKind::kC ? BigFact(f.m) : Big(f.m);
  Big order = BigFact(f.n);
  for (int i = 0; i < f.n; ++i) order *= base;
  return order;
}

Parts ToParts(const Partition& p) {
  return Parts(p.parts().begin(), p.parts().end());
}

std::map<Parts, std::int64_t> ToCounts(const MultiplicityVector& v) {
  std::map<Parts, std::int64_t> out;
  for (const auto& [lambda, mult] : v.entries()) out[ToParts(lambda)] = mult;
  return out;
}

std::map<Parts, std::int64_t> ToCounts(const std::vector<Parts>& rows) {
  std::map<Parts, std::int64_t> out;
  for (const auto& p : rows) ++out[p];
  return out;
}

std::string Describe(const Family& f, const char* method) {
  return f.ToString() + " (" + method + ")";
}

class Criterion {
 public:
  explicit Criterion(double limit_seconds) : limit_(limit_seconds) {}

  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }

  bool Finish(int index, const std::string& title) {
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start_).count();
    const bool in_time = limit_ <= 0 || seconds <= limit_;
    const bool pass = failed_ == 0 && in_time;
    std::ostringstream line;
    line << (pass ? "[PASS] " : "[FAIL] ") << index << ". " << title << ": "
         << (checks_ - failed_) << "/" << checks_ << " checks";
    line.precision(2);
    line << std::fixed << ", " << seconds << " s";
    if (limit_ > 0) line << " (limit " << limit_ << " s)";
    if (!in_time) line << " TIME LIMIT EXCEEDED";
    std::cout << line.str() << '\n';
    for (const auto& f : failures_) std::cout << "       failed: " << f << '\n';
    return pass;
  }

 private:
  using Clock = std::chrono::steady_clock;
  double limit_;
  Clock::time_point start_ = Clock::now();
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

// Runs body, turning an escaped exception into one failed check.
void Guard(Criterion& c, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    c.Expect(false, std::string("exception: ") + e.what());
  }
}

struct ComputedLevel {
  Family family;
  Method method;
  MultiplicityVector mults;
};

class Suite {
 public:
  int Run() {
    int failed = 0;
    failed += !TableRows();
    failed += !EvenPartitions();
    failed += !DualOracle();
    failed += !DimensionIdentity();
    failed += !SingletonPatterns();
    failed += !Multiplicities();
    failed += !Isomorphism();
    failed += !Properties();
    failed += !UniquenessAudit();
    std::cout << (failed == 0 ? "all criteria passed"
                              : std::to_string(failed) + " criteria failed")
              << '\n';
    return failed == 0 ? 0 : 1;
  }

 private:
  const MultiplicityVector& Level(const Family& f, Method m) {
    const LevelResult& r = decomposer_.Decompose(f, m);
    computed_.push_back({f, m, r.multiplicities});
    return r.multiplicities;
  }

  bool TableRows() {
    Criterion c(kTableLimit);
    Guard(c, [&] {
      for (const auto& [n, rows] : kPublishedRows) {
        const Family f{FamilyKind::kC, 3, n};
        const auto got = ToCounts(Level(f, Method::kRecursion));
        c.Expect(got == ToCounts(rows), "row n=" + std::to_string(n));
        if (n == 5) {
          std::int64_t entries = 0;
          for (const auto& [p, k] : got) entries += k;
          c.Expect(entries == 29, "29 entries at n=5");
          c.Expect(got.count({9, 4, 2}) && got.at({9, 4, 2}) == 2,
                   "[9,4,2] twice at n=5");
        }
      }
    });
    return c.Finish(1, "m=3 decompositions for n=2..5 match the published table");
  }

  bool EvenPartitions() {
    Criterion c(kEvenLimit);
    Guard(c, [&] {
      for (int n = 1; n <= 6; ++n) {
        std::map<Parts, std::int64_t> expected;
        for (const auto& p : testing::AllPartitions(2 * n)) {
          bool even = true;
          for (int part : p) even &= part % 2 == 0;
          if (even) expected[p] = 1;
        }
        const Family f{FamilyKind::kC, 2, n};
        for (const Method m :
             {Method::kRecursion, Method::kOracle, Method::kClosedForm}) {
          c.Expect(ToCounts(Level(f, m)) == expected,
                   Describe(f, MethodName(m)));
        }
      }
    });
    return c.Finish(2, "m=2, n=1..6: every method gives the even partitions once");
  }

  bool DualOracle() {
    Criterion c(kDualOracleLimit);
    Guard(c, [&] {
      const std::vector<std::pair<Family, int>> cases = {
          {{FamilyKind::kC, 3, 1}, 4},
          {{FamilyKind::kC, 4, 1}, 2},
          {{FamilyKind::kD, 3, 1}, 3}};
      for (const auto& [family, n_max] : cases) {
        const Report r = VerifyDualOracle(family, n_max);
        for (const auto& check : r.checks) {
          c.Expect(check.passed, check.name + ": " + check.detail);
        }
        for (int n = 1; n <= n_max; ++n) {
          const Family f = family.WithN(n);
          const MultiplicityVector by_enum = DecomposeClassFunction(PermutationCharacterEnum(f));
          const MultiplicityVector by_wreath = PermutationCharacterWreath(f);
          c.Expect(by_enum == by_wreath, f.ToString() + " enum vs wreath");
          computed_.push_back({f, Method::kOracle, by_wreath});
        }
      }
    });
    return c.Finish(3, "enumeration and wreath-class oracles agree");
  }

  bool DimensionIdentity() {
    Criterion c(0);
    Guard(c, [&] {
      for (int n = 1; n <= 7; ++n) {
        Level(Family{FamilyKind::kC, 3, n}, Method::kRecursion);
      }
      for (const auto& level : computed_) {
        const Family& f = level.family;
        Big total = 0;
        for (const auto& [lambda, mult] : level.mults.entries()) {
          total += Big(mult) * Dim(ToParts(lambda));
        }
        const Big expected =
            BigFact(f.degree()) / IndependentSubgroupOrder(f);
        c.Expect(total == expected,
                 Describe(f, MethodName(level.method)) + " dimension");
        c.Expect(level.mults.at(Partition{f.degree()}) == 1,
                 Describe(f, MethodName(level.method)) + " trivial");
      }
    });
    return c.Finish(4, "dimension identity and trivial multiplicity at every computed level");
  }

  bool SingletonPatterns() {
    Criterion c(kPatternLimit);
    Guard(c, [&] {
      for (int n = 5; n <= 7; ++n) {
        const Family f{FamilyKind::kC, 3, n};
        Level(f, Method::kRecursion);
        for (const auto& text : kSingletonPatterns) {
          c.Expect(decomposer_.MultOfPattern(f, PartitionPattern::Parse(text),
                                             LevelKind::kFull) == 1,
                   "pattern " + text + " at n=" + std::to_string(n));
        }
        for (const auto& text : kAbsentPatterns) {
          c.Expect(decomposer_.MultOfPattern(f, PartitionPattern::Parse(text),
                                             LevelKind::kFull) == 0,
                   "pattern " + text + " absent at n=" + std::to_string(n));
        }
        if (n < 6) continue;
        for (const auto& [text, mult] : kMinusTable) {
          c.Expect(decomposer_.MultOfPattern(f, PartitionPattern::Parse(text),
                                             LevelKind::kMinus) == mult,
                   "n- pattern " + text + " at n=" + std::to_string(n));
        }
      }
    });
    return c.Finish(5, "singleton and absent patterns for n=5..7, n- table for n=6,7");
  }

  bool Multiplicities() {
    Criterion c(0);
    Guard(c, [&] {
      const auto p51 = PartitionPattern::Parse("51");
      const auto p42 = PartitionPattern::Parse("42");
      for (int n = 5; n <= 7; ++n) {
        const Family f{FamilyKind::kC, 3, n};
        const std::string at = " at n=" + std::to_string(n);
        c.Expect(decomposer_.MultOfPattern(f, p51, LevelKind::kFull) +
                         decomposer_.MultOfPattern(f, p42, LevelKind::kFull) ==
                     2,
                 "51+42 = 2" + at);
        c.Expect(Level(f, Method::kRecursion).MaxMultiplicity() >= 2,
                 "some multiplicity >= 2" + at);
        if (n < 6) continue;
        c.Expect(decomposer_.MultOfPattern(f, p51, LevelKind::kMinus) +
                         decomposer_.MultOfPattern(f, p42, LevelKind::kMinus) ==
                     9,
                 "51+42 = 9 at level n-" + at);
      }
    });
    return c.Finish(6, "levels n=5..7 carry multiplicities (51/42 counts)");
  }

  bool Isomorphism() {
    Criterion c(kIsoLimit);
    Guard(c, [&] {
      for (int n = 2; n <= 4; ++n) {
        const Report r = VerifyIso(n);
        for (const auto& check : r.checks) {
          c.Expect(check.passed, check.name + ": " + check.detail);
        }
        Big dims = 0;
        Big double_factorial = 1;
        for (int k = 2 * n - 1; k > 1; k -= 2) double_factorial *= k;
        for (const auto& p : testing::AllPartitions(2 * n)) {
          bool even = true;
          for (int part : p) even &= part % 2 == 0;
          if (!even) continue;
          dims += Dim(p);
          const FormalMatchingSum image = PolytabloidImage(Partition(p));
          c.Expect(!image.empty(), "image nonzero for " + Partition(p).ToString());
          c.Expect(image.at(BaseMatching(n)) > 0,
                   "base coefficient positive for " + Partition(p).ToString());
        }
        c.Expect(dims == double_factorial,
                 "sum of dims = (2n-1)!! at n=" + std::to_string(n));
      }
    });
    return c.Finish(7, "matching images of seed polytabloids for n=2..4");
  }

  bool Properties() {
    Criterion c(kPropertyLimit);
    Guard(c, [&] {
      // Character orthogonality with independently computed class sizes.
      for (int size = 1; size <= 10; ++size) {
        const auto parts = PartitionsOf(size);
        std::vector<Big> class_size;
        for (const auto& rho : parts) {
          Big z = 1;
          std::map<int, int> counts;
          for (int r : rho.parts()) ++counts[r];
          for (const auto& [r, k] : counts) {
            for (int i = 0; i < k; ++i) z *= r;
            z *= BigFact(k);
          }
          class_size.push_back(BigFact(size) / z);
        }
        bool orthogonal = true;
        for (const auto& a : parts) {
          for (const auto& b : parts) {
            Big sum = 0;
            for (std::size_t k = 0; k < parts.size(); ++k) {
              sum += class_size[k] * MnChar(a, parts[k]) * MnChar(b, parts[k]);
            }
            orthogonal &= sum == (a == b ? BigFact(size) : Big(0));
          }
        }
        c.Expect(orthogonal, "orthogonality N=" + std::to_string(size));
      }
      // Branching conserves dimension in both directions.
      for (int size = 1; size <= 12; ++size) {
        bool conserved = true;
        for (const auto& lambda : PartitionsOf(size)) {
          Big down = 0, up = 0;
          for (const auto& mu : RemoveOneBox(lambda)) down += Dim(ToParts(mu));
          for (const auto& nu : AddOneBox(lambda)) up += Dim(ToParts(nu));
          const Big d = Dim(ToParts(lambda));
          conserved &= down == d && up == Big(size + 1) * d;
        }
        c.Expect(conserved, "branching N=" + std::to_string(size));
      }
      // Action laws and transitivity on random small families.
      std::mt19937 rng(20261016);
      for (int trial = 0; trial < 12; ++trial) {
        const FamilyKind kind = trial % 2 ? FamilyKind::kD : FamilyKind::kC;
        const int m = 2 + static_cast<int>(rng() % 3);
        const int n = 1 + static_cast<int>(rng() % (m == 4 ? 2 : 3));
        const Family f{kind, m, n};
        const auto objects = EnumerateObjects(f);
        std::vector<int> image(static_cast<std::size_t>(f.degree()));
        auto random_perm = [&] {
          std::iota(image.begin(), image.end(), 0);
          std::shuffle(image.begin(), image.end(), rng);
          return Permutation(image);
        };
        bool laws = true;
        for (int k = 0; k < 20; ++k) {
          const Permutation g = random_perm(), h = random_perm();
          const GroupedObject& x = objects[rng() % objects.size()];
          laws &= Act(g * h, x) == Act(g, Act(h, x));
          laws &= Act(Permutation::Identity(f.degree()), x) == x;
          laws &= Act(g.Inverse(), Act(g, x)) == x;
        }
        c.Expect(laws, f.ToString() + " action laws");
        Big fixed = 0;
        for (const auto& rho : PartitionsOf(f.degree())) {
          const Parts r = ToParts(rho);
          Big z = 1;
          std::map<int, int> counts;
          for (int part : r) ++counts[part];
          for (const auto& [part, k] : counts) {
            for (int i = 0; i < k; ++i) z *= part;
            z *= BigFact(k);
          }
          fixed += BigFact(f.degree()) / z *
                   CountFixed(ClassRepresentative(rho), objects);
        }
        c.Expect(fixed == BigFact(f.degree()), f.ToString() + " one orbit");
        c.Expect(Big(objects.size()) ==
                     BigFact(f.degree()) / IndependentSubgroupOrder(f),
                 f.ToString() + " object count");
      }
    });
    return c.Finish(8, "character, branching and group-action property suites");
  }

  bool UniquenessAudit() {
    Criterion c(0);
    Guard(c, [&] {
      c.Expect(!decomposer_.audit().empty(), "recursion steps were recorded");
      for (const auto& [family, uniqueness] : decomposer_.audit()) {
        c.Expect(uniqueness == Uniqueness::kUnique,
                 family.ToString() + " step is " + UniquenessName(uniqueness));
      }
    });
    return c.Finish(9, "every recursion step used above has a unique solution");
  }

  Decomposer decomposer_;
  std::vector<ComputedLevel> computed_;
};

}  // namespace
}  // namespace wreathrep

int main() {
  std::ios::sync_with_stdio(false);
  wreathrep::Suite suite;
  const int rc = suite.Run();
  std::cout.flush();
  return rc;
}
