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

#ifndef WREATHREP_GROUP_OBJECTS_H_
#define WREATHREP_GROUP_OBJECTS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wreathrep/characters.h"
#include "wreathrep/partition.h"
#include "wreathrep/report.h"

namespace wreathrep {

// C: stabilizer of a perfect m-block partition, S_m wr S_n with order
//    (m!)^n n!. For m = 2 this is the hyperoctahedral group B_n.
// D: stabilizer of n disjoint directed m-cycles, C_m wr S_n with order
//    m^n n!.
enum class FamilyKind { kC, kD };

const char* FamilyKindName(FamilyKind kind);
FamilyKind ParseFamilyKind(const std::string& text);

struct Family {
  FamilyKind kind = FamilyKind::kC;
  int m = 2;
  int n = 1;

  int degree() const { return m * n; }
  Family WithN(int level) const { return Family{kind, m, level}; }
  std::string ToString() const;
  // Throws kInvalidArgument unless m >= 2 and n >= 1.
  void Validate() const;

  friend bool operator==(const Family&, const Family&) = default;
};

inline constexpr std::int64_t kDefaultEnumerationCap = 5'000'000;
inline constexpr std::int64_t kDefaultBruteForceCap = 10'000'000;

// A permutation of {0, ..., size-1}; composition is right-to-left:
// (g * h)(x) = g(h(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation Identity(int size);
  // Cycles in 1-based point labels, e.g. {{1,2,3,4}}.
  static Permutation FromCycles(int size,
                                const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int point) const {
    return image_[static_cast<std::size_t>(point)];
  }
  std::span<const int> image() const { return image_; }

  Partition CycleType() const;
  Permutation Inverse() const;

  friend Permutation operator*(const Permutation& g, const Permutation& h);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

// The fixed representative of a class: cycles on consecutive points, longest
// first. (3,1,1) -> (0 1 2)(3)(4).
Permutation ClassRepresentative(const Partition& cycle_type);

// A perfect m-block matching (C) or a set of disjoint directed m-cycles up to
// rotation (D), stored canonically as consecutive blocks of m points.
// C blocks are sorted; D cycles start at their minimum; blocks are ordered by
// first point. Points are 0-based.
class GroupedObject {
 public:
  GroupedObject() = default;
  // Canonicalizes arbitrary blocks; throws kInvalidArgument unless the blocks
  // partition {0, ..., points-1} into parts of equal size >= 1.
  GroupedObject(FamilyKind kind, std::vector<std::vector<int>> blocks);

  FamilyKind kind() const { return kind_; }
  int block_size() const { return m_; }
  int num_blocks() const { return m_ == 0 ? 0 : size() / m_; }
  int size() const { return static_cast<int>(points_.size()); }
  std::span<const int> block(int i) const {
    return std::span<const int>(points_).subspan(
        static_cast<std::size_t>(i * m_), static_cast<std::size_t>(m_));
  }
  std::span<const int> points() const { return points_; }
  std::vector<std::vector<int>> Blocks() const;

  // "12|34" for matchings with single-digit labels, else "1,2|3,4"; 1-based.
  std::string ToString() const;

  friend bool operator==(const GroupedObject&, const GroupedObject&) = default;
  friend auto operator<=>(const GroupedObject& a, const GroupedObject& b) {
    return a.points_ <=> b.points_;
  }

 private:
  friend GroupedObject Act(const Permutation& g, const GroupedObject& x);
  void Canonicalize();

  FamilyKind kind_ = FamilyKind::kC;
  int m_ = 0;
  std::vector<int> points_;
};

struct GroupedObjectHash {
  std::size_t operator()(const GroupedObject& x) const;
};

BigInt SubgroupOrder(const Family& f);
// (mn)! / SubgroupOrder(f).
BigInt ObjectCount(const Family& f);

// Every object of the family in ascending canonical order. Throws
// TooLargeError when ObjectCount(f) exceeds cap.
std::vector<GroupedObject> EnumerateObjects(
    const Family& f, std::int64_t cap = kDefaultEnumerationCap);

// Relabels every point by g and re-canonicalizes. kSizeMismatch on degree
// mismatch.
GroupedObject Act(const Permutation& g, const GroupedObject& x);

std::int64_t CountFixed(const Permutation& g,
                        std::span<const GroupedObject> objects);

// Oracle #1: fixed points of each class representative on the object set.
// jobs > 1 splits the object list across threads.
ClassFunction PermutationCharacterEnum(const Family& f,
                                       std::int64_t cap = kDefaultEnumerationCap,
                                       int jobs = 1);

// Number of subgroup elements of each S_{mn} cycle type, built from the
// cycle structure of the top permutation and the cycle products of base
// elements around each top cycle.
ClassFunction WreathClassDistribution(const Family& f);

// The same counts by listing every subgroup element. Throws TooLargeError
// when SubgroupOrder(f) exceeds cap.
ClassFunction WreathClassDistributionBruteForce(
    const Family& f, std::int64_t cap = kDefaultBruteForceCap);

// Oracle #2: lambda -> (1/|H|) sum_{h in H} chi^lambda(h).
MultiplicityVector PermutationCharacterWreath(const Family& f);

// Both permutation-character routes for levels 1..n_max: the decomposed
// fixed-point character equals the wreath-class decomposition, the action is
// transitive (Burnside), and the class distribution matches brute force where
// the subgroup has at most brute_force_cap elements.
Report VerifyDualOracle(const Family& family, int n_max,
                        std::int64_t cap = kDefaultEnumerationCap, int jobs = 1,
                        std::int64_t brute_force_cap = 100'000);

}  // namespace wreathrep

#endif  // WREATHREP_GROUP_OBJECTS_H_
