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

#ifndef WREATHREP_PARTITION_H_
#define WREATHREP_PARTITION_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wreathrep/error.h"

namespace wreathrep {

// An integer partition: weakly decreasing positive parts. Used both as an
// irreducible label of S_N and as a cycle type.
class Partition {
 public:
  Partition() = default;
  // Throws kInvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  // Sorts arbitrary positive parts into a partition (used for cycle types).
  static Partition FromUnsorted(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  // Zero past the last row.
  int part_or_zero(int i) const {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  // Lexicographic on parts; "descending lex" order is std::greater.
  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  // "4,2" style; the empty partition prints as "".
  std::string ToString(char sep = ',') const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const;
};

// All partitions of n in descending lexicographic order.
std::vector<Partition> PartitionsOf(int n);

// p(n) via Euler's pentagonal number recurrence.
BigInt PartitionCount(int n);

// Number of standard Young tableaux (hook length formula).
BigInt DimSpecht(const Partition& lambda);

bool IsEven(const Partition& lambda);

Partition Conjugate(const Partition& lambda);

// The pattern (*, tail...) whose first part is fixed by the total size.
class PartitionPattern {
 public:
  PartitionPattern() = default;
  explicit PartitionPattern(Partition tail) : tail_(std::move(tail)) {}

  // Parses the concatenated-digit shorthand: "0" is the empty tail, "42" is
  // (*,4,2). Comma-separated tails ("10,2") are accepted for parts > 9.
  static PartitionPattern Parse(const std::string& text);

  const Partition& tail() const { return tail_; }
  std::string ToString() const;

  // (total - |tail|, tail...); throws kPatternTooLarge when the first part
  // would be smaller than tail[0] (or nonpositive).
  Partition Instantiate(int total) const;

  friend bool operator==(const PartitionPattern&,
                         const PartitionPattern&) = default;

 private:
  Partition tail_;
};

// A decomposition of an S_N-module into irreducibles: Partition -> multiplicity.
// Zero entries are never stored; iteration is in descending lex order.
class MultiplicityVector {
 public:
  using Map = std::map<Partition, std::int64_t, std::greater<Partition>>;

  explicit MultiplicityVector(int level_size = 0) : level_size_(level_size) {}
  MultiplicityVector(int level_size,
                     std::initializer_list<std::pair<Partition, std::int64_t>>
                         entries);

  int level_size() const { return level_size_; }
  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  std::int64_t at(const Partition& lambda) const;
  // Adds delta (may be negative) to the entry; the result must stay >= 0.
  void Add(const Partition& lambda, std::int64_t delta);
  void Set(const Partition& lambda, std::int64_t value);

  std::int64_t TotalMultiplicity() const;
  std::int64_t MaxMultiplicity() const;
  bool IsMultiplicityFree() const { return MaxMultiplicity() <= 1; }
  // Sum of mult * dim(S^lambda).
  BigInt TotalDimension() const;

  friend bool operator==(const MultiplicityVector&,
                         const MultiplicityVector&) = default;

 private:
  void CheckKey(const Partition& lambda) const;

  int level_size_;
  Map entries_;
};

}  // namespace wreathrep

#endif  // WREATHREP_PARTITION_H_
