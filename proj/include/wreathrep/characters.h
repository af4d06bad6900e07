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

#ifndef WREATHREP_CHARACTERS_H_
#define WREATHREP_CHARACTERS_H_

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>

#include "wreathrep/partition.h"

namespace wreathrep {

// A class function on S_N, indexed by cycle type. Classes not present in
// values are zero.
class ClassFunction {
 public:
  using Map = std::map<Partition, BigInt, std::greater<Partition>>;

  explicit ClassFunction(int level_size = 0) : level_size_(level_size) {}

  int level_size() const { return level_size_; }
  const Map& values() const { return values_; }
  BigInt at(const Partition& rho) const;
  void Set(const Partition& rho, BigInt value);

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int level_size_;
  Map values_;
};

// Murnaghan-Nakayama evaluator with a (shape, remaining cycle type) memo.
// Not thread-safe; use one instance per worker (see MnChar()).
class CharacterTable {
 public:
  // chi^lambda(rho). Values of S_N characters are bounded by sqrt(N!), so
  // 64 bits hold every value for N <= 25; larger N is rejected.
  std::int64_t Value(const Partition& lambda, const Partition& rho);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<Partition, Partition>& k) const;
  };
  std::int64_t Recurse(const Partition& lambda, const Partition& rho);

  std::unordered_map<std::pair<Partition, Partition>, std::int64_t, KeyHash>
      memo_;
};

// chi^lambda(rho) through a thread-local CharacterTable.
// Throws kSizeMismatch when |lambda| != |rho|.
std::int64_t MnChar(const Partition& lambda, const Partition& rho);

// N! / prod_i (i^{m_i} m_i!).
BigInt ClassSize(const Partition& rho);

// (-1)^(N - length).
int Sign(const Partition& rho);

ClassFunction IrreducibleCharacter(const Partition& lambda);

// (1/N!) sum_rho |class rho| f(rho) g(rho). Both are real-valued characters.
Rational InnerProduct(const ClassFunction& f, const ClassFunction& g);

// lambda -> <f, chi^lambda>. Throws kNotACharacter if any coefficient is
// negative or non-integral.
MultiplicityVector DecomposeClassFunction(const ClassFunction& f);

// Multiplicities of the induced character 1_H^G given the number of elements
// of H in each S_N class: lambda -> (1/|H|) sum_rho count(rho) chi^lambda(rho).
MultiplicityVector DecomposeClassCounts(const ClassFunction& counts,
                                        const BigInt& group_order);

}  // namespace wreathrep

#endif  // WREATHREP_CHARACTERS_H_
