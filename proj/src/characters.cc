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

#include "wreathrep/characters.h"

#include <algorithm>
#include <vector>

namespace wreathrep {

BigInt ClassFunction::at(const Partition& rho) const {
  const auto it = values_.find(rho);
  return it == values_.end() ? BigInt(0) : it->second;
}

void ClassFunction::Set(const Partition& rho, BigInt value) {
  if (rho.size() != level_size_) {
    throw Error(ErrorCode::kSizeMismatch,
                "class [" + rho.ToString() + "] is not a cycle type of S_" +
                    std::to_string(level_size_));
  }
  if (value == 0) {
    values_.erase(rho);
  } else {
    values_[rho] = std::move(value);
  }
}

std::size_t CharacterTable::KeyHash::operator()(
    const std::pair<Partition, Partition>& k) const {
  PartitionHash h;
  return h(k.first) * 1000003u ^ h(k.second);
}

std::int64_t CharacterTable::Value(const Partition& lambda,
                                   const Partition& rho) {
  if (lambda.size() != rho.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "|[" + lambda.ToString() + "]| != |[" + rho.ToString() + "]|");
  }
  if (lambda.size() > 25) {
    throw Error(ErrorCode::kTooLarge, "character values beyond S_25");
  }
  return Recurse(lambda, rho);
}

// Border strips of length r correspond to moving one bead of the beta-set
// r positions down into an empty slot; the strip height is the number of
// beads jumped over.
std::int64_t CharacterTable::Recurse(const Partition& lambda,
                                     const Partition& rho) {
  if (rho.empty()) return 1;
  if (rho.length() == rho.size()) return DimSpecht(lambda).convert_to<std::int64_t>();
  auto key = std::make_pair(lambda, rho);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const int r = rho[0];
  const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int j = 0; j < len; ++j) beta[static_cast<std::size_t>(j)] = lambda[j] + (len - 1 - j);
  // beta is strictly decreasing.
  std::int64_t total = 0;
  for (int j = 0; j < len; ++j) {
    const int target = beta[static_cast<std::size_t>(j)] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    std::vector<int> moved;
    moved.reserve(beta.size());
    for (int b : beta) {
      if (b > target && b < beta[static_cast<std::size_t>(j)]) ++jumped;
      moved.push_back(b == beta[static_cast<std::size_t>(j)] ? target : b);
    }
    std::sort(moved.begin(), moved.end(), std::greater<int>());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
      const int part = moved[static_cast<std::size_t>(i)] - (len - 1 - i);
      if (part > 0) parts.push_back(part);
    }
    const std::int64_t sub = Recurse(Partition(std::move(parts)), rest);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  memo_.emplace(std::move(key), total);
  return total;
}

std::int64_t MnChar(const Partition& lambda, const Partition& rho) {
  thread_local CharacterTable table;
  return table.Value(lambda, rho);
}

BigInt ClassSize(const Partition& rho) {
  BigInt denom = 1;
  const auto parts = rho.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int count = static_cast<int>(j - i);
    denom *= Factorial(count);
    for (int c = 0; c < count; ++c) denom *= parts[i];
    i = j;
  }
  return Factorial(rho.size()) / denom;
}

int Sign(const Partition& rho) {
  return (rho.size() - rho.length()) % 2 == 0 ? 1 : -1;
}

ClassFunction IrreducibleCharacter(const Partition& lambda) {
  ClassFunction f(lambda.size());
  for (const Partition& rho : PartitionsOf(lambda.size())) {
    f.Set(rho, MnChar(lambda, rho));
  }
  return f;
}

Rational InnerProduct(const ClassFunction& f, const ClassFunction& g) {
  if (f.level_size() != g.level_size()) {
    throw Error(ErrorCode::kSizeMismatch, "class functions on different S_N");
  }
  BigInt sum = 0;
  for (const auto& [rho, value] : f.values()) {
    const auto it = g.values().find(rho);
    if (it == g.values().end()) continue;
    sum += ClassSize(rho) * value * it->second;
  }
  return Rational(sum, Factorial(f.level_size()));
}

namespace {

MultiplicityVector DecomposeWeighted(const ClassFunction& weights,
                                     const BigInt& denominator,
                                     const char* what) {
  MultiplicityVector out(weights.level_size());
  for (const Partition& lambda : PartitionsOf(weights.level_size())) {
    BigInt sum = 0;
    for (const auto& [rho, w] : weights.values()) sum += w * MnChar(lambda, rho);
    if (sum % denominator != 0 || sum < 0) {
      throw Error(ErrorCode::kNotACharacter,
                  std::string(what) + " has coefficient " +
                      Rational(sum, denominator).str() + " at [" +
                      lambda.ToString() + "]");
    }
    out.Set(lambda, (sum / denominator).convert_to<std::int64_t>());
  }
  return out;
}

}  // namespace

MultiplicityVector DecomposeClassFunction(const ClassFunction& f) {
  ClassFunction weighted(f.level_size());
  for (const auto& [rho, value] : f.values()) {
    weighted.Set(rho, ClassSize(rho) * value);
  }
  return DecomposeWeighted(weighted, Factorial(f.level_size()),
                           "class function");
}

MultiplicityVector DecomposeClassCounts(const ClassFunction& counts,
                                        const BigInt& group_order) {
  return DecomposeWeighted(counts, group_order, "induced character");
}

}  // namespace wreathrep
