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

#include "wreathrep/partition.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wreathrep {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPatternTooLarge:
      return "PatternTooLarge";
    case ErrorCode::kEmptyPartition:
      return "EmptyPartition";
    case ErrorCode::kSizeMismatch:
      return "SizeMismatch";
    case ErrorCode::kNotACharacter:
      return "NotACharacter";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kNoSolution:
      return "NoSolution";
    case ErrorCode::kSolutionCapExceeded:
      return "SolutionCapExceeded";
    case ErrorCode::kOddRow:
      return "OddRow";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kIo:
      return "Io";
  }
  return "Unknown";
}

BigInt Factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "not a partition: [" + ToString() + "]");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::FromUnsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

std::string Partition::ToString(char sep) const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

namespace {

void PartitionsRec(int remaining, int max_part, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    PartitionsRec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> PartitionsOf(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  PartitionsRec(n, n, prefix, out);
  return out;
}

BigInt PartitionCount(int n) {
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int i = 1; i <= n; ++i) {
    BigInt sum = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > i) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      sum += sign * p[static_cast<std::size_t>(i - g1)];
      const int g2 = k * (3 * k + 1) / 2;
      if (g2 <= i) sum += sign * p[static_cast<std::size_t>(i - g2)];
    }
    p[static_cast<std::size_t>(i)] = sum;
  }
  return p[static_cast<std::size_t>(n)];
}

BigInt DimSpecht(const Partition& lambda) {
  const Partition conj = Conjugate(lambda);
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    }
  }
  return Factorial(lambda.size()) / hooks;
}

bool IsEven(const Partition& lambda) {
  return std::all_of(lambda.parts().begin(), lambda.parts().end(),
                     [](int part) { return part % 2 == 0; });
}

Partition Conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

PartitionPattern PartitionPattern::Parse(const std::string& text) {
  if (text.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty pattern");
  }
  std::vector<int> parts;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        parts.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kInvalidArgument, "bad pattern: " + text);
      }
    }
  } else if (text == "0") {
    return PartitionPattern();
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw Error(ErrorCode::kInvalidArgument, "bad pattern: " + text);
      }
      parts.push_back(c - '0');
    }
  }
  return PartitionPattern(Partition(std::move(parts)));
}

std::string PartitionPattern::ToString() const {
  if (tail_.empty()) return "0";
  const bool compact = std::all_of(tail_.parts().begin(), tail_.parts().end(),
                                   [](int p) { return p <= 9; });
  if (!compact) return tail_.ToString(',');
  std::string out;
  for (int p : tail_.parts()) out += static_cast<char>('0' + p);
  return out;
}

Partition PartitionPattern::Instantiate(int total) const {
  const int first = total - tail_.size();
  const int needed = tail_.empty() ? 1 : tail_[0];
  if (first < needed) {
    throw Error(ErrorCode::kPatternTooLarge,
                "pattern " + ToString() + " has no instance of size " +
                    std::to_string(total));
  }
  std::vector<int> parts{first};
  parts.insert(parts.end(), tail_.parts().begin(), tail_.parts().end());
  return Partition(std::move(parts));
}

MultiplicityVector::MultiplicityVector(
    int level_size,
    std::initializer_list<std::pair<Partition, std::int64_t>> entries)
    : level_size_(level_size) {
  for (const auto& [lambda, mult] : entries) Add(lambda, mult);
}

void MultiplicityVector::CheckKey(const Partition& lambda) const {
  if (lambda.size() != level_size_) {
    throw Error(ErrorCode::kSizeMismatch,
                "[" + lambda.ToString() + "] does not partition " +
                    std::to_string(level_size_));
  }
}

std::int64_t MultiplicityVector::at(const Partition& lambda) const {
  const auto it = entries_.find(lambda);
  return it == entries_.end() ? 0 : it->second;
}

void MultiplicityVector::Add(const Partition& lambda, std::int64_t delta) {
  Set(lambda, at(lambda) + delta);
}

void MultiplicityVector::Set(const Partition& lambda, std::int64_t value) {
  CheckKey(lambda);
  if (value < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "negative multiplicity at [" + lambda.ToString() + "]");
  }
  if (value == 0) {
    entries_.erase(lambda);
  } else {
    entries_[lambda] = value;
  }
}

std::int64_t MultiplicityVector::TotalMultiplicity() const {
  std::int64_t total = 0;
  for (const auto& [lambda, mult] : entries_) total += mult;
  return total;
}

std::int64_t MultiplicityVector::MaxMultiplicity() const {
  std::int64_t best = 0;
  for (const auto& [lambda, mult] : entries_) best = std::max(best, mult);
  return best;
}

BigInt MultiplicityVector::TotalDimension() const {
  BigInt total = 0;
  for (const auto& [lambda, mult] : entries_) total += mult * DimSpecht(lambda);
  return total;
}

}  // namespace wreathrep
