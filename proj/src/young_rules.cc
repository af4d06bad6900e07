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

#include "wreathrep/young_rules.h"

#include <algorithm>
#include <functional>

namespace wreathrep {

namespace {

void SortDescending(std::vector<Partition>& v) {
  std::sort(v.begin(), v.end(), std::greater<Partition>());
}

// Rows of lambda are filled top to bottom. Row i may grow to at most the old
// length of row i-1 (no two strip boxes share a column).
void StripRec(const Partition& mu, int row, int remaining,
              std::vector<int>& rows, std::vector<Partition>& out) {
  const int old_len = mu.part_or_zero(row);
  if (row > mu.length()) {
    if (remaining == 0) out.emplace_back(rows);
    return;
  }
  const int cap = row == 0 ? old_len + remaining
                           : std::min(old_len + remaining, mu[row - 1]);
  for (int len = cap; len >= old_len; --len) {
    if (len == 0) {
      if (remaining == 0) out.emplace_back(rows);
      continue;
    }
    rows.push_back(len);
    StripRec(mu, row + 1, remaining - (len - old_len), rows, out);
    rows.pop_back();
  }
}

}  // namespace

std::vector<Partition> RemoveOneBox(const Partition& lambda) {
  if (lambda.empty()) {
    throw Error(ErrorCode::kEmptyPartition, "no box to remove from ()");
  }
  std::vector<Partition> out;
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  for (int i = 0; i < lambda.length(); ++i) {
    if (lambda.part_or_zero(i + 1) < lambda[i]) {
      std::vector<int> next = parts;
      if (--next[static_cast<std::size_t>(i)] == 0) next.pop_back();
      out.emplace_back(std::move(next));
    }
  }
  SortDescending(out);
  return out;
}

std::vector<Partition> AddOneBox(const Partition& mu) {
  std::vector<Partition> out;
  std::vector<int> parts(mu.parts().begin(), mu.parts().end());
  for (int i = 0; i <= mu.length(); ++i) {
    if (i == 0 || mu[i - 1] > mu.part_or_zero(i)) {
      std::vector<int> next = parts;
      if (i == mu.length()) {
        next.push_back(1);
      } else {
        ++next[static_cast<std::size_t>(i)];
      }
      out.emplace_back(std::move(next));
    }
  }
  SortDescending(out);
  return out;
}

std::vector<Partition> AddHorizontalStrip(const Partition& mu, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative strip size");
  std::vector<Partition> out;
  std::vector<int> rows;
  StripRec(mu, 0, k, rows, out);
  SortDescending(out);
  return out;
}

MultiplicityVector IteratedAdd(const Partition& mu, int k) {
  MultiplicityVector v(mu.size(), {{mu, 1}});
  return IteratedVector(v, k);
}

MultiplicityVector RestrictVector(const MultiplicityVector& v) {
  if (v.level_size() < 1) {
    throw Error(ErrorCode::kEmptyPartition, "cannot restrict a level of size 0");
  }
  MultiplicityVector out(v.level_size() - 1);
  for (const auto& [lambda, mult] : v.entries()) {
    for (const Partition& mu : RemoveOneBox(lambda)) out.Add(mu, mult);
  }
  return out;
}

MultiplicityVector PieriVector(const MultiplicityVector& v, int k) {
  MultiplicityVector out(v.level_size() + k);
  for (const auto& [mu, mult] : v.entries()) {
    for (const Partition& lambda : AddHorizontalStrip(mu, k)) {
      out.Add(lambda, mult);
    }
  }
  return out;
}

MultiplicityVector IteratedVector(const MultiplicityVector& v, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative box count");
  MultiplicityVector current = v;
  for (int step = 0; step < k; ++step) {
    MultiplicityVector next(current.level_size() + 1);
    for (const auto& [mu, mult] : current.entries()) {
      for (const Partition& lambda : AddOneBox(mu)) next.Add(lambda, mult);
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace wreathrep
