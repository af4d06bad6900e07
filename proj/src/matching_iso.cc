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

#include "wreathrep/matching_iso.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "wreathrep/characters.h"

namespace wreathrep {

Matching CanonicalMatching(std::vector<std::pair<int, int>> edges) {
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::string MatchingToString(const Matching& m) {
  int max_point = 0;
  for (const auto& [a, b] : m) max_point = std::max(max_point, b);
  const bool compact = max_point < 9;
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out += '|';
    out += std::to_string(m[i].first + 1);
    if (!compact) out += ',';
    out += std::to_string(m[i].second + 1);
  }
  return out;
}

Matching BaseMatching(int n) {
  Matching m;
  for (int i = 0; i < n; ++i) m.emplace_back(2 * i, 2 * i + 1);
  return m;
}

std::int64_t FormalMatchingSum::at(const Matching& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void FormalMatchingSum::Add(const Matching& m, std::int64_t coeff) {
  const std::int64_t v = at(m) + coeff;
  if (v == 0) {
    terms_.erase(m);
  } else {
    terms_[m] = v;
  }
}

void FormalMatchingSum::AddScaled(const FormalMatchingSum& other,
                                  std::int64_t scale) {
  for (const auto& [m, c] : other.terms_) Add(m, c * scale);
}

FormalMatchingSum FormalMatchingSum::Times(
    const FormalMatchingSum& other) const {
  FormalMatchingSum out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) {
      Matching joined = a;
      joined.insert(joined.end(), b.begin(), b.end());
      out.Add(CanonicalMatching(std::move(joined)), ca * cb);
    }
  }
  return out;
}

FormalMatchingSum FormalMatchingSum::Apply(const Permutation& g) const {
  FormalMatchingSum out;
  for (const auto& [m, c] : terms_) {
    Matching moved;
    for (const auto& [a, b] : m) {
      if (a >= g.size() || b >= g.size()) {
        throw Error(ErrorCode::kSizeMismatch, "matching point outside degree");
      }
      moved.emplace_back(g(a), g(b));
    }
    out.Add(CanonicalMatching(std::move(moved)), c);
  }
  return out;
}

Tabloid::Tabloid(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> all;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto& row = rows_[i];
    if (row.size() % 2 != 0) {
      throw Error(ErrorCode::kOddRow,
                  "row " + std::to_string(i) + " has odd size");
    }
    if (i > 0 && row.size() > rows_[i - 1].size()) {
      throw Error(ErrorCode::kInvalidArgument, "row sizes must not increase");
    }
    std::sort(row.begin(), row.end());
    all.insert(all.end(), row.begin(), row.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "tabloid rows must partition the ground set");
    }
  }
  size_ = static_cast<int>(all.size());
}

Partition Tabloid::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) {
    if (!row.empty()) parts.push_back(static_cast<int>(row.size()));
  }
  return Partition(std::move(parts));
}

Tabloid Tabloid::Apply(const Permutation& g) const {
  if (g.size() != size_) {
    throw Error(ErrorCode::kSizeMismatch, "permutation degree differs from "
                                          "tabloid size");
  }
  std::vector<std::vector<int>> rows = rows_;
  for (auto& row : rows) {
    for (int& p : row) p = g(p);
  }
  return Tabloid(std::move(rows));
}

Tabloid SeedTabloid(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  int next = 0;
  for (int len : shape.parts()) {
    std::vector<int> row(static_cast<std::size_t>(len));
    std::iota(row.begin(), row.end(), next);
    next += len;
    rows.push_back(std::move(row));
  }
  return Tabloid(std::move(rows));
}

namespace {

void MatchRowRec(std::vector<int>& rest, Matching& partial,
                 FormalMatchingSum& out) {
  if (rest.empty()) {
    out.Add(CanonicalMatching(partial), 1);
    return;
  }
  const int first = rest.front();
  for (std::size_t i = 1; i < rest.size(); ++i) {
    const int partner = rest[i];
    std::vector<int> next;
    for (std::size_t j = 1; j < rest.size(); ++j) {
      if (j != i) next.push_back(rest[j]);
    }
    partial.emplace_back(first, partner);
    MatchRowRec(next, partial, out);
    partial.pop_back();
  }
}

// Column group of the seed tableau as per-column point lists.
std::vector<std::vector<int>> SeedColumns(const Partition& shape) {
  std::vector<std::vector<int>> columns(
      shape.empty() ? 0 : static_cast<std::size_t>(shape[0]));
  int start = 0;
  for (int len : shape.parts()) {
    for (int j = 0; j < len; ++j) {
      columns[static_cast<std::size_t>(j)].push_back(start + j);
    }
    start += len;
  }
  return columns;
}

int PermutationSign(const std::vector<int>& p) {
  int sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t x = i; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// Calls visit(pi, sign) for every element of the seed column group.
template <typename Visit>
void ForEachColumnPermutation(const Partition& shape, std::int64_t cap,
                              Visit visit) {
  const auto columns = SeedColumns(shape);
  BigInt order = 1;
  for (const auto& col : columns) order *= Factorial(static_cast<int>(col.size()));
  if (order > cap) throw TooLargeError(order, cap, "column group elements");

  std::vector<std::vector<int>> local;
  for (const auto& col : columns) {
    std::vector<int> p(col.size());
    std::iota(p.begin(), p.end(), 0);
    local.push_back(std::move(p));
  }
  std::vector<int> image(static_cast<std::size_t>(shape.size()));
  while (true) {
    int sign = 1;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (std::size_t r = 0; r < columns[c].size(); ++r) {
        image[static_cast<std::size_t>(columns[c][r])] =
            columns[c][static_cast<std::size_t>(local[c][r])];
      }
      sign *= PermutationSign(local[c]);
    }
    visit(Permutation(image), sign);
    std::size_t c = 0;
    while (c < local.size() &&
           !std::next_permutation(local[c].begin(), local[c].end())) {
      ++c;
    }
    if (c == local.size()) break;
  }
}

}  // namespace

FormalMatchingSum MatchRow(std::span<const int> row) {
  if (row.size() % 2 != 0) {
    throw Error(ErrorCode::kOddRow, "row of odd size " +
                                        std::to_string(row.size()));
  }
  std::vector<int> rest(row.begin(), row.end());
  std::sort(rest.begin(), rest.end());
  FormalMatchingSum out;
  Matching partial;
  MatchRowRec(rest, partial, out);
  return out;
}

FormalMatchingSum MatchTabloid(const Tabloid& t) {
  FormalMatchingSum out;
  out.Add({}, 1);
  for (const auto& row : t.rows()) out = out.Times(MatchRow(row));
  return out;
}

FormalMatchingSum PolytabloidImage(const Partition& shape, std::int64_t cap) {
  const Tabloid seed = SeedTabloid(shape);
  FormalMatchingSum out;
  ForEachColumnPermutation(shape, cap, [&](const Permutation& pi, int sign) {
    out.AddScaled(MatchTabloid(seed.Apply(pi)), sign);
  });
  return out;
}

BaseContributors ClassifyBaseContributors(const Partition& shape,
                                          std::int64_t cap) {
  const Tabloid seed = SeedTabloid(shape);
  const Matching base = BaseMatching(shape.size() / 2);
  BaseContributors out;
  ForEachColumnPermutation(shape, cap, [&](const Permutation& pi, int sign) {
    if (MatchTabloid(seed.Apply(pi)).at(base) != 0) {
      ++out.count;
      if (sign > 0) ++out.positive;
    }
  });
  return out;
}

bool EquivarianceCheck(const Permutation& g, const Tabloid& t) {
  if (g.size() != t.size()) {
    throw Error(ErrorCode::kSizeMismatch, "permutation degree differs from "
                                          "tabloid size");
  }
  return MatchTabloid(t.Apply(g)) == MatchTabloid(t).Apply(g);
}

// ---------------------------------------------------------------------------

namespace {

GroupedObject ToObject(const Matching& m) {
  std::vector<std::vector<int>> blocks;
  for (const auto& [a, b] : m) blocks.push_back({a, b});
  return GroupedObject(FamilyKind::kC, std::move(blocks));
}

}  // namespace

IsotypicProjector::IsotypicProjector(int n,
                                     std::span<const FormalMatchingSum> vectors)
    : n_(n) {
  if (n < 1 || n > 5) {
    throw TooLargeError(Factorial(2 * n), Factorial(10),
                        "group elements to average over");
  }
  basis_ = EnumerateObjects(Family{FamilyKind::kC, 2, n});
  classes_ = PartitionsOf(2 * n);
  std::unordered_map<GroupedObject, std::size_t, GroupedObjectHash> index;
  for (std::size_t i = 0; i < basis_.size(); ++i) index.emplace(basis_[i], i);
  std::map<Partition, std::size_t> class_index;
  for (std::size_t c = 0; c < classes_.size(); ++c) class_index[classes_[c]] = c;

  for (const auto& v : vectors) {
    std::vector<std::int64_t> coords(basis_.size(), 0);
    for (const auto& [m, coeff] : v.terms()) {
      const auto it = index.find(ToObject(m));
      if (it == index.end()) {
        throw Error(ErrorCode::kSizeMismatch, "vector is not over perfect "
                                              "matchings of 2n points");
      }
      coords[it->second] = coeff;
    }
    coords_.push_back(std::move(coords));
  }
  class_sums_.assign(vectors.size(),
                     std::vector<std::vector<std::int64_t>>(
                         classes_.size(),
                         std::vector<std::int64_t>(basis_.size(), 0)));

  std::vector<int> perm(static_cast<std::size_t>(2 * n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> moved(basis_.size());
  do {
    const Permutation g(perm);
    const std::size_t c = class_index.at(g.CycleType());
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      moved[j] = index.at(Act(g, basis_[j]));
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      auto& bucket = class_sums_[i][c];
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        if (coords_[i][j] != 0) bucket[moved[j]] += coords_[i][j];
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<std::int64_t> IsotypicProjector::Project(std::size_t i,
                                                     const Partition& mu) const {
  if (mu.size() != 2 * n_) {
    throw Error(ErrorCode::kSizeMismatch, "projector label has wrong size");
  }
  std::vector<std::int64_t> out(basis_.size(), 0);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const std::int64_t chi = MnChar(mu, classes_[c]);
    if (chi == 0) continue;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      out[j] += chi * class_sums_[i][c][j];
    }
  }
  return out;
}

std::vector<std::int64_t> IsotypicProjector::Coordinates(std::size_t i) const {
  return coords_.at(i);
}

Report VerifyIso(int n, std::int64_t cap) {
  Report report;
  report.suite = "iso";
  const std::string at = " @ n=" + std::to_string(n);
  std::vector<Partition> shapes;
  for (const Partition& lambda : PartitionsOf(2 * n)) {
    if (IsEven(lambda)) shapes.push_back(lambda);
  }
  const Matching base = BaseMatching(n);
  std::vector<FormalMatchingSum> images;
  for (const Partition& lambda : shapes) {
    const std::string tag = " [" + lambda.ToString() + "]" + at;
    images.push_back(PolytabloidImage(lambda, cap));
    const FormalMatchingSum& image = images.back();
    report.Add("image nonzero" + tag, !image.empty(),
               std::to_string(image.terms().size()) + " terms");
    const std::int64_t coeff = image.at(base);
    report.Add("base coefficient positive" + tag, coeff > 0,
               "coefficient " + std::to_string(coeff));
    const BaseContributors contrib = ClassifyBaseContributors(lambda, cap);
    report.Add("base contributors all sign +1" + tag,
               contrib.count == contrib.positive && contrib.count == coeff,
               std::to_string(contrib.positive) + "/" +
                   std::to_string(contrib.count) + " positive");
  }

  const IsotypicProjector projector(n, images);
  const BigInt group_order = Factorial(2 * n);
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const std::string tag = " [" + shapes[i].ToString() + "]" + at;
    bool only_lambda = true;
    std::string detail;
    std::vector<BigInt> recombined(projector.basis().size(), 0);
    for (const Partition& mu : PartitionsOf(2 * n)) {
      const auto proj = projector.Project(i, mu);
      const bool nonzero = std::any_of(proj.begin(), proj.end(),
                                       [](std::int64_t x) { return x != 0; });
      if (nonzero != (mu == shapes[i])) {
        only_lambda = false;
        detail += "[" + mu.ToString() + "] ";
      }
      const BigInt dim = DimSpecht(mu);
      for (std::size_t j = 0; j < proj.size(); ++j) recombined[j] += dim * proj[j];
    }
    report.Add("isotypic projection nonzero only at lambda" + tag, only_lambda,
               detail.empty() ? "" : "mismatch at " + detail);
    const auto coords = projector.Coordinates(i);
    bool complete = true;
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (recombined[j] != group_order * coords[j]) complete = false;
    }
    report.Add("projectors sum to identity" + tag, complete);
  }

  BigInt dims = 0;
  for (const Partition& lambda : shapes) dims += DimSpecht(lambda);
  BigInt double_factorial = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) double_factorial *= k;
  report.Add("sum of dims = (2n-1)!!" + at, dims == double_factorial,
             dims.str() + " vs " + double_factorial.str());
  return report;
}

}  // namespace wreathrep
