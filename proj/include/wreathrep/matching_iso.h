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

#ifndef WREATHREP_MATCHING_ISO_H_
#define WREATHREP_MATCHING_ISO_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wreathrep/group_objects.h"
#include "wreathrep/partition.h"
#include "wreathrep/report.h"

namespace wreathrep {

// A matching on some subset of points: pairs (a, b) with a < b, sorted by a.
// Points are 0-based.
using Matching = std::vector<std::pair<int, int>>;

Matching CanonicalMatching(std::vector<std::pair<int, int>> edges);
// 12|34|56 for the perfect matching {1,2},{3,4},{5,6} (1-based).
std::string MatchingToString(const Matching& m);
// The matching {0,1},{2,3},...,{2n-2,2n-1}.
Matching BaseMatching(int n);

// Integer combination of matchings. Zero coefficients are never stored.
class FormalMatchingSum {
 public:
  using Map = std::map<Matching, std::int64_t>;

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::int64_t at(const Matching& m) const;
  void Add(const Matching& m, std::int64_t coeff);
  void AddScaled(const FormalMatchingSum& other, std::int64_t scale);

  // Distributed product; factors must live on disjoint point sets.
  FormalMatchingSum Times(const FormalMatchingSum& other) const;
  // Relabels every matching by g.
  FormalMatchingSum Apply(const Permutation& g) const;

  friend bool operator==(const FormalMatchingSum&,
                         const FormalMatchingSum&) = default;

 private:
  Map terms_;
};

// Row-equivalence class of a tableau: a list of point sets, one per row.
class Tabloid {
 public:
  // Throws kOddRow for a row of odd size; kInvalidArgument unless rows are
  // disjoint, cover {0, ..., total-1}, and have weakly decreasing sizes.
  explicit Tabloid(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return size_; }
  Partition shape() const;
  Tabloid Apply(const Permutation& g) const;

  friend bool operator==(const Tabloid&, const Tabloid&) = default;

 private:
  std::vector<std::vector<int>> rows_;
  int size_ = 0;
};

// The tabloid of the tableau filled 1..2n in reading order.
Tabloid SeedTabloid(const Partition& shape);

// Sum of every perfect matching of the row, coefficient 1. kOddRow if odd.
FormalMatchingSum MatchRow(std::span<const int> row);

// Product over rows of MatchRow.
FormalMatchingSum MatchTabloid(const Tabloid& t);

inline constexpr std::int64_t kDefaultColumnGroupCap = 1'000'000;

// Image of the seed polytabloid: sum over the column group C_t of
// sign(pi) * MatchTabloid(pi {t}). TooLargeError past cap.
FormalMatchingSum PolytabloidImage(const Partition& shape,
                                   std::int64_t cap = kDefaultColumnGroupCap);

// Column-group elements whose tabloid image contains the base matching.
struct BaseContributors {
  std::int64_t count = 0;
  std::int64_t positive = 0;  // those with sign +1
};
BaseContributors ClassifyBaseContributors(
    const Partition& shape, std::int64_t cap = kDefaultColumnGroupCap);

// MatchTabloid(g T) == g MatchTabloid(T). kSizeMismatch on degree mismatch.
bool EquivarianceCheck(const Permutation& g, const Tabloid& t);

// Isotypic projections of vectors in C[perfect matchings of 2n points]:
// for each cycle type rho the class sum applied to v is accumulated once,
// after which the (unnormalized) central projector for mu is
// sum_rho chi^mu(rho) (class sum rho) v.
class IsotypicProjector {
 public:
  // Enumerates S_{2n}; feasible to 2n = 10.
  IsotypicProjector(int n, std::span<const FormalMatchingSum> vectors);

  // (N! / dim mu) P_mu v_i as a coordinate vector over the matchings.
  std::vector<std::int64_t> Project(std::size_t i, const Partition& mu) const;
  std::vector<std::int64_t> Coordinates(std::size_t i) const;
  const std::vector<GroupedObject>& basis() const { return basis_; }

 private:
  int n_;
  std::vector<GroupedObject> basis_;
  std::vector<Partition> classes_;
  std::vector<std::vector<std::int64_t>> coords_;
  // class_sums_[i][c][j]
  std::vector<std::vector<std::vector<std::int64_t>>> class_sums_;
};

// For every even lambda |- 2n: nonzero image, positive base coefficient with
// only sign +1 contributors, projection nonzero exactly at lambda, and
// sum of dims = (2n-1)!!.
Report VerifyIso(int n, std::int64_t cap = kDefaultColumnGroupCap);

}  // namespace wreathrep

#endif  // WREATHREP_MATCHING_ISO_H_
