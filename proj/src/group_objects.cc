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

#include "wreathrep/group_objects.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

namespace wreathrep {

const char* FamilyKindName(FamilyKind kind) {
  return kind == FamilyKind::kC ? "C" : "D";
}

FamilyKind ParseFamilyKind(const std::string& text) {
  if (text == "C" || text == "c" || text == "B" || text == "b") {
    return FamilyKind::kC;
  }
  if (text == "D" || text == "d") return FamilyKind::kD;
  throw Error(ErrorCode::kInvalidArgument, "unknown family '" + text + "'");
}

std::string Family::ToString() const {
  return std::string(FamilyKindName(kind)) + "_{" + std::to_string(m) + "," +
         std::to_string(n) + "}";
}

void Family::Validate() const {
  if (m < 2 || n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "family needs m >= 2 and n >= 1, got " + ToString());
  }
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int x : image_) {
    if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)]) {
      throw Error(ErrorCode::kInvalidArgument, "not a permutation");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::Identity(int size) {
  std::vector<int> image(static_cast<std::size_t>(size));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::FromCycles(
    int size, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> image(static_cast<std::size_t>(size));
  std::iota(image.begin(), image.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(size), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i] - 1;
      const int to = cycle[(i + 1) % cycle.size()] - 1;
      if (from < 0 || from >= size || used[static_cast<std::size_t>(from)]) {
        throw Error(ErrorCode::kInvalidArgument, "bad cycle notation");
      }
      used[static_cast<std::size_t>(from)] = true;
      image[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation(std::move(image));
}

Partition Permutation::CycleType() const {
  std::vector<bool> seen(image_.size(), false);
  std::vector<int> lengths;
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::FromUnsorted(std::move(lengths));
}

Permutation Permutation::Inverse() const {
  std::vector<int> inv(image_.size());
  for (int x = 0; x < size(); ++x) inv[static_cast<std::size_t>((*this)(x))] = x;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.size() != h.size()) {
    throw Error(ErrorCode::kSizeMismatch, "composing permutations of "
                                          "different degrees");
  }
  std::vector<int> image(static_cast<std::size_t>(g.size()));
  for (int x = 0; x < g.size(); ++x) image[static_cast<std::size_t>(x)] = g(h(x));
  return Permutation(std::move(image));
}

Permutation ClassRepresentative(const Partition& cycle_type) {
  std::vector<int> image(static_cast<std::size_t>(cycle_type.size()));
  int start = 0;
  for (int len : cycle_type.parts()) {
    for (int i = 0; i < len; ++i) {
      image[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
    }
    start += len;
  }
  return Permutation(std::move(image));
}

// ---------------------------------------------------------------------------
// GroupedObject

GroupedObject::GroupedObject(FamilyKind kind,
                             std::vector<std::vector<int>> blocks)
    : kind_(kind) {
  if (blocks.empty()) return;
  m_ = static_cast<int>(blocks.front().size());
  for (const auto& b : blocks) {
    if (static_cast<int>(b.size()) != m_ || m_ == 0) {
      throw Error(ErrorCode::kInvalidArgument, "blocks of unequal size");
    }
    points_.insert(points_.end(), b.begin(), b.end());
  }
  std::vector<int> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < size(); ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i) {
      throw Error(ErrorCode::kInvalidArgument,
                  "blocks do not partition the point set");
    }
  }
  Canonicalize();
}

void GroupedObject::Canonicalize() {
  const int blocks = num_blocks();
  for (int i = 0; i < blocks; ++i) {
    auto first = points_.begin() + i * m_;
    auto last = first + m_;
    if (kind_ == FamilyKind::kC) {
      std::sort(first, last);
    } else {
      std::rotate(first, std::min_element(first, last), last);
    }
  }
  // Insertion sort of blocks by leading point; n is small.
  for (int i = 1; i < blocks; ++i) {
    for (int j = i; j > 0 && points_[static_cast<std::size_t>(j * m_)] <
                                 points_[static_cast<std::size_t>((j - 1) * m_)];
         --j) {
      std::swap_ranges(points_.begin() + j * m_, points_.begin() + (j + 1) * m_,
                       points_.begin() + (j - 1) * m_);
    }
  }
}

std::vector<std::vector<int>> GroupedObject::Blocks() const {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < num_blocks(); ++i) {
    auto b = block(i);
    out.emplace_back(b.begin(), b.end());
  }
  return out;
}

std::string GroupedObject::ToString() const {
  const bool compact = size() <= 9;
  std::string out;
  for (int i = 0; i < num_blocks(); ++i) {
    if (i > 0) out += '|';
    bool first = true;
    for (int p : block(i)) {
      if (!compact && !first) out += ',';
      out += std::to_string(p + 1);
      first = false;
    }
  }
  return out;
}

std::size_t GroupedObjectHash::operator()(const GroupedObject& x) const {
  std::size_t h = 1469598103934665603ULL;
  for (int p : x.points()) h = (h ^ static_cast<std::size_t>(p)) * 1099511628211ULL;
  return h;
}

GroupedObject Act(const Permutation& g, const GroupedObject& x) {
  if (g.size() != x.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "permutation of degree " + std::to_string(g.size()) +
                    " acting on " + std::to_string(x.size()) + " points");
  }
  GroupedObject y = x;
  for (int& p : y.points_) p = g(p);
  y.Canonicalize();
  return y;
}

std::int64_t CountFixed(const Permutation& g,
                        std::span<const GroupedObject> objects) {
  std::int64_t fixed = 0;
  for (const GroupedObject& x : objects) {
    if (Act(g, x) == x) ++fixed;
  }
  return fixed;
}

// ---------------------------------------------------------------------------
// Orders and enumeration

BigInt SubgroupOrder(const Family& f) {
  f.Validate();
  const BigInt base = f.kind == FamilyKind::kC ? Factorial(f.m) : BigInt(f.m);
  return boost::multiprecision::pow(base, static_cast<unsigned>(f.n)) *
         Factorial(f.n);
}

BigInt ObjectCount(const Family& f) {
  return Factorial(f.degree()) / SubgroupOrder(f);
}

namespace {

void EnumerateRec(const Family& f, std::vector<bool>& used,
                  std::vector<std::vector<int>>& blocks,
                  std::vector<GroupedObject>& out) {
  const int degree = f.degree();
  int first = 0;
  while (first < degree && used[static_cast<std::size_t>(first)]) ++first;
  if (first == degree) {
    out.emplace_back(f.kind, blocks);
    return;
  }
  used[static_cast<std::size_t>(first)] = true;
  std::vector<int> free;
  for (int p = first + 1; p < degree; ++p) {
    if (!used[static_cast<std::size_t>(p)]) free.push_back(p);
  }
  // Choose m-1 companions of the smallest free point via a selection mask.
  const int k = f.m - 1;
  std::vector<bool> mask(free.size(), false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    std::vector<int> chosen;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (mask[i]) chosen.push_back(free[i]);
    }
    for (int p : chosen) used[static_cast<std::size_t>(p)] = true;
    do {
      std::vector<int> block{first};
      block.insert(block.end(), chosen.begin(), chosen.end());
      blocks.push_back(std::move(block));
      EnumerateRec(f, used, blocks, out);
      blocks.pop_back();
    } while (f.kind == FamilyKind::kD &&
             std::next_permutation(chosen.begin(), chosen.end()));
    for (int p : chosen) used[static_cast<std::size_t>(p)] = false;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  used[static_cast<std::size_t>(first)] = false;
}

}  // namespace

std::vector<GroupedObject> EnumerateObjects(const Family& f, std::int64_t cap) {
  const BigInt count = ObjectCount(f);
  if (count > cap) throw TooLargeError(count, cap);
  std::vector<GroupedObject> out;
  out.reserve(count.convert_to<std::size_t>());
  std::vector<bool> used(static_cast<std::size_t>(f.degree()), false);
  std::vector<std::vector<int>> blocks;
  EnumerateRec(f, used, blocks, out);
  std::sort(out.begin(), out.end());
  return out;
}

ClassFunction PermutationCharacterEnum(const Family& f, std::int64_t cap,
                                       int jobs) {
  const std::vector<GroupedObject> objects = EnumerateObjects(f, cap);
  const std::vector<Partition> classes = PartitionsOf(f.degree());
  const std::size_t workers =
      static_cast<std::size_t>(std::max(1, std::min<int>(jobs, 64)));
  std::vector<std::vector<std::int64_t>> partial(
      workers, std::vector<std::int64_t>(classes.size(), 0));

  auto work = [&](std::size_t w) {
    const std::size_t chunk = (objects.size() + workers - 1) / workers;
    const std::size_t begin = std::min(objects.size(), w * chunk);
    const std::size_t end = std::min(objects.size(), begin + chunk);
    std::span<const GroupedObject> slice(objects.data() + begin, end - begin);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      partial[w][c] = CountFixed(ClassRepresentative(classes[c]), slice);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  ClassFunction chi(f.degree());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::int64_t total = 0;
    for (const auto& p : partial) total += p[c];
    chi.Set(classes[c], total);
  }
  return chi;
}

// ---------------------------------------------------------------------------
// Wreath-product class distribution

namespace {

using PartCounts = std::map<Partition, BigInt>;

// Elements of the base group (S_m or C_m) by cycle type.
PartCounts BaseClasses(const Family& f) {
  PartCounts out;
  if (f.kind == FamilyKind::kC) {
    for (const Partition& kappa : PartitionsOf(f.m)) {
      out[kappa] = ClassSize(kappa);
    }
  } else {
    // r^j in C_m has gcd(j, m) cycles of length m / gcd(j, m).
    for (int j = 0; j < f.m; ++j) {
      const int g = std::gcd(j, f.m);
      out[Partition(std::vector<int>(static_cast<std::size_t>(g), f.m / g))] +=
          1;
    }
  }
  return out;
}

PartCounts Convolve(const PartCounts& a, const PartCounts& b) {
  PartCounts out;
  for (const auto& [pa, ca] : a) {
    for (const auto& [pb, cb] : b) {
      std::vector<int> parts(pa.parts().begin(), pa.parts().end());
      parts.insert(parts.end(), pb.parts().begin(), pb.parts().end());
      out[Partition::FromUnsorted(std::move(parts))] += ca * cb;
    }
  }
  return out;
}

}  // namespace

ClassFunction WreathClassDistribution(const Family& f) {
  f.Validate();
  const PartCounts base = BaseClasses(f);
  BigInt base_order = 0;
  for (const auto& [kappa, count] : base) base_order += count;

  // Around a top cycle of length l the cycle product is uniform over the
  // base group up to a factor |base|^(l-1); each cycle of the product of
  // length c becomes a cycle of length l*c.
  std::vector<PartCounts> per_top_cycle(static_cast<std::size_t>(f.n) + 1);
  for (int l = 1; l <= f.n; ++l) {
    const BigInt scale =
        boost::multiprecision::pow(base_order, static_cast<unsigned>(l - 1));
    PartCounts& dist = per_top_cycle[static_cast<std::size_t>(l)];
    for (const auto& [kappa, count] : base) {
      std::vector<int> parts;
      for (int c : kappa.parts()) parts.push_back(l * c);
      dist[Partition(std::move(parts))] += scale * count;
    }
  }

  ClassFunction out(f.degree());
  for (const Partition& top : PartitionsOf(f.n)) {
    PartCounts acc{{Partition(), BigInt(1)}};
    for (int l : top.parts()) {
      acc = Convolve(acc, per_top_cycle[static_cast<std::size_t>(l)]);
    }
    const BigInt tops = ClassSize(top);
    for (const auto& [rho, count] : acc) {
      out.Set(rho, out.at(rho) + tops * count);
    }
  }
  return out;
}

ClassFunction WreathClassDistributionBruteForce(const Family& f,
                                                std::int64_t cap) {
  const BigInt order = SubgroupOrder(f);
  if (order > cap) throw TooLargeError(order, cap, "subgroup elements to list");

  std::vector<std::vector<int>> base;
  if (f.kind == FamilyKind::kC) {
    std::vector<int> p(static_cast<std::size_t>(f.m));
    std::iota(p.begin(), p.end(), 0);
    do {
      base.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  } else {
    for (int j = 0; j < f.m; ++j) {
      std::vector<int> p(static_cast<std::size_t>(f.m));
      for (int i = 0; i < f.m; ++i) p[static_cast<std::size_t>(i)] = (i + j) % f.m;
      base.push_back(std::move(p));
    }
  }

  std::map<Partition, std::int64_t> counts;
  std::vector<int> top(static_cast<std::size_t>(f.n));
  std::iota(top.begin(), top.end(), 0);
  std::vector<int> image(static_cast<std::size_t>(f.degree()));
  do {
    // Odometer over base tuples.
    std::vector<std::size_t> digits(static_cast<std::size_t>(f.n), 0);
    while (true) {
      for (int b = 0; b < f.n; ++b) {
        const auto& sigma = base[digits[static_cast<std::size_t>(b)]];
        for (int j = 0; j < f.m; ++j) {
          image[static_cast<std::size_t>(b * f.m + j)] =
              top[static_cast<std::size_t>(b)] * f.m +
              sigma[static_cast<std::size_t>(j)];
        }
      }
      ++counts[Permutation(image).CycleType()];
      std::size_t d = 0;
      while (d < digits.size() && ++digits[d] == base.size()) digits[d++] = 0;
      if (d == digits.size()) break;
    }
  } while (std::next_permutation(top.begin(), top.end()));

  ClassFunction out(f.degree());
  for (const auto& [rho, c] : counts) out.Set(rho, c);
  return out;
}

MultiplicityVector PermutationCharacterWreath(const Family& f) {
  return DecomposeClassCounts(WreathClassDistribution(f), SubgroupOrder(f));
}

Report VerifyDualOracle(const Family& family, int n_max, std::int64_t cap,
                        int jobs, std::int64_t brute_force_cap) {
  Report report;
  report.suite = "dual-oracle";
  for (int n = 1; n <= n_max; ++n) {
    const Family f = family.WithN(n);
    const std::string at = " @ " + f.ToString();
    const ClassFunction chi = PermutationCharacterEnum(f, cap, jobs);
    const MultiplicityVector by_fixed_points = DecomposeClassFunction(chi);
    const ClassFunction counts = WreathClassDistribution(f);
    const MultiplicityVector by_classes =
        DecomposeClassCounts(counts, SubgroupOrder(f));
    report.Add("fixed-point and wreath-class decompositions agree" + at,
               by_fixed_points == by_classes);
    ClassFunction trivial(f.degree());
    for (const Partition& rho : PartitionsOf(f.degree())) trivial.Set(rho, 1);
    const Rational orbits = InnerProduct(chi, trivial);
    report.Add("Burnside: one orbit" + at, orbits == 1, orbits.str());
    report.Add("character degree = (mn)!/|H|" + at,
               chi.at(Partition(std::vector<int>(
                   static_cast<std::size_t>(f.degree()), 1))) == ObjectCount(f));
    BigInt total = 0;
    for (const auto& [rho, c] : counts.values()) total += c;
    report.Add("class counts sum to |H|" + at, total == SubgroupOrder(f),
               total.str());
    if (SubgroupOrder(f) <= brute_force_cap) {
      report.Add("class counts match element listing" + at,
                 counts == WreathClassDistributionBruteForce(f, brute_force_cap));
    }
  }
  return report;
}

}  // namespace wreathrep
