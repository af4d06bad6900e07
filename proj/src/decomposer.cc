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

#include "wreathrep/decomposer.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "wreathrep/characters.h"
#include "wreathrep/json_io.h"
#include "wreathrep/young_rules.h"

namespace wreathrep {

const char* MethodName(Method method) {
  switch (method) {
    case Method::kRecursion:
      return "recursion";
    case Method::kOracle:
      return "oracle";
    case Method::kClosedForm:
      return "closed_form";
  }
  return "?";
}

Method ParseMethod(const std::string& text) {
  if (text == "recursion") return Method::kRecursion;
  if (text == "oracle") return Method::kOracle;
  if (text == "closed_form" || text == "closed-form") return Method::kClosedForm;
  throw Error(ErrorCode::kInvalidArgument, "unknown method '" + text + "'");
}

const char* UniquenessName(Uniqueness u) {
  switch (u) {
    case Uniqueness::kUnique:
      return "unique";
    case Uniqueness::kAmbiguous:
      return "ambiguous";
    case Uniqueness::kNotApplicable:
      return "not_applicable";
  }
  return "?";
}

LevelResult ClosedFormM2(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "level must be >= 1");
  LevelResult result{Family{FamilyKind::kC, 2, n}, MultiplicityVector(2 * n),
                     Method::kClosedForm, Uniqueness::kNotApplicable, {}};
  for (const Partition& lambda : PartitionsOf(2 * n)) {
    if (IsEven(lambda)) result.multiplicities.Set(lambda, 1);
  }
  return result;
}

RestrictedLevel RestrictedTarget(const LevelResult& prev) {
  const int k = prev.family.m - 1;
  if (prev.family.kind == FamilyKind::kC) {
    return {PieriVector(prev.multiplicities, k)};
  }
  return {IteratedVector(prev.multiplicities, k)};
}

// ---------------------------------------------------------------------------
// Level solver
//
// Unknowns a(lambda) for lambda |- N, one equation per mu |- N-1:
//   sum over lambda covering mu of a(lambda) = target(mu).
// Depth-first search in the given branching order. Each unknown is bounded
// above by the smallest residual among the mu it covers; when an equation has
// a single open unknown left, that unknown is forced (unit propagation), and
// an equation with no open unknowns must have zero residual.

namespace {

class LevelSolver {
 public:
  LevelSolver(const RestrictedLevel& target, int total,
              const SolveOptions& options)
      : total_(total), cap_(options.solution_cap) {
    vars_ = PartitionsOf(total);
    const std::vector<Partition> rows = PartitionsOf(total - 1);
    std::unordered_map<Partition, int, PartitionHash> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      row_index.emplace(rows[i], static_cast<int>(i));
    }
    std::unordered_map<Partition, int, PartitionHash> var_index;
    children_.resize(vars_.size());
    covers_.resize(rows.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      var_index.emplace(vars_[v], static_cast<int>(v));
      for (const Partition& mu : RemoveOneBox(vars_[v])) {
        const int r = row_index.at(mu);
        children_[v].push_back(r);
        covers_[static_cast<std::size_t>(r)].push_back(static_cast<int>(v));
      }
    }
    residual_.assign(rows.size(), 0);
    for (const auto& [mu, mult] : target.multiplicities.entries()) {
      residual_[static_cast<std::size_t>(row_index.at(mu))] = mult;
    }
    open_.resize(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      open_[r] = static_cast<int>(covers_[r].size());
    }
    value_.assign(vars_.size(), -1);

    if (options.order.empty()) {
      for (std::size_t v = 0; v < vars_.size(); ++v) {
        order_.push_back(static_cast<int>(v));
      }
    } else {
      if (options.order.size() != vars_.size()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "branching order must list every partition of N once");
      }
      std::vector<bool> seen(vars_.size(), false);
      for (const Partition& p : options.order) {
        const auto it = var_index.find(p);
        if (it == var_index.end() || seen[static_cast<std::size_t>(it->second)]) {
          throw Error(ErrorCode::kInvalidArgument,
                      "branching order must list every partition of N once");
        }
        seen[static_cast<std::size_t>(it->second)] = true;
        order_.push_back(it->second);
      }
    }
    trivial_ = var_index.at(Partition{total});
  }

  std::vector<MultiplicityVector> Run(SolveStats* stats) {
    std::vector<int> queue;
    for (std::size_t r = 0; r < open_.size(); ++r) {
      if (open_[r] == 1 || residual_[r] == 0) queue.push_back(static_cast<int>(r));
    }
    if (Assign(trivial_, 1, queue) && Propagate(queue)) Search(0);
    if (stats != nullptr) *stats = stats_;
    std::sort(solutions_.begin(), solutions_.end(),
              [](const MultiplicityVector& a, const MultiplicityVector& b) {
                return std::lexicographical_compare(
                    a.entries().begin(), a.entries().end(),
                    b.entries().begin(), b.entries().end(),
                    [](const auto& x, const auto& y) {
                      if (x.first != y.first) return x.first > y.first;
                      return x.second < y.second;
                    });
              });
    return std::move(solutions_);
  }

 private:
  std::int64_t UpperBound(int v) const {
    std::int64_t ub = std::numeric_limits<std::int64_t>::max();
    for (int r : children_[static_cast<std::size_t>(v)]) {
      ub = std::min(ub, residual_[static_cast<std::size_t>(r)]);
    }
    return ub;
  }

  bool Assign(int v, std::int64_t val, std::vector<int>& queue) {
    if (val < 0 || val > UpperBound(v)) return false;
    value_[static_cast<std::size_t>(v)] = val;
    trail_.push_back(v);
    bool ok = true;
    for (int r : children_[static_cast<std::size_t>(v)]) {
      const auto ur = static_cast<std::size_t>(r);
      residual_[ur] -= val;
      --open_[ur];
      if (open_[ur] == 0 && residual_[ur] != 0) ok = false;
      if (open_[ur] == 1 || (open_[ur] > 1 && residual_[ur] == 0)) {
        queue.push_back(r);
      }
    }
    return ok;
  }

  bool Propagate(std::vector<int>& queue) {
    while (!queue.empty()) {
      const int r = queue.back();
      queue.pop_back();
      const auto ur = static_cast<std::size_t>(r);
      if (open_[ur] == 0) continue;
      // An exhausted row zeroes every open parent; a single open parent
      // takes the whole residual.
      if (residual_[ur] != 0 && open_[ur] != 1) continue;
      const std::int64_t val = residual_[ur];
      for (int w : covers_[ur]) {
        if (value_[static_cast<std::size_t>(w)] >= 0) continue;
        ++stats_.propagations;
        if (!Assign(w, val, queue)) return false;
        if (val != 0) break;
      }
    }
    return true;
  }

  void Undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int v = trail_.back();
      trail_.pop_back();
      const std::int64_t val = value_[static_cast<std::size_t>(v)];
      for (int r : children_[static_cast<std::size_t>(v)]) {
        residual_[static_cast<std::size_t>(r)] += val;
        ++open_[static_cast<std::size_t>(r)];
      }
      value_[static_cast<std::size_t>(v)] = -1;
    }
  }

  void Search(std::size_t pos) {
    ++stats_.nodes;
    while (pos < order_.size() &&
           value_[static_cast<std::size_t>(order_[pos])] >= 0) {
      ++pos;
    }
    if (pos == order_.size()) {
      Record();
      return;
    }
    const int v = order_[pos];
    const std::int64_t ub = UpperBound(v);
    std::vector<int> queue;
    for (std::int64_t val = 0; val <= ub; ++val) {
      const std::size_t mark = trail_.size();
      queue.clear();
      if (Assign(v, val, queue) && Propagate(queue)) Search(pos + 1);
      Undo(mark);
    }
  }

  void Record() {
    MultiplicityVector solution(total_);
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (value_[v] > 0) solution.Set(vars_[v], value_[v]);
    }
    solutions_.push_back(std::move(solution));
    if (static_cast<int>(solutions_.size()) > cap_) {
      throw Error(ErrorCode::kSolutionCapExceeded,
                  "more than " + std::to_string(cap_) +
                      " solutions at level size " + std::to_string(total_));
    }
  }

  int total_;
  int cap_;
  int trivial_ = 0;
  std::vector<Partition> vars_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> covers_;
  std::vector<std::int64_t> residual_;
  std::vector<int> open_;
  std::vector<std::int64_t> value_;
  std::vector<int> order_;
  std::vector<int> trail_;
  std::vector<MultiplicityVector> solutions_;
  SolveStats stats_;
};

}  // namespace

std::vector<MultiplicityVector> SolveLevel(const RestrictedLevel& target,
                                           int total,
                                           const SolveOptions& options,
                                           SolveStats* stats) {
  if (total < 1 || target.multiplicities.level_size() != total - 1) {
    throw Error(ErrorCode::kSizeMismatch,
                "target must partition " + std::to_string(total - 1));
  }
  LevelSolver solver(target, total, options);
  std::vector<MultiplicityVector> solutions = solver.Run(stats);
  if (solutions.empty()) {
    throw Error(ErrorCode::kNoSolution,
                "no nonnegative decomposition of size " +
                    std::to_string(total) + " restricts to the target");
  }
  return solutions;
}

// ---------------------------------------------------------------------------
// Decomposer

namespace {

// Character values are computed up to S_24.
constexpr int kMaxOracleDegree = 24;

}  // namespace

Decomposer::Key Decomposer::MakeKey(const Family& f, Method method) {
  return {static_cast<int>(f.kind), f.m, f.n, static_cast<int>(method)};
}

const LevelResult& Decomposer::Decompose(const Family& family, Method method) {
  family.Validate();
  const Key key = MakeKey(family, method);
  if (auto it = levels_.find(key); it != levels_.end()) return it->second;
  std::optional<LevelResult> result = LoadCached(family, method);
  if (!result) {
    result = Compute(family, method);
    StoreCached(*result);
  } else if (method == Method::kRecursion && family.n > 1) {
    audit_.emplace_back(family, result->uniqueness);
  }
  return levels_.emplace(key, std::move(*result)).first->second;
}

LevelResult Decomposer::Compute(const Family& family, Method method) {
  switch (method) {
    case Method::kClosedForm: {
      if (family.m != 2) {
        throw Error(ErrorCode::kInvalidArgument,
                    "the closed form covers m = 2 only");
      }
      LevelResult r = ClosedFormM2(family.n);
      r.family = family;
      return r;
    }
    case Method::kOracle: {
      if (family.degree() > kMaxOracleDegree) {
        throw TooLargeError(ObjectCount(family), BigInt(0),
                            "cosets for the character oracle of " +
                                family.ToString() + " (needs S_" +
                                std::to_string(family.degree()) +
                                "; limit S_" +
                                std::to_string(kMaxOracleDegree) + ")");
      }
      return LevelResult{family, PermutationCharacterWreath(family),
                         Method::kOracle, Uniqueness::kNotApplicable, {}};
    }
    case Method::kRecursion:
      break;
  }

  if (family.n == 1) {
    if (family.kind == FamilyKind::kC) {
      return LevelResult{family,
                         MultiplicityVector(family.m, {{Partition{family.m}, 1}}),
                         Method::kRecursion, Uniqueness::kNotApplicable, {}};
    }
    LevelResult base = Decompose(family, Method::kOracle);
    base.method = Method::kRecursion;
    return base;
  }

  const LevelResult& prev = Decompose(family.WithN(family.n - 1),
                                      Method::kRecursion);
  const RestrictedLevel target = RestrictedTarget(prev);
  SolveOptions solve_options;
  solve_options.solution_cap = options_.solution_cap;
  std::vector<MultiplicityVector> solutions =
      SolveLevel(target, family.degree(), solve_options);

  LevelResult result{family, MultiplicityVector(family.degree()),
                     Method::kRecursion, Uniqueness::kUnique, {}};
  if (solutions.size() == 1) {
    result.multiplicities = std::move(solutions.front());
  } else {
    result.uniqueness = Uniqueness::kAmbiguous;
    const LevelResult& oracle = Decompose(family, Method::kOracle);
    if (std::find(solutions.begin(), solutions.end(), oracle.multiplicities) ==
        solutions.end()) {
      throw Error(ErrorCode::kNoSolution,
                  "oracle decomposition of " + family.ToString() +
                      " is not among the recursion's solutions");
    }
    result.multiplicities = oracle.multiplicities;
    result.solutions = std::move(solutions);
  }
  audit_.emplace_back(family, result.uniqueness);
  return result;
}

RestrictedLevel Decomposer::Restricted(const Family& family) {
  family.Validate();
  if (family.n == 1) {
    return {RestrictVector(Decompose(family, Method::kRecursion).multiplicities)};
  }
  return RestrictedTarget(
      Decompose(family.WithN(family.n - 1), Method::kRecursion));
}

std::int64_t Decomposer::MultOfPattern(const Family& family,
                                       const PartitionPattern& pattern,
                                       LevelKind kind) {
  const int size = kind == LevelKind::kFull ? family.degree()
                                            : family.degree() - 1;
  Partition lambda;
  try {
    lambda = pattern.Instantiate(size);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kPatternTooLarge) return 0;
    throw;
  }
  if (kind == LevelKind::kFull) {
    return Decompose(family, Method::kRecursion).multiplicities.at(lambda);
  }
  return Restricted(family).multiplicities.at(lambda);
}

namespace {

std::string CacheFileName(const Family& f, Method method) {
  return std::string(FamilyKindName(f.kind)) + "_m" + std::to_string(f.m) +
         "_n" + std::to_string(f.n) + "_" + MethodName(method) + ".json";
}

}  // namespace

std::optional<LevelResult> Decomposer::LoadCached(const Family& family,
                                                  Method method) {
  if (!options_.cache_dir) return std::nullopt;
  const auto path = *options_.cache_dir / CacheFileName(family, method);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    LevelResult r = LevelResultFromJson(buffer.str());
    if (r.family == family && r.method == method) return r;
  } catch (const std::exception&) {
    // Unreadable cache entries are recomputed and overwritten.
  }
  return std::nullopt;
}

void Decomposer::StoreCached(const LevelResult& result) {
  if (!options_.cache_dir) return;
  std::error_code ec;
  std::filesystem::create_directories(*options_.cache_dir, ec);
  const auto path =
      *options_.cache_dir / CacheFileName(result.family, result.method);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) {
      throw Error(ErrorCode::kIo, "cannot write cache file " + tmp);
    }
    out << LevelResultToJson(result) << '\n';
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot move cache file into " + path.string());
}

// ---------------------------------------------------------------------------
// Verification suites

namespace {

std::string Str(std::int64_t v) { return std::to_string(v); }

}  // namespace

Report VerifySection4(Decomposer& decomposer, int n_max) {
  Report report;
  report.suite = "section4";
  if (n_max < 5) {
    report.Add("n_max >= 5", false, "n_max = " + Str(n_max));
    return report;
  }
  const std::vector<std::string> ones = {"0", "2", "3", "4", "22", "5", "41", "32"};
  const std::vector<std::string> zeros = {"1", "21", "31", "221", "311", "411"};
  const std::vector<std::pair<std::string, std::int64_t>> minus_table = {
      {"0", 1},  {"1", 1},   {"11", 0},   {"2", 2},  {"21", 1},  {"3", 2},
      {"111", 0}, {"4", 3},  {"31", 2},   {"22", 2}, {"211", 0}, {"1111", 0},
      {"5", 3},  {"41", 3},  {"32", 3},   {"311", 0}, {"221", 1}};
  const auto p51 = PartitionPattern::Parse("51");
  const auto p42 = PartitionPattern::Parse("42");

  for (int n = 5; n <= n_max; ++n) {
    const Family f{FamilyKind::kC, 3, n};
    const std::string at = " @ n=" + Str(n);
    for (const auto& s : ones) {
      const auto m = decomposer.MultOfPattern(f, PartitionPattern::Parse(s),
                                              LevelKind::kFull);
      report.Add("mult(" + s + ") = 1" + at, m == 1, "got " + Str(m));
    }
    for (const auto& s : zeros) {
      const auto m = decomposer.MultOfPattern(f, PartitionPattern::Parse(s),
                                              LevelKind::kFull);
      report.Add("mult(" + s + ") = 0" + at, m == 0, "got " + Str(m));
    }
    if (n >= 6) {
      for (const auto& [s, expected] : minus_table) {
        const auto m = decomposer.MultOfPattern(f, PartitionPattern::Parse(s),
                                                LevelKind::kMinus);
        report.Add("mult(" + s + ", n-) = " + Str(expected) + at,
                   m == expected, "got " + Str(m));
      }
    }
    const auto full_sum = decomposer.MultOfPattern(f, p51, LevelKind::kFull) +
                          decomposer.MultOfPattern(f, p42, LevelKind::kFull);
    report.Add("mult(51) + mult(42) = 2" + at, full_sum == 2,
               "got " + Str(full_sum));
    if (n >= 6) {
      const auto m51 = decomposer.MultOfPattern(f, p51, LevelKind::kMinus);
      const auto m42 = decomposer.MultOfPattern(f, p42, LevelKind::kMinus);
      report.Add("mult(51, n-) + mult(42, n-) = 9" + at, m51 + m42 == 9,
                 "got " + Str(m51) + " + " + Str(m42));
      report.Add("max(mult(51, n-), mult(42, n-)) >= 5" + at,
                 std::max(m51, m42) >= 5,
                 "got " + Str(std::max(m51, m42)));
      for (const auto* p : {&p51, &p42}) {
        const auto parents = AddOneBox(p->Instantiate(3 * n - 1)).size();
        report.Add("pattern " + p->ToString() + " has four parents" + at,
                   parents == 4, "got " + Str(static_cast<std::int64_t>(parents)));
      }
    }
    const auto& level = decomposer.Decompose(f, Method::kRecursion);
    report.Add("level has a multiplicity >= 2" + at,
               level.multiplicities.MaxMultiplicity() >= 2,
               "max " + Str(level.multiplicities.MaxMultiplicity()));
  }
  return report;
}

Report VerifyMethodAgreement(Decomposer& decomposer, const Family& family,
                             int n_max) {
  Report report;
  report.suite = "oracle-agreement";
  for (int n = 1; n <= n_max; ++n) {
    const Family f = family.WithN(n);
    const std::string at = " @ " + f.ToString();
    const auto& rec = decomposer.Decompose(f, Method::kRecursion);
    const auto& orc = decomposer.Decompose(f, Method::kOracle);
    report.Add("recursion = oracle" + at, rec.multiplicities == orc.multiplicities);
    if (f.m == 2) {
      const auto& closed = decomposer.Decompose(f, Method::kClosedForm);
      report.Add("recursion = closed form" + at,
                 rec.multiplicities == closed.multiplicities);
    }
    const BigInt dim = rec.multiplicities.TotalDimension();
    report.Add("dimension = (mn)!/|H|" + at, dim == ObjectCount(f),
               dim.str() + " vs " + ObjectCount(f).str());
    report.Add("trivial multiplicity 1" + at,
               rec.multiplicities.at(Partition{f.degree()}) == 1);
    if (n > 1) {
      // Ambiguous steps already carry the oracle's adjudication (Compute
      // throws if the oracle is not among the solutions).
      std::string detail = UniquenessName(rec.uniqueness);
      if (rec.uniqueness == Uniqueness::kAmbiguous) {
        detail += ", " + std::to_string(rec.solutions.size()) +
                  " solutions, oracle adjudicated";
      }
      report.Add("recursion step resolved" + at,
                 rec.uniqueness != Uniqueness::kNotApplicable, detail);
    }
  }
  return report;
}

}  // namespace wreathrep
