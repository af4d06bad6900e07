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

// Command-line front end: decompose, table, verify, patterns.
//
// Exit codes: 0 success, 1 error, 2 ambiguous recursion (result printed).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wreathrep/decomposer.h"
#include "wreathrep/group_objects.h"
#include "wreathrep/json_io.h"
#include "wreathrep/matching_iso.h"

namespace {

using namespace wreathrep;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitAmbiguous = 2;
constexpr const char* kCacheEnv = "WREATHREP_CACHE_DIR";

struct RunConfig {
  std::string family = "C";
  int m = 3;
  std::string n_text;
  std::string method = "recursion";
  std::string format;
  std::string cache_dir;
  bool no_cache = false;
  std::int64_t enumeration_cap = kDefaultEnumerationCap;
  int solution_cap = kDefaultSolutionCap;
  int jobs = 1;
  std::string suite;
  int n_max = 0;
  std::vector<std::string> patterns;
  std::string level = "full";
};

struct Range {
  int first = 0;
  int last = 0;
};

// "5" or "2..5".
Range ParseRange(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    Range r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    if (r.first > r.last) throw std::invalid_argument("empty");
    return r;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidArgument, "bad level range '" + text + "'");
  }
}

Decomposer MakeDecomposer(const RunConfig& config) {
  Decomposer::Options options;
  options.solution_cap = config.solution_cap;
  options.enumeration_cap = config.enumeration_cap;
  if (!config.no_cache) {
    if (!config.cache_dir.empty()) {
      options.cache_dir = config.cache_dir;
    } else if (const char* env = std::getenv(kCacheEnv); env && *env) {
      options.cache_dir = env;
    }
  }
  return Decomposer(options);
}

Family MakeFamily(const RunConfig& config, int n) {
  Family f{ParseFamilyKind(config.family), config.m, n};
  f.Validate();
  return f;
}

void CheckFormat(const std::string& format,
                 std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw Error(ErrorCode::kInvalidArgument, "unsupported format '" + format + "'");
}

int CmdDecompose(const RunConfig& config) {
  const std::string format = config.format.empty() ? "json" : config.format;
  CheckFormat(format, {"json", "tsv"});
  const Range range = ParseRange(config.n_text);
  if (range.first != range.last) {
    throw Error(ErrorCode::kInvalidArgument, "decompose takes a single level");
  }
  const Family f = MakeFamily(config, range.first);
  const Method method = ParseMethod(config.method);
  // The enumeration cap also bounds the character oracle.
  if (method == Method::kOracle && ObjectCount(f) > config.enumeration_cap) {
    throw TooLargeError(ObjectCount(f), config.enumeration_cap,
                        "cosets for the oracle of " + f.ToString());
  }
  Decomposer decomposer = MakeDecomposer(config);
  const LevelResult& r = decomposer.Decompose(f, method);
  if (format == "json") {
    std::cout << ToJson(r).dump(2) << '\n';
  } else {
    std::cout << ToTsv(r.multiplicities);
  }
  return r.uniqueness == Uniqueness::kAmbiguous ? kExitAmbiguous : kExitOk;
}

std::string Bracketed(const MultiplicityVector& v) {
  std::string out;
  for (const auto& [lambda, mult] : v.entries()) {
    for (std::int64_t k = 0; k < mult; ++k) {
      if (!out.empty()) out += ", ";
      out += "[" + lambda.ToString(',') + "]";
    }
  }
  return out;
}

int CmdTable(const RunConfig& config) {
  const std::string format = config.format.empty() ? "text" : config.format;
  CheckFormat(format, {"json", "text"});
  const Range range = ParseRange(config.n_text);
  const Method method = ParseMethod(config.method);
  Decomposer decomposer = MakeDecomposer(config);
  Json rows = Json::array();
  std::optional<int> first_multiple;
  bool ambiguous = false;
  bool disagreement = false;
  if (format == "text") {
    std::cout << "n\tm\tfamily\tcomponents\tmax_mult\toracle\tdecomposition\n";
  }
  for (int n = range.first; n <= range.last; ++n) {
    const Family f = MakeFamily(config, n);
    const LevelResult& r = decomposer.Decompose(f, method);
    ambiguous |= r.uniqueness == Uniqueness::kAmbiguous;
    const auto max_mult = r.multiplicities.MaxMultiplicity();
    if (max_mult >= 2 && !first_multiple) first_multiple = n;

    std::string oracle = "-";
    if (method != Method::kOracle &&
        ObjectCount(f) <= config.enumeration_cap) {
      const bool agree =
          decomposer.Decompose(f, Method::kOracle).multiplicities ==
          r.multiplicities;
      disagreement |= !agree;
      oracle = agree ? "agree" : "DISAGREE";
    }
    if (format == "text") {
      std::cout << n << '\t' << f.m << '\t' << FamilyKindName(f.kind) << '\t'
                << r.multiplicities.TotalMultiplicity() << '\t' << max_mult
                << '\t' << oracle << '\t' << Bracketed(r.multiplicities)
                << '\n';
    } else {
      Json row = ToJson(r);
      row["oracle"] = oracle;
      row["max_mult"] = max_mult;
      rows.push_back(row);
    }
  }
  if (format == "text") {
    std::cout << "first level with multiplicities: "
              << (first_multiple ? std::to_string(*first_multiple) : "none")
              << '\n';
  } else {
    Json out{{"rows", rows}};
    out["first_level_with_multiplicities"] =
        first_multiple ? Json(*first_multiple) : Json(nullptr);
    std::cout << out.dump(2) << '\n';
  }
  if (disagreement) return kExitError;
  return ambiguous ? kExitAmbiguous : kExitOk;
}

int CmdVerify(const RunConfig& config) {
  Report report;
  if (config.suite == "section4") {
    Decomposer decomposer = MakeDecomposer(config);
    report = VerifySection4(decomposer, config.n_max > 0 ? config.n_max : 7);
  } else if (config.suite == "iso") {
    const Range range = ParseRange(config.n_text.empty() ? "2..4" : config.n_text);
    report.suite = "iso";
    for (int n = range.first; n <= range.last; ++n) report.Append(VerifyIso(n));
  } else if (config.suite == "oracle-agreement") {
    const int n_max = config.n_max > 0 ? config.n_max : 3;
    const Family f = MakeFamily(config, 1);
    Decomposer decomposer = MakeDecomposer(config);
    report = VerifyDualOracle(f, n_max, config.enumeration_cap, config.jobs);
    report.suite = "oracle-agreement";
    report.Append(VerifyMethodAgreement(decomposer, f, n_max));
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown suite '" + config.suite +
                    "' (section4, iso, oracle-agreement)");
  }
  std::cout << ToJson(report).dump(2) << '\n';
  return report.all_passed() ? kExitOk : kExitError;
}

int CmdPatterns(const RunConfig& config) {
  const std::string format = config.format.empty() ? "tsv" : config.format;
  CheckFormat(format, {"json", "tsv"});
  const Range range = ParseRange(config.n_text);
  std::vector<LevelKind> kinds;
  if (config.level == "full" || config.level == "both") {
    kinds.push_back(LevelKind::kFull);
  }
  if (config.level == "minus" || config.level == "both") {
    kinds.push_back(LevelKind::kMinus);
  }
  if (kinds.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "level must be full, minus or both");
  }
  std::vector<PartitionPattern> patterns;
  for (const auto& text : config.patterns) {
    patterns.push_back(PartitionPattern::Parse(text));
  }
  Decomposer decomposer = MakeDecomposer(config);
  Json rows = Json::array();
  if (format == "tsv") std::cout << "n\tlevel\tpattern\tmult\n";
  for (int n = range.first; n <= range.last; ++n) {
    const Family f = MakeFamily(config, n);
    for (const LevelKind kind : kinds) {
      const char* level = kind == LevelKind::kFull ? "n" : "n-";
      for (const auto& p : patterns) {
        const auto mult = decomposer.MultOfPattern(f, p, kind);
        if (format == "tsv") {
          std::cout << n << '\t' << level << '\t' << p.ToString() << '\t'
                    << mult << '\n';
        } else {
          rows.push_back(Json{{"n", n},
                              {"level", level},
                              {"pattern", p.ToString()},
                              {"mult", mult}});
        }
      }
    }
  }
  if (format == "json") std::cout << rows.dump(2) << '\n';
  return kExitOk;
}

void AddCommon(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--cache-dir", config.cache_dir,
                  std::string("level cache directory (default $") + kCacheEnv +
                      ")");
  cmd->add_flag("--no-cache", config.no_cache, "ignore the level cache");
  cmd->add_option("--enum-cap", config.enumeration_cap,
                  "largest object count the enumeration oracle may list")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--solution-cap", config.solution_cap,
                  "largest number of solutions the level solver may report")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", config.jobs, "worker threads")
      ->check(CLI::Range(1, 64));
}

void AddFamily(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--family", config.family, "C (block matchings) or D (m-cycles)")
      ->check(CLI::IsMember({"C", "D", "B", "c", "d", "b"}));
  cmd->add_option("--m", config.m, "block size")->check(CLI::Range(2, 64));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decompose permutation modules of S_mn induced from wreath "
               "products into Specht modules"};
  app.require_subcommand(1);
  RunConfig config;

  auto* decompose = app.add_subcommand("decompose", "decompose one level");
  AddFamily(decompose, config);
  decompose->add_option("--n", config.n_text, "level")->required();
  decompose->add_option("--method", config.method)
      ->check(CLI::IsMember({"recursion", "oracle", "closed-form", "closed_form"}));
  decompose->add_option("--format", config.format, "json (default) or tsv");
  AddCommon(decompose, config);

  auto* table = app.add_subcommand("table", "decompose a range of levels");
  AddFamily(table, config);
  table->add_option("--n", config.n_text, "level range, e.g. 2..5")->required();
  table->add_option("--method", config.method)
      ->check(CLI::IsMember({"recursion", "oracle", "closed-form", "closed_form"}));
  table->add_option("--format", config.format, "text (default) or json");
  AddCommon(table, config);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", config.suite, "section4, iso or oracle-agreement")
      ->required();
  AddFamily(verify, config);
  verify->add_option("--n", config.n_text, "levels for the iso suite");
  verify->add_option("--n-max", config.n_max, "largest level");
  AddCommon(verify, config);

  auto* patterns = app.add_subcommand("patterns", "pattern multiplicity sweep");
  AddFamily(patterns, config);
  patterns->add_option("--n", config.n_text, "level range")->required();
  patterns->add_option("--patterns", config.patterns,
                       "patterns such as 0 2 42 (digits of the tail)")
      ->required();
  patterns->add_option("--level", config.level, "full, minus or both");
  patterns->add_option("--format", config.format, "tsv (default) or json");
  AddCommon(patterns, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*decompose) return CmdDecompose(config);
    if (*table) return CmdTable(config);
    if (*verify) return CmdVerify(config);
    if (*patterns) return CmdPatterns(config);
  } catch (const std::exception& e) {
    std::cerr << "wreathrep: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
