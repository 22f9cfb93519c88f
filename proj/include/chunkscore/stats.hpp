// Copyright 2026 chunkscore contributors
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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chunkscore/conll.hpp"
#include "chunkscore/labels.hpp"
#include "chunkscore/repair.hpp"

namespace chunkscore {

/// Mean and sample standard deviation of per-run F1 scores.
struct RunSummary {
  std::size_t n = 0;
  double mean = 0.0;
  std::optional<double> std_dev;  ///< n-1 denominator; absent when n < 2
  std::vector<double> values;
};

/// Throws ContractError on an empty input.
RunSummary summarize_runs(std::span<const double> f1_values);

struct RankSumResult {
  double rank_sum_statistic = 0.0;  ///< W: sum of group-A ranks
  double z = 0.0;                   ///< standardized, no continuity correction
  double p_value = 1.0;             ///< two-sided, in (0, 1]
  bool degenerate = false;          ///< all pooled values identical
};

/// Wilcoxon rank-sum test. Pools both groups, assigns mid-ranks to ties,
/// and standardizes W = sum of group-A ranks against
///   mu = n1 (N + 1) / 2
///   sigma^2 = n1 n2 (N + 1) / 12  -  n1 n2 sum(t^3 - t) / (12 N (N - 1))
/// with no continuity correction; p = 2 (1 - Phi(|z|)). When sigma is 0
/// (all values identical) the result is degenerate with p = 1.
///
/// Throws ContractError when either group is empty.
RankSumResult rank_sum_test(std::span<const double> group_a, std::span<const double> group_b);

/// One row of a repair-method (or system) comparison: per-group summaries,
/// the absolute difference in mean F1, and the rank-sum test over the two
/// F1 lists.
struct ComparisonReport {
  RunSummary group_a;
  RunSummary group_b;
  double delta = 0.0;  ///< |mean_a - mean_b|
  RankSumResult rank_sum;
};

/// Scores every run of each group against the reference with its group's
/// repair method (F1 as percentages) and compares the two distributions.
ComparisonReport compare_groups(const Corpus& reference, const EncodingScheme& scheme,
                                RepairMethod method_a, std::span<const Corpus> group_a,
                                RepairMethod method_b, std::span<const Corpus> group_b);

}  // namespace chunkscore
