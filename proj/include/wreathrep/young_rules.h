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

#ifndef WREATHREP_YOUNG_RULES_H_
#define WREATHREP_YOUNG_RULES_H_

#include <vector>

#include "wreathrep/partition.h"

namespace wreathrep {

// Set-valued results are returned in descending lex order.

// Branching rule, restriction direction. Throws kEmptyPartition on ().
std::vector<Partition> RemoveOneBox(const Partition& lambda);

// Branching rule, induction direction.
std::vector<Partition> AddOneBox(const Partition& mu);

// Pieri rule: every lambda containing mu with lambda/mu a horizontal k-strip.
std::vector<Partition> AddHorizontalStrip(const Partition& mu, int k);

// Induction along k single boxes; the coefficient of lambda is the number of
// standard fillings of lambda/mu.
MultiplicityVector IteratedAdd(const Partition& mu, int k);

// Linear extensions to whole decompositions.
MultiplicityVector RestrictVector(const MultiplicityVector& v);
MultiplicityVector PieriVector(const MultiplicityVector& v, int k);
MultiplicityVector IteratedVector(const MultiplicityVector& v, int k);

}  // namespace wreathrep

#endif  // WREATHREP_YOUNG_RULES_H_
