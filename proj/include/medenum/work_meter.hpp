// Copyright 2026 The medenum Authors.
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

#ifndef MEDENUM_WORK_METER_HPP_
#define MEDENUM_WORK_METER_HPP_

#include <cstdint>

namespace medenum {

/// Machine-independent work counter. One step is one minimality or
/// private-neighbor evaluation of a whole edge set against a prefix of the
/// hyperedge sequence.
struct WorkMeter {
  std::uint64_t steps = 0;

  void tick() { ++steps; }
};

inline thread_local WorkMeter work_meter;

}  // namespace medenum

#endif  // MEDENUM_WORK_METER_HPP_
