// Copyright 2026 The svq Authors
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
#include <cstdint>

namespace svq {

/// Library-wide defaults. Every operation that needs a tolerance takes it as
/// an explicit argument defaulting to `kDefaults.tol`; scenario runs build
/// their own Config from these values plus any overrides.
struct Config {
  double tol = 1e-9;
  std::size_t max_gap_atoms = 20;
  double p_one = 0.5;
  std::uint64_t seed = 0;
};

inline constexpr Config kDefaults{};

}  // namespace svq
