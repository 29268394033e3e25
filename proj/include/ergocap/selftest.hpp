// Copyright 2026 The ergocap Authors.
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

// Built-in invariant suite behind `ergocap selftest`.

#ifndef ERGOCAP_SELFTEST_HPP_
#define ERGOCAP_SELFTEST_HPP_

#include <cstdint>
#include <ostream>

namespace ergocap::selftest {

struct Options {
  long mc_samples = 100'000;
  std::uint64_t seed = 42;
};

/// Runs every check, printing one PASS/FAIL line each. Returns true if all
/// passed.
bool run_all(std::ostream& out, const Options& opts = {});

}  // namespace ergocap::selftest

#endif  // ERGOCAP_SELFTEST_HPP_
