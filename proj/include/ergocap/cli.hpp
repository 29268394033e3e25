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

// Command-line front end: argument parsing, SNR and unit conventions,
// method dispatch, sweeps, and CSV/JSON output.

#ifndef ERGOCAP_CLI_HPP_
#define ERGOCAP_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ergocap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// 10^(db/10).
double snr_db_to_linear(double db);

/// One output record. Columns that do not apply to a method are empty.
struct OutputRow {
  std::string method;
  std::optional<int> m;
  int m_t = 0;
  int m_r = 0;
  double snr_db = 0.0;
  std::string scaling;
  std::string units;
  double capacity = 0.0;
  double err = 0.0;
  std::optional<long> samples;
  std::optional<std::uint64_t> seed;
  std::optional<int> n_used;
};

/// "method,m,mt,mr,snr_db,scaling,units,capacity,err,samples,seed,N_used"
std::string csv_header();

/// Header plus one LF-terminated line per row.
std::string to_csv(const std::vector<OutputRow>& rows);

/// JSON array of row objects with the CSV column names; empty columns are
/// null.
std::string to_json(const std::vector<OutputRow>& rows);

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out` (or the --out file), diagnostics to `err`. Returns kExitOk,
/// kExitUsage for bad flags or parameters, kExitNumerical for convergence or
/// factorization failures and for a failing selftest.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ergocap::cli

#endif  // ERGOCAP_CLI_HPP_
