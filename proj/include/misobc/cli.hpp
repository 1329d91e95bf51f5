// SPDX-License-Identifier: Apache-2.0
//
// misobc - two-user MISO broadcast channel DoF toolkit
// Copyright (C) 2026 The misobc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MISOBC_CLI_HPP
#define MISOBC_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace misobc {

enum class OutputFormat : std::uint8_t { json, csv, gnuplot };

struct RunConfig {
    std::string command;
    std::optional<std::string> scenario;
    std::optional<double> beta;
    std::optional<double> alpha;
    std::optional<std::string> scheme;
    std::vector<double> snr_db{40.0, 50.0, 60.0};
    std::size_t trials = 20000;
    std::uint64_t seed = 0;
    double step = 0.01;
    double rho = 0.8;
    std::optional<std::string> out;
    std::optional<std::string> format;
    unsigned workers = 1;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;
inline constexpr int bad_args = 2;
inline constexpr int io_error = 3;
} // namespace exit_code

int cmd_regions(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_simulate(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_sweep(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err);

/// Parses `args` (without the program name) and dispatches to a command.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace misobc

#endif
